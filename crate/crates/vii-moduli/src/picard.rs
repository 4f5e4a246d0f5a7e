//! The Picard group of a minimal class VII surface with second Betti number
//! one, in exact coordinates.
//!
//! Pic(S) splits as Z x Pic0(S) with Pic0(S) isomorphic to C*. A line bundle
//! is stored as K^n tensor t where K is the canonical bundle and t lies in
//! Pic0, held in log-polar coordinates: `logmod` is the logarithm of the
//! modulus (any rational) and `arg` the angle as a fraction of a full turn,
//! kept in `[0, 1)` after every operation. Isomorphism classes correspond
//! one-to-one to coordinate triples, so derived equality is bundle
//! isomorphism. The rational sub-lattice is closed under tensor, dual, and
//! the square roots taken below, which is all the classification needs.

use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::rat::{frac_mod1, parse_rat, rat, Rat};

/// A point of Pic0(S) = C* in log-polar coordinates, `arg` in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pic0Element {
    logmod: Rat,
    arg: Rat,
}

impl Pic0Element {
    pub fn new(logmod: Rat, arg: Rat) -> Self {
        Pic0Element {
            logmod,
            arg: frac_mod1(arg),
        }
    }

    pub fn logmod(&self) -> Rat {
        self.logmod
    }

    pub fn arg(&self) -> Rat {
        self.arg
    }

    pub fn compose(&self, other: &Self) -> Self {
        Pic0Element::new(self.logmod + other.logmod, self.arg + other.arg)
    }

    pub fn inverse(&self) -> Self {
        Pic0Element::new(-self.logmod, -self.arg)
    }

    pub fn is_trivial(&self) -> bool {
        self.logmod.is_zero() && self.arg.is_zero()
    }
}

/// A line bundle `K^n ⊗ t`, `t` in Pic0. Equality is isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineBundle {
    n: i64,
    tw: Pic0Element,
}

impl LineBundle {
    pub fn new(n: i64, logmod: Rat, arg: Rat) -> Self {
        LineBundle {
            n,
            tw: Pic0Element::new(logmod, arg),
        }
    }

    /// The trivial bundle O.
    pub fn o() -> Self {
        LineBundle::new(0, rat(0, 1), rat(0, 1))
    }

    /// The 2-torsion twist F, the nontrivial square root of O.
    pub fn f() -> Self {
        LineBundle::new(0, rat(0, 1), rat(1, 2))
    }

    /// The canonical bundle K.
    pub fn k() -> Self {
        LineBundle::new(1, rat(0, 1), rat(0, 1))
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn logmod(&self) -> Rat {
        self.tw.logmod
    }

    pub fn arg(&self) -> Rat {
        self.tw.arg
    }

    pub fn twist(&self) -> Pic0Element {
        self.tw
    }

    /// Whether the bundle is topologically trivial (lies in Pic0).
    pub fn is_pic0(&self) -> bool {
        self.n == 0
    }

    pub fn tensor(&self, other: &Self) -> Self {
        LineBundle {
            n: self.n + other.n,
            tw: self.tw.compose(&other.tw),
        }
    }

    pub fn dual(&self) -> Self {
        LineBundle {
            n: -self.n,
            tw: self.tw.inverse(),
        }
    }

    /// The e-th tensor power, negative exponents through the dual.
    pub fn pow(&self, e: i64) -> Self {
        LineBundle::new(self.n * e, self.logmod() * e, self.arg() * e)
    }

    /// Both square roots, the principal one first and its F-twist second.
    /// Fails unless the canonical power is even; Pic0 being divisible, the
    /// power is the only obstruction.
    pub fn square_roots(&self) -> Result<(Self, Self), Error> {
        if self.n % 2 != 0 {
            return Err(Error::OddChernClass(self.n));
        }
        let principal = LineBundle::new(self.n / 2, self.logmod() / 2, self.arg() / 2);
        Ok((principal, principal.tensor(&LineBundle::f())))
    }
}

/// Textual form `n,logmod,arg`, rationals as `p/q`. This is the CLI and JSON
/// representation; `FromStr` inverts it exactly.
impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.logmod(), self.arg())
    }
}

impl FromStr for LineBundle {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = text.split(',').collect();
        let [n, logmod, arg] = parts.as_slice() else {
            return Err(Error::Parse(format!(
                "bad line bundle `{text}`: expected `n,logmod,arg`"
            )));
        };
        let n = n
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad canonical power `{n}`: {e}")))?;
        Ok(LineBundle::new(n, parse_rat(logmod)?, parse_rat(arg)?))
    }
}

impl Serialize for LineBundle {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LineBundle {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(de::Error::custom)
    }
}
