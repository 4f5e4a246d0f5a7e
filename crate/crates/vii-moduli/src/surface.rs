//! The three minimal class VII surface families with one rational curve, and
//! the degree map attached to a Gauduchon metric.
//!
//! A `SurfaceModel` is the exact data the classification consumes: the family
//! kind, the volumes of the curves, the degree of the canonical bundle, and
//! the angular position of the cycle class in Pic0. Derived relations pin the
//! rest down:
//!
//! * half Inoue: `K = F ⊗ O(-C)`, so `deg K = -vol_C` and the cycle class
//!   sits at the torsion angle 1/2 with canonical power -1;
//! * Enoki: `O(C)` is topologically trivial with positive volume, and
//!   `deg K` is a free metric parameter attaining every rational value;
//! * parabolic Inoue: `K = O(-C-E)`, so `deg K = -vol_C - vol_E`.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::Error;
use crate::picard::LineBundle;
use crate::rat::{frac_mod1, opt_rat_string, rat, rat_string, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    HalfInoue,
    Enoki,
    ParabolicInoue,
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SurfaceKind::HalfInoue => "half Inoue",
            SurfaceKind::Enoki => "Enoki",
            SurfaceKind::ParabolicInoue => "parabolic Inoue",
        })
    }
}

/// The bundles the classification keeps referring to by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedBundle {
    /// The trivial bundle.
    O,
    /// The 2-torsion twist.
    F,
    /// The canonical bundle.
    K,
    /// The bundle of the cycle, O(C).
    OC,
    /// The bundle of the elliptic curve, O(E); parabolic Inoue only.
    OE,
}

/// An effective divisor `rC + sE` supported on the curves of the surface;
/// `s` is always 0 outside the parabolic family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EffectiveDivisor {
    pub r: u64,
    pub s: u64,
}

impl fmt::Display for EffectiveDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.r {
            0 => {}
            1 => parts.push("C".to_string()),
            r => parts.push(format!("{r}C")),
        }
        match self.s {
            0 => {}
            1 => parts.push("E".to_string()),
            s => parts.push(format!("{s}E")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    kind: SurfaceKind,
    vol_c: Rat,
    vol_e: Option<Rat>,
    deg_k: Rat,
    theta_c: Rat,
}

impl SurfaceModel {
    /// Build a surface from the raw parameters, checking every defining
    /// relation. `deg_k` is mandatory on Enoki surfaces and derived (hence
    /// optional, but checked when supplied) on the other two; `theta_c`
    /// defaults to 0 on Enoki and parabolic surfaces and is pinned to the
    /// torsion angle 1/2 on half Inoue surfaces.
    pub fn new(
        kind: SurfaceKind,
        vol_c: Rat,
        vol_e: Option<Rat>,
        deg_k: Option<Rat>,
        theta_c: Option<Rat>,
    ) -> Result<Self, Error> {
        if vol_c <= Rat::zero() {
            return Err(Error::ConstraintViolation(format!(
                "vol_C must be positive, got {vol_c}"
            )));
        }
        if kind != SurfaceKind::ParabolicInoue {
            if let Some(ve) = vol_e {
                return Err(Error::ConstraintViolation(format!(
                    "vol_E = {ve} supplied, but only a parabolic Inoue surface carries the curve E"
                )));
            }
        }

        let theta_c = match (kind, theta_c) {
            (SurfaceKind::HalfInoue, None) => rat(1, 2),
            (SurfaceKind::HalfInoue, Some(t)) if frac_mod1(t) == rat(1, 2) => rat(1, 2),
            (SurfaceKind::HalfInoue, Some(t)) => {
                return Err(Error::ConstraintViolation(format!(
                    "theta_C on a half Inoue surface is the torsion angle 1/2, got {t}"
                )));
            }
            (_, t) => frac_mod1(t.unwrap_or_else(Rat::zero)),
        };

        let derived_deg_k = match kind {
            SurfaceKind::HalfInoue => Some(-vol_c),
            SurfaceKind::Enoki => None,
            SurfaceKind::ParabolicInoue => {
                let ve = vol_e.ok_or_else(|| {
                    Error::ConstraintViolation("a parabolic Inoue surface needs vol_E".to_string())
                })?;
                if ve <= Rat::zero() {
                    return Err(Error::ConstraintViolation(format!(
                        "vol_E must be positive, got {ve}"
                    )));
                }
                Some(-vol_c - ve)
            }
        };
        let deg_k = match (derived_deg_k, deg_k) {
            (Some(d), None) => d,
            (Some(d), Some(given)) if given == d => d,
            (Some(d), Some(given)) => {
                return Err(Error::ConstraintViolation(format!(
                    "deg_K = {given} contradicts the derived value {d} for a {kind} surface"
                )));
            }
            (None, Some(given)) => given,
            (None, None) => {
                return Err(Error::ConstraintViolation(
                    "an Enoki surface needs an explicit deg_K (the metric is a free parameter)"
                        .to_string(),
                ));
            }
        };

        Ok(SurfaceModel {
            kind,
            vol_c,
            vol_e,
            deg_k,
            theta_c,
        })
    }

    pub fn half_inoue(vol_c: Rat) -> Result<Self, Error> {
        SurfaceModel::new(SurfaceKind::HalfInoue, vol_c, None, None, None)
    }

    pub fn enoki(vol_c: Rat, deg_k: Rat, theta_c: Rat) -> Result<Self, Error> {
        SurfaceModel::new(SurfaceKind::Enoki, vol_c, None, Some(deg_k), Some(theta_c))
    }

    pub fn parabolic(vol_c: Rat, vol_e: Rat, theta_c: Rat) -> Result<Self, Error> {
        SurfaceModel::new(
            SurfaceKind::ParabolicInoue,
            vol_c,
            Some(vol_e),
            None,
            Some(theta_c),
        )
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn vol_c(&self) -> Rat {
        self.vol_c
    }

    pub fn vol_e(&self) -> Option<Rat> {
        self.vol_e
    }

    pub fn deg_k(&self) -> Rat {
        self.deg_k
    }

    /// Angle of the cycle class in Pic0: an input on Enoki and parabolic
    /// surfaces, the torsion value 1/2 on half Inoue surfaces.
    pub fn theta_c(&self) -> Rat {
        self.theta_c
    }

    /// The stability threshold: half the degree of the canonical bundle.
    pub fn rho(&self) -> Rat {
        self.deg_k / 2
    }

    /// The degree map of the metric. A homomorphism Pic(S) -> Q restricting
    /// to logmod on Pic0 and sending K to deg_K.
    pub fn degree(&self, a: &LineBundle) -> Rat {
        self.deg_k * a.n() + a.logmod()
    }

    pub fn named_bundle(&self, name: NamedBundle) -> Result<LineBundle, Error> {
        match name {
            NamedBundle::O => Ok(LineBundle::o()),
            NamedBundle::F => Ok(LineBundle::f()),
            NamedBundle::K => Ok(LineBundle::k()),
            NamedBundle::OC => Ok(self.o_c()),
            NamedBundle::OE => self
                .o_e()
                .ok_or_else(|| Error::UnsupportedName("O_E".to_string())),
        }
    }

    /// O(C) in coordinates. On a half Inoue surface `O(C) = F ⊗ K^{-1}`; on
    /// the other families the class is topologically trivial.
    pub(crate) fn o_c(&self) -> LineBundle {
        match self.kind {
            SurfaceKind::HalfInoue => LineBundle::new(-1, rat(0, 1), self.theta_c),
            _ => LineBundle::new(0, self.vol_c, self.theta_c),
        }
    }

    /// O(E) in coordinates, from `K = O(-C-E)`; parabolic Inoue only.
    pub(crate) fn o_e(&self) -> Option<LineBundle> {
        match self.kind {
            SurfaceKind::ParabolicInoue => Some(LineBundle::k().dual().tensor(&self.o_c().dual())),
            _ => None,
        }
    }

    /// The unique effective divisor in the class of `a`, if any. Divisors are
    /// supported on the curves, so this solves `a = O(rC + sE)` exactly; a
    /// class without a divisor is a `None`, not an error.
    pub fn effective_divisor(&self, a: &LineBundle) -> Option<EffectiveDivisor> {
        match self.kind {
            SurfaceKind::HalfInoue => {
                // O(rC) = (-r, (0, r/2 mod 1)).
                let r = -a.n();
                if r < 0 || !a.logmod().is_zero() {
                    return None;
                }
                (a.arg() == frac_mod1(self.theta_c * r))
                    .then_some(EffectiveDivisor { r: r as u64, s: 0 })
            }
            SurfaceKind::Enoki => {
                // O(rC) = (0, (r·vol_C, r·theta_C mod 1)).
                if a.n() != 0 {
                    return None;
                }
                let t = a.logmod() / self.vol_c;
                if !t.is_integer() || t < Rat::zero() {
                    return None;
                }
                (a.arg() == frac_mod1(self.theta_c * t)).then_some(EffectiveDivisor {
                    r: t.to_integer() as u64,
                    s: 0,
                })
            }
            SurfaceKind::ParabolicInoue => {
                // O(rC + sE) = (-s, ((r-s)·vol_C, (r-s)·theta_C mod 1)).
                let s = -a.n();
                if s < 0 {
                    return None;
                }
                let d = a.logmod() / self.vol_c;
                if !d.is_integer() {
                    return None;
                }
                let r = d.to_integer() + s;
                if r < 0 {
                    return None;
                }
                (a.arg() == frac_mod1(self.theta_c * d)).then_some(EffectiveDivisor {
                    r: r as u64,
                    s: s as u64,
                })
            }
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (vol_C = {}", self.kind, self.vol_c)?;
        if let Some(ve) = self.vol_e {
            write!(f, ", vol_E = {ve}")?;
        }
        write!(f, ", deg_K = {}, theta_C = {})", self.deg_k, self.theta_c)
    }
}

/// Flat serialized form; deserialization re-runs the constructor checks so a
/// hand-edited document cannot smuggle in an inconsistent surface.
#[derive(Serialize, Deserialize)]
struct SurfaceRepr {
    kind: SurfaceKind,
    #[serde(with = "rat_string")]
    vol_c: Rat,
    #[serde(
        with = "opt_rat_string",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    vol_e: Option<Rat>,
    #[serde(with = "rat_string")]
    deg_k: Rat,
    #[serde(with = "rat_string")]
    theta_c: Rat,
}

impl Serialize for SurfaceModel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        SurfaceRepr {
            kind: self.kind,
            vol_c: self.vol_c,
            vol_e: self.vol_e,
            deg_k: self.deg_k,
            theta_c: self.theta_c,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SurfaceModel {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = SurfaceRepr::deserialize(de)?;
        SurfaceModel::new(
            repr.kind,
            repr.vol_c,
            repr.vol_e,
            Some(repr.deg_k),
            Some(repr.theta_c),
        )
        .map_err(serde::de::Error::custom)
    }
}
