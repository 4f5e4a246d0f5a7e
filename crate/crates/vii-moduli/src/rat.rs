//! Exact rational scalars and their textual form.
//!
//! Every scalar in the calculator is a reduced `Ratio<i64>`: degrees,
//! log-moduli, and angles measured in full turns. The textual form is `p/q`,
//! collapsed to `p` for integers, which is exactly what `Ratio` prints and
//! parses, so round trips are bit-exact.

use serde::{Deserialize, Deserializer, Serializer};

use crate::error::Error;

pub type Rat = num::rational::Rational64;

/// Shorthand constructor for tables and tests. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(numer, denom)
}

/// Reduce into the half-open fundamental interval `[0, 1)`.
pub fn frac_mod1(x: Rat) -> Rat {
    x - x.floor()
}

pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    text.trim()
        .parse::<Rat>()
        .map_err(|e| Error::Parse(format!("bad rational `{text}`: {e}")))
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(de)?;
        parse_rat(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: optional rationals, present as `"p/q"` strings.
pub mod opt_rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Option<Rat>, ser: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => ser.collect_str(v),
            None => ser.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rat>, D::Error> {
        let text = Option::<String>::deserialize(de)?;
        text.map(|t| parse_rat(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Serde adapter: counters as decimal strings, matching the rational fields.
pub mod u64_string {
    use super::*;

    pub fn serialize<S: Serializer>(value: &u64, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<u64, D::Error> {
        let text = String::deserialize(de)?;
        text.parse::<u64>().map_err(serde::de::Error::custom)
    }
}
