//! String encodings for numbers inside JSON documents.

use std::fmt;

use auglab_core::rational::{self, Rational};
use auglab_core::Quantity;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An `f64` written as its shortest round-trip decimal string. Reading
/// also accepts JSON numbers and `num/den` strings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dec(pub f64);

impl Dec {
    pub fn parse(text: &str) -> Result<f64, String> {
        let s = text.trim();
        if s.contains('/') {
            return rational::parse(s).map(|q| rational::to_f64(&q)).map_err(|e| e.to_string());
        }
        s.parse::<f64>().map_err(|_| format!("`{s}` is not a decimal number"))
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Serialize for Dec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Dec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Dec;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a decimal string or number")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Dec, E> {
                Dec::parse(v).map(Dec).map_err(E::custom)
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Dec, E> {
                Ok(Dec(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Dec, E> {
                Ok(Dec(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Dec, E> {
                Ok(Dec(v as f64))
            }
        }
        d.deserialize_any(V)
    }
}

/// An exact rational written as `num/den`. Reading also accepts decimal
/// strings, parsed exactly, and JSON integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RationalText;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a `num/den` or decimal string")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<RationalText, E> {
                rational::parse(v).map(RationalText).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<RationalText, E> {
                Ok(RationalText(rational::int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<RationalText, E> {
                i64::try_from(v).map(|v| RationalText(rational::int(v))).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// A [`Quantity`]: exact values as `num/den`, real values as decimals.
/// The slash tells the two apart when reading.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantityText(pub Quantity);

impl Serialize for QuantityText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Quantity::Exact(q) => s.serialize_str(&rational::format(q)),
            Quantity::Real(x) => s.collect_str(&Dec(*x)),
        }
    }
}

impl<'de> Deserialize<'de> for QuantityText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text.contains('/') {
            rational::parse(&text).map(|q| QuantityText(Quantity::Exact(q))).map_err(de::Error::custom)
        } else {
            Dec::parse(&text).map(|x| QuantityText(Quantity::Real(x))).map_err(de::Error::custom)
        }
    }
}
