//! Exact numbers in JSON: integers are bare when they fit in `i64`,
//! rationals are `"p/q"` strings.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use symloc::Rational;

/// Integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub fn ints(values: &[BigInt]) -> Vec<JsonInt> {
    values.iter().cloned().map(JsonInt).collect()
}

/// Parses `p` or `p/q` in lowest terms with `q > 1`. Signs other than a
/// leading `-` on `p`, leading zeros and `-0` are rejected, so every
/// rational has exactly one spelling.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = || format!("{text:?} is not a canonical rational (expected p or p/q in lowest terms)");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if !canonical_digits(digits) || num == "-0" {
        return Err(bad());
    }
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let Some(den) = den else {
        return Ok(Rational::from_integer(p));
    };
    if !canonical_digits(den) {
        return Err(bad());
    }
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q <= BigInt::from(1) {
        return Err(bad());
    }
    let r = Rational::new(p.clone(), q.clone());
    if *r.numer() != p || *r.denom() != q {
        return Err(bad());
    }
    Ok(r)
}

fn canonical_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

/// Exact rational as it appears in documents: bare integer when integral
/// and small, `"p/q"` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            JsonInt(self.0.to_integer()).serialize(s)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Self::Value, E> {
                Err(E::custom(format!("{v} is not exact; write rationals as \"p/q\"")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}
