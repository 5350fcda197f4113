//! Serde helpers: rationals are written as reduced `"p/q"` strings, or `"n"`
//! for integers.

use serde::ser::SerializeSeq;
use serde::Serializer;

use crate::game::{format_rational, Player, Rational};

pub fn rational<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(value))
}

pub fn rationals<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&format_rational(v))?;
    }
    seq.end()
}

pub fn player<S: Serializer>(p: &Player, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u8(p.number())
}
