//! Exact rationals as `"num/den"` strings (integers as `"n"`).

use std::fmt::Display;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};

pub fn to_string<R: Display>(r: &R) -> String {
    r.to_string()
}

pub fn parse<R: FromStr>(s: &str) -> Option<R> {
    s.trim().parse().ok()
}

pub fn serialize<R: Display, S: Serializer>(r: &R, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_string(r))
}

pub fn deserialize<'de, R: FromStr, D: Deserializer<'de>>(de: D) -> Result<R, D::Error> {
    let s = String::deserialize(de)?;
    parse(&s).ok_or_else(|| D::Error::custom(format!("bad fraction `{s}`")))
}

pub mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<R: Display, S: Serializer>(v: &[R], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, R: FromStr, D: Deserializer<'de>>(de: D) -> Result<Vec<R>, D::Error> {
        Vec::<String>::deserialize(de)?
            .iter()
            .map(|s| parse(s).ok_or_else(|| D::Error::custom(format!("bad fraction `{s}`"))))
            .collect()
    }
}
