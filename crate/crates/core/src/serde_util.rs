//! Serialization helpers for exact integers: numbers when they fit in
//! 64 bits, decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

pub fn big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => v.serialize(s),
        None => x.to_string().serialize(s),
    }
}

pub fn big_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<serde_json::Value> = v
        .iter()
        .map(|x| x.to_i64().map_or_else(|| serde_json::Value::String(x.to_string()), serde_json::Value::from))
        .collect();
    vals.serialize(s)
}

pub fn big_vecs<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Vec<serde_json::Value>> = v
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().map_or_else(|| serde_json::Value::String(x.to_string()), serde_json::Value::from)).collect())
        .collect();
    vals.serialize(s)
}
