//! Serialization helpers shared by the JSON reports.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;

/// Writes a JSON number when the value fits in `i64`, a decimal string otherwise.
pub fn bigint_as_i64_or_string<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn bigints_as_i64_or_string<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub fn biguint_as_u64_or_string<S: Serializer>(v: &num_bigint::BigUint, s: S) -> Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}
