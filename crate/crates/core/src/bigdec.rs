//! Serde adapter for big integers: a JSON number when it fits in `u64`,
//! otherwise a decimal string. Both forms are accepted on input.

use num_bigint::BigUint;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(small) => s.serialize_u64(small),
        Err(_) => s.collect_str(v),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
    struct Dec;
    impl Visitor<'_> for Dec {
        type Value = BigUint;
        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a non-negative integer or decimal string")
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigUint, E> {
            Ok(BigUint::from(v))
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigUint, E> {
            v.parse().map_err(E::custom)
        }
    }
    d.deserialize_any(Dec)
}
