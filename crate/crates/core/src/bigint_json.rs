//! JSON encoding of big integers: a plain number when it fits in `i64`,
//! otherwise a decimal string. Both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::Text(t) => t.trim().parse().map(JsonInt).map_err(de::Error::custom),
        }
    }
}

pub fn wrap_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<JsonInt>> {
    m.iter().map(|r| r.iter().cloned().map(JsonInt).collect()).collect()
}

pub fn unwrap_matrix(m: Vec<Vec<JsonInt>>) -> Vec<Vec<BigInt>> {
    m.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect()
}

/// `#[serde(with = "crate::bigint_json::vec")]` for `Vec<BigInt>` fields.
pub mod vec {
    use super::JsonInt;
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<JsonInt> = v.iter().cloned().map(JsonInt).collect();
        wrapped.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<JsonInt>::deserialize(d)?.into_iter().map(|j| j.0).collect())
    }
}
