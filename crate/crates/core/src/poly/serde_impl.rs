//! JSON form: `{"k": 2, "coeffs": {"0": "4", "1": "-4", ..}}`, keys are
//! subset bit patterns in ascending numeric order, values decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HomogPoly, MultiAffinePoly};
use crate::graph::VertexSet;

struct Table<'a>(&'a BTreeMap<VertexSet, BigInt>);

impl Serialize for Table<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (s, c) in self.0 {
            map.serialize_entry(&s.bits().to_string(), &c.to_string())?;
        }
        map.end()
    }
}

fn serialize_poly<S: Serializer>(
    name: &'static str,
    k: usize,
    coeffs: &BTreeMap<VertexSet, BigInt>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    let mut st = serializer.serialize_struct(name, 2)?;
    st.serialize_field("k", &k)?;
    st.serialize_field("coeffs", &Table(coeffs))?;
    st.end()
}

impl Serialize for MultiAffinePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_poly("MultiAffinePoly", self.k, &self.coeffs, serializer)
    }
}

impl Serialize for HomogPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serialize_poly("HomogPoly", self.k, &self.coeffs, serializer)
    }
}

#[derive(Deserialize)]
struct Raw {
    k: usize,
    coeffs: BTreeMap<String, String>,
}

impl<'de> Deserialize<'de> for MultiAffinePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Raw::deserialize(deserializer)?;
        if raw.k > crate::graph::MAX_VERTICES {
            return Err(D::Error::custom(format!("k = {} is too large", raw.k)));
        }
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (key, value) in raw.coeffs {
            let bits: u64 = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bad subset index {key:?}")))?;
            let c: BigInt = value
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {value:?}")))?;
            terms.push((VertexSet::from_bits(bits), c));
        }
        MultiAffinePoly::new(raw.k, terms).map_err(D::Error::custom)
    }
}
