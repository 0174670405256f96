use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A homogeneous symmetric function of degree `degree`, in the Schur basis.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurVector<T = BigInt> {
    degree: u32,
    coeffs: BTreeMap<Partition, T>,
}

pub type RationalSchurVector = SchurVector<BigRational>;

impl<T: Clone + Num> SchurVector<T> {
    pub fn zero(degree: u32) -> Self {
        SchurVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `s_lambda`.
    pub fn basis(lambda: Partition) -> Self {
        let mut v = SchurVector::zero(lambda.weight());
        v.coeffs.insert(lambda, T::one());
        v
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, T)>,
    ) -> Result<Self> {
        let mut v = SchurVector::zero(degree);
        for (lambda, c) in terms {
            v.add_term(lambda, c)?;
        }
        Ok(v)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self, lambda: &Partition) -> T {
        self.coeffs.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: T) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::DegreeMismatch {
                lhs: self.degree,
                rhs: lambda.weight(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let updated = match self.coeffs.remove(&lambda) {
            Some(old) => old + c,
            None => c,
        };
        if !updated.is_zero() {
            self.coeffs.insert(lambda, updated);
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &T) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                lhs: self.degree,
                rhs: other.degree,
            });
        }
        let mut out = self.clone();
        for (lambda, v) in &other.coeffs {
            out.add_term(lambda.clone(), c.clone() * v.clone())?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    /// Terms in descending partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter().rev()
    }
}

impl SchurVector<BigInt> {
    pub fn to_rational(&self) -> RationalSchurVector {
        SchurVector {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), BigRational::from_integer(v.clone())))
                .collect(),
        }
    }
}

/// Exact fraction text `p/q`, always with an explicit denominator.
pub fn fraction_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_fraction(s: &str) -> Result<BigRational> {
    let err = |reason: String| Error::Parse {
        input: s.to_string(),
        reason,
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|e| err(e.to_string()))?;
            let d = BigInt::from_str(d.trim()).map_err(|e| err(e.to_string()))?;
            if d.is_zero() {
                return Err(err("zero denominator".into()));
            }
            Ok(BigRational::new(n, d))
        }
        None => BigInt::from_str(s.trim())
            .map(BigRational::from_integer)
            .map_err(|e| err(e.to_string())),
    }
}

struct Coeffs<'a, T>(&'a BTreeMap<Partition, T>);

impl<T: fmt::Display> Serialize for Coeffs<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().rev() {
            map.serialize_entry(&k.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

impl<T: fmt::Display> Serialize for SchurVector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SchurVector", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchurVector<BigInt> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: u32,
            #[serde(deserialize_with = "string_map")]
            coeffs: Vec<(String, String)>,
        }

        fn string_map<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<(String, String)>, D::Error> {
            struct V;
            impl<'de> Visitor<'de> for V {
                type Value = Vec<(String, String)>;
                fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                    f.write_str("a map of partition strings to integer strings")
                }
                fn visit_map<A: MapAccess<'de>>(
                    self,
                    mut access: A,
                ) -> std::result::Result<Self::Value, A::Error> {
                    let mut out = Vec::new();
                    while let Some(entry) = access.next_entry()? {
                        out.push(entry);
                    }
                    Ok(out)
                }
            }
            d.deserialize_map(V)
        }

        let raw = Raw::deserialize(deserializer)?;
        let terms = raw
            .coeffs
            .into_iter()
            .map(|(k, v)| {
                let lambda = k.parse::<Partition>().map_err(de::Error::custom)?;
                let c = BigInt::from_str(&v).map_err(de::Error::custom)?;
                Ok((lambda, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        SchurVector::from_terms(raw.degree, terms).map_err(de::Error::custom)
    }
}

impl<T: fmt::Display> fmt::Display for SchurVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, v)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*s({})", v, k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_algebra() {
        let v = SchurVector::<BigInt>::from_terms(
            3,
            vec![(part![3], BigInt::from(1)), (part![2, 1], BigInt::from(2))],
        )
        .unwrap();
        let zero = v.add_scaled(&v, &BigInt::from(-1)).unwrap();
        assert!(zero.is_zero());
        assert_eq!(v.coefficient(&part![1, 1, 1]), BigInt::from(0));
        assert_eq!(v.coefficient(&part![2, 1]), BigInt::from(2));
        assert!(v
            .add_scaled(&SchurVector::zero(4), &BigInt::from(1))
            .is_err());
        assert!(SchurVector::<BigInt>::zero(3)
            .add_term(part![2], BigInt::from(1))
            .is_err());

        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let r = v.to_rational().add_scaled(&v.to_rational(), &half).unwrap();
        assert_eq!(
            r.coefficient(&part![2, 1]),
            BigRational::from_integer(3.into())
        );
    }

    #[test]
    fn json_round_trip() {
        let v = SchurVector::<BigInt>::from_terms(
            3,
            vec![(part![3], BigInt::from(1)), (part![2, 1], BigInt::from(-7))],
        )
        .unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"degree":3,"coeffs":{"3":"1","2,1":"-7"}}"#);
        let back: SchurVector = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn fractions() {
        let q = parse_fraction("6/4").unwrap();
        assert_eq!(fraction_string(&q), "3/2");
        assert_eq!(fraction_string(&parse_fraction("5").unwrap()), "5/1");
        assert!(parse_fraction("1/0").is_err());
    }
}
