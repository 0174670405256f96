//! Extreme-ray membership in the cone spanned by products of Schur functions.
//!
//! `s_A` is extreme when it is not a nonnegative combination of the other
//! generators `s_B`, `B != A`. That is an exact LP feasibility question,
//! answered by [`simplex::phase_one`] and backed by a certificate that is
//! re-checked by [`verify_certificate`] before it is returned.

pub mod simplex;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use log::warn;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiset::{enumerate_generators, PartitionMultiset};
use crate::nested::is_nested;
use crate::partition::{enumerate_partitions, Partition};
use crate::schur::{fraction_string, SchurEngine, SchurVector};
use simplex::{phase_one, PhaseOne};

/// The target `s_A` and every other generator of `C_N^k` as columns.
#[derive(Clone, Debug)]
pub struct ConeInstance {
    pub degree: u32,
    pub k: usize,
    pub target_multiset: PartitionMultiset,
    pub target: Arc<SchurVector>,
    pub columns: Vec<(PartitionMultiset, Arc<SchurVector>)>,
}

impl ConeInstance {
    /// Columns follow the canonical generator order; only `B = A` as a
    /// multiset is excluded.
    pub fn build(engine: &SchurEngine, a: &PartitionMultiset, k: usize) -> Result<Self> {
        if let Some(wide) = a.entries().iter().find(|e| e.len() > k) {
            return Err(Error::TooManyParts {
                partition: wide.to_string(),
                max: k,
            });
        }
        if a.is_empty() {
            return Err(Error::EmptyMultiset);
        }
        let n = a.total_weight();
        let columns = enumerate_generators(n, k)
            .into_iter()
            .filter(|b| b != a)
            .map(|b| {
                let v = engine.expand_product(&b);
                (b, v)
            })
            .collect();
        Ok(ConeInstance {
            degree: n,
            k,
            target_multiset: a.clone(),
            target: engine.expand_product(a),
            columns,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Nonnegative weights with `sum w_B s_B = s_A`.
    Witness(BTreeMap<PartitionMultiset, BigRational>),
    /// A functional positive on `s_A` and nonpositive on every column.
    Farkas(BTreeMap<Partition, BigRational>),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Witness(_) => "witness",
            Certificate::Farkas(_) => "farkas",
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries<'a, K>(&'a BTreeMap<K, BigRational>);
        impl<K: std::fmt::Display> Serialize for Entries<'_, K> {
            fn serialize<S: Serializer>(
                &self,
                serializer: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0.iter().rev() {
                    map.serialize_entry(&k.to_string(), &fraction_string(v))?;
                }
                map.end()
            }
        }
        let mut st = serializer.serialize_struct("Certificate", 2)?;
        st.serialize_field("kind", self.kind())?;
        match self {
            Certificate::Witness(w) => st.serialize_field("entries", &Entries(w))?,
            Certificate::Farkas(f) => st.serialize_field("entries", &Entries(f))?,
        }
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalityResult {
    pub extreme: bool,
    pub certificate: Certificate,
    /// Other generators whose Schur expansion equals the target's.
    pub collisions: Vec<PartitionMultiset>,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverOptions {
    /// Drop columns with support outside the target's support before solving.
    pub prune: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { prune: true }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ConeConfig {
    /// Largest admissible degree; `None` selects [`default_degree_bound`].
    pub max_degree: Option<u32>,
    pub solver: SolverOptions,
}

impl ConeConfig {
    pub fn with_max_degree(max_degree: u32) -> Self {
        ConeConfig {
            max_degree: Some(max_degree),
            ..Default::default()
        }
    }

    pub fn bound_for(&self, k: usize) -> u32 {
        self.max_degree.unwrap_or_else(|| default_degree_bound(k))
    }
}

pub fn default_degree_bound(k: usize) -> u32 {
    if k == 3 {
        9
    } else {
        10
    }
}

fn rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// Exact feasibility of `sum c_B s_B = s_A, c >= 0` over the instance columns.
pub fn solve_feasibility(instance: &ConeInstance, options: SolverOptions) -> Certificate {
    let target = &instance.target;
    let rows: Vec<Partition> = if options.prune {
        target.support().cloned().collect()
    } else {
        let mut all: BTreeSet<Partition> = target.support().cloned().collect();
        for (_, v) in &instance.columns {
            all.extend(v.support().cloned());
        }
        all.into_iter().collect()
    };
    let row_set: BTreeSet<&Partition> = rows.iter().collect();

    // Everything is nonnegative, so a column touching a row where the target
    // vanishes must get weight zero.
    let kept: Vec<usize> = (0..instance.columns.len())
        .filter(|&j| !options.prune || instance.columns[j].1.support().all(|p| row_set.contains(p)))
        .collect();

    let matrix: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|p| {
            kept.iter()
                .map(|&j| rational(&instance.columns[j].1.coefficient(p)))
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = rows
        .iter()
        .map(|p| rational(&target.coefficient(p)))
        .collect();

    match phase_one(&matrix, &rhs) {
        PhaseOne::Feasible(x) => Certificate::Witness(
            kept.iter()
                .zip(x)
                .filter(|(_, v)| !v.is_zero())
                .map(|(&j, v)| (instance.columns[j].0.clone(), v))
                .collect(),
        ),
        PhaseOne::Infeasible(y) => {
            let mut farkas: BTreeMap<Partition, BigRational> = rows.into_iter().zip(y).collect();
            if options.prune {
                extend_farkas(instance, &mut farkas);
            }
            Certificate::Farkas(primitive(farkas))
        }
    }
}

/// Extends a functional found on the target's support to every partition of
/// the degree: rows outside the support get one common negative value large
/// enough to make each pruned column nonpositive.
fn extend_farkas(instance: &ConeInstance, farkas: &mut BTreeMap<Partition, BigRational>) {
    let mut penalty = BigRational::zero();
    for (_, v) in &instance.columns {
        if v.support().all(|p| farkas.contains_key(p)) {
            continue;
        }
        let inside: BigRational = v
            .iter()
            .filter_map(|(p, c)| farkas.get(p).map(|y| y * rational(c)))
            .sum();
        if inside > penalty {
            penalty = inside;
        }
    }
    let outside = -(penalty + BigRational::one());
    for p in enumerate_partitions(instance.degree, None) {
        farkas.entry(p).or_insert_with(|| outside.clone());
    }
}

/// Scales to a primitive integer vector and drops zero entries.
fn primitive(mut farkas: BTreeMap<Partition, BigRational>) -> BTreeMap<Partition, BigRational> {
    farkas.retain(|_, v| !v.is_zero());
    let lcm = farkas
        .values()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let gcd = farkas.values().fold(BigInt::zero(), |acc, v| {
        acc.gcd(&(v.numer() * &lcm / v.denom()))
    });
    if gcd.is_zero() {
        return farkas;
    }
    let scale = BigRational::new(lcm, gcd);
    farkas.values_mut().for_each(|v| *v = &*v * &scale);
    farkas
}

/// Checks a certificate against the instance with exact arithmetic only.
pub fn verify_certificate(instance: &ConeInstance, certificate: &Certificate) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidCertificate(msg));
    match certificate {
        Certificate::Witness(weights) => {
            if weights.is_empty() {
                return fail("empty witness".into());
            }
            let mut sum = SchurVector::<BigRational>::zero(instance.degree);
            for (b, w) in weights {
                if w.is_negative() {
                    return fail(format!("negative weight on {}", b));
                }
                if b == &instance.target_multiset {
                    return fail("witness uses the target itself".into());
                }
                let Some((_, v)) = instance.columns.iter().find(|(c, _)| c == b) else {
                    return fail(format!("{} is not a column", b));
                };
                sum = sum.add_scaled(&v.to_rational(), w)?;
            }
            if !weights.values().any(Signed::is_positive) {
                return fail("no positive weight".into());
            }
            if sum != instance.target.to_rational() {
                return fail("combination differs from the target".into());
            }
            Ok(())
        }
        Certificate::Farkas(y) => {
            let pair = |v: &SchurVector| -> BigRational {
                v.iter()
                    .filter_map(|(p, c)| y.get(p).map(|w| w * rational(c)))
                    .sum()
            };
            if !pair(&instance.target).is_positive() {
                return fail("functional is not positive on the target".into());
            }
            for (b, v) in &instance.columns {
                if pair(v).is_positive() {
                    return fail(format!("functional is positive on column {}", b));
                }
            }
            Ok(())
        }
    }
}

/// Decides whether `s_A` spans an extreme ray of `C_N^k`.
pub fn is_extreme(
    engine: &SchurEngine,
    a: &PartitionMultiset,
    k: usize,
    config: &ConeConfig,
) -> Result<ExtremalityResult> {
    let bound = config.bound_for(k);
    if a.total_weight() > bound {
        return Err(Error::BoundExceeded {
            degree: a.total_weight(),
            bound,
        });
    }
    let instance = ConeInstance::build(engine, a, k)?;
    let collisions: Vec<PartitionMultiset> = instance
        .columns
        .iter()
        .filter(|(_, v)| **v == *instance.target)
        .map(|(b, _)| b.clone())
        .collect();

    let certificate = if let Some(first) = collisions.first() {
        warn!(
            "generator {} has the same Schur expansion as {}; reporting it as non-extreme",
            a, first
        );
        Certificate::Witness(BTreeMap::from([(first.clone(), BigRational::one())]))
    } else {
        solve_feasibility(&instance, config.solver)
    };
    verify_certificate(&instance, &certificate)?;
    Ok(ExtremalityResult {
        extreme: matches!(certificate, Certificate::Farkas(_)),
        certificate,
        collisions,
    })
}

/// All extreme generators of `C_N^k`, in canonical order.
pub fn extreme_set(
    engine: &SchurEngine,
    n: u32,
    k: usize,
    config: &ConeConfig,
) -> Result<Vec<PartitionMultiset>> {
    let bound = config.bound_for(k);
    if n > bound {
        return Err(Error::BoundExceeded { degree: n, bound });
    }
    let generators = enumerate_generators(n, k);
    generators.par_iter().for_each(|g| {
        engine.expand_product(g);
    });
    let flags = generators
        .par_iter()
        .map(|g| is_extreme(engine, g, k, config).map(|r| r.extreme))
        .collect::<Result<Vec<bool>>>()?;
    Ok(generators
        .into_iter()
        .zip(flags)
        .filter_map(|(g, e)| e.then_some(g))
        .collect())
}

/// `xi_N^k`, the number of extreme rays of `C_N^k`.
pub fn count_extreme(engine: &SchurEngine, n: u32, k: usize, config: &ConeConfig) -> Result<usize> {
    extreme_set(engine, n, k, config).map(|s| s.len())
}

/// Number of nested generators of `C_N^2`.
pub fn count_nested(n: u32) -> usize {
    enumerate_generators(n, 2)
        .iter()
        .filter(|a| is_nested(a).expect("entries have at most two parts"))
        .count()
}

/// `xi_N^k` without linear programming, where a closed description exists:
/// every generator is extreme for `k = 1`, and `k = 2` counts nested
/// generators (equal to the LP count wherever it has been computed).
pub fn count_without_lp(n: u32, k: usize) -> Option<usize> {
    match k {
        1 => Some(enumerate_generators(n, 1).len()),
        2 => Some(count_nested(n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn pieri_product_is_not_extreme() {
        let engine = SchurEngine::default();
        let r = is_extreme(&engine, &mset![[2], [1]], 2, &ConeConfig::default()).unwrap();
        assert!(!r.extreme);
        assert_eq!(
            r.certificate,
            Certificate::Witness(BTreeMap::from([(mset![[3]], q(1)), (mset![[2, 1]], q(1))]))
        );
    }

    #[test]
    fn single_rows_are_extreme_for_k1() {
        let engine = SchurEngine::default();
        let r = is_extreme(&engine, &mset![[3]], 1, &ConeConfig::default()).unwrap();
        assert!(r.extreme);
        assert_eq!(r.certificate.kind(), "farkas");
    }

    #[test]
    fn rejects_wide_entries_and_large_degree() {
        let engine = SchurEngine::default();
        assert!(matches!(
            is_extreme(&engine, &mset![[2, 1, 1]], 2, &ConeConfig::default()),
            Err(Error::TooManyParts { .. })
        ));
        assert!(matches!(
            is_extreme(
                &engine,
                &mset![[6], [5]],
                2,
                &ConeConfig::with_max_degree(10)
            ),
            Err(Error::BoundExceeded { .. })
        ));
    }

    fn instance(
        target: SchurVector,
        columns: Vec<(PartitionMultiset, SchurVector)>,
    ) -> ConeInstance {
        ConeInstance {
            degree: target.degree(),
            k: 2,
            target_multiset: mset![[2, 1], [1]],
            target: Arc::new(target),
            columns: columns.into_iter().map(|(b, v)| (b, Arc::new(v))).collect(),
        }
    }

    #[test]
    fn empty_columns_give_farkas() {
        let inst = instance(SchurVector::basis(part![3, 1]), vec![]);
        let cert = solve_feasibility(&inst, SolverOptions::default());
        assert_eq!(cert.kind(), "farkas");
        verify_certificate(&inst, &cert).unwrap();
    }

    #[test]
    fn single_equal_column_gives_unit_witness() {
        let v = SchurVector::basis(part![3, 1]);
        let inst = instance(v.clone(), vec![(mset![[3, 1]], v)]);
        let cert = solve_feasibility(&inst, SolverOptions::default());
        assert_eq!(
            cert,
            Certificate::Witness(BTreeMap::from([(mset![[3, 1]], q(1))]))
        );
    }

    #[test]
    fn verifier_rejects_bad_certificates() {
        let v = SchurVector::basis(part![3, 1]);
        let inst = instance(v.clone(), vec![(mset![[3, 1]], v)]);
        let bogus = Certificate::Farkas(BTreeMap::from([(part![3, 1], q(1))]));
        assert!(verify_certificate(&inst, &bogus).is_err());
        let half = Certificate::Witness(BTreeMap::from([(mset![[3, 1]], q(1) / q(2))]));
        assert!(verify_certificate(&inst, &half).is_err());
        let negative = Certificate::Witness(BTreeMap::from([(mset![[3, 1]], q(-1))]));
        assert!(verify_certificate(&inst, &negative).is_err());
    }

    #[test]
    fn pruned_farkas_covers_dropped_columns() {
        // target s_(2,2); the column s_(3,1) + s_(2,2) leaves the support
        let target = SchurVector::basis(part![2, 2]);
        let col = SchurVector::from_terms(
            4,
            vec![
                (part![3, 1], BigInt::from(1)),
                (part![2, 2], BigInt::from(1)),
            ],
        )
        .unwrap();
        let inst = instance(target, vec![(mset![[3, 1]], col)]);
        let cert = solve_feasibility(&inst, SolverOptions { prune: true });
        verify_certificate(&inst, &cert).unwrap();
    }

    #[test]
    fn nested_counts_small() {
        assert_eq!(count_nested(1), 1);
        assert_eq!(count_nested(2), 2);
        assert_eq!(count_nested(6), 13);
    }

    #[test]
    fn certificate_json_shape() {
        let engine = SchurEngine::default();
        let r = is_extreme(&engine, &mset![[2], [1]], 2, &ConeConfig::default()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["extreme"], false);
        assert_eq!(json["certificate"]["kind"], "witness");
        assert_eq!(json["certificate"]["entries"]["3"], "1/1");
        assert_eq!(json["certificate"]["entries"]["2,1"], "1/1");
    }
}
