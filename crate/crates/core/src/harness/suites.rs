use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::table::{compute_table, reference_table};
use super::{agree_within, Suite, Tally, ViolationKind};
use crate::cone::{extreme_set, is_extreme, ConeConfig};
use crate::error::Result;
use crate::multiset::{enumerate_generators, PartitionMultiset};
use crate::nested::{completely_separated, is_nested};
use crate::partition::{enumerate_partitions, Partition};
use crate::schur::{jacobi_trudi_check, lr_multi, SchurEngine, SchurVector};

/// Case 4 of the three-part identities has no instance below this weight.
const CASE4_MIN_WEIGHT: u32 = 15;

pub(super) fn run(suite: Suite, bound: u32) -> Result<Tally> {
    let engine = SchurEngine::global();
    match suite {
        Suite::LrCorollary => Ok(lr_corollary(bound)),
        Suite::Lemma15 => lemma15(engine, bound),
        Suite::SeparatedClaims => separated_claims(engine, bound),
        Suite::AddSquare => add_square(engine, bound),
        Suite::Squared => squared(engine, bound),
        Suite::K3Identities => k3_identities(engine, bound),
        Suite::JacobiTrudi => jacobi_trudi(bound),
        Suite::ConjectureMain => conjecture_main(engine, bound),
        Suite::ConjIii => conj_iii(engine, bound),
        Suite::ConjIv => conj_iv(engine, bound),
        Suite::Table => table(engine, bound),
    }
}

fn merge(parts: Vec<Tally>) -> Tally {
    let mut out = Tally::default();
    for t in parts {
        out.merge(t);
    }
    out
}

fn mset(parts: &[&[u32]]) -> PartitionMultiset {
    PartitionMultiset::new(parts.iter().map(|p| Partition::from_unsorted(p.to_vec())))
}

fn two(a: u32, b: u32) -> Partition {
    Partition::from_unsorted(vec![a, b])
}

fn binomial(n: u32, k: i64) -> i64 {
    if k < 0 || k > n as i64 {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n as i64 - i) / (i + 1))
}

/// Nonnegativity is structural; checks dominance of the support and the
/// unit coefficient at `phi(A)` for every multiset of degree `<= bound`.
fn lr_corollary(bound: u32) -> Tally {
    let parts: Vec<Tally> = (1..=bound)
        .flat_map(|n| enumerate_generators(n, n as usize))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|a| {
            let mut t = Tally::default();
            let phi = a.phi();
            for lambda in enumerate_partitions(a.total_weight(), None) {
                let c = lr_multi(a, &lambda).expect("weights agree");
                let dominates = lambda.dominates(&phi).expect("weights agree");
                t.check(c == 0 || dominates, || {
                    (
                        format!("A={} lambda={}", a, lambda),
                        "0 outside the dominance cone".into(),
                        c.to_string(),
                    )
                });
            }
            let lead = lr_multi(a, &phi).expect("weights agree");
            t.check(lead == 1, || {
                (
                    format!("A={} lambda=phi(A)={}", a, phi),
                    "1".into(),
                    lead.to_string(),
                )
            });
            t
        })
        .collect();
    merge(parts)
}

/// Nested multisets of two-part and one-part entries, grouped by `phi`.
fn nested_by_phi(n: u32) -> BTreeMap<Partition, Vec<PartitionMultiset>> {
    let mut groups: BTreeMap<Partition, Vec<PartitionMultiset>> = BTreeMap::new();
    for a in enumerate_generators(n, 2) {
        if is_nested(&a).expect("at most two parts") {
            groups.entry(a.phi()).or_default().push(a);
        }
    }
    groups
}

fn lemma15(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let mut instances = Vec::new();
    for n in 2..=bound {
        for (lambda, group) in nested_by_phi(n) {
            if !lambda.has_distinct_parts() {
                continue;
            }
            for a in &group {
                let rhos: BTreeSet<&Partition> =
                    a.entries().iter().filter(|e| e.len() == 2).collect();
                for rho in rhos {
                    for b in &group {
                        if b != a && !b.contains(rho) && agree_within(a, b, rho)? {
                            instances.push((lambda.clone(), a.clone(), b.clone(), rho.clone()));
                        }
                    }
                }
            }
        }
    }
    let parts = instances
        .par_iter()
        .map(|(lambda, a, b, rho)| -> Result<Tally> {
            let mut t = Tally::default();
            let target = lambda.bump(rho)?;
            let ca = engine.lr_multi(a, &target)?;
            let cb = engine.lr_multi(b, &target)?;
            let case = || format!("lambda={} A={} B={} rho={}", lambda, a, b, rho);
            t.check(ca + 1 == cb, || {
                (
                    case(),
                    format!("c_B = c_A + 1 = {}", ca + 1),
                    format!("c_B = {}", cb),
                )
            });
            let i = lambda.parts().iter().position(|&x| x == rho.part(0));
            let j = lambda.parts().iter().position(|&x| x == rho.part(1));
            if let (Some(i), Some(j)) = (i, j) {
                if j == i + 1 {
                    t.check(ca == 0 && cb == 1, || {
                        (
                            case(),
                            "c_A = 0, c_B = 1".into(),
                            format!("c_A = {}, c_B = {}", ca, cb),
                        )
                    });
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(parts))
}

/// Distinct-part partitions of every weight `<= max`, avoiding `skip`.
fn distinct_avoiding(max: u32, skip: u32) -> Vec<Vec<u32>> {
    fn rec(top: u32, left: u32, skip: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        for v in (1..=top.min(left)).rev() {
            if v == skip {
                continue;
            }
            cur.push(v);
            rec(v - 1, left - v, skip, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max, max, skip, &mut Vec::new(), &mut out);
    out
}

struct SeparatedInstance {
    p: u32,
    n: u32,
    mu: Partition,
    lambda: Partition,
}

fn separated_instances(bound: u32) -> Vec<SeparatedInstance> {
    let mut out = Vec::new();
    for p in 1..=bound / 2 {
        for n in 2..=bound / p {
            for d in distinct_avoiding(bound - n * p, p) {
                let with_p = |copies: u32| {
                    let mut parts = d.clone();
                    parts.extend(std::iter::repeat_n(p, copies as usize));
                    Partition::from_unsorted(parts)
                };
                out.push(SeparatedInstance {
                    p,
                    n,
                    mu: with_p(n - 2),
                    lambda: with_p(n),
                });
            }
        }
    }
    out
}

fn separated_claims(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let instances = separated_instances(bound);
    let mut by_phi: BTreeMap<Partition, Vec<PartitionMultiset>> = BTreeMap::new();
    for n in 1..=bound {
        for a in enumerate_generators(n, 2) {
            by_phi.entry(a.phi()).or_default().push(a);
        }
    }
    let parts = instances
        .par_iter()
        .map(|inst| -> Result<Tally> {
            let mut t = Tally::default();
            let SeparatedInstance { p, n, mu, lambda } = inst;
            let (p, n) = (*p, *n);
            let m = n / 2;
            let rho = two(p, p);
            let targets: Vec<Partition> = (0..=m)
                .map(|j| lambda.bump_iter(p, j as usize).expect("enough copies of p"))
                .collect();

            // pi(s_rho s_{mu[rho^i]}) for i <= m - 1
            for i in 0..m {
                let eta = mu.bump_iter(p, i as usize).expect("enough copies of p");
                let b = PartitionMultiset::new([rho.clone(), eta.clone()]);
                for (j, chi) in targets.iter().enumerate() {
                    let j = j as u32;
                    let expected = if i + 2 <= m {
                        (i..=i + 2).contains(&j)
                    } else if n % 2 == 1 {
                        j == m - 1 || j == m
                    } else {
                        j == m - 1
                    } as u64;
                    let c = engine.lr_multi(&b, chi)?;
                    t.check(c == expected, || {
                        (
                            format!(
                                "p={} n={} mu={} i={} j={} B={} chi={}",
                                p, n, mu, i, j, b, chi
                            ),
                            expected.to_string(),
                            c.to_string(),
                        )
                    });
                }
            }

            // pi(s_B) for phi(B) = lambda[rho^i], rho not in B
            for (i, eta) in targets.iter().enumerate() {
                let i = i as u32;
                let bs = by_phi.get(eta).map(Vec::as_slice).unwrap_or(&[]);
                for b in bs.iter().filter(|b| !b.contains(&rho)) {
                    for (j, chi) in targets.iter().enumerate() {
                        let j = j as u32;
                        let expected = if j < i {
                            0
                        } else {
                            let top = n - 2 * i;
                            let k = j as i64 - i as i64;
                            binomial(top, k) - binomial(top, k - 1)
                        };
                        let c = engine.lr_multi(b, chi)? as i64;
                        t.check(c == expected, || {
                            (
                                format!(
                                    "p={} n={} lambda={} i={} j={} B={}",
                                    p, n, lambda, i, j, b
                                ),
                                expected.to_string(),
                                c.to_string(),
                            )
                        });
                    }
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(parts))
}

fn extremality_cases(
    engine: &SchurEngine,
    cases: Vec<(String, PartitionMultiset)>,
    k: usize,
    config: ConeConfig,
    kind: ViolationKind,
) -> Result<Tally> {
    let parts = cases
        .par_iter()
        .map(|(label, a)| -> Result<Tally> {
            let mut t = Tally::default();
            let r = is_extreme(engine, a, k, &config)?;
            let nested = k == 2 && is_nested(a)?;
            t.record(r.extreme, kind, || {
                let actual = if k == 2 && !nested {
                    "not extreme (not nested)"
                } else {
                    "not extreme"
                };
                (
                    format!("{} A={} k={}", label, a, k),
                    "extreme".into(),
                    actual.into(),
                )
            });
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(parts))
}

fn add_square(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let config = ConeConfig::with_max_degree(bound);
    let base = bound.saturating_sub(4);
    let mut cases = Vec::new();
    for n in 1..=base {
        let extreme = extreme_set(engine, n, 2, &config)?;
        for p in 1..=base / 2 {
            if n + 2 * p > bound {
                continue;
            }
            for a in &extreme {
                cases.push((format!("base {} plus ({},{})", a, p, p), a.with(two(p, p))));
            }
        }
    }
    for n in 2..=bound {
        for a in enumerate_generators(n, 2) {
            let pairs_only = a.entries().iter().all(|e| e.len() == 2);
            if pairs_only && completely_separated(&a)? && is_nested(&a)? {
                cases.push(("completely separated nested".into(), a));
            }
        }
    }
    extremality_cases(engine, cases, 2, config, ViolationKind::Failure)
}

fn squared(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let mut t = Tally::default();
    let mut cases = Vec::new();
    for j in 2..=bound / 2 {
        for i in 1..j {
            if 2 * (j + i) > bound {
                continue;
            }
            let a = mset(&[&[j, i], &[j, i]]);
            let b = [
                mset(&[&[j, j], &[i, i]]),
                mset(&[&[j + 1, j - 1], &[i, i]]),
                mset(&[&[j + 1, i], &[j - 1, i]]),
                mset(&[&[j, j], &[i + 1, i - 1]]),
                mset(&[&[j, i + 1], &[j, i - 1]]),
            ];
            let lam_rho1 = Partition::from_unsorted(vec![j + 1, j - 1, i, i]);
            let lam_rho2 = Partition::from_unsorted(vec![j, j, i + 1, i - 1]);
            let lam_plus = Partition::from_unsorted(vec![j + 1, j, i, i - 1]);
            let label = |what: &str| format!("(j,i)=({},{}) {}", j, i, what);

            for (name, target) in [("lambda[rho1]", &lam_rho1), ("lambda[rho2]", &lam_rho2)] {
                let ca = engine.lr_multi(&a, target)?;
                let cb = engine.lr_multi(&b[0], target)?;
                t.check(ca == cb + 1, || {
                    (
                        label(&format!("c_A at {}", name)),
                        format!("{}", cb + 1),
                        ca.to_string(),
                    )
                });
            }
            let ca = engine.lr_multi(&a, &lam_plus)?;
            t.check(ca == 2, || {
                (label("c_A at lambda+"), "2".into(), ca.to_string())
            });
            for (idx, bt) in b.iter().enumerate() {
                let c = engine.lr_multi(bt, &lam_plus)?;
                t.check(c == 1, || {
                    (
                        label(&format!("c_B{} at lambda+", idx)),
                        "1".into(),
                        c.to_string(),
                    )
                });
            }
            cases.push((format!("(j,i)=({},{})", j, i), a));
        }
    }
    let config = ConeConfig::with_max_degree(bound);
    t.merge(extremality_cases(
        engine,
        cases,
        2,
        config,
        ViolationKind::Failure,
    )?);
    Ok(t)
}

fn product(engine: &SchurEngine, parts: &[Vec<u32>]) -> SchurVector {
    let a = PartitionMultiset::new(parts.iter().map(|p| Partition::from_unsorted(p.clone())));
    (*engine.expand_product(&a)).clone()
}

fn sum(terms: Vec<SchurVector>) -> SchurVector {
    let one = BigInt::from(1);
    let mut it = terms.into_iter();
    let first = it.next().expect("at least one term");
    it.fold(first, |acc, v| {
        acc.add_scaled(&v, &one).expect("same degree")
    })
}

struct Identity {
    label: String,
    lhs: Vec<Vec<u32>>,
    rhs: Vec<Vec<Vec<u32>>>,
}

/// Parameter tuples for the displayed decompositions, each as a product
/// identity. `l` and `m` are padded to three parts with zeros.
fn k3_grid(bound: u32) -> (Vec<(u32, u32, u32)>, Vec<Identity>) {
    let case4_bound = bound.max(CASE4_MIN_WEIGHT + 1);
    let mut case1 = Vec::new();
    let mut ids = Vec::new();
    let top = case4_bound;
    for l1 in 1..=top {
        for l2 in 0..=l1 {
            for l3 in 0..=l2 {
                for m1 in 1..=top {
                    for m2 in 0..=m1 {
                        for m3 in 0..=m2 {
                            let w = l1 + l2 + l3 + m1 + m2 + m3;
                            if w > case4_bound {
                                continue;
                            }
                            let d = format!("l=({},{},{}) m=({},{},{})", l1, l2, l3, m1, m2, m3);
                            let id = |case: &str, rhs: Vec<[Vec<u32>; 2]>| Identity {
                                label: format!("case {} {}", case, d),
                                lhs: vec![vec![l1, l2, l3], vec![m1, m2, m3]],
                                rhs: rhs.into_iter().map(|p| p.to_vec()).collect(),
                            };
                            if m3 >= 1 && l1 > m1 && m1 >= l2 && l2 > m2 && m2 >= l3 && l3 > m3 {
                                ids.push(id(
                                    "4",
                                    vec![
                                        [vec![l1, m1 + 1, l2 + 1], vec![m2 - 1, l3 - 1, m3]],
                                        [vec![l1, l2, m3], vec![m1, m2, l3]],
                                        [vec![l1, l2, m2 + 1], vec![m1, l3 - 1, m3]],
                                    ],
                                ));
                            }
                            if w > bound {
                                continue;
                            }
                            if l2 >= 1 && l3 == 0 && m2 == 0 {
                                case1.push((l1, l2, m1));
                            }
                            if l3 == 1 && m2 == 0 && l1 > m1 && m1 >= l2 {
                                ids.push(id(
                                    "2",
                                    vec![
                                        [vec![l1], vec![m1, l2, 1]],
                                        [vec![l2 - 1], vec![l1, m1 + 1, 1]],
                                    ],
                                ));
                            }
                            if l3 >= 1 && m3 == 0 && l1 > m1 && m1 >= l2 && l2 > m2 && m2 >= l3 {
                                ids.push(id(
                                    "3",
                                    vec![
                                        [vec![l2 - 1, m2], vec![l1, m1 + 1, l3]],
                                        [vec![m1, l2], vec![l1, m2, l3]],
                                        [vec![l1, l3 - 1], vec![m1, l2, m2 + 1]],
                                    ],
                                ));
                            }
                            if l3 == 0 && m3 == 0 && l2 >= 1 && m2 >= 1 && l1 >= m1 && m2 >= l2 {
                                if m1 > l2 {
                                    ids.push(id(
                                        "5a",
                                        vec![
                                            [vec![l1, m1, m2], vec![l2]],
                                            [vec![l1 + 1, m2], vec![m1 - 1, l2]],
                                            [vec![l1 + 1, l2 + 1], vec![m1 - 1, m2 - 1]],
                                        ],
                                    ));
                                } else {
                                    ids.push(id(
                                        "5b",
                                        vec![
                                            [vec![l1, l2, l2], vec![l2]],
                                            [vec![l1 + 1, l2 + 1], vec![l2 - 1, l2 - 1]],
                                        ],
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    (case1, ids)
}

fn k3_identities(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let (case1, mut ids) = k3_grid(bound);
    ids.push(Identity {
        label: "remark (5,2,1)(1,1)".into(),
        lhs: vec![vec![5, 2, 1], vec![1, 1]],
        rhs: vec![
            vec![vec![1, 1, 1], vec![5, 2]],
            vec![vec![5, 2, 2], vec![1]],
        ],
    });

    let mut t = Tally::default();
    for (l1, l2, m1) in case1 {
        let v = product(engine, &[vec![l1, l2], vec![m1]]);
        let wide: Vec<String> = v
            .support()
            .filter(|p| p.len() > 3)
            .map(|p| p.to_string())
            .collect();
        t.check(wide.is_empty(), || {
            (
                format!("case 1 l=({},{}) m=({})", l1, l2, m1),
                "support within three rows".into(),
                wide.join(" "),
            )
        });
    }

    let parts: Vec<Tally> = ids
        .par_iter()
        .map(|id| {
            let mut t = Tally::default();
            let lhs = product(engine, &id.lhs);
            let rhs = sum(id.rhs.iter().map(|term| product(engine, term)).collect());
            let diff = lhs
                .add_scaled(&rhs, &BigInt::from(-1))
                .expect("same degree");
            t.check(diff.is_zero(), || {
                (
                    id.label.clone(),
                    "lhs - rhs = 0".into(),
                    format!("lhs - rhs = {}", diff),
                )
            });
            t
        })
        .collect();
    t.merge(merge(parts));

    let remark = mset(&[&[4, 3, 1], &[1, 1]]);
    let r = is_extreme(engine, &remark, 3, &ConeConfig::with_max_degree(10))?;
    t.check(r.extreme, || {
        (
            format!("remark A={} k=3", remark),
            "extreme".into(),
            "not extreme".into(),
        )
    });
    Ok(t)
}

fn jacobi_trudi(bound: u32) -> Result<Tally> {
    let shapes: Vec<Partition> = (1..=bound)
        .flat_map(|n| enumerate_partitions(n, None))
        .collect();
    let parts = shapes
        .par_iter()
        .map(|lambda| -> Result<Tally> {
            let mut t = Tally::default();
            let ok = jacobi_trudi_check(lambda, bound)?;
            t.check(ok, || {
                (
                    format!("lambda={}", lambda),
                    "s_lambda".into(),
                    "differs".into(),
                )
            });
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(parts))
}

fn conjecture_main(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let config = ConeConfig::with_max_degree(bound);
    let mut t = Tally::default();
    for n in 1..=bound {
        let extreme: BTreeSet<PartitionMultiset> =
            extreme_set(engine, n, 2, &config)?.into_iter().collect();
        for a in enumerate_generators(n, 2) {
            let nested = is_nested(&a)?;
            let ext = extreme.contains(&a);
            t.record(nested == ext, ViolationKind::Finding, || {
                (
                    format!("N={} A={}", n, a),
                    format!("extreme = nested = {}", nested),
                    format!("extreme = {}", ext),
                )
            });
        }
    }
    Ok(t)
}

fn extreme_sets(
    engine: &SchurEngine,
    max: u32,
    config: &ConeConfig,
) -> Result<Vec<(u32, Vec<PartitionMultiset>)>> {
    (1..=max)
        .map(|n| extreme_set(engine, n, 2, config).map(|s| (n, s)))
        .collect()
}

fn conj_iii(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let config = ConeConfig::with_max_degree(bound);
    let sets = extreme_sets(engine, bound.saturating_sub(1), &config)?;
    let mut cases = Vec::new();
    for (n, sa) in &sets {
        for (m, sb) in &sets {
            if n + m > bound {
                continue;
            }
            for a in sa {
                for b in sb {
                    let (pa, pb) = (a.phi(), b.phi());
                    let both_odd = pa.len() % 2 == 1 && pb.len() % 2 == 1;
                    if both_odd || pa.part(pa.len() - 1) <= pb.part(0) {
                        continue;
                    }
                    cases.push((format!("A={} B={}", a, b), a.union(b)));
                }
            }
        }
    }
    extremality_cases(engine, cases, 2, config, ViolationKind::Finding)
}

fn conj_iv(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let config = ConeConfig::with_max_degree(bound);
    let sets = extreme_sets(engine, bound.saturating_sub(3), &config)?;
    let mut cases = Vec::new();
    for (n, sa) in &sets {
        for a in sa {
            let phi = a.phi();
            let (top, low) = (phi.part(0), phi.part(phi.len() - 1));
            for r2 in 1..=low {
                for r1 in top.max(r2 + 1)..=bound {
                    if n + r1 + r2 > bound {
                        break;
                    }
                    let rho = two(r1, r2);
                    cases.push((format!("A={} rho={}", a, rho), a.with(rho)));
                }
            }
        }
    }
    extremality_cases(engine, cases, 2, config, ViolationKind::Finding)
}

fn table(engine: &SchurEngine, bound: u32) -> Result<Tally> {
    let computed = compute_table(engine, bound)?;
    let reference = reference_table();
    let mut t = Tally::default();
    for n in 1..=bound {
        for (k, xi) in computed.row(n).into_iter().enumerate() {
            let k = k + 1;
            let expected = reference.get(n, k);
            t.check(expected == Some(xi), || {
                (
                    format!("xi(N={}, k={})", n, k),
                    expected.map_or("missing".into(), |e| e.to_string()),
                    xi.to_string(),
                )
            });
        }
    }
    Ok(t)
}
