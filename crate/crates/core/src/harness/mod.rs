//! Batch verification suites over the identities, claims and conjectures
//! about Schur products and the cones they span.

mod suites;
pub mod table;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiset::PartitionMultiset;
use crate::nested::is_nested;
use crate::partition::Partition;

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 11] = [
    "lr-corollary",
    "lemma15",
    "separated-claims",
    "add-square",
    "squared",
    "k3-identities",
    "jacobi-trudi",
    "conjecture-main",
    "conj-iii",
    "conj-iv",
    "table",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    LrCorollary,
    Lemma15,
    SeparatedClaims,
    AddSquare,
    Squared,
    K3Identities,
    JacobiTrudi,
    ConjectureMain,
    ConjIii,
    ConjIv,
    Table,
}

impl Suite {
    pub fn all() -> impl Iterator<Item = Suite> {
        SUITES
            .iter()
            .map(|s| s.parse().expect("listed names parse"))
    }

    pub fn name(self) -> &'static str {
        SUITES[self as usize]
    }

    /// Bound used when the caller does not pick one.
    pub fn default_bound(self) -> u32 {
        match self {
            Suite::LrCorollary => 7,
            Suite::Lemma15 => 9,
            Suite::SeparatedClaims => 12,
            Suite::AddSquare => 10,
            Suite::Squared => 12,
            Suite::K3Identities => 12,
            Suite::JacobiTrudi => 7,
            Suite::ConjectureMain => 8,
            Suite::ConjIii => 8,
            Suite::ConjIv => 8,
            Suite::Table => 8,
        }
    }

    /// Largest bound accepted before the run is refused.
    pub fn hard_limit(self) -> u32 {
        match self {
            Suite::LrCorollary => 9,
            Suite::Lemma15 => 12,
            Suite::SeparatedClaims => 16,
            Suite::AddSquare => 12,
            Suite::Squared => 14,
            Suite::K3Identities => 16,
            Suite::JacobiTrudi => 9,
            Suite::ConjectureMain => 10,
            Suite::ConjIii => 10,
            Suite::ConjIv => 10,
            Suite::Table => 10,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Suite::*;
        let all = [
            LrCorollary,
            Lemma15,
            SeparatedClaims,
            AddSquare,
            Squared,
            K3Identities,
            JacobiTrudi,
            ConjectureMain,
            ConjIii,
            ConjIv,
            Table,
        ];
        SUITES
            .iter()
            .position(|n| *n == s)
            .map(|i| all[i])
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteConfig {
    pub bound: Option<u32>,
    /// Seed for suites that sample; the current suites are exhaustive.
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    /// A proven statement does not hold: a bug or an error in the source.
    Failure,
    /// A conjecture does not hold: a potential counterexample.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteViolation {
    pub case: String,
    pub expected: String,
    pub actual: String,
    pub kind: ViolationKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Pass,
    Finding,
    Failure,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub bound: u32,
    pub cases_run: usize,
    pub status: SuiteStatus,
    pub violations: Vec<SuiteViolation>,
    pub wall_time_secs: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Process exit code for the CLI: 0 pass, 20 findings only, 1 failure.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            SuiteStatus::Pass => 0,
            SuiteStatus::Finding => 20,
            SuiteStatus::Failure => 1,
        }
    }
}

/// Running tally a suite fills in.
#[derive(Default)]
pub(crate) struct Tally {
    pub cases: usize,
    pub violations: Vec<SuiteViolation>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, case: impl FnOnce() -> (String, String, String)) {
        self.record(ok, ViolationKind::Failure, case);
    }

    pub fn record(
        &mut self,
        ok: bool,
        kind: ViolationKind,
        case: impl FnOnce() -> (String, String, String),
    ) {
        self.cases += 1;
        if !ok {
            let (case, expected, actual) = case();
            self.violations.push(SuiteViolation {
                case,
                expected,
                actual,
                kind,
            });
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<SuiteReport> {
    let bound = config.bound.unwrap_or_else(|| suite.default_bound());
    if bound > suite.hard_limit() {
        return Err(Error::BoundExceeded {
            degree: bound,
            bound: suite.hard_limit(),
        });
    }
    let start = Instant::now();
    let tally = suites::run(suite, bound)?;
    let status = if tally
        .violations
        .iter()
        .any(|v| v.kind == ViolationKind::Failure)
    {
        SuiteStatus::Failure
    } else if tally.violations.is_empty() {
        SuiteStatus::Pass
    } else {
        SuiteStatus::Finding
    };
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        bound,
        cases_run: tally.cases,
        status,
        violations: tally.violations,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// The two-part entries of a nested multiset, peeled so that each one is a
/// pair of adjacent parts of `phi` of what remains. Among admissible entries
/// the one whose parts sit earliest in `phi` is taken first.
pub fn inside_out_order(a: &PartitionMultiset) -> Result<Vec<Partition>> {
    if let Some(bad) = a.entries().iter().find(|e| e.len() != 2) {
        return Err(Error::NotTwoPart(bad.to_string()));
    }
    if !is_nested(a)? {
        return Err(Error::NotNested(a.to_string()));
    }
    let mut rest = a.clone();
    let mut order = Vec::with_capacity(a.len());
    while !rest.is_empty() {
        let phi = rest.phi();
        let next = phi
            .parts()
            .windows(2)
            .map(|w| Partition::from_unsorted(w.to_vec()))
            .find(|pair| rest.contains(pair))
            .ok_or_else(|| Error::NotNested(a.to_string()))?;
        rest = rest.without(&next).expect("entry is present");
        order.push(next);
    }
    Ok(order)
}

/// True iff every two-part `mu` with `rho1 > mu1 > mu2 > rho2` occurs in `a`
/// and `b` with the same multiplicity.
pub fn agree_within(a: &PartitionMultiset, b: &PartitionMultiset, rho: &Partition) -> Result<bool> {
    if rho.len() != 2 {
        return Err(Error::NotTwoPart(rho.to_string()));
    }
    let (r1, r2) = (rho.part(0), rho.part(1));
    let inside = |mu: &Partition| {
        mu.len() == 2 && r1 > mu.part(0) && mu.part(0) > mu.part(1) && mu.part(1) > r2
    };
    Ok(a.entries()
        .iter()
        .chain(b.entries())
        .filter(|mu| inside(mu))
        .all(|mu| a.multiplicity(mu) == b.multiplicity(mu)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert!(s.default_bound() <= s.hard_limit());
        }
        assert!(matches!(
            "nope".parse::<Suite>(),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn inside_out_examples() {
        assert_eq!(
            inside_out_order(&mset![[6, 4], [5, 5]]).unwrap(),
            vec![part![5, 5], part![6, 4]]
        );
        assert_eq!(inside_out_order(&mset![[3, 2]]).unwrap(), vec![part![3, 2]]);
        assert!(matches!(
            inside_out_order(&mset![[6, 5], [5, 4]]),
            Err(Error::NotNested(_))
        ));
        assert!(matches!(
            inside_out_order(&mset![[3, 1], [2]]),
            Err(Error::NotTwoPart(_))
        ));
    }

    #[test]
    fn inside_out_steps_are_adjacent() {
        for n in 2..=10 {
            for a in crate::multiset::enumerate_generators(n, 2) {
                if a.entries().iter().any(|e| e.len() != 2) || !is_nested(&a).unwrap() {
                    continue;
                }
                let order = inside_out_order(&a).unwrap();
                let mut rest = a.clone();
                for pair in order {
                    let phi = rest.phi();
                    assert!(phi.parts().windows(2).any(|w| w == pair.parts()));
                    rest = rest.without(&pair).unwrap();
                }
                assert!(rest.is_empty());
            }
        }
    }

    #[test]
    fn agree_within_examples() {
        let a = mset![[5, 1], [4, 2]];
        assert!(agree_within(&a, &a, &part![5, 1]).unwrap());
        assert!(!agree_within(&a, &mset![[5, 1], [3, 3]], &part![5, 1]).unwrap());
        assert!(agree_within(&a, &mset![[5, 2], [4, 2]], &part![4, 2]).unwrap());
        assert!(matches!(
            agree_within(&a, &a, &part![5]),
            Err(Error::NotTwoPart(_))
        ));
    }
}
