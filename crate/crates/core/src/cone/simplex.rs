//! Exact phase-1 simplex over arbitrary-precision rationals.
//!
//! Decides feasibility of `{x >= 0 : A x = b}` by minimizing the sum of
//! artificial variables with Bland's pivoting rule. At the optimum either the
//! artificials vanish (a feasible `x`) or the final duals `y` satisfy
//! `y^T A <= 0` and `y^T b > 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub enum PhaseOne {
    Feasible(Vec<BigRational>),
    /// Farkas multipliers, one per row.
    Infeasible(Vec<BigRational>),
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    /// Reduced costs of all `n + m` columns.
    costs: Vec<BigRational>,
    /// Negated objective value.
    neg_objective: BigRational,
    basis: Vec<usize>,
}

impl Tableau {
    fn entering(&self) -> Option<usize> {
        self.costs.iter().position(|c| c.is_negative())
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, BigRational)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !row[col].is_positive() {
                continue;
            }
            let ratio = &self.rhs[r] / &row[col];
            let better = match &best {
                None => true,
                Some((b, best_ratio)) => {
                    ratio < *best_ratio || (ratio == *best_ratio && self.basis[r] < self.basis[*b])
                }
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    fn pivot(&mut self, p: usize, col: usize) {
        let inv = self.rows[p][col].recip();
        let nonzero: Vec<usize> = (0..self.rows[p].len())
            .filter(|&k| !self.rows[p][k].is_zero())
            .collect();
        for &k in &nonzero {
            self.rows[p][k] *= &inv;
        }
        self.rhs[p] *= &inv;

        let pivot_row = self.rows[p].clone();
        let pivot_rhs = self.rhs[p].clone();
        for r in 0..self.rows.len() {
            if r == p || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for &k in &nonzero {
                let delta = &factor * &pivot_row[k];
                self.rows[r][k] -= delta;
            }
            self.rhs[r] -= &factor * &pivot_rhs;
        }
        if !self.costs[col].is_zero() {
            let factor = self.costs[col].clone();
            for &k in &nonzero {
                let delta = &factor * &pivot_row[k];
                self.costs[k] -= delta;
            }
            self.neg_objective -= &factor * &pivot_rhs;
        }
        self.basis[p] = col;
    }
}

/// `matrix` is row-major with `m` rows of `n` entries; `rhs` has `m` entries.
pub fn phase_one(matrix: &[Vec<BigRational>], rhs: &[BigRational]) -> PhaseOne {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    assert_eq!(rhs.len(), m, "one right-hand side per row");

    // Negate rows with negative right-hand side so the artificial basis is feasible.
    let flipped: Vec<bool> = rhs.iter().map(Signed::is_negative).collect();
    let mut rows = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for r in 0..m {
        let sign = if flipped[r] {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        let mut row: Vec<BigRational> = matrix[r].iter().map(|v| v * &sign).collect();
        row.extend((0..m).map(|i| {
            if i == r {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        }));
        rows.push(row);
        b.push(&rhs[r] * &sign);
    }
    let mut costs: Vec<BigRational> = (0..n)
        .map(|j| -rows.iter().map(|row| &row[j]).sum::<BigRational>())
        .collect();
    costs.extend((0..m).map(|_| BigRational::zero()));
    let neg_objective = -b.iter().sum::<BigRational>();

    let mut t = Tableau {
        rows,
        rhs: b,
        costs,
        neg_objective,
        basis: (n..n + m).collect(),
    };
    while let Some(col) = t.entering() {
        let p = t
            .leaving(col)
            .expect("phase-1 objective is bounded below by zero");
        t.pivot(p, col);
    }

    if t.neg_objective.is_zero() {
        let mut x = vec![BigRational::zero(); n];
        for (r, &var) in t.basis.iter().enumerate() {
            if var < n {
                x[var] = t.rhs[r].clone();
            }
        }
        PhaseOne::Feasible(x)
    } else {
        // Reduced cost of artificial r is 1 - y_r.
        let y = (0..m)
            .map(|r| {
                let y = BigRational::one() - &t.costs[n + r];
                if flipped[r] {
                    -y
                } else {
                    y
                }
            })
            .collect();
        PhaseOne::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn matrix(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn feasible_system() {
        let a = matrix(&[&[1, 0, 1], &[0, 1, 1]]);
        let b = vec![q(2), q(3)];
        match phase_one(&a, &b) {
            PhaseOne::Feasible(x) => {
                assert!(x.iter().all(|v| !v.is_negative()));
                for (row, rhs) in a.iter().zip(&b) {
                    assert_eq!(&dot(row, &x), rhs);
                }
            }
            other => panic!("expected feasible, got {:?}", other),
        }
    }

    #[test]
    fn infeasible_system_has_farkas_vector() {
        // x1 + x2 = 1 and x1 + x2 = 2 cannot both hold
        let a = matrix(&[&[1, 1], &[1, 1]]);
        let b = vec![q(1), q(2)];
        match phase_one(&a, &b) {
            PhaseOne::Infeasible(y) => {
                assert!(dot(&y, &b).is_positive());
                for j in 0..2 {
                    let col: Vec<_> = a.iter().map(|r| r[j].clone()).collect();
                    assert!(!dot(&y, &col).is_positive());
                }
            }
            other => panic!("expected infeasible, got {:?}", other),
        }
    }

    #[test]
    fn no_columns() {
        let a: Vec<Vec<BigRational>> = vec![vec![], vec![]];
        assert!(matches!(
            phase_one(&a, &[q(0), q(1)]),
            PhaseOne::Infeasible(_)
        ));
        assert!(matches!(
            phase_one(&a, &[q(0), q(0)]),
            PhaseOne::Feasible(_)
        ));
    }

    #[test]
    fn negative_rhs_rows() {
        let a = matrix(&[&[-1, 0], &[0, 1]]);
        let b = vec![q(-2), q(1)];
        assert_eq!(phase_one(&a, &b), PhaseOne::Feasible(vec![q(2), q(1)]));
        let a = matrix(&[&[1, 0]]);
        match phase_one(&a, &[q(-1)]) {
            PhaseOne::Infeasible(y) => assert!(dot(&y, &[q(-1)]).is_positive()),
            other => panic!("expected infeasible, got {:?}", other),
        }
    }
}
