//! Slow, independent routes to Schur expansions.
//!
//! [`expand_product_oracle`] multiplies explicit polynomials and converts the
//! result back with the Kostka matrix; [`jacobi_trudi_check`] expands the
//! Jacobi-Trudi determinant through `h_mu = sum K_{lambda,mu} s_lambda`.
//! Neither touches the LR counting code.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::vector::SchurVector;
use crate::error::{Error, Result};
use crate::multiset::PartitionMultiset;
use crate::partition::{enumerate_partitions, Partition};
use crate::tableau::{enumerate_ssyt_bounded, kostka};

pub const DEFAULT_ORACLE_BOUND: u32 = 8;

type Monomial = Vec<u8>;

#[derive(Clone, Debug)]
struct Polynomial {
    terms: HashMap<Monomial, BigInt>,
}

impl Polynomial {
    fn one(vars: usize) -> Self {
        Polynomial {
            terms: HashMap::from([(vec![0; vars], BigInt::one())]),
        }
    }

    /// `s_lambda` in `vars` variables, summed over its SSYT.
    fn schur(lambda: &Partition, vars: usize) -> Self {
        let mut terms: HashMap<Monomial, BigInt> = HashMap::new();
        for t in enumerate_ssyt_bounded(lambda, vars as u32) {
            let mut exps = vec![0u8; vars];
            for &v in t.rows().iter().flatten() {
                exps[v as usize - 1] += 1;
            }
            *terms.entry(exps).or_insert_with(BigInt::zero) += 1;
        }
        Polynomial { terms }
    }

    fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut terms: HashMap<Monomial, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms }
    }

    fn coefficient(&self, exps: &[u8]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Converts monomial-basis coefficients (indexed by partitions of `n`) to the
/// Schur basis by back-substitution against the unitriangular Kostka matrix.
fn monomial_to_schur(
    n: u32,
    max_len: Option<usize>,
    mut monomial_coeff: impl FnMut(&Partition) -> BigInt,
) -> Result<SchurVector> {
    // Descending lexicographic order extends dominance, so every lambda with
    // K_{lambda,mu} != 0 and lambda != mu is handled before mu.
    let shapes = enumerate_partitions(n, max_len);
    let mut solved: Vec<(Partition, BigInt)> = Vec::new();
    let mut out = SchurVector::zero(n);
    for mu in &shapes {
        let mut a = monomial_coeff(mu);
        for (lambda, c) in &solved {
            let k = kostka(lambda, mu)?;
            if k > 0 {
                a -= c * BigInt::from(k);
            }
        }
        if !a.is_zero() {
            out.add_term(mu.clone(), a.clone())?;
            solved.push((mu.clone(), a));
        }
    }
    Ok(out)
}

/// Schur expansion of `s_A` computed by explicit polynomial multiplication.
pub fn expand_product_oracle(a: &PartitionMultiset, bound: u32) -> Result<SchurVector> {
    let n = a.total_weight();
    if n > bound {
        return Err(Error::BoundExceeded { degree: n, bound });
    }
    // Every s_lambda in the product has at most as many parts as A has in
    // total, and s_lambda is determined by its restriction to that many
    // variables.
    let vars = a.entries().iter().map(|p| p.len()).sum::<usize>().max(1);
    let product = a.entries().iter().fold(Polynomial::one(vars), |acc, p| {
        acc.mul(&Polynomial::schur(p, vars))
    });
    monomial_to_schur(n, Some(vars), |mu| {
        let mut exps: Vec<u8> = mu.parts().iter().map(|&p| p as u8).collect();
        exps.resize(vars, 0);
        product.coefficient(&exps)
    })
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inversions = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// Schur expansion of `det(h_{lambda_i + j - i})`.
pub fn jacobi_trudi_expansion(lambda: &Partition) -> Result<SchurVector> {
    let n = lambda.weight();
    let k = lambda.len();
    let shapes = enumerate_partitions(n, None);
    let mut h_products: HashMap<Partition, BigInt> = HashMap::new();
    for (perm, sign) in permutations_with_sign(k) {
        let mut indices = Vec::with_capacity(k);
        let mut vanishes = false;
        for (i, &j) in perm.iter().enumerate() {
            let idx = lambda.part(i) as i64 + j as i64 - i as i64;
            if idx < 0 {
                vanishes = true;
                break;
            }
            indices.push(idx as u32);
        }
        if !vanishes {
            *h_products
                .entry(Partition::from_unsorted(indices))
                .or_insert_with(BigInt::zero) += sign;
        }
    }
    let mut out = SchurVector::zero(n);
    for (mu, c) in h_products {
        if c.is_zero() {
            continue;
        }
        for shape in &shapes {
            let kn = kostka(shape, &mu)?;
            if kn > 0 {
                out.add_term(shape.clone(), &c * BigInt::from(kn))?;
            }
        }
    }
    Ok(out)
}

/// True iff the Jacobi-Trudi determinant for `lambda` expands to exactly `s_lambda`.
pub fn jacobi_trudi_check(lambda: &Partition, bound: u32) -> Result<bool> {
    if lambda.weight() > bound {
        return Err(Error::BoundExceeded {
            degree: lambda.weight(),
            bound,
        });
    }
    Ok(jacobi_trudi_expansion(lambda)? == SchurVector::basis(lambda.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        assert_eq!(
            expand_product_oracle(&mset![[1]], 8).unwrap(),
            SchurVector::basis(part![1])
        );
        assert_eq!(
            expand_product_oracle(&mset![[2, 1]], 8).unwrap(),
            SchurVector::basis(part![2, 1])
        );
        let v = expand_product_oracle(&mset![[1], [1], [1]], 8).unwrap();
        assert_eq!(v.coefficient(&part![2, 1]), BigInt::from(2));
        assert_eq!(v.support_len(), 3);
        assert!(matches!(
            expand_product_oracle(&mset![[9]], 8),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert!(jacobi_trudi_check(&part![2, 1], 8).unwrap());
        assert!(jacobi_trudi_check(&part![1, 1], 8).unwrap());
        assert!(jacobi_trudi_check(&part![4], 8).unwrap());
        assert!(jacobi_trudi_check(&Partition::empty(), 8).unwrap());
        assert!(jacobi_trudi_check(&part![5, 4], 8).is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|p| p.1).sum::<i32>(), 0);
    }
}
