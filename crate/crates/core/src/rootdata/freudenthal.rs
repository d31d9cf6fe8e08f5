use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{positive_roots, CartanDatum, Weight};
use crate::{Error, Result};

fn check_dominant(cd: &CartanDatum, lambda: &[i64]) -> Result<()> {
    if lambda.len() != cd.rank() {
        return Err(Error::Shape(format!("weight has {} entries, rank is {}", lambda.len(), cd.rank())));
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    Ok(())
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion.
///
/// Weights are `λ − β` with `β` in the positive root cone, and the form is
/// `(α_i, α_j) = d_i c_ij`, `(ω_i, α_j) = δ_ij d_j`. Levels are filled by
/// increasing height of `β`; every non-highest weight has a weight one
/// simple root above it, so the first empty level ends the recursion.
pub fn freudenthal(cd: &CartanDatum, lambda: &[i64]) -> Result<BTreeMap<Weight, u64>> {
    check_dominant(cd, lambda)?;
    let roots = positive_roots(cd)?;
    let n = cd.rank();
    let d = cd.symmetrizer();
    let form = cd.form();
    let dot = |x: &[i64], y: &[i64]| -> i64 {
        (0..n).map(|i| (0..n).map(|j| x[i] * form[i][j] * y[j]).sum::<i64>()).sum()
    };
    // (λ, γ) for γ in the root lattice
    let lam_dot = |g: &[i64]| -> i64 { (0..n).map(|i| lambda[i] * d[i] * g[i]).sum() };
    let rho_dot = |g: &[i64]| -> i64 { (0..n).map(|i| d[i] * g[i]).sum() };

    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    mult.insert(vec![0; n], 1);
    let mut level = vec![vec![0i64; n]];
    loop {
        let mut candidates: Vec<Vec<i64>> = level
            .iter()
            .flat_map(|b| {
                (0..n).map(move |i| {
                    let mut c = b.clone();
                    c[i] += 1;
                    c
                })
            })
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for beta in candidates {
            let mut numer = 0i64;
            for alpha in &roots {
                let mut k = 1;
                loop {
                    let gamma: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - k * a).collect();
                    if gamma.iter().any(|&g| g < 0) {
                        break;
                    }
                    if let Some(&m) = mult.get(&gamma) {
                        // (λ − γ, α)
                        numer += m * (lam_dot(alpha) - dot(&gamma, alpha));
                    }
                    k += 1;
                }
            }
            numer *= 2;
            if numer == 0 {
                continue;
            }
            // 2(λ+ρ, β) − (β, β)
            let denom = 2 * (lam_dot(&beta) + rho_dot(&beta)) - dot(&beta, &beta);
            if denom <= 0 || numer % denom != 0 {
                return Err(Error::Invariant(format!("Freudenthal quotient {numer}/{denom} at {beta:?}")));
            }
            let m = numer / denom;
            if m > 0 {
                mult.insert(beta.clone(), m);
                next.push(beta);
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(mult
        .into_iter()
        .map(|(beta, m)| (Weight { base: lambda.to_vec(), drop: beta }, m as u64))
        .collect())
}

/// `dim V(λ) = Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(cd: &CartanDatum, lambda: &[i64]) -> Result<u64> {
    check_dominant(cd, lambda)?;
    let roots = positive_roots(cd)?;
    let d = cd.symmetrizer();
    let mut prod = BigRational::one();
    for alpha in &roots {
        let num: i64 = alpha.iter().enumerate().map(|(i, &a)| (lambda[i] + 1) * d[i] * a).sum();
        let den: i64 = alpha.iter().enumerate().map(|(i, &a)| d[i] * a).sum();
        prod *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    if !prod.is_integer() || prod <= BigRational::zero() {
        return Err(Error::Invariant(format!("Weyl product {prod} is not a positive integer")));
    }
    prod.to_integer().to_u64().ok_or(Error::Overflow)
}
