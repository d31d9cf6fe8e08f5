use std::collections::{BTreeSet, HashMap};

use super::CartanDatum;
use crate::{Error, Result};

/// Positive roots of a finite-type datum by root-string closure, sorted by
/// height and then lexicographically.
///
/// For a positive root `β` and node `i`, let `p` be the largest integer with
/// `β − pα_i` a root; then `β + α_i` is a root iff `p − ⟨h_i, β⟩ > 0`.
pub fn positive_roots(cd: &CartanDatum) -> Result<Vec<Vec<i64>>> {
    if !cd.is_finite_type() {
        return Err(Error::NotFiniteType);
    }
    let n = cd.rank();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while !level.is_empty() {
        roots.extend(level.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - cd.pairing_root(i, beta) > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
    }
    let mut out: Vec<Vec<i64>> = roots.into_iter().collect();
    out.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    Ok(out)
}

/// Number of multisets of positive roots summing to `beta`: the dimension
/// of the `−beta` weight space of `U^-`.
pub fn kostant_count(cd: &CartanDatum, beta: &[i64]) -> Result<u64> {
    let roots = positive_roots(cd)?;
    Ok(KostantCounter::new(roots).count(beta))
}

/// Memoized Kostant partition function over a fixed root list.
pub struct KostantCounter {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(Vec<i64>, usize), u64>,
}

impl KostantCounter {
    pub fn new(roots: Vec<Vec<i64>>) -> Self {
        KostantCounter { roots, memo: HashMap::new() }
    }

    pub fn for_cartan(cd: &CartanDatum) -> Result<Self> {
        Ok(Self::new(positive_roots(cd)?))
    }

    pub fn count(&mut self, beta: &[i64]) -> u64 {
        if beta.iter().any(|&b| b < 0) {
            return 0;
        }
        self.count_from(beta.to_vec(), 0)
    }

    // multisets using roots[k..] only
    fn count_from(&mut self, beta: Vec<i64>, k: usize) -> u64 {
        if beta.iter().all(|&b| b == 0) {
            return 1;
        }
        if k == self.roots.len() {
            return 0;
        }
        if let Some(&c) = self.memo.get(&(beta.clone(), k)) {
            return c;
        }
        let mut total = 0;
        let mut rest = beta.clone();
        loop {
            total += self.count_from(rest.clone(), k + 1);
            for (r, x) in rest.iter_mut().zip(&self.roots[k]) {
                *r -= x;
            }
            if rest.iter().any(|&b| b < 0) {
                break;
            }
        }
        self.memo.insert((beta, k), total);
        total
    }
}
