//! `B(∞)` as finitely supported sequences `(…, a_2, a_1)` relative to the
//! cyclic word `ι = (…, 2, 1, n, …, 2, 1)`: slot `k` (1-based) carries node
//! `(k − 1) mod n`.
//!
//! With `σ_k(a) = a_k + Σ_{l>k} ⟨h_{i_k}, α_{i_l}⟩ a_l`:
//! `ε_i(a) = max{σ_k : i_k = i}`, `f̃_i` raises `a_k` at the smallest slot
//! attaining the maximum and `ẽ_i` lowers it at the largest (when the
//! maximum is positive). Slots beyond the support have `σ_k = 0`, so it is
//! enough to look `n` slots past the last nonzero entry.

use super::Crystal;
use crate::rootdata::{CartanDatum, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqElement {
    /// `a[k]` is the value at slot `k + 1`; no trailing zeros.
    a: Vec<u64>,
}

impl SeqElement {
    pub fn zero() -> Self {
        SeqElement { a: Vec::new() }
    }

    pub fn from_slots(mut a: Vec<u64>) -> Self {
        while a.last() == Some(&0) {
            a.pop();
        }
        SeqElement { a }
    }

    pub fn slots(&self) -> &[u64] {
        &self.a
    }

    /// Total number of `f̃` applications from the zero sequence.
    pub fn height(&self) -> u64 {
        self.a.iter().sum()
    }

    /// Canonical id: sorted `slot:value` pairs over the support.
    pub fn id(&self) -> String {
        let parts: Vec<String> =
            self.a.iter().enumerate().filter(|(_, &v)| v > 0).map(|(k, v)| format!("{}:{v}", k + 1)).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn weight(&self, rank: usize) -> Weight {
        let mut drop = vec![0i64; rank];
        for (k, &v) in self.a.iter().enumerate() {
            drop[k % rank] += v as i64;
        }
        Weight::from_drop(drop)
    }
}

/// `σ_k` for slots `0..len` (0-based), where `len` covers the support plus
/// one full period of the word.
fn sigmas(cd: &CartanDatum, a: &[u64]) -> Vec<i64> {
    let n = cd.rank();
    let len = a.len() + n;
    let mut acc = vec![0i64; n];
    let mut out = vec![0i64; len];
    for k in (0..len).rev() {
        let node = k % n;
        let ak = a.get(k).copied().unwrap_or(0) as i64;
        out[k] = ak + acc[node];
        if ak != 0 {
            for (m, slot) in acc.iter_mut().enumerate() {
                *slot += cd.entry(m, node) * ak;
            }
        }
    }
    out
}

pub fn seq_epsilon(cd: &CartanDatum, b: &SeqElement, i: usize) -> i64 {
    let n = cd.rank();
    sigmas(cd, &b.a).into_iter().enumerate().filter(|(k, _)| k % n == i).map(|(_, s)| s).max().unwrap_or(0)
}

/// `f̃_i` on the sequence model; never absent.
pub fn seq_f(cd: &CartanDatum, b: &SeqElement, i: usize) -> SeqElement {
    let n = cd.rank();
    let s = sigmas(cd, &b.a);
    let max = s.iter().enumerate().filter(|(k, _)| k % n == i).map(|(_, &v)| v).max().expect("slot for every node");
    let k = (0..s.len()).find(|&k| k % n == i && s[k] == max).expect("argmax exists");
    let mut a = b.a.clone();
    if a.len() <= k {
        a.resize(k + 1, 0);
    }
    a[k] += 1;
    SeqElement { a }
}

/// `ẽ_i` on the sequence model; absent when `ε_i = 0`.
pub fn seq_e(cd: &CartanDatum, b: &SeqElement, i: usize) -> Option<SeqElement> {
    let n = cd.rank();
    let s = sigmas(cd, &b.a);
    let max = s.iter().enumerate().filter(|(k, _)| k % n == i).map(|(_, &v)| v).max()?;
    if max <= 0 {
        return None;
    }
    let k = (0..s.len()).rev().find(|&k| k % n == i && s[k] == max)?;
    let mut a = b.a.clone();
    a[k] -= 1;
    Some(SeqElement::from_slots(a))
}

/// `B(∞)` realized on sequences.
#[derive(Clone, Debug)]
pub struct BInfinity {
    cartan: CartanDatum,
}

impl BInfinity {
    pub fn new(cartan: CartanDatum) -> Self {
        BInfinity { cartan }
    }
}

impl Crystal for BInfinity {
    type Elem = SeqElement;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn highest(&self) -> SeqElement {
        SeqElement::zero()
    }

    fn f(&self, b: &SeqElement, i: usize) -> Option<SeqElement> {
        Some(seq_f(&self.cartan, b, i))
    }

    fn e(&self, b: &SeqElement, i: usize) -> Option<SeqElement> {
        seq_e(&self.cartan, b, i)
    }

    fn epsilon(&self, b: &SeqElement, i: usize) -> i64 {
        seq_epsilon(&self.cartan, b, i)
    }

    fn phi(&self, b: &SeqElement, i: usize) -> i64 {
        self.epsilon(b, i) + self.cartan.pairing(i, &self.wt(b))
    }

    fn wt(&self, b: &SeqElement) -> Weight {
        b.weight(self.cartan.rank())
    }

    fn id(&self, b: &SeqElement) -> String {
        b.id()
    }
}

/// `B(λ)` as the part of `B(∞) ⊗ T_λ` surviving the projection: `f̃_i` is
/// applied only while `φ_i = ε_i + ⟨h_i, wt + λ⟩` is positive.
#[derive(Clone, Debug)]
pub struct HighestWeightModel {
    inner: BInfinity,
    lambda: Vec<i64>,
}

impl HighestWeightModel {
    pub fn new(cartan: CartanDatum, lambda: Vec<i64>) -> Self {
        assert_eq!(lambda.len(), cartan.rank());
        HighestWeightModel { inner: BInfinity::new(cartan), lambda }
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }
}

impl Crystal for HighestWeightModel {
    type Elem = SeqElement;

    fn cartan(&self) -> &CartanDatum {
        self.inner.cartan()
    }

    fn highest(&self) -> SeqElement {
        SeqElement::zero()
    }

    fn f(&self, b: &SeqElement, i: usize) -> Option<SeqElement> {
        (self.phi(b, i) > 0).then(|| seq_f(self.cartan(), b, i))
    }

    fn e(&self, b: &SeqElement, i: usize) -> Option<SeqElement> {
        self.inner.e(b, i)
    }

    fn epsilon(&self, b: &SeqElement, i: usize) -> i64 {
        self.inner.epsilon(b, i)
    }

    fn phi(&self, b: &SeqElement, i: usize) -> i64 {
        self.epsilon(b, i) + self.cartan().pairing(i, &self.wt(b))
    }

    fn wt(&self, b: &SeqElement) -> Weight {
        Weight { base: self.lambda.clone(), drop: b.weight(self.cartan().rank()).drop }
    }

    fn id(&self, b: &SeqElement) -> String {
        b.id()
    }
}
