//! The elementary crystals `B_i = {b_i(n)}`, the one-point crystals `T_w`,
//! and finite tensor products of them. `None` stands for `−∞` in `ε`/`φ`.
//!
//! Tensor rule for `b₁ ⊗ b₂`:
//! `ε_i = max(ε_i(b₁), ε_i(b₂) − ⟨h_i, wt b₁⟩)`,
//! `φ_i = max(φ_i(b₂), φ_i(b₁) + ⟨h_i, wt b₂⟩)`;
//! `f̃_i` acts on `b₁` iff `φ_i(b₁) > ε_i(b₂)`, `ẽ_i` acts on `b₁` iff
//! `φ_i(b₁) ≥ ε_i(b₂)`.

use crate::rootdata::{CartanDatum, Weight};

/// `b_i(n)`: weight `n·α_i`, `ε_i = −n`, `φ_i = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryElement {
    pub node: usize,
    pub level: i64,
}

/// `t_w`: the single element of `T_w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TElement {
    pub wt: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Elementary(ElementaryElement),
    T(TElement),
}

impl Factor {
    pub fn wt(&self, rank: usize) -> Weight {
        match self {
            Factor::Elementary(b) => {
                let mut drop = vec![0; rank];
                drop[b.node] = -b.level;
                Weight::from_drop(drop)
            }
            Factor::T(t) => t.wt.clone(),
        }
    }

    pub fn epsilon(&self, i: usize) -> Option<i64> {
        match self {
            Factor::Elementary(b) if b.node == i => Some(-b.level),
            _ => None,
        }
    }

    pub fn phi(&self, i: usize) -> Option<i64> {
        match self {
            Factor::Elementary(b) if b.node == i => Some(b.level),
            _ => None,
        }
    }

    pub fn f(&self, i: usize) -> Option<Factor> {
        match self {
            Factor::Elementary(b) if b.node == i => {
                Some(Factor::Elementary(ElementaryElement { node: i, level: b.level - 1 }))
            }
            _ => None,
        }
    }

    pub fn e(&self, i: usize) -> Option<Factor> {
        match self {
            Factor::Elementary(b) if b.node == i => {
                Some(Factor::Elementary(ElementaryElement { node: i, level: b.level + 1 }))
            }
            _ => None,
        }
    }
}

/// `factors[0] ⊗ factors[1] ⊗ …`, associated to the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    pub factors: Vec<Factor>,
}

fn add(x: Option<i64>, y: i64) -> Option<i64> {
    x.map(|x| x + y)
}

impl TensorElement {
    pub fn new(factors: Vec<Factor>) -> Self {
        assert!(!factors.is_empty(), "tensor product needs a factor");
        TensorElement { factors }
    }

    fn tail(&self) -> TensorElement {
        TensorElement { factors: self.factors[1..].to_vec() }
    }

    pub fn wt(&self, rank: usize) -> Weight {
        let mut base = vec![0; rank];
        let mut drop = vec![0; rank];
        for f in &self.factors {
            let w = f.wt(rank);
            for k in 0..rank {
                base[k] += w.base[k];
                drop[k] += w.drop[k];
            }
        }
        Weight { base, drop }
    }

    pub fn epsilon(&self, cd: &CartanDatum, i: usize) -> Option<i64> {
        let head = &self.factors[0];
        if self.factors.len() == 1 {
            return head.epsilon(i);
        }
        let shift = -cd.pairing(i, &head.wt(cd.rank()));
        head.epsilon(i).max(add(self.tail().epsilon(cd, i), shift))
    }

    pub fn phi(&self, cd: &CartanDatum, i: usize) -> Option<i64> {
        let head = &self.factors[0];
        if self.factors.len() == 1 {
            return head.phi(i);
        }
        let tail = self.tail();
        let shift = cd.pairing(i, &tail.wt(cd.rank()));
        tail.phi(cd, i).max(add(head.phi(i), shift))
    }

    pub fn f(&self, cd: &CartanDatum, i: usize) -> Option<TensorElement> {
        let head = &self.factors[0];
        if self.factors.len() == 1 {
            return head.f(i).map(|h| TensorElement { factors: vec![h] });
        }
        let tail = self.tail();
        if head.phi(i) > tail.epsilon(cd, i) {
            let mut factors = vec![head.f(i)?];
            factors.extend(tail.factors);
            Some(TensorElement { factors })
        } else {
            let mut factors = vec![head.clone()];
            factors.extend(tail.f(cd, i)?.factors);
            Some(TensorElement { factors })
        }
    }

    pub fn e(&self, cd: &CartanDatum, i: usize) -> Option<TensorElement> {
        let head = &self.factors[0];
        if self.factors.len() == 1 {
            return head.e(i).map(|h| TensorElement { factors: vec![h] });
        }
        let tail = self.tail();
        if head.phi(i) >= tail.epsilon(cd, i) {
            let mut factors = vec![head.e(i)?];
            factors.extend(tail.factors);
            Some(TensorElement { factors })
        } else {
            let mut factors = vec![head.clone()];
            factors.extend(tail.e(cd, i)?.factors);
            Some(TensorElement { factors })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{fold, Automorphism, Quiver};

    fn b(node: usize, level: i64) -> Factor {
        Factor::Elementary(ElementaryElement { node, level })
    }

    #[test]
    fn elementary_tables() {
        let a2 = CartanDatum::builtin("A2").unwrap();
        let x = TensorElement::new(vec![b(0, 3)]);
        assert_eq!(x.epsilon(&a2, 0), Some(-3));
        assert_eq!(x.phi(&a2, 0), Some(3));
        assert_eq!(x.epsilon(&a2, 1), None);
        assert_eq!(x.wt(2).drop, vec![-3, 0]);
        assert_eq!(x.f(&a2, 0), Some(TensorElement::new(vec![b(0, 2)])));
        assert_eq!(x.f(&a2, 1), None);
    }

    #[test]
    fn t_element_is_inert() {
        let a2 = CartanDatum::builtin("A2").unwrap();
        let t = TensorElement::new(vec![Factor::T(TElement { wt: Weight::fundamental(2, 1) })]);
        for i in 0..2 {
            assert_eq!(t.epsilon(&a2, i), None);
            assert_eq!(t.phi(&a2, i), None);
            assert_eq!(t.f(&a2, i), None);
            assert_eq!(t.e(&a2, i), None);
        }
    }

    /// `B'_𝐢 = ⊗_{i∈𝐢} B_i` behaves like the elementary crystal of the orbit.
    #[test]
    fn orbit_tensor_is_elementary() {
        let a3 = CartanDatum::from_quiver(&Quiver::type_a(3));
        let q = Quiver::type_a(3);
        let fd = fold(&q, &Automorphism::flip_a(&q).unwrap()).unwrap();
        for (k, orbit) in fd.orbits().iter().enumerate() {
            for n in -3..=3 {
                let x = TensorElement::new(orbit.iter().map(|&i| b(i, n)).collect());
                for &i in orbit {
                    assert_eq!(x.phi(&a3, i), Some(n), "orbit {k}");
                    assert_eq!(x.epsilon(&a3, i), Some(-n));
                }
                let fx = orbit.iter().try_fold(x.clone(), |acc, &i| acc.f(&a3, i)).unwrap();
                assert_eq!(fx, TensorElement::new(orbit.iter().map(|&i| b(i, n - 1)).collect()));
                let ex = orbit.iter().try_fold(fx, |acc, &i| acc.e(&a3, i)).unwrap();
                assert_eq!(ex, x);
                for j in (0..3).filter(|j| !orbit.contains(j)) {
                    assert_eq!(x.f(&a3, j), None);
                    assert_eq!(x.e(&a3, j), None);
                }
            }
        }
    }

    #[test]
    fn tensor_with_shift() {
        // b_1(0) ⊗ t_{ω_1} in A_1: φ = 0 + 1, ε = 0
        let a1 = CartanDatum::builtin("A1").unwrap();
        let x = TensorElement::new(vec![b(0, 0), Factor::T(TElement { wt: Weight::fundamental(1, 0) })]);
        assert_eq!(x.phi(&a1, 0), Some(1));
        assert_eq!(x.epsilon(&a1, 0), Some(0));
        let fx = x.f(&a1, 0).unwrap();
        assert_eq!(fx.factors[0], b(0, -1));
        assert_eq!(fx.e(&a1, 0), Some(x));
    }
}
