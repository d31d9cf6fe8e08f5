use std::collections::VecDeque;

use crate::crystal::{CrystalGraph, GraphKind};
use crate::rootdata::{Automorphism, Weight};
use crate::{Error, Result};

/// The permutation `σ` of a crystal graph induced by a diagram
/// automorphism: `σ(b_0) = b_0` and `σ(f̃_i b) = f̃_{𝐚(i)} σ(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedAutomorphism {
    sigma: Vec<usize>,
    order: usize,
}

fn act_weight(a: &Automorphism, wt: &Weight) -> Weight {
    Weight { base: a.act(&wt.base), drop: a.act(&wt.drop) }
}

/// Propagates `σ` from the highest element and checks that it is a
/// well-defined bijection intertwining `f̃_i`, `ẽ_i`, `wt` and `ε` with
/// their `𝐚`-images, of order dividing the order of `𝐚`. The automorphism
/// need not be admissible.
pub fn induced_automorphism(g: &CrystalGraph, a: &Automorphism) -> Result<InducedAutomorphism> {
    let n = g.cartan().rank();
    if a.vertex_map().len() != n {
        return Err(Error::Shape(format!("automorphism acts on {} vertices, graph has rank {n}", a.vertex_map().len())));
    }
    for i in 0..n {
        for j in 0..n {
            if g.cartan().entry(i, j) != g.cartan().entry(a.vertex(i), a.vertex(j)) {
                return Err(Error::NotAutomorphism("vertex map does not preserve the Cartan matrix".into()));
            }
        }
    }
    if let GraphKind::HighestWeight { lambda } = g.kind() {
        if a.act(lambda) != *lambda {
            return Err(Error::NotInvariant(format!("highest weight {lambda:?}")));
        }
    }
    let order = a.order();
    if g.is_empty() {
        return Ok(InducedAutomorphism { sigma: Vec::new(), order });
    }
    let broken = |msg: String| Error::Invariant(format!("induced automorphism: {msg}"));

    let mut sigma: Vec<Option<usize>> = vec![None; g.len()];
    let mut taken = vec![false; g.len()];
    let h = g.highest();
    sigma[h] = Some(h);
    taken[h] = true;
    let mut queue = VecDeque::from([h]);
    while let Some(b) = queue.pop_front() {
        let c = sigma[b].expect("queued elements are mapped");
        for i in 0..n {
            match (g.f_edge(b, i), g.f_edge(c, a.vertex(i))) {
                (None, None) => {}
                (Some(b2), Some(c2)) => match sigma[b2] {
                    Some(x) if x != c2 => {
                        return Err(broken(format!("{} reached with two images", g.vertex(b2).id)))
                    }
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut taken[c2], true) {
                            return Err(broken(format!("{} has two preimages", g.vertex(c2).id)));
                        }
                        sigma[b2] = Some(c2);
                        queue.push_back(b2);
                    }
                },
                _ => return Err(broken(format!("f̃ edge mismatch at {} node {i}", g.vertex(b).id))),
            }
        }
    }
    let sigma: Vec<usize> = sigma
        .into_iter()
        .enumerate()
        .map(|(b, s)| s.ok_or_else(|| broken(format!("{} unreachable from the highest element", g.vertex(b).id))))
        .collect::<Result<_>>()?;

    for b in 0..g.len() {
        let (vb, vc) = (g.vertex(b), g.vertex(sigma[b]));
        if vc.wt != act_weight(a, &vb.wt) {
            return Err(broken(format!("wt(σ b) ≠ 𝐚(wt b) at {}", vb.id)));
        }
        for i in 0..n {
            if vc.eps[a.vertex(i)] != vb.eps[i] {
                return Err(broken(format!("ε_𝐚(i)(σ b) ≠ ε_i(b) at {}", vb.id)));
            }
            if g.e_edge(sigma[b], a.vertex(i)) != g.e_edge(b, i).map(|p| sigma[p]) {
                return Err(broken(format!("ẽ edge mismatch at {} node {i}", vb.id)));
            }
        }
    }
    let mut power: Vec<usize> = (0..g.len()).collect();
    for _ in 0..order {
        power = power.iter().map(|&b| sigma[b]).collect();
    }
    if power.iter().enumerate().any(|(b, &c)| b != c) {
        return Err(broken(format!("σ^{order} is not the identity")));
    }
    Ok(InducedAutomorphism { sigma, order })
}

impl InducedAutomorphism {
    pub fn apply(&self, b: usize) -> usize {
        self.sigma[b]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(b, &c)| b == c)
    }

    /// Elements with `σ(b) = b`, in graph order.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.sigma.len()).filter(|&b| self.sigma[b] == b).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate_binfinity, generate_blambda};
    use crate::rootdata::{CartanDatum, Quiver};

    #[test]
    fn a3_middle_weight_has_four_fixed_points() {
        let q = Quiver::type_a(3);
        let g = generate_blambda(&CartanDatum::from_quiver(&q), &[0, 1, 0], None).unwrap();
        let ia = induced_automorphism(&g, &Automorphism::flip_a(&q).unwrap()).unwrap();
        assert_eq!(ia.fixed_points().len(), 4);
        assert_eq!(ia.order(), 2);
    }

    #[test]
    fn identity_induces_identity() {
        let q = Quiver::type_d(4).unwrap();
        let g = generate_blambda(&CartanDatum::from_quiver(&q), &[0, 1, 0, 0], None).unwrap();
        assert!(induced_automorphism(&g, &Automorphism::identity(&q)).unwrap().is_identity());
    }

    #[test]
    fn non_admissible_swap_on_a2() {
        let q = Quiver::type_a(2);
        let g = generate_binfinity(&CartanDatum::from_quiver(&q), 2);
        let swap = Automorphism::parse(&q, "1:2,2:1").unwrap();
        let ia = induced_automorphism(&g, &swap).unwrap();
        let f1 = g.f_edge(g.highest(), 0).unwrap();
        let f2 = g.f_edge(g.highest(), 1).unwrap();
        assert_eq!((ia.apply(f1), ia.apply(f2)), (f2, f1));
    }

    #[test]
    fn non_invariant_weight_is_rejected() {
        let q = Quiver::type_a(3);
        let g = generate_blambda(&CartanDatum::from_quiver(&q), &[1, 0, 0], None).unwrap();
        let err = induced_automorphism(&g, &Automorphism::flip_a(&q).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotInvariant(_)));
    }

    #[test]
    fn triality_on_adjoint() {
        let q = Quiver::type_d(4).unwrap();
        let g = generate_blambda(&CartanDatum::from_quiver(&q), &[0, 1, 0, 0], None).unwrap();
        let ia = induced_automorphism(&g, &Automorphism::triality(&q).unwrap()).unwrap();
        assert_eq!(g.len(), 28);
        assert_eq!(ia.fixed_points().len(), 7);
    }
}
