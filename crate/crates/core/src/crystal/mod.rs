//! Crystals: the sequence realization of `B(∞)`, highest-weight crystals
//! cut out of `B(∞) ⊗ T_λ`, and the [`CrystalGraph`] exchanged between
//! modules (axiom checks, characters, isomorphism, JSON and DOT).

mod elementary;
mod generate;
mod graph;
mod seq;

use std::collections::HashMap;
use std::hash::Hash;

pub use elementary::{ElementaryElement, Factor, TElement, TensorElement};
pub use generate::{generate_binfinity, generate_blambda};
pub use graph::{character, isomorphic, AxiomReport, CrystalGraph, Edge, FoldingBlock, GraphKind, Rule, Vertex, Violation};
pub use seq::{seq_e, seq_epsilon, seq_f, BInfinity, HighestWeightModel, SeqElement};

use crate::rootdata::{CartanDatum, Weight};

/// A crystal given by its operators. `None` is the absent element `0`.
pub trait Crystal {
    type Elem: Clone + Eq + Hash;

    fn cartan(&self) -> &CartanDatum;
    fn highest(&self) -> Self::Elem;
    fn f(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn e(&self, b: &Self::Elem, i: usize) -> Option<Self::Elem>;
    fn epsilon(&self, b: &Self::Elem, i: usize) -> i64;
    fn phi(&self, b: &Self::Elem, i: usize) -> i64;
    fn wt(&self, b: &Self::Elem) -> Weight;
    /// Stable textual id.
    fn id(&self, b: &Self::Elem) -> String;
}

/// Breadth-first closure under the `f̃_i` from the highest element, up to
/// `max_depth` applications. Elements appear in discovery order (levels in
/// order, nodes in index order), which is independent of scheduling.
pub fn explore<C: Crystal>(c: &C, max_depth: Option<usize>, kind: GraphKind) -> CrystalGraph {
    let n = c.cartan().rank();
    let mut index: HashMap<C::Elem, usize> = HashMap::new();
    let mut elems = vec![c.highest()];
    index.insert(c.highest(), 0);
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() && max_depth.is_none_or(|d| depth < d) {
        let mut next = Vec::new();
        for &b in &frontier {
            for i in 0..n {
                if let Some(fb) = c.f(&elems[b], i) {
                    let dst = *index.entry(fb.clone()).or_insert_with(|| {
                        elems.push(fb);
                        next.push(elems.len() - 1);
                        elems.len() - 1
                    });
                    edges.push(Edge { src: b, node: i, dst });
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    let vertices = elems
        .iter()
        .map(|b| Vertex {
            id: c.id(b),
            wt: c.wt(b),
            eps: (0..n).map(|i| c.epsilon(b, i)).collect(),
            phi: (0..n).map(|i| c.phi(b, i)).collect(),
        })
        .collect();
    CrystalGraph::new(c.cartan().clone(), kind, vertices, edges, 0).expect("explored graph is well formed")
}
