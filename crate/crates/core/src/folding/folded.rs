use std::collections::HashMap;

use indexmap::IndexMap;

use super::{orbit_f, InducedAutomorphism};
use crate::crystal::{BInfinity, Crystal, CrystalGraph, Edge, FoldingBlock, GraphKind, HighestWeightModel, Vertex};
use crate::rootdata::{FoldedDatum, Weight};
use crate::{Error, Result};

/// Truncation of a folded `B(∞)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightBound {
    /// Height in the source: `Σ_𝐢 d_𝐢 · drop_𝐢 ≤ D`.
    Source(usize),
    /// Height in the target: `Σ_𝐢 drop_𝐢 ≤ D`.
    Folded(usize),
}

impl HeightBound {
    fn scale(&self, fd: &FoldedDatum) -> Vec<i64> {
        match self {
            HeightBound::Source(_) => (0..fd.orbits().len()).map(|k| fd.d(k)).collect(),
            HeightBound::Folded(_) => vec![1; fd.orbits().len()],
        }
    }

    fn depth(&self) -> usize {
        match *self {
            HeightBound::Source(d) | HeightBound::Folded(d) => d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldMode {
    /// The source is a complete `B(λ)` with `𝐚`-invariant `λ`.
    HighestWeight,
    Infinity(HeightBound),
}

/// The subcrystal generated by the orbit operators `f̃_𝐢`, relabelled over
/// the orbit set. Vertex ids are the source ids.
#[derive(Clone, Debug)]
pub struct FoldedCrystal {
    graph: CrystalGraph,
    block: FoldingBlock,
}

impl FoldedCrystal {
    pub fn graph(&self) -> &CrystalGraph {
        &self.graph
    }

    pub fn into_graph(self) -> CrystalGraph {
        self.graph
    }

    pub fn folding(&self) -> &FoldingBlock {
        &self.block
    }

    /// Source ids of the elements, in graph order.
    pub fn ids(&self) -> Vec<&str> {
        self.graph.vertices().iter().map(|v| v.id.as_str()).collect()
    }

    /// Records `σ` on the source graph for the JSON block.
    pub fn with_sigma(mut self, source: &CrystalGraph, ia: &InducedAutomorphism) -> Self {
        let sigma: IndexMap<String, String> = (0..source.len())
            .map(|b| (source.vertex(b).id.clone(), source.vertex(ia.apply(b)).id.clone()))
            .collect();
        self.block.sigma = Some(sigma);
        self
    }

    pub fn to_json_string(&self) -> String {
        self.graph.to_json_string(Some(&self.block))
    }
}

/// Breadth-first closure of the source's highest element under the
/// `f̃_𝐢`. `ε_𝐢` is read off one representative and checked on the whole
/// orbit; `φ_𝐢 = ε_𝐢 + ⟨h_𝐢, wt⟩` with `h_𝐢` the orbit average.
pub fn folded_crystal<C: Crystal>(
    source: &C,
    fd: &FoldedDatum,
    mode: FoldMode,
    source_ref: &str,
) -> Result<FoldedCrystal> {
    if source.cartan().matrix() != fd.source_cartan().matrix() {
        return Err(Error::Shape("source crystal is not over the folded quiver".into()));
    }
    let orbits = fd.orbits();
    let m = orbits.len();
    let top = source.highest();
    let top_wt = fd.fold_weight(&source.wt(&top))?;
    let (kind, bound) = match mode {
        FoldMode::HighestWeight => (GraphKind::HighestWeight { lambda: top_wt.base.clone() }, None),
        FoldMode::Infinity(bound) => {
            if top_wt.base.iter().any(|&x| x != 0) {
                return Err(Error::Shape("infinity mode needs a source of highest weight 0".into()));
            }
            (GraphKind::Infinity { depth: bound.depth(), height_scale: bound.scale(fd) }, Some(bound))
        }
    };
    let within = |wt: &Weight| -> bool {
        bound.is_none_or(|b| {
            let scale = b.scale(fd);
            wt.drop.iter().zip(&scale).map(|(d, s)| d * s).sum::<i64>() <= b.depth() as i64
        })
    };

    let mut elems = vec![top.clone()];
    let mut weights = vec![top_wt];
    let mut index: HashMap<C::Elem, usize> = HashMap::from([(top, 0)]);
    let mut edges = Vec::new();
    let mut cursor = 0;
    while cursor < elems.len() {
        for (k, orbit) in orbits.iter().enumerate() {
            let Some(next) = orbit_f(source, &elems[cursor], orbit)? else { continue };
            let dst = match index.get(&next) {
                Some(&dst) => dst,
                None => {
                    let wt = fd.fold_weight(&source.wt(&next)).map_err(|_| {
                        Error::Invariant(format!("{} has a weight that is not 𝐚-invariant", source.id(&next)))
                    })?;
                    if !within(&wt) {
                        continue;
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                    weights.push(wt);
                    elems.len() - 1
                }
            };
            edges.push(Edge { src: cursor, node: k, dst });
        }
        cursor += 1;
    }

    let vertices = elems
        .iter()
        .zip(weights)
        .map(|(b, wt)| {
            let source_wt = source.wt(b);
            let mut eps = Vec::with_capacity(m);
            let mut phi = Vec::with_capacity(m);
            for (k, orbit) in orbits.iter().enumerate() {
                let e = source.epsilon(b, orbit[0]);
                if let Some(&j) = orbit.iter().find(|&&j| source.epsilon(b, j) != e) {
                    return Err(Error::Invariant(format!(
                        "ε differs across orbit {k} at {} (vertices {} and {})",
                        source.id(b),
                        orbit[0],
                        j
                    )));
                }
                eps.push(e);
                phi.push(e + fd.lifted_pairing(k, &source_wt)?);
            }
            Ok(Vertex { id: source.id(b), wt, eps, phi })
        })
        .collect::<Result<Vec<_>>>()?;
    let graph = CrystalGraph::new(fd.cartan().clone(), kind, vertices, edges, 0)?;
    let names = fd.source().names();
    let block = FoldingBlock {
        orbits: orbits.iter().map(|o| o.iter().map(|&i| names[i].clone()).collect()).collect(),
        source_graph_ref: source_ref.to_string(),
        sigma: None,
    };
    Ok(FoldedCrystal { graph, block })
}

/// Folds `B(λ)` of the source, with `λ` given over the orbit set.
pub fn fold_blambda(fd: &FoldedDatum, lambda: &[i64]) -> Result<FoldedCrystal> {
    let lifted = fd.unfold_vector(lambda)?;
    if lifted.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let source = HighestWeightModel::new(fd.source_cartan().clone(), lifted.clone());
    let joined = lifted.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
    folded_crystal(&source, fd, FoldMode::HighestWeight, &format!("blambda:{joined}"))
}

/// Folds `B(∞)` of the source up to the given height bound.
pub fn fold_binfinity(fd: &FoldedDatum, bound: HeightBound) -> Result<FoldedCrystal> {
    let source = BInfinity::new(fd.source_cartan().clone());
    let reference = match bound {
        HeightBound::Source(d) => format!("binfinity:source-height<={d}"),
        HeightBound::Folded(d) => format!("binfinity:folded-height<={d}"),
    };
    folded_crystal(&source, fd, FoldMode::Infinity(bound), &reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate_blambda, isomorphic};
    use crate::rootdata::{builtin_fold, fold, Automorphism, CartanDatum, Quiver};

    #[test]
    fn a3_to_b2_spin() {
        let fd = builtin_fold("B2").unwrap();
        let fc = fold_blambda(&fd, &[0, 1]).unwrap();
        let labels: Vec<usize> = fc.graph().edges().iter().map(|e| e.node).collect();
        assert_eq!(labels, vec![1, 0, 1]);
        assert!(fc.graph().verify_axioms().is_clean());
    }

    #[test]
    fn identity_fold_reproduces_the_source() {
        let q = Quiver::type_a(3);
        let fd = fold(&q, &Automorphism::identity(&q)).unwrap();
        let fc = fold_blambda(&fd, &[1, 1, 0]).unwrap();
        let direct = generate_blambda(&CartanDatum::from_quiver(&q), &[1, 1, 0], None).unwrap();
        assert_eq!(fc.graph().len(), direct.len());
        assert!(isomorphic(fc.graph(), &direct).unwrap().is_some());
        let ids: Vec<&str> = direct.vertices().iter().map(|v| v.id.as_str()).collect();
        assert_eq!(fc.ids(), ids);
    }

    #[test]
    fn d4_adjoint_to_g2() {
        let fd = builtin_fold("G2").unwrap();
        // node 1 is the leaf orbit, node 2 the center
        let fc = fold_blambda(&fd, &[0, 1]).unwrap();
        assert_eq!(fc.graph().len(), 7);
        assert!(fc.graph().verify_axioms().is_clean());
    }

    #[test]
    fn non_invariant_lambda_cannot_be_expressed() {
        let fd = builtin_fold("B2").unwrap();
        let source = HighestWeightModel::new(fd.source_cartan().clone(), vec![1, 0, 0]);
        assert!(matches!(
            folded_crystal(&source, &fd, FoldMode::HighestWeight, "x"),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn json_carries_the_folding_block() {
        let fd = builtin_fold("B2").unwrap();
        let fc = fold_blambda(&fd, &[0, 1]).unwrap();
        let (g, block) = CrystalGraph::from_json(&fc.to_json_string()).unwrap();
        assert_eq!(&g, fc.graph());
        let block = block.unwrap();
        assert_eq!(block.orbits, vec![vec!["1".to_string(), "3".to_string()], vec!["2".to_string()]]);
    }
}
