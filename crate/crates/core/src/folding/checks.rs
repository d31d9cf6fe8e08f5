use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{FoldedCrystal, InducedAutomorphism};
use crate::crystal::{character, generate_binfinity, generate_blambda, isomorphic, AxiomReport, CrystalGraph, GraphKind};
use crate::rootdata::{FoldedDatum, KostantCounter, Weight};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedReport {
    pub fixed: usize,
    pub generated: usize,
    /// σ-fixed but not generated by the orbit operators.
    pub only_fixed: Vec<String>,
    /// Generated but not σ-fixed.
    pub only_generated: Vec<String>,
}

impl FixedReport {
    pub fn passed(&self) -> bool {
        self.only_fixed.is_empty() && self.only_generated.is_empty()
    }
}

/// Compares the σ-fixed elements of `source` with the elements generated by
/// the orbit operators. With `max_source_height`, both sets are cut to
/// elements whose source weight has height at most that bound.
pub fn check_fixed_equals_generated(
    source: &CrystalGraph,
    ia: &InducedAutomorphism,
    fc: &FoldedCrystal,
    max_source_height: Option<usize>,
) -> FixedReport {
    let keep = |drop_height: i64| max_source_height.is_none_or(|d| drop_height <= d as i64);
    let fixed: BTreeSet<&str> = ia
        .fixed_points()
        .into_iter()
        .map(|b| source.vertex(b))
        .filter(|v| keep(v.wt.height()))
        .map(|v| v.id.as_str())
        .collect();
    let scale: Vec<i64> = fc
        .folding()
        .orbits
        .iter()
        .map(|o| o.len() as i64)
        .collect();
    let generated: BTreeSet<&str> = fc
        .graph()
        .vertices()
        .iter()
        .filter(|v| keep(v.wt.drop.iter().zip(&scale).map(|(d, s)| d * s).sum()))
        .map(|v| v.id.as_str())
        .collect();
    FixedReport {
        fixed: fixed.len(),
        generated: generated.len(),
        only_fixed: fixed.difference(&generated).map(|s| s.to_string()).collect(),
        only_generated: generated.difference(&fixed).map(|s| s.to_string()).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountMismatch {
    pub weight: Weight,
    pub folded: usize,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetReport {
    pub axioms: AxiomReport,
    /// Highest-weight mode: whether the folded crystal is isomorphic to the
    /// directly generated one.
    pub isomorphic: Option<bool>,
    /// Infinity mode: weights where the folded count differs from the
    /// directly generated count or the Kostant count.
    pub count_mismatches: Vec<CountMismatch>,
    /// Failed characterization conditions, described.
    pub characterization: Vec<String>,
}

impl TargetReport {
    pub fn passed(&self) -> bool {
        self.axioms.is_clean()
            && self.isomorphic != Some(false)
            && self.count_mismatches.is_empty()
            && self.characterization.is_empty()
    }
}

/// Checks that a folded crystal is the crystal of the target type: crystal
/// axioms over the folded Cartan datum, then either an isomorphism with the
/// directly generated `B(λ)` or per-weight counts against the directly
/// generated `B(∞)` and Kostant's partition function, and finally the
/// characterization conditions on weights and `ε`.
pub fn verify_folded_is_target(fc: &FoldedCrystal, fd: &FoldedDatum) -> Result<TargetReport> {
    let g = fc.graph();
    let cd = fd.cartan();
    let mut report = TargetReport {
        axioms: g.verify_axioms(),
        isomorphic: None,
        count_mismatches: Vec::new(),
        characterization: characterization(g),
    };
    match g.kind() {
        GraphKind::HighestWeight { lambda } => {
            let direct = generate_blambda(cd, lambda, None)?;
            report.isomorphic = Some(isomorphic(g, &direct)?.is_some());
        }
        GraphKind::Infinity { depth, height_scale } => {
            let inside = |w: &Weight| w.drop.iter().zip(height_scale).map(|(d, s)| d * s).sum::<i64>() <= *depth as i64;
            let direct: BTreeMap<Weight, usize> =
                character(&generate_binfinity(cd, *depth)).into_iter().filter(|(w, _)| inside(w)).collect();
            let folded = character(g);
            let mut kostant = KostantCounter::for_cartan(cd)?;
            let weights: BTreeSet<&Weight> = direct.keys().chain(folded.keys()).collect();
            for w in weights {
                let got = folded.get(w).copied().unwrap_or(0);
                let expected = kostant.count(&w.drop);
                if got as u64 != expected || direct.get(w).copied().unwrap_or(0) as u64 != expected {
                    report.count_mismatches.push(CountMismatch { weight: w.clone(), folded: got, expected });
                }
            }
        }
    }
    Ok(report)
}

/// Conditions on a `B(∞)`-like or highest-weight crystal: weights lie below
/// the top weight, the highest element is the only one of its weight, has
/// `ε = 0`, every `ε` is nonnegative, and every other element has an
/// `ẽ`-predecessor.
fn characterization(g: &CrystalGraph) -> Vec<String> {
    let mut out = Vec::new();
    if g.is_empty() {
        return out;
    }
    let h = g.highest();
    let top = &g.vertex(h).wt;
    for (b, v) in g.vertices().iter().enumerate() {
        if v.wt.base != top.base || v.wt.drop.iter().any(|&x| x < 0) {
            out.push(format!("{}: weight {} is not below the highest weight", v.id, v.wt));
        }
        if b != h && v.wt.drop.iter().all(|&x| x == 0) {
            out.push(format!("{}: second element of the highest weight", v.id));
        }
        if v.eps.iter().any(|&e| e < 0) {
            out.push(format!("{}: negative ε", v.id));
        }
        if b != h && (0..g.cartan().rank()).all(|i| g.e_edge(b, i).is_none()) {
            out.push(format!("{}: no ẽ-predecessor", v.id));
        }
    }
    if g.vertex(h).eps.iter().any(|&e| e != 0) {
        out.push(format!("{}: highest element has ε ≠ 0", g.vertex(h).id));
    }
    out
}
