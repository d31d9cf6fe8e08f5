use super::YoungDiagram;
use crate::crystal::{explore, Crystal, CrystalGraph, GraphKind};
use crate::rootdata::{CartanDatum, Weight};
use crate::{Error, Result};

fn require_self_conjugate(y: &YoungDiagram) -> Result<()> {
    if y.is_self_conjugate() {
        Ok(())
    } else {
        Err(Error::NotInvariant(format!("{y} is not self-conjugate")))
    }
}

fn check_node(y: &YoungDiagram, k: usize) -> Result<()> {
    if k == 0 || k > y.n() {
        return Err(Error::Shape(format!("node {k} outside 1..={}", y.n())));
    }
    Ok(())
}

/// `f̃_k` on self-conjugate diagrams (`k` in `1..=n`): adds the boxes of
/// degrees `k` and `2n − k` together, or the single box of degree `n`.
pub fn spin_f(y: &YoungDiagram, k: usize) -> Result<Option<YoungDiagram>> {
    require_self_conjugate(y)?;
    check_node(y, k)?;
    let n = y.n();
    Ok(if k == n { y.add_box(n) } else { y.add_box(k).and_then(|z| z.add_box(2 * n - k)) })
}

/// `ẽ_k`, removing the same boxes.
pub fn spin_e(y: &YoungDiagram, k: usize) -> Result<Option<YoungDiagram>> {
    require_self_conjugate(y)?;
    check_node(y, k)?;
    let n = y.n();
    Ok(if k == n { y.remove_box(n) } else { y.remove_box(k).and_then(|z| z.remove_box(2 * n - k)) })
}

/// `ω_n − Σ_k v_k α_k` where `v_k` counts boxes of degree `k`.
pub fn spin_wt(y: &YoungDiagram) -> Weight {
    let n = y.n();
    let counts = y.degree_counts();
    Weight { base: Weight::fundamental(n, n - 1).base, drop: counts[..n].iter().map(|&c| c as i64).collect() }
}

/// The spin crystal of type `B_n` on self-conjugate diagrams; `ε` and `φ`
/// are string lengths.
#[derive(Clone, Debug)]
pub struct SpinModel {
    n: usize,
    cartan: CartanDatum,
}

impl SpinModel {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("n must be positive".into()));
        }
        Ok(SpinModel { n, cartan: CartanDatum::builtin(&format!("B{n}"))? })
    }
}

fn string_length(mut y: YoungDiagram, step: impl Fn(&YoungDiagram) -> Option<YoungDiagram>) -> i64 {
    let mut len = 0;
    while let Some(z) = step(&y) {
        y = z;
        len += 1;
    }
    len
}

impl Crystal for SpinModel {
    type Elem = YoungDiagram;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn highest(&self) -> YoungDiagram {
        YoungDiagram::empty(self.n)
    }

    fn f(&self, y: &YoungDiagram, i: usize) -> Option<YoungDiagram> {
        spin_f(y, i + 1).expect("spin crystal elements are self-conjugate")
    }

    fn e(&self, y: &YoungDiagram, i: usize) -> Option<YoungDiagram> {
        spin_e(y, i + 1).expect("spin crystal elements are self-conjugate")
    }

    fn epsilon(&self, y: &YoungDiagram, i: usize) -> i64 {
        string_length(y.clone(), |z| self.e(z, i))
    }

    fn phi(&self, y: &YoungDiagram, i: usize) -> i64 {
        string_length(y.clone(), |z| self.f(z, i))
    }

    fn wt(&self, y: &YoungDiagram) -> Weight {
        spin_wt(y)
    }

    fn id(&self, y: &YoungDiagram) -> String {
        y.to_string()
    }
}

/// `B(ω_n)` of type `A_{2n−1}` on all diagrams in the `n × n` box:
/// `f̃_k` adds the box of degree `k + 1` (node index `k`).
#[derive(Clone, Debug)]
pub struct YoungModel {
    n: usize,
    cartan: CartanDatum,
}

impl YoungModel {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("n must be positive".into()));
        }
        Ok(YoungModel { n, cartan: CartanDatum::builtin(&format!("A{}", 2 * n - 1))? })
    }
}

impl Crystal for YoungModel {
    type Elem = YoungDiagram;

    fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    fn highest(&self) -> YoungDiagram {
        YoungDiagram::empty(self.n)
    }

    fn f(&self, y: &YoungDiagram, i: usize) -> Option<YoungDiagram> {
        y.add_box(i + 1)
    }

    fn e(&self, y: &YoungDiagram, i: usize) -> Option<YoungDiagram> {
        y.remove_box(i + 1)
    }

    fn epsilon(&self, y: &YoungDiagram, i: usize) -> i64 {
        i64::from(y.remove_box(i + 1).is_some())
    }

    fn phi(&self, y: &YoungDiagram, i: usize) -> i64 {
        i64::from(y.add_box(i + 1).is_some())
    }

    fn wt(&self, y: &YoungDiagram) -> Weight {
        let mut base = vec![0; 2 * self.n - 1];
        base[self.n - 1] = 1;
        Weight { base, drop: y.degree_counts().into_iter().map(|c| c as i64).collect() }
    }

    fn id(&self, y: &YoungDiagram) -> String {
        y.to_string()
    }
}

/// The spin crystal as a graph over `B_n` (vertex ids are diagrams).
pub fn build_spin_crystal(n: usize) -> Result<CrystalGraph> {
    let model = SpinModel::new(n)?;
    let lambda = Weight::fundamental(n, n - 1).base;
    Ok(explore(&model, None, GraphKind::HighestWeight { lambda }))
}

/// `B(ω_n)` of `A_{2n−1}` as a graph on all diagrams in the box.
pub fn build_young_crystal(n: usize) -> Result<CrystalGraph> {
    let model = YoungModel::new(n)?;
    let mut lambda = vec![0; 2 * n - 1];
    lambda[n - 1] = 1;
    Ok(explore(&model, None, GraphKind::HighestWeight { lambda }))
}
