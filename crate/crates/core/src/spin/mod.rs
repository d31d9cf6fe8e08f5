//! The spin representation of `so_{2n+1}` on self-conjugate Young diagrams.
//!
//! Diagrams in the `n × n` box index `B(ω_n)` of type `A_{2n−1}`: box
//! `(r, c)` sits under vertex `n + c − r`, and `f̃_k` adds the box of degree
//! `k`. The flip `k ↦ 2n − k` acts by conjugation, and the fixed diagrams
//! with the paired operators form the spin crystal of type `B_n`.

mod chevalley;
mod geom;
mod model;
mod young;

pub use chevalley::{chevalley_matrices, verify_relations, RelationReport, SpinMatrices};
pub use geom::rep_from_young;
pub use model::{build_spin_crystal, build_young_crystal, spin_e, spin_f, spin_wt, SpinModel, YoungModel};
pub use young::{degree, YoungDiagram};
