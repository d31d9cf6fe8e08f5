//! Non-simply-laced crystals obtained by folding simply-laced ones.
//!
//! Starting from a quiver `Q` without loops and an admissible automorphism
//! `a` (no edge joins two vertices of one orbit), [`rootdata::fold`] builds
//! the symmetrizable Cartan matrix `C = D^{-1} M` on the orbit set. The
//! [`folding`] module then realizes crystals of type `C` inside crystals of
//! type `Q`: the orbit operators `ẽ_𝐢 = ∏ ẽ_i`, `f̃_𝐢 = ∏ f̃_i` generate a
//! subcrystal which coincides with the set of `a`-fixed elements.
//!
//! Everything is checked against independent oracles: Kostant partition
//! counts for `B(∞)`, Freudenthal multiplicities and the Weyl dimension
//! formula for `B(λ)`, exact quiver-representation checkers for the
//! Young-diagram points of type `A_{2n-1}`, and the Chevalley relations of
//! the spin representation of `so_{2n+1}` realized on self-conjugate
//! diagrams.
//!
//! All arithmetic is exact: lattice computations use checked `i64`, matrix
//! computations use arbitrary-precision rationals.

pub mod cli;
pub mod crystal;
mod error;
pub mod folding;
pub mod linalg;
pub mod quivergeom;
pub mod rootdata;
pub mod spin;

pub use error::{Error, Result};

/// Version tag written into every emitted JSON artifact.
pub const SCHEMA: &str = "crystal-fold/1";
