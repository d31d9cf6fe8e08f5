//! Cartan data, quivers with automorphisms, the folding construction, and
//! finite-type oracles (positive roots, Kostant counts, Freudenthal
//! multiplicities, Weyl dimensions).

mod cartan;
mod fold;
mod freudenthal;
mod quiver;
mod roots;
mod weight;

pub use cartan::CartanDatum;
pub use fold::{builtin_fold, fold, parse_fold_spec, parse_quiver_shorthand, FoldedDatum};
pub use freudenthal::{freudenthal, weyl_dim};
pub use quiver::{AdmissibilityReport, Automorphism, Quiver};
pub use roots::{kostant_count, positive_roots, KostantCounter};
pub use weight::Weight;

/// Parses a comma-separated integer vector such as `"0,1,0"`.
pub fn parse_vector(s: &str) -> crate::Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| crate::Error::Parse(format!("bad integer {x:?} in {s:?}"))))
        .collect()
}
