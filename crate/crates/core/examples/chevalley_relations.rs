//! Builds `e_i`, `f_i`, `h_i` on the span of self-conjugate diagrams and
//! checks the Chevalley and Serre relations of `so_{2n+1}`.

use crystal_fold::rootdata::CartanDatum;
use crystal_fold::spin::{chevalley_matrices, verify_relations};

fn main() -> crystal_fold::Result<()> {
    for n in 1..=5 {
        let b = CartanDatum::builtin(&format!("B{n}"))?;
        let m = chevalley_matrices(n, &b)?;
        let report = verify_relations(&m, &b);
        println!("n = {n}: dimension {}, {} relations checked, passed {}", m.basis.len(), report.checked, report.passed());
    }
    let m = chevalley_matrices(2, &CartanDatum::builtin("B2")?)?;
    println!("basis {:?}", m.basis);
    for (i, f) in m.f.iter().enumerate() {
        println!("f_{} = {f:?}", i + 1);
    }
    Ok(())
}
