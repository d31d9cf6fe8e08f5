//! The spin crystal of `so_{2n+1}` on self-conjugate Young diagrams, its
//! `2^n` elements, and its isomorphism with the folded `A_{2n−1}` crystal.

use crystal_fold::crystal::isomorphic;
use crystal_fold::folding::fold_blambda;
use crystal_fold::rootdata::builtin_fold;
use crystal_fold::spin::{build_spin_crystal, spin_f, YoungDiagram};

fn main() -> crystal_fold::Result<()> {
    let y = YoungDiagram::parse(3, "2,1")?;
    for k in 1..=3 {
        match spin_f(&y, k)? {
            Some(z) => println!("f_{k} {y} = {z}"),
            None => println!("f_{k} {y} = 0"),
        }
    }

    for n in 1..=5 {
        let g = build_spin_crystal(n)?;
        let folded = fold_blambda(&builtin_fold(&format!("B{n}"))?, &[vec![0; n - 1], vec![1]].concat())?;
        println!(
            "n = {n}: {} elements, axioms clean {}, isomorphic to folded A{}: {}",
            g.len(),
            g.verify_axioms().is_clean(),
            2 * n - 1,
            isomorphic(&g, folded.graph())?.is_some()
        );
    }
    print!("{}", build_spin_crystal(3)?.to_dot());
    Ok(())
}
