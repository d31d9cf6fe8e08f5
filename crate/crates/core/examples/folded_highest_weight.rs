//! Folds the adjoint crystal of `D_4` (28 elements) down to the
//! 7-element `G_2` crystal and checks it against the direct construction.

use crystal_fold::crystal::{generate_blambda, isomorphic};
use crystal_fold::folding::{fold_blambda, verify_folded_is_target};
use crystal_fold::rootdata::{builtin_fold, weyl_dim};

fn main() -> crystal_fold::Result<()> {
    let fd = builtin_fold("G2")?;
    let lambda = [0, 1];
    let source = generate_blambda(fd.source_cartan(), &fd.unfold_vector(&lambda)?, None)?;
    let fc = fold_blambda(&fd, &lambda)?;
    println!("source D4 crystal: {} elements", source.len());
    println!("folded G2 crystal: {} elements (Weyl dimension {})", fc.graph().len(), weyl_dim(fd.cartan(), &lambda)?);
    print!("{}", fc.graph().to_table());

    let direct = generate_blambda(fd.cartan(), &lambda, None)?;
    println!("isomorphic to direct G2 crystal: {}", isomorphic(fc.graph(), &direct)?.is_some());
    println!("target checks passed: {}", verify_folded_is_target(&fc, &fd)?.passed());
    Ok(())
}
