//! The elements fixed by the induced automorphism are exactly those
//! generated by the orbit operators, for `B(ω_3)` of `A_5` and for `B(∞)`.

use crystal_fold::crystal::{generate_binfinity, generate_blambda};
use crystal_fold::folding::{check_fixed_equals_generated, fold_binfinity, fold_blambda, induced_automorphism, HeightBound};
use crystal_fold::rootdata::builtin_fold;

fn main() -> crystal_fold::Result<()> {
    let fd = builtin_fold("B3")?;
    let lambda = [0, 0, 1];
    let source = generate_blambda(fd.source_cartan(), &fd.unfold_vector(&lambda)?, None)?;
    let ia = induced_automorphism(&source, fd.automorphism())?;
    let report = check_fixed_equals_generated(&source, &ia, &fold_blambda(&fd, &lambda)?, None);
    println!("A5 B(ω3): {} elements, σ of order {}, {report:?}", source.len(), ia.order());

    let depth = 5;
    let source = generate_binfinity(fd.source_cartan(), depth);
    let ia = induced_automorphism(&source, fd.automorphism())?;
    let fc = fold_binfinity(&fd, HeightBound::Source(depth))?;
    let report = check_fixed_equals_generated(&source, &ia, &fc, Some(depth));
    println!("A5 B(∞) to height {depth}: {} elements, {} fixed, passed {}", source.len(), report.fixed, report.passed());
    Ok(())
}
