//! Per-weight sizes of truncated `B(∞)` against Kostant's partition
//! function, for a simply-laced type and for the folded `G_2`.

use crystal_fold::crystal::{character, generate_binfinity};
use crystal_fold::folding::{fold_binfinity, HeightBound};
use crystal_fold::rootdata::{builtin_fold, CartanDatum, KostantCounter};

fn main() -> crystal_fold::Result<()> {
    let a3 = CartanDatum::builtin("A3")?;
    let g = generate_binfinity(&a3, 4);
    let mut kostant = KostantCounter::for_cartan(&a3)?;
    println!("B(∞) of A3 up to height 4: {} elements", g.len());
    for (w, count) in character(&g) {
        println!("  -{:?}: {count} (Kostant {})", w.drop, kostant.count(&w.drop));
    }

    let fd = builtin_fold("G2")?;
    let folded = fold_binfinity(&fd, HeightBound::Folded(5))?;
    let mut kostant = KostantCounter::for_cartan(fd.cartan())?;
    println!("B_Γ(∞) of G2 inside D4, height <= 5: {} elements", folded.graph().len());
    for (w, count) in character(folded.graph()) {
        println!("  -{:?}: {count} (Kostant {})", w.drop, kostant.count(&w.drop));
    }
    Ok(())
}
