//! Folds `A_{2n−1}` along its flip and `D_4` along triality, printing the
//! resulting Cartan matrices and symmetrizers.

use crystal_fold::rootdata::{fold, Automorphism, Quiver};

fn main() -> crystal_fold::Result<()> {
    for n in 2..=4 {
        let q = Quiver::type_a(2 * n - 1);
        let fd = fold(&q, &Automorphism::flip_a(&q)?)?;
        println!("A{} / flip -> nodes {:?}", 2 * n - 1, fd.cartan().nodes());
        print_datum(fd.cartan().matrix(), fd.cartan().symmetrizer());
    }
    let d4 = Quiver::type_d(4)?;
    let fd = fold(&d4, &Automorphism::triality(&d4)?)?;
    println!("D4 / triality -> nodes {:?}", fd.cartan().nodes());
    print_datum(fd.cartan().matrix(), fd.cartan().symmetrizer());

    let a2 = Quiver::type_a(2);
    match fold(&a2, &Automorphism::parse(&a2, "1:2,2:1")?) {
        Err(e) => println!("A2 / swap rejected: {e}"),
        Ok(_) => unreachable!("the swap of A2 has an edge inside its orbit"),
    }
    Ok(())
}

fn print_datum(matrix: &[Vec<i64>], d: &[i64]) {
    for row in matrix {
        println!("  {row:?}");
    }
    println!("  D = {d:?}");
}
