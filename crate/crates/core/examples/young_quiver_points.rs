//! Young diagrams as stable points of Nakajima quiver varieties of type
//! `A_{2n−1}`: checks the moment map, nilpotency and stability, and that the
//! diagram automorphism sends a diagram to its conjugate.

use crystal_fold::quivergeom::{apply_fa, epsilon_geom, moment_check, nilpotency_check, reps_isomorphic, stability_check};
use crystal_fold::rootdata::{Automorphism, Quiver};
use crystal_fold::spin::{rep_from_young, YoungDiagram};

fn main() -> crystal_fold::Result<()> {
    let n = 3;
    let flip = Automorphism::flip_a(&Quiver::type_a(2 * n - 1))?;
    for y in YoungDiagram::all_in_box(n) {
        let p = rep_from_young(&y);
        let r = p.rep();
        let ok = moment_check(r).iter().all(|&b| b) && nilpotency_check(r) && stability_check(&p);
        let eps: Vec<usize> = (0..2 * n - 1).map(|i| epsilon_geom(r, i)).collect();
        let to_conjugate = reps_isomorphic(&apply_fa(r, &flip)?, rep_from_young(&y.conjugate()).rep())?;
        println!("{:<10} dims {:?} ε {eps:?} in Λ and stable: {ok}, a-image ≅ {}: {to_conjugate}", y.to_string(), r.dims(), y.conjugate());
    }
    print!("{}", rep_from_young(&YoungDiagram::parse(n, "2,1")?).to_json_string());
    Ok(())
}
