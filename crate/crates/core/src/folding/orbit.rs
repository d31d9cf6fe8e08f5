use itertools::Itertools;

use crate::crystal::Crystal;
use crate::{Error, Result};

fn orbit_apply<C: Crystal>(
    c: &C,
    b: &C::Elem,
    orbit: &[usize],
    op: impl Fn(&C::Elem, usize) -> Option<C::Elem>,
) -> Result<Option<C::Elem>> {
    let mut result: Option<Option<C::Elem>> = None;
    for order in orbit.iter().permutations(orbit.len()) {
        let out = order.iter().try_fold(b.clone(), |acc, &&i| op(&acc, i));
        match &result {
            None => result = Some(out),
            Some(prev) if *prev != out => {
                return Err(Error::Invariant(format!(
                    "orbit operators on {:?} depend on the order at {}",
                    orbit,
                    c.id(b)
                )))
            }
            Some(_) => {}
        }
    }
    Ok(result.flatten())
}

/// `f̃_𝐢 = ∏_{i∈𝐢} f̃_i`. Every ordering of the orbit is tried and must agree.
pub fn orbit_f<C: Crystal>(c: &C, b: &C::Elem, orbit: &[usize]) -> Result<Option<C::Elem>> {
    orbit_apply(c, b, orbit, |x, i| c.f(x, i))
}

/// `ẽ_𝐢 = ∏_{i∈𝐢} ẽ_i`. Every ordering of the orbit is tried and must agree.
pub fn orbit_e<C: Crystal>(c: &C, b: &C::Elem, orbit: &[usize]) -> Result<Option<C::Elem>> {
    orbit_apply(c, b, orbit, |x, i| c.e(x, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{generate_blambda, BInfinity, HighestWeightModel};
    use crate::rootdata::CartanDatum;

    #[test]
    fn a3_middle_weight() {
        let a3 = CartanDatum::builtin("A3").unwrap();
        let g = generate_blambda(&a3, &[0, 1, 0], None).unwrap();
        assert_eq!(g.len(), 6);
        let b = g.f_edge(g.highest(), 1).unwrap();
        let c = orbit_f(&g, &b, &[0, 2]).unwrap().unwrap();
        let mut drop = g.vertex(b).wt.drop.clone();
        drop[0] += 1;
        drop[2] += 1;
        assert_eq!(g.vertex(c).wt.drop, drop);
        assert_eq!(orbit_e(&g, &c, &[0, 2]).unwrap(), Some(b));
        assert_eq!(orbit_e(&g, &g.highest(), &[0, 2]).unwrap(), None);
        assert_eq!(orbit_f(&g, &b, &[1]).unwrap(), g.f_edge(b, 1));
    }

    #[test]
    fn orbit_operators_are_inverse_on_binfinity() {
        let d4 = BInfinity::new(CartanDatum::builtin("D4").unwrap());
        let outer = [0, 2, 3];
        let mut b = d4.highest();
        for step in 0..4 {
            let orbit: &[usize] = if step % 2 == 0 { &outer } else { &[1] };
            let next = orbit_f(&d4, &b, orbit).unwrap().unwrap();
            assert_eq!(orbit_e(&d4, &next, orbit).unwrap(), Some(b.clone()));
            b = next;
        }
    }

    #[test]
    fn absent_when_a_factor_is_absent() {
        let a3 = HighestWeightModel::new(CartanDatum::builtin("A3").unwrap(), vec![1, 0, 0]);
        assert_eq!(orbit_f(&a3, &a3.highest(), &[0, 2]).unwrap(), None);
    }
}
