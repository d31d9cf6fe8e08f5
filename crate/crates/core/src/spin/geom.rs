use super::YoungDiagram;
use crate::linalg::{rat, QMatrix};
use crate::quivergeom::{NakajimaPoint, QuiverRep};
use crate::rootdata::Quiver;

/// The point of the quiver variety of `A_{2n−1}` with `w = e^n` attached to
/// a diagram. `V_k` has the boxes of degree `k` as basis (top to bottom);
/// `x` moves a box one step left (degree `k → k−1`, coefficient 1) or one
/// step up (degree `k → k+1`, coefficient `ε(h)`), and `t : V_n → ℚ`
/// reads the coefficient of the corner box `(1,1)`.
pub fn rep_from_young(y: &YoungDiagram) -> NakajimaPoint {
    let n = y.n();
    let q = Quiver::type_a(2 * n - 1);
    let boxes: Vec<Vec<(usize, usize)>> = (1..2 * n).map(|k| y.boxes_of_degree(k)).collect();
    let dims: Vec<usize> = boxes.iter().map(Vec::len).collect();
    let position = |k: usize, b: (usize, usize)| boxes[k - 1].iter().position(|&x| x == b);
    let mut rep = QuiverRep::zero(q.clone(), dims.clone());
    for h in 0..q.arrow_count() {
        let (from, to) = (q.out(h) + 1, q.inc(h) + 1);
        let mut m = QMatrix::zeros(dims[to - 1], dims[from - 1]);
        for (col, &(r, c)) in boxes[from - 1].iter().enumerate() {
            let (image, coeff) = if to + 1 == from { ((r, c - 1), 1) } else { ((r - 1, c), q.sign(h)) };
            if let Some(row) = position(to, image) {
                m[(row, col)] = rat(coeff);
            }
        }
        rep.set_map(h, m).expect("shapes follow the degree counts");
    }
    let mut wdims = vec![0; 2 * n - 1];
    wdims[n - 1] = 1;
    let t = (0..2 * n - 1)
        .map(|i| {
            let mut m = QMatrix::zeros(wdims[i], dims[i]);
            if i == n - 1 {
                if let Some(col) = position(n, (1, 1)) {
                    m[(0, col)] = rat(1);
                }
            }
            m
        })
        .collect();
    NakajimaPoint::new(rep, wdims, t).expect("framing matches")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivergeom::{apply_fa, epsilon_geom, moment_check, nilpotency_check, reps_isomorphic, stability_check};
    use crate::rootdata::Automorphism;

    #[test]
    fn empty_and_single_box() {
        let p = rep_from_young(&YoungDiagram::empty(2));
        assert_eq!(p.rep().dims(), &[0, 0, 0]);
        assert!(stability_check(&p));
        let p = rep_from_young(&YoungDiagram::parse(2, "1").unwrap());
        assert_eq!(p.rep().dims(), &[0, 1, 0]);
        assert!(stability_check(&p));
        assert_eq!(epsilon_geom(p.rep(), 1), 1);
    }

    #[test]
    fn two_one_in_the_two_box() {
        let p = rep_from_young(&YoungDiagram::parse(2, "2,1").unwrap());
        let r = p.rep();
        assert_eq!(r.dims(), &[1, 1, 1]);
        assert!(moment_check(r).into_iter().all(|b| b));
        assert!(nilpotency_check(r));
        assert!(stability_check(&p));
        let eps: Vec<usize> = (0..3).map(|i| epsilon_geom(r, i)).collect();
        assert_eq!(eps, vec![1, 0, 1]);
    }

    #[test]
    fn every_diagram_in_the_three_box() {
        let q = Quiver::type_a(5);
        let flip = Automorphism::flip_a(&q).unwrap();
        for y in YoungDiagram::all_in_box(3) {
            let p = rep_from_young(&y);
            let r = p.rep();
            assert!(moment_check(r).into_iter().all(|b| b), "{y}");
            assert!(nilpotency_check(r), "{y}");
            assert!(stability_check(&p), "{y}");
            for k in 1..=5 {
                assert_eq!(epsilon_geom(r, k - 1), usize::from(y.remove_box(k).is_some()), "{y} degree {k}");
            }
            let image = apply_fa(r, &flip).unwrap();
            assert!(reps_isomorphic(&image, rep_from_young(&y.conjugate()).rep()).unwrap(), "{y}");
        }
    }
}
