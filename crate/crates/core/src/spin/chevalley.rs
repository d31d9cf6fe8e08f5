use serde::Serialize;

use super::{spin_e, spin_f, spin_wt, YoungDiagram};
use crate::rootdata::CartanDatum;
use crate::Result;

type IMatrix = Vec<Vec<i64>>;

fn zeros(d: usize) -> IMatrix {
    vec![vec![0; d]; d]
}

fn mul(a: &IMatrix, b: &IMatrix) -> IMatrix {
    let d = a.len();
    let mut out = zeros(d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k] != 0 {
                for j in 0..d {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn lin(a: &IMatrix, x: i64, b: &IMatrix, y: i64) -> IMatrix {
    a.iter().zip(b).map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| x * p + y * q).collect()).collect()
}

fn bracket(a: &IMatrix, b: &IMatrix) -> IMatrix {
    lin(&mul(a, b), 1, &mul(b, a), -1)
}

/// `E_k`, `F_k`, `H_k` on the span of the self-conjugate diagrams
/// (basis in lexicographic order). Column `Y` of `E_k` is `ẽ_k Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinMatrices {
    pub basis: Vec<String>,
    pub e: Vec<IMatrix>,
    pub f: Vec<IMatrix>,
    pub h: Vec<IMatrix>,
}

pub fn chevalley_matrices(n: usize, cartan: &CartanDatum) -> Result<SpinMatrices> {
    let basis = YoungDiagram::self_conjugate_set(n);
    let d = basis.len();
    let pos = |y: &YoungDiagram| basis.binary_search(y).expect("image is self-conjugate");
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    let mut h = Vec::with_capacity(n);
    for k in 1..=n {
        let (mut ek, mut fk, mut hk) = (zeros(d), zeros(d), zeros(d));
        for (col, y) in basis.iter().enumerate() {
            if let Some(z) = spin_e(y, k)? {
                ek[pos(&z)][col] = 1;
            }
            if let Some(z) = spin_f(y, k)? {
                fk[pos(&z)][col] = 1;
            }
            hk[col][col] = cartan.pairing(k - 1, &spin_wt(y));
        }
        e.push(ek);
        f.push(fk);
        h.push(hk);
    }
    Ok(SpinMatrices { basis: basis.iter().map(|y| y.to_string()).collect(), e, f, h })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// `[H_k, H_l] = 0`, `[E_k, F_l] = δ_kl H_k`, `[H_k, E_l] = c_kl E_l`,
/// `[H_k, F_l] = −c_kl F_l`, and the Serre relations
/// `ad(E_k)^{1−c_kl} E_l = 0 = ad(F_k)^{1−c_kl} F_l` for `k ≠ l`.
pub fn verify_relations(m: &SpinMatrices, cartan: &CartanDatum) -> RelationReport {
    let n = m.e.len();
    let d = m.basis.len();
    let zero = zeros(d);
    let mut report = RelationReport::default();
    for k in 0..n {
        for l in 0..n {
            let c = cartan.entry(k, l);
            report.check(bracket(&m.h[k], &m.h[l]) == zero, || format!("[H{},H{}] ≠ 0", k + 1, l + 1));
            let expected = if k == l { m.h[k].clone() } else { zero.clone() };
            report.check(bracket(&m.e[k], &m.f[l]) == expected, || format!("[E{},F{}]", k + 1, l + 1));
            report.check(bracket(&m.h[k], &m.e[l]) == lin(&m.e[l], c, &zero, 0), || {
                format!("[H{},E{}] ≠ {c}·E{}", k + 1, l + 1, l + 1)
            });
            report.check(bracket(&m.h[k], &m.f[l]) == lin(&m.f[l], -c, &zero, 0), || {
                format!("[H{},F{}] ≠ {}·F{}", k + 1, l + 1, -c, l + 1)
            });
            if k != l {
                let power = (1 - c) as usize;
                let serre = |x: &[IMatrix]| (0..power).fold(x[l].clone(), |acc, _| bracket(&x[k], &acc));
                report.check(serre(&m.e) == zero, || format!("Serre relation for E{}, E{}", k + 1, l + 1));
                report.check(serre(&m.f) == zero, || format!("Serre relation for F{}, F{}", k + 1, l + 1));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_sl2() {
        let cd = CartanDatum::builtin("B1").unwrap();
        let m = chevalley_matrices(1, &cd).unwrap();
        assert_eq!(m.e[0], vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(m.f[0], vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(m.h[0], vec![vec![1, 0], vec![0, -1]]);
        assert!(verify_relations(&m, &cd).passed());
    }

    #[test]
    fn relations_hold() {
        for n in 2..=4 {
            let cd = CartanDatum::builtin(&format!("B{n}")).unwrap();
            let m = chevalley_matrices(n, &cd).unwrap();
            assert_eq!(m.basis.len(), 1 << n);
            let report = verify_relations(&m, &cd);
            assert!(report.passed(), "n = {n}: {:?}", report.failures);
        }
    }

    #[test]
    fn a_broken_matrix_is_caught() {
        let cd = CartanDatum::builtin("B2").unwrap();
        let mut m = chevalley_matrices(2, &cd).unwrap();
        m.e[0][0][0] = 1;
        assert!(!verify_relations(&m, &cd).passed());
    }
}
