use serde::{Deserialize, Serialize};

use super::{Quiver, Weight};
use crate::linalg::QMatrix;
use crate::{Error, Result};

/// A symmetrizable generalized Cartan matrix `C` with symmetrizer `d`, so
/// that `M = diag(d)·C` is symmetric. Entries are `c_ij = ⟨h_i, α_j⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CartanJson", into = "CartanJson")]
pub struct CartanDatum {
    nodes: Vec<String>,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

#[derive(Clone, Serialize, Deserialize)]
struct CartanJson {
    nodes: Vec<String>,
    matrix: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

impl TryFrom<CartanJson> for CartanDatum {
    type Error = Error;
    fn try_from(raw: CartanJson) -> Result<Self> {
        CartanDatum::new(raw.nodes, raw.matrix, raw.symmetrizer)
    }
}

impl From<CartanDatum> for CartanJson {
    fn from(c: CartanDatum) -> Self {
        CartanJson { nodes: c.nodes, matrix: c.matrix, symmetrizer: c.symmetrizer }
    }
}

impl CartanDatum {
    pub fn new(nodes: Vec<String>, matrix: Vec<Vec<i64>>, symmetrizer: Vec<i64>) -> Result<Self> {
        let n = nodes.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) || symmetrizer.len() != n {
            return Err(Error::InvalidCartan(format!("expected {n}x{n} matrix and {n} symmetrizer entries")));
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {i} is {}", matrix[i][i])));
            }
            if symmetrizer[i] <= 0 {
                return Err(Error::InvalidCartan("symmetrizer must be positive".into()));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("positive off-diagonal entry ({i},{j})")));
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("zero pattern not symmetric at ({i},{j})")));
                }
                if symmetrizer[i] * matrix[i][j] != symmetrizer[j] * matrix[j][i] {
                    return Err(Error::InvalidCartan(format!("diag(d)·C not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(CartanDatum { nodes, matrix, symmetrizer })
    }

    /// `a_ii = 2`, `a_ij = −#{edges joining i and j}`.
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else { -(q.multiplicity(i, j) as i64) }).collect())
            .collect();
        CartanDatum::new(q.names().to_vec(), matrix, vec![1; n]).expect("quiver Cartan matrix is valid")
    }

    /// Built-in types: `A_n`, `D_n` from the corresponding quivers, and the
    /// folded types `B_n` (from `A_{2n−1}`), `C_n` (from `D_{n+1}`) and
    /// `G_2` (from `D_4`), with nodes renamed `1..n`.
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        let (letter, rank) = name.split_at(1.min(name.len()));
        let rank: usize =
            rank.trim_start_matches('_').parse().map_err(|_| Error::Parse(format!("unknown type {name:?}")))?;
        let cd = match letter.to_ascii_uppercase().as_str() {
            "A" if rank >= 1 => CartanDatum::from_quiver(&Quiver::type_a(rank)),
            "D" if rank >= 4 => CartanDatum::from_quiver(&Quiver::type_d(rank)?),
            "B" | "C" | "G" => super::builtin_fold(name)?.cartan().clone(),
            _ => return Err(Error::Parse(format!("unknown type {name:?}"))),
        };
        Ok(cd.renamed((1..=rank).map(|k| k.to_string()).collect()))
    }

    pub fn renamed(mut self, nodes: Vec<String>) -> Self {
        assert_eq!(nodes.len(), self.nodes.len());
        self.nodes = nodes;
        self
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_index(&self, name: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown node {name:?}")))
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// `c_ij = ⟨h_i, α_j⟩`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The symmetric form `M = diag(d)·C`, i.e. `(α_i, α_j)`.
    pub fn form(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.symmetrizer[i] * self.matrix[i][j]).collect())
            .collect()
    }

    /// `⟨h_i, wt⟩ = w_i − Σ_j c_ij v_j`.
    pub fn pairing(&self, i: usize, wt: &Weight) -> i64 {
        assert_eq!(wt.rank(), self.rank(), "weight rank mismatch");
        wt.base[i] - (0..self.rank()).map(|j| self.matrix[i][j] * wt.drop[j]).sum::<i64>()
    }

    /// `⟨h_i, Σ β_j α_j⟩` for a root-lattice vector.
    pub fn pairing_root(&self, i: usize, beta: &[i64]) -> i64 {
        (0..self.rank()).map(|j| self.matrix[i][j] * beta[j]).sum()
    }

    /// Finite type iff the symmetrized form is positive definite
    /// (all leading principal minors positive).
    pub fn is_finite_type(&self) -> bool {
        let m = self.form();
        (1..=self.rank()).all(|k| {
            let minor: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            QMatrix::from_i64_rows(&minor).determinant() > crate::linalg::rat(0)
        })
    }

    /// True when `other` equals this matrix after permuting nodes by `perm`
    /// (`other[perm[i]][perm[j]] == self[i][j]`).
    pub fn equivalent_under(&self, other: &CartanDatum, perm: &[usize]) -> bool {
        self.rank() == other.rank()
            && (0..self.rank()).all(|i| {
                (0..self.rank()).all(|j| self.matrix[i][j] == other.matrix[perm[i]][perm[j]])
            })
    }

    /// Searches all node permutations for an equivalence with `other`.
    pub fn permutation_equivalent(&self, other: &CartanDatum) -> Option<Vec<usize>> {
        use itertools::Itertools;
        if self.rank() != other.rank() {
            return None;
        }
        (0..self.rank()).permutations(self.rank()).find(|p| self.equivalent_under(other, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_from_quiver_examples() {
        let a3 = CartanDatum::from_quiver(&Quiver::type_a(3));
        assert_eq!(a3.matrix(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let point = Quiver::new(vec!["x".into()], vec![], None).unwrap();
        assert_eq!(CartanDatum::from_quiver(&point).matrix(), &[vec![2]]);
        let kronecker = Quiver::from_names(&["1", "2"], &[("1", "2"), ("1", "2")], None).unwrap();
        assert_eq!(CartanDatum::from_quiver(&kronecker).matrix(), &[vec![2, -2], vec![-2, 2]]);
    }

    #[test]
    fn validation_rejects_malformed_data() {
        let bad = |m: Vec<Vec<i64>>, d: Vec<i64>| {
            CartanDatum::new(vec!["1".into(), "2".into()], m, d).unwrap_err()
        };
        assert!(matches!(bad(vec![vec![1, 0], vec![0, 2]], vec![1, 1]), Error::InvalidCartan(_)));
        assert!(matches!(bad(vec![vec![2, 1], vec![1, 2]], vec![1, 1]), Error::InvalidCartan(_)));
        assert!(matches!(bad(vec![vec![2, -1], vec![0, 2]], vec![1, 1]), Error::InvalidCartan(_)));
        assert!(matches!(bad(vec![vec![2, -1], vec![-2, 2]], vec![1, 1]), Error::InvalidCartan(_)));
        assert!(CartanDatum::new(vec!["1".into(), "2".into()], vec![vec![2, -1], vec![-2, 2]], vec![2, 1]).is_ok());
    }

    #[test]
    fn pairing_examples() {
        let b2 = CartanDatum::builtin("B2").unwrap();
        for i in 0..2 {
            assert_eq!(b2.pairing(i, &Weight::fundamental(2, i)), 1);
            assert_eq!(b2.pairing(i, &Weight::from_drop({
                let mut v = vec![0; 2];
                v[i] = 1;
                v
            })), -2);
        }
    }

    #[test]
    fn finite_type_detection() {
        for t in ["A1", "A5", "B3", "C3", "D4", "D6", "G2"] {
            assert!(CartanDatum::builtin(t).unwrap().is_finite_type(), "{t}");
        }
        let affine = CartanDatum::new(vec!["0".into(), "1".into()], vec![vec![2, -2], vec![-2, 2]], vec![1, 1]).unwrap();
        assert!(!affine.is_finite_type());
        let hyperbolic = CartanDatum::new(vec!["0".into(), "1".into()], vec![vec![2, -3], vec![-3, 2]], vec![1, 1]).unwrap();
        assert!(!hyperbolic.is_finite_type());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g2 = CartanDatum::builtin("G2").unwrap();
        let text = serde_json::to_string(&g2).unwrap();
        assert_eq!(serde_json::from_str::<CartanDatum>(&text).unwrap(), g2);
        let bad = r#"{"nodes":["1"],"matrix":[[3]],"symmetrizer":[1]}"#;
        assert!(serde_json::from_str::<CartanDatum>(bad).is_err());
    }
}
