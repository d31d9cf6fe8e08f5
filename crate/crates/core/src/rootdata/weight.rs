use serde::{Deserialize, Serialize};

/// A weight written as `Σ base_i ω_i − Σ drop_i α_i`.
///
/// Generated highest-weight crystals always have nonnegative `base` and
/// `drop`; elementary crystals may carry negative drops.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub base: Vec<i64>,
    pub drop: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight { base: vec![0; rank], drop: vec![0; rank] }
    }

    /// `λ` with no roots subtracted.
    pub fn highest(lambda: &[i64]) -> Self {
        Weight { base: lambda.to_vec(), drop: vec![0; lambda.len()] }
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.base[i] = 1;
        w
    }

    /// `−Σ β_i α_i`.
    pub fn from_drop(drop: Vec<i64>) -> Self {
        Weight { base: vec![0; drop.len()], drop }
    }

    pub fn rank(&self) -> usize {
        self.drop.len()
    }

    /// `self − α_i`.
    pub fn minus_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.drop[i] += 1;
        w
    }

    /// `self + α_i`.
    pub fn plus_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.drop[i] -= 1;
        w
    }

    /// Root-lattice height of the drop.
    pub fn height(&self) -> i64 {
        self.drop.iter().sum()
    }

    /// Permutes coordinates: the result has `perm[i]`-coordinate equal to
    /// this weight's `i`-coordinate.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.rank());
        for (i, &j) in perm.iter().enumerate() {
            out.base[j] = self.base[i];
            out.drop[j] = self.drop[i];
        }
        out
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.base), join(&self.drop))
    }
}
