//! Dense matrices over `BigRational`.
//!
//! Ranks and determinants use fraction-free (Bareiss) elimination on
//! integer-scaled rows; kernels come from reduced row echelon form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| rat(rows[r][c]))
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols);
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "add: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "sub: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul: inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[A | B | ...]`; all blocks share a row count.
    pub fn hcat(rows: usize, blocks: &[&QMatrix]) -> Self {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hcat: row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    out[(r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks share a column count.
    pub fn vcat(cols: usize, blocks: &[&QMatrix]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vcat: column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        QMatrix { rows, cols, data }
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect()
    }

    /// Rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (m, n) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&p| !a[p][c].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..m {
                for j in c + 1..n {
                    let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[rank][c].clone();
            rank += 1;
        }
        rank
    }

    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return Rational::one();
        }
        let mut a = self.integer_rows();
        let scale: BigInt = (0..self.rows)
            .map(|r| self.row(r).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
            .product();
        let n = self.rows;
        let mut prev = BigInt::one();
        let mut sign = BigInt::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&p| !a[p][c].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                a.swap(p, c);
                sign = -sign;
            }
            for i in c + 1..n {
                for j in c + 1..n {
                    let v = &a[c][c] * &a[i][j] - &a[i][c] * &a[c][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[c][c].clone();
        }
        Rational::new(sign * prev, scale)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&p| !m[(p, c)].is_zero()) else {
                continue;
            };
            for k in 0..m.cols {
                m.data.swap(p * m.cols + k, r * m.cols + k);
            }
            let inv = m[(r, c)].recip();
            for k in 0..m.cols {
                m[(r, k)] = &m[(r, k)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for k in 0..m.cols {
                        let v = &m[(r, k)] * &factor;
                        m[(i, k)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right null space, as the columns of a `cols × k` matrix.
    pub fn kernel(&self) -> QMatrix {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out[(fc, k)] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                out[(pc, k)] = -red[(r, fc)].clone();
            }
        }
        out
    }

    /// A matrix `P` whose kernel is exactly the column space of `self`.
    pub fn annihilator(&self) -> QMatrix {
        self.transpose().kernel().transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rank(), 2);
        assert_eq!(QMatrix::zeros(3, 0).rank(), 0);
        assert_eq!(m(&[&[0, 0, 1], &[0, 0, 2], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn determinant_with_fractions() {
        let a = QMatrix::from_rows(
            2,
            2,
            vec![Rational::new(1.into(), 2.into()), rat(1), rat(3), Rational::new(1.into(), 3.into())],
        );
        // 1/6 - 3
        assert_eq!(a.determinant(), Rational::new((-17).into(), 6.into()));
        assert_eq!(m(&[&[2, -1], &[-1, 2]]).determinant(), rat(3));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), rat(-1));
    }

    #[test]
    fn kernel_and_annihilator() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let p = a.annihilator();
        assert_eq!(p.rows(), 0);
        let b = m(&[&[1], &[1], &[0]]);
        let p = b.annihilator();
        assert!(p.mul(&b).is_zero());
        assert_eq!(p.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..4, 1i64..4), r * c).prop_map(move |v| {
                QMatrix::from_rows(r, c, v.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_rref(a in small_matrix()) {
            let (_, pivots) = a.rref();
            prop_assert_eq!(a.rank(), pivots.len());
            prop_assert_eq!(a.rank() + a.kernel().cols(), a.cols());
            prop_assert!(a.mul(&a.kernel()).is_zero());
        }

        #[test]
        fn determinant_is_multiplicative(a in small_matrix(), b in small_matrix()) {
            let n = a.rows().min(a.cols()).min(b.rows()).min(b.cols());
            let sq = |x: &QMatrix| QMatrix::from_fn(n, n, |r, c| x[(r, c)].clone());
            let (a, b) = (sq(&a), sq(&b));
            prop_assert_eq!(a.mul(&b).determinant(), a.determinant() * b.determinant());
            prop_assert_eq!(a.determinant().is_zero(), a.rank() < n);
        }
    }
}
