use std::fmt;

use crate::{Error, Result};

/// A partition `λ_1 ≥ … ≥ λ_n ≥ 0` inside the `n × n` box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungDiagram {
    n: usize,
    parts: Vec<usize>,
}

/// The vertex of `A_{2n−1}` under box `(r, c)`: `n + c − r`.
pub fn degree(n: usize, r: usize, c: usize) -> Result<usize> {
    if r == 0 || c == 0 || r > n || c > n {
        return Err(Error::Shape(format!("box ({r},{c}) outside the {n}×{n} box")));
    }
    Ok(n + c - r)
}

impl YoungDiagram {
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self> {
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p > 0) {
                return Err(Error::Shape(format!("{parts:?} has more than {n} rows")));
            }
            parts.truncate(n);
        }
        parts.resize(n, 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.first().is_some_and(|&p| p > n) {
            return Err(Error::Shape(format!("{parts:?} is wider than {n}")));
        }
        Ok(YoungDiagram { n, parts })
    }

    pub fn empty(n: usize) -> Self {
        YoungDiagram { n, parts: vec![0; n] }
    }

    /// Parses partition notation such as `"2,1"`; `""` and `"()"` are empty.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(YoungDiagram::empty(n));
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Parts padded with zeros to length `n`.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.n && c >= 1 && c <= self.parts[r - 1]
    }

    /// Boxes `(r, c)` (1-based) in row order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Boxes of the given degree, top to bottom.
    pub fn boxes_of_degree(&self, k: usize) -> Vec<(usize, usize)> {
        self.boxes().filter(|&(r, c)| self.n + c == k + r).collect()
    }

    /// Number of boxes of each degree `1..=2n−1` (index `k − 1`).
    pub fn degree_counts(&self) -> Vec<usize> {
        let mut out = vec![0; 2 * self.n - 1];
        for (r, c) in self.boxes() {
            out[self.n + c - r - 1] += 1;
        }
        out
    }

    /// `Y⁺_k`: adds the box of degree `k`, if one is addable.
    pub fn add_box(&self, k: usize) -> Option<YoungDiagram> {
        (0..self.n).find_map(|r| {
            let c = self.parts[r] + 1;
            let addable = c <= self.n && (r == 0 || self.parts[r - 1] >= c);
            (addable && self.n + c == k + r + 1).then(|| {
                let mut parts = self.parts.clone();
                parts[r] += 1;
                YoungDiagram { n: self.n, parts }
            })
        })
    }

    /// `Y⁻_k`: removes the box of degree `k`, if one is removable.
    pub fn remove_box(&self, k: usize) -> Option<YoungDiagram> {
        (0..self.n).find_map(|r| {
            let c = self.parts[r];
            let removable = c > 0 && (r + 1 == self.n || self.parts[r + 1] < c);
            (removable && self.n + c == k + r + 1).then(|| {
                let mut parts = self.parts.clone();
                parts[r] -= 1;
                YoungDiagram { n: self.n, parts }
            })
        })
    }

    /// Reflection in the diagonal: `μ_i = #{j : λ_j ≥ i}`.
    pub fn conjugate(&self) -> YoungDiagram {
        let parts = (1..=self.n).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect();
        YoungDiagram { n: self.n, parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Every diagram in the `n × n` box, in lexicographic order of parts.
    pub fn all_in_box(n: usize) -> Vec<YoungDiagram> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if prefix.len() == n {
                out.push(YoungDiagram { n, parts: prefix.clone() });
                return;
            }
            for p in 0..=max {
                prefix.push(p);
                rec(n, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// The self-conjugate diagrams in the box, in lexicographic order.
    pub fn self_conjugate_set(n: usize) -> Vec<YoungDiagram> {
        YoungDiagram::all_in_box(n).into_iter().filter(YoungDiagram::is_self_conjugate).collect()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nonzero: Vec<String> = self.parts.iter().filter(|&&p| p > 0).map(usize::to_string).collect();
        write!(f, "({})", nonzero.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y(n: usize, s: &str) -> YoungDiagram {
        YoungDiagram::parse(n, s).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(3, 1, 1).unwrap(), 3);
        assert_eq!(degree(2, 2, 1).unwrap(), 1);
        assert_eq!(degree(2, 1, 2).unwrap(), 3);
        assert!(degree(2, 3, 1).is_err());
        for n in 1..6 {
            for r in 1..=n {
                for c in 1..=n {
                    assert_eq!(degree(n, c, r).unwrap(), 2 * n - degree(n, r, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn adding_and_removing() {
        assert_eq!(YoungDiagram::empty(3).add_box(3), Some(y(3, "1")));
        assert_eq!(y(2, "1").add_box(1), Some(y(2, "1,1")));
        assert_eq!(y(2, "1").add_box(3), Some(y(2, "2")));
        assert_eq!(y(2, "1").add_box(2), None);
        for k in 1..6 {
            assert_eq!(YoungDiagram::empty(3).remove_box(k), None);
        }
        assert_eq!(y(2, "2,2").add_box(2), None);
    }

    #[test]
    fn conjugation_and_counts() {
        assert_eq!(y(2, "2").conjugate(), y(2, "1,1"));
        let sc: Vec<String> = YoungDiagram::self_conjugate_set(2).iter().map(|d| d.to_string()).collect();
        assert_eq!(sc, ["()", "(1)", "(2,1)", "(2,2)"]);
        assert_eq!(YoungDiagram::self_conjugate_set(3).len(), 8);
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        for n in 1..=8 {
            assert_eq!(YoungDiagram::all_in_box(n).len() as u64, binom(2 * n as u64, n as u64), "n = {n}");
            assert_eq!(YoungDiagram::self_conjugate_set(n).len(), 1 << n, "n = {n}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(y(8, "8,7,7,4,2").size(), 28);
        assert!(YoungDiagram::parse(2, "1,2").is_err());
        assert!(YoungDiagram::parse(2, "3").is_err());
        assert!(YoungDiagram::parse(2, "1,1,1").is_err());
        assert_eq!(y(3, "()"), YoungDiagram::empty(3));
    }

    proptest! {
        #[test]
        fn add_then_remove(n in 1usize..6, pick in 0usize..1000, k in 1usize..12) {
            let all = YoungDiagram::all_in_box(n);
            let d = &all[pick % all.len()];
            let k = 1 + (k - 1) % (2 * n - 1);
            if let Some(up) = d.add_box(k) {
                prop_assert_eq!(up.remove_box(k), Some(d.clone()));
                prop_assert_eq!(up.size(), d.size() + 1);
            }
            if let Some(down) = d.remove_box(k) {
                prop_assert_eq!(down.add_box(k), Some(d.clone()));
            }
            prop_assert_eq!(d.conjugate().conjugate(), d.clone());
            let conj = d.conjugate();
            prop_assert_eq!(d.add_box(k).map(|x| x.conjugate()), conj.add_box(2 * n - k));
        }
    }
}
