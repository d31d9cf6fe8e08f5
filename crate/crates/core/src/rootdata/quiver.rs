use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A loop-free quiver `Q = (I, H)` with a chosen orientation `Ω ⊂ H`.
///
/// Each unordered edge `e = {u, v}` (as listed) yields two oriented edges:
/// `2e` runs `u → v` and `2e + 1` runs `v → u`, so `h̄ = h ^ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    /// `omega[e]` is true when `Ω` contains the arrow `2e`.
    omega: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<Vec<[String; 2]>>,
}

impl Quiver {
    /// Builds a quiver; `orientation` lists one arrow per edge (defaulting
    /// to the listed direction of every edge).
    pub fn new(
        names: Vec<String>,
        edges: Vec<(usize, usize)>,
        orientation: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        let n = names.len();
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {name}")));
            }
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidQuiver(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidQuiver(format!("loop at vertex {}", names[u])));
            }
        }
        let omega = match orientation {
            None => vec![true; edges.len()],
            Some(arrows) => {
                if arrows.len() != edges.len() {
                    return Err(Error::InvalidQuiver(format!(
                        "orientation has {} arrows for {} edges",
                        arrows.len(),
                        edges.len()
                    )));
                }
                let mut omega = vec![None; edges.len()];
                for (u, v) in arrows {
                    let slot = edges.iter().enumerate().position(|(e, &(a, b))| {
                        omega[e].is_none() && ((a, b) == (u, v) || (a, b) == (v, u))
                    });
                    let Some(e) = slot else {
                        return Err(Error::InvalidQuiver(format!("arrow ({u},{v}) matches no free edge")));
                    };
                    omega[e] = Some(edges[e] == (u, v));
                }
                omega.into_iter().map(|o| o.expect("every edge oriented")).collect()
            }
        };
        Ok(Quiver { names, edges, omega })
    }

    /// Builds a quiver from vertex names and name pairs.
    pub fn from_names(
        names: &[&str],
        edges: &[(&str, &str)],
        orientation: Option<&[(&str, &str)]>,
    ) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {s}")))
        };
        let edges = edges.iter().map(|(u, v)| Ok((idx(u)?, idx(v)?))).collect::<Result<Vec<_>>>()?;
        let orientation = orientation
            .map(|o| o.iter().map(|(u, v)| Ok((idx(u)?, idx(v)?))).collect::<Result<Vec<_>>>())
            .transpose()?;
        Quiver::new(names, edges, orientation)
    }

    /// Type `A_n` path `1 – 2 – ⋯ – n`, every arrow pointing toward the
    /// middle so that the reflection `k ↦ n + 1 − k` preserves `Ω`.
    pub fn type_a(n: usize) -> Self {
        let names = (1..=n).map(|k| k.to_string()).collect();
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|k| (k, k + 1)).collect();
        let orientation = edges
            .iter()
            .map(|&(u, v)| if u + v + 2 < n + 1 { (u, v) } else { (v, u) })
            .collect();
        Quiver::new(names, edges, Some(orientation)).expect("type A quiver is valid")
    }

    /// Type `D_n` (n ≥ 4) with Bourbaki labels: the path `1 – ⋯ – (n−2)`
    /// plus the fork `(n−2) – (n−1)` and `(n−2) – n`. Arrows point toward
    /// the branch vertex.
    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidQuiver(format!("D_{n} needs n >= 4")));
        }
        let names = (1..=n).map(|k| k.to_string()).collect();
        let mut edges: Vec<(usize, usize)> = (0..n - 3).map(|k| (k, k + 1)).collect();
        edges.push((n - 2, n - 3));
        edges.push((n - 1, n - 3));
        Quiver::new(names, edges, None)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {name}")))
    }

    /// Unordered edges as listed.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of oriented edges `|H| = 2|E|`.
    pub fn arrow_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn out(&self, h: usize) -> usize {
        let (u, v) = self.edges[h / 2];
        if h.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn inc(&self, h: usize) -> usize {
        let (u, v) = self.edges[h / 2];
        if h.is_multiple_of(2) {
            v
        } else {
            u
        }
    }

    pub fn bar(&self, h: usize) -> usize {
        h ^ 1
    }

    pub fn in_omega(&self, h: usize) -> bool {
        self.omega[h / 2] == h.is_multiple_of(2)
    }

    /// `ε(h) = 1` on `Ω`, `−1` on `Ω̄`.
    pub fn sign(&self, h: usize) -> i64 {
        if self.in_omega(h) {
            1
        } else {
            -1
        }
    }

    /// Number of edges joining `i` and `j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.edges.iter().filter(|&&(u, v)| (u, v) == (i, j) || (u, v) == (j, i)).count()
    }

    /// Oriented edges `h` with `inc(h) = i`, in index order.
    pub fn arrows_into(&self, i: usize) -> Vec<usize> {
        (0..self.arrow_count()).filter(|&h| self.inc(h) == i).collect()
    }

    pub fn arrows_out_of(&self, i: usize) -> Vec<usize> {
        (0..self.arrow_count()).filter(|&h| self.out(h) == i).collect()
    }

    /// True when the underlying graph is a simple path (type `A_n`).
    pub fn is_type_a(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || self.edges.len() + 1 != n {
            return false;
        }
        let mut degree = vec![0; n];
        for &(u, v) in &self.edges {
            if self.multiplicity(u, v) > 1 {
                return false;
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        if degree.iter().any(|&d| d > 2) {
            return false;
        }
        // connected: a forest with n-1 edges on n vertices is a tree
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: QuiverJson = serde_json::from_str(text)?;
        let names = raw.vertices.clone();
        let idx = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {s}")))
        };
        let edges =
            raw.edges.iter().map(|[u, v]| Ok((idx(u)?, idx(v)?))).collect::<Result<Vec<_>>>()?;
        let orientation = raw
            .orientation
            .as_ref()
            .map(|o| o.iter().map(|[u, v]| Ok((idx(u)?, idx(v)?))).collect::<Result<Vec<_>>>())
            .transpose()?;
        Quiver::new(raw.vertices, edges, orientation)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let pair = |u: usize, v: usize| [self.names[u].clone(), self.names[v].clone()];
        let raw = QuiverJson {
            vertices: self.names.clone(),
            edges: self.edges.iter().map(|&(u, v)| pair(u, v)).collect(),
            orientation: Some(
                (0..self.arrow_count())
                    .filter(|&h| self.in_omega(h))
                    .map(|h| pair(self.out(h), self.inc(h)))
                    .collect(),
            ),
        };
        serde_json::to_value(raw).expect("quiver serializes")
    }
}

/// A graph automorphism `𝐚`: a vertex permutation together with the
/// induced permutation of oriented edges (compatible with `inc`, `out`
/// and the bar involution).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    vertex_map: Vec<usize>,
    edge_map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// Edges (as vertex-name pairs) joining two vertices of one orbit.
    pub offending: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct AutomorphismJson {
    vertex_map: BTreeMap<String, String>,
}

impl Automorphism {
    /// Validates `vertex_map` as a graph automorphism of `q` and derives the
    /// edge permutation. Parallel edges are matched in listing order.
    pub fn new(q: &Quiver, vertex_map: Vec<usize>) -> Result<Self> {
        let n = q.vertex_count();
        if vertex_map.len() != n {
            return Err(Error::NotAutomorphism(format!("{} images for {n} vertices", vertex_map.len())));
        }
        let mut seen = vec![false; n];
        for &j in &vertex_map {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(Error::NotAutomorphism("vertex map is not a permutation".into()));
            }
        }
        let mut used = vec![false; q.edges.len()];
        let mut edge_map = vec![0; q.arrow_count()];
        for (e, &(u, v)) in q.edges.iter().enumerate() {
            let (au, av) = (vertex_map[u], vertex_map[v]);
            let target = q.edges.iter().enumerate().position(|(f, &(x, y))| {
                !used[f] && ((x, y) == (au, av) || (x, y) == (av, au))
            });
            let Some(f) = target else {
                return Err(Error::NotAutomorphism(format!(
                    "edge {}–{} has no image {}–{}",
                    q.name(u),
                    q.name(v),
                    q.name(au),
                    q.name(av)
                )));
            };
            used[f] = true;
            let forward = q.edges[f] == (au, av);
            edge_map[2 * e] = if forward { 2 * f } else { 2 * f + 1 };
            edge_map[2 * e + 1] = edge_map[2 * e] ^ 1;
        }
        Ok(Automorphism { vertex_map, edge_map })
    }

    pub fn identity(q: &Quiver) -> Self {
        Automorphism::new(q, (0..q.vertex_count()).collect()).expect("identity is an automorphism")
    }

    /// Parses `"1:3,2:2,3:1"` (vertex names; unlisted vertices are fixed)
    /// or `"identity"`.
    pub fn parse(q: &Quiver, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() || spec == "identity" || spec == "id" {
            return Ok(Automorphism::identity(q));
        }
        let mut map: Vec<usize> = (0..q.vertex_count()).collect();
        for part in spec.split(',') {
            let (a, b) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected from:to, got {part:?}")))?;
            map[q.index_of(a.trim())?] = q.index_of(b.trim())?;
        }
        Automorphism::new(q, map)
    }

    pub fn from_json(q: &Quiver, text: &str) -> Result<Self> {
        let raw: AutomorphismJson = serde_json::from_str(text)?;
        let mut map: Vec<usize> = (0..q.vertex_count()).collect();
        for (a, b) in &raw.vertex_map {
            map[q.index_of(a)?] = q.index_of(b)?;
        }
        Automorphism::new(q, map)
    }

    pub fn to_json(&self, q: &Quiver) -> serde_json::Value {
        let vertex_map = self
            .vertex_map
            .iter()
            .enumerate()
            .map(|(i, &j)| (q.name(i).to_string(), q.name(j).to_string()))
            .collect();
        serde_json::to_value(AutomorphismJson { vertex_map }).expect("automorphism serializes")
    }

    /// The diagram flip `k ↦ n + 1 − k` of `A_n`.
    pub fn flip_a(q: &Quiver) -> Result<Self> {
        let n = q.vertex_count();
        Automorphism::new(q, (0..n).map(|k| n - 1 - k).collect())
    }

    /// The 3-cycle on the outer vertices of `D_4` (Bourbaki labels 1, 3, 4).
    pub fn triality(q: &Quiver) -> Result<Self> {
        if q.vertex_count() != 4 {
            return Err(Error::NotAutomorphism("triality needs D_4".into()));
        }
        Automorphism::new(q, vec![2, 1, 3, 0])
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.vertex_map[i]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn arrow(&self, h: usize) -> usize {
        self.edge_map[h]
    }

    pub fn inverse(&self) -> Automorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (i, &j) in self.vertex_map.iter().enumerate() {
            vertex_map[j] = i;
        }
        let mut edge_map = vec![0; self.edge_map.len()];
        for (h, &g) in self.edge_map.iter().enumerate() {
            edge_map[g] = h;
        }
        Automorphism { vertex_map, edge_map }
    }

    /// Order of the vertex permutation.
    pub fn order(&self) -> usize {
        self.orbits().iter().fold(1, |acc, o| num_integer::lcm(acc, o.len()))
    }

    /// Vertex orbits, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                orbit.push(k);
                k = self.vertex_map[k];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// True when `𝐚(Ω) = Ω`.
    pub fn preserves_orientation(&self, q: &Quiver) -> bool {
        (0..q.arrow_count()).all(|h| q.in_omega(h) == q.in_omega(self.edge_map[h]))
    }

    /// An automorphism is admissible when no edge joins two vertices of one
    /// orbit.
    pub fn check_admissible(&self, q: &Quiver) -> AdmissibilityReport {
        let orbits = self.orbits();
        let mut orbit_of = vec![0; q.vertex_count()];
        for (k, o) in orbits.iter().enumerate() {
            for &i in o {
                orbit_of[i] = k;
            }
        }
        let offending: Vec<(String, String)> = q
            .edges
            .iter()
            .filter(|&&(u, v)| orbit_of[u] == orbit_of[v])
            .map(|&(u, v)| (q.name(u).to_string(), q.name(v).to_string()))
            .collect();
        AdmissibilityReport { admissible: offending.is_empty(), offending }
    }

    /// `(𝐚·x)_{𝐚(i)} = x_i`.
    pub fn act<T: Clone>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (i, &j) in self.vertex_map.iter().enumerate() {
            out[j] = x[i].clone();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_is_fixed_point_free_involution_swapping_ends() {
        let q = Quiver::type_d(5).unwrap();
        for h in 0..q.arrow_count() {
            let b = q.bar(h);
            assert_ne!(b, h);
            assert_eq!(q.bar(b), h);
            assert_eq!(q.inc(b), q.out(h));
            assert_eq!(q.out(b), q.inc(h));
            assert_ne!(q.in_omega(h), q.in_omega(b));
        }
    }

    #[test]
    fn loops_are_rejected() {
        let err = Quiver::from_names(&["1"], &[("1", "1")], None).unwrap_err();
        assert!(matches!(err, Error::InvalidQuiver(_)));
    }

    #[test]
    fn type_a_orientation_is_flip_compatible() {
        for n in (1..9).step_by(2) {
            let q = Quiver::type_a(n);
            let a = Automorphism::flip_a(&q).unwrap();
            assert!(a.preserves_orientation(&q), "A_{n}");
            assert!(q.is_type_a());
        }
        let d4 = Quiver::type_d(4).unwrap();
        assert!(Automorphism::triality(&d4).unwrap().preserves_orientation(&d4));
        assert!(!d4.is_type_a());
    }

    #[test]
    fn admissibility_examples() {
        let a3 = Quiver::type_a(3);
        let swap = Automorphism::parse(&a3, "1:3,2:2,3:1").unwrap();
        assert!(swap.check_admissible(&a3).admissible);

        let a2 = Quiver::type_a(2);
        let swap = Automorphism::parse(&a2, "1:2,2:1").unwrap();
        let report = swap.check_admissible(&a2);
        assert!(!report.admissible);
        assert_eq!(report.offending, vec![("1".to_string(), "2".to_string())]);

        for q in [Quiver::type_a(4), Quiver::type_d(6).unwrap()] {
            assert!(Automorphism::identity(&q).check_admissible(&q).admissible);
        }
    }

    #[test]
    fn non_automorphisms_are_rejected() {
        let a3 = Quiver::type_a(3);
        assert!(matches!(Automorphism::parse(&a3, "1:2,2:1"), Err(Error::NotAutomorphism(_))));
        assert!(matches!(Automorphism::new(&a3, vec![0, 0, 1]), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn edge_map_commutes_with_bar_and_endpoints() {
        let q = Quiver::type_d(4).unwrap();
        let a = Automorphism::triality(&q).unwrap();
        for h in 0..q.arrow_count() {
            let g = a.arrow(h);
            assert_eq!(q.out(g), a.vertex(q.out(h)));
            assert_eq!(q.inc(g), a.vertex(q.inc(h)));
            assert_eq!(a.arrow(q.bar(h)), q.bar(g));
        }
        assert_eq!(a.order(), 3);
        assert_eq!(a.orbits(), vec![vec![0, 2, 3], vec![1]]);
        let inv = a.inverse();
        for i in 0..4 {
            assert_eq!(inv.vertex(a.vertex(i)), i);
        }
    }

    #[test]
    fn json_round_trip() {
        let q = Quiver::type_a(4);
        let back = Quiver::from_json(&q.to_json().to_string()).unwrap();
        assert_eq!(back, q);
        let a = Automorphism::flip_a(&q).unwrap();
        assert_eq!(Automorphism::from_json(&q, &a.to_json(&q).to_string()).unwrap(), a);
    }
}
