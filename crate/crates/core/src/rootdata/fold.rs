use num_rational::Ratio;

use super::{Automorphism, CartanDatum, Quiver, Weight};
use crate::{Error, Result};

/// The datum obtained from a quiver and an admissible automorphism: the
/// orbit set `𝐈`, the symmetric matrix `M`, `D = diag(|𝐢|)` and
/// `C = D^{-1} M`.
#[derive(Clone, Debug)]
pub struct FoldedDatum {
    source: Quiver,
    source_cartan: CartanDatum,
    auto: Automorphism,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    form: Vec<Vec<i64>>,
    cartan: CartanDatum,
}

/// Folds `q` along `a`. Orbits are ordered by their smallest vertex.
pub fn fold(q: &Quiver, a: &Automorphism) -> Result<FoldedDatum> {
    let report = a.check_admissible(q);
    if !report.admissible {
        return Err(Error::NonAdmissible(report.offending));
    }
    let orbits = a.orbits();
    let n = orbits.len();
    let mut orbit_of = vec![0; q.vertex_count()];
    for (k, o) in orbits.iter().enumerate() {
        for &i in o {
            orbit_of[i] = k;
        }
    }
    let mut form = vec![vec![0i64; n]; n];
    for (k, o) in orbits.iter().enumerate() {
        form[k][k] = 2 * o.len() as i64;
    }
    for &(u, v) in q.edges() {
        let (ku, kv) = (orbit_of[u], orbit_of[v]);
        debug_assert_ne!(ku, kv);
        form[ku][kv] -= 1;
        form[kv][ku] -= 1;
    }
    let d: Vec<i64> = orbits.iter().map(|o| o.len() as i64).collect();
    let mut matrix = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if form[i][j] % d[i] != 0 {
                return Err(Error::Invariant(format!(
                    "m_{i}{j} = {} not divisible by d_{i} = {}",
                    form[i][j], d[i]
                )));
            }
            matrix[i][j] = form[i][j] / d[i];
        }
    }
    let names = orbits
        .iter()
        .map(|o| o.iter().map(|&i| q.name(i)).collect::<Vec<_>>().join("+"))
        .collect();
    let cartan = CartanDatum::new(names, matrix, d)?;
    Ok(FoldedDatum {
        source: q.clone(),
        source_cartan: CartanDatum::from_quiver(q),
        auto: a.clone(),
        orbits,
        orbit_of,
        form,
        cartan,
    })
}

impl FoldedDatum {
    pub fn source(&self) -> &Quiver {
        &self.source
    }

    pub fn source_cartan(&self) -> &CartanDatum {
        &self.source_cartan
    }

    pub fn automorphism(&self) -> &Automorphism {
        &self.auto
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    /// `d_𝐢 = |𝐢|`.
    pub fn d(&self, k: usize) -> i64 {
        self.orbits[k].len() as i64
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    /// `f(x)_𝐢 = x_i` for any `i ∈ 𝐢`; rejects non-invariant input.
    pub fn fold_vector(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.source.vertex_count() {
            return Err(Error::Shape(format!("expected {} entries", self.source.vertex_count())));
        }
        self.orbits
            .iter()
            .map(|o| {
                let v = x[o[0]];
                if o.iter().any(|&i| x[i] != v) {
                    Err(Error::NotInvariant(format!("{x:?}")))
                } else {
                    Ok(v)
                }
            })
            .collect()
    }

    pub fn unfold_vector(&self, y: &[i64]) -> Result<Vec<i64>> {
        if y.len() != self.orbits.len() {
            return Err(Error::Shape(format!("expected {} entries", self.orbits.len())));
        }
        let mut x = vec![0; self.source.vertex_count()];
        for (k, o) in self.orbits.iter().enumerate() {
            for &i in o {
                x[i] = y[k];
            }
        }
        Ok(x)
    }

    pub fn fold_weight(&self, wt: &Weight) -> Result<Weight> {
        Ok(Weight { base: self.fold_vector(&wt.base)?, drop: self.fold_vector(&wt.drop)? })
    }

    /// `ω_𝐢 ↦ Σ_{i∈𝐢} ω_i`, `α_𝐢 ↦ Σ_{i∈𝐢} α_i`.
    pub fn unfold_weight(&self, wt: &Weight) -> Result<Weight> {
        Ok(Weight { base: self.unfold_vector(&wt.base)?, drop: self.unfold_vector(&wt.drop)? })
    }

    /// `⟨h_𝐢, wt⟩` with `h_𝐢 = (1/d_𝐢) Σ_{i∈𝐢} h_i`, evaluated on a weight of
    /// the source. The result must be an integer for invariant weights.
    pub fn lifted_pairing(&self, k: usize, source_wt: &Weight) -> Result<i64> {
        let sum: i64 = self.orbits[k].iter().map(|&i| self.source_cartan.pairing(i, source_wt)).sum();
        let avg = Ratio::new(sum, self.d(k));
        if !avg.is_integer() {
            return Err(Error::Invariant(format!("⟨h_{k}, wt⟩ = {avg} is not integral")));
        }
        Ok(avg.to_integer())
    }

    /// Lift-and-average pairing for a weight given over the orbit set.
    pub fn pairing(&self, k: usize, wt: &Weight) -> Result<i64> {
        self.lifted_pairing(k, &self.unfold_weight(wt)?)
    }
}

/// Built-in folds, keyed by the target type: `B_n` from `A_{2n−1}` with the
/// flip, `C_n` (n ≥ 3) from `D_{n+1}` swapping the fork, `G_2` from `D_4`
/// with triality.
pub fn builtin_fold(target: &str) -> Result<FoldedDatum> {
    let t = target.trim();
    let bad = || Error::Parse(format!("unknown folded type {target:?}"));
    let (letter, rank) = t.split_at(1.min(t.len()));
    let rank: usize = rank.trim_start_matches('_').parse().map_err(|_| bad())?;
    match (letter.to_ascii_uppercase().as_str(), rank) {
        ("B", n) if n >= 1 => {
            let q = Quiver::type_a(2 * n - 1);
            fold(&q, &Automorphism::flip_a(&q)?)
        }
        ("C", n) if n >= 3 => {
            let q = Quiver::type_d(n + 1)?;
            let mut map: Vec<usize> = (0..=n).collect();
            map.swap(n - 1, n);
            fold(&q, &Automorphism::new(&q, map)?)
        }
        ("G", 2) => {
            let q = Quiver::type_d(4)?;
            fold(&q, &Automorphism::triality(&q)?)
        }
        _ => Err(bad()),
    }
}

/// Parses a fold shorthand `SOURCE:TARGET`, e.g. `A5:Bn`, `A3:B2`, `D4:G2`,
/// `D5:Cn`, or `A3:id`. The source rank decides the target rank.
pub fn parse_fold_spec(spec: &str) -> Result<FoldedDatum> {
    let (src, tgt) = spec.split_once(':').ok_or_else(|| Error::Parse(format!("expected SOURCE:TARGET, got {spec:?}")))?;
    let q = parse_quiver_shorthand(src)?;
    let auto = match tgt.trim().chars().next().map(|c| c.to_ascii_uppercase()) {
        Some('B') => Automorphism::flip_a(&q)?,
        Some('C') => {
            let n = q.vertex_count();
            let mut map: Vec<usize> = (0..n).collect();
            map.swap(n - 2, n - 1);
            Automorphism::new(&q, map)?
        }
        Some('G') => Automorphism::triality(&q)?,
        Some('I') | Some('A') | Some('D') => Automorphism::identity(&q),
        _ => return Err(Error::Parse(format!("unknown fold target {tgt:?}"))),
    };
    fold(&q, &auto)
}

/// `A<n>` or `D<n>`.
pub fn parse_quiver_shorthand(s: &str) -> Result<Quiver> {
    let s = s.trim();
    let bad = || Error::Parse(format!("unknown quiver shorthand {s:?}"));
    let (letter, rank) = s.split_at(1.min(s.len()));
    let rank: usize = rank.trim_start_matches('_').parse().map_err(|_| bad())?;
    match letter.to_ascii_uppercase().as_str() {
        "A" if rank >= 1 => Ok(Quiver::type_a(rank)),
        "D" => Quiver::type_d(rank),
        _ => Err(bad()),
    }
}
