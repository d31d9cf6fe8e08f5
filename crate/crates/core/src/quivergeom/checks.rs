use super::{NakajimaPoint, QuiverRep};
use crate::linalg::{rat, QMatrix};
use crate::rootdata::Automorphism;
use crate::{Error, Result};

/// `ψ_i(x) = Σ_{inc h = i} ε(h) x_h x_{h̄} = 0`, per vertex.
pub fn moment_check(r: &QuiverRep) -> Vec<bool> {
    let q = r.quiver();
    (0..q.vertex_count())
        .map(|i| {
            let d = r.dims()[i];
            let psi = q
                .arrows_into(i)
                .into_iter()
                .fold(QMatrix::zeros(d, d), |acc, h| acc.add(&r.map(h).mul(r.map(q.bar(h))).scale(&rat(q.sign(h)))));
            psi.is_zero()
        })
        .collect()
}

/// Every composite of `N = Σ v_i + 1` consecutive maps vanishes.
pub fn nilpotency_check(r: &QuiverRep) -> bool {
    let q = r.quiver();
    let bound = r.dims().iter().sum::<usize>() + 1;
    // depth-first over paths, dropping any path whose composite is already 0
    fn extend(r: &QuiverRep, at: usize, composite: &QMatrix, len: usize, bound: usize) -> bool {
        if len == bound {
            return composite.is_zero();
        }
        r.quiver().arrows_out_of(at).into_iter().all(|h| {
            let next = r.map(h).mul(composite);
            next.is_zero() || extend(r, r.quiver().inc(h), &next, len + 1, bound)
        })
    }
    (0..q.vertex_count())
        .filter(|&i| r.dims()[i] > 0)
        .all(|i| extend(r, i, &QMatrix::identity(r.dims()[i]), 0, bound))
}

/// `dim V_i − rank (x_h)_{inc h = i}`: the dimension of the cokernel of the
/// maps into `V_i`. The framing plays no role.
pub fn epsilon_geom(r: &QuiverRep, i: usize) -> usize {
    let blocks: Vec<&QMatrix> = r.quiver().arrows_into(i).into_iter().map(|h| r.map(h)).collect();
    r.dims()[i] - QMatrix::hcat(r.dims()[i], &blocks).rank()
}

/// No nonzero `x`-stable graded subspace lies in `ker t`. The largest such
/// subspace is computed by shrinking `S_i = ker t_i` until it is stable.
pub fn stability_check(p: &NakajimaPoint) -> bool {
    let r = p.rep();
    let q = r.quiver();
    let n = q.vertex_count();
    let mut basis: Vec<QMatrix> = (0..n).map(|i| p.t(i).kernel()).collect();
    let limit = r.dims().iter().sum::<usize>() + 1;
    for _ in 0..=limit {
        let ann: Vec<QMatrix> = basis.iter().map(QMatrix::annihilator).collect();
        let mut changed = false;
        let next: Vec<QMatrix> = (0..n)
            .map(|i| {
                let b = &basis[i];
                let conditions: Vec<QMatrix> =
                    q.arrows_out_of(i).into_iter().map(|h| ann[q.inc(h)].mul(r.map(h)).mul(b)).collect();
                let refs: Vec<&QMatrix> = conditions.iter().collect();
                let stacked = QMatrix::vcat(b.cols(), &refs);
                let keep = stacked.kernel();
                if keep.cols() == b.cols() {
                    b.clone()
                } else {
                    changed = true;
                    b.mul(&keep)
                }
            })
            .collect();
        basis = next;
        if !changed {
            return basis.iter().all(|b| b.cols() == 0);
        }
    }
    unreachable!("the stable subspace shrinks at most Σ v_i times")
}

fn check_same_quiver(r: &QuiverRep, a: &Automorphism) -> Result<()> {
    if a.vertex_map().len() != r.quiver().vertex_count() {
        return Err(Error::Shape("automorphism does not act on this quiver".into()));
    }
    Ok(())
}

/// `F(𝐚)`: `(ᵃV)_i = V_{𝐚⁻¹ i}`, `(ᵃx)_h = x_{𝐚⁻¹ h}`.
pub fn apply_fa(r: &QuiverRep, a: &Automorphism) -> Result<QuiverRep> {
    check_same_quiver(r, a)?;
    let inv = a.inverse();
    let q = r.quiver();
    let dims = (0..q.vertex_count()).map(|i| r.dims()[inv.vertex(i)]).collect();
    let maps = (0..q.arrow_count()).map(|h| r.map(inv.arrow(h)).clone()).collect();
    QuiverRep::new(q.clone(), dims, maps)
}

/// `F(𝐚)` on a framed point, `(ᵃt)_i = t_{𝐚⁻¹ i}`; the framing must be
/// `𝐚`-invariant.
pub fn apply_fa_point(p: &NakajimaPoint, a: &Automorphism) -> Result<NakajimaPoint> {
    let rep = apply_fa(p.rep(), a)?;
    if a.act(p.wdims()) != p.wdims() {
        return Err(Error::NotInvariant(format!("framing {:?}", p.wdims())));
    }
    let inv = a.inverse();
    let t = (0..p.wdims().len()).map(|i| p.t(inv.vertex(i)).clone()).collect();
    NakajimaPoint::new(rep, p.wdims().to_vec(), t)
}

/// Compares dimension vectors and the ranks of the composites along every
/// path. For nilpotent representations of a type `A` quiver this decides
/// isomorphism; other quivers are refused.
pub fn reps_isomorphic(r1: &QuiverRep, r2: &QuiverRep) -> Result<bool> {
    let q = r1.quiver();
    if q != r2.quiver() {
        return Err(Error::Shape("representations of different quivers".into()));
    }
    if !q.is_type_a() {
        return Err(Error::Unsupported("path ranks decide isomorphism only in type A".into()));
    }
    if r1.dims() != r2.dims() {
        return Ok(false);
    }
    let bound = r1.dims().iter().sum::<usize>() + 1;
    fn walk(r1: &QuiverRep, r2: &QuiverRep, at: usize, m1: &QMatrix, m2: &QMatrix, len: usize, bound: usize) -> bool {
        if m1.rank() != m2.rank() {
            return false;
        }
        if len == bound || (m1.is_zero() && m2.is_zero()) {
            return true;
        }
        r1.quiver().arrows_out_of(at).into_iter().all(|h| {
            let inc = r1.quiver().inc(h);
            walk(r1, r2, inc, &r1.map(h).mul(m1), &r2.map(h).mul(m2), len + 1, bound)
        })
    }
    Ok((0..q.vertex_count()).all(|i| {
        let id = QMatrix::identity(r1.dims()[i]);
        walk(r1, r2, i, &id, &id, 0, bound)
    }))
}
