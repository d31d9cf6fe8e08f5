use super::{explore, BInfinity, CrystalGraph, GraphKind, HighestWeightModel};
use crate::rootdata::CartanDatum;
use crate::{Error, Result};

/// All elements of `B(∞)` reached by at most `depth` applications of the
/// `f̃_i`, with every edge between them.
pub fn generate_binfinity(cd: &CartanDatum, depth: usize) -> CrystalGraph {
    let kind = GraphKind::Infinity { depth, height_scale: vec![1; cd.rank()] };
    explore(&BInfinity::new(cd.clone()), Some(depth), kind)
}

/// `B(λ)` cut out of `B(∞) ⊗ T_λ`. Without a depth the crystal is generated
/// completely, which requires finite type.
pub fn generate_blambda(cd: &CartanDatum, lambda: &[i64], depth: Option<usize>) -> Result<CrystalGraph> {
    if lambda.len() != cd.rank() {
        return Err(Error::Shape(format!("weight has {} entries, rank is {}", lambda.len(), cd.rank())));
    }
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    if depth.is_none() && !cd.is_finite_type() {
        return Err(Error::NotFiniteType);
    }
    let kind = GraphKind::HighestWeight { lambda: lambda.to_vec() };
    Ok(explore(&HighestWeightModel::new(cd.clone(), lambda.to_vec()), depth, kind))
}
