//! Lower bounds on the codimension of the non-good locus of
//! `hom(F_r, G)`, the resulting stable range for homotopy, and the
//! classification of the singular locus of `X_r(G)`.
//!
//! Every number here is a lower bound; the exact codimension is never
//! computed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{min_simple_rank, GroupDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("free-group rank r = {0} is too small; the bounds need r >= 2")]
    RankTooSmall(u32),
    #[error("free-group rank r must be positive")]
    ZeroRank,
}

fn check_rank(r: u32) -> Result<(), BoundsError> {
    if r < 2 {
        Err(BoundsError::RankTooSmall(r))
    } else {
        Ok(())
    }
}

/// Complex codimension of the bad locus is at least `2(r-1) R_G`. The bad
/// locus of an abelian group is empty; its codimension is reported as
/// `r * dim G`.
pub fn codim_bad_lower(g: &GroupDescriptor, r: u32) -> Result<u64, BoundsError> {
    check_rank(r)?;
    Ok(match min_simple_rank(g) {
        Ok(rg) => 2 * (r as u64 - 1) * rg as u64,
        Err(_) => r as u64 * g.dimension() as u64,
    })
}

/// Complex codimension of the reducible locus is at least `(r-1) rank DG`.
pub fn codim_red_lower(g: &GroupDescriptor, r: u32) -> Result<u64, BoundsError> {
    check_rank(r)?;
    Ok((r as u64 - 1) * g.derived_rank() as u64)
}

/// Real codimension of the non-good locus is at least twice the smaller of
/// the two complex bounds.
pub fn c_pasbon_lower(g: &GroupDescriptor, r: u32) -> Result<u64, BoundsError> {
    Ok(2 * codim_bad_lower(g, r)?.min(codim_red_lower(g, r)?))
}

/// Largest `k` for which `π_k` of the good locus is known to split. Negative
/// when no positive degree is covered (abelian groups).
pub fn stable_range(g: &GroupDescriptor, r: u32) -> Result<i64, BoundsError> {
    Ok(c_pasbon_lower(g, r)? as i64 - 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimReport {
    pub group: GroupDescriptor,
    pub r: u32,
    pub bad_lower: u64,
    pub red_lower: u64,
    pub c_pasbon_lower: u64,
    pub stable_k_max: i64,
    pub lower_bound: bool,
}

pub fn codim_report(g: &GroupDescriptor, r: u32) -> Result<CodimReport, BoundsError> {
    Ok(CodimReport {
        group: g.clone(),
        r,
        bad_lower: codim_bad_lower(g, r)?,
        red_lower: codim_red_lower(g, r)?,
        c_pasbon_lower: c_pasbon_lower(g, r)?,
        stable_k_max: stable_range(g, r)?,
        lower_bound: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    FullClassification,
    #[serde(rename = "Undetermined_r2_rank1")]
    UndeterminedR2Rank1,
    RankOneFreeGroup,
    Abelian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularLocusReport {
    pub group: GroupDescriptor,
    pub r: u32,
    pub verdict: Verdict,
    pub statements: Vec<String>,
}

pub fn classify_singular_locus(
    g: &GroupDescriptor,
    r: u32,
) -> Result<SingularLocusReport, BoundsError> {
    if r == 0 {
        return Err(BoundsError::ZeroRank);
    }
    let (verdict, statements): (Verdict, Vec<&str>) = if g.is_abelian() {
        (
            Verdict::Abelian,
            vec![
                "G is a torus, so X_r(G) = G^r is smooth.",
                "The bad and reducible loci are empty.",
            ],
        )
    } else if r == 1 {
        (
            Verdict::RankOneFreeGroup,
            vec![
                "X_1(G) = G//G is isomorphic to an affine space when the derived subgroup is simply connected.",
                "No free-group rank r >= 2 hypothesis holds, so the singular-locus theorem does not apply.",
            ],
        )
    } else if r >= 3 || min_simple_rank(g).is_ok_and(|rg| rg >= 2) {
        (
            Verdict::FullClassification,
            vec![
                "The singular locus equals the union of the reducible and the bad loci.",
                "Every reducible representation is ugly.",
                "Every bad representation is ugly.",
            ],
        )
    } else {
        (
            Verdict::UndeterminedR2Rank1,
            vec![
                "r = 2 and the derived subgroup has a simple factor of rank 1.",
                "Here reducible points can be smooth and irreducible points can be singular, e.g. X_2(PSL_2(C)).",
                "The singular locus is not determined by reducibility and badness alone.",
            ],
        )
    };
    Ok(SingularLocusReport {
        group: g.clone(),
        r,
        verdict,
        statements: statements.into_iter().map(String::from).collect(),
    })
}
