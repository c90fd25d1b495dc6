//! Local models at reducible points of `X_r(G)`.
//!
//! For the maximal parabolic attached to node `i`, the `C^*` acting through
//! the centre of the Levi factor has weight `n` on the root spaces whose
//! `α_i`-coefficient is `n`. The slice is the `(r-1)`-fold sum of the
//! nilradicals, so `d_n = (r-1) · #{roots with α_i-coefficient n}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rootsys::{RootSystem, RootSystemError, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalModelError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("free-group rank r = {0} is too small; local models need r >= 2")]
    RankTooSmall(u32),
}

/// Weight multiplicities `d_n` for `n != 0`.
///
/// `d_0` depends on the representation, not only on `(t, i, r)`, and plays
/// no part in the singularity test, so it is not recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub simple_type: SimpleType,
    pub node: usize,
    pub r: u32,
    pub d: BTreeMap<i64, u64>,
}

impl WeightProfile {
    pub fn d(&self, n: i64) -> u64 {
        self.d.get(&n).copied().unwrap_or(0)
    }

    /// `Σ_{n>=1} d_n`.
    pub fn positive_total(&self) -> u64 {
        self.d.range(1..).map(|(_, &v)| v).sum()
    }

    /// The `M` of the link when the positive and negative weights each form
    /// a single block, i.e. `Σ_{n>=1} d_n - 1`. `None` when no weight is
    /// positive.
    pub fn link_m(&self) -> Option<u64> {
        self.positive_total().checked_sub(1)
    }
}

pub fn parabolic_weights(t: SimpleType, i: usize, r: u32) -> Result<WeightProfile, LocalModelError> {
    if r < 2 {
        return Err(LocalModelError::RankTooSmall(r));
    }
    let system = RootSystem::new(t);
    system.check_node(i)?;
    let mut d = BTreeMap::new();
    for root in system.all_roots() {
        let n = root.coords()[i - 1];
        if n != 0 {
            *d.entry(n).or_insert(0) += (r - 1) as u64;
        }
    }
    Ok(WeightProfile {
        simple_type: t,
        node: i,
        r,
        d,
    })
}

/// The quotient has a topological singularity at the origin iff more than
/// one positive weight occurs (with multiplicity).
pub fn is_topologically_singular(w: &WeightProfile) -> bool {
    w.positive_total() > 1
}

/// Degrees of nonvanishing rational homology of the link
/// `{0, 2, ..., 2M} ∪ {2M+1, 2M+3, ..., 4M+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologySupport {
    pub m: u64,
    pub dims: Vec<u64>,
}

impl HomologySupport {
    pub fn is_sphere_like(&self) -> bool {
        self.dims.len() == 2
    }
}

pub fn homology_support(m: u64) -> HomologySupport {
    let even = (0..=m).map(|j| 2 * j);
    let odd = (0..=m).map(|j| 2 * m + 1 + 2 * j);
    HomologySupport {
        m,
        dims: even.chain(odd).collect(),
    }
}

pub fn is_sphere_like(m: u64) -> bool {
    homology_support(m).is_sphere_like()
}
