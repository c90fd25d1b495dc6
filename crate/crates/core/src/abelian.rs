//! Finitely generated abelian groups in invariant-factor normal form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::snf;

/// `Z^free_rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_m}` with `2 <= d_1 | d_2 | ... | d_m`,
/// or the unknown marker.
///
/// The unknown marker stands for a group nobody has computed. It absorbs every
/// operation: summing anything with an unknown group is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGroup")]
pub struct FgAbelianGroup {
    free_rank: u32,
    torsion: Vec<u64>,
    known: bool,
}

#[derive(Deserialize)]
struct RawGroup {
    free_rank: u32,
    torsion: Vec<u64>,
    known: bool,
}

impl TryFrom<RawGroup> for FgAbelianGroup {
    type Error = String;

    fn try_from(raw: RawGroup) -> Result<Self, Self::Error> {
        if !raw.known {
            if raw.free_rank != 0 || !raw.torsion.is_empty() {
                return Err("unknown group must carry no data".into());
            }
            return Ok(Self::unknown());
        }
        let normal = Self::new(raw.free_rank, raw.torsion.iter().copied());
        if normal.torsion != raw.torsion {
            return Err(format!(
                "torsion {:?} is not in invariant-factor form",
                raw.torsion
            ));
        }
        Ok(normal)
    }
}

impl FgAbelianGroup {
    /// Builds the group `Z^free_rank ⊕ (⊕ Z_c for c in cyclic_orders)` and
    /// normalizes it. Orders 0 and 1 are ignored.
    pub fn new(free_rank: u32, cyclic_orders: impl IntoIterator<Item = u64>) -> Self {
        let orders: Vec<u64> = cyclic_orders.into_iter().filter(|&c| c > 1).collect();
        let n = orders.len();
        let diagonal: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { orders[i] as i64 } else { 0 })
                    .collect()
            })
            .collect();
        let torsion = snf::invariant_factors(&diagonal)
            .into_iter()
            .filter(|&d| d > 1)
            .map(|d| d as u64)
            .collect();
        Self {
            free_rank,
            torsion,
            known: true,
        }
    }

    pub fn trivial() -> Self {
        Self::new(0, [])
    }

    /// `Z^n`.
    pub fn free(n: u32) -> Self {
        Self::new(n, [])
    }

    /// `Z_n`; `cyclic(0)` is `Z`.
    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            Self::free(1)
        } else {
            Self::new(0, [n])
        }
    }

    pub fn unknown() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
            known: false,
        }
    }

    /// Cokernel `Z^cols / rowspace(relations)`.
    pub fn cokernel(relations: &[Vec<i64>], cols: usize) -> Self {
        let factors = snf::invariant_factors(relations);
        let free_rank = (cols - factors.len()) as u32;
        Self::new(free_rank, factors.into_iter().map(|d| d as u64))
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_known(&self) -> bool {
        self.known
    }

    pub fn is_trivial(&self) -> bool {
        self.known && self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of a known finite group.
    pub fn order(&self) -> Option<u64> {
        (self.known && self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if !self.known || !other.known {
            return Self::unknown();
        }
        Self::new(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// `self^n`, the direct sum of `n` copies.
    pub fn power(&self, n: u32) -> Self {
        if !self.known {
            return Self::unknown();
        }
        Self::new(
            self.free_rank * n,
            (0..n).flat_map(|_| self.torsion.iter().copied()),
        )
    }
}

impl<'a> std::iter::Sum<&'a FgAbelianGroup> for FgAbelianGroup {
    fn sum<I: Iterator<Item = &'a FgAbelianGroup>>(iter: I) -> Self {
        iter.fold(Self::trivial(), |acc, g| acc.direct_sum(g))
    }
}

impl std::iter::Sum for FgAbelianGroup {
    fn sum<I: Iterator<Item = FgAbelianGroup>>(iter: I) -> Self {
        iter.fold(Self::trivial(), |acc, g| acc.direct_sum(&g))
    }
}

impl fmt::Display for FgAbelianGroup {
    /// `0`, `Z^2 ⊕ (Z_2)^3 ⊕ Z_6`, or `?`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.known {
            return f.write_str("?");
        }
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            if run == 1 {
                parts.push(format!("Z_{d}"));
            } else {
                parts.push(format!("(Z_{d})^{run}"));
            }
            i += run;
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}
