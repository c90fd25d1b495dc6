//! Connected reductive groups described by torus rank and simple factors.
//!
//! A descriptor is written `T^k x F1[iso] x F2[iso] ...` with `iso` one of
//! `sc` (simply connected, the default) or `ad` (adjoint). Examples: `E8`,
//! `T^1 x A3[sc]`, `A1[ad] x D5[sc]`. The torus term is optional and may
//! appear anywhere in the product.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::FgAbelianGroup;
use crate::rootsys::{Family, RootSystem, RootSystemError, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Type(#[from] RootSystemError),
    #[error("cannot parse group descriptor `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("isogeny `{0}` is not supported; only sc and ad are modelled")]
    UnsupportedIsogeny(String),
    #[error("abelian group has no simple factors, so R_G is undefined")]
    Abelian,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Isogeny {
    #[serde(rename = "sc")]
    SimplyConnected,
    #[serde(rename = "ad")]
    Adjoint,
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Isogeny::SimplyConnected => "sc",
            Isogeny::Adjoint => "ad",
        })
    }
}

impl FromStr for Isogeny {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "sc" => Ok(Isogeny::SimplyConnected),
            "ad" => Ok(Isogeny::Adjoint),
            other => Err(GroupError::UnsupportedIsogeny(other.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub isogeny: Isogeny,
}

impl Factor {
    pub fn sc(ty: SimpleType) -> Self {
        Self {
            ty,
            isogeny: Isogeny::SimplyConnected,
        }
    }

    pub fn ad(ty: SimpleType) -> Self {
        Self {
            ty,
            isogeny: Isogeny::Adjoint,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub torus_rank: u32,
    pub factors: Vec<Factor>,
}

impl GroupDescriptor {
    pub fn new(torus_rank: u32, factors: Vec<Factor>) -> Self {
        Self {
            torus_rank,
            factors,
        }
    }

    /// A single simply connected simple factor.
    pub fn simple(ty: SimpleType) -> Self {
        Self::new(0, vec![Factor::sc(ty)])
    }

    pub fn is_abelian(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus_rank == 0
    }

    /// Rank of the derived subgroup.
    pub fn derived_rank(&self) -> usize {
        self.factors.iter().map(|f| f.ty.rank()).sum()
    }

    pub fn dimension(&self) -> usize {
        self.torus_rank as usize
            + self
                .factors
                .iter()
                .map(|f| RootSystem::new(f.ty).dimension())
                .sum::<usize>()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.torus_rank > 0 || self.factors.is_empty() {
            parts.push(format!("T^{}", self.torus_rank));
        }
        parts.extend(self.factors.iter().map(|x| format!("{}[{}]", x.ty, x.isogeny)));
        f.write_str(&parts.join(" x "))
    }
}

impl FromStr for GroupDescriptor {
    type Err = GroupError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| GroupError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        if input.trim().is_empty() {
            return Err(fail("empty descriptor"));
        }
        let mut torus: Option<u32> = None;
        let mut factors = Vec::new();
        for term in input.split(['x', '×']).map(str::trim) {
            if term.is_empty() {
                return Err(fail("empty product term"));
            }
            if let Some(k) = term.strip_prefix("T^") {
                if torus.is_some() {
                    return Err(fail("torus given twice"));
                }
                torus = Some(k.trim().parse().map_err(|_| fail("bad torus rank"))?);
                continue;
            }
            if term == "T" {
                if torus.is_some() {
                    return Err(fail("torus given twice"));
                }
                torus = Some(1);
                continue;
            }
            let (name, iso) = match term.find('[') {
                Some(open) => {
                    let close = term
                        .strip_suffix(']')
                        .ok_or_else(|| fail("unterminated isogeny tag"))?;
                    (&term[..open], close[open + 1..].parse::<Isogeny>()?)
                }
                None => (term, Isogeny::SimplyConnected),
            };
            let ty: SimpleType = name.trim().parse()?;
            factors.push(Factor { ty, isogeny: iso });
        }
        Ok(GroupDescriptor::new(torus.unwrap_or(0), factors))
    }
}

/// Centre of the simply connected group of type `t`: weight lattice modulo
/// root lattice, the cokernel of the Cartan matrix.
pub fn center_group(t: SimpleType) -> FgAbelianGroup {
    let system = RootSystem::new(t);
    FgAbelianGroup::cokernel(system.cartan(), t.rank())
}

/// `π_1(G) = Z^torus ⊕ (centres of the adjoint factors)`.
pub fn pi1(g: &GroupDescriptor) -> FgAbelianGroup {
    let torsion: FgAbelianGroup = g
        .factors
        .iter()
        .filter(|f| f.isogeny == Isogeny::Adjoint)
        .map(|f| center_group(f.ty))
        .sum();
    FgAbelianGroup::free(g.torus_rank).direct_sum(&torsion)
}

/// `π_1(PG)`: independent of the isogeny and of the central torus.
pub fn pi1_adjoint(g: &GroupDescriptor) -> FgAbelianGroup {
    g.factors.iter().map(|f| center_group(f.ty)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiDecision {
    pub is_ci: bool,
    pub witness: String,
}

/// CI iff the derived subgroup is a product of special linear groups.
pub fn is_ci(g: &GroupDescriptor) -> CiDecision {
    for f in &g.factors {
        if f.ty.family() != Family::A {
            return CiDecision {
                is_ci: false,
                witness: format!("factor {} is not of type A", f.ty),
            };
        }
        if f.isogeny != Isogeny::SimplyConnected {
            return CiDecision {
                is_ci: false,
                witness: format!("factor {} is not simply connected", f.ty),
            };
        }
    }
    let witness = if g.is_abelian() {
        "abelian group: derived subgroup is trivial".to_string()
    } else {
        let names: Vec<String> = g
            .factors
            .iter()
            .map(|f| format!("SL{}", f.ty.rank() + 1))
            .collect();
        format!("derived subgroup is {}", names.join(" x "))
    };
    CiDecision {
        is_ci: true,
        witness,
    }
}

/// `R_G`, the minimum rank of a simple factor.
pub fn min_simple_rank(g: &GroupDescriptor) -> Result<usize, GroupError> {
    g.factors
        .iter()
        .map(|f| f.ty.rank())
        .min()
        .ok_or(GroupError::Abelian)
}
