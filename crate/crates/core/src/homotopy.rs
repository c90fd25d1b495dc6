//! Homotopy groups of simple groups and of the good locus of `X_r(G)`.
//!
//! In the stable range the good locus satisfies
//! `π_k(X_r(G)^good) = π_k(G)^r ⊕ π_{k-1}(PG)`.
//!
//! `π_k` of a simple group is answered, in order, by
//! 1. `k = 0` (trivial) and `k = 1` (trivial, or the centre when adjoint);
//! 2. an explicit database entry (the embedded exceptional table, or a file
//!    supplied by the caller);
//! 3. Bott periodicity for a classical realization inside its stable range:
//!    `SU(n+1)` for `k <= 2n+1`, `Sp(n)` for `k <= 4n+1`, `Spin(m)` for
//!    `k <= m-2`. `A1` is also `Sp(1)`, `A3` is `Spin(6)`, `B2` is `Sp(2)`;
//! 4. otherwise the group is unknown.
//!
//! For `k >= 2` the answer does not depend on the isogeny.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::FgAbelianGroup;
use crate::bounds::{stable_range, BoundsError};
use crate::groups::{center_group, GroupDescriptor, Isogeny};
use crate::rootsys::{Family, SimpleType};

const EMBEDDED_DB: &str = include_str!("../data/homotopy.db");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error("homotopy database line {line}: {reason}")]
    DbParse { line: usize, reason: String },
    #[error("cannot read homotopy database {path}: {reason}")]
    Io { path: String, reason: String },
}

pub fn fga_direct_sum(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    a.direct_sum(b)
}

pub fn fga_power(a: &FgAbelianGroup, n: u32) -> FgAbelianGroup {
    a.power(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbEntry {
    pub group: FgAbelianGroup,
    pub provenance: String,
}

/// `(type, isogeny or any, k) -> group`. Immutable once built.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomotopyDatabase {
    entries: HashMap<(SimpleType, Option<Isogeny>, u32), DbEntry>,
}

impl HomotopyDatabase {
    /// The database shipped with the crate.
    pub fn embedded() -> &'static HomotopyDatabase {
        static DB: OnceLock<HomotopyDatabase> = OnceLock::new();
        DB.get_or_init(|| HomotopyDatabase::parse(EMBEDDED_DB).expect("embedded database parses"))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, HomotopyError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| HomotopyError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Lines are `type iso k free_rank torsion provenance...`; `#` starts a
    /// comment. `iso` is `sc`, `ad` or `*`; torsion is comma separated or
    /// `-`; `?` in the numeric columns marks an unknown group.
    pub fn parse(text: &str) -> Result<Self, HomotopyError> {
        let mut entries = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fail = |reason: String| HomotopyError::DbParse {
                line: idx + 1,
                reason,
            };
            let cols: Vec<&str> = line.splitn(6, char::is_whitespace).collect();
            if cols.len() < 5 {
                return Err(fail(format!("expected at least 5 columns, got {}", cols.len())));
            }
            let ty: SimpleType = cols[0].parse().map_err(|e| fail(format!("{e}")))?;
            let iso = match cols[1] {
                "*" => None,
                s => Some(s.parse::<Isogeny>().map_err(|e| fail(format!("{e}")))?),
            };
            let k: u32 = cols[2]
                .parse()
                .map_err(|_| fail(format!("bad degree `{}`", cols[2])))?;
            let group = match (cols[3], cols[4]) {
                ("?", "?") => FgAbelianGroup::unknown(),
                ("?", _) | (_, "?") => return Err(fail("`?` must fill both numeric columns".into())),
                (free, tors) => {
                    let free: u32 = free
                        .parse()
                        .map_err(|_| fail(format!("bad free rank `{free}`")))?;
                    let torsion = if tors == "-" {
                        Vec::new()
                    } else {
                        tors.split(',')
                            .map(|d| d.trim().parse::<u64>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| fail(format!("bad torsion `{tors}`")))?
                    };
                    FgAbelianGroup::new(free, torsion)
                }
            };
            let provenance = cols.get(5).map(|s| s.trim().to_string()).unwrap_or_default();
            if entries
                .insert((ty, iso, k), DbEntry { group, provenance })
                .is_some()
            {
                return Err(fail(format!("duplicate entry for {ty} {} {k}", cols[1])));
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn entry(&self, t: SimpleType, iso: Isogeny, k: u32) -> Option<&DbEntry> {
        self.entries
            .get(&(t, Some(iso), k))
            .or_else(|| self.entries.get(&(t, None, k)))
    }

    /// `π_k` of the simple group of type `t` and the given isogeny, together
    /// with where the answer came from.
    pub fn pi_simple_traced(&self, t: SimpleType, iso: Isogeny, k: u32) -> (FgAbelianGroup, String) {
        if k == 0 {
            return (FgAbelianGroup::trivial(), "connected".into());
        }
        if k == 1 {
            return match iso {
                Isogeny::SimplyConnected => (FgAbelianGroup::trivial(), "simply connected".into()),
                Isogeny::Adjoint => (center_group(t), "centre of the simply connected form".into()),
            };
        }
        if let Some(e) = self.entry(t, iso, k) {
            return (e.group.clone(), e.provenance.clone());
        }
        match bott(t, k) {
            Some((g, via)) => (g, format!("Bott periodicity via {via}")),
            None => (FgAbelianGroup::unknown(), "outside known range".into()),
        }
    }

    pub fn pi_simple(&self, t: SimpleType, iso: Isogeny, k: u32) -> FgAbelianGroup {
        self.pi_simple_traced(t, iso, k).0
    }

    /// `π_k(X_r(G)^good)` assembled from the splitting formula, flagged with
    /// whether the formula is proven to apply.
    pub fn good_locus_homotopy(
        &self,
        g: &GroupDescriptor,
        r: u32,
        k: u32,
    ) -> Result<HomotopyResult, HomotopyError> {
        let stable = stable_range(g, r)?;
        let validity = if k >= 1 && (k as i64) <= stable {
            Validity::Stable
        } else if k == 0 || (k <= 2 && (r >= 3 || g.derived_rank() >= 2)) {
            Validity::Pi0Pi1Pi2Hypothesis
        } else {
            Validity::OutOfProvenRange
        };
        if k == 0 {
            return Ok(HomotopyResult {
                value: FgAbelianGroup::trivial(),
                validity,
                formula_trace: "π_0 of the good locus is trivial".into(),
            });
        }

        let mut pi_k = if k == 1 {
            FgAbelianGroup::free(g.torus_rank)
        } else {
            FgAbelianGroup::trivial()
        };
        let mut pi_k_names = Vec::new();
        let mut pi_prev = FgAbelianGroup::trivial();
        let mut pi_prev_names = Vec::new();
        if k == 1 && g.torus_rank > 0 {
            pi_k_names.push(format!("Z^{}", g.torus_rank));
        }
        for f in &g.factors {
            let (a, src) = self.pi_simple_traced(f.ty, f.isogeny, k);
            pi_k_names.push(format!("π_{k}({}[{}]) = {a} [{src}]", f.ty, f.isogeny));
            pi_k = pi_k.direct_sum(&a);
            let (b, src) = self.pi_simple_traced(f.ty, Isogeny::Adjoint, k - 1);
            pi_prev_names.push(format!("π_{}({}[ad]) = {b} [{src}]", k - 1, f.ty));
            pi_prev = pi_prev.direct_sum(&b);
        }
        let value = pi_k.power(r).direct_sum(&pi_prev);
        let list = |v: &[String]| if v.is_empty() { "0".to_string() } else { v.join("; ") };
        let formula_trace = format!(
            "π_{k} = π_{k}(G)^{r} ⊕ π_{}(PG); π_{k}(G) = {pi_k}: {}; π_{}(PG) = {pi_prev}: {}",
            k - 1,
            list(&pi_k_names),
            k - 1,
            list(&pi_prev_names),
        );
        Ok(HomotopyResult {
            value,
            validity,
            formula_trace,
        })
    }
}

/// `π_k` of a realization of `t` in its Bott stable range, `k >= 2`.
fn bott(t: SimpleType, k: u32) -> Option<(FgAbelianGroup, String)> {
    let n = t.rank() as u32;
    let mut realizations: Vec<(Classical, u32)> = Vec::new();
    match t.family() {
        Family::A => {
            realizations.push((Classical::Unitary, n + 1));
            if n == 1 {
                realizations.push((Classical::Symplectic, 1));
            }
            if n == 3 {
                realizations.push((Classical::Orthogonal, 6));
            }
        }
        Family::B => {
            realizations.push((Classical::Orthogonal, 2 * n + 1));
            if n == 2 {
                realizations.push((Classical::Symplectic, 2));
            }
        }
        Family::C => realizations.push((Classical::Symplectic, n)),
        Family::D => realizations.push((Classical::Orthogonal, 2 * n)),
        _ => {}
    }
    realizations
        .into_iter()
        .find(|&(c, m)| k <= c.stable_limit(m))
        .map(|(c, m)| (c.stable_group(k), c.name(m)))
}

#[derive(Clone, Copy)]
enum Classical {
    Unitary,
    Symplectic,
    Orthogonal,
}

impl Classical {
    fn stable_limit(self, m: u32) -> u32 {
        match self {
            Classical::Unitary => 2 * m - 1,
            Classical::Symplectic => 4 * m + 1,
            Classical::Orthogonal => m - 2,
        }
    }

    fn stable_group(self, k: u32) -> FgAbelianGroup {
        let z = FgAbelianGroup::free(1);
        let z2 = FgAbelianGroup::cyclic(2);
        let zero = FgAbelianGroup::trivial();
        match self {
            Classical::Unitary => {
                if k % 2 == 1 {
                    z
                } else {
                    zero
                }
            }
            Classical::Symplectic => match k % 8 {
                3 | 7 => z,
                4 | 5 => z2,
                _ => zero,
            },
            Classical::Orthogonal => match k % 8 {
                0 | 1 => z2,
                3 | 7 => z,
                _ => zero,
            },
        }
    }

    fn name(self, m: u32) -> String {
        match self {
            Classical::Unitary => format!("SU({m})"),
            Classical::Symplectic => format!("Sp({m})"),
            Classical::Orthogonal => format!("Spin({m})"),
        }
    }
}

/// [`HomotopyDatabase::pi_simple`] on the embedded database.
pub fn pi_simple(t: SimpleType, iso: Isogeny, k: u32) -> FgAbelianGroup {
    HomotopyDatabase::embedded().pi_simple(t, iso, k)
}

/// [`HomotopyDatabase::good_locus_homotopy`] on the embedded database.
pub fn good_locus_homotopy(
    g: &GroupDescriptor,
    r: u32,
    k: u32,
) -> Result<HomotopyResult, HomotopyError> {
    HomotopyDatabase::embedded().good_locus_homotopy(g, r, k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Validity {
    Stable,
    Pi0Pi1Pi2Hypothesis,
    OutOfProvenRange,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Validity::Stable => "Stable",
            Validity::Pi0Pi1Pi2Hypothesis => "Pi0Pi1Pi2Hypothesis",
            Validity::OutOfProvenRange => "OutOfProvenRange",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyResult {
    pub value: FgAbelianGroup,
    pub validity: Validity,
    pub formula_trace: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    const SC: Isogeny = Isogeny::SimplyConnected;
    const AD: Isogeny = Isogeny::Adjoint;

    #[test]
    fn database_lookups() {
        assert_eq!(pi_simple(t("G2"), SC, 6), FgAbelianGroup::cyclic(3));
        assert_eq!(pi_simple(t("G2"), AD, 6), FgAbelianGroup::cyclic(3));
        assert_eq!(pi_simple(t("E8"), AD, 15), FgAbelianGroup::free(1));
        assert!(!pi_simple(t("E6"), SC, 10).is_known());
        assert!(!pi_simple(t("E8"), SC, 16).is_known());
    }

    #[test]
    fn low_degrees() {
        for ty in SimpleType::all_up_to_rank(8) {
            assert!(pi_simple(ty, SC, 1).is_trivial());
            assert_eq!(pi_simple(ty, AD, 1), center_group(ty));
            assert!(pi_simple(ty, SC, 2).is_trivial(), "{ty}");
            assert_eq!(pi_simple(ty, SC, 3), FgAbelianGroup::free(1), "{ty}");
            let z2 = matches!(ty.family(), Family::C) || ty == t("A1") || ty == t("B2");
            let expect = if z2 { FgAbelianGroup::cyclic(2) } else { FgAbelianGroup::trivial() };
            assert_eq!(pi_simple(ty, SC, 4), expect, "{ty}");
        }
    }

    #[test]
    fn fifth_homotopy() {
        assert!(pi_simple(t("D4"), SC, 5).is_trivial());
        assert_eq!(pi_simple(t("A1"), SC, 5), FgAbelianGroup::cyclic(2));
        assert_eq!(pi_simple(t("A2"), SC, 5), FgAbelianGroup::free(1));
        assert_eq!(pi_simple(t("A3"), SC, 5), FgAbelianGroup::free(1));
        assert_eq!(pi_simple(t("B2"), SC, 5), FgAbelianGroup::cyclic(2));
        assert!(pi_simple(t("B3"), SC, 5).is_trivial());
        assert_eq!(pi_simple(t("C5"), SC, 5), FgAbelianGroup::cyclic(2));
        assert!(pi_simple(t("F4"), SC, 5).is_trivial());
    }

    #[test]
    fn classical_outside_stable_range_is_unknown() {
        assert!(!pi_simple(t("A1"), SC, 6).is_known());
        assert!(!pi_simple(t("B3"), SC, 6).is_known());
        assert!(pi_simple(t("B3"), SC, 5).is_known());
    }

    #[test]
    fn splitting_examples() {
        let res = good_locus_homotopy(&g("G2"), 3, 9).unwrap();
        assert_eq!(res.value, FgAbelianGroup::new(0, [6, 6, 6, 2]));
        assert_eq!(res.validity, Validity::OutOfProvenRange);
        assert_eq!(good_locus_homotopy(&g("G2"), 4, 9).unwrap().validity, Validity::Stable);

        let res = good_locus_homotopy(&g("E7[ad]"), 2, 1).unwrap();
        assert_eq!(res.value, FgAbelianGroup::new(0, [2, 2]));

        let res = good_locus_homotopy(&g("F4"), 3, 12).unwrap();
        assert_eq!(res.value, FgAbelianGroup::new(1, [2]));
        assert_eq!(res.validity, Validity::Stable);
    }

    #[test]
    fn low_degree_validity() {
        let v = |s: &str, r, k| good_locus_homotopy(&g(s), r, k).unwrap().validity;
        assert_eq!(v("A1", 2, 0), Validity::Pi0Pi1Pi2Hypothesis);
        assert_eq!(v("A1", 2, 1), Validity::OutOfProvenRange);
        assert_eq!(v("A1", 3, 2), Validity::Stable);
        assert_eq!(v("A1 x A1", 2, 2), Validity::Stable);
        assert_eq!(v("T^2", 3, 1), Validity::Pi0Pi1Pi2Hypothesis);
        assert!(good_locus_homotopy(&g("E8"), 1, 3).is_err());
    }

    #[test]
    fn torus_contributes_to_pi1() {
        let res = good_locus_homotopy(&g("T^2 x A2[ad]"), 3, 1).unwrap();
        assert_eq!(res.value, FgAbelianGroup::new(6, [3, 3, 3]));
    }

    #[test]
    fn unknown_propagates() {
        let res = good_locus_homotopy(&g("E6"), 2, 10).unwrap();
        assert!(!res.value.is_known());
        assert_eq!(res.validity, Validity::Stable);
    }

    #[test]
    fn parse_errors_and_overrides() {
        assert!(HomotopyDatabase::parse("G2 * 6 0").is_err());
        assert!(HomotopyDatabase::parse("G2 sl 6 0 -").is_err());
        assert!(HomotopyDatabase::parse("G2 * 6 ? 3 x").is_err());
        assert!(HomotopyDatabase::parse("G2 * 6 0 - a\nG2 * 6 0 - b").is_err());
        let db = HomotopyDatabase::parse("A1 sc 6 0 12 Toda\n# comment\n").unwrap();
        assert_eq!(db.len(), 1);
        assert_eq!(db.pi_simple(t("A1"), SC, 6), FgAbelianGroup::cyclic(12));
        assert!(!db.pi_simple(t("A1"), AD, 6).is_known());
    }

    #[test]
    fn embedded_database_is_isogeny_free_above_degree_one() {
        let db = HomotopyDatabase::embedded();
        assert!(!db.is_empty());
        for ty in SimpleType::exceptional() {
            for k in 2..=15 {
                assert_eq!(db.pi_simple(ty, SC, k), db.pi_simple(ty, AD, k));
            }
        }
    }
}
