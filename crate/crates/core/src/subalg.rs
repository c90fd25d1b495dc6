//! Levi subalgebras of maximal parabolics and maximal-rank (Borel–de
//! Siebenthal) subalgebras of a simple Lie algebra.
//!
//! Deleting node `k` of the Dynkin diagram gives the derived Levi factor
//! `[l_k, l_k]`; deleting node `k` of the extended diagram gives the BdS
//! subalgebra, which is proper exactly when the mark of `k` is at least 2.
//!
//! # Row labels
//!
//! Records carry the internal (Bourbaki) `node` and a `label`, the row number
//! of the conventional tables. The two agree except:
//!
//! | type | Levi labels `1..=rank` map to nodes | BdS labels |
//! |------|-------------------------------------|------------|
//! | E6   | `1 3 4 5 6 2`                       | as Levi    |
//! | E7   | `1 3 4 5 6 7 2`                     | identity   |
//! | E8   | `8 7 6 5 4 3 1 2`                   | identity   |
//!
//! i.e. the Levi table numbers the long chain first and the branch node last.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::FgAbelianGroup;
use crate::rootsys::{classify_diagram, Family, RootSystem, RootSystemError, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubalgError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("node {node} of {ty} has mark 1; the subsystem is the whole root lattice")]
    MarkOne { ty: SimpleType, node: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviRecord {
    pub node: usize,
    pub label: usize,
    pub derived_type: Vec<SimpleType>,
    pub levi_dim: usize,
    pub codim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BdSRecord {
    pub node: usize,
    pub label: usize,
    pub mark: i64,
    pub bds_type: Vec<SimpleType>,
    pub codim: usize,
    pub index_group: FgAbelianGroup,
}

fn levi_label_order(t: SimpleType) -> Option<&'static [usize]> {
    match (t.family(), t.rank()) {
        (Family::E, 6) => Some(&[1, 3, 4, 5, 6, 2]),
        (Family::E, 7) => Some(&[1, 3, 4, 5, 6, 7, 2]),
        (Family::E, 8) => Some(&[8, 7, 6, 5, 4, 3, 1, 2]),
        _ => None,
    }
}

fn bds_label_order(t: SimpleType) -> Option<&'static [usize]> {
    match (t.family(), t.rank()) {
        (Family::E, 6) => levi_label_order(t),
        _ => None,
    }
}

fn label_of(order: Option<&[usize]>, node: usize) -> usize {
    match order {
        Some(o) => o.iter().position(|&n| n == node).expect("node in range") + 1,
        None => node,
    }
}

fn node_of(order: Option<&[usize]>, label: usize) -> usize {
    match order {
        Some(o) => o[label - 1],
        None => label,
    }
}

/// Levi-table row label of internal node `node`.
pub fn levi_row_label(t: SimpleType, node: usize) -> usize {
    label_of(levi_label_order(t), node)
}

/// Internal node for Levi-table row `label`.
pub fn levi_row_node(t: SimpleType, label: usize) -> usize {
    node_of(levi_label_order(t), label)
}

/// BdS-table row label of internal node `node`.
pub fn bds_row_label(t: SimpleType, node: usize) -> usize {
    label_of(bds_label_order(t), node)
}

/// Internal node for BdS-table row `label`.
pub fn bds_row_node(t: SimpleType, label: usize) -> usize {
    node_of(bds_label_order(t), label)
}

fn total_dim(types: &[SimpleType]) -> usize {
    types.iter().map(|&c| RootSystem::new(c).dimension()).sum()
}

/// One record per node, in node order.
pub fn levi_table(t: SimpleType) -> Vec<LeviRecord> {
    let system = RootSystem::new(t);
    let diagram = system.diagram();
    let dim = system.dimension();
    (1..=t.rank())
        .map(|node| {
            let derived_type =
                classify_diagram(&diagram.without(node)).expect("subdiagram of a finite diagram");
            let ranks: usize = derived_type.iter().map(|c| c.rank()).sum();
            // dim l = dim [l,l] + rank of the centre
            let levi_dim = total_dim(&derived_type) + (t.rank() - ranks);
            LeviRecord {
                node,
                label: levi_row_label(t, node),
                derived_type,
                levi_dim,
                codim: dim - levi_dim,
            }
        })
        .collect()
}

pub fn min_levi_codim(t: SimpleType) -> usize {
    levi_table(t)
        .iter()
        .map(|r| r.codim)
        .min()
        .expect("rank >= 1")
}

/// One record per node whose mark is at least 2, in node order. Empty for
/// type A.
pub fn bds_table(t: SimpleType) -> Vec<BdSRecord> {
    let system = RootSystem::new(t);
    let extended = system.extended_diagram();
    let dim = system.dimension();
    (1..=t.rank())
        .filter(|&node| system.highest_root().coords()[node - 1] >= 2)
        .map(|node| {
            let bds_type = classify_diagram(&extended.without(node))
                .expect("proper subdiagram of an affine diagram");
            BdSRecord {
                node,
                label: bds_row_label(t, node),
                mark: system.highest_root().coords()[node - 1],
                codim: dim - total_dim(&bds_type),
                bds_type,
                index_group: lattice_index_in(&system, node),
            }
        })
        .collect()
}

pub fn min_bds_codim(t: SimpleType) -> Option<usize> {
    bds_table(t).iter().map(|r| r.codim).min()
}

/// `Λ_G / Λ_S` for the BdS subsystem obtained by deleting `node` from the
/// extended diagram, i.e. the root lattice modulo the sublattice spanned by
/// the surviving simple roots and the highest root.
pub fn lattice_index(t: SimpleType, node: usize) -> Result<FgAbelianGroup, SubalgError> {
    let system = RootSystem::new(t);
    if system.mark(node)? < 2 {
        return Err(SubalgError::MarkOne { ty: t, node });
    }
    Ok(lattice_index_in(&system, node))
}

fn lattice_index_in(system: &RootSystem, node: usize) -> FgAbelianGroup {
    let r = system.rank();
    let mut rows: Vec<Vec<i64>> = (1..=r)
        .filter(|&j| j != node)
        .map(|j| {
            let mut v = vec![0; r];
            v[j - 1] = 1;
            v
        })
        .collect();
    rows.push(system.highest_root().neg().coords().to_vec());
    FgAbelianGroup::cokernel(&rows, r)
}
