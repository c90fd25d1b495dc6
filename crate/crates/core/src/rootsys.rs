//! Exact root data for the simple types.
//!
//! Roots live in simple-root coordinates. Every inner product is taken with
//! an integral symmetric form on those coordinates, so nothing here touches
//! floating point.
//!
//! # Node numbering
//!
//! Nodes are numbered `1..=rank` following Bourbaki:
//!
//! | type  | layout                                                    |
//! |-------|-----------------------------------------------------------|
//! | `A_r` | chain `1 - 2 - ... - r`                                   |
//! | `B_r` | chain, `r` is the single short root                       |
//! | `C_r` | chain, `r` is the single long root                        |
//! | `D_r` | chain `1 - ... - (r-2)`, with `r-1` and `r` both on `r-2` |
//! | `E_n` | chain `1 - 3 - 4 - ... - n`, with `2` attached to `4`      |
//! | `F_4` | `1 - 2 => 3 - 4`, nodes 1 and 2 long                      |
//! | `G_2` | `1 ≡> 2`, node 1 long                                     |
//!
//! The extended diagram adds node `0` for the negative of the highest root.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("{name} is a low-rank alias; use {canonical}")]
    LowRankAlias { name: String, canonical: String },
    #[error("{family}{rank} is not a simple type")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse simple type `{0}`")]
    Parse(String),
    #[error("node {node} is not a node of {ty}")]
    NodeOutOfRange { ty: SimpleType, node: usize },
    #[error("component with nodes {nodes:?} is not of finite type: {reason}")]
    NotFiniteType { nodes: Vec<usize>, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.letter() == c.to_ascii_uppercase())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Lie algebra type. Construction rejects invalid ranks and the
/// low-rank aliases `B1, C1, C2, D2, D3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let alias = |canonical: &str| RootSystemError::LowRankAlias {
            name: format!("{family}{rank}"),
            canonical: canonical.to_string(),
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => {
                if rank == 1 {
                    return Err(alias("A1"));
                }
                rank >= 2
            }
            Family::C => match rank {
                1 => return Err(alias("A1")),
                2 => return Err(alias("B2")),
                _ => rank >= 3,
            },
            Family::D => match rank {
                2 => return Err(alias("A1+A1 (not simple)")),
                3 => return Err(alias("A3")),
                _ => rank >= 4,
            },
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    /// Canonical simple components of a diagram shape, resolving aliases:
    /// `B1 -> [A1]`, `C2 -> [B2]`, `D2 -> [A1, A1]`, `D3 -> [A3]`.
    /// Rank zero and `D1` are empty (no semisimple part).
    pub fn canonical_components(
        family: Family,
        rank: usize,
    ) -> Result<Vec<SimpleType>, RootSystemError> {
        let st = |f, r| SimpleType { family: f, rank: r };
        Ok(match (family, rank) {
            (_, 0) | (Family::D, 1) => vec![],
            (Family::B | Family::C, 1) => vec![st(Family::A, 1)],
            (Family::C, 2) => vec![st(Family::B, 2)],
            (Family::D, 2) => vec![st(Family::A, 1), st(Family::A, 1)],
            (Family::D, 3) => vec![st(Family::A, 3)],
            _ => vec![SimpleType::new(family, rank)?],
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(
            self.family,
            Family::E | Family::F | Family::G
        )
    }

    /// All valid types with rank at most `max_rank`, in family order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(t) = SimpleType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    pub fn exceptional() -> [SimpleType; 5] {
        [
            SimpleType { family: Family::G, rank: 2 },
            SimpleType { family: Family::F, rank: 4 },
            SimpleType { family: Family::E, rank: 6 },
            SimpleType { family: Family::E, rank: 7 },
            SimpleType { family: Family::E, rank: 8 },
        ]
    }

    /// Squared lengths of the simple roots and the nonzero off-diagonal
    /// entries `(α_i, α_j)` of the invariant form, nodes 0-based.
    fn form_data(&self) -> (Vec<i64>, Vec<(usize, usize, i64)>) {
        let r = self.rank;
        let chain = |n: usize, w: i64| (0..n.saturating_sub(1)).map(move |i| (i, i + 1, w));
        match self.family {
            Family::A => (vec![2; r], chain(r, -1).collect()),
            Family::B => {
                let mut norms = vec![4; r];
                norms[r - 1] = 2;
                (norms, chain(r, -2).collect())
            }
            Family::C => {
                let mut norms = vec![2; r];
                norms[r - 1] = 4;
                let mut edges: Vec<_> = chain(r - 1, -1).collect();
                edges.push((r - 2, r - 1, -2));
                (norms, edges)
            }
            Family::D => {
                let mut edges: Vec<_> = chain(r - 1, -1).collect();
                edges.push((r - 3, r - 1, -1));
                (vec![2; r], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2, -1), (1, 3, -1)];
                edges.extend((2..r - 1).map(|i| (i, i + 1, -1)));
                (vec![2; r], edges)
            }
            Family::F => (vec![4, 4, 2, 2], vec![(0, 1, -2), (1, 2, -2), (2, 3, -1)]),
            Family::G => (vec![6, 2], vec![(0, 1, -3)]),
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSystemError;

    /// Accepts `E8`, `A4`, `a4`, `B_3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| RootSystemError::Parse(s.to_string()))?;
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits
            .parse()
            .map_err(|_| RootSystemError::Parse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Display a multiset of types as `A1+A2`, or `0` when empty.
pub fn format_types(types: &[SimpleType]) -> String {
    if types.is_empty() {
        "0".to_string()
    } else {
        types
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    fn shifted(&self, i: usize, by: i64) -> RootVector {
        let mut v = self.0.clone();
        v[i] += by;
        RootVector(v)
    }

    fn simple(rank: usize, i: usize) -> RootVector {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }
}

/// Root data for one simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: SimpleType,
    form: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<RootVector>,
    highest_root: RootVector,
}

impl RootSystem {
    pub fn new(ty: SimpleType) -> Self {
        let r = ty.rank;
        let (norms, edges) = ty.form_data();
        let mut form = vec![vec![0i64; r]; r];
        for (i, &n) in norms.iter().enumerate() {
            form[i][i] = n;
        }
        for (i, j, w) in edges {
            form[i][j] = w;
            form[j][i] = w;
        }
        // A_ij = <α_i^∨, α_j> = 2(α_i, α_j) / (α_i, α_i)
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();

        let positive_roots = enumerate_positive_roots(&form);
        let highest_root = positive_roots
            .iter()
            .max_by_key(|b| b.height())
            .cloned()
            .expect("nonempty root system");

        Self {
            ty,
            form,
            cartan,
            positive_roots,
            highest_root,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// Cartan matrix `A_ij = <α_i^∨, α_j>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the invariant form on simple roots (short roots have
    /// squared length 2).
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Positive and negative roots.
    pub fn all_roots(&self) -> impl Iterator<Item = RootVector> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(RootVector::neg))
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest_root
    }

    /// Coefficient of α_node in the highest root, nodes 1-based.
    pub fn mark(&self, node: usize) -> Result<i64, RootSystemError> {
        self.check_node(node)?;
        Ok(self.highest_root.0[node - 1])
    }

    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive_roots.len()
    }

    pub fn inner(&self, a: &RootVector, b: &RootVector) -> i64 {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|j| a.0[i] * self.form[i][j] * b.0[j]).sum::<i64>())
            .sum()
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<(), RootSystemError> {
        if node == 0 || node > self.rank() {
            Err(RootSystemError::NodeOutOfRange { ty: self.ty, node })
        } else {
            Ok(())
        }
    }

    /// The Dynkin diagram on nodes `1..=rank`, unmarked.
    pub fn diagram(&self) -> DynkinDiagram {
        let roots: Vec<_> = (0..self.rank())
            .map(|i| (i + 1, RootVector::simple(self.rank(), i)))
            .collect();
        DynkinDiagram::from_roots(self, &roots)
    }

    /// The extended diagram: node `0` is the negative of the highest root,
    /// marks are the highest-root coefficients with the extra node marked 1.
    pub fn extended_diagram(&self) -> DynkinDiagram {
        let mut roots = vec![(0, self.highest_root.neg())];
        roots.extend((0..self.rank()).map(|i| (i + 1, RootVector::simple(self.rank(), i))));
        let mut d = DynkinDiagram::from_roots(self, &roots);
        for node in &mut d.nodes {
            node.mark = Some(if node.id == 0 {
                1
            } else {
                self.highest_root.0[node.id - 1]
            });
        }
        d
    }
}

// Breadth-first closure under adding simple roots. β + α_j is a root iff
// q > 0 in the α_j-string β - pα_j, ..., β + qα_j, where p - q = <β, α_j^∨>.
fn enumerate_positive_roots(form: &[Vec<i64>]) -> Vec<RootVector> {
    let r = form.len();
    let pairing = |beta: &RootVector, j: usize| -> i64 {
        let ip: i64 = (0..r).map(|i| beta.0[i] * form[i][j]).sum();
        2 * ip / form[j][j]
    };
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for i in 0..r {
        let a = RootVector::simple(r, i);
        seen.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(beta) = queue.pop_front() {
        for j in 0..r {
            let mut p = 0;
            while seen.contains(&beta.shifted(j, -(p + 1))) {
                p += 1;
            }
            let q = p - pairing(&beta, j);
            if q > 0 {
                let next = beta.shifted(j, 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut roots: Vec<_> = seen.into_iter().collect();
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
    roots
}

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    RootSystem::new(t).cartan
}

pub fn positive_roots(t: SimpleType) -> Vec<RootVector> {
    RootSystem::new(t).positive_roots
}

pub fn dimension(t: SimpleType) -> usize {
    RootSystem::new(t).dimension()
}

pub fn highest_root(t: SimpleType) -> RootVector {
    RootSystem::new(t).highest_root
}

pub fn extended_diagram(t: SimpleType) -> DynkinDiagram {
    RootSystem::new(t).extended_diagram()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramNode {
    pub id: usize,
    /// Squared length of the root for this node.
    pub norm: i64,
    pub mark: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    /// `max(|A_ab|, |A_ba|)`, so 1, 2 or 3 for finite diagrams.
    pub bonds: u8,
}

/// A Dynkin diagram on arbitrary node ids. Arrows are implicit in the node
/// norms: a multiple bond points from the longer root to the shorter one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
}

impl DynkinDiagram {
    /// Diagram of a set of roots of `system`, with the given node ids.
    pub fn from_roots(system: &RootSystem, roots: &[(usize, RootVector)]) -> Self {
        let nodes = roots
            .iter()
            .map(|(id, v)| DiagramNode {
                id: *id,
                norm: system.inner(v, v),
                mark: None,
            })
            .collect();
        let mut edges = Vec::new();
        for (x, (ia, va)) in roots.iter().enumerate() {
            for (ib, vb) in roots.iter().skip(x + 1) {
                let ip = system.inner(va, vb);
                if ip == 0 {
                    continue;
                }
                let aab = (2 * ip / system.inner(va, va)).abs();
                let aba = (2 * ip / system.inner(vb, vb)).abs();
                edges.push(DiagramEdge {
                    a: *ia,
                    b: *ib,
                    bonds: aab.max(aba) as u8,
                });
            }
        }
        Self { nodes, edges }
    }

    pub fn node(&self, id: usize) -> Option<&DiagramNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Arrow of a multiple bond as `(long, short)`.
    pub fn arrow(&self, edge: &DiagramEdge) -> Option<(usize, usize)> {
        let na = self.node(edge.a)?.norm;
        let nb = self.node(edge.b)?.norm;
        match na.cmp(&nb) {
            std::cmp::Ordering::Greater => Some((edge.a, edge.b)),
            std::cmp::Ordering::Less => Some((edge.b, edge.a)),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Copy of the diagram with node `id` and its edges removed.
    pub fn without(&self, id: usize) -> Self {
        Self {
            nodes: self.nodes.iter().filter(|n| n.id != id).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.a != id && e.b != id)
                .cloned()
                .collect(),
        }
    }

    fn neighbours(&self, id: usize) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == id {
                Some((e.b, e.bonds))
            } else if e.b == id {
                Some((e.a, e.bonds))
            } else {
                None
            }
        })
    }

    /// Connected components as sorted lists of node ids.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for start in self.nodes.iter().map(|n| n.id) {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (w, _) in self.neighbours(v) {
                    if seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn classify_component(&self, comp: &[usize]) -> Result<Vec<SimpleType>, RootSystemError> {
        let fail = |reason: &str| RootSystemError::NotFiniteType {
            nodes: comp.to_vec(),
            reason: reason.to_string(),
        };
        let n = comp.len();
        let edges: Vec<&DiagramEdge> = self
            .edges
            .iter()
            .filter(|e| comp.contains(&e.a))
            .collect();
        if edges.len() != n - 1 {
            return Err(fail("contains a cycle"));
        }
        let degree = |v: usize| self.neighbours(v).count();
        let multiple: Vec<&&DiagramEdge> = edges.iter().filter(|e| e.bonds > 1).collect();
        if edges.iter().any(|e| e.bonds > 3) {
            return Err(fail("bond of multiplicity above 3"));
        }
        for e in &multiple {
            if self.arrow(e).is_none() {
                return Err(fail("multiple bond between roots of equal length"));
            }
        }

        if multiple.is_empty() {
            return self.classify_simply_laced(comp, &fail);
        }
        if multiple.len() > 1 {
            return Err(fail("more than one multiple bond"));
        }
        if comp.iter().any(|&v| degree(v) > 2) {
            return Err(fail("branch point next to a multiple bond"));
        }
        let e = multiple[0];
        if e.bonds == 3 {
            return if n == 2 {
                Ok(vec![SimpleType { family: Family::G, rank: 2 }])
            } else {
                Err(fail("triple bond in a diagram with more than two nodes"))
            };
        }
        // double bond on a path
        if n == 2 {
            return Ok(vec![SimpleType { family: Family::B, rank: 2 }]);
        }
        let at_end = degree(e.a) == 1 || degree(e.b) == 1;
        if at_end {
            let end = if degree(e.a) == 1 { e.a } else { e.b };
            let (_, short) = self.arrow(e).expect("checked above");
            return if short == end {
                SimpleType::canonical_components(Family::B, n)
            } else {
                SimpleType::canonical_components(Family::C, n)
            };
        }
        if n == 4 {
            return Ok(vec![SimpleType { family: Family::F, rank: 4 }]);
        }
        Err(fail("interior double bond outside F4"))
    }

    fn classify_simply_laced(
        &self,
        comp: &[usize],
        fail: &dyn Fn(&str) -> RootSystemError,
    ) -> Result<Vec<SimpleType>, RootSystemError> {
        let n = comp.len();
        let branches: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| self.neighbours(v).count() > 2)
            .collect();
        match branches.as_slice() {
            [] => SimpleType::canonical_components(Family::A, n),
            [centre] => {
                if self.neighbours(*centre).count() != 3 {
                    return Err(fail("node of degree above 3"));
                }
                let mut arms: Vec<usize> = self
                    .neighbours(*centre)
                    .map(|(start, _)| self.arm_length(*centre, start))
                    .collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, c] => SimpleType::canonical_components(Family::D, c + 3),
                    [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                        SimpleType::canonical_components(Family::E, n)
                    }
                    _ => Err(fail("branch arms do not match D or E")),
                }
            }
            _ => Err(fail("more than one branch point")),
        }
    }

    fn arm_length(&self, centre: usize, start: usize) -> usize {
        let (mut prev, mut cur, mut len) = (centre, start, 1);
        loop {
            let next = self.neighbours(cur).map(|(w, _)| w).find(|&w| w != prev);
            match next {
                Some(w) => {
                    prev = cur;
                    cur = w;
                    len += 1;
                }
                None => return len,
            }
        }
    }
}

/// Simple types of the components of `d`, sorted, aliases canonicalized.
pub fn classify_diagram(d: &DynkinDiagram) -> Result<Vec<SimpleType>, RootSystemError> {
    let mut out = Vec::new();
    for comp in d.components() {
        out.extend(d.classify_component(&comp)?);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn aliases_rejected_with_canonical_name() {
        let err = SimpleType::new(Family::C, 2).unwrap_err();
        assert_eq!(
            err,
            RootSystemError::LowRankAlias {
                name: "C2".into(),
                canonical: "B2".into()
            }
        );
        assert!(matches!(
            "B1".parse::<SimpleType>(),
            Err(RootSystemError::LowRankAlias { canonical, .. }) if canonical == "A1"
        ));
        assert!(matches!(
            "D3".parse::<SimpleType>(),
            Err(RootSystemError::LowRankAlias { canonical, .. }) if canonical == "A3"
        ));
        assert!(matches!(
            "D2".parse::<SimpleType>(),
            Err(RootSystemError::LowRankAlias { .. })
        ));
        assert!(matches!(
            "E5".parse::<SimpleType>(),
            Err(RootSystemError::InvalidRank { .. })
        ));
        assert!("X3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix(t("A1")), vec![vec![2]]);
        assert_eq!(cartan_matrix(t("A2")), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = cartan_matrix(t("G2"));
        assert_eq!(g2[0][0] * g2[1][1] - g2[0][1] * g2[1][0], 1);
        assert_eq!(g2[0][1] * g2[1][0], 3);
    }

    #[test]
    fn root_counts() {
        let a2 = positive_roots(t("A2"));
        assert_eq!(
            a2,
            vec![
                RootVector(vec![0, 1]),
                RootVector(vec![1, 0]),
                RootVector(vec![1, 1])
            ]
        );
        assert_eq!(positive_roots(t("G2")).len(), 6);
        assert_eq!(positive_roots(t("E8")).len(), 120);
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(t("A4")), 24);
        assert_eq!(dimension(t("F4")), 52);
        assert_eq!(dimension(t("B5")), 55);
        assert_eq!(dimension(t("E7")), 133);
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(t("A2")), RootVector(vec![1, 1]));
        let mut g2 = highest_root(t("G2")).0;
        g2.sort();
        assert_eq!(g2, vec![2, 3]);
        assert_eq!(RootSystem::new(t("E8")).mark(5).unwrap(), 5);
        assert_eq!(
            highest_root(t("E8")),
            RootVector(vec![2, 3, 4, 6, 5, 4, 3, 2])
        );
        assert_eq!(highest_root(t("F4")), RootVector(vec![2, 3, 4, 2]));
        assert!(RootSystem::new(t("A3")).mark(4).is_err());
        assert!(RootSystem::new(t("A3")).mark(0).is_err());
    }

    #[test]
    fn extended_a1_is_a_double_bond() {
        let d = extended_diagram(t("A1"));
        assert_eq!(d.nodes.len(), 2);
        assert_eq!(d.edges.len(), 1);
        assert_eq!(d.edges[0].bonds, 2);
        assert!(classify_diagram(&d).is_err());
    }

    #[test]
    fn extended_a_is_a_cycle() {
        for r in 2..=7 {
            let d = extended_diagram(SimpleType::new(Family::A, r).unwrap());
            assert_eq!(d.nodes.len(), r + 1);
            assert_eq!(d.edges.len(), r + 1);
            assert!(d.edges.iter().all(|e| e.bonds == 1));
            assert!(d
                .nodes
                .iter()
                .all(|n| d.edges.iter().filter(|e| e.a == n.id || e.b == n.id).count() == 2));
        }
    }

    #[test]
    fn extended_g2_is_a_path_with_triple_bond() {
        let d = extended_diagram(t("G2"));
        assert_eq!(d.nodes.len(), 3);
        let mut bonds: Vec<u8> = d.edges.iter().map(|e| e.bonds).collect();
        bonds.sort();
        assert_eq!(bonds, vec![1, 3]);
        // affine node hangs off the long root
        assert!(d.edges.iter().any(|e| e.a == 0 && e.b == 1 && e.bonds == 1));
        assert_eq!(d.node(0).unwrap().mark, Some(1));
    }

    #[test]
    fn classification_examples() {
        let empty = DynkinDiagram {
            nodes: vec![],
            edges: vec![],
        };
        assert_eq!(classify_diagram(&empty).unwrap(), vec![]);
        let a4 = RootSystem::new(t("A4")).diagram().without(2);
        assert_eq!(classify_diagram(&a4).unwrap(), vec![t("A1"), t("A2")]);
        let e8 = extended_diagram(t("E8")).without(1);
        assert_eq!(classify_diagram(&e8).unwrap(), vec![t("D8")]);
    }

    #[test]
    fn classification_round_trips_every_type() {
        for ty in SimpleType::all_up_to_rank(10) {
            let d = RootSystem::new(ty).diagram();
            assert_eq!(classify_diagram(&d).unwrap(), vec![ty], "{ty}");
        }
    }

    #[test]
    fn d3_shape_reports_a3() {
        // D4 minus a leaf is a path of three nodes
        let d = RootSystem::new(t("D4")).diagram().without(4);
        assert_eq!(classify_diagram(&d).unwrap(), vec![t("A3")]);
        // C3 minus node 1 is the C2 shape
        let d = RootSystem::new(t("C3")).diagram().without(1);
        assert_eq!(classify_diagram(&d).unwrap(), vec![t("B2")]);
    }

    #[test]
    fn affine_diagrams_are_not_finite() {
        for ty in SimpleType::all_up_to_rank(8) {
            if ty.family() == Family::A && ty.rank() >= 2 {
                continue; // cycles, checked separately
            }
            let d = extended_diagram(ty);
            assert!(
                matches!(
                    classify_diagram(&d),
                    Err(RootSystemError::NotFiniteType { .. })
                ),
                "{ty}"
            );
        }
    }
}
