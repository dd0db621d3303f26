//! Divides as combinatorial planar maps in a disc.
//!
//! A divide is stored as a rotation system: every double point owns four
//! half-edge slots numbered counterclockwise, every terminal owns a single
//! slot, and each edge glues two slots together. Terminals are listed in
//! counterclockwise order along the disc boundary. Consecutive terminals are
//! joined by virtual boundary arcs when faces are traced.

pub mod faces;
pub mod format;
mod geom;
pub mod invariants;
pub mod polyline;
pub mod signs;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use faces::{trace_faces, Dart, FaceError, FaceSet, RegionIssue};
pub use invariants::{invariants, DivideInvariants, InvariantError};
pub use polyline::{ingest_polyline, GeometryError, PolyBranch, PolylineDivide};
pub use signs::{assign_signs, SignError, SignedDivide};

/// Value sign of the morsified function on a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Side of an edge relative to its declared orientation `ends[0] -> ends[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A half-edge slot: `vertex` indexes double points first, then terminals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub vertex: usize,
    pub slot: u8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: [SlotRef; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchKind {
    Interval,
    Circle,
}

/// One immersed component, as the edges it runs through in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub edges: Vec<usize>,
    pub kind: BranchKind,
}

/// Face witness fixing the global sign of the checkerboard coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignSeed {
    pub edge: usize,
    pub side: Side,
    pub sign: Sign,
}

/// String-keyed description of a divide, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDivide {
    pub name: String,
    pub double_points: Vec<String>,
    pub terminals: Vec<String>,
    pub edges: Vec<RawEdge>,
    pub branches: Vec<Vec<String>>,
    pub sign_seed: RawSeed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub ends: [(String, u8); 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSeed {
    pub edge: String,
    pub side: Side,
    pub sign: Sign,
}

/// A structural problem found while reading or validating a divide.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DivideError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("slot {slot} out of range at vertex `{vertex}` (degree {degree})")]
    SlotOutOfRange { vertex: String, slot: u8, degree: u8 },
    #[error("slot used twice: vertex `{vertex}` slot {slot}")]
    SlotUsedTwice { vertex: String, slot: u8 },
    #[error("degree mismatch at vertex `{vertex}`: expected {expected} slots in use, found {found}")]
    DegreeMismatch { vertex: String, expected: u8, found: u8 },
    #[error("divide graph is disconnected: `{0}` is unreachable")]
    Disconnected(String),
    #[error("divide has no interval branch, so the disc boundary is not anchored")]
    NoIntervalBranch,
    #[error("unknown edge `{0}` in branch list")]
    UnknownEdge(String),
    #[error("branch {index} does not follow a single strand: {reason}")]
    BranchMismatch { index: usize, reason: String },
    #[error("edge `{0}` is not covered by any branch")]
    UncoveredEdge(String),
    #[error("interval branch {index} has {terminals} terminals (expected 2)")]
    IntervalTerminals { index: usize, terminals: usize },
    #[error("malformed sign seed: {0}")]
    MalformedSeed(String),
    #[error(transparent)]
    Geometry(#[from] polyline::GeometryError),
}

/// Every problem found in one pass, in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics(pub Vec<DivideError>);

impl Diagnostics {
    pub fn single(error: DivideError) -> Self {
        Diagnostics(vec![error])
    }

    pub fn errors(&self) -> &[DivideError] {
        &self.0
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostics {}

/// A structurally valid divide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divide {
    name: String,
    double_points: Vec<String>,
    terminals: Vec<String>,
    edges: Vec<Edge>,
    branches: Vec<Branch>,
    sign_seed: SignSeed,
    // (edge, end) glued at each slot of each vertex
    slots: Vec<Vec<(usize, usize)>>,
}

impl Divide {
    /// Validates a raw description, collecting every diagnostic it can.
    pub fn from_raw(raw: RawDivide) -> Result<Divide, Diagnostics> {
        let mut errors = Vec::new();
        let d = raw.double_points.len();

        let mut vertex_index: HashMap<&str, usize> = HashMap::new();
        for (i, id) in raw.double_points.iter().chain(raw.terminals.iter()).enumerate() {
            if vertex_index.insert(id.as_str(), i).is_some() {
                errors.push(DivideError::DuplicateId(id.clone()));
            }
        }
        let mut edge_index: HashMap<&str, usize> = HashMap::new();
        for (i, e) in raw.edges.iter().enumerate() {
            if vertex_index.contains_key(e.id.as_str()) || edge_index.insert(e.id.as_str(), i).is_some() {
                errors.push(DivideError::DuplicateId(e.id.clone()));
            }
        }
        if !errors.is_empty() {
            return Err(Diagnostics(errors));
        }

        let vertex_name = |v: usize| -> &str {
            if v < d {
                &raw.double_points[v]
            } else {
                &raw.terminals[v - d]
            }
        };
        let degree = |v: usize| -> u8 { if v < d { 4 } else { 1 } };
        let n_vertices = d + raw.terminals.len();

        let mut slots: Vec<Vec<Option<(usize, usize)>>> =
            (0..n_vertices).map(|v| vec![None; degree(v) as usize]).collect();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (ei, e) in raw.edges.iter().enumerate() {
            let mut ends = [SlotRef { vertex: 0, slot: 0 }; 2];
            let mut ok = true;
            for (k, (vid, slot)) in e.ends.iter().enumerate() {
                let Some(&v) = vertex_index.get(vid.as_str()) else {
                    errors.push(DivideError::UnknownVertex { edge: e.id.clone(), vertex: vid.clone() });
                    ok = false;
                    continue;
                };
                if *slot >= degree(v) {
                    errors.push(DivideError::SlotOutOfRange {
                        vertex: vid.clone(),
                        slot: *slot,
                        degree: degree(v),
                    });
                    ok = false;
                    continue;
                }
                let cell = &mut slots[v][*slot as usize];
                if cell.is_some() {
                    errors.push(DivideError::SlotUsedTwice { vertex: vid.clone(), slot: *slot });
                    ok = false;
                    continue;
                }
                *cell = Some((ei, k));
                ends[k] = SlotRef { vertex: v, slot: *slot };
            }
            if ok {
                edges.push(Edge { id: e.id.clone(), ends });
            }
        }
        for (v, vs) in slots.iter().enumerate() {
            let found = vs.iter().filter(|s| s.is_some()).count() as u8;
            if found != degree(v) {
                errors.push(DivideError::DegreeMismatch {
                    vertex: vertex_name(v).to_string(),
                    expected: degree(v),
                    found,
                });
            }
        }
        if !errors.is_empty() {
            return Err(Diagnostics(errors));
        }
        let slots: Vec<Vec<(usize, usize)>> =
            slots.into_iter().map(|vs| vs.into_iter().map(|s| s.unwrap()).collect()).collect();

        if raw.terminals.is_empty() {
            return Err(Diagnostics::single(DivideError::NoIntervalBranch));
        }

        // connectivity over vertices
        let mut seen = vec![false; n_vertices];
        let mut stack = vec![0usize];
        seen[0] = n_vertices > 0;
        while let Some(v) = stack.pop() {
            for &(e, k) in &slots[v] {
                let w = edges[e].ends[1 - k].vertex;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Diagnostics::single(DivideError::Disconnected(vertex_name(v).to_string())));
        }

        let strands = walk_strands(d, &edges, &slots);
        let branches = match match_branches(&raw.branches, &edge_index, &strands, &edges, d) {
            Ok(b) => b,
            Err(errs) => return Err(Diagnostics(errs)),
        };

        let seed_edge = match edge_index.get(raw.sign_seed.edge.as_str()) {
            Some(&e) => e,
            None => {
                return Err(Diagnostics::single(DivideError::MalformedSeed(format!(
                    "unknown edge `{}`",
                    raw.sign_seed.edge
                ))))
            }
        };

        Ok(Divide {
            name: raw.name,
            double_points: raw.double_points,
            terminals: raw.terminals,
            edges,
            branches,
            sign_seed: SignSeed { edge: seed_edge, side: raw.sign_seed.side, sign: raw.sign_seed.sign },
            slots,
        })
    }

    pub fn to_raw(&self) -> RawDivide {
        let end = |s: SlotRef| (self.vertex_id(s.vertex).to_string(), s.slot);
        RawDivide {
            name: self.name.clone(),
            double_points: self.double_points.clone(),
            terminals: self.terminals.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge { id: e.id.clone(), ends: [end(e.ends[0]), end(e.ends[1])] })
                .collect(),
            branches: self
                .branches
                .iter()
                .map(|b| b.edges.iter().map(|&e| self.edges[e].id.clone()).collect())
                .collect(),
            sign_seed: RawSeed {
                edge: self.edges[self.sign_seed.edge].id.clone(),
                side: self.sign_seed.side,
                sign: self.sign_seed.sign,
            },
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Divide {
        self.name = name.into();
        self
    }

    /// Number of double points `d`.
    pub fn double_point_count(&self) -> usize {
        self.double_points.len()
    }

    pub fn terminal_count(&self) -> usize {
        self.terminals.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.double_points.len() + self.terminals.len()
    }

    /// Number of immersed components `r`.
    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    pub fn double_point_ids(&self) -> &[String] {
        &self.double_points
    }

    pub fn terminal_ids(&self) -> &[String] {
        &self.terminals
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        let d = self.double_points.len();
        if v < d {
            &self.double_points[v]
        } else {
            &self.terminals[v - d]
        }
    }

    pub fn is_double_point(&self, v: usize) -> bool {
        v < self.double_points.len()
    }

    /// Terminal position (0-based, counterclockwise) of a terminal vertex.
    pub fn terminal_position(&self, v: usize) -> Option<usize> {
        v.checked_sub(self.double_points.len()).filter(|&t| t < self.terminals.len())
    }

    pub fn terminal_vertex(&self, position: usize) -> usize {
        self.double_points.len() + position
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn has_circles(&self) -> bool {
        self.branches.iter().any(|b| b.kind == BranchKind::Circle)
    }

    pub fn sign_seed(&self) -> SignSeed {
        self.sign_seed
    }

    pub fn with_sign_seed(mut self, seed: SignSeed) -> Divide {
        assert!(seed.edge < self.edges.len(), "seed edge out of range");
        self.sign_seed = seed;
        self
    }

    /// Same divide with the opposite seed sign.
    pub fn with_flipped_seed(self) -> Divide {
        let mut seed = self.sign_seed;
        seed.sign = seed.sign.flip();
        self.with_sign_seed(seed)
    }

    /// `(edge, end)` glued at the given slot.
    pub fn edge_at(&self, at: SlotRef) -> (usize, usize) {
        self.slots[at.vertex][at.slot as usize]
    }

    pub fn degree(&self, v: usize) -> u8 {
        if self.is_double_point(v) {
            4
        } else {
            1
        }
    }
}

/// Walks every strand by going straight through double points (slot s to s+2).
/// Interval strands start at terminals; leftover edges form circles.
fn walk_strands(d: usize, edges: &[Edge], slots: &[Vec<(usize, usize)>]) -> Vec<(Vec<usize>, BranchKind)> {
    let mut used = vec![false; edges.len()];
    let mut strands = Vec::new();

    let follow = |start_edge: usize, start_end: usize, used: &mut Vec<bool>| -> (Vec<usize>, bool) {
        // enters the edge at `start_end`, returns edges visited and whether it closed up
        let mut path = Vec::new();
        let (mut e, mut k) = (start_edge, start_end);
        loop {
            if used[e] {
                return (path, true);
            }
            used[e] = true;
            path.push(e);
            let far = edges[e].ends[1 - k];
            if far.vertex >= d {
                return (path, false);
            }
            let next_slot = (far.slot as usize + 2) % 4;
            let (ne, nk) = slots[far.vertex][next_slot];
            e = ne;
            k = nk;
        }
    };

    for t in d..slots.len() {
        let (e, k) = slots[t][0];
        if used[e] {
            continue;
        }
        let (path, _) = follow(e, k, &mut used);
        strands.push((path, BranchKind::Interval));
    }
    for e in 0..edges.len() {
        if !used[e] {
            let (path, _) = follow(e, 0, &mut used);
            strands.push((path, BranchKind::Circle));
        }
    }
    strands
}

fn match_branches(
    declared: &[Vec<String>],
    edge_index: &HashMap<&str, usize>,
    strands: &[(Vec<usize>, BranchKind)],
    edges: &[Edge],
    d: usize,
) -> Result<Vec<Branch>, Vec<DivideError>> {
    let mut errors = Vec::new();
    let mut strand_of = vec![usize::MAX; edges.len()];
    for (si, (path, _)) in strands.iter().enumerate() {
        for &e in path {
            strand_of[e] = si;
        }
    }
    let mut claimed = vec![false; strands.len()];
    let mut branches = Vec::new();
    for (bi, ids) in declared.iter().enumerate() {
        let mut set = BTreeSet::new();
        let mut bad = false;
        for id in ids {
            match edge_index.get(id.as_str()) {
                Some(&e) => {
                    if !set.insert(e) {
                        errors.push(DivideError::BranchMismatch {
                            index: bi,
                            reason: format!("edge `{id}` listed twice"),
                        });
                        bad = true;
                    }
                }
                None => {
                    errors.push(DivideError::UnknownEdge(id.clone()));
                    bad = true;
                }
            }
        }
        if bad {
            continue;
        }
        let Some(&first) = set.iter().next() else {
            errors.push(DivideError::BranchMismatch { index: bi, reason: "empty branch".into() });
            continue;
        };
        let si = strand_of[first];
        let (path, kind) = &strands[si];
        let strand_set: BTreeSet<usize> = path.iter().copied().collect();
        if strand_set != set {
            errors.push(DivideError::BranchMismatch {
                index: bi,
                reason: format!("edges do not form one strand (strand through `{}` has {} edges)", edges[first].id, path.len()),
            });
            continue;
        }
        if claimed[si] {
            errors.push(DivideError::BranchMismatch { index: bi, reason: "strand declared twice".into() });
            continue;
        }
        claimed[si] = true;
        if *kind == BranchKind::Interval {
            let terminals = path
                .iter()
                .flat_map(|&e| edges[e].ends.iter())
                .filter(|s| s.vertex >= d)
                .count();
            if terminals != 2 {
                errors.push(DivideError::IntervalTerminals { index: bi, terminals });
                continue;
            }
        }
        branches.push(Branch { edges: path.clone(), kind: *kind });
    }
    for (si, (path, _)) in strands.iter().enumerate() {
        if !claimed[si] && errors.is_empty() {
            errors.push(DivideError::UncoveredEdge(edges[path[0]].id.clone()));
        }
    }
    if errors.is_empty() {
        Ok(branches)
    } else {
        Err(errors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn a1_raw() -> RawDivide {
        // two crossing chords; terminals t0..t3 counterclockwise at E, N, W, S
        let e = |id: &str, a: (&str, u8), b: (&str, u8)| RawEdge {
            id: id.into(),
            ends: [(a.0.into(), a.1), (b.0.into(), b.1)],
        };
        RawDivide {
            name: "A1".into(),
            double_points: vec!["p".into()],
            terminals: vec!["tE".into(), "tN".into(), "tW".into(), "tS".into()],
            edges: vec![
                e("e0", ("tW", 0), ("p", 2)),
                e("e1", ("p", 0), ("tE", 0)),
                e("e2", ("tS", 0), ("p", 3)),
                e("e3", ("p", 1), ("tN", 0)),
            ],
            branches: vec![vec!["e0".into(), "e1".into()], vec!["e2".into(), "e3".into()]],
            sign_seed: RawSeed { edge: "e3".into(), side: Side::Left, sign: Sign::Minus },
        }
    }

    #[test]
    fn a1_validates() {
        let d = Divide::from_raw(a1_raw()).unwrap();
        assert_eq!(d.double_point_count(), 1);
        assert_eq!(d.branch_count(), 2);
        assert!(d.branches().iter().all(|b| b.kind == BranchKind::Interval));
        assert_eq!(Divide::from_raw(d.to_raw()).unwrap(), d);
    }

    #[test]
    fn slot_used_twice() {
        let mut raw = a1_raw();
        raw.edges[1].ends[0] = ("p".into(), 2);
        let err = Divide::from_raw(raw).unwrap_err();
        assert!(err.to_string().contains("slot used twice"), "{err}");
    }

    #[test]
    fn three_valent_double_point() {
        let mut raw = a1_raw();
        raw.terminals.pop();
        raw.edges.pop();
        raw.edges[2].ends[0] = ("tN".into(), 0);
        raw.edges.truncate(2);
        raw.branches = vec![vec!["e0".into(), "e1".into()]];
        raw.sign_seed.edge = "e0".into();
        let err = Divide::from_raw(raw).unwrap_err();
        assert!(err.to_string().contains("degree mismatch at vertex"), "{err}");
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let mut raw = a1_raw();
        raw.terminals[1] = "tE".into();
        let err = Divide::from_raw(raw).unwrap_err();
        assert_eq!(err.errors(), &[DivideError::DuplicateId("tE".into())]);
    }

    #[test]
    fn unknown_seed_edge() {
        let mut raw = a1_raw();
        raw.sign_seed.edge = "nope".into();
        let err = Divide::from_raw(raw).unwrap_err();
        assert!(matches!(err.errors()[0], DivideError::MalformedSeed(_)));
    }

    #[test]
    fn branch_must_follow_strand() {
        let mut raw = a1_raw();
        raw.branches = vec![vec!["e0".into(), "e3".into()], vec!["e2".into(), "e1".into()]];
        let err = Divide::from_raw(raw).unwrap_err();
        assert!(matches!(err.errors()[0], DivideError::BranchMismatch { .. }), "{err}");
    }

    #[test]
    fn disconnected_is_rejected() {
        let mut raw = a1_raw();
        // a second, separate chord
        raw.terminals.extend(["u0".to_string(), "u1".to_string()]);
        raw.edges.push(RawEdge { id: "f".into(), ends: [("u0".into(), 0), ("u1".into(), 0)] });
        raw.branches.push(vec!["f".into()]);
        let err = Divide::from_raw(raw).unwrap_err();
        assert!(matches!(err.errors()[0], DivideError::Disconnected(_)), "{err}");
    }
}
