//! Face tracing on the rotation system, with virtual boundary arcs.
//!
//! Darts `2e` and `2e + 1` run along edge `e` forwards (`ends[0] -> ends[1]`)
//! and backwards. Dart `2E + i` is the boundary arc from terminal `i` to
//! terminal `i + 1` (counterclockwise). Every face is traced with the face on
//! the left of its darts.

use super::{Divide, SlotRef};

pub type Dart = usize;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FaceError {
    #[error("rotation system is not planar: V - E + F = {euler} (expected 1); first orbit visits darts {orbit:?}")]
    NotPlanar { euler: i64, orbit: Vec<Dart> },
}

/// A region whose boundary passes the same vertex more than once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionIssue {
    pub face: usize,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
    pub outer: Vec<bool>,
    pub region: Vec<bool>,
    pub issues: Vec<RegionIssue>,
    edge_count: usize,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn region_count(&self) -> usize {
        self.region.iter().filter(|&&r| r).count()
    }

    /// Region faces in order of their smallest dart.
    pub fn regions(&self) -> Vec<usize> {
        (0..self.faces.len()).filter(|&f| self.region[f]).collect()
    }

    pub fn is_arc(&self, dart: Dart) -> bool {
        dart >= 2 * self.edge_count
    }

    pub fn left_of_edge(&self, edge: usize) -> usize {
        self.face_of[2 * edge]
    }

    pub fn right_of_edge(&self, edge: usize) -> usize {
        self.face_of[2 * edge + 1]
    }
}

/// Dart leaving `at.vertex` through slot `at.slot`.
pub fn out_dart(divide: &Divide, at: SlotRef) -> Dart {
    let (e, k) = divide.edge_at(at);
    2 * e + k
}

/// Slot at which a divide dart arrives.
pub fn head(divide: &Divide, dart: Dart) -> SlotRef {
    let e = &divide.edges()[dart / 2];
    e.ends[1 - dart % 2]
}

/// Slot a divide dart leaves from.
pub fn tail(divide: &Divide, dart: Dart) -> SlotRef {
    let e = &divide.edges()[dart / 2];
    e.ends[dart % 2]
}

/// Face on the left of the dart leaving `v` at `slot`: the quadrant between
/// `slot` and `slot + 1`.
pub fn corner_face(divide: &Divide, faces: &FaceSet, v: usize, slot: u8) -> usize {
    faces.face_of[out_dart(divide, SlotRef { vertex: v, slot })]
}

fn next_dart(divide: &Divide, dart: Dart) -> Dart {
    let ne = divide.edges().len();
    let k = divide.terminal_count();
    if dart >= 2 * ne {
        let i = dart - 2 * ne;
        let t = divide.terminal_vertex((i + 1) % k);
        return out_dart(divide, SlotRef { vertex: t, slot: 0 });
    }
    let h = head(divide, dart);
    match divide.terminal_position(h.vertex) {
        Some(p) => 2 * ne + p,
        None => out_dart(divide, SlotRef { vertex: h.vertex, slot: (h.slot + 3) % 4 }),
    }
}

pub fn trace_faces(divide: &Divide) -> Result<FaceSet, FaceError> {
    let ne = divide.edges().len();
    let k = divide.terminal_count();
    let n_darts = 2 * ne + k;
    let mut face_of = vec![usize::MAX; n_darts];
    let mut faces = Vec::new();
    for start in 0..n_darts {
        if face_of[start] != usize::MAX {
            continue;
        }
        let f = faces.len();
        let mut orbit = Vec::new();
        let mut d = start;
        while face_of[d] == usize::MAX {
            face_of[d] = f;
            orbit.push(d);
            d = next_dart(divide, d);
        }
        if d != start {
            return Err(FaceError::NotPlanar { euler: i64::MIN, orbit });
        }
        faces.push(orbit);
    }

    let v = divide.vertex_count() as i64;
    let e = (ne + k) as i64;
    let euler = v - e + faces.len() as i64;
    if euler != 1 {
        return Err(FaceError::NotPlanar { euler, orbit: faces[0].clone() });
    }

    let outer: Vec<bool> = faces.iter().map(|o| o.iter().any(|&d| d >= 2 * ne)).collect();
    let region: Vec<bool> = outer.iter().map(|o| !o).collect();

    let mut issues = Vec::new();
    for (f, orbit) in faces.iter().enumerate() {
        if !region[f] {
            continue;
        }
        let mut seen = std::collections::BTreeSet::new();
        for &d in orbit {
            let vtx = tail(divide, d).vertex;
            if !seen.insert(vtx) {
                issues.push(RegionIssue { face: f, vertex: divide.vertex_id(vtx).to_string() });
                break;
            }
        }
    }

    Ok(FaceSet { faces, face_of, outer, region, issues, edge_count: ne })
}
