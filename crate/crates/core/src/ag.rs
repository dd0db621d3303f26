//! AΓ diagrams: saddles and signed regions of a divide, with depth labels.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write};

use serde::Serialize;

use crate::divide::faces::corner_face;
use crate::divide::{Sign, SignedDivide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexType {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Plus,
}

impl VertexType {
    pub fn symbol(self) -> &'static str {
        match self {
            VertexType::Minus => "-",
            VertexType::Zero => "0",
            VertexType::Plus => "+",
        }
    }
}

impl From<Sign> for VertexType {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Minus => VertexType::Minus,
            Sign::Plus => VertexType::Plus,
        }
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Origin {
    /// Index of the double point.
    DoublePoint(usize),
    /// Index of the region face.
    Region(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgVertex {
    pub id: String,
    pub ty: VertexType,
    pub origin: Origin,
}

/// Undirected edge between order positions `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AgEdge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AgError {
    #[error("depth undefined: {0}")]
    DepthUndefined(String),
    #[error("invalid vertex order: {0}")]
    BadOrder(String),
    #[error("edge joins two vertices of type {0}")]
    SameTypeEdge(VertexType),
}

/// Vertices in their total order (all `-`, then `0`, then `+`) and weighted edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgDiagram {
    pub vertices: Vec<AgVertex>,
    pub edges: Vec<AgEdge>,
}

impl AgDiagram {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn census(&self) -> (usize, usize, usize) {
        let count = |t| self.vertices.iter().filter(|v| v.ty == t).count();
        (count(VertexType::Minus), count(VertexType::Zero), count(VertexType::Plus))
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        let (u, v) = (i.min(j), i.max(j));
        self.edges.iter().find(|e| e.u == u && e.v == v).map_or(0, |e| e.multiplicity)
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| if e.u == i { Some(e.v) } else if e.v == i { Some(e.u) } else { None })
            .collect();
        out.sort_unstable();
        out
    }

    /// Reorders vertices: new position `i` holds old vertex `perm[i]`.
    /// Only reorderings inside a type block are allowed.
    pub fn reordered(&self, perm: &[usize]) -> Result<AgDiagram, AgError> {
        let n = self.vertices.len();
        if perm.len() != n {
            return Err(AgError::BadOrder(format!("expected {n} indices, got {}", perm.len())));
        }
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in perm.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(AgError::BadOrder("not a permutation".into()));
            }
            inverse[old] = new;
        }
        for (new, &old) in perm.iter().enumerate() {
            if self.vertices[old].ty != self.vertices[new].ty {
                return Err(AgError::BadOrder(format!(
                    "position {} would hold a vertex of type {} instead of {}",
                    new + 1,
                    self.vertices[old].ty,
                    self.vertices[new].ty
                )));
            }
        }
        let vertices = perm.iter().map(|&old| self.vertices[old].clone()).collect();
        let mut edges: Vec<AgEdge> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (inverse[e.u], inverse[e.v]);
                AgEdge { u: a.min(b), v: a.max(b), multiplicity: e.multiplicity }
            })
            .collect();
        edges.sort();
        Ok(AgDiagram { vertices, edges })
    }

    pub fn check_types(&self) -> Result<(), AgError> {
        for e in &self.edges {
            if self.vertices[e.u].ty == self.vertices[e.v].ty {
                return Err(AgError::SameTypeEdge(self.vertices[e.u].ty));
            }
        }
        Ok(())
    }
}

fn vertex_id(ty: VertexType, k: usize) -> String {
    match ty {
        VertexType::Zero => format!("v0_{k}"),
        _ => format!("v{}_{k}", ty.symbol()),
    }
}

pub fn build_ag(signed: &SignedDivide) -> AgDiagram {
    let divide = &signed.divide;
    let regions = signed.faces.regions();
    let minus: Vec<usize> = regions.iter().copied().filter(|&f| signed.sign[f] == Sign::Minus).collect();
    let plus: Vec<usize> = regions.iter().copied().filter(|&f| signed.sign[f] == Sign::Plus).collect();

    let mut vertices = Vec::new();
    let mut face_pos: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, &f) in minus.iter().enumerate() {
        face_pos.insert(f, vertices.len());
        vertices.push(AgVertex { id: vertex_id(VertexType::Minus, k + 1), ty: VertexType::Minus, origin: Origin::Region(f) });
    }
    let zero_start = vertices.len();
    for v in 0..divide.double_point_count() {
        vertices.push(AgVertex { id: vertex_id(VertexType::Zero, v + 1), ty: VertexType::Zero, origin: Origin::DoublePoint(v) });
    }
    for (k, &f) in plus.iter().enumerate() {
        face_pos.insert(f, vertices.len());
        vertices.push(AgVertex { id: vertex_id(VertexType::Plus, k + 1), ty: VertexType::Plus, origin: Origin::Region(f) });
    }

    let mut mult: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for v in 0..divide.double_point_count() {
        for s in 0..4u8 {
            let f = corner_face(divide, &signed.faces, v, s);
            if let Some(&p) = face_pos.get(&f) {
                let z = zero_start + v;
                *mult.entry((p.min(z), p.max(z))).or_default() += 1;
            }
        }
    }
    for e in 0..divide.edges().len() {
        let (l, r) = (signed.faces.left_of_edge(e), signed.faces.right_of_edge(e));
        if let (Some(&a), Some(&b)) = (face_pos.get(&l), face_pos.get(&r)) {
            *mult.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    let edges = mult.into_iter().map(|((u, v), m)| AgEdge { u, v, multiplicity: m }).collect();
    AgDiagram { vertices, edges }
}

/// Order positions of the vertices touching the unbounded part of the disc.
pub fn exposure_set(signed: &SignedDivide, ag: &AgDiagram) -> Vec<usize> {
    let divide = &signed.divide;
    let faces = &signed.faces;
    let dp_exposed: Vec<bool> = (0..divide.double_point_count())
        .map(|v| (0..4u8).any(|s| faces.outer[corner_face(divide, faces, v, s)]))
        .collect();
    let mut out = Vec::new();
    for (i, vx) in ag.vertices.iter().enumerate() {
        let exposed = match vx.origin {
            Origin::DoublePoint(v) => dp_exposed[v],
            Origin::Region(f) => {
                let by_edge = (0..divide.edges().len()).any(|e| {
                    let (l, r) = (faces.left_of_edge(e), faces.right_of_edge(e));
                    (l == f && faces.outer[r]) || (r == f && faces.outer[l])
                });
                let by_point = (0..divide.double_point_count())
                    .any(|v| dp_exposed[v] && (0..4u8).any(|s| corner_face(divide, faces, v, s) == f));
                by_edge || by_point
            }
        };
        if exposed {
            out.push(i);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthLabels {
    pub depth: Vec<usize>,
    pub diagram_depth: usize,
}

/// Graph distance from each vertex to the exposed set.
pub fn depth_labels(ag: &AgDiagram, exposed: &[usize]) -> Result<DepthLabels, AgError> {
    if exposed.is_empty() && !ag.is_empty() {
        return Err(AgError::DepthUndefined("no exposed vertex".into()));
    }
    let n = ag.len();
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in exposed {
        depth[v] = 0;
        queue.push_back(v);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|i| ag.neighbors(i)).collect();
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(v) = depth.iter().position(|&d| d == usize::MAX) {
        return Err(AgError::DepthUndefined(format!("vertex {} is unreachable from the exposed set", ag.vertices[v].id)));
    }
    let diagram_depth = depth.iter().copied().max().unwrap_or(0);
    Ok(DepthLabels { depth, diagram_depth })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Deterministic DOT rendering of the diagram.
pub fn to_dot(name: &str, ag: &AgDiagram, depths: &DepthLabels) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", dot_escape(name)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, v) in ag.vertices.iter().enumerate() {
        writeln!(
            out,
            "  \"{}\" [label=\"{} #{} d={}\"];",
            dot_escape(&v.id),
            v.ty,
            i + 1,
            depths.depth[i]
        )
        .unwrap();
    }
    for e in &ag.edges {
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"{}\"];",
            dot_escape(&ag.vertices[e.u].id),
            dot_escape(&ag.vertices[e.v].id),
            e.multiplicity
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
