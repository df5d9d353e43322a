//! Ribbon graphs as signed rotation systems.
//!
//! Every edge owns two half-edges ("darts"). Internally dart `2*e + s` is
//! `edges[e].halves[s]`, so the partner of a dart is `d ^ 1`.

mod canon;
mod chord;
mod dsu;
mod dual;
mod medial;
mod ops;
mod trace;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use canon::CanonicalCode;
pub use chord::{ChordDiagram, ChordError};
pub(crate) use dsu::Dsu;
pub use medial::{MedialGraph, MedialOrigin, MedialProfile, medial, medial_contract_holds};
pub use trace::{BoundaryWalk, Pairing, SubgraphStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other { Sign::Positive } else { Sign::Negative }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.value() as i8)
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(serde::de::Error::custom(format!(
                "edge sign must be 1 or -1, got {other}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub rotation: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    pub halves: [String; 2],
    pub sign: Sign,
}

/// A violated representation invariant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("duplicated half-edge `{0}`")]
    DuplicatedHalfEdge(String),
    #[error("orphan half-edge `{0}`: referenced by edge `{1}` but absent from all rotations")]
    OrphanHalfEdge(String, String),
    #[error("half-edge `{0}` appears in a rotation but belongs to no edge")]
    UnattachedHalfEdge(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Invalid(#[from] Diagnostic),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("cannot contract loop `{0}`")]
    ContractLoop(String),
    #[error("graph is not a bouquet (one vertex, loops only)")]
    NotABouquet,
    #[error("graph is not orientable")]
    NonOrientable,
    #[error("vertex `{0}` does not have degree 4")]
    NotFourRegular(String),
}

/// Checks the representation invariants and reports the first violation.
pub fn validate(vertices: &[Vertex], edges: &[Edge]) -> Result<(), Diagnostic> {
    let mut seen_v = HashMap::new();
    for v in vertices {
        if seen_v.insert(v.id.as_str(), ()).is_some() {
            return Err(Diagnostic::DuplicateVertex(v.id.clone()));
        }
    }
    let mut in_rotation: HashMap<&str, ()> = HashMap::new();
    for v in vertices {
        for h in &v.rotation {
            if in_rotation.insert(h.as_str(), ()).is_some() {
                return Err(Diagnostic::DuplicatedHalfEdge(h.clone()));
            }
        }
    }
    let mut seen_e = HashMap::new();
    let mut in_edge: HashMap<&str, ()> = HashMap::new();
    for e in edges {
        if seen_e.insert(e.id.as_str(), ()).is_some() {
            return Err(Diagnostic::DuplicateEdge(e.id.clone()));
        }
        for h in &e.halves {
            if in_edge.insert(h.as_str(), ()).is_some() {
                return Err(Diagnostic::DuplicatedHalfEdge(h.clone()));
            }
            if !in_rotation.contains_key(h.as_str()) {
                return Err(Diagnostic::OrphanHalfEdge(h.clone(), e.id.clone()));
            }
        }
    }
    for v in vertices {
        for h in &v.rotation {
            if !in_edge.contains_key(h.as_str()) {
                return Err(Diagnostic::UnattachedHalfEdge(h.clone()));
            }
        }
    }
    Ok(())
}

#[derive(Clone)]
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    rot: Vec<Vec<usize>>,
    dart_vertex: Vec<usize>,
    dart_pos: Vec<usize>,
}

impl RibbonGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self, Diagnostic> {
        validate(&vertices, &edges)?;
        let mut dart_of: HashMap<&str, usize> = HashMap::with_capacity(2 * edges.len());
        for (i, e) in edges.iter().enumerate() {
            dart_of.insert(e.halves[0].as_str(), 2 * i);
            dart_of.insert(e.halves[1].as_str(), 2 * i + 1);
        }
        let mut dart_vertex = vec![0; 2 * edges.len()];
        let mut dart_pos = vec![0; 2 * edges.len()];
        let rot: Vec<Vec<usize>> = vertices
            .iter()
            .enumerate()
            .map(|(vi, v)| {
                v.rotation
                    .iter()
                    .enumerate()
                    .map(|(pos, h)| {
                        let d = dart_of[h.as_str()];
                        dart_vertex[d] = vi;
                        dart_pos[d] = pos;
                        d
                    })
                    .collect()
            })
            .collect();
        Ok(RibbonGraph {
            vertices,
            edges,
            rot,
            dart_vertex,
            dart_pos,
        })
    }

    /// Compact constructor: `rotations` lists `(vertex, half-edges)`, `edges`
    /// lists `(edge, half, half, sign)` with sign `1` or `-1`.
    pub fn build(rotations: &[(&str, &[&str])], edges: &[(&str, &str, &str, i8)]) -> Result<Self, Diagnostic> {
        let vertices = rotations
            .iter()
            .map(|(id, rot)| Vertex {
                id: id.to_string(),
                rotation: rot.iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        let edges = edges
            .iter()
            .map(|(id, a, b, s)| Edge {
                id: id.to_string(),
                halves: [a.to_string(), b.to_string()],
                sign: if *s < 0 { Sign::Negative } else { Sign::Positive },
            })
            .collect();
        RibbonGraph::new(vertices, edges)
    }

    /// `n` isolated vertices named `v0..`.
    pub fn edgeless(n: usize) -> Self {
        let vertices = (0..n)
            .map(|i| Vertex {
                id: format!("v{i}"),
                rotation: Vec::new(),
            })
            .collect();
        RibbonGraph::new(vertices, Vec::new()).expect("edgeless graph is valid")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, GraphError> {
        self.vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_string()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize, GraphError> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_string()))
    }

    pub(crate) fn rotation_darts(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub(crate) fn dart_vertex(&self, d: usize) -> usize {
        self.dart_vertex[d]
    }

    pub(crate) fn dart_name(&self, d: usize) -> &str {
        &self.edges[d / 2].halves[d % 2]
    }

    pub(crate) fn next_dart(&self, d: usize) -> usize {
        let r = &self.rot[self.dart_vertex[d]];
        r[(self.dart_pos[d] + 1) % r.len()]
    }

    pub(crate) fn dart_position(&self, d: usize) -> usize {
        self.dart_pos[d]
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.edges[e].sign
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.dart_vertex[2 * e] == self.dart_vertex[2 * e + 1]
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.dart_vertex[2 * e], self.dart_vertex[2 * e + 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    pub fn is_bouquet(&self) -> bool {
        self.vertices.len() == 1
    }

    /// Number of negative edges.
    pub fn negative_edges(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Vertex index of each vertex's connected component representative.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut dsu = Dsu::new(self.vertices.len());
        for e in 0..self.edges.len() {
            let (u, v) = self.endpoints(e);
            dsu.union(u, v);
        }
        (0..self.vertices.len()).map(|v| dsu.find(v)).collect()
    }

    pub fn num_components(&self) -> usize {
        let mut labels = self.component_labels();
        labels.sort_unstable();
        labels.dedup();
        labels.len()
    }

    /// True when removing `e` disconnects its endpoints.
    pub fn is_bridge(&self, e: usize) -> bool {
        if self.is_loop(e) {
            return false;
        }
        let mut dsu = Dsu::new(self.vertices.len());
        for f in 0..self.edges.len() {
            if f != e {
                let (u, v) = self.endpoints(f);
                dsu.union(u, v);
            }
        }
        let (u, v) = self.endpoints(e);
        dsu.find(u) != dsu.find(v)
    }
}

impl PartialEq for RibbonGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for RibbonGraph {}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RibbonGraph {")?;
        for v in &self.vertices {
            write!(f, " {}:({})", v.id, v.rotation.join(","))?;
        }
        f.write_str(" |")?;
        for e in &self.edges {
            let s = if e.sign.is_negative() { '-' } else { '+' };
            write!(f, " {}{}[{},{}]", e.id, s, e.halves[0], e.halves[1])?;
        }
        f.write_str(" }")
    }
}

/// A set of edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubset {
    members: Vec<bool>,
}

impl EdgeSubset {
    pub fn all(g: &RibbonGraph) -> Self {
        EdgeSubset {
            members: vec![true; g.num_edges()],
        }
    }

    pub fn none(g: &RibbonGraph) -> Self {
        EdgeSubset {
            members: vec![false; g.num_edges()],
        }
    }

    /// Bit `i` of `bits` selects edge `i`.
    pub fn from_bits(g: &RibbonGraph, bits: u64) -> Self {
        EdgeSubset {
            members: (0..g.num_edges()).map(|i| bits >> i & 1 == 1).collect(),
        }
    }

    pub fn from_ids<S: AsRef<str>>(g: &RibbonGraph, ids: &[S]) -> Result<Self, GraphError> {
        let mut s = Self::none(g);
        for id in ids {
            s.members[g.edge_index(id.as_ref())?] = true;
        }
        Ok(s)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members[e]
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn complement(&self) -> Self {
        EdgeSubset {
            members: self.members.iter().map(|b| !b).collect(),
        }
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.members
    }
}
