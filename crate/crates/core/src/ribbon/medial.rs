//! Topological medial graphs.
//!
//! The medial vertex of edge `e = {h, h'}` is named after `e`. Its four
//! half-edges lead to the corners around `e`: writing `R(h)` for the corner
//! between `h` and its successor and `L(h)` for the corner between its
//! predecessor and `h`, the rotation is `R(h), L(h), R(h'), L(h')`, read in the
//! local orientation at the `h` end. When `e` is twisted the `h'` end is seen
//! mirrored, so the last two slots swap and each carries a half-twist; a medial
//! edge is twisted when exactly one of its ends carries one.
//!
//! With this layout the corner between slots 0 and 1 faces the `h` endpoint and
//! the corner between slots 2 and 3 faces the `h'` endpoint, so the uncut state
//! (the ribbon of `e` left intact) is always [`Pairing::Second`].

use super::{Edge, EdgeSubset, GraphError, Pairing, RibbonGraph, Sign, SubgraphStats, Vertex};

/// Where a medial vertex came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedialOrigin {
    pub source_edge: String,
    /// The pairing that keeps the source ribbon intact.
    pub uncut: Pairing,
}

/// A 4-regular ribbon graph together with vertexless closed curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedialGraph {
    pub graph: RibbonGraph,
    pub free_loops: usize,
    /// Indexed like `graph.vertices()`, when built from a source graph.
    pub origin: Option<Vec<MedialOrigin>>,
}

impl MedialGraph {
    pub fn new(graph: RibbonGraph, free_loops: usize) -> Result<Self, GraphError> {
        for v in graph.vertices() {
            if v.rotation.len() != 4 {
                return Err(GraphError::NotFourRegular(v.id.clone()));
            }
        }
        Ok(MedialGraph {
            graph,
            free_loops,
            origin: None,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    /// `(v, e, bc, eg, t, free_loops)` of the underlying surface.
    pub fn profile(&self) -> MedialProfile {
        let s = self.graph.full_stats();
        MedialProfile {
            vertices: self.graph.num_vertices(),
            edges: self.graph.num_edges(),
            bc: s.bc,
            eg: s.eg,
            t: s.t,
            free_loops: self.free_loops,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedialProfile {
    pub vertices: usize,
    pub edges: usize,
    pub bc: usize,
    pub eg: usize,
    pub t: u8,
    pub free_loops: usize,
}

/// Builds the topological medial graph of `g`.
pub fn medial(g: &RibbonGraph) -> MedialGraph {
    let right = |d: usize| format!("R:{}", g.dart_name(d));
    let left = |d: usize| format!("L:{}", g.dart_name(d));
    let mut vertices = Vec::with_capacity(g.num_edges());
    let mut origin = Vec::with_capacity(g.num_edges());
    for (e, edge) in g.edges().iter().enumerate() {
        let (a, b) = (2 * e, 2 * e + 1);
        let rotation = match edge.sign {
            Sign::Positive => vec![right(a), left(a), right(b), left(b)],
            Sign::Negative => vec![right(a), left(a), left(b), right(b)],
        };
        vertices.push(Vertex {
            id: edge.id.clone(),
            rotation,
        });
        origin.push(MedialOrigin {
            source_edge: edge.id.clone(),
            uncut: Pairing::Second,
        });
    }
    // A slot carries a half-twist when it sits at the far end of a twisted edge.
    let twisted = |d: usize| d % 2 == 1 && g.sign(d / 2).is_negative();
    let mut edges = Vec::with_capacity(2 * g.num_edges());
    for d in 0..2 * g.num_edges() {
        let nd = g.next_dart(d);
        let sign = if twisted(d) != twisted(nd) { Sign::Negative } else { Sign::Positive };
        edges.push(Edge {
            id: format!("c:{}", g.dart_name(d)),
            halves: [right(d), left(nd)],
            sign,
        });
    }
    let graph = RibbonGraph::new(vertices, edges).expect("medial graph is valid");
    let free_loops = g.bare_vertices(&EdgeSubset::all(g)).len();
    MedialGraph {
        graph,
        free_loops,
        origin: Some(origin),
    }
}

impl RibbonGraph {
    pub fn medial(&self) -> MedialGraph {
        medial(self)
    }
}

/// Checks `v(G_m)=e(g)`, `e(G_m)=2e(g)`, `bc(G_m)=bc(g)+v(g)`, and equal
/// Euler genus and orientability. Isolated vertices become free loops; each
/// free loop is an annulus and contributes two boundary components.
pub fn medial_contract_holds(g: &RibbonGraph) -> bool {
    let m = medial(g);
    let s: SubgraphStats = g.full_stats();
    let p = m.profile();
    let isolated = g.bare_vertices(&EdgeSubset::all(g)).len();
    p.vertices == g.num_edges()
        && p.edges == 2 * g.num_edges()
        && p.bc + 2 * isolated == s.bc + g.num_vertices()
        && p.eg == s.eg
        && p.t == s.t
        && p.free_loops == isolated
}
