//! JSON interchange for ribbon graphs, link universes and signed graphs.
//! Output lists vertices, edges and crossings sorted by id.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::links::{LinkError, LinkUniverse, SignedRibbonGraph};
use crate::ribbon::{Diagnostic, Edge, GraphError, MedialGraph, Pairing, RibbonGraph, Sign, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("invalid ribbon graph: {0}")]
    Invalid(#[from] Diagnostic),
    #[error("edge `{0}`: sign must be 1 or -1, got {1}")]
    BadSign(String, i64),
    #[error("crossing at unknown vertex `{0}`")]
    UnknownCrossingVertex(String),
    #[error("vertex `{0}` has no crossing entry")]
    MissingCrossing(String),
    #[error("vertex `{0}` has more than one crossing entry")]
    DuplicateCrossing(String),
    #[error("crossing `{0}`: {1}")]
    BadCrossing(String, String),
    #[error("edge `{0}` has no crossing sign")]
    MissingCrossingSign(String),
    #[error("free loops are only meaningful for 4-regular inputs")]
    UnexpectedFreeLoops,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub rotation: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub id: String,
    pub halves: [String; 2],
    pub sign: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingDoc {
    pub vertex: String,
    #[serde(rename = "A")]
    pub a: [[String; 2]; 2],
    #[serde(rename = "B")]
    pub b: [[String; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingSignDoc {
    pub edge: String,
    pub sign: i64,
}

/// Ribbon graph document, optionally carrying universe or crossing-sign data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub free_loops: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossings: Vec<CrossingDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossing_signs: Vec<CrossingSignDoc>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl GraphDoc {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_graph(g: &RibbonGraph) -> Self {
        let mut vertices: Vec<VertexDoc> = g
            .vertices()
            .iter()
            .map(|v| VertexDoc {
                id: v.id.clone(),
                rotation: v.rotation.clone(),
            })
            .collect();
        vertices.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges: Vec<EdgeDoc> = g
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                id: e.id.clone(),
                halves: e.halves.clone(),
                sign: e.sign.value() as i64,
            })
            .collect();
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        GraphDoc {
            vertices,
            edges,
            free_loops: 0,
            crossings: Vec::new(),
            crossing_signs: Vec::new(),
        }
    }

    pub fn to_graph(&self) -> Result<RibbonGraph, IoError> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                rotation: v.rotation.clone(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let sign = match e.sign {
                    1 => Sign::Positive,
                    -1 => Sign::Negative,
                    s => return Err(IoError::BadSign(e.id.clone(), s)),
                };
                Ok(Edge {
                    id: e.id.clone(),
                    halves: e.halves.clone(),
                    sign,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RibbonGraph::new(vertices, edges)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// A plain ribbon graph; `free_loops` must be absent or zero.
pub fn parse_graph(text: &str) -> Result<RibbonGraph, IoError> {
    let doc = GraphDoc::parse(text)?;
    if doc.free_loops != 0 {
        return Err(IoError::UnexpectedFreeLoops);
    }
    doc.to_graph()
}

pub fn graph_to_json(g: &RibbonGraph) -> String {
    GraphDoc::from_graph(g).to_json()
}

pub fn medial_to_json(m: &MedialGraph) -> String {
    GraphDoc {
        free_loops: m.free_loops,
        ..GraphDoc::from_graph(&m.graph)
    }
    .to_json()
}

fn position_pairing(g: &RibbonGraph, v: usize, pairs: &[[String; 2]; 2]) -> Option<Pairing> {
    let rot = &g.vertices()[v].rotation;
    let pos = |h: &str| rot.iter().position(|r| r == h);
    let a = (pos(&pairs[0][0])?, pos(&pairs[0][1])?);
    let b = (pos(&pairs[1][0])?, pos(&pairs[1][1])?);
    Pairing::from_positions(a, b)
}

/// A universe: a 4-regular graph plus one crossing entry per vertex.
pub fn parse_universe(text: &str) -> Result<LinkUniverse, IoError> {
    let doc = GraphDoc::parse(text)?;
    let g = doc.to_graph()?;
    let mut a_split: Vec<Option<Pairing>> = vec![None; g.num_vertices()];
    for c in &doc.crossings {
        let v = g
            .vertex_index(&c.vertex)
            .map_err(|_| IoError::UnknownCrossingVertex(c.vertex.clone()))?;
        if a_split[v].is_some() {
            return Err(IoError::DuplicateCrossing(c.vertex.clone()));
        }
        let bad = |m: &str| IoError::BadCrossing(c.vertex.clone(), m.to_string());
        let a = position_pairing(&g, v, &c.a).ok_or_else(|| bad("A is not a pairing of the vertex's half-edges"))?;
        let b = position_pairing(&g, v, &c.b).ok_or_else(|| bad("B is not a pairing of the vertex's half-edges"))?;
        if a == Pairing::Straight || b == Pairing::Straight {
            return Err(bad("A and B must not pair opposite half-edges"));
        }
        if a == b {
            return Err(bad("A and B must differ"));
        }
        a_split[v] = Some(a);
    }
    let a_split = a_split
        .into_iter()
        .enumerate()
        .map(|(v, a)| a.ok_or_else(|| IoError::MissingCrossing(g.vertices()[v].id.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinkUniverse::new(g, doc.free_loops, a_split)?)
}

fn pairing_doc(g: &RibbonGraph, v: usize, p: Pairing) -> [[String; 2]; 2] {
    let rot = &g.vertices()[v].rotation;
    p.pairs().map(|(i, j)| [rot[i].clone(), rot[j].clone()])
}

pub fn universe_to_json(u: &LinkUniverse) -> String {
    let g = u.graph();
    let mut crossings: Vec<CrossingDoc> = (0..g.num_vertices())
        .map(|v| CrossingDoc {
            vertex: g.vertices()[v].id.clone(),
            a: pairing_doc(g, v, u.a_splitting(v)),
            b: pairing_doc(g, v, u.b_splitting(v)),
        })
        .collect();
    crossings.sort_by(|a, b| a.vertex.cmp(&b.vertex));
    GraphDoc {
        free_loops: u.num_free_loops(),
        crossings,
        ..GraphDoc::from_graph(g)
    }
    .to_json()
}

pub fn signed_graph_to_json(sg: &SignedRibbonGraph) -> String {
    let mut crossing_signs: Vec<CrossingSignDoc> = sg
        .graph
        .edges()
        .iter()
        .zip(&sg.crossing)
        .map(|(e, s)| CrossingSignDoc {
            edge: e.id.clone(),
            sign: s.value() as i64,
        })
        .collect();
    crossing_signs.sort_by(|a, b| a.edge.cmp(&b.edge));
    GraphDoc {
        crossing_signs,
        ..GraphDoc::from_graph(&sg.graph)
    }
    .to_json()
}

/// A ribbon graph with a crossing sign per edge; missing signs are an error.
pub fn parse_signed_graph(text: &str) -> Result<SignedRibbonGraph, IoError> {
    let doc = GraphDoc::parse(text)?;
    let g = doc.to_graph()?;
    let mut crossing = Vec::with_capacity(g.num_edges());
    for e in g.edges() {
        let s = doc
            .crossing_signs
            .iter()
            .find(|c| c.edge == e.id)
            .ok_or_else(|| IoError::MissingCrossingSign(e.id.clone()))?;
        crossing.push(match s.sign {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            other => return Err(IoError::BadSign(e.id.clone(), other)),
        });
    }
    Ok(SignedRibbonGraph::new(g, crossing)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIGON: &str = r#"{
        "vertices": [{"id": "v", "rotation": ["a2", "b2"]}, {"id": "u", "rotation": ["a1", "b1"]}],
        "edges": [{"id": "b", "halves": ["b1", "b2"], "sign": -1}, {"id": "a", "halves": ["a1", "a2"], "sign": 1}]
    }"#;

    #[test]
    fn graph_round_trip_is_sorted() {
        let g = parse_graph(DIGON).unwrap();
        let text = graph_to_json(&g);
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["vertices"][0]["id"], "u");
        assert_eq!(doc["edges"][0]["id"], "a");
        assert_eq!(parse_graph(&text).unwrap().canonical_code(), g.canonical_code());
        assert_eq!(graph_to_json(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(parse_graph("{"), Err(IoError::Json(_))));
        let orphan = r#"{"vertices": [{"id": "v", "rotation": ["h", "k"]}],
                         "edges": [{"id": "e", "halves": ["h", "q"], "sign": 1}]}"#;
        assert!(matches!(parse_graph(orphan), Err(IoError::Invalid(_))));
        let sign = DIGON.replace("-1", "2");
        assert_eq!(parse_graph(&sign), Err(IoError::BadSign("b".into(), 2)));
    }

    #[test]
    fn universe_round_trip() {
        let text = r#"{
            "vertices": [{"id": "x", "rotation": ["p0", "p1", "p2", "p3"]}],
            "edges": [{"id": "a", "halves": ["p0", "p3"], "sign": 1}, {"id": "b", "halves": ["p1", "p2"], "sign": 1}],
            "crossings": [{"vertex": "x", "A": [["p1", "p0"], ["p2", "p3"]], "B": [["p1", "p2"], ["p3", "p0"]]}]
        }"#;
        let u = parse_universe(text).unwrap();
        assert_eq!(u.a_splitting(0), Pairing::First);
        assert_eq!(parse_universe(&universe_to_json(&u)).unwrap(), u);
        let straight = text.replace(r#""B": [["p1", "p2"], ["p3", "p0"]]"#, r#""B": [["p0", "p2"], ["p1", "p3"]]"#);
        assert!(matches!(parse_universe(&straight), Err(IoError::BadCrossing(..))));
        let missing = text.replace(r#""crossings""#, r#""ignored_crossings""#);
        assert!(parse_universe(&missing).is_err());
    }

    #[test]
    fn signed_round_trip() {
        let g = parse_graph(DIGON).unwrap().normalize_orientation();
        assert!(g.is_err());
        let g = RibbonGraph::build(&[("o", &["h", "k"])], &[("e", "h", "k", 1)]).unwrap();
        let sg = SignedRibbonGraph::new(g, vec![Sign::Negative]).unwrap();
        assert_eq!(parse_signed_graph(&signed_graph_to_json(&sg)).unwrap(), sg);
    }
}
