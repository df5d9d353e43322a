//! Link universes on oriented surfaces, checkerboard colorings, signed
//! green-face graphs and the generalized Kauffman bracket.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, LazyLock};

use thiserror::Error;

use crate::poly::{LaurentPoly, PolyError, VarTable};
use crate::ribbon::{Edge, EdgeSubset, GraphError, MedialGraph, Pairing, RibbonGraph, Sign, Vertex};
use crate::transition::{IdentityCheck, TransitionError, WeightSystem, q_transition, signed_weights};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("the universe admits no checkerboard coloring")]
    NotCheckerboardColorable,
    #[error("crossing `{0}`: the A splitting must be one of the two non-crossing pairings")]
    BadSplitting(String),
    #[error("{0} splitting labels for {1} crossings")]
    SplittingCount(usize, usize),
    #[error("coloring does not belong to this universe")]
    InvalidColoring,
    #[error("link universes must lie on an orientable surface")]
    NonOrientable,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Transition(#[from] TransitionError),
}

static LINK_VARS: LazyLock<Arc<VarTable>> =
    LazyLock::new(|| VarTable::new(&["A", "B", "d"]).expect("valid table"));

/// `(A, B, d)`.
pub fn link_vars() -> Arc<VarTable> {
    LINK_VARS.clone()
}

static SIGNED_VARS: LazyLock<Arc<VarTable>> =
    LazyLock::new(|| VarTable::new(&["X", "y", "z"]).expect("valid table"));

/// `(X, y, z)` with `X = x - 1`.
pub fn signed_vars() -> Arc<VarTable> {
    SIGNED_VARS.clone()
}

/// A 4-regular ribbon graph on an orientable surface with an A splitting
/// chosen at every crossing. The B splitting is the other non-crossing
/// pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkUniverse {
    graph: RibbonGraph,
    free_loops: usize,
    a_split: Vec<Pairing>,
}

impl LinkUniverse {
    pub fn new(graph: RibbonGraph, free_loops: usize, a_split: Vec<Pairing>) -> Result<Self, LinkError> {
        MedialGraph::new(graph.clone(), free_loops)?;
        if a_split.len() != graph.num_vertices() {
            return Err(LinkError::SplittingCount(a_split.len(), graph.num_vertices()));
        }
        if let Some(v) = a_split.iter().position(|&p| p == Pairing::Straight) {
            return Err(LinkError::BadSplitting(graph.vertices()[v].id.clone()));
        }
        // Reversing a rotation maps position i to 3 - i, which fixes both
        // non-crossing pairings, so the labels survive normalization.
        let graph = graph.normalize_orientation().map_err(|_| LinkError::NonOrientable)?;
        Ok(LinkUniverse {
            graph,
            free_loops,
            a_split,
        })
    }

    /// Vertexless closed curves only.
    pub fn free_loops(n: usize) -> Self {
        LinkUniverse {
            graph: RibbonGraph::edgeless(0),
            free_loops: n,
            a_split: Vec::new(),
        }
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn num_free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn num_crossings(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn a_splitting(&self, v: usize) -> Pairing {
        self.a_split[v]
    }

    pub fn b_splitting(&self, v: usize) -> Pairing {
        self.a_split[v].opposite()
    }

    /// The same universe with every A and B label exchanged.
    pub fn mirrored_labels(&self) -> LinkUniverse {
        LinkUniverse {
            a_split: self.a_split.iter().map(|p| p.opposite()).collect(),
            ..self.clone()
        }
    }

    pub fn as_medial(&self) -> MedialGraph {
        MedialGraph::new(self.graph.clone(), self.free_loops).expect("universes are 4-regular")
    }

    /// Weight `A` on A splittings, `B` on B splittings, 0 on crossings.
    pub fn weight_system(&self, a: &LaurentPoly, b: &LaurentPoly) -> WeightSystem {
        let vars = a.vars().clone();
        let zero = LaurentPoly::zero(&vars);
        let weights = self
            .a_split
            .iter()
            .map(|&p| {
                Pairing::ALL.map(|q| {
                    if q == p {
                        a.clone()
                    } else if q == p.opposite() {
                        b.clone()
                    } else {
                        zero.clone()
                    }
                })
            })
            .collect();
        WeightSystem::new(&vars, weights).expect("one table")
    }
}

/// `sum_S A^a(S) B^b(S) d^(c(S)-1)` in `(a, b, d)`, computed as `Q(W_L, d)/d`.
pub fn kauffman_bracket(u: &LinkUniverse, a: &str, b: &str, d: &str) -> Result<LaurentPoly, LinkError> {
    let vars = VarTable::new(&[a, b, d])?;
    let w = u.weight_system(&LaurentPoly::var(&vars, a)?, &LaurentPoly::var(&vars, b)?);
    let q = q_transition(&u.as_medial(), &w, d)?;
    let inv_d = LaurentPoly::monomial(&vars, num_traits::One::one(), &[(d, -2)])?;
    Ok(&q * &inv_d)
}

/// The bracket in the default variables `(A, B, d)`.
pub fn bracket(u: &LinkUniverse) -> LaurentPoly {
    kauffman_bracket(u, "A", "B", "d").expect("default variables")
}

/// A proper 2-coloring of the faces of a universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardColoring {
    /// `corner_face[v][i]`: face holding the corner between positions `i`
    /// and `i + 1` at vertex `v`.
    pub corner_face: Vec<[usize; 4]>,
    /// Corners `(vertex, position)` of each face in surface order.
    pub face_corners: Vec<Vec<(usize, usize)>>,
    pub green: Vec<bool>,
}

impl CheckerboardColoring {
    pub fn num_faces(&self) -> usize {
        self.green.len()
    }

    /// Green and white exchanged.
    pub fn swapped(&self) -> CheckerboardColoring {
        CheckerboardColoring {
            green: self.green.iter().map(|g| !g).collect(),
            ..self.clone()
        }
    }

    /// Whether faces on the two sides of every edge differ in color.
    pub fn is_proper(&self) -> bool {
        self.corner_face
            .iter()
            .all(|f| (0..4).all(|i| self.green[f[i]] != self.green[f[(i + 1) % 4]]))
    }

    /// The two green corner positions at a vertex, `[i, i + 2]`.
    pub fn green_corners(&self, v: usize) -> [usize; 2] {
        if self.green[self.corner_face[v][0]] { [0, 2] } else { [1, 3] }
    }
}

type FaceTable = (Vec<[usize; 4]>, Vec<Vec<(usize, usize)>>);

/// Faces of the universe with their corners, in surface order.
fn faces(g: &RibbonGraph) -> FaceTable {
    let walks = g.boundary_walks(&EdgeSubset::all(g));
    let mut corner_face = vec![[usize::MAX; 4]; g.num_vertices()];
    let mut face_corners = Vec::with_capacity(walks.len());
    for (f, w) in walks.iter().enumerate() {
        let steps = w.corners();
        // an all-positive surface is traced coherently; orient walks forward
        let forward = steps.first().is_none_or(|s| s.forward);
        debug_assert!(steps.iter().all(|s| s.forward == forward));
        let mut corners: Vec<(usize, usize)> = steps
            .iter()
            .map(|s| (g.dart_vertex(s.after), g.dart_position(s.after)))
            .collect();
        if !forward {
            corners.reverse();
        }
        for &(v, i) in &corners {
            corner_face[v][i] = f;
        }
        face_corners.push(corners);
    }
    (corner_face, face_corners)
}

/// Two-colors the faces so that the faces on the two sides of every edge
/// differ. In each connected part of the face-adjacency structure the face
/// holding the lowest corner (first vertex, first position) is green.
pub fn checkerboard_color(u: &LinkUniverse) -> Result<CheckerboardColoring, LinkError> {
    let g = &u.graph;
    let (corner_face, face_corners) = faces(g);
    let nf = face_corners.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for f in &corner_face {
        for i in 0..4 {
            let (p, q) = (f[i], f[(i + 1) % 4]);
            if p == q {
                return Err(LinkError::NotCheckerboardColorable);
            }
            adj[p].push(q);
            adj[q].push(p);
        }
    }
    let mut color: Vec<Option<bool>> = vec![None; nf];
    let roots = corner_face.iter().flat_map(|f| f.iter().copied());
    for root in roots {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            let c = color[p].expect("colored");
            for &q in &adj[p] {
                match color[q] {
                    None => {
                        color[q] = Some(!c);
                        queue.push_back(q);
                    }
                    Some(cq) if cq == c => return Err(LinkError::NotCheckerboardColorable),
                    _ => {}
                }
            }
        }
    }
    Ok(CheckerboardColoring {
        corner_face,
        face_corners,
        green: color.into_iter().map(|c| c.expect("every face has a corner")).collect(),
    })
}

/// An oriented ribbon graph with all topological signs positive plus a
/// crossing sign per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedRibbonGraph {
    pub graph: RibbonGraph,
    /// Indexed like `graph.edges()`.
    pub crossing: Vec<Sign>,
}

impl SignedRibbonGraph {
    pub fn new(graph: RibbonGraph, crossing: Vec<Sign>) -> Result<Self, LinkError> {
        let graph = graph.normalize_orientation().map_err(|_| LinkError::NonOrientable)?;
        assert_eq!(crossing.len(), graph.num_edges(), "one crossing sign per edge");
        Ok(SignedRibbonGraph { graph, crossing })
    }

    pub fn all_positive(graph: RibbonGraph) -> Result<Self, LinkError> {
        let n = graph.num_edges();
        Self::new(graph, vec![Sign::Positive; n])
    }

    pub fn sign_map(&self) -> HashMap<String, Sign> {
        self.graph
            .edges()
            .iter()
            .zip(&self.crossing)
            .map(|(e, s)| (e.id.clone(), *s))
            .collect()
    }
}

/// One vertex per green face (named `g0, g1, ..`) and one isolated vertex per
/// free loop (`loop0, ..`); one edge per crossing, named after it, joining its
/// two green corners. Its crossing sign is `+1` when the A splitting merges
/// the green corners, which makes A the uncut state of the edge.
pub fn green_face_graph(u: &LinkUniverse, coloring: &CheckerboardColoring) -> Result<SignedRibbonGraph, LinkError> {
    let g = &u.graph;
    let (corner_face, _) = faces(g);
    if corner_face != coloring.corner_face || !coloring.is_proper() {
        return Err(LinkError::InvalidColoring);
    }
    let half = |v: usize, i: usize| format!("{}.{}", g.vertices()[v].id, i);
    let mut vertices = Vec::new();
    for (f, corners) in coloring.face_corners.iter().enumerate() {
        if coloring.green[f] {
            vertices.push(Vertex {
                id: format!("g{}", vertices.len()),
                rotation: corners.iter().map(|&(v, i)| half(v, i)).collect(),
            });
        }
    }
    for i in 0..u.free_loops {
        vertices.push(Vertex {
            id: format!("loop{i}"),
            rotation: Vec::new(),
        });
    }
    let mut edges = Vec::with_capacity(g.num_vertices());
    let mut crossing = Vec::with_capacity(g.num_vertices());
    for v in 0..g.num_vertices() {
        let [c0, c1] = coloring.green_corners(v);
        edges.push(Edge {
            id: g.vertices()[v].id.clone(),
            halves: [half(v, c0), half(v, c1)],
            sign: Sign::Positive,
        });
        let hugged = u.a_split[v].hugged_corners().expect("A is non-crossing");
        crossing.push(if hugged == [c0, c1] { Sign::Negative } else { Sign::Positive });
    }
    let graph = RibbonGraph::new(vertices, edges).map_err(GraphError::from)?;
    SignedRibbonGraph::new(graph, crossing)
}

/// `sum_F X^(r(G)-r(F)+s(F)) y^(n(F)-s(F)) z^(k(F)-bc(F)+n(F))` with
/// `X = x - 1` and `s(F)` half the difference between the negative edges
/// inside and outside `F`.
pub fn signed_r(sg: &SignedRibbonGraph) -> LaurentPoly {
    let g = &sg.graph;
    let m = g.num_edges();
    assert!(m < 63, "state sum over {m} edges");
    let rank = g.full_stats().r as i32;
    let negatives: Vec<bool> = sg.crossing.iter().map(|s| s.is_negative()).collect();
    let total_neg = negatives.iter().filter(|&&n| n).count() as i32;
    let mut counts: HashMap<[i32; 3], i64> = HashMap::new();
    for bits in 0u64..(1 << m) {
        let f = EdgeSubset::from_bits(g, bits);
        let s = g.stats(&f);
        let inside = (0..m).filter(|&e| f.contains(e) && negatives[e]).count() as i32;
        // twice s(F) = F1 - F2
        let s2 = inside - (total_neg - inside);
        let key = [2 * (rank - s.r as i32) + s2, 2 * s.n as i32 - s2, 2 * s.eg as i32];
        *counts.entry(key).or_default() += 1;
    }
    LaurentPoly::from_terms(
        &signed_vars(),
        counts
            .into_iter()
            .map(|(k, c)| (k.to_vec(), num_rational::BigRational::from_integer(c.into()))),
    )
}

fn lv(factors: &[(&str, i32)]) -> LaurentPoly {
    LaurentPoly::monomial(&link_vars(), num_traits::One::one(), factors).expect("link variable")
}

/// `A^r B^n t^e R_G(B t/A + 1, A t/B, 1/t)` in `(A, B, d)` with `t = d`,
/// where `e` is `k` or `k - 1`.
fn signed_rhs(sg: &SignedRibbonGraph, k_shift: i32) -> LaurentPoly {
    let s = sg.graph.full_stats();
    let prefactor = lv(&[("A", 2 * s.r as i32), ("B", 2 * s.n as i32), ("d", 2 * (s.k as i32 - k_shift))]);
    let bindings = HashMap::from([
        ("X".to_string(), lv(&[("B", 2), ("d", 2), ("A", -2)])),
        ("y".to_string(), lv(&[("A", 2), ("d", 2), ("B", -2)])),
        ("z".to_string(), lv(&[("d", -2)])),
    ]);
    let r = signed_r(sg)
        .substitute(&bindings, &link_vars())
        .expect("monomial substitution");
    &prefactor * &r
}

/// The checks behind the Chmutov-Pak identity for one coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChmutovPakReport {
    pub green_face_graph: SignedRibbonGraph,
    /// `[L] = Q(W_L, d)/d`, with the bracket summed directly over A/B states.
    pub bracket_vs_transition: IdentityCheck,
    /// `[L] = A^r B^n d^(k-1) R_G(B d/A + 1, A d/B, 1/d)`.
    pub chmutov_pak: IdentityCheck,
    /// `Q(G_m; W^-, d) = A^r B^n d^k R_G(B d/A + 1, A d/B, 1/d)`.
    pub signed_transition: IdentityCheck,
    /// The green-face medial has the universe's surface profile equals the universe's.
    pub medial_matches: bool,
}

impl ChmutovPakReport {
    pub fn holds(&self) -> bool {
        self.bracket_vs_transition.holds()
            && self.chmutov_pak.holds()
            && self.signed_transition.holds()
            && self.medial_matches
    }
}

/// Direct state sum over all A/B choices.
pub fn bracket_by_states(u: &LinkUniverse) -> LaurentPoly {
    let vars = link_vars();
    let v = u.num_crossings();
    let mut counts: HashMap<[i32; 3], i64> = HashMap::new();
    for bits in 0u64..(1 << v) {
        let choice: Vec<Pairing> = (0..v)
            .map(|i| if bits >> i & 1 == 0 { u.a_splitting(i) } else { u.b_splitting(i) })
            .collect();
        let c = u.graph.state_components(&choice).expect("4-regular") + u.free_loops;
        let b = bits.count_ones() as i32;
        *counts.entry([2 * (v as i32 - b), 2 * b, 2 * (c as i32 - 1)]).or_default() += 1;
    }
    LaurentPoly::from_terms(
        &vars,
        counts
            .into_iter()
            .map(|(k, c)| (k.to_vec(), num_rational::BigRational::from_integer(c.into()))),
    )
}

/// Checks the bracket against the signed green-face graph for the chosen
/// coloring, and for the swapped coloring as well when `both` is set.
pub fn verify_chmutov_pak(u: &LinkUniverse, both: bool) -> Result<Vec<ChmutovPakReport>, LinkError> {
    let coloring = checkerboard_color(u)?;
    let mut colorings = vec![coloring.clone()];
    if both {
        colorings.push(coloring.swapped());
    }
    let direct = bracket_by_states(u);
    let via_q = bracket(u);
    colorings
        .iter()
        .map(|c| {
            let sg = green_face_graph(u, c)?;
            let m = sg.graph.medial();
            let w = signed_weights(&m, &lv(&[("A", 2)]), &lv(&[("B", 2)]), &sg.sign_map())?;
            let q_signed = q_transition(&m, &w, "d")?;
            Ok(ChmutovPakReport {
                bracket_vs_transition: IdentityCheck {
                    lhs: direct.clone(),
                    rhs: via_q.clone(),
                },
                chmutov_pak: IdentityCheck {
                    lhs: direct.clone(),
                    rhs: signed_rhs(&sg, 1),
                },
                signed_transition: IdentityCheck {
                    lhs: q_signed,
                    rhs: signed_rhs(&sg, 0),
                },
                medial_matches: m.profile() == u.as_medial().profile(),
                green_face_graph: sg,
            })
        })
        .collect()
}
