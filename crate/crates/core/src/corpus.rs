//! Test corpora: every connected ribbon graph up to a size bound, seeded
//! random graphs, and checkerboard-colorable link universes.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::links::{LinkUniverse, checkerboard_color};
use crate::ribbon::{CanonicalCode, ChordDiagram, Edge, Pairing, RibbonGraph, Sign, Vertex};

pub const MAX_EXHAUSTIVE_EDGES: usize = 7;
pub const MAX_UNIVERSE_CROSSINGS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("exhaustive enumeration supports at most {MAX_EXHAUSTIVE_EDGES} edges, got {0}")]
    TooManyEdges(usize),
    #[error("universe enumeration supports at most {MAX_UNIVERSE_CROSSINGS} crossings, got {0}")]
    TooManyCrossings(usize),
}

/// Graphs obtained by adding one edge to `g`: between any two corners
/// (including two slots of one corner, in either order), or as a pendant
/// edge to a new vertex. Every connected graph with `m + 1` edges arises
/// from one with `m` edges this way.
fn one_edge_extensions(g: &RibbonGraph, signs: &[Sign]) -> Vec<RibbonGraph> {
    let base_vertices = g.vertices().to_vec();
    let base_edges = g.edges().to_vec();
    let nv = base_vertices.len();
    let mut out = Vec::new();
    let with_edge = |vertices: Vec<Vertex>, sign: Sign| {
        let mut edges = base_edges.clone();
        edges.push(Edge {
            id: "new".into(),
            halves: ["new.0".into(), "new.1".into()],
            sign,
        });
        RibbonGraph::new(vertices, edges).expect("extension stays valid")
    };
    let slots = |v: usize| base_vertices[v].rotation.len().max(1);
    for &sign in signs {
        for u in 0..nv {
            for p in 0..slots(u) {
                let mut vertices = base_vertices.clone();
                vertices[u].rotation.insert(p, "new.0".into());
                vertices.push(Vertex {
                    id: "new".into(),
                    rotation: vec!["new.1".into()],
                });
                out.push(with_edge(vertices, sign));
                for v in u..nv {
                    let len = base_vertices[v].rotation.len() + usize::from(u == v);
                    for q in 0..len.max(1) {
                        let mut vertices = base_vertices.clone();
                        vertices[u].rotation.insert(p, "new.0".into());
                        vertices[v].rotation.insert(q, "new.1".into());
                        out.push(with_edge(vertices, sign));
                    }
                }
            }
        }
    }
    out
}

/// Every connected ribbon graph with at most `max_edges` edges, one per
/// canonical code (so signs and chirality are distinguished), ordered by
/// edge count and then by code.
pub fn exhaustive(max_edges: usize) -> Result<Vec<RibbonGraph>, CorpusError> {
    grow(max_edges, &[Sign::Positive, Sign::Negative], |_| true)
}

/// Every connected plane graph with at most `max_edges` edges and all signs
/// positive. Deleting a non-bridge or a leaf edge keeps a plane graph plane,
/// so each layer only grows from plane graphs.
pub fn exhaustive_plane(max_edges: usize) -> Result<Vec<RibbonGraph>, CorpusError> {
    grow(max_edges, &[Sign::Positive], |g| g.euler_genus() == 0)
}

fn grow(max_edges: usize, signs: &[Sign], keep: impl Fn(&RibbonGraph) -> bool + Sync) -> Result<Vec<RibbonGraph>, CorpusError> {
    if max_edges > MAX_EXHAUSTIVE_EDGES {
        return Err(CorpusError::TooManyEdges(max_edges));
    }
    let mut layer: BTreeMap<CanonicalCode, RibbonGraph> = BTreeMap::new();
    let seed = RibbonGraph::edgeless(1);
    layer.insert(seed.canonical_code(), seed.canonical_relabel());
    let mut all: Vec<RibbonGraph> = layer.values().cloned().collect();
    for _ in 0..max_edges {
        let found: Vec<(CanonicalCode, RibbonGraph)> = layer
            .par_iter()
            .flat_map_iter(|(_, g)| one_edge_extensions(g, signs))
            .filter(|h| keep(h))
            .map(|h| (h.canonical_code(), h))
            .collect();
        let mut next: BTreeMap<CanonicalCode, RibbonGraph> = BTreeMap::new();
        for (code, h) in found {
            next.entry(code).or_insert(h);
        }
        layer = next
            .into_par_iter()
            .map(|(code, h)| (code, h.canonical_relabel()))
            .collect();
        all.extend(layer.values().cloned());
    }
    Ok(all)
}

/// A random connected graph with exactly `edges` edges: a random spanning
/// tree on a random number of vertices, extra random edges, shuffled
/// rotations and independent random signs (negative with probability
/// `p_negative`).
pub fn random_graph<R: Rng>(rng: &mut R, edges: usize, p_negative: f64) -> RibbonGraph {
    let nv = rng.random_range(1..=edges + 1);
    let mut ends: Vec<(usize, usize)> = (1..nv).map(|v| (rng.random_range(0..v), v)).collect();
    while ends.len() < edges {
        ends.push((rng.random_range(0..nv), rng.random_range(0..nv)));
    }
    ends.shuffle(rng);
    let mut rotations: Vec<Vec<String>> = vec![Vec::new(); nv];
    let mut edge_list = Vec::with_capacity(edges);
    for (i, &(a, b)) in ends.iter().enumerate() {
        let halves = [format!("e{i}.0"), format!("e{i}.1")];
        rotations[a].push(halves[0].clone());
        rotations[b].push(halves[1].clone());
        let sign = if rng.random_bool(p_negative) { Sign::Negative } else { Sign::Positive };
        edge_list.push(Edge {
            id: format!("e{i}"),
            halves,
            sign,
        });
    }
    for r in &mut rotations {
        r.shuffle(rng);
    }
    let vertices = rotations
        .into_iter()
        .enumerate()
        .map(|(v, rotation)| Vertex {
            id: format!("v{v}"),
            rotation,
        })
        .collect();
    RibbonGraph::new(vertices, edge_list).expect("random graph is valid")
}

/// `count` random connected graphs with 1 to `max_edges` edges, fully
/// determined by `seed`.
pub fn random_corpus(seed: u64, count: usize, max_edges: usize) -> Vec<RibbonGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(1..=max_edges.max(1));
            random_graph(&mut rng, m, 0.5)
        })
        .collect()
}

/// Like [`random_corpus`] with every sign positive.
pub fn random_orientable_corpus(seed: u64, count: usize, max_edges: usize) -> Vec<RibbonGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(1..=max_edges.max(1));
            random_graph(&mut rng, m, 0.0)
        })
        .collect()
}

/// A uniformly shuffled word on `chords` chords named `a, b, ..`, each
/// negative with probability `p_negative`.
pub fn random_diagram<R: Rng>(rng: &mut R, chords: usize, p_negative: f64) -> ChordDiagram {
    let labels: Vec<String> = (0..chords).map(chord_label).collect();
    let mut word: Vec<&str> = labels.iter().flat_map(|l| [l.as_str(), l.as_str()]).collect();
    word.shuffle(rng);
    let negative: Vec<&str> = labels
        .iter()
        .filter(|_| rng.random_bool(p_negative))
        .map(String::as_str)
        .collect();
    ChordDiagram::from_labels(&word, &negative).expect("each chord twice")
}

fn chord_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("c{i}")
    }
}

/// The 4-regular universe on `v` vertices whose slot `i` is joined to slot
/// `matching[i]`; vertex `c{j}` holds slots `4j..4j+3` in order.
fn universe_graph(v: usize, matching: &[usize]) -> RibbonGraph {
    let vertices = (0..v)
        .map(|j| Vertex {
            id: format!("c{j}"),
            rotation: (4 * j..4 * j + 4).map(|s| format!("s{s}")).collect(),
        })
        .collect();
    let edges = (0..4 * v)
        .filter(|&s| s < matching[s])
        .map(|s| Edge {
            id: format!("m{s}"),
            halves: [format!("s{s}"), format!("s{}", matching[s])],
            sign: Sign::Positive,
        })
        .collect();
    RibbonGraph::new(vertices, edges).expect("perfect matching")
}

/// Connectivity and face 2-colorability straight from the matching. The
/// corner after slot `s` lies in the orbit of `s` under `s -> m[next(s)]`.
fn quick_colorable(v: usize, m: &[usize]) -> bool {
    let n = 4 * v;
    let next = |s: usize| (s & !3) | ((s + 1) & 3);
    let mut vertex_seen = vec![false; v];
    let mut stack = vec![0];
    vertex_seen[0] = true;
    while let Some(j) = stack.pop() {
        for &slot in &m[4 * j..4 * j + 4] {
            let k = slot / 4;
            if !vertex_seen[k] {
                vertex_seen[k] = true;
                stack.push(k);
            }
        }
    }
    if vertex_seen.contains(&false) {
        return false;
    }
    let mut face = vec![usize::MAX; n];
    let mut faces = 0;
    for s in 0..n {
        let mut t = s;
        while face[t] == usize::MAX {
            face[t] = faces;
            t = m[next(t)];
        }
        if face[s] == faces {
            faces += 1;
        }
    }
    let mut adj = vec![Vec::new(); faces];
    for s in 0..n {
        let (p, q) = (face[s], face[next(s)]);
        if p == q {
            return false;
        }
        adj[p].push(q);
        adj[q].push(p);
    }
    let mut color = vec![u8::MAX; faces];
    for root in 0..faces {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut stack = vec![root];
        while let Some(p) = stack.pop() {
            for &q in &adj[p] {
                if color[q] == u8::MAX {
                    color[q] = 1 - color[p];
                    stack.push(q);
                } else if color[q] == color[p] {
                    return false;
                }
            }
        }
    }
    true
}

fn for_each_matching(slots: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(m: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        let Some(i) = m.iter().position(|&x| x == usize::MAX) else {
            f(m);
            return;
        };
        for j in i + 1..m.len() {
            if m[j] == usize::MAX {
                m[i] = j;
                m[j] = i;
                rec(m, f);
                m[i] = usize::MAX;
                m[j] = usize::MAX;
            }
        }
    }
    rec(&mut vec![usize::MAX; slots], f);
}

/// Connected, oriented, checkerboard-colorable 4-regular universes with
/// exactly `v` crossings, one per canonical code.
pub fn colorable_universe_graphs(v: usize) -> Result<Vec<RibbonGraph>, CorpusError> {
    if v > MAX_UNIVERSE_CROSSINGS {
        return Err(CorpusError::TooManyCrossings(v));
    }
    if v == 0 {
        return Ok(Vec::new());
    }
    // the first slot's partner splits the work
    let found: Vec<(CanonicalCode, RibbonGraph)> = (1..4 * v)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut local = Vec::new();
            let others: Vec<usize> = (1..4 * v).filter(|&s| s != first).collect();
            let mut m = vec![0; 4 * v];
            for_each_matching(4 * v - 2, &mut |rest| {
                m[0] = first;
                m[first] = 0;
                for (i, &j) in rest.iter().enumerate() {
                    m[others[i]] = others[j];
                }
                if !quick_colorable(v, &m) {
                    return;
                }
                let g = universe_graph(v, &m);
                let u = LinkUniverse::new(g.clone(), 0, vec![Pairing::First; v]).expect("4-regular and oriented");
                debug_assert!(checkerboard_color(&u).is_ok());
                local.push((g.canonical_code(), g));
            });
            local
        })
        .collect();
    let mut unique: BTreeMap<CanonicalCode, RibbonGraph> = BTreeMap::new();
    for (code, g) in found {
        unique.entry(code).or_insert(g);
    }
    Ok(unique.into_values().collect())
}

/// Every A/B labeling of every colorable universe with at most
/// `max_crossings` crossings, plus the crossingless one- and two-loop
/// diagrams and, for at most `loop_crossings` crossings, copies carrying an
/// extra free loop.
pub fn universe_corpus(max_crossings: usize, loop_crossings: usize) -> Result<Vec<LinkUniverse>, CorpusError> {
    let mut out = vec![LinkUniverse::free_loops(1), LinkUniverse::free_loops(2)];
    for v in 1..=max_crossings {
        for g in colorable_universe_graphs(v)? {
            let loops: &[usize] = if v <= loop_crossings { &[0, 1] } else { &[0] };
            for &fl in loops {
                for bits in 0u32..(1 << v) {
                    let a = (0..v)
                        .map(|i| if bits >> i & 1 == 0 { Pairing::First } else { Pairing::Second })
                        .collect();
                    out.push(LinkUniverse::new(g.clone(), fl, a).expect("valid universe"));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_edge_corpus() {
        let c = exhaustive(1).unwrap();
        assert_eq!(c.len(), 5);
        let mut shapes: Vec<(usize, usize, usize)> = c
            .iter()
            .map(|g| (g.num_vertices(), g.num_edges(), g.negative_edges()))
            .collect();
        shapes.sort();
        assert_eq!(shapes, [(1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0), (2, 1, 1)]);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(exhaustive(8), Err(CorpusError::TooManyEdges(8)));
        assert!(colorable_universe_graphs(5).is_err());
    }

    #[test]
    fn two_edge_count_matches_direct_enumeration() {
        // Independent count: all labeled connected structures with 2 edges,
        // deduplicated by code. Bouquets: words aabb/abab with 4 sign
        // patterns; the rest are built by hand below.
        let c = exhaustive(2).unwrap();
        let two: Vec<&RibbonGraph> = c.iter().filter(|g| g.num_edges() == 2).collect();
        let mut codes = std::collections::BTreeSet::new();
        let mut add = |g: RibbonGraph| {
            codes.insert(g.canonical_code());
        };
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                add(RibbonGraph::build(&[("o", &["a", "A", "b", "B"])], &[("a", "a", "A", s1), ("b", "b", "B", s2)]).unwrap());
                add(RibbonGraph::build(&[("o", &["a", "b", "A", "B"])], &[("a", "a", "A", s1), ("b", "b", "B", s2)]).unwrap());
                // digon
                add(RibbonGraph::build(&[("u", &["a", "b"]), ("v", &["A", "B"])], &[("a", "a", "A", s1), ("b", "b", "B", s2)]).unwrap());
                // path
                add(RibbonGraph::build(&[("u", &["a"]), ("v", &["A", "b"]), ("w", &["B"])], &[("a", "a", "A", s1), ("b", "b", "B", s2)]).unwrap());
                // loop with pendant edge, both sides of the loop
                add(RibbonGraph::build(&[("u", &["a", "A", "b"]), ("v", &["B"])], &[("a", "a", "A", s1), ("b", "b", "B", s2)]).unwrap());
            }
        }
        assert_eq!(two.len(), codes.len());
        assert!(two.iter().all(|g| codes.contains(&g.canonical_code())));
    }

    #[test]
    fn corpus_graphs_are_connected_and_distinct() {
        let c = exhaustive(3).unwrap();
        let codes: std::collections::BTreeSet<_> = c.iter().map(|g| g.canonical_code()).collect();
        assert_eq!(codes.len(), c.len());
        assert!(c.iter().all(|g| g.num_components() == 1));
    }

    #[test]
    fn plane_corpus_is_the_plane_positive_part() {
        let all = exhaustive(3).unwrap();
        let expected: std::collections::BTreeSet<_> = all
            .iter()
            .filter(|g| g.euler_genus() == 0 && g.negative_edges() == 0)
            .map(|g| g.canonical_code())
            .collect();
        let plane: std::collections::BTreeSet<_> = exhaustive_plane(3).unwrap().iter().map(|g| g.canonical_code()).collect();
        assert_eq!(plane, expected);
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random_corpus(42, 10, 7), random_corpus(42, 10, 7));
        assert_ne!(random_corpus(42, 10, 7), random_corpus(43, 10, 7));
        for g in random_corpus(7, 30, 7) {
            assert_eq!(g.num_components(), 1);
            assert!((1..=7).contains(&g.num_edges()));
        }
        assert!(random_orientable_corpus(1, 20, 5).iter().all(|g| g.is_orientable()));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d = random_diagram(&mut rng, 6, 0.5);
        assert_eq!((d.num_chords(), d.word().len()), (6, 12));
    }

    #[test]
    fn small_universes() {
        // one crossing: the figure eight (plane) and the interlaced pair
        // (torus, not colorable)
        let one = colorable_universe_graphs(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].euler_genus(), 0);
        let u = universe_corpus(2, 1).unwrap();
        assert!(u.iter().all(|u| checkerboard_color(u).is_ok()));
    }
}
