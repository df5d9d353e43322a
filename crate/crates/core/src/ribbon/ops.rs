use std::collections::{HashSet, VecDeque};

use super::{Edge, GraphError, RibbonGraph, Sign, Vertex};

impl RibbonGraph {
    pub fn delete_edge(&self, id: &str) -> Result<RibbonGraph, GraphError> {
        let e = self.edge_index(id)?;
        Ok(self.delete_index(e))
    }

    pub(crate) fn delete_index(&self, e: usize) -> RibbonGraph {
        let gone = &self.edges[e].halves;
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                id: v.id.clone(),
                rotation: v.rotation.iter().filter(|h| !gone.contains(h)).cloned().collect(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != e)
            .map(|(_, x)| x.clone())
            .collect();
        RibbonGraph::new(vertices, edges).expect("deletion keeps the graph valid")
    }

    /// Reverses the rotation at a vertex and toggles the sign of every edge
    /// with exactly one half-edge there.
    pub fn vertex_flip(&self, id: &str) -> Result<RibbonGraph, GraphError> {
        let v = self.vertex_index(id)?;
        Ok(self.flip_index(v))
    }

    pub(crate) fn flip_index(&self, v: usize) -> RibbonGraph {
        let mut vertices = self.vertices.clone();
        vertices[v].rotation.reverse();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (a, b) = self.endpoints(i);
                let mut e = e.clone();
                if (a == v) != (b == v) {
                    e.sign = e.sign.flipped();
                }
                e
            })
            .collect();
        RibbonGraph::new(vertices, edges).expect("flipping keeps the graph valid")
    }

    /// Contracts a non-loop edge. A twisted edge is first untwisted by flipping
    /// the endpoint holding `halves[1]`. The merged vertex keeps the id of the
    /// `halves[0]` endpoint; its rotation runs around that endpoint starting
    /// just after the edge, then around the other endpoint likewise.
    pub fn contract_edge(&self, id: &str) -> Result<RibbonGraph, GraphError> {
        let e = self.edge_index(id)?;
        if self.is_loop(e) {
            return Err(GraphError::ContractLoop(id.to_string()));
        }
        Ok(self.contract_index(e))
    }

    pub(crate) fn contract_index(&self, e: usize) -> RibbonGraph {
        debug_assert!(!self.is_loop(e));
        if self.sign(e).is_negative() {
            let v = self.dart_vertex(2 * e + 1);
            return self.flip_index(v).contract_index(e);
        }
        let (u, v) = self.endpoints(e);
        let spin = |vi: usize, dart: usize| -> Vec<String> {
            let rot = &self.vertices[vi].rotation;
            let p = self.dart_position(dart);
            (1..rot.len()).map(|k| rot[(p + k) % rot.len()].clone()).collect()
        };
        let mut merged = spin(u, 2 * e);
        merged.extend(spin(v, 2 * e + 1));
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != v)
            .map(|(i, x)| {
                if i == u {
                    Vertex {
                        id: x.id.clone(),
                        rotation: merged.clone(),
                    }
                } else {
                    x.clone()
                }
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != e)
            .map(|(_, x)| x.clone())
            .collect();
        RibbonGraph::new(vertices, edges).expect("contraction keeps the graph valid")
    }

    /// Disjoint union. Ids of `h` that clash with ids of `self` get primes
    /// appended until unique.
    pub fn disjoint_union(&self, h: &RibbonGraph) -> RibbonGraph {
        let (vertices, edges) = self.union_parts(h).0;
        RibbonGraph::new(vertices, edges).expect("union of valid graphs is valid")
    }

    #[allow(clippy::type_complexity)]
    fn union_parts(&self, h: &RibbonGraph) -> ((Vec<Vertex>, Vec<Edge>), Vec<String>) {
        fn fresh(taken: &mut HashSet<String>, id: &str) -> String {
            let mut s = id.to_string();
            while taken.contains(&s) {
                s.push('\'');
            }
            taken.insert(s.clone());
            s
        }
        let mut vids: HashSet<String> = self.vertices.iter().map(|v| v.id.clone()).collect();
        let mut eids: HashSet<String> = self.edges.iter().map(|e| e.id.clone()).collect();
        let mut hids: HashSet<String> = self
            .edges
            .iter()
            .flat_map(|e| e.halves.iter().cloned())
            .collect();
        let half_map: std::collections::HashMap<&str, String> = h
            .edges
            .iter()
            .flat_map(|e| e.halves.iter())
            .map(|x| (x.as_str(), fresh(&mut hids, x)))
            .collect();
        let mut vertices = self.vertices.clone();
        let mut new_vids = Vec::new();
        for v in &h.vertices {
            let id = fresh(&mut vids, &v.id);
            new_vids.push(id.clone());
            vertices.push(Vertex {
                id,
                rotation: v.rotation.iter().map(|x| half_map[x.as_str()].clone()).collect(),
            });
        }
        let mut edges = self.edges.clone();
        for e in &h.edges {
            edges.push(Edge {
                id: fresh(&mut eids, &e.id),
                halves: [
                    half_map[e.halves[0].as_str()].clone(),
                    half_map[e.halves[1].as_str()].clone(),
                ],
                sign: e.sign,
            });
        }
        ((vertices, edges), new_vids)
    }

    /// Merges `v_self` and `v_h` of the disjoint union into one vertex whose
    /// rotation is the rotation of `v_self` followed by that of `v_h`.
    pub fn one_point_join(&self, h: &RibbonGraph, v_self: &str, v_h: &str) -> Result<RibbonGraph, GraphError> {
        let a = self.vertex_index(v_self)?;
        let b = h.vertex_index(v_h)?;
        let ((mut vertices, edges), new_vids) = self.union_parts(h);
        let b_idx = self.num_vertices() + b;
        debug_assert_eq!(vertices[b_idx].id, new_vids[b]);
        let tail = std::mem::take(&mut vertices[b_idx].rotation);
        vertices[a].rotation.extend(tail);
        vertices.remove(b_idx);
        Ok(RibbonGraph::new(vertices, edges).expect("join of valid graphs is valid"))
    }

    /// Flips vertices along a spanning forest so that every forest edge is
    /// positive. Returns the switched graph; for orientable graphs every edge
    /// ends up positive.
    pub fn switch_forest_positive(&self) -> RibbonGraph {
        let nv = self.num_vertices();
        let mut flip = vec![false; nv];
        let mut seen = vec![false; nv];
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for e in 0..self.num_edges() {
            let (u, v) = self.endpoints(e);
            if u != v {
                adj[u].push((v, e));
                adj[v].push((u, e));
            }
        }
        for root in 0..nv {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(v, e) in &adj[u] {
                    if seen[v] {
                        continue;
                    }
                    seen[v] = true;
                    // effective sign after flips: sign * flip(u) * flip(v)
                    let s = if flip[u] { self.sign(e).flipped() } else { self.sign(e) };
                    flip[v] = s.is_negative();
                    queue.push_back(v);
                }
            }
        }
        let mut vertices = self.vertices.clone();
        for (v, f) in flip.iter().enumerate() {
            if *f {
                vertices[v].rotation.reverse();
            }
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let (a, b) = self.endpoints(i);
                let mut e = e.clone();
                if flip[a] != flip[b] {
                    e.sign = e.sign.flipped();
                }
                e
            })
            .collect();
        RibbonGraph::new(vertices, edges).expect("switching keeps the graph valid")
    }

    /// A vertex-flipped copy with every edge positive.
    pub fn normalize_orientation(&self) -> Result<RibbonGraph, GraphError> {
        let g = self.switch_forest_positive();
        if g.edges.iter().any(|e| e.sign == Sign::Negative) {
            return Err(GraphError::NonOrientable);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::super::EdgeSubset;
    use super::*;

    fn digon() -> RibbonGraph {
        RibbonGraph::build(
            &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
        )
        .unwrap()
    }

    #[test]
    fn contracting_a_tree_edge() {
        let g = RibbonGraph::build(&[("u", &["a"]), ("v", &["b"])], &[("e", "a", "b", 1)]).unwrap();
        let c = g.contract_edge("e").unwrap();
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.num_edges(), 0);
        assert_eq!(c.vertices()[0].rotation.len(), 0);
    }

    #[test]
    fn flip_is_an_involution() {
        let g = digon();
        assert_eq!(g.vertex_flip("u").unwrap().vertex_flip("u").unwrap(), g);
        let f = g.vertex_flip("u").unwrap();
        assert_eq!(f.vertices()[0].rotation, vec!["b1", "a1"]);
        assert_eq!(f.edges()[0].sign, Sign::Negative);
        assert_eq!(f.edges()[1].sign, Sign::Positive);
    }

    #[test]
    fn contracting_the_twisted_edge_of_the_digon() {
        let c = digon().contract_edge("b").unwrap();
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.num_edges(), 1);
        assert_eq!(c.edges()[0].sign, Sign::Negative);
        let s = c.full_stats();
        assert_eq!((s.bc, s.eg), (1, 1));
    }

    #[test]
    fn loops_cannot_be_contracted() {
        let g = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", 1)]).unwrap();
        assert_eq!(g.contract_edge("e"), Err(GraphError::ContractLoop("e".into())));
        assert!(matches!(g.contract_edge("nope"), Err(GraphError::UnknownEdge(_))));
    }

    #[test]
    fn join_of_two_positive_loops() {
        let g = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", 1)]).unwrap();
        let j = g.one_point_join(&g, "v", "v").unwrap();
        assert_eq!(j.num_vertices(), 1);
        let labels: Vec<&str> = j.vertices()[0]
            .rotation
            .iter()
            .map(|h| j.edges()[j.edges().iter().position(|e| e.halves.contains(h)).unwrap()].id.as_str())
            .collect();
        assert_eq!(labels, vec!["e", "e", "e'", "e'"]);
    }

    #[test]
    fn disjoint_union_adds_components() {
        let g = digon();
        let h = RibbonGraph::edgeless(2);
        let u = g.disjoint_union(&h);
        assert_eq!(u.num_components(), g.num_components() + h.num_components());
        assert_eq!(u.disjoint_union(&u).num_components(), 6);
    }

    #[test]
    fn trees_normalize_to_all_positive() {
        let g = RibbonGraph::build(
            &[("u", &["a"]), ("v", &["b", "c"]), ("w", &["d"])],
            &[("e", "a", "b", -1), ("f", "c", "d", 1)],
        )
        .unwrap();
        let n = g.normalize_orientation().unwrap();
        assert!(n.edges().iter().all(|e| e.sign == Sign::Positive));
        assert_eq!(digon().normalize_orientation(), Err(GraphError::NonOrientable));
    }

    #[test]
    fn flip_preserves_subgraph_stats() {
        let g = RibbonGraph::build(
            &[("u", &["a1", "b1", "c1", "d1"]), ("v", &["a2", "c2", "b2"]), ("w", &["d2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1), ("c", "c1", "c2", 1), ("d", "d1", "d2", -1)],
        )
        .unwrap();
        for v in ["u", "v", "w"] {
            let f = g.vertex_flip(v).unwrap();
            for bits in 0..16 {
                assert_eq!(
                    g.stats(&EdgeSubset::from_bits(&g, bits)),
                    f.stats(&EdgeSubset::from_bits(&f, bits))
                );
            }
        }
    }
}
