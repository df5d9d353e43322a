use super::{Edge, EdgeSubset, RibbonGraph, Sign, Vertex};

impl RibbonGraph {
    /// Surface dual. Face vertices are named `f0, f1, ..` in tracing order,
    /// followed by one vertex per isolated vertex (named after it). The dual of
    /// edge `e` keeps the id `e`; its half-edges are the two sides of `e`,
    /// named `e.a` and `e.b`. A dual edge is twisted when the walks through it
    /// traverse both sides of `e` in the same direction; the result is then
    /// switched so that a spanning forest is untwisted.
    pub fn dual(&self) -> RibbonGraph {
        let all = EdgeSubset::all(self);
        let walks = self.boundary_walks(&all);
        let side_name = |e: usize, side: usize| {
            format!("{}.{}", self.edges[e].id, if side == 0 { 'a' } else { 'b' })
        };
        let mut direction: Vec<[Option<bool>; 2]> = vec![[None, None]; self.num_edges()];
        let mut vertices = Vec::with_capacity(walks.len());
        for (i, w) in walks.iter().enumerate() {
            let steps = w.sides();
            let rotation = steps
                .iter()
                .map(|s| {
                    direction[s.edge][s.side] = Some(s.forward);
                    side_name(s.edge, s.side)
                })
                .collect();
            vertices.push(Vertex {
                id: format!("f{i}"),
                rotation,
            });
        }
        for v in self.bare_vertices(&all) {
            vertices.push(Vertex {
                id: self.vertices[v].id.clone(),
                rotation: Vec::new(),
            });
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, x)| {
                let [a, b] = direction[e];
                let same = a.expect("side traced") == b.expect("side traced");
                Edge {
                    id: x.id.clone(),
                    halves: [side_name(e, 0), side_name(e, 1)],
                    sign: if same { Sign::Negative } else { Sign::Positive },
                }
            })
            .collect();
        RibbonGraph::new(vertices, edges)
            .expect("dual of a valid graph is valid")
            .switch_forest_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_duality(g: &RibbonGraph) {
        let d = g.dual();
        let (s, sd) = (g.full_stats(), d.full_stats());
        assert_eq!(d.num_vertices(), s.bc, "{g:?}");
        assert_eq!(d.num_edges(), g.num_edges());
        assert_eq!(sd.bc, g.num_vertices(), "{g:?} -> {d:?}");
        assert_eq!((sd.t, sd.eg, sd.k), (s.t, s.eg, s.k), "{g:?} -> {d:?}");
        let dd = d.dual().full_stats();
        assert_eq!(dd, s);
    }

    #[test]
    fn isolated_vertex_is_self_dual() {
        let g = RibbonGraph::edgeless(1);
        let d = g.dual();
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.num_edges(), 0);
    }

    #[test]
    fn triangle_dualizes_to_a_dipole() {
        let g = RibbonGraph::build(
            &[("u", &["a1", "c2"]), ("v", &["b1", "a2"]), ("w", &["c1", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1), ("c", "c1", "c2", 1)],
        )
        .unwrap();
        assert_eq!(g.euler_genus(), 0);
        let d = g.dual();
        assert_eq!(d.num_vertices(), 2);
        assert_eq!(d.num_edges(), 3);
        assert!((0..3).all(|e| !d.is_loop(e)));
        assert!(d.edges().iter().all(|e| e.sign == Sign::Positive));
        assert_eq!(d.euler_genus(), 0);
        check_duality(&g);
    }

    #[test]
    fn plane_loop_dualizes_to_a_bridge() {
        let g = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", 1)]).unwrap();
        let d = g.dual();
        assert_eq!(d.num_vertices(), 2);
        let s = d.full_stats();
        assert_eq!((s.bc, s.eg), (1, 0));
        check_duality(&g);
    }

    #[test]
    fn nonorientable_examples() {
        let neg_loop = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", -1)]).unwrap();
        check_duality(&neg_loop);
        let digon = RibbonGraph::build(
            &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
        )
        .unwrap();
        check_duality(&digon);
        let torus = RibbonGraph::build(
            &[("v", &["a1", "b1", "a2", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1)],
        )
        .unwrap();
        check_duality(&torus);
        check_duality(&torus.disjoint_union(&digon).disjoint_union(&RibbonGraph::edgeless(1)));
    }
}
