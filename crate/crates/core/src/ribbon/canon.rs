//! Canonical codes for labeled maps up to renaming of ids.
//!
//! A connected component is encoded by a breadth-first relabeling of its darts
//! from a root, following rotation successors and edge partners; the code is
//! the least such encoding over all roots. Signs are compared literally, so a
//! graph and its vertex-flipped copy usually get different codes.

use super::{Edge, RibbonGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<Vec<u32>>);

impl RibbonGraph {
    fn component_darts(&self) -> (Vec<Vec<usize>>, usize) {
        let labels = self.component_labels();
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        let mut isolated = 0;
        for (v, rot) in self.rot.iter().enumerate() {
            if rot.is_empty() {
                isolated += 1;
            } else {
                groups.entry(labels[v]).or_default().extend(rot.iter().copied());
            }
        }
        (groups.into_values().collect(), isolated)
    }

    /// BFS labeling from `root`; returns darts in label order.
    fn bfs_order(&self, root: usize, size: usize) -> Vec<usize> {
        let mut label = std::collections::HashMap::with_capacity(size);
        let mut order = Vec::with_capacity(size);
        label.insert(root, 0u32);
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let d = order[i];
            for nb in [self.next_dart(d), d ^ 1] {
                if let std::collections::hash_map::Entry::Vacant(slot) = label.entry(nb) {
                    slot.insert(order.len() as u32);
                    order.push(nb);
                }
            }
            i += 1;
        }
        order
    }

    fn encode(&self, order: &[usize]) -> Vec<u32> {
        let mut label = vec![u32::MAX; 2 * self.num_edges()];
        for (i, &d) in order.iter().enumerate() {
            label[d] = i as u32;
        }
        let mut code = Vec::with_capacity(3 * order.len());
        for &d in order {
            code.push(label[self.next_dart(d)]);
            code.push(label[d ^ 1]);
            code.push(u32::from(self.sign(d / 2).is_negative()));
        }
        code
    }

    fn best_order(&self, darts: &[usize]) -> (Vec<u32>, Vec<usize>) {
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        for &root in darts {
            let order = self.bfs_order(root, darts.len());
            let code = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                best = Some((code, order));
            }
        }
        best.expect("nonempty component")
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let (comps, isolated) = self.component_darts();
        let mut codes: Vec<Vec<u32>> = comps.iter().map(|c| self.best_order(c).0).collect();
        codes.extend(std::iter::repeat_n(Vec::new(), isolated));
        codes.sort();
        CanonicalCode(codes)
    }

    /// An isomorphic copy with ids `v0..`, `e0..`, `h0..` assigned in
    /// canonical order, so isomorphic inputs give identical outputs.
    pub fn canonical_relabel(&self) -> RibbonGraph {
        let (comps, isolated) = self.component_darts();
        let mut ordered: Vec<(Vec<u32>, Vec<usize>)> = comps.iter().map(|c| self.best_order(c)).collect();
        ordered.sort();
        let mut dart_label = vec![0usize; 2 * self.num_edges()];
        let mut edge_label = vec![usize::MAX; self.num_edges()];
        let mut edge_count = 0;
        let mut vertex_order: Vec<usize> = Vec::new();
        let mut seen_vertex = vec![false; self.num_vertices()];
        let mut next = 0;
        for (_, order) in &ordered {
            for &d in order {
                dart_label[d] = next;
                next += 1;
                if edge_label[d / 2] == usize::MAX {
                    edge_label[d / 2] = edge_count;
                    edge_count += 1;
                }
                let v = self.dart_vertex(d);
                if !seen_vertex[v] {
                    seen_vertex[v] = true;
                    vertex_order.push(v);
                }
            }
        }
        let mut vertices: Vec<Vertex> = vertex_order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                // start each rotation at its smallest label
                let rot = &self.rot[v];
                let start = (0..rot.len()).min_by_key(|&p| dart_label[rot[p]]).unwrap_or(0);
                Vertex {
                    id: format!("v{i}"),
                    rotation: (0..rot.len())
                        .map(|k| format!("h{}", dart_label[rot[(start + k) % rot.len()]]))
                        .collect(),
                }
            })
            .collect();
        for i in 0..isolated {
            vertices.push(Vertex {
                id: format!("v{}", vertex_order.len() + i),
                rotation: Vec::new(),
            });
        }
        let mut edges: Vec<(usize, Edge)> = (0..self.num_edges())
            .map(|e| {
                let (a, b) = (dart_label[2 * e], dart_label[2 * e + 1]);
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                (
                    edge_label[e],
                    Edge {
                        id: format!("e{}", edge_label[e]),
                        halves: [format!("h{a}"), format!("h{b}")],
                        sign: self.sign(e),
                    },
                )
            })
            .collect();
        edges.sort_by_key(|(i, _)| *i);
        RibbonGraph::new(vertices, edges.into_iter().map(|(_, e)| e).collect())
            .expect("relabeling keeps the graph valid")
    }
}
