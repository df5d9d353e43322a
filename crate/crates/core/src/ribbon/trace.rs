//! Boundary tracing. This is the one traversal used for boundary components,
//! faces, duals, and the closed curves of vertex states.
//!
//! Each dart has two sides: `+` (towards the next dart in rotation order) and
//! `-` (towards the previous one). Side node `2*d` is `(d,+)`, `2*d+1` is
//! `(d,-)`. A corner of a vertex joins `(d,+)` to `(next(d),-)`. An untwisted
//! edge `{a,b}` joins `(a,+)-(b,-)` and `(a,-)-(b,+)`; a twisted one joins
//! `(a,+)-(b,+)` and `(a,-)-(b,-)`. Every active node has one corner link and
//! one edge link, so the links split into disjoint cycles: the boundary
//! components of the ribbon surface.

use std::collections::VecDeque;

use super::{Dsu, EdgeSubset, GraphError, RibbonGraph, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgraphStats {
    /// Connected components, isolated vertices included.
    pub k: usize,
    pub r: usize,
    pub n: usize,
    pub bc: usize,
    /// 0 when orientable, 1 otherwise.
    pub t: u8,
    /// Euler genus `k - bc + n`.
    pub eg: usize,
}

/// A closed boundary walk. `nodes[2i] -> nodes[2i+1]` runs along an edge side,
/// `nodes[2i+1] -> nodes[2i+2]` along a vertex corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub(crate) nodes: Vec<usize>,
}

/// One traversal of an edge side inside a boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SideStep {
    pub edge: usize,
    /// Side 0 contains `(halves[0], +)`, side 1 contains `(halves[0], -)`.
    pub side: usize,
    /// Traversed from the `halves[0]` end towards the `halves[1]` end.
    pub forward: bool,
}

/// One traversal of a vertex corner inside a boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CornerStep {
    /// The corner lies between this dart and its successor in rotation order.
    pub after: usize,
    /// Traversed from `(after,+)` to `(next,-)`.
    pub forward: bool,
}

impl BoundaryWalk {
    pub fn len(&self) -> usize {
        self.nodes.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub(crate) fn sides(&self) -> Vec<SideStep> {
        (0..self.nodes.len() / 2)
            .map(|i| {
                let from = self.nodes[2 * i];
                let edge = from / 4;
                let base = 4 * edge;
                let side = if from == base || self.nodes[2 * i + 1] == base { 0 } else { 1 };
                SideStep {
                    edge,
                    side,
                    forward: from < base + 2,
                }
            })
            .collect()
    }

    pub(crate) fn corners(&self) -> Vec<CornerStep> {
        let n = self.nodes.len();
        (0..n / 2)
            .map(|i| {
                let from = self.nodes[2 * i + 1];
                let to = self.nodes[(2 * i + 2) % n];
                if from.is_multiple_of(2) {
                    CornerStep {
                        after: from / 2,
                        forward: true,
                    }
                } else {
                    CornerStep {
                        after: to / 2,
                        forward: false,
                    }
                }
            })
            .collect()
    }
}

/// The three ways to pair the four half-edges at a 4-valent vertex, by
/// rotation position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pairing {
    /// `{0,1}` and `{2,3}`.
    First,
    /// `{1,2}` and `{3,0}`.
    Second,
    /// `{0,2}` and `{1,3}`: the strands pass straight through.
    Straight,
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::First, Pairing::Second, Pairing::Straight];

    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Pairing::First => [(0, 1), (2, 3)],
            Pairing::Second => [(1, 2), (3, 0)],
            Pairing::Straight => [(0, 2), (1, 3)],
        }
    }

    /// The other non-straight pairing.
    pub fn opposite(self) -> Pairing {
        match self {
            Pairing::First => Pairing::Second,
            Pairing::Second => Pairing::First,
            Pairing::Straight => Pairing::Straight,
        }
    }

    /// Identifies a pairing from two position pairs.
    pub fn from_positions(a: (usize, usize), b: (usize, usize)) -> Option<Pairing> {
        let norm = |(x, y): (usize, usize)| if x < y { (x, y) } else { (y, x) };
        let mut given = [norm(a), norm(b)];
        given.sort_unstable();
        Pairing::ALL.into_iter().find(|p| {
            let mut own = p.pairs().map(norm);
            own.sort_unstable();
            own == given
        })
    }

    /// The corners (between positions `i` and `i+1`) that this pairing keeps
    /// separated: each pair hugs one of them.
    pub fn hugged_corners(self) -> Option<[usize; 2]> {
        match self {
            Pairing::First => Some([0, 2]),
            Pairing::Second => Some([1, 3]),
            Pairing::Straight => None,
        }
    }
}

impl RibbonGraph {
    fn side_links(&self, mask: &[bool]) -> (Vec<usize>, Vec<usize>, Vec<bool>) {
        let nodes = 4 * self.num_edges();
        let mut corner = vec![usize::MAX; nodes];
        let mut edge = vec![usize::MAX; nodes];
        let mut active = vec![false; nodes];
        for (e, &on) in mask.iter().enumerate() {
            if !on {
                continue;
            }
            let (a, b) = (2 * e, 2 * e + 1);
            let (ap, am, bp, bm) = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1);
            for n in [ap, am, bp, bm] {
                active[n] = true;
            }
            let pairs = match self.sign(e) {
                Sign::Positive => [(ap, bm), (am, bp)],
                Sign::Negative => [(ap, bp), (am, bm)],
            };
            for (x, y) in pairs {
                edge[x] = y;
                edge[y] = x;
            }
        }
        for rot in &self.rot {
            let kept: Vec<usize> = rot.iter().copied().filter(|d| mask[d / 2]).collect();
            for (i, &d) in kept.iter().enumerate() {
                let nd = kept[(i + 1) % kept.len()];
                corner[2 * d] = 2 * nd + 1;
                corner[2 * nd + 1] = 2 * d;
            }
        }
        (corner, edge, active)
    }

    /// Boundary walks of the spanning subgraph on `a`. Vertices with no edge of
    /// `a` are not walks; they are reported by [`RibbonGraph::bare_vertices`].
    pub fn boundary_walks(&self, a: &EdgeSubset) -> Vec<BoundaryWalk> {
        self.walks_mask(a.mask())
    }

    pub(crate) fn walks_mask(&self, mask: &[bool]) -> Vec<BoundaryWalk> {
        let (corner, edge, active) = self.side_links(mask);
        let mut seen = vec![false; active.len()];
        let mut walks = Vec::new();
        for start in 0..active.len() {
            if !active[start] || seen[start] {
                continue;
            }
            let mut nodes = Vec::new();
            let mut n = start;
            loop {
                seen[n] = true;
                nodes.push(n);
                let m = edge[n];
                seen[m] = true;
                nodes.push(m);
                n = corner[m];
                if n == start {
                    break;
                }
            }
            walks.push(BoundaryWalk { nodes });
        }
        walks
    }

    /// Vertices with no incident edge of `a`.
    pub fn bare_vertices(&self, a: &EdgeSubset) -> Vec<usize> {
        self.bare_mask(a.mask())
    }

    fn bare_mask(&self, mask: &[bool]) -> Vec<usize> {
        (0..self.num_vertices())
            .filter(|&v| self.rot[v].iter().all(|d| !mask[d / 2]))
            .collect()
    }

    pub(crate) fn boundary_count_mask(&self, mask: &[bool]) -> usize {
        let (corner, edge, active) = self.side_links(mask);
        let mut seen = vec![false; active.len()];
        let mut cycles = 0;
        for start in 0..active.len() {
            if !active[start] || seen[start] {
                continue;
            }
            cycles += 1;
            let mut n = start;
            loop {
                seen[n] = true;
                let m = edge[n];
                seen[m] = true;
                n = corner[m];
                if n == start {
                    break;
                }
            }
        }
        cycles + self.bare_mask(mask).len()
    }

    pub(crate) fn orientable_mask(&self, mask: &[bool]) -> bool {
        let nv = self.num_vertices();
        let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); nv];
        for (e, &on) in mask.iter().enumerate() {
            if !on {
                continue;
            }
            let (u, v) = self.endpoints(e);
            if u == v {
                if self.sign(e).is_negative() {
                    return false;
                }
                continue;
            }
            adj[u].push((v, self.sign(e)));
            adj[v].push((u, self.sign(e)));
        }
        let mut side: Vec<Option<Sign>> = vec![None; nv];
        for root in 0..nv {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Sign::Positive);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("visited");
                for &(v, s) in &adj[u] {
                    let want = su.times(s);
                    match side[v] {
                        None => {
                            side[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(sv) if sv != want => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub(crate) fn stats_mask(&self, mask: &[bool]) -> SubgraphStats {
        let nv = self.num_vertices();
        let mut dsu = Dsu::new(nv);
        let mut size = 0;
        for (e, &on) in mask.iter().enumerate() {
            if on {
                size += 1;
                let (u, v) = self.endpoints(e);
                dsu.union(u, v);
            }
        }
        let k = dsu.sets();
        let r = nv - k;
        let n = size - r;
        let bc = self.boundary_count_mask(mask);
        let t = if self.orientable_mask(mask) { 0 } else { 1 };
        let eg = (k + n)
            .checked_sub(bc)
            .expect("Euler genus is nonnegative");
        SubgraphStats { k, r, n, bc, t, eg }
    }

    /// Invariants of the spanning subgraph on `a`.
    pub fn stats(&self, a: &EdgeSubset) -> SubgraphStats {
        assert_eq!(a.mask().len(), self.num_edges(), "subset of another graph");
        self.stats_mask(a.mask())
    }

    pub fn full_stats(&self) -> SubgraphStats {
        self.stats_mask(&vec![true; self.num_edges()])
    }

    pub fn euler_genus(&self) -> usize {
        self.full_stats().eg
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable_mask(&vec![true; self.num_edges()])
    }

    fn check_four_regular(&self) -> Result<(), GraphError> {
        for (v, rot) in self.rot.iter().enumerate() {
            if rot.len() != 4 {
                return Err(GraphError::NotFourRegular(self.vertices[v].id.clone()));
            }
        }
        Ok(())
    }

    /// Number of closed curves after resolving every vertex by the chosen
    /// pairing. `choice` is indexed like the vertex list.
    pub fn state_components(&self, choice: &[Pairing]) -> Result<usize, GraphError> {
        self.check_four_regular()?;
        assert_eq!(choice.len(), self.num_vertices(), "one pairing per vertex");
        Ok(self.state_components_unchecked(choice))
    }

    pub(crate) fn state_components_unchecked(&self, choice: &[Pairing]) -> usize {
        let mut dsu = Dsu::new(2 * self.num_edges());
        for e in 0..self.num_edges() {
            dsu.union(2 * e, 2 * e + 1);
        }
        for (v, rot) in self.rot.iter().enumerate() {
            for (i, j) in choice[v].pairs() {
                dsu.union(rot[i], rot[j]);
            }
        }
        dsu.sets()
    }
}
