//! Independent reference computations for the integration tests. These work
//! from the public vertex and edge lists only.

#![allow(dead_code)]

use std::collections::HashMap;

use num_rational::BigRational;
use ribbonforge::br::r_vars;
use ribbonforge::links::{LinkUniverse, link_vars};
use ribbonforge::poly::{LaurentPoly, VarTable};
use ribbonforge::ribbon::{Pairing, RibbonGraph};

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
        a != b
    }
}

/// Vertex index of every half-edge and the edge list as vertex pairs.
pub fn edge_ends(g: &RibbonGraph) -> (HashMap<String, usize>, Vec<(usize, usize)>) {
    let mut at = HashMap::new();
    for (i, v) in g.vertices().iter().enumerate() {
        for h in &v.rotation {
            at.insert(h.clone(), i);
        }
    }
    let ends = g.edges().iter().map(|e| (at[&e.halves[0]], at[&e.halves[1]])).collect();
    (at, ends)
}

/// `(k, boundary components, genus)` of the spanning subgraph `keep` of an
/// all-positive graph, by cycling the face permutation.
pub fn oriented_stats(g: &RibbonGraph, keep: &[bool]) -> (usize, usize, usize) {
    let (at, ends) = edge_ends(g);
    let nv = g.vertices().len();
    let mut other = HashMap::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if keep[e] {
            other.insert(edge.halves[0].clone(), edge.halves[1].clone());
            other.insert(edge.halves[1].clone(), edge.halves[0].clone());
        }
    }
    let mut next = HashMap::new();
    let mut bare = 0;
    for v in g.vertices() {
        let kept: Vec<&String> = v.rotation.iter().filter(|h| other.contains_key(*h)).collect();
        if kept.is_empty() {
            bare += 1;
        }
        for i in 0..kept.len() {
            next.insert(kept[i].clone(), kept[(i + 1) % kept.len()].clone());
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut faces = 0;
    let mut halves: Vec<&String> = other.keys().collect();
    halves.sort();
    for h in halves {
        if seen.contains(h) {
            continue;
        }
        faces += 1;
        let mut cur = h.clone();
        while seen.insert(cur.clone()) {
            cur = next[&other[&cur]].clone();
        }
    }
    let mut dsu = Dsu::new(nv);
    let mut k = nv;
    let mut m = 0;
    for (e, &(a, b)) in ends.iter().enumerate() {
        if keep[e] {
            m += 1;
            if dsu.union(a, b) {
                k -= 1;
            }
        }
    }
    let _ = at;
    let bc = faces + bare;
    // v - m + bc = 2k - 2g
    let genus = (2 * k + m - nv - bc) / 2;
    (k, bc, genus)
}

/// `sum_F (x-1)^(r(G)-r(F)) y^(n(F)) z^(g(F))` for an all-positive graph,
/// in the table `(x, y, z, w)`.
pub fn oriented_genus_polynomial(g: &RibbonGraph) -> LaurentPoly {
    let vars = r_vars();
    let m = g.edges().len();
    let nv = g.vertices().len();
    let x1 = &LaurentPoly::var(&vars, "x").unwrap() - &LaurentPoly::one(&vars);
    let (k_all, _, _) = oriented_stats(g, &vec![true; m]);
    let r_all = nv - k_all;
    let mut total = LaurentPoly::zero(&vars);
    for bits in 0u64..(1 << m) {
        let keep: Vec<bool> = (0..m).map(|e| bits >> e & 1 == 1).collect();
        let size = keep.iter().filter(|&&b| b).count();
        let (k, _, genus) = oriented_stats(g, &keep);
        let r = nv - k;
        let n = size - r;
        let mono = LaurentPoly::monomial(&vars, int(1), &[("y", 2 * n as i32), ("z", 2 * genus as i32)]).unwrap();
        total = &total + &(&x1.pow((r_all - r) as u32) * &mono);
    }
    total
}

/// Tutte polynomial in `(x, y)` by the textbook recursion on the edge list.
pub fn tutte_oracle(g: &RibbonGraph) -> LaurentPoly {
    fn rec(n: usize, edges: &[(usize, usize)], x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
        let Some(&(u, v)) = edges.first() else {
            return LaurentPoly::one(x.vars());
        };
        let rest = &edges[1..];
        if u == v {
            return y * &rec(n, rest, x, y);
        }
        let contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(a, b)| {
                let f = |t: usize| if t == v { u } else { t };
                (f(a), f(b))
            })
            .collect();
        let mut dsu = Dsu::new(n);
        for &(a, b) in rest {
            dsu.union(a, b);
        }
        if dsu.find(u) != dsu.find(v) {
            return x * &rec(n, &contracted, x, y);
        }
        &rec(n, rest, x, y) + &rec(n, &contracted, x, y)
    }
    let vars = VarTable::new(&["x", "y"]).unwrap();
    let x = LaurentPoly::var(&vars, "x").unwrap();
    let y = LaurentPoly::var(&vars, "y").unwrap();
    let (_, ends) = edge_ends(g);
    rec(g.vertices().len(), &ends, &x, &y)
}

/// Closed curves of a state, found by walking strands through half-edge
/// names: leave along the edge, then turn to the paired slot.
pub fn curves(g: &RibbonGraph, choice: &[Pairing]) -> usize {
    let mut slot = HashMap::new();
    for (v, vert) in g.vertices().iter().enumerate() {
        for (i, h) in vert.rotation.iter().enumerate() {
            slot.insert(h.clone(), (v, i));
        }
    }
    let mut across = HashMap::new();
    for e in g.edges() {
        across.insert(e.halves[0].clone(), e.halves[1].clone());
        across.insert(e.halves[1].clone(), e.halves[0].clone());
    }
    let partner = |p: Pairing, i: usize| match p {
        Pairing::First => [1, 0, 3, 2][i],
        Pairing::Second => [3, 2, 1, 0][i],
        Pairing::Straight => [2, 3, 0, 1][i],
    };
    let mut seen = std::collections::HashSet::new();
    let mut count = 0;
    let mut names: Vec<&String> = slot.keys().collect();
    names.sort();
    for h in names {
        if seen.contains(h) {
            continue;
        }
        count += 1;
        let mut cur = h.clone();
        while seen.insert(cur.clone()) {
            let far = across[&cur].clone();
            seen.insert(far.clone());
            let (v, i) = slot[&far];
            cur = g.vertices()[v].rotation[partner(choice[v], i)].clone();
        }
    }
    count
}

/// The bracket in `(A, B, d)` by enumerating states with [`curves`].
pub fn bracket_oracle(u: &LinkUniverse) -> LaurentPoly {
    let vars = link_vars();
    let v = u.num_crossings();
    let mut total = LaurentPoly::zero(&vars);
    for bits in 0u32..(1 << v) {
        let choice: Vec<Pairing> = (0..v)
            .map(|i| if bits >> i & 1 == 0 { u.a_splitting(i) } else { u.b_splitting(i) })
            .collect();
        let c = (curves(u.graph(), &choice) + u.num_free_loops()) as i32;
        let b = bits.count_ones() as i32;
        let a = v as i32 - b;
        total = &total + &LaurentPoly::monomial(&vars, int(1), &[("A", 2 * a), ("B", 2 * b), ("d", 2 * (c - 1))]).unwrap();
    }
    total
}
