use std::collections::HashMap;

use crate::poly::{LaurentPoly, VarTable};
use crate::ribbon::RibbonGraph;

use super::r_state_sum_shifted;

/// `T(G; x, y) = R(G; x, y - 1, 1, 1)`, the Tutte polynomial of the
/// underlying abstract graph.
pub fn classical_tutte(g: &RibbonGraph) -> LaurentPoly {
    let vars = VarTable::new(&["x", "y"]).expect("valid table");
    let one = LaurentPoly::one(&vars);
    let x = LaurentPoly::var(&vars, "x").expect("x");
    let y = LaurentPoly::var(&vars, "y").expect("y");
    let bindings = HashMap::from([
        ("X".to_string(), &x - &one),
        ("y".to_string(), &y - &one),
        ("z".to_string(), one.clone()),
        ("w".to_string(), one.clone()),
    ]);
    r_state_sum_shifted(g)
        .substitute(&bindings, &vars)
        .expect("nonnegative exponents")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Textbook recursion on an edge list: bridges give `x`, loops give `y`,
    /// other edges split into deletion plus contraction.
    fn tutte_oracle(n: usize, edges: &[(usize, usize)]) -> HashMap<(u32, u32), i64> {
        fn connected(n: usize, edges: &[(usize, usize)], a: usize, b: usize) -> bool {
            let mut seen = vec![false; n];
            let mut stack = vec![a];
            seen[a] = true;
            while let Some(u) = stack.pop() {
                for &(p, q) in edges {
                    for (s, t) in [(p, q), (q, p)] {
                        if s == u && !seen[t] {
                            seen[t] = true;
                            stack.push(t);
                        }
                    }
                }
            }
            seen[b]
        }
        fn mul(p: &HashMap<(u32, u32), i64>, dx: u32, dy: u32) -> HashMap<(u32, u32), i64> {
            p.iter().map(|(&(a, b), &c)| ((a + dx, b + dy), c)).collect()
        }
        let Some(&(u, v)) = edges.first() else {
            return HashMap::from([((0, 0), 1)]);
        };
        let rest = &edges[1..];
        if u == v {
            return mul(&tutte_oracle(n, rest), 0, 1);
        }
        let contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(p, q)| (if p == v { u } else { p }, if q == v { u } else { q }))
            .collect();
        let c = tutte_oracle(n, &contracted);
        if !connected(n, rest, u, v) {
            return mul(&c, 1, 0);
        }
        let mut d = tutte_oracle(n, rest);
        for (k, val) in c {
            *d.entry(k).or_default() += val;
        }
        d.retain(|_, v| *v != 0);
        d
    }

    fn as_map(p: &LaurentPoly) -> HashMap<(u32, u32), i64> {
        p.terms()
            .map(|(e, c)| ((e[0] as u32 / 2, e[1] as u32 / 2), c.to_integer().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn small_graphs_match_the_textbook_recursion() {
        let bridge = RibbonGraph::build(&[("u", &["a"]), ("v", &["b"])], &[("e", "a", "b", 1)]).unwrap();
        assert_eq!(classical_tutte(&bridge).to_string(), "x");
        let lp = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", -1)]).unwrap();
        assert_eq!(classical_tutte(&lp).to_string(), "y");
        let c3 = RibbonGraph::build(
            &[("u", &["a1", "c2"]), ("v", &["b1", "a2"]), ("w", &["c1", "b2"])],
            &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1), ("c", "c1", "c2", 1)],
        )
        .unwrap();
        assert_eq!(classical_tutte(&c3).to_string(), "x^2 + x + y");
        assert_eq!(as_map(&classical_tutte(&c3)), tutte_oracle(3, &[(0, 1), (1, 2), (2, 0)]));
        // K4 embedded with an arbitrary rotation
        let k4 = RibbonGraph::build(
            &[
                ("0", &["a0", "b0", "c0"]),
                ("1", &["a1", "d1", "e1"]),
                ("2", &["b2", "e2", "f2"]),
                ("3", &["c3", "f3", "d3"]),
            ],
            &[
                ("a", "a0", "a1", 1),
                ("b", "b0", "b2", -1),
                ("c", "c0", "c3", 1),
                ("d", "d1", "d3", 1),
                ("e", "e1", "e2", -1),
                ("f", "f2", "f3", 1),
            ],
        )
        .unwrap();
        let oracle = tutte_oracle(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (1, 2), (2, 3)]);
        assert_eq!(as_map(&classical_tutte(&k4)), oracle);
    }
}
