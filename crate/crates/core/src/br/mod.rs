//! The topological Tutte polynomial `R(G; x, y, z, w)`.
//!
//! `R(G) = sum_A (x-1)^(r(G)-r(A)) y^n(A) z^(k(A)-bc(A)+n(A)) w^t(A)`, with
//! `w^2 = w`. Internally the state sum is kept in the shifted variable
//! `X = x - 1`, so that substitutions of the form `x - 1 -> monomial` stay
//! monomial.

mod canonical;
mod moves;
mod recipe;
mod tutte;

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::{LaurentPoly, VarTable};
use crate::ribbon::{ChordDiagram, RibbonGraph, Sign};

pub use canonical::{CanonicalForm, canonical_diagram, canonical_form, product_formula};
pub use moves::{MoveError, MoveSplit, mu, mu_identity_holds, rotate_move, twist_move};
pub use recipe::{RecipeError, RecipeSpec, Relation, recipe_evaluate};
pub use tutte::classical_tutte;

static R_VARS: LazyLock<Arc<VarTable>> =
    LazyLock::new(|| VarTable::with_idempotent(&["x", "y", "z", "w"], &["w"]).expect("valid table"));

static SHIFTED_VARS: LazyLock<Arc<VarTable>> =
    LazyLock::new(|| VarTable::with_idempotent(&["X", "y", "z", "w"], &["w"]).expect("valid table"));

/// `(x, y, z, w)` with `w` idempotent.
pub fn r_vars() -> Arc<VarTable> {
    R_VARS.clone()
}

/// `(X, y, z, w)` where `X` stands for `x - 1`.
pub fn shifted_vars() -> Arc<VarTable> {
    SHIFTED_VARS.clone()
}

/// Exponents (in whole units) of one state: `(r(G)-r(A), n(A), k-bc+n, t)`.
type StateKey = [i32; 4];

fn collect(vars: &Arc<VarTable>, counts: HashMap<StateKey, i64>) -> LaurentPoly {
    LaurentPoly::from_terms(
        vars,
        counts
            .into_iter()
            .map(|(k, c)| (k.iter().map(|e| 2 * e).collect(), BigRational::from_integer(BigInt::from(c)))),
    )
}

fn state_counts(g: &RibbonGraph) -> HashMap<StateKey, i64> {
    let m = g.num_edges();
    assert!(m < 63, "state sum over {m} edges");
    let rank = g.full_stats().r as i32;
    let mut counts: HashMap<StateKey, i64> = HashMap::new();
    let mut mask = vec![false; m];
    for bits in 0u64..(1 << m) {
        for (e, slot) in mask.iter_mut().enumerate() {
            *slot = bits >> e & 1 == 1;
        }
        let s = g.stats_mask(&mask);
        let key = [rank - s.r as i32, s.n as i32, s.eg as i32, s.t as i32];
        *counts.entry(key).or_default() += 1;
    }
    counts
}

/// State sum in `(X, y, z, w)` with `X = x - 1`.
pub fn r_state_sum_shifted(g: &RibbonGraph) -> LaurentPoly {
    collect(&shifted_vars(), state_counts(g))
}

/// Rewrites a polynomial in `(X, y, z, w)` into `(x, y, z, w)`.
pub fn unshift(p: &LaurentPoly) -> LaurentPoly {
    let vars = r_vars();
    let x_minus_1 = &LaurentPoly::var(&vars, "x").expect("x") - &LaurentPoly::one(&vars);
    let bindings = HashMap::from([("X".to_string(), x_minus_1)]);
    p.substitute(&bindings, &vars).expect("X occurs with nonnegative exponents")
}

/// `R(G; x, y, z, w)` by summing over all spanning subgraphs.
pub fn r_state_sum(g: &RibbonGraph) -> LaurentPoly {
    unshift(&r_state_sum_shifted(g))
}

/// Subdiagram sum `sum_D' y^n(D') z^(1-bc(D')+n(D')) w^t(D')` in `(x, y, z, w)`.
pub fn bouquet_eval(d: &ChordDiagram) -> LaurentPoly {
    let counts = state_counts(&d.to_ribbon_graph());
    collect(&r_vars(), counts)
}

/// The chord diagram read off the rotation at `v`, keeping only loops there.
fn vertex_bouquet(g: &RibbonGraph, v: usize) -> ChordDiagram {
    let darts = g.rotation_darts(v);
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut signs: Vec<Sign> = Vec::new();
    let mut word = Vec::with_capacity(darts.len());
    for &d in darts {
        let e = d / 2;
        let i = *index.entry(e).or_insert_with(|| {
            labels.push(g.edges()[e].id.clone());
            signs.push(g.sign(e));
            labels.len() - 1
        });
        word.push(i);
    }
    ChordDiagram::from_parts(labels, word, signs)
}

/// `R(G)` by deletion and contraction, pivoting on the lowest non-loop edge.
/// Graphs whose edges are all loops are products of their vertex bouquets.
pub fn r_delcon(g: &RibbonGraph) -> LaurentPoly {
    let mut memo = HashMap::new();
    delcon(g, &mut memo)
}

fn delcon(g: &RibbonGraph, memo: &mut HashMap<crate::ribbon::CanonicalCode, LaurentPoly>) -> LaurentPoly {
    let key = g.canonical_code();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let vars = r_vars();
    let result = match (0..g.num_edges()).find(|&e| !g.is_loop(e)) {
        Some(e) => {
            let contracted = delcon(&g.contract_index(e), memo);
            if g.is_bridge(e) {
                &LaurentPoly::var(&vars, "x").expect("x") * &contracted
            } else {
                &contracted + &delcon(&g.delete_index(e), memo)
            }
        }
        None => (0..g.num_vertices())
            .filter(|&v| g.degree(v) > 0)
            .fold(LaurentPoly::one(&vars), |acc, v| &acc * &bouquet_eval(&vertex_bouquet(g, v))),
    };
    memo.insert(key, result.clone());
    result
}
