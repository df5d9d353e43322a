//! Weight systems on 4-regular ribbon graphs and the generalized transition
//! polynomial `Q(G; W, t) = sum_S w(S) t^c(S)`.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock};

use thiserror::Error;

use crate::br::{classical_tutte, r_state_sum_shifted};
use crate::poly::{LaurentPoly, PolyError, VarTable};
use crate::ribbon::{GraphError, MedialGraph, Pairing, RibbonGraph, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("medial graph carries no back-reference to a source graph")]
    MissingBackReference,
    #[error("no crossing sign for source edge `{0}`")]
    MissingSign(String),
    #[error("weight system has {weights} vertices, graph has {graph}")]
    VertexCountMismatch { weights: usize, graph: usize },
    #[error("input has Euler genus {0}; a plane graph is required")]
    NonPlanarInput(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

static TRANSITION_VARS: LazyLock<Arc<VarTable>> =
    LazyLock::new(|| VarTable::new(&["alpha", "beta", "t"]).expect("valid table"));

/// `(alpha, beta, t)`.
pub fn transition_vars() -> Arc<VarTable> {
    TRANSITION_VARS.clone()
}

fn slot(p: Pairing) -> usize {
    match p {
        Pairing::First => 0,
        Pairing::Second => 1,
        Pairing::Straight => 2,
    }
}

/// Position pairs in the order used by [`WeightSystem::from_pair_weights`].
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_index(a: usize, b: usize) -> usize {
    let key = if a < b { (a, b) } else { (b, a) };
    PAIRS.iter().position(|&p| p == key).expect("distinct positions below 4")
}

/// One weight per pairing at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    vars: Arc<VarTable>,
    weights: Vec<[LaurentPoly; 3]>,
}

impl WeightSystem {
    /// `weights[v]` lists the weights of `First`, `Second`, `Straight`.
    pub fn new(vars: &Arc<VarTable>, weights: Vec<[LaurentPoly; 3]>) -> Result<Self, TransitionError> {
        for w in weights.iter().flatten() {
            if w.vars() != vars {
                return Err(PolyError::IncompatibleTables.into());
            }
        }
        Ok(WeightSystem {
            vars: vars.clone(),
            weights,
        })
    }

    /// Pairing weights as products of pair weights. `pairs[v][i]` is the
    /// weight of the position pair `PAIRS[i]` at vertex `v`.
    pub fn from_pair_weights(vars: &Arc<VarTable>, pairs: Vec<[LaurentPoly; 6]>) -> Result<Self, TransitionError> {
        let weights = pairs
            .iter()
            .map(|p| {
                Pairing::ALL.map(|pairing| {
                    let [(a, b), (c, d)] = pairing.pairs();
                    &p[pair_index(a, b)] * &p[pair_index(c, d)]
                })
            })
            .collect();
        Self::new(vars, weights)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn num_vertices(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, v: usize, p: Pairing) -> &LaurentPoly {
        &self.weights[v][slot(p)]
    }

    /// Weight of a whole state: the product of its vertex weights.
    pub fn state_weight(&self, state: &GraphState) -> LaurentPoly {
        state
            .0
            .iter()
            .enumerate()
            .fold(LaurentPoly::one(&self.vars), |acc, (v, &p)| &acc * self.weight(v, p))
    }

    /// Swaps the weights of the two non-straight pairings at every vertex.
    /// On a medial weight system this exchanges the roles of `alpha` and
    /// `beta`.
    pub fn dual(&self) -> WeightSystem {
        WeightSystem {
            vars: self.vars.clone(),
            weights: self
                .weights
                .iter()
                .map(|[a, b, c]| [b.clone(), a.clone(), c.clone()])
                .collect(),
        }
    }
}

/// A choice of one pairing per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphState(pub Vec<Pairing>);

fn origins(m: &MedialGraph) -> Result<&[crate::ribbon::MedialOrigin], TransitionError> {
    m.origin.as_deref().ok_or(TransitionError::MissingBackReference)
}

/// Uncut pairing weight `alpha`, cut `beta`, crossing `0`.
pub fn medial_weights(m: &MedialGraph, alpha: &LaurentPoly, beta: &LaurentPoly) -> Result<WeightSystem, TransitionError> {
    let vars = alpha.vars().clone();
    let zero = LaurentPoly::zero(&vars);
    let weights = origins(m)?
        .iter()
        .map(|o| {
            let mut w = [zero.clone(), zero.clone(), zero.clone()];
            w[slot(o.uncut)] = alpha.clone();
            w[slot(o.uncut.opposite())] = beta.clone();
            w
        })
        .collect();
    WeightSystem::new(&vars, weights)
}

/// Pair weights `sqrt(alpha)` on the two pairs of an uncut pairing,
/// `sqrt(beta)` on those of a cut pairing, `0` on crossing pairs. Needs
/// monomial `alpha`, `beta` with square coefficients.
pub fn medial_pair_weights(
    m: &MedialGraph,
    alpha: &LaurentPoly,
    beta: &LaurentPoly,
) -> Result<Vec<[LaurentPoly; 6]>, TransitionError> {
    let (ra, rb) = (alpha.sqrt_monomial()?, beta.sqrt_monomial()?);
    let zero = LaurentPoly::zero(alpha.vars());
    Ok(origins(m)?
        .iter()
        .map(|o| {
            let mut p: [LaurentPoly; 6] = std::array::from_fn(|_| zero.clone());
            for (a, b) in o.uncut.pairs() {
                p[pair_index(a, b)] = ra.clone();
            }
            for (a, b) in o.uncut.opposite().pairs() {
                p[pair_index(a, b)] = rb.clone();
            }
            p
        })
        .collect())
}

/// Medial weights with `alpha` and `beta` exchanged at vertices whose source
/// edge has crossing sign `-1`.
pub fn signed_weights(
    m: &MedialGraph,
    alpha: &LaurentPoly,
    beta: &LaurentPoly,
    signs: &HashMap<String, Sign>,
) -> Result<WeightSystem, TransitionError> {
    let base = medial_weights(m, alpha, beta)?;
    let swapped = base.dual();
    let mut weights = Vec::with_capacity(base.num_vertices());
    for (v, o) in origins(m)?.iter().enumerate() {
        let s = signs
            .get(&o.source_edge)
            .ok_or_else(|| TransitionError::MissingSign(o.source_edge.clone()))?;
        let pick = if s.is_negative() { &swapped } else { &base };
        weights.push(pick.weights[v].clone());
    }
    WeightSystem::new(base.vars(), weights)
}

/// `sum_S w(S) t^c(S)` over states with nonzero weight; `c(S)` counts the
/// closed curves of the state plus the free loops.
pub fn q_transition(m: &MedialGraph, w: &WeightSystem, tvar: &str) -> Result<LaurentPoly, TransitionError> {
    let g = &m.graph;
    if w.num_vertices() != g.num_vertices() {
        return Err(TransitionError::VertexCountMismatch {
            weights: w.num_vertices(),
            graph: g.num_vertices(),
        });
    }
    // rejects graphs that are not 4-regular
    g.state_components(&vec![Pairing::First; g.num_vertices()])?;
    let vars = w.vars().clone();
    let options: Vec<Vec<Pairing>> = (0..g.num_vertices())
        .map(|v| Pairing::ALL.into_iter().filter(|&p| !w.weight(v, p).is_zero()).collect())
        .collect();
    let mut total = LaurentPoly::zero(&vars);
    if options.iter().any(Vec::is_empty) {
        return Ok(total);
    }
    // states grouped by curve count before multiplying weights out
    let mut by_count: HashMap<usize, LaurentPoly> = HashMap::new();
    let mut idx = vec![0usize; options.len()];
    loop {
        let state = GraphState(idx.iter().zip(&options).map(|(&i, o)| o[i]).collect());
        let c = g.state_components_unchecked(&state.0) + m.free_loops;
        let weight = w.state_weight(&state);
        let entry = by_count.entry(c).or_insert_with(|| LaurentPoly::zero(&vars));
        *entry = &*entry + &weight;
        // mixed-radix increment
        let mut v = 0;
        loop {
            if v == idx.len() {
                let mut counts: Vec<_> = by_count.into_iter().collect();
                counts.sort_by_key(|(c, _)| *c);
                for (c, p) in counts {
                    let tc = LaurentPoly::monomial(&vars, num_traits::One::one(), &[(tvar, 2 * c as i32)])?;
                    total = &total + &(&p * &tc);
                }
                return Ok(total);
            }
            idx[v] += 1;
            if idx[v] < options[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// Result of an exact identity check, with both sides kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn tv(name: &str) -> LaurentPoly {
    LaurentPoly::var(&transition_vars(), name).expect("transition variable")
}

/// `R(G; X + 1, y, z, 1)` with `X`, `y`, `z` monomials in `(alpha, beta, t)`.
fn r_at(g: &RibbonGraph, shift: &LaurentPoly, y: &LaurentPoly, z: &LaurentPoly) -> LaurentPoly {
    let vars = transition_vars();
    let bindings = HashMap::from([
        ("X".to_string(), shift.clone()),
        ("y".to_string(), y.clone()),
        ("z".to_string(), z.clone()),
        ("w".to_string(), LaurentPoly::one(&vars)),
    ]);
    r_state_sum_shifted(g)
        .substitute(&bindings, &vars)
        .expect("monomial substitution")
}

fn monomial(factors: &[(&str, i32)]) -> LaurentPoly {
    LaurentPoly::monomial(&transition_vars(), num_traits::One::one(), factors).expect("transition variable")
}

/// `alpha^r beta^n t^k R(G; beta t/alpha + 1, alpha t/beta, 1/t, 1)`.
pub fn transpoly_rhs(g: &RibbonGraph) -> LaurentPoly {
    let s = g.full_stats();
    let prefactor = monomial(&[("alpha", 2 * s.r as i32), ("beta", 2 * s.n as i32), ("t", 2 * s.k as i32)]);
    let shift = monomial(&[("beta", 2), ("t", 2), ("alpha", -2)]);
    let y = monomial(&[("alpha", 2), ("t", 2), ("beta", -2)]);
    &prefactor * &r_at(g, &shift, &y, &monomial(&[("t", -2)]))
}

/// `Q(G_m; W, t)` for the medial weight system in `(alpha, beta, t)`.
pub fn medial_q(g: &RibbonGraph) -> LaurentPoly {
    let m = g.medial();
    let w = medial_weights(&m, &tv("alpha"), &tv("beta")).expect("medial carries origins");
    q_transition(&m, &w, "t").expect("medial graphs are 4-regular")
}

/// Checks `Q(G_m; W, t) = alpha^r beta^n t^k R(G; beta t/alpha + 1, alpha t/beta, 1/t, 1)`.
pub fn verify_transpoly(g: &RibbonGraph) -> IdentityCheck {
    IdentityCheck {
        lhs: medial_q(g),
        rhs: transpoly_rhs(g),
    }
}

/// Checks `beta^g R(G*; beta t/alpha + 1, alpha t/beta, 1/t, 1)
/// = alpha^g R(G; alpha t/beta + 1, beta t/alpha, 1/t, 1)` where `g` is the
/// Euler genus of the surface.
pub fn verify_duality(g: &RibbonGraph) -> IdentityCheck {
    let gamma = 2 * g.euler_genus() as i32;
    let d = g.dual();
    let bt_a = monomial(&[("beta", 2), ("t", 2), ("alpha", -2)]);
    let at_b = monomial(&[("alpha", 2), ("t", 2), ("beta", -2)]);
    let inv_t = monomial(&[("t", -2)]);
    IdentityCheck {
        lhs: &monomial(&[("beta", gamma)]) * &r_at(&d, &bt_a, &at_b, &inv_t),
        rhs: &monomial(&[("alpha", gamma)]) * &r_at(g, &at_b, &bt_a, &inv_t),
    }
}

/// Checks `Q(G*_m; W, t) = Q(G_m; W*, t)`.
pub fn verify_transition_dual(g: &RibbonGraph) -> IdentityCheck {
    let m = g.medial();
    let w = medial_weights(&m, &tv("alpha"), &tv("beta")).expect("medial carries origins");
    IdentityCheck {
        lhs: medial_q(&g.dual()),
        rhs: q_transition(&m, &w.dual(), "t").expect("medial graphs are 4-regular"),
    }
}

/// Circuit partition polynomial of the directed medial of a plane graph:
/// `Q` with every admissible pairing weighted 1.
pub fn circuit_partition(g: &RibbonGraph, xvar: &str) -> Result<LaurentPoly, TransitionError> {
    let eg = g.euler_genus();
    if eg != 0 {
        return Err(TransitionError::NonPlanarInput(eg));
    }
    let vars = VarTable::new(&[xvar])?;
    let one = LaurentPoly::one(&vars);
    let m = g.medial();
    let w = medial_weights(&m, &one, &one)?;
    q_transition(&m, &w, xvar)
}

/// Checks `j(G_m; x) = x^k T(G; x + 1, x + 1)` on a plane graph.
pub fn verify_martin(g: &RibbonGraph) -> Result<IdentityCheck, TransitionError> {
    let lhs = circuit_partition(g, "x")?;
    let vars = lhs.vars().clone();
    let x = LaurentPoly::var(&vars, "x")?;
    let x1 = &x + &LaurentPoly::one(&vars);
    let t = classical_tutte(g);
    let bindings = HashMap::from([("x".to_string(), x1.clone()), ("y".to_string(), x1)]);
    let rhs = &x.pow(g.num_components() as u32) * &t.substitute(&bindings, &vars)?;
    Ok(IdentityCheck { lhs, rhs })
}
