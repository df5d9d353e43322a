//! Identity-checking suites over generated corpora. Each suite reports the
//! number of cases checked and the first counterexample in corpus order.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{Value, json};
use thiserror::Error;

use crate::br::{
    CanonicalForm, MoveSplit, RecipeSpec, bouquet_eval, canonical_diagram, mu, product_formula, r_delcon,
    r_state_sum, r_vars, recipe_evaluate, rotate_move, twist_move,
};
use crate::corpus::{self, CorpusError};
use crate::io;
use crate::links::{LinkError, verify_chmutov_pak};
use crate::poly::LaurentPoly;
use crate::ribbon::{ChordDiagram, RibbonGraph, Sign};
use crate::transition::{IdentityCheck, verify_duality, verify_martin, verify_transition_dual, verify_transpoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    StatesumVsDelcon,
    CanonicalProduct,
    MoveInvariance,
    MuIdentity,
    RecipeIdentity,
    RecipeC,
    Transpoly,
    Duality,
    TransitionDual,
    Martutte,
    ChmutovPak,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::StatesumVsDelcon,
        Suite::CanonicalProduct,
        Suite::MoveInvariance,
        Suite::MuIdentity,
        Suite::RecipeIdentity,
        Suite::RecipeC,
        Suite::Transpoly,
        Suite::Duality,
        Suite::TransitionDual,
        Suite::Martutte,
        Suite::ChmutovPak,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StatesumVsDelcon => "statesum-vs-delcon",
            Suite::CanonicalProduct => "canonical-product",
            Suite::MoveInvariance => "move-invariance",
            Suite::MuIdentity => "mu-identity",
            Suite::RecipeIdentity => "recipe-identity",
            Suite::RecipeC => "recipe-C",
            Suite::Transpoly => "transpoly",
            Suite::Duality => "duality",
            Suite::TransitionDual => "transitiondual",
            Suite::Martutte => "martutte",
            Suite::ChmutovPak => "chmutov-pak",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

/// Which inputs a suite runs on. Graph suites use the exhaustive corpus up
/// to `max_edges` when `exhaustive` is set, plus `count` random graphs drawn
/// from `seed`. Move suites draw `count` diagrams with at most `max_edges`
/// chords; `canonical-product` covers every `D_ijk` with `i <= max_edges`;
/// `chmutov-pak` reads `max_edges` as the crossing bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_edges: usize,
    pub exhaustive: bool,
    pub seed: u64,
    pub count: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_edges: 3,
            exhaustive: true,
            seed: 0,
            count: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "suite": self.suite.name(),
            "cases": self.cases,
            "passed": self.passed(),
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = json!({ "input": c.input, "lhs": c.lhs, "rhs": c.rhs });
        }
        v
    }
}

fn graph_value(g: &RibbonGraph) -> Value {
    serde_json::from_str(&io::graph_to_json(g)).expect("valid JSON")
}

fn graph_corpus(o: &VerifyOptions) -> Result<Vec<RibbonGraph>, VerifyError> {
    let mut out = if o.exhaustive { corpus::exhaustive(o.max_edges)? } else { Vec::new() };
    out.extend(corpus::random_corpus(o.seed, o.count, o.max_edges));
    Ok(out)
}

fn orientable_corpus(o: &VerifyOptions) -> Result<Vec<RibbonGraph>, VerifyError> {
    let mut out: Vec<RibbonGraph> = if o.exhaustive {
        corpus::exhaustive(o.max_edges)?.into_iter().filter(|g| g.is_orientable()).collect()
    } else {
        Vec::new()
    };
    out.extend(corpus::random_orientable_corpus(o.seed, o.count, o.max_edges));
    Ok(out)
}

fn plane_corpus(o: &VerifyOptions) -> Result<Vec<RibbonGraph>, VerifyError> {
    let mut out = if o.exhaustive { corpus::exhaustive_plane(o.max_edges)? } else { Vec::new() };
    out.extend(
        corpus::random_orientable_corpus(o.seed, o.count, o.max_edges)
            .into_iter()
            .filter(|g| g.euler_genus() == 0),
    );
    Ok(out)
}

/// Runs `check` on every case in parallel and keeps the first failure.
fn first_failure<T: Sync>(
    suite: Suite,
    cases: &[T],
    check: impl Fn(&T) -> Option<Counterexample> + Sync + Send,
) -> SuiteReport {
    let results: Vec<Option<Counterexample>> = cases.par_iter().map(check).collect();
    SuiteReport {
        suite,
        cases: cases.len(),
        counterexample: results.into_iter().flatten().next(),
    }
}

fn on_graphs(suite: Suite, graphs: &[RibbonGraph], check: impl Fn(&RibbonGraph) -> IdentityCheck + Sync + Send) -> SuiteReport {
    first_failure(suite, graphs, |g| {
        let c = check(g);
        (!c.holds()).then(|| Counterexample {
            input: graph_value(g),
            lhs: c.lhs.to_string(),
            rhs: c.rhs.to_string(),
        })
    })
}

/// `R(G; x, y, z^(1/2), w)` from the deletion-contraction value.
pub fn r_half_z(g: &RibbonGraph) -> LaurentPoly {
    let vars = r_vars();
    let half = LaurentPoly::parse(&vars, "z^(1/2)").expect("literal");
    let bindings = std::collections::HashMap::from([("z".to_string(), half)]);
    r_delcon(g).substitute(&bindings, &vars).expect("monomial substitution")
}

/// A seeded diagram, chord and split for the move suites.
#[derive(Debug, Clone)]
pub struct MoveCase {
    pub diagram: ChordDiagram,
    pub chord: String,
    pub split: MoveSplit,
}

impl MoveCase {
    fn to_json(&self) -> Value {
        json!({
            "diagram": self.diagram.to_string(),
            "chord": self.chord,
            "split": [self.split.b, self.split.d],
        })
    }

    /// The diagram after the move matching the chord's sign.
    pub fn moved(&self) -> ChordDiagram {
        let e = self.diagram.chord_index(&self.chord).expect("chord exists");
        if self.diagram.signs()[e] == Sign::Positive {
            rotate_move(&self.diagram, &self.chord, self.split)
        } else {
            twist_move(&self.diagram, &self.chord, self.split)
        }
        .expect("split fits")
    }
}

/// `count` cases with 1 to `max_chords` chords; chord and split uniform.
pub fn move_cases(seed: u64, count: usize, max_chords: usize) -> Vec<MoveCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_chords.max(1));
            let d = corpus::random_diagram(&mut rng, n, 0.5);
            let e = rng.random_range(0..n);
            let first = d.word().iter().position(|&c| c == e).expect("occurs");
            let second = first + 1 + d.word()[first + 1..].iter().position(|&c| c == e).expect("occurs twice");
            let x = second - first - 1;
            let y = 2 * n - 2 - x;
            let split = MoveSplit {
                b: rng.random_range(0..=x),
                d: rng.random_range(0..=y),
            };
            MoveCase {
                chord: d.labels()[e].clone(),
                diagram: d,
                split,
            }
        })
        .collect()
}

pub fn run_suite(suite: Suite, o: &VerifyOptions) -> Result<SuiteReport, VerifyError> {
    Ok(match suite {
        Suite::StatesumVsDelcon => on_graphs(suite, &graph_corpus(o)?, |g| IdentityCheck {
            lhs: r_state_sum(g),
            rhs: r_delcon(g),
        }),
        Suite::CanonicalProduct => {
            let forms: Vec<CanonicalForm> = (0..=o.max_edges)
                .flat_map(|i| (0..=i).flat_map(move |j| (0..=i - j).map(move |k| (i, j, k))))
                .filter_map(|(i, j, k)| CanonicalForm::new(i, j, k))
                .collect();
            first_failure(suite, &forms, |&f| {
                let lhs = bouquet_eval(&canonical_diagram(f));
                let rhs = product_formula(f);
                (lhs != rhs).then(|| Counterexample {
                    input: json!({ "i": f.i, "j": f.j, "k": f.k }),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                })
            })
        }
        Suite::MoveInvariance => first_failure(suite, &move_cases(o.seed, o.count, o.max_edges), |c| {
            let lhs = bouquet_eval(&c.diagram);
            let rhs = bouquet_eval(&c.moved());
            (lhs != rhs).then(|| Counterexample {
                input: c.to_json(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }),
        Suite::MuIdentity => first_failure(suite, &move_cases(o.seed, o.count, o.max_edges), |c| {
            let e = c.diagram.chord_index(&c.chord).expect("chord exists");
            let d2 = c.moved();
            let m = mu(&c.diagram, &c.chord, c.split).expect("split fits");
            let lhs = &bouquet_eval(&c.diagram) - &(&m * &bouquet_eval(&c.diagram.without(e)));
            let rhs = &bouquet_eval(&d2) - &(&m * &bouquet_eval(&d2.without(e)));
            (lhs != rhs).then(|| Counterexample {
                input: c.to_json(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            })
        }),
        Suite::RecipeIdentity => on_graphs(suite, &graph_corpus(o)?, |g| IdentityCheck {
            lhs: recipe_evaluate(g, &RecipeSpec::identity()).expect("identity spec is valid"),
            rhs: r_delcon(g),
        }),
        Suite::RecipeC => on_graphs(suite, &orientable_corpus(o)?, |g| IdentityCheck {
            lhs: recipe_evaluate(g, &RecipeSpec::half_z()).expect("half-z spec is valid"),
            rhs: r_half_z(g),
        }),
        Suite::Transpoly => on_graphs(suite, &graph_corpus(o)?, verify_transpoly),
        Suite::Duality => {
            let graphs = graph_corpus(o)?;
            let a = on_graphs(suite, &graphs, verify_duality);
            if a.passed() { on_graphs(suite, &graphs, verify_transition_dual) } else { a }
        }
        Suite::TransitionDual => on_graphs(suite, &graph_corpus(o)?, verify_transition_dual),
        Suite::Martutte => on_graphs(suite, &plane_corpus(o)?, |g| {
            verify_martin(g).expect("plane corpus")
        }),
        Suite::ChmutovPak => {
            let mut universes = corpus::universe_corpus(o.max_edges, 2.min(o.max_edges))?;
            if !o.exhaustive {
                let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
                let n = universes.len();
                universes = (0..o.count).map(|_| universes[rng.random_range(0..n)].clone()).collect();
            }
            first_failure(suite, &universes, |u| {
                let reports = verify_chmutov_pak(u, true).expect("corpus universes are colorable");
                reports.into_iter().find(|r| !r.holds()).map(|r| {
                    let failing = [&r.bracket_vs_transition, &r.chmutov_pak, &r.signed_transition]
                        .into_iter()
                        .find(|c| !c.holds());
                    let (lhs, rhs) = match failing {
                        Some(c) => (c.lhs.to_string(), c.rhs.to_string()),
                        None => ("medial profile".into(), "universe profile".into()),
                    };
                    Counterexample {
                        input: serde_json::from_str(&io::universe_to_json(u)).expect("valid JSON"),
                        lhs,
                        rhs,
                    }
                })
            })
        }
    })
}
