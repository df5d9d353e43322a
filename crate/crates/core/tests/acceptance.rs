//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 3 bundles a plain invariance claim that does not hold for the
//! single-step moves (a counterexample is printed); it is listed in
//! `EXPECTED_FAILURES` and the run checks that it still fails for the stated
//! reason. Any other failure makes the target fail.

mod common;

use std::process::Command;
use std::time::Instant;

use ribbonforge::br::{
    CanonicalForm, bouquet_eval, canonical_diagram, product_formula, r_delcon, r_state_sum, r_vars,
    recipe_evaluate, RecipeSpec,
};
use ribbonforge::corpus;
use ribbonforge::links::{bracket, verify_chmutov_pak};
use ribbonforge::poly::{LaurentPoly, VarTable};
use ribbonforge::ribbon::{ChordDiagram, EdgeSubset, RibbonGraph, medial_contract_holds};
use ribbonforge::transition::{verify_duality, verify_martin, verify_transition_dual, verify_transpoly};
use ribbonforge::verify::{Suite, VerifyOptions, move_cases, run_suite};

const EXPECTED_FAILURES: &[usize] = &[3];

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(what()) }
}

fn r(text: &str) -> LaurentPoly {
    LaurentPoly::parse(&r_vars(), text).unwrap()
}

fn criterion_1() -> Outcome {
    let cases = [("aa", "", "1 + y"), ("aa", "a", "1 + y*z*w"), ("abab", "", "y^2*z^2 + 2*y + 1")];
    for (word, neg, expected) in cases {
        let got = bouquet_eval(&ChordDiagram::parse(word, neg).unwrap());
        check(got == r(expected), || format!("R({word}, negative {neg:?}) = {got}"))?;
    }
    let mut n = 0;
    for i in 0..=5 {
        for j in 0..=i {
            for k in 0..=i - j {
                let Some(f) = CanonicalForm::new(i, j, k) else { continue };
                n += 1;
                let lhs = bouquet_eval(&canonical_diagram(f));
                check(lhs == product_formula(f), || format!("product formula fails at ({i},{j},{k})"))?;
            }
        }
    }
    Ok(format!("3 anchor values, product formula on {n} canonical diagrams"))
}

fn criterion_2() -> Outcome {
    let mut graphs = corpus::exhaustive(3).unwrap();
    let exhaustive = graphs.len();
    graphs.extend(corpus::random_corpus(2024, 100, 7));
    for g in &graphs {
        check(r_state_sum(g) == r_delcon(g), || format!("state sum and deletion-contraction differ on {g:?}"))?;
    }
    Ok(format!("{exhaustive} exhaustive + 100 random graphs"))
}

fn criterion_3() -> Outcome {
    let options = VerifyOptions {
        max_edges: 6,
        exhaustive: false,
        seed: 7,
        count: 200,
    };
    let mu = run_suite(Suite::MuIdentity, &options).unwrap();
    check(mu.passed(), || format!("mu-identity counterexample {:?}", mu.counterexample))?;
    let inv = run_suite(Suite::MoveInvariance, &options).unwrap();
    let failures = move_cases(7, 200, 6)
        .iter()
        .filter(|c| bouquet_eval(&c.diagram) != bouquet_eval(&c.moved()))
        .count();
    match inv.counterexample {
        None => Ok("mu-identities and plain invariance hold on 200 diagrams".into()),
        Some(c) => Err(format!(
            "mu-identities hold on 200 diagrams; plain invariance fails on {failures}/200, e.g. {} (R {} vs {})",
            c.input, c.lhs, c.rhs
        )),
    }
}

fn criterion_4() -> Outcome {
    let graphs = corpus::exhaustive(3).unwrap();
    for g in &graphs {
        let f = recipe_evaluate(g, &RecipeSpec::identity()).unwrap();
        check(f == r_state_sum(g), || format!("identity recipe differs on {g:?}"))?;
    }
    let oriented = corpus::random_orientable_corpus(99, 50, 6);
    for g in &oriented {
        let c = recipe_evaluate(g, &RecipeSpec::half_z()).unwrap();
        check(c == common::oriented_genus_polynomial(g), || format!("half-z recipe differs on {g:?}"))?;
    }
    Ok(format!("identity spec on {} graphs, half-z spec on 50 oriented graphs", graphs.len()))
}

fn transition_corpus() -> Vec<RibbonGraph> {
    let mut graphs = corpus::exhaustive(3).unwrap();
    graphs.extend(corpus::random_corpus(11, 50, 6));
    graphs
}

fn criterion_5() -> Outcome {
    let graphs = transition_corpus();
    for g in &graphs {
        check(verify_transpoly(g).holds(), || format!("transpoly fails on {g:?}"))?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn criterion_6() -> Outcome {
    let mut graphs = transition_corpus();
    let negative_loop = RibbonGraph::build(&[("v", &["h", "k"])], &[("e", "h", "k", -1)]).unwrap();
    let digon = RibbonGraph::build(
        &[("u", &["a1", "b1"]), ("v", &["a2", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", -1)],
    )
    .unwrap();
    graphs.push(negative_loop);
    graphs.push(digon);
    let nonorientable = graphs.iter().filter(|g| !g.is_orientable()).count();
    for g in &graphs {
        check(verify_duality(g).holds(), || format!("duality fails on {g:?}"))?;
        check(verify_transition_dual(g).holds(), || format!("dual weights fail on {g:?}"))?;
    }
    Ok(format!("{} graphs, {nonorientable} nonorientable", graphs.len()))
}

fn criterion_7() -> Outcome {
    let vars = VarTable::new(&["x", "y"]).unwrap();
    let c3 = RibbonGraph::build(
        &[("u", &["a1", "c2"]), ("v", &["b1", "a2"]), ("w", &["c1", "b2"])],
        &[("a", "a1", "a2", 1), ("b", "b1", "b2", 1), ("c", "c1", "c2", 1)],
    )
    .unwrap();
    let bridge = RibbonGraph::build(&[("u", &["h"]), ("v", &["k"])], &[("e", "h", "k", 1)]).unwrap();
    let tutte = ribbonforge::br::classical_tutte;
    check(tutte(&c3) == LaurentPoly::parse(&vars, "x^2 + x + y").unwrap(), || "T(C3)".into())?;
    check(tutte(&bridge) == LaurentPoly::parse(&vars, "x").unwrap(), || "T(bridge)".into())?;
    let plane = corpus::exhaustive_plane(6).unwrap();
    for g in &plane {
        check(tutte(g) == common::tutte_oracle(g), || format!("Tutte oracle differs on {g:?}"))?;
        check(verify_martin(g).unwrap().holds(), || format!("circuit partition identity fails on {g:?}"))?;
    }
    Ok(format!("{} plane graphs with at most 6 edges", plane.len()))
}

fn criterion_8() -> Outcome {
    let universes = corpus::universe_corpus(4, 2).unwrap();
    for u in &universes {
        for report in verify_chmutov_pak(u, true).unwrap() {
            check(report.holds(), || format!("Chmutov-Pak fails on {u:?}"))?;
        }
        check(bracket(u) == common::bracket_oracle(u), || format!("bracket differs from strand walk on {u:?}"))?;
    }
    Ok(format!("{} labeled universes, both colorings", universes.len()))
}

fn criterion_9() -> Outcome {
    let graphs = corpus::exhaustive(5).unwrap();
    let mut states = 0usize;
    for g in &graphs {
        let m = g.num_edges();
        for bits in 0u64..(1 << m) {
            let s = g.stats(&EdgeSubset::from_bits(g, bits));
            states += 1;
            check(s.k + s.n >= s.bc, || format!("negative Euler genus in {g:?}"))?;
            check(s.t == 1 || s.eg % 2 == 0, || format!("odd genus for an orientable state of {g:?}"))?;
        }
        check(medial_contract_holds(g), || format!("medial contract fails on {g:?}"))?;
    }
    Ok(format!("{} graphs with at most 5 edges, {states} states", graphs.len()))
}

fn cli_output(args: &[&str], threads: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_ribbonforge"))
        .args(args)
        .env("RIBBONFORGE_THREADS", threads)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn criterion_10() -> Outcome {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/");
    let digon = format!("{data}digon.json");
    let hopf = format!("{data}hopf.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["compute-r", "--input", &digon],
        vec!["compute-q", "--input", &digon, "--format", "json"],
        vec!["medial", "--input", &digon],
        vec!["bracket", "--input", &hopf],
        vec!["green-face", "--input", &hopf],
        vec!["verify", "all", "--max-edges", "2", "--exhaustive", "--seed", "5", "--count", "10"],
    ];
    for args in &runs {
        // the "all" run includes the failing move suite, so allow exit 3 there
        let run = |threads: &str| {
            if args[0] == "verify" {
                Command::new(env!("CARGO_BIN_EXE_ribbonforge"))
                    .args(args)
                    .env("RIBBONFORGE_THREADS", threads)
                    .output()
                    .expect("binary runs")
                    .stdout
            } else {
                cli_output(args, threads)
            }
        };
        let first = run("1");
        check(run("1") == first, || format!("{args:?} differs between runs"))?;
        check(run("4") == first, || format!("{args:?} differs between 1 and 4 threads"))?;
    }
    Ok(format!("{} commands, repeated and with 1 and 4 threads", runs.len()))
}

fn main() {
    type Criterion = (usize, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, "canonical evaluations and product formula", criterion_1),
        (2, "state sum equals deletion-contraction", criterion_2),
        (3, "move invariance and mu-identities", criterion_3),
        (4, "recipe theorem", criterion_4),
        (5, "transition polynomial of the medial", criterion_5),
        (6, "duality", criterion_6),
        (7, "circuit partition of plane graphs", criterion_7),
        (8, "Chmutov-Pak", criterion_8),
        (9, "structural invariants", criterion_9),
        (10, "determinism", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("criterion {n:>2} PASS [{secs:.2}s] {name}: {detail}"),
            Err(detail) => println!("criterion {n:>2} FAIL [{secs:.2}s] {name}: {detail}"),
        }
        let as_expected = match &outcome {
            Ok(_) => !EXPECTED_FAILURES.contains(&n),
            Err(detail) => EXPECTED_FAILURES.contains(&n) && detail.contains("plain invariance fails"),
        };
        if !as_expected {
            unexpected.push(n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
