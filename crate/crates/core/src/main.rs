use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{Value, json};

use ribbonforge::br::{
    RecipeSpec, canonical_form, classical_tutte, r_delcon, r_state_sum, recipe_evaluate,
};
use ribbonforge::io::{self, IoError};
use ribbonforge::links::{bracket, checkerboard_color, green_face_graph, signed_r};
use ribbonforge::poly::{LaurentPoly, VarTable};
use ribbonforge::ribbon::ChordDiagram;
use ribbonforge::transition::medial_q;
use ribbonforge::verify::{Suite, VerifyOptions, run_suite};

const EXIT_INVALID: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

#[derive(Parser)]
#[command(name = "ribbonforge", version, about = "Exact topological Tutte and transition polynomials of ribbon graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Delcon,
    Statesum,
}

#[derive(Args)]
struct PolyOut {
    /// Polynomial rendering.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Rename the output variables positionally, e.g. `a,b,c,d`.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Substitute rational values, e.g. `x=2,y=3/2` (after renaming).
    #[arg(long, value_delimiter = ',')]
    point: Option<Vec<String>>,
}

#[derive(Subcommand)]
enum Command {
    /// R(G; x, y, z, w).
    ComputeR {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "delcon")]
        method: Method,
        #[command(flatten)]
        out: PolyOut,
    },
    /// Q of the medial graph with the medial weight system, in (alpha, beta, t).
    ComputeQ {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: PolyOut,
    },
    /// The medial graph as JSON.
    Medial {
        #[arg(long)]
        input: PathBuf,
    },
    /// The dual graph as JSON.
    Dual {
        #[arg(long)]
        input: PathBuf,
    },
    /// The classical Tutte polynomial of the underlying graph, in (x, y).
    Tutte {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: PolyOut,
    },
    /// Canonical form (i, j, k) of a bouquet, given as a graph file or a word.
    Canonical {
        #[arg(long, conflicts_with = "word", required_unless_present = "word")]
        input: Option<PathBuf>,
        /// Chord word with one-letter chords, e.g. `abab`.
        #[arg(long)]
        word: Option<String>,
        /// Negative chords, e.g. `b`.
        #[arg(long, default_value = "", requires = "word")]
        negative: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kauffman bracket of a link universe, in (A, B, d).
    Bracket {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        out: PolyOut,
    },
    /// Signed green-face graph of a universe and its signed polynomial.
    GreenFace {
        #[arg(long)]
        input: PathBuf,
        /// Use the other checkerboard coloring.
        #[arg(long)]
        swap: bool,
    },
    /// Evaluate a recipe: `identity`, `half-z`, or a JSON spec file.
    Recipe {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "identity")]
        spec: String,
        #[command(flatten)]
        out: PolyOut,
    },
    /// Run an identity suite; exits 3 with the counterexample on failure.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_edges: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        count: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}: {1}")]
    Read(PathBuf, std::io::Error),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Read(path.to_path_buf(), e))
}

fn render(p: &LaurentPoly, out: &PolyOut) -> Result<String, CliError> {
    let mut p = p.clone();
    if let Some(names) = &out.vars {
        let table = p.vars().renamed(names).map_err(invalid)?;
        p = p.with_table(&table).map_err(invalid)?;
    }
    if let Some(assignments) = &out.point {
        let mut bindings = HashMap::new();
        for a in assignments {
            let (name, value) = a
                .split_once('=')
                .ok_or_else(|| invalid(format!("point entry `{a}` is not name=value")))?;
            let value: BigRational = value
                .trim()
                .parse()
                .map_err(|_| invalid(format!("`{value}` is not a rational number")))?;
            let name = name.trim();
            if p.vars().index(name).is_none() {
                return Err(invalid(format!("unknown variable `{name}`")));
            }
            bindings.insert(name.to_string(), LaurentPoly::constant(p.vars(), value));
        }
        p = p.substitute(&bindings, &p.vars().clone()).map_err(invalid)?;
    }
    Ok(match out.format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string_pretty(&p.to_json()).expect("serializable"),
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn load_spec(spec: &str) -> Result<RecipeSpec, CliError> {
    match spec {
        "identity" => return Ok(RecipeSpec::identity()),
        "half-z" => return Ok(RecipeSpec::half_z()),
        _ => {}
    }
    let doc: Value = serde_json::from_str(&read(Path::new(spec))?).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
    let names: Vec<String> = match doc.get("variables") {
        Some(v) => serde_json::from_value(v.clone()).map_err(invalid)?,
        None => ["x", "y", "z", "w"].map(String::from).to_vec(),
    };
    let idempotent: Vec<String> = match doc.get("idempotent") {
        Some(v) => serde_json::from_value(v.clone()).map_err(invalid)?,
        None => names.iter().filter(|n| *n == "w").cloned().collect(),
    };
    for required in ["x", "y", "z", "w"] {
        if !names.iter().any(|n| n == required) {
            return Err(invalid(format!("recipe variables must include `{required}`")));
        }
    }
    let vars = VarTable::with_idempotent(&names, &idempotent).map_err(invalid)?;
    let field = |key: &str| -> Result<LaurentPoly, CliError> {
        let text = doc
            .get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| invalid(format!("recipe field `{key}` missing")))?;
        LaurentPoly::parse(&vars, text).map_err(invalid)
    };
    Ok(RecipeSpec {
        alpha: field("alpha")?,
        x: field("x")?,
        q: field("q")?,
        r: field("r")?,
        s: field("s")?,
        u: field("u")?,
        v: field("v")?,
    })
}

/// Output text plus whether a verify suite found a counterexample.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let graph = |p: &Path| -> Result<_, CliError> { Ok(io::parse_graph(&read(p)?)?) };
    let universe = |p: &Path| -> Result<_, CliError> { Ok(io::parse_universe(&read(p)?)?) };
    let text = match cli.command {
        Command::ComputeR { input, method, out } => {
            let g = graph(&input)?;
            let r = match method {
                Method::Delcon => r_delcon(&g),
                Method::Statesum => r_state_sum(&g),
            };
            render(&r, &out)?
        }
        Command::ComputeQ { input, out } => render(&medial_q(&graph(&input)?), &out)?,
        Command::Medial { input } => io::medial_to_json(&graph(&input)?.medial()),
        Command::Dual { input } => io::graph_to_json(&graph(&input)?.dual()),
        Command::Tutte { input, out } => render(&classical_tutte(&graph(&input)?), &out)?,
        Command::Canonical {
            input,
            word,
            negative,
            format,
        } => {
            let d = match (input, word) {
                (Some(p), _) => graph(&p)?.to_chord_diagram().map_err(invalid)?,
                (None, Some(w)) => ChordDiagram::parse(&w, &negative).map_err(invalid)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            let f = canonical_form(&d);
            match format {
                Format::Text => format!("({}, {}, {})", f.i, f.j, f.k),
                Format::Json => pretty(&json!({ "diagram": d.to_string(), "i": f.i, "j": f.j, "k": f.k })),
            }
        }
        Command::Bracket { input, out } => render(&bracket(&universe(&input)?), &out)?,
        Command::GreenFace { input, swap } => {
            let u = universe(&input)?;
            let mut coloring = checkerboard_color(&u).map_err(invalid)?;
            if swap {
                coloring = coloring.swapped();
            }
            let sg = green_face_graph(&u, &coloring).map_err(invalid)?;
            let graph: Value = serde_json::from_str(&io::signed_graph_to_json(&sg)).expect("valid JSON");
            pretty(&json!({ "graph": graph, "signed_r": signed_r(&sg).to_json() }))
        }
        Command::Recipe { input, spec, out } => {
            let g = graph(&input)?;
            let spec = load_spec(&spec)?;
            render(&recipe_evaluate(&g, &spec).map_err(invalid)?, &out)?
        }
        Command::Verify {
            suite,
            max_edges,
            exhaustive,
            seed,
            count,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(invalid)?]
            };
            let options = VerifyOptions {
                max_edges,
                exhaustive,
                seed,
                count,
            };
            let mut reports = Vec::new();
            let mut failed = false;
            for s in suites {
                let r = run_suite(s, &options).map_err(invalid)?;
                failed |= !r.passed();
                reports.push(r.to_json());
            }
            let body = if reports.len() == 1 { reports.remove(0) } else { Value::Array(reports) };
            return Ok((pretty(&body), failed));
        }
    };
    Ok((text, false))
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("RIBBONFORGE_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| invalid(format!("RIBBONFORGE_THREADS must be a positive integer, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(invalid)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok((text, failed)) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if failed { ExitCode::from(EXIT_COUNTEREXAMPLE) } else { ExitCode::SUCCESS }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
