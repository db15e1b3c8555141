//! `squarestable`: analyze graphs, run verification suites, generate families.
//!
//! Exit codes: 0 ok, 1 theorem violation, 2 input error, 3 cap refusal.

mod family;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use squarestable::classify::classify;
use squarestable::generate::{enumerate_corpus, enumerate_trees, sample_corpus, SampleSpec};
use squarestable::solve::{invariant_chain, maximum_stable_sets};
use squarestable::verify::{fixture_corpus, run_suites};
use squarestable::{Caps, CorpusEntry, Error, Graph, Suite, SuiteResult};

const SCHEMA: &str = "squarestable/1";
const CAP_ENV: &str = "SQSTABLE_CAP_N";

#[derive(Parser)]
#[command(name = "squarestable", version, about = "Square-stable graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants and classification for each input graph.
    Analyze(AnalyzeArgs),
    /// Run verification suites over a corpus.
    Verify(VerifyArgs),
    /// Print a graph family member, or stream a corpus, to stdout.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Args)]
struct CapArgs {
    /// Largest order the exact solvers accept [default: 64, or $SQSTABLE_CAP_N].
    #[arg(long)]
    cap_n: Option<usize>,
    /// Largest order for which stable-set families are listed.
    #[arg(long, default_value_t = Caps::default().omega_n)]
    cap_omega: usize,
}

impl CapArgs {
    fn caps(&self) -> Result<Caps, Failure> {
        let solver_n = match self.cap_n {
            Some(n) => n,
            None => match std::env::var(CAP_ENV) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Input(format!("{CAP_ENV}=`{v}` is not a number")))?,
                Err(_) => Caps::default().solver_n,
            },
        };
        Ok(Caps {
            solver_n,
            omega_n: self.cap_omega,
        })
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file, or `-` for stdin.
    #[arg(default_value = "-")]
    input: String,
    /// Input format; defaults to edges for `*.edges` files and graph6 otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Include the list of maximum stable sets.
    #[arg(long)]
    omega: bool,
    /// Also analyze the square of each graph.
    #[arg(long)]
    square: bool,
    /// Print a plain-text table instead of JSON.
    #[arg(long)]
    text: bool,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
#[group(id = "corpus", required = true, multiple = false)]
struct CorpusArgs {
    /// Every connected graph with at most N vertices, up to isomorphism.
    #[arg(long, value_name = "N", group = "corpus")]
    exhaustive: Option<usize>,
    /// The five bundled figure fixtures.
    #[arg(long, group = "corpus")]
    fixtures: bool,
    /// A single family member, e.g. `--family cycle 5`.
    #[arg(long, num_args = 1.., value_name = "SPEC", group = "corpus")]
    family: Option<Vec<String>>,
    /// COUNT seeded random graphs (connected graphs and trees with pendants).
    #[arg(long, num_args = 2, value_names = ["COUNT", "SEED"], group = "corpus")]
    sample: Option<Vec<u64>>,
    /// Every tree with at most N vertices, up to isomorphism.
    #[arg(long, value_name = "N", group = "corpus")]
    trees: Option<usize>,
    /// graph6 lines from a file, or `-` for stdin.
    #[arg(long, value_name = "PATH", group = "corpus")]
    input: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Suites to run, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    /// Include disconnected graphs in `--exhaustive`.
    #[arg(long)]
    include_disconnected: bool,
    /// Order range for `--sample`.
    #[arg(long, default_value_t = 2)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Treat a cap refusal as an error (exit 3) rather than counting it.
    #[arg(long)]
    strict: bool,
    /// Omit per-graph equivalence reports from the JSON output.
    #[arg(long)]
    summary_only: bool,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Family spec, e.g. `cycle 12`, `corona --base cycle 5`, `named diamond`,
    /// or `exhaustive N` / `trees N` to stream a corpus.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
    spec: Vec<String>,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Violation(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Violation(m) | Failure::Input(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SolverCap { .. } => Failure::Cap(format!("{e} (raise with --cap-n)")),
            Error::EnumerationCap { .. } => Failure::Cap(format!("{e} (raise with --cap-omega)")),
            Error::Internal(_) => Failure::Violation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure::Input(format!("{what}: {e}"))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_failure("stdin", e))?;
        Ok(s)
    } else {
        fs::read_to_string(PathBuf::from(path)).map_err(|e| io_failure(path, e))
    }
}

fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Failure> {
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(Graph::parse_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    Ok(graphs)
}

fn read_graphs(path: &str, format: Option<Format>) -> Result<Vec<Graph>, Failure> {
    let text = read_input(path)?;
    let format = format.unwrap_or(if path.ends_with(".edges") {
        Format::Edges
    } else {
        Format::Graph6
    });
    match format {
        Format::Edges => Ok(vec![Graph::parse_edge_list(&text)?]),
        Format::Graph6 => parse_graph6_lines(&text),
    }
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "graph6": g.to_graph6(), "edges": edges })
}

fn analysis(g: &Graph, caps: &Caps, with_omega: bool) -> Result<Value, Failure> {
    let invariants = invariant_chain(g, caps)?;
    let classification = classify(g, caps)?;
    let mut out = json!({
        "graph": graph_json(g),
        "invariants": invariants,
        "classification": classification,
    });
    if with_omega {
        out["omega"] = serde_json::to_value(maximum_stable_sets(g, caps)?).expect("serializable");
    }
    Ok(out)
}

fn text_table(v: &Value) -> String {
    let mut out = String::new();
    let mut row = |k: &str, val: &Value| out.push_str(&format!("{k:<26} {val}\n"));
    row("graph6", &v["graph"]["graph6"]);
    for (section, fields) in [
        (
            "invariants",
            &[
                "n", "alpha", "alpha_sq", "theta", "theta_sq", "gamma", "idom", "mu",
            ][..],
        ),
        (
            "classification",
            &[
                "square_stable",
                "well_covered",
                "very_well_covered",
                "koenig_egervary",
                "square_koenig_egervary",
                "bipartite",
                "simplicial_graph",
                "chordal",
                "simplex_partition",
                "alpha_minus",
                "alpha_plus_class",
                "omega_matroid",
            ][..],
        ),
    ] {
        for f in fields {
            row(f, &v[section][*f]);
        }
    }
    out
}

fn emit(out: &mut impl Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| io_failure("stdout", e))
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let caps = args.caps.caps()?;
    let graphs = read_graphs(&args.input, args.format)?;
    let mut stdout = io::stdout().lock();
    for g in &graphs {
        let mut v = analysis(g, &caps, args.omega)?;
        if args.square {
            v["square"] = analysis(&g.square(), &caps, args.omega)?;
        }
        if args.text {
            emit(&mut stdout, &text_table(&v))?;
            if args.square {
                emit(&mut stdout, "square:")?;
                emit(&mut stdout, &text_table(&v["square"]))?;
            }
        } else {
            let mut doc = json!({ "schema": SCHEMA });
            doc.as_object_mut()
                .expect("object")
                .extend(v.as_object().expect("object").clone());
            emit(&mut stdout, &doc.to_string())?;
        }
    }
    Ok(())
}

fn build_corpus(args: &VerifyArgs) -> Result<(Value, Vec<CorpusEntry>), Failure> {
    let c = &args.corpus;
    let entries = |gs: Vec<Graph>| gs.into_iter().map(CorpusEntry::new).collect::<Vec<_>>();
    if let Some(n) = c.exhaustive {
        let corpus = entries(enumerate_corpus(n, !args.include_disconnected)?);
        let desc = json!({
            "kind": "exhaustive",
            "max_n": n,
            "connected_only": !args.include_disconnected,
        });
        return Ok((desc, corpus));
    }
    if c.fixtures {
        return Ok((json!({ "kind": "fixtures" }), fixture_corpus()));
    }
    if let Some(tokens) = &c.family {
        let spec = family::parse(tokens).map_err(Failure::Input)?;
        let g = spec.build()?;
        return Ok((json!({ "kind": "family", "spec": spec }), entries(vec![g])));
    }
    if let Some(sample) = &c.sample {
        let spec = SampleSpec {
            count: sample[0] as usize,
            min_n: args.min_n,
            max_n: args.max_n,
            seed: sample[1],
        };
        let corpus = entries(sample_corpus(spec)?);
        return Ok((json!({ "kind": "sample", "spec": spec }), corpus));
    }
    if let Some(n) = c.trees {
        let corpus = entries(enumerate_trees(n)?);
        return Ok((json!({ "kind": "trees", "max_n": n }), corpus));
    }
    let path = c.input.as_deref().expect("clap enforces one corpus source");
    let corpus = entries(parse_graph6_lines(&read_input(path)?)?);
    Ok((json!({ "kind": "input", "path": path }), corpus))
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, Failure> {
    let mut suites = Vec::new();
    for name in names {
        if name == "all" {
            suites.extend(Suite::ALL);
            continue;
        }
        let suite = Suite::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            Failure::Input(format!(
                "unknown suite `{name}`; known: all, {}",
                known.join(", ")
            ))
        })?;
        suites.push(suite);
    }
    suites.sort();
    suites.dedup();
    Ok(suites)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    schema: &'static str,
    corpus: Value,
    graphs: usize,
    caps: Caps,
    suites: &'a [SuiteResult],
    violations: usize,
    passed: bool,
}

fn summary_table(results: &[SuiteResult]) -> String {
    let mut out = format!(
        "{:<14} {:>8} {:>8} {:>8} {:>10}\n",
        "suite", "checked", "skipped", "refused", "violations"
    );
    for r in results {
        out.push_str(&format!(
            "{:<14} {:>8} {:>8} {:>8} {:>10}\n",
            r.suite_name,
            r.graphs_checked,
            r.skipped,
            r.refused,
            r.violations.len()
        ));
    }
    out
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let caps = args.caps.caps()?;
    let suites = parse_suites(&args.suite)?;
    let (corpus_desc, corpus) = build_corpus(args)?;
    let mut results = run_suites(&corpus, &suites, &caps, args.strict).map_err(|e| match e {
        Error::Precondition(m) if args.strict => Failure::Cap(m),
        e => e.into(),
    })?;
    if args.summary_only {
        for r in &mut results {
            r.reports.clear();
        }
    }
    let violations: usize = results.iter().map(|r| r.violations.len()).sum();
    let report = VerifyReport {
        schema: SCHEMA,
        corpus: corpus_desc,
        graphs: corpus.len(),
        caps,
        suites: &results,
        violations,
        passed: violations == 0,
    };
    let mut stdout = io::stdout().lock();
    emit(
        &mut stdout,
        &serde_json::to_string(&report).expect("serializable"),
    )?;
    eprint!("{}", summary_table(&results));
    if violations > 0 {
        return Err(Failure::Violation(format!("{violations} violation(s)")));
    }
    Ok(())
}

/// Pull a `--format X` that landed among the trailing spec tokens.
fn split_format(tokens: &[String], default: Format) -> Result<(Vec<String>, Format), Failure> {
    let mut rest = Vec::new();
    let mut format = default;
    let mut iter = tokens.iter();
    while let Some(t) = iter.next() {
        let value = match t.strip_prefix("--format") {
            Some("") => iter.next().map(String::as_str),
            Some(v) if v.starts_with('=') => Some(&v[1..]),
            _ => {
                rest.push(t.clone());
                continue;
            }
        };
        format = match value {
            Some("graph6") => Format::Graph6,
            Some("edges") => Format::Edges,
            other => {
                return Err(Failure::Input(format!(
                    "--format expects graph6 or edges, got {other:?}"
                )))
            }
        };
    }
    if rest.is_empty() {
        return Err(Failure::Input(format!(
            "missing family; expected one of: {}",
            family::USAGE
        )));
    }
    Ok((rest, format))
}

fn cmd_generate(args: &GenerateArgs) -> Result<(), Failure> {
    let (tokens, format) = split_format(&args.spec, args.format)?;
    let tokens = &tokens[..];
    let corpus_size = |tokens: &[String]| -> Result<usize, Failure> {
        match tokens {
            [_, n] => n
                .parse()
                .map_err(|_| Failure::Input(format!("`{n}` is not a valid order"))),
            _ => Err(Failure::Input(format!("expected `{} N`", tokens[0]))),
        }
    };
    let graphs = match tokens[0].as_str() {
        "exhaustive" => enumerate_corpus(corpus_size(tokens)?, true)?,
        "trees" => enumerate_trees(corpus_size(tokens)?)?,
        _ => vec![family::parse(tokens).map_err(Failure::Input)?.build()?],
    };
    let mut stdout = io::stdout().lock();
    for g in &graphs {
        match format {
            Format::Graph6 => emit(&mut stdout, &g.to_graph6())?,
            Format::Edges => {
                write!(stdout, "{}", g.to_edge_list()).map_err(|e| io_failure("stdout", e))?
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Generate(a) => cmd_generate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("squarestable: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
