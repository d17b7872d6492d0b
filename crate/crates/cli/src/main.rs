use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boxicity::boxrep::{build_bipartite_box_representation, build_box_representation};
use boxicity::cub::build_cub_representation;
use boxicity::generators::{self, Family};
use boxicity::interval::verify;
use boxicity::io::{parse_graph, write_graph, GraphFormat};
use boxicity::oracle::{exact, OracleConfig, DEFAULT_MAX_K, NON_EDGE_CAP};
use boxicity::report::{bound_report, CoverChoice};
use boxicity::survey::{survey, Check};
use boxicity::{Error, Graph, Kind, Representation};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes.
const CHECK_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "boxicity",
    version,
    about = "Interval and unit-interval dimension of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from a named family.
    Gen(GenArgs),
    /// Report cover-based bounds and the dimensions achieved by each construction.
    Bounds(BoundsArgs),
    /// Build and verify a representation, then write it as JSON.
    Construct(ConstructArgs),
    /// Check a representation against a graph.
    Verify(VerifyArgs),
    /// Exact boxicity or cubicity by exhaustive search.
    Exact(ExactArgs),
    /// Run the bound checks over every graph of a given order.
    Survey(SurveyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Roberts,
    Crown,
    Random,
    RandomBipartite,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatName {
    EdgeList,
    Graph6,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Vertex count (first side for bipartite families).
    #[arg(long)]
    n: usize,
    /// Second side for bipartite families.
    #[arg(long)]
    n2: Option<usize>,
    /// Edge probability for random families.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatName::EdgeList)]
    format: FormatName,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CoverArgs {
    /// Use the matching-based approximate cover instead of a minimum cover.
    #[arg(long, conflicts_with = "cover")]
    approx: bool,
    /// Use this cover (comma-separated vertices); it must be minimal.
    #[arg(long, value_delimiter = ',')]
    cover: Option<Vec<usize>>,
    /// Vertex limit for the exact cover search.
    #[arg(long, default_value_t = boxicity::cover::COVER_CAP)]
    cap: usize,
}

impl CoverArgs {
    fn choice(&self) -> CoverChoice {
        match (&self.cover, self.approx) {
            (Some(v), _) => CoverChoice::Given(v.clone()),
            (None, true) => CoverChoice::Approx,
            (None, false) => CoverChoice::Exact { cap: self.cap },
        }
    }
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    cover: CoverArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    CubVc,
    BoxVc,
    BoxBipartite,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    cover: CoverArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// The graph.
    #[arg(long = "in")]
    input: PathBuf,
    /// The representation JSON.
    #[arg(long)]
    rep: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Parameter {
    Boxicity,
    Cubicity,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(value_enum)]
    what: Parameter,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_MAX_K)]
    max_k: usize,
    /// Limit on the number of non-edges.
    #[arg(long, default_value_t = NON_EDGE_CAP)]
    cap: usize,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated subset of constructions, exact, chromatic, remark2 (default: all).
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure mapped to an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } => CAPACITY,
            _ => INPUT_ERROR,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: String) -> Failure {
    Failure {
        code: INPUT_ERROR,
        message,
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Bounds(a) => cmd_bounds(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Exact(a) => cmd_exact(a),
        Command::Survey(a) => cmd_survey(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(path)?)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let n = a.n;
    let second = || {
        a.n2.ok_or_else(|| input_error("this family needs --n2".into()))
    };
    let graph = match a.family {
        FamilyName::Path => generators::generate(Family::Path { n })?.graph,
        FamilyName::Cycle => generators::generate(Family::Cycle { n })?.graph,
        FamilyName::Complete => generators::generate(Family::Complete { n })?.graph,
        FamilyName::Star => generators::generate(Family::Star { n })?.graph,
        FamilyName::CompleteBipartite => {
            generators::generate(Family::CompleteBipartite {
                n1: n,
                n2: second()?,
            })?
            .graph
        }
        FamilyName::Roberts => generators::generate(Family::Roberts { n })?.graph,
        FamilyName::Crown => generators::generate(Family::Crown { n })?.graph,
        FamilyName::Random => {
            generators::generate(Family::Random {
                n,
                p: a.p,
                seed: a.seed,
            })?
            .graph
        }
        FamilyName::RandomBipartite => {
            generators::random_bipartite(n, second()?, a.p, a.seed)?.graph
        }
    };
    let format = match a.format {
        FormatName::EdgeList => GraphFormat::EdgeList,
        FormatName::Graph6 => GraphFormat::Graph6,
    };
    emit(a.out.as_deref(), &write_graph(&graph, format))?;
    Ok(0)
}

fn cmd_bounds(a: BoundsArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let report = bound_report(&g, &a.cover.choice())?;
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(if report.consistent() { 0 } else { CHECK_FAILED })
}

fn cmd_construct(a: ConstructArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let rep: Representation = match a.method {
        Method::CubVc => build_cub_representation(&g, &a.cover.choice().resolve(&g)?)?,
        Method::BoxVc => build_box_representation(&g, &a.cover.choice().resolve(&g)?)?,
        Method::BoxBipartite => {
            let bip = g.bipartition().map_err(|cycle| {
                input_error(format!("graph is not bipartite: odd cycle {:?}", cycle.0))
            })?;
            build_bipartite_box_representation(&g, &bip)?
        }
    };
    let report = verify(&rep, &g);
    if !report.passed {
        eprintln!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
        return Err(Failure {
            code: CHECK_FAILED,
            message: "constructed representation failed verification".into(),
        });
    }
    emit(a.out.as_deref(), &(rep.to_json() + "\n"))?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let rep = Representation::from_json(&read_text(&a.rep)?)?;
    let report = verify(&rep, &g);
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(if report.passed { 0 } else { CHECK_FAILED })
}

fn cmd_exact(a: ExactArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    let parameter = match a.what {
        Parameter::Boxicity => Kind::Box,
        Parameter::Cubicity => Kind::Cub,
    };
    let config = OracleConfig {
        max_k: a.max_k,
        non_edge_cap: a.cap,
        ..OracleConfig::default()
    };
    let result = exact(&g, parameter, &config)?;
    println!("{}", result.to_json());
    Ok(if result.capped { CAPACITY } else { 0 })
}

fn cmd_survey(a: SurveyArgs) -> Outcome {
    let checks = match &a.checks {
        None => Check::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| s.parse::<Check>())
            .collect::<Result<Vec<_>, _>>()?,
    };
    let report = survey(a.n, &checks)?;
    emit(a.out.as_deref(), &report.to_jsonl())?;
    let violations = report.violations();
    eprintln!(
        "n={} records={} violations={}",
        report.n,
        report.records.len(),
        violations
    );
    for key in report.counterexamples() {
        eprintln!("counterexample: {key}");
    }
    Ok(if violations == 0 { 0 } else { CHECK_FAILED })
}
