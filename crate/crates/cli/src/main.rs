use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;
use uniwiener_core::constructions::{
    build_star_like, construct_gstar, eval_decomposition, eval_gstar_formula_even, eval_gstar_formula_odd,
    eval_star_tree_formula, DecompositionStats, ExtremalParams, StarlikeParams,
};
use uniwiener_core::enumeration::{gen_unicyclic, verify_sweep, SweepConfig};
use uniwiener_core::io::{GraphDocument, GraphFormat, ReportDocument, TraceDocument};
use uniwiener_core::transforms::reduce_to_canonical;
use uniwiener_core::{decompose_unicyclic, girth, matching_number, wiener_index, Graph};

/// Largest order the enumerating subcommands accept.
const MAX_N_CAP: usize = 14;

#[derive(Parser)]
#[command(
    name = "uniwiener",
    version,
    about = "Wiener index and matching number of unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Wiener index, girth, matching number and branch statistics as JSON
    Compute(InputArgs),
    /// Build a star-like tree or an extremal unicyclic graph
    Construct(ConstructArgs),
    /// Evaluate a closed form and compare it with the directly computed value
    Formula(FormulaArgs),
    /// Reduce a unicyclic graph to the canonical family and print the trace
    Reduce(InputArgs),
    /// Print one graph6 line per isomorphism class of order n and girth g
    Enumerate(EnumerateArgs),
    /// Brute-force the minimum Wiener index per (n, g, beta) and compare with G*
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file; reads stdin when absent or "-"
    path: Option<PathBuf>,
    /// Input format; guessed from the first line when absent
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Edgelist => GraphFormat::Edgelist,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "shape")]
struct ShapeArgs {
    /// T*_{a,b}: root with a two-vertex paths and b leaves
    #[arg(long, value_name = "A,B", value_parser = triple::<2>)]
    star: Option<Numbers>,
    /// G*_(n,g,beta)
    #[arg(long, value_name = "N,G,BETA", value_parser = triple::<3>)]
    gstar: Option<Numbers>,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct FormulaArgs {
    /// Wiener index of T*_{beta, n-2beta-1}
    #[arg(long, value_name = "N,BETA", value_parser = triple::<2>)]
    star: Option<Numbers>,
    /// Printed closed form for odd girth
    #[arg(long, value_name = "N,G,BETA", value_parser = triple::<3>)]
    gstar_odd: Option<Numbers>,
    /// Printed closed form for even girth
    #[arg(long, value_name = "N,G,BETA", value_parser = triple::<3>)]
    gstar_even: Option<Numbers>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g: usize,
    /// Only classes with this matching number
    #[arg(long)]
    beta: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, value_delimiter = ',', default_value = "3,4,5")]
    girths: Vec<usize>,
    /// Worker threads; 1 runs serially
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    out: ReportFormat,
    /// Only report classes with 2*beta >= 3*g and n >= 2*beta
    #[arg(long)]
    strict_hypothesis: bool,
}

/// Comma-separated parameters such as `12,4,6`.
#[derive(Clone, Debug)]
struct Numbers(Vec<usize>);

impl std::ops::Deref for Numbers {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

fn triple<const N: usize>(s: &str) -> Result<Numbers, String> {
    let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse::<usize>()).collect();
    match parts {
        Ok(v) if v.len() == N => Ok(Numbers(v)),
        _ => Err(format!("expected {N} comma-separated non-negative integers")),
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) | CliError::Io(_) => 3,
        }
    }
}

enum Status {
    Ok,
    Violation,
}

fn read_graph(args: &InputArgs) -> Result<Graph, CliError> {
    let text = match &args.path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let format = args
        .format
        .map(GraphFormat::from)
        .unwrap_or_else(|| GraphDocument::sniff(&text));
    GraphDocument::decode(&text, format)
        .map(|d| d.graph)
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn print_json(value: &impl serde::Serialize) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn extremal(v: &[usize]) -> Result<ExtremalParams, CliError> {
    ExtremalParams::new(v[0], v[1], v[2]).map_err(|e| CliError::Usage(e.to_string()))
}

fn compute(args: &InputArgs) -> Result<Status, CliError> {
    let g = read_graph(args)?;
    let wiener = wiener_index(&g).map_err(|e| CliError::Parse(e.to_string()))?;
    let beta = matching_number(&g).ok().map(|m| m.0);
    let decomposition = decompose_unicyclic(&g).ok().map(|d| {
        let stats = DecompositionStats::from_decomposition(&d);
        let value = eval_decomposition(&stats).ok();
        json!({ "stats": stats, "wiener_from_decomposition": value })
    });
    print_json(&json!({
        "order": g.order(),
        "size": g.size(),
        "wiener": wiener,
        "girth": girth(&g),
        "beta": beta,
        "unicyclic": g.is_unicyclic(),
        "decomposition": decomposition,
    }))?;
    Ok(Status::Ok)
}

fn construct(args: &ConstructArgs) -> Result<Status, CliError> {
    let graph = match (&args.shape.star, &args.shape.gstar) {
        (Some(ab), _) => build_star_like(StarlikeParams::new(ab[0], ab[1])).tree,
        (_, Some(v)) => construct_gstar(extremal(v)?).map_err(|e| CliError::Usage(e.to_string()))?,
        _ => unreachable!("clap enforces one shape"),
    };
    print!("{}", GraphDocument::encode(graph, args.format.into()).payload);
    Ok(Status::Ok)
}

fn formula(args: &FormulaArgs) -> Result<Status, CliError> {
    let usage = |e: uniwiener_core::ConstructionError| CliError::Usage(e.to_string());
    let (name, value, direct) = if let Some(v) = &args.star {
        let (n, beta) = (v[0], v[1]);
        let value = eval_star_tree_formula(n, beta).map_err(usage)?;
        let tree = build_star_like(StarlikeParams::new(beta, n - 2 * beta - 1));
        ("star_tree", value, wiener_index(&tree.tree).expect("tree is connected"))
    } else {
        let (name, v) = match (&args.gstar_odd, &args.gstar_even) {
            (Some(v), _) => ("gstar_odd", v),
            (_, Some(v)) => ("gstar_even", v),
            _ => unreachable!("clap enforces one formula"),
        };
        let p = extremal(v)?;
        let value = if name == "gstar_odd" {
            eval_gstar_formula_odd(p)
        } else {
            eval_gstar_formula_even(p)
        }
        .map_err(usage)?;
        let direct = wiener_index(&construct_gstar(p).map_err(usage)?).expect("connected");
        (name, value, direct)
    };
    let matches = value == direct as i64;
    let note = if matches {
        "closed form agrees with the directly computed Wiener index".to_owned()
    } else {
        format!("closed form gives {value} but the constructed graph has Wiener index {direct}")
    };
    print_json(&json!({
        "formula": name,
        "value": value,
        "direct": direct,
        "matches_direct": matches,
        "note": note,
    }))?;
    Ok(Status::Ok)
}

fn reduce(args: &InputArgs) -> Result<Status, CliError> {
    let g = read_graph(args)?;
    if !g.is_unicyclic() {
        return Err(CliError::Parse("input graph is not unicyclic".into()));
    }
    match reduce_to_canonical(&g) {
        Ok(trace) => {
            print_json(&TraceDocument::from(&trace))?;
            Ok(Status::Ok)
        }
        Err(e) => {
            eprintln!("reduction failed: {e}");
            Ok(Status::Violation)
        }
    }
}

fn check_cap(n: usize) -> Result<(), CliError> {
    if n > MAX_N_CAP {
        return Err(CliError::Usage(format!(
            "order {n} exceeds the enumeration cap of {MAX_N_CAP}"
        )));
    }
    Ok(())
}

fn enumerate(args: &EnumerateArgs) -> Result<Status, CliError> {
    check_cap(args.n)?;
    let classes = gen_unicyclic(args.n, args.g).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    for class in classes {
        if args
            .beta
            .is_some_and(|b| matching_number(&class.graph).expect("unicyclic").0 != b)
        {
            continue;
        }
        out.write_all(
            GraphDocument::encode(class.graph, GraphFormat::Graph6)
                .payload
                .as_bytes(),
        )?;
    }
    out.flush()?;
    Ok(Status::Ok)
}

fn verify(args: &VerifyArgs) -> Result<Status, CliError> {
    check_cap(args.max_n)?;
    if args.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    if let Some(g) = args.girths.iter().find(|&&g| g < 3) {
        return Err(CliError::Usage(format!("girth {g} is below 3")));
    }
    let cfg = SweepConfig {
        max_n: args.max_n,
        girths: args.girths.clone(),
        require_hypothesis: args.strict_hypothesis,
        jobs: args.jobs,
    };
    let start = Instant::now();
    let outcome = verify_sweep(&cfg);
    let doc = ReportDocument::new(&cfg, &outcome);
    let body = match args.out {
        ReportFormat::Csv => doc.to_csv(),
        ReportFormat::Json => doc.to_json(),
    };
    io::stdout().lock().write_all(body.as_bytes())?;
    eprintln!(
        "verify: {} rows, {} violations, jobs={}, elapsed={:.3}s",
        doc.rows.len(),
        doc.violations.len(),
        args.jobs,
        start.elapsed().as_secs_f64()
    );
    Ok(if outcome.claim_holds() {
        Status::Ok
    } else {
        Status::Violation
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Construct(a) => construct(a),
        Command::Formula(a) => formula(a),
        Command::Reduce(a) => reduce(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
