//! `grassclique` command-line front end.

mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use grassclique::{
    analyze, census, gaussian_binomial, parse_matrix, rowspace, starlab::graph_summary, CensusRow,
    Field, GrassmannParams,
};

#[derive(Parser)]
#[command(
    name = "grassclique",
    version,
    about = "Stars, tops and maximal cliques of graphs of projective codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the star of one (k-1)-dimensional code and report it as JSON.
    Analyze(AnalyzeArgs),
    /// Classify every star centre for one parameter set.
    Census(CensusArgs),
    /// Print subspace, star and top counts.
    Count(CountArgs),
    /// Vertex, edge and component counts of the projective-code graph.
    Graph(GraphArgs),
    /// Run the bundled worked examples and consistency checks.
    Verify,
}

#[derive(Args)]
struct FieldArgs {
    /// Field order, a prime power up to 32.
    #[arg(long)]
    q: u32,
    /// Monic modulus coefficients, constant term first (e.g. 1,1,1 for x^2+x+1).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u8>>,
}

impl FieldArgs {
    fn field(&self) -> Result<Field> {
        Ok(match &self.modulus {
            Some(m) => Field::with_modulus(self.q, m)?,
            None => Field::new(self.q)?,
        })
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Ambient dimension; checked against the matrix when given.
    #[arg(long)]
    n: Option<usize>,
    /// Code dimension of the star members; checked against the matrix rank when given.
    #[arg(long)]
    k: Option<usize>,
    /// Generator matrix of the centre: rows separated by ';', entries by spaces.
    #[arg(
        long,
        conflicts_with = "matrix_file",
        required_unless_present = "matrix_file"
    )]
    matrix: Option<String>,
    /// File holding the generator matrix, one row per line.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
    /// Skip the enumeration size guard.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CensusArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct GraphArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Successful runs either agree everywhere or found a mismatch.
enum Outcome {
    Clean,
    Mismatch,
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn run_analyze(args: &AnalyzeArgs) -> Result<Outcome> {
    let field = args.field.field()?;
    let text = match (&args.matrix, &args.matrix_file) {
        (Some(m), _) => m.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        (None, None) => bail!("one of --matrix or --matrix-file is required"),
    };
    let s = rowspace(&parse_matrix(&text, &field)?)?;
    if let Some(n) = args.n {
        if n != s.ambient_dim() {
            bail!(
                "--n {n} does not match the {} matrix columns",
                s.ambient_dim()
            );
        }
    }
    if let Some(k) = args.k {
        if k != s.dim() + 1 {
            bail!(
                "--k {k} needs a centre of dimension {}, matrix has rank {}",
                k - 1,
                s.dim()
            );
        }
    }
    let report = analyze(&s, args.force)?;
    emit(args.output.out.as_deref(), &json(&report)?)?;
    Ok(if report.agree {
        Outcome::Clean
    } else {
        Outcome::Mismatch
    })
}

/// Column order of the census CSV.
const CSV_HEADER: [&str; 12] = [
    "s",
    "c",
    "class_sizes",
    "lS",
    "L_size",
    "predicted_size",
    "actual_size",
    "w_dim",
    "kind",
    "equals_top",
    "oracle_maximal",
    "agree",
];

fn census_csv(rows: &[CensusRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let sizes: Vec<String> = r.class_sizes.iter().map(usize::to_string).collect();
        w.write_record([
            r.s.to_string(),
            r.c.to_string(),
            sizes.join(" "),
            r.l_s.to_string(),
            r.big_l.to_string(),
            r.predicted_size.to_string(),
            r.actual_size.to_string(),
            r.w_dim.to_string(),
            format!("{:?}", r.kind),
            r.equals_top.to_string(),
            r.oracle_maximal.map_or(String::new(), |b| b.to_string()),
            r.agree.to_string(),
        ])?;
    }
    Ok(w.into_inner()?)
}

fn run_census(args: &CensusArgs) -> Result<Outcome> {
    let params = GrassmannParams::new(args.field.field()?, args.n, args.k)?;
    let start = Instant::now();
    let result = census(&params, args.jobs, args.force)?;
    let bytes = match args.format {
        Format::Json => json(&result)?,
        Format::Csv => census_csv(&result.rows)?,
    };
    emit(args.output.out.as_deref(), &bytes)?;
    let s = &result.summary;
    eprintln!(
        "census q={} n={} k={}: {} centres, {} stars, {} not maximal, {} empty, {} mismatches ({:.2?})",
        s.q, s.n, s.k, s.centres, s.star, s.not_maximal, s.empty, s.mismatches,
        start.elapsed()
    );
    Ok(if s.mismatches == 0 {
        Outcome::Clean
    } else {
        Outcome::Mismatch
    })
}

#[derive(Serialize)]
struct Counts {
    n: usize,
    k: usize,
    q: u32,
    grassmannian: u128,
    star_size: u128,
    top_size: u128,
}

fn run_count(args: &CountArgs) -> Result<Outcome> {
    let q = args.field.field()?.q();
    let (n, k) = (args.n as i64, args.k as i64);
    if k < 1 || k > n {
        bail!("need 1 <= k <= n, got n = {n}, k = {k}");
    }
    let counts = Counts {
        n: args.n,
        k: args.k,
        q,
        grassmannian: gaussian_binomial(n, k, q as u64)?,
        star_size: gaussian_binomial(n - k + 1, 1, q as u64)?,
        top_size: gaussian_binomial(k + 1, 1, q as u64)?,
    };
    emit(
        None,
        &serde_json::to_vec(&counts).map(|mut b| {
            b.push(b'\n');
            b
        })?,
    )?;
    Ok(Outcome::Clean)
}

fn run_graph(args: &GraphArgs) -> Result<Outcome> {
    let params = GrassmannParams::new(args.field.field()?, args.n, args.k)?;
    let summary = graph_summary(&params, args.force)?;
    let mut bytes = serde_json::to_vec(&summary)?;
    bytes.push(b'\n');
    emit(args.output.out.as_deref(), &bytes)?;
    Ok(Outcome::Clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(a) => run_analyze(a),
        Command::Census(a) => run_census(a),
        Command::Count(a) => run_count(a),
        Command::Graph(a) => run_graph(a),
        Command::Verify => verify::run(),
    };
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
