//! Command-line front end for the cubeiso library.
//!
//! One verb per module surface: `analyze` reports boundary/excess/influence
//! quantities for a set file, `decompose` approximates a set by disjoint
//! subcubes and re-verifies the output, `verify` runs a named suite, and
//! `gen` writes seeded corpus files.
//!
//! Exit codes: 0 success (and all trials passed), 1 a suite or verifier
//! reported failures, 2 usage or input error, 3 the request is valid but
//! beyond a capability limit (exhaustive enumeration caps and the like).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use cubeiso::{
    decompose, generate, influence_profile, iso_report, mutual_information, read_set_file,
    run_suite, section_table, talagrand_ratio, verify_decomposition, CoordSet, DecomposeConfig,
    GeneratorSpec, Mode, ReportFormat, SuiteName, SuiteParams,
};

#[derive(Parser)]
#[command(
    name = "cubeiso",
    version,
    about = "Edge isoperimetry on the hypercube: analysis, decomposition, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boundary, excess, and influence report for a set file.
    Analyze(AnalyzeArgs),
    /// Approximate a set by disjoint subcubes, then re-verify the output.
    Decompose(DecomposeArgs),
    /// Run a verification suite and emit its report.
    Verify(VerifyArgs),
    /// Generate a set file from a seeded family.
    Gen(GenArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Set file to analyze.
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated coordinate list; adds the section table along these
    /// coordinates and, for a proper subset, the mutual information across
    /// the split.
    #[arg(long, value_name = "LIST")]
    i_coords: Option<String>,
    /// Output path; defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Set file to decompose.
    #[arg(long)]
    input: PathBuf,
    /// Approximation budget: the output may differ from the input on at
    /// most eps·|A| vertices.
    #[arg(long)]
    eps: f64,
    /// Excess threshold for the nearest-subcube base case.
    #[arg(long, default_value_t = DecomposeConfig::default().kappa0)]
    kappa0: f64,
    /// Largest dimension searched exhaustively in the base case.
    #[arg(long, default_value_t = DecomposeConfig::default().exh_dim)]
    exh_dim: usize,
    /// Largest half-to-budget ratio that is dropped instead of recursed.
    #[arg(long, default_value_t = DecomposeConfig::default().drop_frac)]
    drop_frac: f64,
    /// Output path; defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: iso, sections, product, hyper, sparse, talagrand,
    /// influence, or decomp.
    #[arg(long)]
    suite: String,
    /// Cube dimension for the suite's inputs.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Input selection: exhaustive (all subsets, n <= 4) or random.
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    /// Trials in random mode.
    #[arg(long, default_value_t = 100)]
    samples: u64,
    /// Tolerance parameter for the product and decomp suites.
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    /// Seed for all suite randomness.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report encoding: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path; defaults to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Family: cube-union, noisy-cube, density, or harper.
    #[arg(long)]
    family: String,
    /// Cube dimension.
    #[arg(long)]
    n: usize,
    /// Seed for the family's randomness.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of cubes in a cube-union.
    #[arg(long, default_value_t = 2)]
    cubes: usize,
    /// Smallest codimension of a planted cube.
    #[arg(long, default_value_t = 2)]
    codim_min: usize,
    /// Largest codimension of a planted cube.
    #[arg(long, default_value_t = 4)]
    codim_max: usize,
    /// Membership flip probability for cube-union and noisy-cube.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// Inclusion probability for the density family.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Member count for the harper family.
    #[arg(long, default_value_t = 0)]
    count: u64,
    /// Set file to write.
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            match err.downcast_ref::<cubeiso::Error>() {
                Some(cubeiso::Error::Capability(_)) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Decompose(args) => run_decompose(args),
        Command::Verify(args) => verify(args),
        Command::Gen(args) => gen(args),
    }
}

/// Writes to the path, or to standard output when no path is given.
fn emit(out: Option<&Path>, body: &str) -> Result<()> {
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => std::fs::write(path, body)
            .with_context(|| format!("writing {}", path.display())),
    }
}

fn parse_coords(list: &str, n: usize) -> Result<CoordSet> {
    let coords: Vec<usize> = list
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .with_context(|| format!("coordinate {part:?} is not a number"))
        })
        .collect::<Result<_>>()?;
    Ok(CoordSet::from_coords(&coords, n)?)
}

fn analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let a = read_set_file(&args.input)?;
    let iso = iso_report(&a)?;
    let profile = influence_profile(&a)?;
    let mut doc = json!({
        "n": a.n(),
        "size": a.len(),
        "iso": iso,
        "influences": {
            "per_coordinate": profile.influences(),
            "crossings": (1..=a.n()).map(|i| profile.crossings(i)).collect::<Vec<_>>(),
        },
    });
    if !a.is_full() {
        let talagrand = talagrand_ratio(&a)?;
        doc["influences"]["max_coordinate"] = json!(profile.max_direction());
        doc["talagrand"] = serde_json::to_value(&talagrand)?;
    }
    if let Some(list) = &args.i_coords {
        let i = parse_coords(list, a.n())?;
        let table = section_table(&a, i)?;
        doc["sections"] = serde_json::to_value(&table)?;
        if !i.is_empty() && i != CoordSet::full(a.n()) {
            doc["mutual_information"] = json!(mutual_information(&a, i)?);
        }
    }
    emit(args.out.as_deref(), &format!("{:#}\n", doc))?;
    Ok(ExitCode::SUCCESS)
}

fn run_decompose(args: DecomposeArgs) -> Result<ExitCode> {
    let a = read_set_file(&args.input)?;
    let cfg = DecomposeConfig {
        kappa0: args.kappa0,
        exh_dim: args.exh_dim,
        drop_frac: args.drop_frac,
        ..DecomposeConfig::default()
    };
    let result = decompose(&a, args.eps, &cfg)?;
    let verification = verify_decomposition(&a, &result, args.eps);
    let doc = json!({
        "eps": args.eps,
        "result": result,
        "verified": verification.is_ok(),
        "verify_failure": verification.as_ref().err().map(|f| f.to_string()),
    });
    emit(args.out.as_deref(), &format!("{:#}\n", doc))?;
    Ok(if verification.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let name: SuiteName = args.suite.parse::<SuiteName>()?;
    let mode: Mode = args.mode.parse::<Mode>()?;
    let format: ReportFormat = args.format.parse::<ReportFormat>()?;
    let params = SuiteParams {
        n: args.n,
        mode,
        samples: args.samples,
        eps: args.eps,
    };
    let report = run_suite(name, &params, args.seed)?;
    let body = cubeiso::render_report(&report, format)?;
    emit(args.out.as_deref(), &body)?;
    Ok(if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let spec = match args.family.as_str() {
        "cube-union" => GeneratorSpec::CubeUnion {
            n: args.n,
            cubes: args.cubes,
            codim: args.codim_min..=args.codim_max,
            noise: args.noise,
            seed: args.seed,
        },
        "noisy-cube" => GeneratorSpec::NoisyCube {
            n: args.n,
            codim: args.codim_min..=args.codim_max,
            noise: args.noise,
            seed: args.seed,
        },
        "density" => GeneratorSpec::DensityRandom {
            n: args.n,
            density: args.density,
            seed: args.seed,
        },
        "harper" => GeneratorSpec::HarperSegment {
            n: args.n,
            count: args.count,
        },
        other => anyhow::bail!(
            "unknown family {other:?}; expected cube-union, noisy-cube, density, or harper"
        ),
    };
    let generated = generate(&spec)?;
    cubeiso::write_set_file(&generated.set, &args.out)?;
    let summary = json!({
        "family": args.family,
        "n": generated.set.n(),
        "size": generated.set.len(),
        "out": args.out.display().to_string(),
        "planted": generated.planted,
    });
    println!("{summary:#}");
    Ok(ExitCode::SUCCESS)
}
