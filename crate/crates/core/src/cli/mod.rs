//! Command-line front end.
//!
//! ```text
//! rankcp --input data.csv [--method divisive|agglomerative] [--alpha A]
//!        [--variant ustat|vstat] [--min-size N] [--perms R] [--level L]
//!        [--kappa segment-end|full-sweep] [--block B] [--grid halton|torus]
//!        [--seed S] [--max-change-points K] [--json OUT] [--plot OUT.svg]
//!        [--header] [--timing]
//! rankcp generate --spec "gaussian:100:0,0;gaussian:100:5,5" --out data.csv [--seed S]
//! ```
//!
//! Exit codes: 0 success, 1 input or runtime error, 2 usage error.

mod csv;
mod report;
mod svg;

pub use self::csv::{load_csv, parse_csv, write_csv};
pub use report::{emit_json, Method, ReportConfig, RunReport};
pub use svg::{emit_svg, render_svg, MAX_PANELS, PANEL_HEIGHT, SVG_WIDTH};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::datagen::{generate, parse_specs};
use crate::energy::{EnergyConfig, Variant};
use crate::error::Error;
use crate::grid::GridFamily;
use crate::segmentation::{agglomerative_detect, divisive_detect, DetectConfig, KappaMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rankcp",
    version,
    about = "Multiple change point detection with rank energy statistics",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    detect: DetectArgs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a synthetic series to CSV.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Divisive,
    Agglomerative,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Ustat,
    Vstat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KappaArg {
    SegmentEnd,
    FullSweep,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GridArg {
    Halton,
    Torus,
}

#[derive(Debug, Args)]
struct DetectArgs {
    /// CSV file, one observation per row.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "divisive")]
    method: MethodArg,
    /// Distance exponent in (0, 2].
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha: f64,
    #[arg(long, value_enum, default_value = "ustat")]
    variant: VariantArg,
    /// Minimum observations on each side of a split.
    #[arg(long, default_value_t = 2)]
    min_size: usize,
    /// Permutation replicates per significance test.
    #[arg(long, default_value_t = 199)]
    perms: usize,
    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    level: f64,
    #[arg(long, value_enum, default_value = "segment-end")]
    kappa: KappaArg,
    /// Initial block length (agglomerative only, default 2).
    #[arg(long)]
    block: Option<usize>,
    #[arg(long, value_enum, default_value = "halton")]
    grid: GridArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Stop after this many change points (divisive only).
    #[arg(long)]
    max_change_points: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write an SVG plot here.
    #[arg(long)]
    plot: Option<PathBuf>,
    /// The first CSV row is a header.
    #[arg(long)]
    header: bool,
    /// Record wall-clock time in the report (makes it non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Segments as `family:length:loc,..[:scale,..]` joined by `;`.
    #[arg(long)]
    spec: String,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Usage(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the CLI with process stdout/stderr and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let outcome = match cli.command {
        Some(Command::Generate(args)) => run_generate(&args, out),
        None => run_detect(&cli.detect, out, err),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn run_generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let specs = parse_specs(&args.spec).map_err(|e| Failure::Usage(e.to_string()))?;
    let series = generate(&specs, args.seed).map_err(|e| Failure::Usage(e.to_string()))?;
    write_csv(&series, &args.out)?;
    let _ = writeln!(
        out,
        "wrote {} rows x {} columns to {}",
        series.len(),
        series.dim(),
        args.out.display()
    );
    Ok(())
}

fn detect_config(args: &DetectArgs) -> Result<(Method, DetectConfig, Option<usize>), Failure> {
    let method = match args.method {
        MethodArg::Divisive => Method::Divisive,
        MethodArg::Agglomerative => Method::Agglomerative,
    };
    if method == Method::Divisive && args.block.is_some() {
        return Err(Failure::Usage(
            "--block only applies to --method agglomerative".into(),
        ));
    }
    if method == Method::Agglomerative && args.max_change_points.is_some() {
        return Err(Failure::Usage(
            "--max-change-points only applies to --method divisive".into(),
        ));
    }
    let cfg = DetectConfig {
        energy: EnergyConfig {
            alpha: args.alpha,
            variant: match args.variant {
                VariantArg::Ustat => Variant::UStat,
                VariantArg::Vstat => Variant::VStat,
            },
        },
        min_size: args.min_size,
        n_permutations: args.perms,
        sig_level: args.level,
        kappa_mode: match args.kappa {
            KappaArg::SegmentEnd => KappaMode::SegmentEnd,
            KappaArg::FullSweep => KappaMode::FullSweep,
        },
        grid: match args.grid {
            GridArg::Halton => GridFamily::Halton,
            GridArg::Torus => GridFamily::Torus,
        },
        seed: args.seed,
        max_change_points: args.max_change_points,
    };
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let block = match method {
        Method::Agglomerative => {
            let b = args.block.unwrap_or(2);
            let floor = cfg.energy.variant.min_side();
            if b < floor {
                return Err(Failure::Usage(format!("--block must be at least {floor}")));
            }
            Some(b)
        }
        Method::Divisive => None,
    };
    Ok((method, cfg, block))
}

fn run_detect(args: &DetectArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let input = args.input.as_ref().ok_or_else(|| {
        Failure::Usage("--input is required (or use the generate subcommand)".into())
    })?;
    let (method, cfg, block) = detect_config(args)?;

    let series = load_csv(input, args.header)?;
    let dups = series.duplicate_rows();
    if dups > 0 {
        let _ = writeln!(
            err,
            "warning: {dups} duplicate observation(s); tied points share mid-ranks"
        );
    }

    let started = Instant::now();
    let result = match method {
        Method::Divisive => divisive_detect(&series, &cfg)?,
        Method::Agglomerative => {
            agglomerative_detect(&series, block.expect("set for agglomerative"), &cfg)?.0
        }
    };
    let elapsed = started.elapsed().as_secs_f64();

    for cp in &result.change_points {
        let _ = writeln!(out, "{cp}");
    }
    if let Some(path) = &args.json {
        let report = RunReport::new(
            series.len(),
            series.dim(),
            method,
            &result,
            input.display().to_string(),
            block,
            args.timing.then_some(elapsed),
        );
        emit_json(&report, path)?;
    }
    if let Some(path) = &args.plot {
        if series.dim() > MAX_PANELS {
            let _ = writeln!(
                err,
                "note: plotting the first {MAX_PANELS} of {} dimensions",
                series.dim()
            );
        }
        emit_svg(&series, &result.change_points, path)?;
    }
    Ok(())
}
