use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use catsim::config::{parse_real, ConfigError, ConfigLayer, SweepConfig};
use catsim::figure::{self, Figure, DEFAULT_RESOLUTION};
use catsim::{sweep, verify};
use clap::{Args, Parser, Subcommand};

const EXIT_INVALID: u8 = 1;
const EXIT_VERIFY: u8 = 2;

#[derive(Parser)]
#[command(name = "catsim", version, about = "Entanglement of coherent-state qubits through a lossy channel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every grid point and write one CSV row each.
    Sweep(SweepArgs),
    /// Write the data behind figure 1 to 5.
    Figure {
        #[arg(allow_negative_numbers = true)]
        id: i64,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run every cross-check and print a report.
    Verify {
        /// Override a tolerance, e.g. `--tol oracle.gram-vs-fock=1e-7`.
        #[arg(long = "tol", value_name = "NAME=VALUE")]
        tol: Vec<String>,
        #[arg(long)]
        threads: Option<usize>,
        /// Shift the pair flip probability used by the factorised route.
        #[arg(long, hide = true, default_value_t = 0.0, allow_negative_numbers = true)]
        inject_pair_flip_offset: f64,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// `key = value` file; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true)]
    alpha_min: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    alpha_max: Option<String>,
    #[arg(long)]
    alpha_steps: Option<String>,
    /// Comma list or start:stop:count.
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    theta: Option<String>,
    #[arg(long)]
    w: Option<String>,
    /// Comma list of odd repetition counts.
    #[arg(long)]
    code: Option<String>,
    /// all, general, xmatrix, evolution or oracle.
    #[arg(long)]
    route: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<String>,
}

impl SweepArgs {
    fn into_layer(self) -> Result<ConfigLayer, ConfigError> {
        let mut layer = ConfigLayer::default();
        let flags: [(&'static str, Option<String>); 10] = [
            ("alpha-min", self.alpha_min),
            ("alpha-max", self.alpha_max),
            ("alpha-steps", self.alpha_steps),
            ("eta", self.eta),
            ("theta", self.theta),
            ("w", self.w),
            ("code", self.code),
            ("route", self.route),
            ("threads", self.threads),
            ("out", self.out.map(|p| p.display().to_string())),
        ];
        for (flag, value) in flags {
            if let Some(v) = value {
                layer
                    .set(flag, &v)
                    .map_err(|message| ConfigError::Flag { flag, message })?;
            }
        }
        Ok(layer)
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn open_out(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn output_error(path: Option<&PathBuf>, e: io::Error) -> ExitCode {
    let target = path.map_or_else(|| "standard output".to_string(), |p| p.display().to_string());
    fail(EXIT_INVALID, format!("cannot write {target}: {e}"))
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let file = match &args.config {
        Some(p) => match ConfigLayer::load(p) {
            Ok(l) => l,
            Err(e) => return fail(EXIT_INVALID, e),
        },
        None => ConfigLayer::default(),
    };
    let cfg = match args
        .into_layer()
        .and_then(|flags| SweepConfig::from_layer(file.overlay(flags)))
    {
        Ok(c) => c,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    let rows = match sweep::run(&cfg) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    let written = open_out(cfg.out.as_ref()).and_then(|mut w| sweep::write_csv(&rows, &mut w));
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => output_error(cfg.out.as_ref(), e),
    }
}

fn cmd_figure(id: i64, resolution: usize, out: Option<PathBuf>, threads: Option<usize>) -> ExitCode {
    let fig = match Figure::from_id(id) {
        Ok(f) => f,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    let (header, body) = match pool.install(|| figure::rows(fig, resolution)) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    match open_out(out.as_ref()).and_then(|mut w| figure::write_csv(&header, &body, &mut w)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => output_error(out.as_ref(), e),
    }
}

fn cmd_verify(tol: Vec<String>, threads: Option<usize>, offset: f64) -> ExitCode {
    let mut tolerances = BTreeMap::new();
    for t in tol {
        let Some((name, value)) = t.split_once('=') else {
            return fail(EXIT_INVALID, format!("--tol expects NAME=VALUE, got '{t}'"));
        };
        match parse_real(value) {
            Ok(v) if v >= 0.0 => {
                tolerances.insert(name.trim().to_string(), v);
            }
            Ok(v) => return fail(EXIT_INVALID, format!("--tol {name}: tolerance must be non-negative, got {v}")),
            Err(e) => return fail(EXIT_INVALID, format!("--tol {name}: {e}")),
        }
    }
    let opts = verify::VerifyOptions {
        tolerances,
        pair_flip_offset: offset,
        threads,
    };
    let report = match verify::run(&opts) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID, e),
    };
    print!("{report}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Sweep(args) => cmd_sweep(args),
        Command::Figure {
            id,
            resolution,
            out,
            threads,
        } => cmd_figure(id, resolution, out, threads),
        Command::Verify {
            tol,
            threads,
            inject_pair_flip_offset,
        } => cmd_verify(tol, threads, inject_pair_flip_offset),
    }
}
