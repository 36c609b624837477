//! Command-line front end.
//!
//! Exit codes: 0 when the result is certified, 2 when it is not, 1 on any
//! error. `CERTILINK_THREADS` sets the worker count used by `--parallel`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench;
use crate::chain::chain_linking;
use crate::error::{Error, Result};
use crate::generate;
use crate::io::{ChainFile, CurveFile};
use crate::linking::{linking_number_with, writhe_with, LinkOptions, PolygonalCurve, Precision};
use crate::oracle;

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNCERTIFIED: i32 = 2;

/// Environment variable overriding the number of worker threads.
pub const THREADS_ENV: &str = "CERTILINK_THREADS";

#[derive(Debug, Parser)]
#[command(name = "certilink", version, about = "Certified linking numbers and writhe of polygonal curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Linking number of two curves in a curve file.
    Link(PairArgs),
    /// Writhe of one curve in a curve file.
    Writhe(WritheArgs),
    /// Linking number of two weighted chains in a chain file.
    ChainLink(PairArgs),
    /// Write a curve file with a generated link or knot.
    Gen(GenArgs),
    /// Compare the certified linking number with both reference oracles.
    Verify(PairArgs),
    /// Time the Hopf link over power-of-two sizes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum PrecisionArg {
    #[default]
    Double,
    Single,
}

impl From<PrecisionArg> for Precision {
    fn from(p: PrecisionArg) -> Precision {
        match p {
            PrecisionArg::Double => Precision::Double,
            PrecisionArg::Single => Precision::Single,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_enum, default_value_t = PrecisionArg::Double)]
    pub precision: PrecisionArg,
    /// Fold the pair grid on a thread pool (result is identical for any
    /// thread count).
    #[arg(long)]
    pub parallel: bool,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

impl ComputeArgs {
    fn options(&self) -> LinkOptions {
        LinkOptions {
            precision: self.precision.into(),
            parallel: self.parallel,
            ..Default::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct PairArgs {
    pub file: PathBuf,
    /// First component; defaults to the first one in the file.
    #[arg(long)]
    pub a: Option<String>,
    /// Second component; defaults to the second one in the file.
    #[arg(long)]
    pub b: Option<String>,
    #[command(flatten)]
    pub compute: ComputeArgs,
}

#[derive(Debug, Args)]
pub struct WritheArgs {
    pub file: PathBuf,
    /// Curve name; defaults to the first curve in the file.
    #[arg(long)]
    pub curve: Option<String>,
    #[command(flatten)]
    pub compute: ComputeArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Hopf,
    Unlink,
    Torus,
    Trefoil,
    Random,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Torus link parameter: T(2, 2k).
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Seed of the random generator.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Segments per curve.
    #[arg(long, default_value_t = 64)]
    pub segments: usize,
    /// Output path; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 8)]
    pub min: usize,
    #[arg(long, default_value_t = 1024)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = PrecisionArg::Double)]
    pub precision: PrecisionArg,
    #[arg(long)]
    pub parallel: bool,
    /// Also write the rows as CSV to this path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_CERTIFIED };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Configures the global thread pool from `CERTILINK_THREADS` if set.
pub fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("{THREADS_ENV}={v:?} is not a thread count")))?;
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn exit_for(certified: bool) -> i32 {
    if certified {
        EXIT_CERTIFIED
    } else {
        EXIT_UNCERTIFIED
    }
}

fn status(certified: bool) -> &'static str {
    if certified {
        "certified"
    } else {
        "uncertified"
    }
}

fn curve_pair(file: &CurveFile, a: &Option<String>, b: &Option<String>) -> Result<(PolygonalCurve, PolygonalCurve)> {
    let p = match a {
        Some(name) => file.curve(name)?,
        None => file.curve_at(0)?,
    };
    let q = match b {
        Some(name) => file.curve(name)?,
        None => file.curve_at(1)?,
    };
    Ok((p, q))
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    configure_threads()?;
    match command {
        Command::Link(args) => {
            let file = CurveFile::load(&args.file)?;
            let (p, q) = curve_pair(&file, &args.a, &args.b)?;
            let start = Instant::now();
            let r = linking_number_with(&p, &q, &args.compute.options())?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            print_link(out, args.compute.json, r.result.value, r.result.err_bound_u, r.result.certified, r.pairs, ms)?;
            Ok(exit_for(r.result.certified))
        }
        Command::ChainLink(args) => {
            let file = ChainFile::load(&args.file)?;
            let c1 = match &args.a {
                Some(name) => file.chain(name)?,
                None => file.chain_at(0)?,
            };
            let c2 = match &args.b {
                Some(name) => file.chain(name)?,
                None => file.chain_at(1)?,
            };
            let start = Instant::now();
            let r = chain_linking(&c1, &c2, &args.compute.options())?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            print_link(out, args.compute.json, r.result.value, r.result.err_bound_u, r.result.certified, r.pairs, ms)?;
            Ok(exit_for(r.result.certified))
        }
        Command::Writhe(args) => {
            let file = CurveFile::load(&args.file)?;
            let c = match &args.curve {
                Some(name) => file.curve(name)?,
                None => file.curve_at(0)?,
            };
            let start = Instant::now();
            let r = writhe_with(&c, &args.compute.options())?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let v = r.result;
            if args.compute.json {
                let doc = json!({
                    "writhe": v.value,
                    "error_bound_u": v.err_bound_u,
                    "certified": v.certified,
                    "pairs": r.pairs,
                    "elapsed_ms": ms,
                });
                writeln!(out, "{doc}")?;
            } else {
                let abs = v.err_bound_u * r.unit_roundoff() / (2.0 * std::f64::consts::PI);
                writeln!(
                    out,
                    "W = {} ± {:.1e} ({}, bound {:.1e} u)",
                    v.value,
                    abs,
                    status(v.certified),
                    v.err_bound_u
                )?;
            }
            Ok(exit_for(v.certified))
        }
        Command::Gen(args) => {
            let file = generated(args)?;
            let text = file.to_json();
            match &args.output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_CERTIFIED)
        }
        Command::Verify(args) => verify(args, out),
        Command::Bench(args) => {
            let options = LinkOptions {
                precision: args.precision.into(),
                parallel: args.parallel,
                ..Default::default()
            };
            let mut rows = Vec::new();
            writeln!(out, "{:>6} {:>6} {:>10} {:>5} {:>12} {:>11} {:>12} {:>14}", "n", "m", "pairs", "L", "bound_u", "certified", "ms", "pairs/s")?;
            for n in bench::sizes(args.min, args.max) {
                let r = bench::run_one(n, &options)?;
                writeln!(
                    out,
                    "{:>6} {:>6} {:>10} {:>5} {:>12.4e} {:>11} {:>12.3} {:>14.4e}",
                    r.n,
                    r.m,
                    r.pairs,
                    r.value,
                    r.bound_u,
                    r.certified,
                    r.elapsed_ms,
                    r.pairs_per_second()
                )?;
                rows.push(r);
            }
            if rows.len() >= 2 {
                writeln!(out, "budget per pair (fit): {:.3} u", bench::budget_slope(&rows))?;
            }
            if let Some(path) = &args.csv {
                let mut w = BufWriter::new(File::create(path)?);
                bench::write_csv(&rows, &mut w)?;
                w.flush()?;
            }
            Ok(EXIT_CERTIFIED)
        }
    }
}

fn print_link(out: &mut dyn Write, as_json: bool, value: i64, bound: f64, certified: bool, pairs: u64, ms: f64) -> Result<()> {
    if as_json {
        let doc = json!({
            "linking_number": value,
            "error_bound_u": bound,
            "certified": certified,
            "pairs": pairs,
            "elapsed_ms": ms,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "L = {value} ({}, bound {bound:.1e} u)", status(certified))?;
    }
    Ok(())
}

fn generated(args: &GenArgs) -> Result<CurveFile> {
    let n = args.segments;
    if n < 3 {
        return Err(Error::CurveTooSmall { len: n });
    }
    let file = match args.kind {
        GenKind::Hopf => {
            let (p, q) = generate::hopf(n);
            CurveFile::new().with("a", &p).with("b", &q)
        }
        GenKind::Unlink => {
            let (p, q) = generate::unlink(n);
            CurveFile::new().with("a", &p).with("b", &q)
        }
        GenKind::Torus => {
            if args.k == 0 {
                return Err(Error::InvalidInput("torus link needs k >= 1".into()));
            }
            let (p, q) = generate::torus_link(args.k, n);
            CurveFile::new().with("a", &p).with("b", &q)
        }
        GenKind::Trefoil => CurveFile::new().with("trefoil", &generate::trefoil(n)),
        GenKind::Random => {
            let (p, q) = generate::random_link(args.seed, n);
            CurveFile::new().with("a", &p).with("b", &q)
        }
    };
    Ok(file)
}

fn verify(args: &PairArgs, out: &mut dyn Write) -> Result<i32> {
    let file = CurveFile::load(&args.file)?;
    let (p, q) = curve_pair(&file, &args.a, &args.b)?;
    let r = linking_number_with(&p, &q, &args.compute.options())?;
    let projected = oracle::linking_by_projection(&p, &q, oracle::default_direction())?;
    let quad = oracle::linking_by_quadrature(&p, &q)?;
    let nearest = quad.round() as i64;
    let oracles_agree = projected == nearest;
    let matches = oracles_agree && r.result.value == projected;
    let verdict = if !r.result.certified {
        "UNCERTIFIED"
    } else if matches {
        "AGREE"
    } else {
        "DISAGREE"
    };
    if args.compute.json {
        let doc = json!({
            "linking_number": r.result.value,
            "error_bound_u": r.result.err_bound_u,
            "certified": r.result.certified,
            "projection": projected,
            "quadrature": quad.to_f64(),
            "matches": matches,
            "verdict": verdict,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(
            out,
            "certified path: L = {} ({}, bound {:.1e} u)",
            r.result.value,
            status(r.result.certified),
            r.result.err_bound_u
        )?;
        writeln!(out, "projection:     L = {projected}")?;
        writeln!(out, "quadrature:     L = {:.15} (nearest {nearest})", quad.to_f64())?;
        if r.result.certified {
            writeln!(out, "{verdict}")?;
        } else {
            let note = if matches { "value matches the oracles" } else { "value differs from the oracles" };
            writeln!(out, "{verdict} ({note})")?;
        }
    }
    Ok(match verdict {
        "AGREE" => EXIT_CERTIFIED,
        "UNCERTIFIED" => EXIT_UNCERTIFIED,
        _ => EXIT_ERROR,
    })
}
