//! Command-line front end: compile function specs into games, evaluate
//! games, extract value functions, verify and sample.
//!
//! Exit codes: 0 on success, 1 on input, parse or budget errors, 2 when a
//! verification finds a mismatch.

pub mod format;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use polygame::compiler::compile;
use polygame::value_function::{value_function_with_budget, DEFAULT_KERNEL_BUDGET};
use polygame::{parse_rat, to_decimal, verify, Rat};

use crate::format::{read_json, write_json, FunctionSpecFile, GameFile};

/// Environment variable overriding the kernel enumeration cap of `valuefn`.
pub const KERNEL_BUDGET_VAR: &str = "POLYGAME_KERNEL_BUDGET";

const DECIMAL_DIGITS: u32 = 20;

#[derive(Debug, Parser)]
#[command(name = "polygame", version, about = "Exact polynomial games and their value functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a piecewise rational function into a polynomial game.
    Compile {
        spec: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Write a human-readable compilation report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Exact value of a game at one parameter value.
    Eval {
        game: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Extract the value function of a (small) game.
    Valuefn {
        game: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Compare a game's values with a function at seeded sample points.
    Verify {
        game: PathBuf,
        spec: PathBuf,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write evenly spaced values of a game as CSV.
    Sample {
        game: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        #[arg(long)]
        count: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
}

/// What a successful command run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ok(String),
    Mismatch(String),
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        match self {
            Outcome::Ok(_) => 0,
            Outcome::Mismatch(_) => 2,
        }
    }

    pub fn text(&self) -> &str {
        match self {
            Outcome::Ok(t) | Outcome::Mismatch(t) => t,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Compile { spec, out, report } => cmd_compile(spec, out, report.as_deref()),
        Command::Eval { game, at } => cmd_eval(game, at),
        Command::Valuefn { game, out } => cmd_valuefn(game, out, kernel_budget()?),
        Command::Verify {
            game,
            spec,
            samples,
            seed,
        } => cmd_verify(game, spec, *samples as usize, *seed),
        Command::Sample {
            game,
            lo,
            hi,
            count,
            out,
        } => cmd_sample(game, lo, hi, *count, out),
    }
}

fn kernel_budget() -> Result<u64> {
    match std::env::var(KERNEL_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{KERNEL_BUDGET_VAR} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_KERNEL_BUDGET),
    }
}

fn parse_arg(text: &str, what: &str) -> Result<Rat> {
    parse_rat(text).with_context(|| format!("invalid {what}"))
}

fn exact_and_decimal(x: &Rat) -> String {
    format!("{x} ({})", to_decimal(x, DECIMAL_DIGITS))
}

pub fn cmd_compile(spec: &Path, out: &Path, report_path: Option<&Path>) -> Result<Outcome> {
    let u = read_json::<FunctionSpecFile>(spec)?.to_function()?;
    let (game, report) = compile(&u)?;
    write_json(out, &GameFile::from_game(&game))?;
    let mut text = String::new();
    writeln!(text, "function: {u}")?;
    write!(text, "{report}")?;
    if let Some(path) = report_path {
        std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Outcome::Ok(format!(
        "compiled {} pieces into a {} x {} game with {} splices\n",
        u.pieces().len(),
        game.rows(),
        game.cols(),
        report.witness_log.len()
    )))
}

pub fn cmd_eval(game: &Path, at: &str) -> Result<Outcome> {
    let g = read_json::<GameFile>(game)?.to_game()?;
    let z = parse_arg(at, "evaluation point")?;
    let v = g.value_at(&z);
    Ok(Outcome::Ok(format!("{v}\n{}\n", to_decimal(&v, DECIMAL_DIGITS))))
}

pub fn cmd_valuefn(game: &Path, out: &Path, budget: u64) -> Result<Outcome> {
    let g = read_json::<GameFile>(game)?.to_game()?;
    let f = value_function_with_budget(&g, budget)?;
    write_json(out, &FunctionSpecFile::from_function(&f))?;
    Ok(Outcome::Ok(format!("{f}\n")))
}

pub fn cmd_verify(game: &Path, spec: &Path, samples: usize, seed: u64) -> Result<Outcome> {
    let g = read_json::<GameFile>(game)?.to_game()?;
    let u = read_json::<FunctionSpecFile>(spec)?.to_function()?;
    let report = verify(&g, &u, samples, seed);
    let mut text = String::from("z\ttarget\tactual\tequal\n");
    for row in &report.verification {
        let target = row.target.as_ref().map_or("pole".to_string(), ToString::to_string);
        writeln!(text, "{}\t{}\t{}\t{}", row.z, target, row.actual, row.equal)?;
    }
    let bad: Vec<&Rat> = report.mismatches().map(|r| &r.z).collect();
    if bad.is_empty() {
        writeln!(text, "all {} points equal", report.verification.len())?;
        Ok(Outcome::Ok(text))
    } else {
        writeln!(text, "{} of {} points differ", bad.len(), report.verification.len())?;
        for z in bad {
            writeln!(text, "mismatch at z = {}", exact_and_decimal(z))?;
        }
        Ok(Outcome::Mismatch(text))
    }
}

pub fn cmd_sample(game: &Path, lo: &str, hi: &str, count: usize, out: &Path) -> Result<Outcome> {
    let g = read_json::<GameFile>(game)?.to_game()?;
    let lo = parse_arg(lo, "lower bound")?;
    let hi = parse_arg(hi, "upper bound")?;
    let rows = g.sample(&lo, &hi, count)?;
    let mut csv = String::from("z,value,z_dec,value_dec\n");
    for (z, v) in &rows {
        writeln!(
            csv,
            "{z},{v},{},{}",
            to_decimal(z, DECIMAL_DIGITS),
            to_decimal(v, DECIMAL_DIGITS)
        )?;
    }
    std::fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    Ok(Outcome::Ok(format!("wrote {} samples to {}\n", rows.len(), out.display())))
}
