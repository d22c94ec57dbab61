//! `gtbasis`: build and check explicit weight bases of irreducible
//! representations of `gl(n)` and `o(2n+1)`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input,
//! 3 the construction itself failed.

mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gtbasis_core::gl::{self, GlRepresentation};
use gtbasis_core::patterns::{
    enumerate_patterns_a, enumerate_patterns_b, GlHighestWeight, SoHighestWeight,
};
use gtbasis_core::so::{self, BuildOptions, Mode, SoRepresentation};
use gtbasis_core::verify::{self, Level, VerificationReport};
use gtbasis_core::{Error, Operator};

#[derive(Parser, Debug)]
#[command(
    name = "gtbasis",
    version,
    about = "Exact Gelfand-Tsetlin type bases for gl(n) and o(2n+1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the dimension given by the Weyl formula.
    Dim(Common),
    /// List the basis patterns.
    Patterns(Common),
    /// Build every generator matrix.
    Build(Common),
    /// Build and run the verification suite.
    Verify(Common),
    /// Restriction multiplicities to the rank n-1 subalgebra.
    Branch(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// A for gl(n), B for o(2n+1).
    #[arg(long = "type", value_enum)]
    algebra: AlgebraType,
    #[arg(long)]
    rank: usize,
    /// Comma-separated exact entries, e.g. `0,-1` or `-1/2,-3/2`.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file (atomically) instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "fast")]
    level: LevelArg,
    /// Refuse representations of larger dimension.
    #[arg(long, default_value_t = 1000)]
    cap: u64,
    /// Include every deformed matrix element as a function of the
    /// deformation parameter.
    #[arg(long)]
    deform_trace: bool,
    /// Fail instead of deforming when a matrix element has a vanishing
    /// denominator.
    #[arg(long)]
    no_deform: bool,
    /// Perturb one generator entry after building.
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlgebraType {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LevelArg {
    Fast,
    Full,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn construction(e: Error) -> Self {
        Failure {
            code: 3,
            message: e.to_string(),
        }
    }
}

enum Weight {
    A(GlHighestWeight),
    B(SoHighestWeight),
}

enum Rep {
    A(GlRepresentation),
    B(SoRepresentation),
}

fn parse_weight(c: &Common) -> Result<Weight, Failure> {
    let parts: Vec<&str> = c.weight.split(',').map(str::trim).collect();
    if parts.len() != c.rank {
        return Err(Failure::input(format!(
            "weight has {} entries but rank is {}",
            parts.len(),
            c.rank
        )));
    }
    if c.rank == 0 {
        return Err(Failure::input("rank must be at least 1"));
    }
    let invalid = |e: Error| Failure::input(e.to_string());
    Ok(match c.algebra {
        AlgebraType::A => Weight::A(GlHighestWeight::parse(&parts).map_err(invalid)?),
        AlgebraType::B => Weight::B(SoHighestWeight::parse(&parts).map_err(invalid)?),
    })
}

fn dimension(w: &Weight) -> Result<u64, Failure> {
    match w {
        Weight::A(hw) => verify::weyl_dim_a(hw),
        Weight::B(hw) => verify::weyl_dim_b(hw.entries()),
    }
    .map_err(|e| Failure::input(e.to_string()))
}

fn within_cap(c: &Common, w: &Weight) -> Result<u64, Failure> {
    let dim = dimension(w)?;
    if dim > c.cap {
        return Err(Failure::input(
            Error::CapExceeded { dim, cap: c.cap }.to_string(),
        ));
    }
    Ok(dim)
}

fn build(c: &Common, w: &Weight) -> Result<Rep, Failure> {
    within_cap(c, w)?;
    let mut rep = match w {
        Weight::A(hw) => Rep::A(gl::build_gl(hw)),
        Weight::B(hw) => {
            let mode = if c.no_deform {
                Mode::Undeformed
            } else {
                Mode::Auto
            };
            let options = BuildOptions {
                mode,
                trace: c.deform_trace,
            };
            Rep::B(so::build_so_with(hw, options).map_err(Failure::construction)?)
        }
    };
    if c.corrupt {
        let gens = match &mut rep {
            Rep::A(r) => r.gens_mut(),
            Rep::B(r) => r.gens_mut(),
        };
        corrupt(gens);
    }
    Ok(rep)
}

/// Add one to the first stored entry of the first nonzero raising
/// generator `(i, j)`, `0 ≤ i < j`, or to entry `(0, 0)` of the first such
/// generator if all vanish.
fn corrupt(gens: &mut std::collections::BTreeMap<(i32, i32), Operator>) {
    let raising: Vec<(i32, i32)> = gens
        .keys()
        .copied()
        .filter(|&(i, j)| 0 <= i && i < j)
        .collect();
    let key = raising
        .iter()
        .copied()
        .find(|k| !gens[k].is_zero())
        .unwrap_or_else(|| {
            *raising
                .first()
                .unwrap_or_else(|| gens.keys().next().expect("at least one generator"))
        });
    let m = gens.get_mut(&key).expect("key present");
    let (r, col, v) = m
        .entries()
        .into_iter()
        .next()
        .unwrap_or((0, 0, Default::default()));
    m.set(r, col, v + gtbasis_core::Rational::from_integer(1.into()));
}

fn level(c: &Common) -> Level {
    match c.level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    }
}

/// Text to emit and whether every check passed.
fn run(command: &Command) -> Result<(String, bool), Failure> {
    match command {
        Command::Dim(c) => {
            let w = parse_weight(c)?;
            let d = dimension(&w)?;
            let text = match c.format {
                Some(Format::Json) => output::to_json(&json!({ "dimension": d })),
                _ => format!("{d}\n"),
            };
            Ok((text, true))
        }
        Command::Patterns(c) => {
            let w = parse_weight(c)?;
            within_cap(c, &w)?;
            let basis: Vec<Value> = match &w {
                Weight::A(hw) => enumerate_patterns_a(hw)
                    .iter()
                    .map(output::pattern_a)
                    .collect(),
                Weight::B(hw) => enumerate_patterns_b(hw)
                    .iter()
                    .map(output::pattern_b)
                    .collect(),
            };
            let text = match c.format {
                Some(Format::Csv) => output::patterns_csv(&w),
                _ => output::to_json(&json!({
                    "algebra": output::algebra(c.algebra == AlgebraType::A, c.rank),
                    "highest_weight": output::highest_weight(&w),
                    "dimension": basis.len(),
                    "basis": basis,
                })),
            };
            Ok((text, true))
        }
        Command::Build(c) => {
            let w = parse_weight(c)?;
            let rep = build(c, &w)?;
            let text = match c.format {
                Some(Format::Csv) => output::operators_csv(&rep),
                _ => output::to_json(&output::representation(&rep, c.deform_trace)),
            };
            Ok((text, true))
        }
        Command::Verify(c) => {
            let w = parse_weight(c)?;
            let rep = build(c, &w)?;
            let report: VerificationReport = match &rep {
                Rep::A(r) => verify::verify_gl(r, level(c), c.cap),
                Rep::B(r) => verify::verify_so(r, level(c), c.cap),
            };
            let text = match c.format {
                Some(Format::Csv) => output::report_csv(&report),
                _ => output::to_json(&output::report(&report)),
            };
            Ok((text, report.passed()))
        }
        Command::Branch(c) => {
            let w = parse_weight(c)?;
            let text = match &w {
                Weight::A(hw) => output::betweenness(hw, c.format),
                Weight::B(hw) => {
                    output::branching(hw, c.format).map_err(|e| Failure::input(e.to_string()))?
                }
            };
            Ok((text, true))
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Dim(c)
        | Command::Patterns(c)
        | Command::Build(c)
        | Command::Verify(c)
        | Command::Branch(c) => c,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        None => std::io::stdout().lock().write_all(text.as_bytes()),
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
                _ => PathBuf::from("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(text.as_bytes())?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((text, passed)) => {
            if let Err(e) = emit(&text, common(&cli.command).out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
