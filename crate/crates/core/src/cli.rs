//! The `cobcat` command-line tool.
//!
//! Data goes to standard output, diagnostics to standard error. Exit codes:
//! 0 success, 1 usage error, 2 validation error, 3 size limit exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::io::{gram_document, parse_morphism, parse_series, serialize_morphism};
use crate::partition::{enumerate_weighted_partitions, SizeLimit};
use crate::skein::{evaluate_morphism, evaluate_scalar, skein_reduce, Theory};
use crate::statespace::{gram_matrix, negligibility_witness, statespace_dim, trace_morphism};
use crate::{Morphism, SurfaceDiagram};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

/// Environment variable overriding the bound on `n + m`.
pub const SIZE_LIMIT_VAR: &str = "COBCAT_SIZE_LIMIT";

#[derive(Parser, Debug)]
#[command(name = "cobcat", version, about = "Exact computations with genus-decorated partition diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Generating function `Z(T) = num / den`, coefficients ascending.
#[derive(Args, Debug)]
struct Zfun {
    /// Numerator coefficients, e.g. `7/2` or `1,1`
    #[arg(long, allow_hyphen_values = true)]
    num: String,
    /// Denominator coefficients, e.g. `1,-1`
    #[arg(long, allow_hyphen_values = true)]
    den: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compose two morphisms (A first, then B)
    Compose {
        a: PathBuf,
        b: PathBuf,
        /// Evaluate closed components with `NUM:DEN`, e.g. `1:1,-1,-1`
        #[arg(long, allow_hyphen_values = true, conflicts_with = "free")]
        zfun: Option<String>,
        /// Keep closed components (the default)
        #[arg(long)]
        free: bool,
    },
    /// Skein normal form
    Reduce {
        x: PathBuf,
        #[command(flatten)]
        z: Zfun,
    },
    /// Evaluate closed components; prints a scalar for 0 -> 0 morphisms
    Eval {
        x: PathBuf,
        #[command(flatten)]
        z: Zfun,
    },
    /// Gram matrix of the gluing pairing on n circles
    Gram {
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        z: Zfun,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
    },
    /// State-space dimensions for 0..=max circles
    Dims {
        #[arg(long)]
        max: usize,
        #[command(flatten)]
        z: Zfun,
    },
    /// Trace of an endomorphism
    Trace {
        x: PathBuf,
        #[command(flatten)]
        z: Zfun,
    },
    /// Whether a morphism is negligible, with a witness if not
    Negligible {
        x: PathBuf,
        #[command(flatten)]
        z: Zfun,
    },
    /// List the weighted partitions D^m_n(<K)
    Basis {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'K')]
        k: u32,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Runs the tool. `size_limit` is the raw value of [`SIZE_LIMIT_VAR`], if set.
pub fn run<I, T>(args: I, size_limit: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let result = match size_limit.map(str::parse::<usize>) {
        None => dispatch(cli.command, SizeLimit::default(), out),
        Some(Ok(l)) => dispatch(cli.command, SizeLimit(l), out),
        Some(Err(_)) => Err(Failure::Usage(format!("{SIZE_LIMIT_VAR} must be a non-negative integer"))),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Lib(e @ Error::SizeLimit { .. }) => (EXIT_SIZE, e.to_string()),
                Failure::Lib(e) => (EXIT_VALIDATION, e.to_string()),
                Failure::Io(m) => (EXIT_VALIDATION, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn read_morphism(path: &Path) -> Result<Morphism, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_morphism(&text)?)
}

fn theory(z: &Zfun) -> Result<Theory, Failure> {
    Ok(Theory::new(parse_series(&z.num, &z.den)?))
}

fn dispatch(command: Command, limit: SizeLimit, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Compose { a, b, zfun, free: _ } => {
            let x = read_morphism(&a)?;
            let y = read_morphism(&b)?;
            let mut c = x.compose(&y)?;
            if let Some(spec) = zfun {
                let (num, den) = spec
                    .split_once(':')
                    .ok_or_else(|| Failure::Usage("--zfun expects NUM:DEN".into()))?;
                let th = Theory::new(parse_series(num, den)?);
                c = evaluate_morphism(&c, th.sequence());
            }
            writeln!(out, "{}", serialize_morphism(&c))?;
        }
        Command::Reduce { x, z } => {
            let x = read_morphism(&x)?;
            writeln!(out, "{}", serialize_morphism(&skein_reduce(&x, &theory(&z)?)))?;
        }
        Command::Eval { x, z } => {
            let x = read_morphism(&x)?;
            let th = theory(&z)?;
            if x.n() == 0 && x.m() == 0 {
                writeln!(out, "{}", evaluate_scalar(&x, th.sequence())?)?;
            } else {
                writeln!(out, "{}", serialize_morphism(&evaluate_morphism(&x, th.sequence())))?;
            }
        }
        Command::Gram { n, z, json, table: _ } => {
            let th = theory(&z)?;
            let g = gram_matrix(n, &th, limit)?;
            if json {
                let doc = gram_document(n, th.k(), &g);
                writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"))?;
            } else {
                writeln!(out, "n = {n}, K = {}, basis size {}", th.k(), g.basis.len())?;
                writeln!(out, "basis:")?;
                for (i, w) in g.basis.iter().enumerate() {
                    writeln!(out, "  {i}: {w}")?;
                }
                writeln!(out, "matrix:")?;
                write!(out, "{}", g.matrix)?;
                writeln!(out, "rank: {}", g.rank)?;
                writeln!(out, "kernel:")?;
                for v in &g.kernel {
                    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
                    writeln!(out, "  ({})", cells.join(", "))?;
                }
            }
        }
        Command::Dims { max, z } => {
            let th = theory(&z)?;
            limit.check(0, max)?;
            for k in 0..=max {
                writeln!(out, "{k} {}", statespace_dim(k, &th, limit)?)?;
            }
        }
        Command::Trace { x, z } => {
            let x = read_morphism(&x)?;
            writeln!(out, "{}", trace_morphism(&x, &theory(&z)?)?)?;
        }
        Command::Negligible { x, z } => {
            let x = read_morphism(&x)?;
            match negligibility_witness(&x, &theory(&z)?, limit)? {
                None => writeln!(out, "true")?,
                Some((cap, value)) => {
                    writeln!(out, "false")?;
                    let witness = serialize_morphism(&Morphism::from_diagram(cap));
                    writeln!(out, "{{\"witness\":{witness},\"pairing\":\"{value}\"}}")?;
                }
            }
        }
        Command::Basis { n, m, k } => {
            for w in enumerate_weighted_partitions(n, m, k, limit)? {
                writeln!(out, "{}", SurfaceDiagram::from_parts(w))?;
            }
        }
    }
    Ok(())
}
