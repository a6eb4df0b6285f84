//! `commutator`: exact commutator decompositions and similarity normal forms
//! from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 precondition violation,
//! 64 usage or parse error.

mod commands;
mod rings;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use commutator_core::gen::{trace_zero_int, trace_zero_mod, trace_zero_poly};
use commutator_core::json::{descriptor_from_json, descriptor_to_json, matrix_to_json};
use commutator_core::ring::RingDescriptor;
use commutator_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use rings::{parse_ring_flag, AnyRing};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "commutator",
    version,
    about = "Exact commutator decompositions over Z, Fp[x] and Z/N"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Io {
    /// Z, Z/N, F<p>[x]; must match the input's ring tag when both are given.
    #[arg(long)]
    ring: Option<String>,
    /// Input file, `-` for stdin, or inline JSON. Defaults to stdin.
    #[arg(long = "in")]
    input: Option<String>,
    /// Output file. Defaults to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Write each trace-zero matrix as XY - YX.
    Decompose {
        #[command(flatten)]
        io: Io,
        /// 3x3 only: choose X regular modulo every prime.
        #[arg(long)]
        regular_x: bool,
    },
    /// Laffey-Reams normal form with its conjugation witness.
    NormalForm {
        #[command(flatten)]
        io: Io,
    },
    /// A similar matrix with zero diagonal.
    ZeroDiag {
        #[command(flatten)]
        io: Io,
    },
    /// Commutator decomposition over a prime field Z/p with X regular.
    FieldDecompose {
        #[command(flatten)]
        io: Io,
    },
    /// Recompute XY - YX or gAg^-1 and compare exactly.
    Verify {
        #[command(flatten)]
        io: Io,
        /// Also re-check modulo small primes with brute-force arithmetic.
        #[arg(long)]
        oracle: bool,
    },
    /// Seeded random trace-zero instances.
    Gen {
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Entry bound over Z, degree bound over Fp[x]; ignored over Z/N.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regularity certificate for a matrix.
    RegularCheck {
        #[command(flatten)]
        io: Io,
        /// Cross-check against exhaustive vector enumeration.
        #[arg(long)]
        oracle: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_USAGE,
            Error::WitnessInvalid(_)
            | Error::Internal(_)
            | Error::DescentStuck(_)
            | Error::NotCertified(_)
            | Error::NotInCentralizer(_)
            | Error::NoSolution(_) => EXIT_VERIFY,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_input(input: Option<&str>) -> Result<Value, Failure> {
    let text = match input {
        Some(s) if s.trim_start().starts_with(['{', '[']) => s.to_string(),
        Some(path) if path != "-" => fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?,
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))
}

/// A single job or a batch (an array, or an object with `instances` or
/// `results`), plus header fields to carry over.
fn split_batch(v: &Value) -> (Vec<&Value>, bool, Option<&Value>) {
    match v {
        Value::Array(items) => (items.iter().collect(), true, None),
        Value::Object(o) => match o
            .get("instances")
            .or_else(|| o.get("results"))
            .and_then(Value::as_array)
        {
            Some(items) => (items.iter().collect(), true, o.get("seed")),
            None => (vec![v], false, None),
        },
        _ => (vec![v], false, None),
    }
}

/// The ring a job lives in: the tag of its matrix, or of `A` for verify jobs.
fn item_ring(item: &Value) -> Result<RingDescriptor, Failure> {
    let carrier = if item.get("entries").is_some() {
        item
    } else {
        item.get("A").unwrap_or(item)
    };
    Ok(descriptor_from_json(carrier)?)
}

fn run_jobs(io: &Io, job: impl Fn(&AnyRing, &Value) -> commutator_core::Result<Value> + Sync) -> Outcome {
    let flag = io.ring.as_deref().map(parse_ring_flag).transpose()?;
    let input = read_input(io.input.as_deref())?;
    let (items, batch, seed) = split_batch(&input);
    let results: Vec<Outcome> = items
        .par_iter()
        .map(|item| {
            let d = item_ring(item)?;
            if let Some(f) = &flag {
                if *f != d {
                    return Err(usage(format!("input ring {d} does not match --ring {f}")));
                }
            }
            let ring = AnyRing::from_descriptor(&d)?;
            Ok(job(&ring, item)?)
        })
        .collect();
    let mut out = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) => out.push(v),
            Err(f) if batch => {
                return Err(Failure {
                    code: f.code,
                    message: format!("item {i}: {}", f.message),
                })
            }
            Err(f) => return Err(f),
        }
    }
    if !batch {
        return Ok(out.pop().expect("one job"));
    }
    let mut header = json!({"count": out.len(), "results": out});
    if let Some(s) = seed {
        header["seed"] = s.clone();
    }
    Ok(header)
}

fn gen(ring: &str, n: usize, count: usize, bound: i64, seed: u64) -> Outcome {
    let d = parse_ring_flag(ring)?;
    if bound < 1 {
        return Err(Failure {
            code: EXIT_PRECONDITION,
            message: format!("--bound must be at least 1, got {bound}"),
        });
    }
    if n == 0 {
        return Err(Failure {
            code: EXIT_PRECONDITION,
            message: "--n must be at least 1".into(),
        });
    }
    let ring = AnyRing::from_descriptor(&d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<Value> = (0..count)
        .map(|_| match &ring {
            AnyRing::Z(r) => matrix_to_json(r, &trace_zero_int(&mut rng, n, bound)),
            AnyRing::Poly(r) => matrix_to_json(r, &trace_zero_poly(&mut rng, r.p(), n, bound as usize)),
            AnyRing::ModN(r) => matrix_to_json(r, &trace_zero_mod(&mut rng, r, n)),
        })
        .collect();
    let mut header = descriptor_to_json(&d);
    header.insert("seed".into(), json!(seed.to_string()));
    header.insert("n".into(), json!(n));
    header.insert("count".into(), json!(count));
    header.insert("bound".into(), json!(bound));
    header.insert("instances".into(), Value::Array(instances));
    Ok(Value::Object(header))
}

fn write_output(out: Option<&PathBuf>, v: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("cannot write stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let (result, out) = match &cli.verb {
        Verb::Decompose { io, regular_x } => (run_jobs(io, |r, v| commands::decompose(r, v, *regular_x)), &io.out),
        Verb::NormalForm { io } => (run_jobs(io, commands::normal_form), &io.out),
        Verb::ZeroDiag { io } => (run_jobs(io, commands::zero_diag), &io.out),
        Verb::FieldDecompose { io } => (run_jobs(io, commands::field_decompose), &io.out),
        Verb::Verify { io, oracle } => (run_jobs(io, |r, v| commands::verify(r, v, *oracle)), &io.out),
        Verb::RegularCheck { io, oracle } => (run_jobs(io, |r, v| commands::regular_check(r, v, *oracle)), &io.out),
        Verb::Gen {
            ring,
            n,
            count,
            bound,
            seed,
            out,
        } => (gen(ring, *n, *count, *bound, *seed), out),
    };
    write_output(out.as_ref(), &result?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
