//! Command-line front end for the `indexcode` binary.
//!
//! Exit codes: 0 on success, 1 when an input or result fails validation,
//! 2 on usage errors.

pub mod demo;
pub mod fixtures;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use indexcode_core::{
    capacity, check_closure, classify, construct, format_symbol, length_lower_bound, lift_code,
    lift_problem, minrank, optimality_certificate, verify, CapacityQuery, ClassDescriptor, CodeDoc,
    Family, IndexCodingProblem, LiftSpec, LinearIndexCode, MinrankStatus, ProblemDoc,
    DEFAULT_MAX_FREE_BITS,
};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "indexcode",
    version,
    about = "Lifted scalar linear index codes over GF(2)"
)]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Capacity with U antidotes before and D after each demand.
    Capacity {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        d: usize,
    },
    /// Build a family's antidote pattern and code.
    Construct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: Option<usize>,
        /// Write the problem JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the code JSON here.
        #[arg(long)]
        code_out: Option<PathBuf>,
    },
    /// Lift a problem and code by multiplicity M.
    Lift {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        code_out: Option<PathBuf>,
    },
    /// Check that every receiver can decode its demand.
    Verify {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        code: PathBuf,
    },
    /// Exact optimal scalar linear length by exhaustive search.
    Minrank {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_FREE_BITS)]
        max_free_bits: usize,
    },
    /// List family instances whose pattern equals the problem.
    Classify {
        #[arg(long)]
        problem: PathBuf,
    },
    /// Check that a lifted family instance lands in the expected family.
    Closure {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: Option<usize>,
        #[arg(long)]
        m: usize,
    },
    /// Reproduce a printed example (1-7) from the embedded fixtures.
    Demo {
        #[arg(long)]
        example: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Side-information graph in DOT format.
    ExportDot {
        #[arg(long)]
        problem: PathBuf,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: indexcode_core::Error| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

/// Anything that ends a command with exit code 1.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Invalid(msg) => f.write_str(msg),
        }
    }
}

impl From<indexcode_core::Error> for Failure {
    fn from(e: indexcode_core::Error) -> Self {
        Self::Invalid(e.to_string())
    }
}

/// Result of a command: text and JSON renderings plus whether it passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            ok: true,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let _ = if cli.json {
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("json")
                )
            } else {
                write!(stdout, "{}", outcome.text)
            };
            if outcome.ok {
                EXIT_OK
            } else {
                EXIT_INVALID
            }
        }
        Err(Failure::Invalid(msg)) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", json!({ "error": msg }));
            }
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INVALID
        }
    }
}

pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    )
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match *command {
        Command::Capacity { k, u, d } => {
            let c = capacity(CapacityQuery::new(k, u, d)?);
            Ok(Outcome::ok(
                format!("{c}\n"),
                json!({ "k": k, "u": u, "d": d, "capacity": c.to_string(),
                        "numerator": c.numerator, "denominator": c.denominator }),
            ))
        }
        Command::Construct {
            family,
            k,
            d,
            lambda,
            ref out,
            ref code_out,
        } => {
            let desc = ClassDescriptor::base(family, k, d, lambda)?;
            let (p, c) = construct(&desc)?;
            write_outputs(&p, &c, out.as_deref(), code_out.as_deref())?;
            Ok(describe_pair(&desc.to_string(), Some(&desc), &p, &c))
        }
        Command::Lift {
            m,
            ref problem,
            ref code,
            ref out,
            ref code_out,
        } => {
            let (p, c) = (read_problem(problem)?, read_code(code)?);
            let spec = LiftSpec::new(m)?;
            let lp = lift_problem(&p, spec);
            let lc = lift_code(&p, &c, spec)?;
            write_outputs(&lp, &lc, out.as_deref(), code_out.as_deref())?;
            Ok(describe_pair(&format!("lifted by m={m}"), None, &lp, &lc))
        }
        Command::Verify {
            ref problem,
            ref code,
        } => {
            let (p, c) = (read_problem(problem)?, read_code(code)?);
            let report = verify(&p, &c)?;
            let cert = optimality_certificate(&p, &c)?;
            let failures = report.failures();
            let mut text = if failures.is_empty() {
                format!("all {} receivers decode\n", p.k())
            } else {
                format!("receivers that cannot decode: {}\n", join(&failures))
            };
            let _ = writeln!(
                text,
                "length {} (lower bound {}): {}",
                c.length(),
                cert.bound,
                status_word(cert.is_optimal())
            );
            Ok(Outcome {
                text,
                json: json!({ "decodable": report.decodable, "overall": report.overall(),
                              "failures": failures, "certificate": cert }),
                ok: report.overall(),
            })
        }
        Command::Minrank {
            ref problem,
            max_free_bits,
        } => {
            let p = read_problem(problem)?;
            let r = minrank(&p, max_free_bits);
            let text = match r.status {
                MinrankStatus::Exact(v) => format!(
                    "minrank {v} (lower bound {}, {} free bits, {} matrices evaluated)\n",
                    length_lower_bound(&p),
                    r.free_bits,
                    r.evaluated
                ),
                MinrankStatus::BudgetExceeded => format!(
                    "budget exceeded: {} free bits > {max_free_bits}\n",
                    r.free_bits
                ),
            };
            Ok(Outcome::ok(text, serde_json::to_value(r).expect("json")))
        }
        Command::Classify { ref problem } => {
            let found = classify(&read_problem(problem)?);
            let text = if found.is_empty() {
                "no family matches\n".to_string()
            } else {
                found.iter().map(|d| format!("{d}\n")).collect()
            };
            Ok(Outcome::ok(
                text,
                serde_json::to_value(&found).expect("json"),
            ))
        }
        Command::Closure {
            family,
            k,
            d,
            lambda,
            m,
        } => {
            let r = check_closure(&ClassDescriptor::base(family, k, d, lambda)?, m)?;
            Ok(Outcome::ok(
                format!(
                    "{} lifted by m={} is {}: patterns match\n",
                    r.input, r.m, r.output
                ),
                serde_json::to_value(r).expect("json"),
            ))
        }
        Command::Demo { example, m } => {
            let reports = demo::demo(example, m)?;
            let text = reports.iter().map(|r| r.summary() + "\n").collect();
            let ok = reports.iter().all(demo::DemoReport::passed);
            Ok(Outcome {
                text,
                json: json!({ "pass": ok, "cases": reports }),
                ok,
            })
        }
        Command::ExportDot { ref problem } => {
            let dot = read_problem(problem)?.to_dot();
            Ok(Outcome::ok(dot.clone(), json!({ "dot": dot })))
        }
    }
}

fn describe_pair(
    title: &str,
    desc: Option<&ClassDescriptor>,
    p: &IndexCodingProblem,
    c: &LinearIndexCode,
) -> Outcome {
    let bound = length_lower_bound(p);
    let mut text = format!(
        "{title}: K={}, {} symbols (lower bound {bound})\n",
        p.k(),
        c.length()
    );
    if p.is_uniform() {
        let offsets: Vec<usize> = p.offsets(1).iter().copied().collect();
        let _ = writeln!(text, "antidote offsets: {}", join(&offsets));
    } else {
        let _ = writeln!(text, "antidote offsets: depend on the receiver");
    }
    for (i, s) in c.symbols().iter().enumerate() {
        let _ = writeln!(text, "{:>4}  {}", i + 1, format_symbol(s));
    }
    let json = json!({
        "descriptor": desc,
        "problem": ProblemDoc::from(p),
        "code": CodeDoc::from(c),
        "lower_bound": bound,
    });
    Outcome::ok(text, json)
}

fn status_word(optimal: bool) -> &'static str {
    if optimal {
        "optimal"
    } else {
        "unknown"
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn read_problem(path: &Path) -> Result<IndexCodingProblem, Failure> {
    IndexCodingProblem::from_json(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<LinearIndexCode, Failure> {
    LinearIndexCode::from_json(&read(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn write_outputs(
    p: &IndexCodingProblem,
    c: &LinearIndexCode,
    out: Option<&Path>,
    code_out: Option<&Path>,
) -> Result<(), Failure> {
    let targets = [(out, p.to_json()), (code_out, c.to_json())];
    for (path, body) in targets {
        if let Some(path) = path {
            std::fs::write(path, body + "\n")
                .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}
