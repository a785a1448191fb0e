//! Command-line front end.
//!
//! Every result is an [`OutputRecord`]; plain mode prints the record's values
//! on one line, `--json` prints the whole record as one JSON object per line.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{Map, Value};

use crate::error::Error;
use crate::oracle::SearchBound;
use crate::pell::{negative_pell_fundamental, PellContext};
use crate::rational::{admissible_w, rational_solutions};
use crate::star::{
    bisector_slopes, enumerate_int_solutions, solution_family_2, solution_family_d,
    symmetry_closure, BisectorSlopes,
};
use crate::triple::{parse_rational, StarTriple};
use crate::verify::run_checks;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EMPTY: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_TRIVIAL: i32 = 4;

/// Environment variable overriding [`DEFAULT_MAX_BOUND`].
pub const MAX_BOUND_ENV: &str = "BISECTOR_MAX_BOUND";
pub const DEFAULT_MAX_BOUND: u64 = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "bisector",
    version,
    about = "Rational slopes of angle bisectors"
)]
struct Cli {
    /// Print one JSON object per line
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solutions of x^2 - d y^2 = ±1
    #[command(subcommand)]
    Pell(PellCommand),
    /// Integral solutions of (a-c)^2 (b^2+1) = (b-c)^2 (a^2+1)
    #[command(subcommand)]
    Star(StarCommand),
    /// Rational solutions from Pythagorean triples with common leg W
    Rat {
        #[arg(long)]
        w: u64,
    },
    /// Cross-check closed forms against brute-force search
    Verify {
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Subcommand)]
enum PellCommand {
    /// Least positive solution of x^2 - d y^2 = -1
    Fundamental {
        #[arg(long)]
        d: u64,
    },
    /// The first K terms (n, f_n, g_n)
    Terms {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        count: u64,
    },
}

#[derive(Debug, Subcommand)]
enum StarCommand {
    /// (f_{(2m-1)(2n-1)}, f_{(2m-1)(2n+1)}, g_{(2m-1)2n} / g_{2m-1})
    Family(FamilyArgs),
    /// (f_{2n-1}, -f_{2n+1}, f_{2n}) over d = 2
    Family2 {
        #[arg(long)]
        n: u64,
    },
    /// All canonical solutions with 0 < a < |b| <= B
    Enumerate {
        #[arg(long)]
        bound: u64,
        /// Print every member of each symmetry orbit
        #[arg(long)]
        closure: bool,
    },
    /// Bisector slopes for lines of slopes a and b
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long)]
    d: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
}

/// One line of output: a kind tag and decimal-string fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub kind: String,
    pub payload: BTreeMap<String, String>,
}

impl OutputRecord {
    fn new(kind: &str, fields: &[(&str, String)]) -> Self {
        OutputRecord {
            kind: kind.to_string(),
            payload: fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    pub fn triple(t: &StarTriple) -> Self {
        OutputRecord::new(
            "triple",
            &[
                ("a", t.a.to_string()),
                ("b", t.b.to_string()),
                ("c", t.c.to_string()),
                ("provenance", t.provenance.to_string()),
            ],
        )
    }

    fn field(&self, key: &str) -> &str {
        self.payload.get(key).map(String::as_str).unwrap_or("")
    }

    /// The plain-text line for this record.
    pub fn text(&self) -> String {
        let pick = |keys: &[&str]| {
            keys.iter()
                .map(|k| self.field(k))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self.kind.as_str() {
            "triple" => pick(&["a", "b", "c"]),
            "fundamental" => pick(&["f1", "g1"]),
            "term" => pick(&["n", "f", "g"]),
            "slopes" => pick(&["c_plus", "c_minus"]),
            "check" => format!(
                "{} {} {}",
                self.field("status"),
                self.field("name"),
                self.field("detail")
            ),
            other => other.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::String(self.kind.clone()));
        let payload = self
            .payload
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        obj.insert("payload".into(), Value::Object(payload));
        Value::Object(obj).to_string()
    }

    pub fn from_json(line: &str) -> Option<Self> {
        let value: Value = serde_json::from_str(line).ok()?;
        let kind = value.get("kind")?.as_str()?.to_string();
        let payload = value
            .get("payload")?
            .as_object()?
            .iter()
            .map(|(k, v)| Some((k.clone(), v.as_str()?.to_string())))
            .collect::<Option<_>>()?;
        Some(OutputRecord { kind, payload })
    }

    /// Reads `(a, b, c)` back from a triple record.
    pub fn to_triple(&self) -> Option<StarTriple> {
        if self.kind != "triple" {
            return None;
        }
        Some(StarTriple::external(
            parse_rational(self.field("a"))?,
            parse_rational(self.field("b"))?,
            parse_rational(self.field("c"))?,
        ))
    }
}

/// Parses a plain-text `a b c` line.
pub fn parse_triple_line(line: &str) -> Option<StarTriple> {
    let parts: Vec<BigRational> = line
        .split_whitespace()
        .map(parse_rational)
        .collect::<Option<_>>()?;
    match parts.as_slice() {
        [a, b, c] => Some(StarTriple::external(a.clone(), b.clone(), c.clone())),
        _ => None,
    }
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Printer<'_> {
    fn emit(&mut self, record: &OutputRecord) -> std::io::Result<()> {
        if self.json {
            writeln!(self.out, "{}", record.to_json())
        } else {
            writeln!(self.out, "{}", record.text())
        }
    }
}

fn max_bound() -> u64 {
    std::env::var(MAX_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_BOUND)
}

enum Failure {
    Usage(String),
    Empty(Option<OutputRecord>, String),
    Trivial(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsolvable(d) => Failure::Empty(
                Some(OutputRecord::new("unsolvable", &[("d", d.to_string())])),
                e.to_string(),
            ),
            Error::TrivialInput => Failure::Trivial(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

fn check_ceiling(what: &str, value: u64) -> Result<(), Failure> {
    let ceiling = max_bound();
    if value > ceiling {
        return Err(Failure::Usage(format!(
            "{what} {value} exceeds the ceiling {ceiling} (set {MAX_BOUND_ENV} to raise it)"
        )));
    }
    Ok(())
}

fn dispatch(command: Command, p: &mut Printer<'_>) -> Result<(), Failure> {
    match command {
        Command::Pell(PellCommand::Fundamental { d }) => match negative_pell_fundamental(d)? {
            Some(ctx) => p
                .emit(&OutputRecord::new(
                    "fundamental",
                    &[
                        ("d", d.to_string()),
                        ("f1", ctx.f1().to_string()),
                        ("g1", ctx.g1().to_string()),
                    ],
                ))
                .map_err(io_failure),
            None => Err(Error::Unsolvable(d).into()),
        },
        Command::Pell(PellCommand::Terms { d, count }) => {
            let ctx = PellContext::new(d)?;
            for t in ctx.stream().take(count as usize) {
                p.emit(&OutputRecord::new(
                    "term",
                    &[
                        ("n", t.n.to_string()),
                        ("f", t.f.to_string()),
                        ("g", t.g.to_string()),
                    ],
                ))
                .map_err(io_failure)?;
            }
            Ok(())
        }
        Command::Star(StarCommand::Family(FamilyArgs { d, m, n })) => p
            .emit(&OutputRecord::triple(&solution_family_d(d, m, n)?))
            .map_err(io_failure),
        Command::Star(StarCommand::Family2 { n }) => p
            .emit(&OutputRecord::triple(&solution_family_2(n)?))
            .map_err(io_failure),
        Command::Star(StarCommand::Enumerate { bound, closure }) => {
            check_ceiling("bound", bound)?;
            let canonical = enumerate_int_solutions(bound)?;
            if canonical.is_empty() {
                return Err(Failure::Empty(
                    None,
                    format!("no nontrivial integral solutions with |b| <= {bound}"),
                ));
            }
            let lines: BTreeSet<StarTriple> = if closure {
                canonical.iter().flat_map(symmetry_closure).collect()
            } else {
                canonical
            };
            for t in &lines {
                p.emit(&OutputRecord::triple(t)).map_err(io_failure)?;
            }
            Ok(())
        }
        Command::Star(StarCommand::Solve { a, b }) => {
            let parse = |s: &str| {
                parse_rational(s)
                    .ok_or_else(|| Failure::Usage(format!("not a rational number: {s}")))
            };
            let (a, b) = (parse(&a)?, parse(&b)?);
            let record = match bisector_slopes(&a, &b)? {
                BisectorSlopes::Rational(plus, minus) => OutputRecord::new(
                    "slopes",
                    &[("c_plus", plus.to_string()), ("c_minus", minus.to_string())],
                ),
                BisectorSlopes::Irrational => OutputRecord::new("irrational", &[]),
            };
            p.emit(&record).map_err(io_failure)
        }
        Command::Rat { w } => {
            check_ceiling("w", w)?;
            if w == 0 {
                return Err(Error::NotPositive(0).into());
            }
            if !admissible_w(w) {
                return Err(Failure::Empty(
                    None,
                    format!("w = {w} is not a multiple of 4 above 4, twice an odd composite, or an odd composite"),
                ));
            }
            for t in rational_solutions(w) {
                p.emit(&OutputRecord::triple(&t)).map_err(io_failure)?;
            }
            Ok(())
        }
        Command::Verify { bound } => {
            check_ceiling("bound", bound)?;
            let outcomes = run_checks(SearchBound::new(bound)?)?;
            let mut failed = false;
            for o in outcomes {
                failed |= !o.passed;
                let status = if o.passed { "PASS" } else { "FAIL" };
                p.emit(&OutputRecord::new(
                    "check",
                    &[
                        ("status", status.to_string()),
                        ("name", o.name.to_string()),
                        ("detail", o.detail),
                    ],
                ))
                .map_err(io_failure)?;
            }
            if failed {
                Err(Failure::Verify)
            } else {
                Ok(())
            }
        }
    }
}

/// Parses `argv` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut printer = Printer {
        out,
        json: cli.json,
    };
    match dispatch(cli.command, &mut printer) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Empty(record, msg)) => {
            if let Some(record) = record {
                let _ = printer.emit(&record);
            }
            let _ = writeln!(err, "{msg}");
            EXIT_EMPTY
        }
        Err(Failure::Trivial(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_TRIVIAL
        }
        Err(Failure::Verify) => EXIT_VERIFY_FAILED,
    }
}
