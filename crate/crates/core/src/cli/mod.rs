//! Command-line front end: file parsing, command dispatch and reports.

mod parse;
mod render;
mod report;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::error::Error;
use crate::exactlinalg::{Matrix, Scalar, Subspace};
use crate::liecore::{Element, LieAlgebra};
use crate::oracle::{cross_validate, find_witness, nilpotent_in_all_reps, CrossOptions};
use crate::semisimple::{
    is_nilpotent_element_image, is_nilpotent_element_power, is_semisimple, killing_matrix, radical,
};

pub use parse::{parse_algebra, parse_element, parse_rational, ParseError, ParseErrorKind};
pub use render::render;
pub use report::{flatten, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_ASSERT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "lienil",
    version,
    about = "Exact computations with finite-dimensional Lie algebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit with status 2 when the verdict or consistency check is negative.
    #[arg(long, global = true)]
    assert: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Jacobi identity.
    Validate { file: PathBuf },
    /// Series, solvability, nilpotency and semisimplicity.
    Info { file: PathBuf },
    /// Solvable radical and the semisimple quotient.
    Radical { file: PathBuf },
    /// Gram matrix of the Killing form.
    Killing { file: PathBuf },
    /// Whether ad(x) is nilpotent.
    Nilpotent {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
    },
    /// Whether x acts nilpotently in every representation.
    Oracle {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        /// Attach a representation in which x is not nilpotent.
        #[arg(long)]
        witness: bool,
    },
    /// Compare the oracle with a finite corpus of representations.
    Crosscheck {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long = "max-dim", default_value_t = 128)]
        max_dim: usize,
    },
    /// List built-in algebras, or print one in file format.
    Catalog { name: Option<String> },
}

/// Exit status plus everything written to standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

struct Failure {
    kind: &'static str,
    message: String,
    details: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            kind: "computation",
            message: e.to_string(),
            details: Value::Null,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Self {
            kind: "parse",
            message: e.to_string(),
            details: json!({ "line": e.line, "column": e.column }),
        }
    }
}

fn scalar(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

fn vector(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

fn matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector(r)).collect())
}

fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    let io = |e: std::io::Error| Failure {
        kind: "io",
        message: format!("{}: {e}", path.display()),
        details: Value::Null,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn jacobi_violations(l: &LieAlgebra) -> Value {
    let names = l.names();
    Value::Array(
        l.validate()
            .iter()
            .map(|v| {
                let (i, j, k) = v.triple;
                json!({
                    "triple": [names[i], names[j], names[k]],
                    "residual": vector(&v.residual),
                })
            })
            .collect(),
    )
}

/// Parses the file and rejects it unless the Jacobi identity holds.
fn load(path: &PathBuf) -> Result<LieAlgebra, Failure> {
    let l = parse_algebra(&read_file(path)?)?;
    if !l.is_valid() {
        return Err(Failure {
            kind: "jacobi",
            message: "bracket table violates the Jacobi identity".into(),
            details: json!({ "violations": jacobi_violations(&l) }),
        });
    }
    Ok(l)
}

fn element(l: &LieAlgebra, text: &str) -> Result<Element, Failure> {
    parse_element(text, l.dim()).map_err(|e| Failure {
        kind: "element",
        message: e.to_string(),
        details: json!({ "column": e.column }),
    })
}

fn info(l: &LieAlgebra) -> Result<Value, Failure> {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    Ok(json!({
        "dim": l.dim(),
        "basis": l.names(),
        "derived_series": dims(l.derived_series()),
        "lower_central_series": dims(l.lower_central_series()),
        "center_dim": l.center().dim(),
        "solvable": l.is_solvable(),
        "nilpotent": l.is_nilpotent_algebra(),
        "semisimple": is_semisimple(l)?,
        "radical_dim": radical(l)?.dim(),
    }))
}

/// Runs one command and returns its exit code with the rendered report.
/// Never exits the process and never panics on bad input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Outcome {
                code,
                stdout: e.render().to_string(),
            };
        }
    };
    let mut report = echo(&cli.command);
    let (code, raw) = match dispatch(&cli, &mut report) {
        Ok((negative, raw)) => (
            if cli.assert && negative {
                EXIT_ASSERT
            } else {
                EXIT_OK
            },
            raw,
        ),
        Err(f) => {
            report.result = json!({
                "error": { "kind": f.kind, "message": f.message, "details": f.details },
            });
            (EXIT_INPUT, None)
        }
    };
    let stdout = match (cli.format, raw) {
        (Format::Json, _) => report.to_json(),
        (Format::Text, Some(raw)) => raw,
        (Format::Text, None) => report.to_text(),
    };
    Outcome { code, stdout }
}

fn echo(command: &Command) -> Report {
    let file = |f: &PathBuf| Value::String(f.display().to_string());
    match command {
        Command::Validate { file: f } => Report::new("validate").input("file", file(f)),
        Command::Info { file: f } => Report::new("info").input("file", file(f)),
        Command::Radical { file: f } => Report::new("radical").input("file", file(f)),
        Command::Killing { file: f } => Report::new("killing").input("file", file(f)),
        Command::Nilpotent { file: f, element } => Report::new("nilpotent")
            .input("file", file(f))
            .input("element", element.as_str()),
        Command::Oracle {
            file: f,
            element,
            witness,
        } => Report::new("oracle")
            .input("file", file(f))
            .input("element", element.as_str())
            .input("witness", *witness),
        Command::Crosscheck {
            file: f,
            element,
            depth,
            max_dim,
        } => Report::new("crosscheck")
            .input("file", file(f))
            .input("element", element.as_str())
            .input("depth", *depth)
            .input("max_dim", *max_dim),
        Command::Catalog { name } => {
            Report::new("catalog").input("name", name.clone().map_or(Value::Null, Value::String))
        }
    }
}

/// Fills the report. Returns whether the outcome counts as negative for
/// `--assert`, and optional raw text replacing the flattened text form.
fn dispatch(cli: &Cli, report: &mut Report) -> Result<(bool, Option<String>), Failure> {
    match &cli.command {
        Command::Validate { file } => {
            let l = parse_algebra(&read_file(file)?)?;
            let violations = jacobi_violations(&l);
            let valid = violations.as_array().is_some_and(Vec::is_empty);
            report.result = json!({ "dim": l.dim(), "valid": valid, "violations": violations });
            if valid {
                Ok((false, None))
            } else {
                Err(Failure {
                    kind: "jacobi",
                    message: "bracket table violates the Jacobi identity".into(),
                    details: json!({ "violations": report.result["violations"].clone() }),
                })
            }
        }
        Command::Info { file } => {
            report.result = info(&load(file)?)?;
            Ok((false, None))
        }
        Command::Radical { file } => {
            let l = load(file)?;
            let rad = radical(&l)?;
            let q = l.quotient(&rad)?;
            report.result = json!({
                "radical": subspace(&rad),
                "quotient_dim": q.target().dim(),
                "quotient": render(q.target()),
                "projection": matrix(q.matrix()),
            });
            Ok((false, None))
        }
        Command::Killing { file } => {
            let l = load(file)?;
            let k = killing_matrix(&l);
            report.result = json!({
                "gram": matrix(k.gram()),
                "rank": k.rank(),
                "nondegenerate": k.is_nondegenerate(),
            });
            Ok((false, None))
        }
        Command::Nilpotent {
            file,
            element: text,
        } => {
            let l = load(file)?;
            let x = element(&l, text)?;
            let power = is_nilpotent_element_power(&l, &x)?;
            let image = match is_nilpotent_element_image(&l, &x) {
                Ok(b) => Value::Bool(b),
                Err(Error::NotSemisimple) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            report.result = json!({ "ad_nilpotent": power, "image_test": image });
            Ok((!power, None))
        }
        Command::Oracle {
            file,
            element: text,
            witness,
        } => {
            let l = load(file)?;
            let x = element(&l, text)?;
            let v = nilpotent_in_all_reps(&l, &x)?;
            report.result = serde_json::to_value(&v).expect("verdict serializes");
            if *witness && !v.answer {
                let w = find_witness(&l, &x)?;
                let names = l.names();
                let matrices: serde_json::Map<String, Value> = w
                    .rep
                    .matrices()
                    .iter()
                    .zip(names)
                    .map(|(m, n)| (n.clone(), matrix(m)))
                    .collect();
                report.witness = Some(json!({
                    "case": w.case.as_str(),
                    "label": w.rep.label(),
                    "dim": w.rep.dim(),
                    "exponent_checked": w.exponent_checked,
                    "action": matrix(&w.rep.action(&x)?),
                    "matrices": matrices,
                }));
            }
            Ok((!v.answer, None))
        }
        Command::Crosscheck {
            file,
            element: text,
            depth,
            max_dim,
        } => {
            let l = load(file)?;
            let x = element(&l, text)?;
            let opts = CrossOptions {
                depth: *depth,
                max_dim: *max_dim,
                irreducibles: catalog::attached_irreducibles(&Arc::new(l.clone())),
            };
            let r = cross_validate(&l, &x, &opts)?;
            report.result = json!({
                "verdict": serde_json::to_value(&r.verdict).expect("verdict serializes"),
                "consistent": r.consistent,
                "members": r.outcomes.len(),
                "non_nilpotent": r.outcomes.iter().filter(|o| !o.nilpotent).count(),
            });
            report.witness = r
                .witness
                .as_ref()
                .map(|w| serde_json::to_value(w).expect("witness serializes"));
            report.corpus = Some(serde_json::to_value(&r.outcomes).expect("corpus serializes"));
            Ok((!r.consistent, None))
        }
        Command::Catalog { name: None } => {
            report.result = json!({ "names": catalog::NAMES });
            Ok((false, None))
        }
        Command::Catalog { name: Some(name) } => {
            let entry = catalog::builtin(name)?;
            let text = render(&entry.algebra);
            report.result = json!({ "name": entry.name, "file": text });
            Ok((false, Some(text)))
        }
    }
}
