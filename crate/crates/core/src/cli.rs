//! Command-line front end. Every verb runs one library pipeline and prints
//! either plain text or JSON.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijections::{f_map, h_inverse, h_map, phi, phi_tilde, rho, rho_inverse};
use crate::compositions::{Composition, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::insertion_lr::insert_word;
use crate::json::{self, ExprJson, InsertionJson, MatrixJson, PolyJson, TableauJson, TensorJson};
use crate::par::Exec;
use crate::qsym::{
    coproduct, f_to_m, m_to_f, product_and_decompose, skew_r, sym_to_monomials, to_f, to_monomials, to_r,
    transition_matrix_r_to_f_with, Basis, QSymExpr, SkewRoute, SymExpr,
};
use crate::tableaux::{enumerate_fillings_with, enumerate_standard_with, Filling, TableauKind};
use crate::verify::{run_all, run_suite, SuiteReport};

/// Exit status for a verification failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status for bad arguments or inputs.
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "YRQS_THREADS";

#[derive(Parser, Debug)]
#[command(name = "yrqs", version, about = "Young row-strict quasisymmetric Schur functions")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a basis element in another basis or in monomials.
    Expand(ExpandArgs),
    /// Decompose R_alpha * s_lambda in the R basis.
    Multiply {
        #[arg(long = "r")]
        alpha: Composition,
        #[arg(long = "schur")]
        lambda: Partition,
    },
    /// Coproduct of R_alpha in F (x) F.
    Coproduct {
        #[arg(long = "r")]
        alpha: Composition,
    },
    /// List the fillings of a shape.
    Enumerate(EnumerateArgs),
    /// Apply one of the bijections to a tableau read from a JSON file.
    Biject(BijectArgs),
    /// Insert a sequence of values into a tableau read from a JSON file.
    Insert {
        #[arg(long)]
        tableau: String,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u32>,
    },
    /// Transition matrix from R to F in degree n.
    Matrix {
        #[arg(long)]
        n: u32,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long = "max-n")]
        max_n: Option<u32>,
        /// Run every sweep on the calling thread.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// R, RS, S, QS, F, M, skewR or schur.
    #[arg(long)]
    pub basis: String,
    /// A composition, a partition for schur, or `outer//inner` for skewR.
    #[arg(long)]
    pub index: String,
    /// F, M, R or monomials.
    #[arg(long, default_value = "F")]
    pub to: String,
    /// Number of variables for monomials; defaults to the degree.
    #[arg(long)]
    pub vars: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub kind: TableauKind,
    /// Outer shape, optionally `outer//inner`.
    #[arg(long)]
    pub shape: String,
    #[arg(long)]
    pub inner: Option<String>,
    /// Largest entry; ignored with --standard.
    #[arg(long, default_value_t = 0)]
    pub max: u32,
    #[arg(long)]
    pub standard: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Rho,
    F,
    H,
    Phi,
    Phitilde,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    #[arg(long, value_enum)]
    pub map: MapName,
    /// Tableau JSON file, or `-` for standard input.
    #[arg(long)]
    pub input: String,
    /// Apply the inverse map (rho and h only).
    #[arg(long)]
    pub inverse: bool,
    /// Bound on the entries for f; defaults to the largest entry.
    #[arg(long)]
    pub m: Option<u32>,
}

/// What a verb produced: text and JSON renderings plus the exit status.
struct Output {
    text: String,
    json: String,
    status: i32,
}

impl Output {
    fn ok<T: Serialize>(text: String, payload: &T) -> Self {
        Output { text, json: json::to_string(payload), status: 0 }
    }
}

/// Parses `args` (program name first), runs the verb and writes to `out`
/// and `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            let _ = if status == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return status;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let body = match cli.format {
                Format::Text => o.text,
                Format::Json => o.json,
            };
            let _ = writeln!(out, "{}", body.trim_end());
            o.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Internal(_) => EXIT_FAILURE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Expand(a) => expand(a),
        Command::Multiply { alpha, lambda } => {
            let r = product_and_decompose(&QSymExpr::basis_element(Basis::R, alpha.clone()), &SymExpr::schur(lambda.clone()))?;
            Ok(Output::ok(r.to_string(), &ExprJson::from(&r)))
        }
        Command::Coproduct { alpha } => {
            let t = coproduct(&to_f(&QSymExpr::basis_element(Basis::R, alpha.clone())))?;
            Ok(Output::ok(t.to_string(), &TensorJson::from(&t)))
        }
        Command::Enumerate(a) => enumerate(a),
        Command::Biject(a) => biject(a),
        Command::Insert { tableau, values } => {
            let t = read_tableau(tableau)?;
            let steps = insert_word(&t, values)?;
            let mut text = String::new();
            for (x, r) in values.iter().zip(&steps) {
                let path: Vec<String> = r.bump_path.iter().map(|&(i, j)| format!("({},{})", i + 1, j + 1)).collect();
                text.push_str(&format!(
                    "insert {x}: new cell ({},{}), path {}\n",
                    r.new_cell.0 + 1,
                    r.new_cell.1 + 1,
                    path.join(" ")
                ));
            }
            if let Some(last) = steps.last() {
                text.push_str(&last.tableau.to_string());
            }
            let payload: Vec<InsertionJson> = steps.iter().map(InsertionJson::from).collect();
            Ok(Output::ok(text, &payload))
        }
        Command::Matrix { n } => {
            let m = transition_matrix_r_to_f_with(Exec::default(), *n);
            let payload = MatrixJson::from(&*m);
            let mut text = format!(
                "R to F, n = {n}: {} triangular, unit diagonal {}, determinant {}\n",
                payload.triangularity, payload.unit_diagonal, payload.determinant
            );
            for (alpha, row) in m.rows.iter().zip(&m.entries) {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                text.push_str(&format!("{alpha}: {}\n", cells.join(" ")));
            }
            Ok(Output::ok(text, &payload))
        }
        Command::Verify { suite, max_n, sequential } => {
            let exec = if *sequential { Exec::Sequential } else { Exec::Parallel };
            let reports = match suite {
                Some(s) => vec![run_suite(s, *max_n, exec)?],
                None => run_all(*max_n, exec),
            };
            Ok(verify_output(&reports))
        }
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    name: &'a str,
    max_n: u32,
    passed: bool,
    checked: u64,
    counterexample: Option<&'a str>,
    seconds: f64,
}

fn verify_output(reports: &[SuiteReport]) -> Output {
    let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    let payload: Vec<ReportJson> = reports
        .iter()
        .map(|r| ReportJson {
            name: &r.name,
            max_n: r.max_n,
            passed: r.passed,
            checked: r.checked,
            counterexample: r.counterexample.as_deref(),
            seconds: r.elapsed.as_secs_f64(),
        })
        .collect();
    let status = if reports.iter().all(|r| r.passed) { 0 } else { EXIT_FAILURE };
    Output { text: text.join("\n"), json: json::to_string(&payload), status }
}

fn expand(a: &ExpandArgs) -> Result<Output> {
    // the F-expansion, or the monomial form directly for schur
    let (f, degree) = match a.basis.as_str() {
        "schur" | "s" => {
            let lambda: Partition = a.index.parse()?;
            let d = lambda.weight() as usize;
            let k = a.vars.unwrap_or(d);
            let e = SymExpr::schur(lambda);
            if a.to == "monomials" {
                let p = sym_to_monomials(&e, k)?;
                return Ok(Output::ok(p.to_string(), &PolyJson::from(&p)));
            }
            (m_to_f(&sym_to_monomials(&e, d)?.to_m()?)?, d)
        }
        "skewR" | "skewr" => {
            let (outer, inner) = a
                .index
                .split_once("//")
                .ok_or_else(|| Error::Parse(format!("skew index {:?} needs the form outer//inner", a.index)))?;
            let (alpha, beta): (Composition, Composition) = (outer.parse()?, inner.parse()?);
            if !beta.contained_in(&alpha) {
                return Err(Error::Domain(format!("{beta} is not contained in {alpha}")));
            }
            let d = (alpha.weight() - beta.weight()) as usize;
            (skew_r(&alpha, &beta, SkewRoute::Combinatorial)?, d)
        }
        b => {
            let basis: Basis = b.parse()?;
            let alpha: Composition = a.index.parse()?;
            let d = alpha.weight() as usize;
            (to_f(&QSymExpr::basis_element(basis, alpha)), d)
        }
    };
    let e = match a.to.as_str() {
        "F" | "f" => f,
        "M" | "m" => f_to_m(&f)?,
        "R" | "r" => to_r(&f)?,
        "monomials" => {
            let p = to_monomials(&f, a.vars.unwrap_or(degree));
            return Ok(Output::ok(p.to_string(), &PolyJson::from(&p)));
        }
        other => return Err(Error::Parse(format!("unknown target {other:?}; use F, M, R or monomials"))),
    };
    Ok(Output::ok(e.to_string(), &ExprJson::from(&e)))
}

fn enumerate(a: &EnumerateArgs) -> Result<Output> {
    let text = match &a.inner {
        Some(i) if a.shape.contains("//") => {
            return Err(Error::Parse(format!("inner shape given twice: {} and {i}", a.shape)));
        }
        Some(i) => format!("{}//{i}", a.shape),
        None => a.shape.clone(),
    };
    let shape: SkewShape = text.parse()?;
    let all = if a.standard {
        enumerate_standard_with(Exec::default(), a.kind, &shape)
    } else {
        enumerate_fillings_with(Exec::default(), a.kind, &shape, a.max)
    };
    let mut text = format!("{} {} of shape {shape}\n", all.len(), a.kind);
    for f in &all {
        text.push('\n');
        text.push_str(&f.to_string());
        text.push('\n');
    }
    let payload: Vec<TableauJson> = all.iter().map(TableauJson::from).collect();
    Ok(Output::ok(text, &payload))
}

fn read_tableau(path: &str) -> Result<Filling> {
    let mut s = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|c| s = c)
    };
    read.map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    json::from_str::<TableauJson>(&s)?.to_filling()
}

fn biject(a: &BijectArgs) -> Result<Output> {
    let t = read_tableau(&a.input)?;
    let img = match (a.map, a.inverse) {
        (MapName::Rho, false) => rho(&t)?,
        (MapName::Rho, true) => rho_inverse(&t)?,
        (MapName::H, false) => h_map(&t)?,
        (MapName::H, true) => h_inverse(&t)?,
        (MapName::F, _) => f_map(&t, a.m.unwrap_or_else(|| t.max_entry()))?,
        (MapName::Phi, false) => phi(&t)?,
        (MapName::Phitilde, false) => phi_tilde(&t)?,
        (m, true) => return Err(Error::Domain(format!("no inverse is provided for {m:?}"))),
    };
    Ok(Output::ok(img.to_string(), &TableauJson::from(&img)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("yrqs").chain(args.iter().copied());
        let status = run(argv, &mut out, &mut err);
        (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_r23() {
        let (status, out, _) = call(&["expand", "--basis", "R", "--index", "(2,3)", "--to", "F"]);
        assert_eq!(status, 0);
        assert_eq!(out.trim(), "F(2,2,1) + F(2,1,2) + F(1,2,1,1)");
    }

    #[test]
    fn enumerate_shape_1212() {
        let (status, out, _) = call(&["enumerate", "--kind", "SSYRT", "--shape", "(1,2,1,2)", "--max", "4"]);
        assert_eq!(status, 0);
        assert!(out.starts_with("7 SSYRT"), "{out}");
        let (_, js, _) = call(&["--format", "json", "enumerate", "--kind", "SSYRT", "--shape", "(1,2,1,2)", "--max", "4"]);
        let v: Vec<TableauJson> = json::from_str(&js).unwrap();
        assert_eq!(v.len(), 7);
        assert_eq!(json::to_string(&v), js.trim_end());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["expand", "--basis", "R", "--index", "(2,0)"]).0, EXIT_USAGE);
        assert_eq!(call(&["expand", "--basis", "Q", "--index", "(2)"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(call(&["verify", "--suite", "omega", "--max-n", "4"]).0, 0);
        let (status, out, _) = call(&["verify", "--suite", "insertion"]);
        assert_eq!(status, EXIT_FAILURE);
        assert!(out.contains("counterexample"));
    }

    #[test]
    fn small_pipelines() {
        let (_, out, _) = call(&["multiply", "--r", "(1)", "--schur", "(1)"]);
        assert_eq!(out.trim(), "R(2) + R(1,1)");
        let (_, out, _) = call(&["coproduct", "--r", "(1)"]);
        assert!(out.contains('⊗'), "{out}");
        let (_, out, _) = call(&["expand", "--basis", "schur", "--index", "(1)", "--to", "monomials", "--vars", "2"]);
        assert_eq!(out.trim(), "x1 + x2");
        let (_, out, _) = call(&["expand", "--basis", "skewR", "--index", "(2,1)//(1)"]);
        assert!(out.starts_with('F'), "{out}");
        let (status, out, _) = call(&["matrix", "--n", "3"]);
        assert_eq!(status, 0);
        assert!(out.contains("unit diagonal true"), "{out}");
    }
}
