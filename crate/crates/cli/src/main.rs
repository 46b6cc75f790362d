//! `eulersum`: evaluate alternating Euler sums, restricted sum closed forms
//! and their generating functions from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 request for a closed form the library does not have.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use eulersum_core::closed::{a_alpha_small_depth, a_total, xi};
use eulersum_core::genfun::{phi_series, psi1_series, psi_tot_series};
use eulersum_core::oracle::{default_tolerance, eval_word_refined};
use eulersum_core::verify::run_suite;
use eulersum_core::words::xi_word;
use eulersum_core::{Composition, Error, EulerWord, PiPoly, Suite, XiMethod};

/// Largest truncation order `series` will build.
const MAX_SERIES_ORDER: usize = 40;

#[derive(Parser)]
#[command(
    name = "eulersum",
    version,
    about = "Restricted sums of alternating Euler sums at even arguments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one word numerically, e.g. `--word 2b,4` for ζ(2̄,4).
    Eval {
        #[arg(long, conflicts_with = "xi", required_unless_present = "xi")]
        word: Option<String>,
        /// A composition j₁,…,j_d, evaluated as its ξ-word.
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Exact Ξ(2n,d).
    Xi {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Method::Thm11)]
        method: Method,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Exact A_α(2n,d), or with --all every α for d ≤ 4 plus the total.
    Asum {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        alpha: Option<usize>,
        #[arg(long)]
        all: bool,
    },
    /// Coefficient matrix [n][d] of a generating function.
    Series {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, env = "EULERSUM_MAX_N")]
        max_n: Option<usize>,
    },
    /// Emit a table of exact values.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        max_n: usize,
        #[arg(short)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Thm11,
    Thm13,
    Genfun,
}

impl From<Method> for XiMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Thm11 => XiMethod::Thm11,
            Method::Thm13 => XiMethod::Thm13,
            Method::Genfun => XiMethod::Genfun,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Phi,
    #[value(name = "psi_tot")]
    PsiTot,
    Psi1,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Exact,
    Numeric,
    Stuffle,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Exact => Suite::Exact,
            SuiteArg::Numeric => Suite::Numeric,
            SuiteArg::Stuffle => Suite::Stuffle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Xi,
    #[value(name = "a_alpha")]
    AAlpha,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

#[derive(Serialize)]
struct AlphaRow<'a> {
    alpha: usize,
    value: &'a PiPoly,
}

#[derive(Serialize)]
struct AlphaTable<'a> {
    d: usize,
    n: usize,
    rows: Vec<AlphaRow<'a>>,
    total: &'a PiPoly,
}

#[derive(Serialize)]
struct SeriesDump {
    grading: &'static str,
    matrix: Vec<Vec<String>>,
    series: &'static str,
}

#[derive(Serialize)]
struct Entry {
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    d: usize,
    n: usize,
    value: PiPoly,
}

#[derive(Serialize)]
struct Table {
    entries: Vec<Entry>,
    kind: &'static str,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn check_pair(n: usize, d: usize) -> Result<(), Error> {
    if d < 1 || d > n {
        return Err(Error::Domain(format!(
            "need 1 ≤ d ≤ n, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Eval { word, xi, tol } => {
            let word: EulerWord = match (word, xi) {
                (Some(w), _) => w.parse()?,
                (None, Some(c)) => xi_word(&c.parse::<Composition>()?),
                (None, None) => unreachable!("clap requires one of --word, --xi"),
            };
            let tol = tol.unwrap_or_else(|| default_tolerance(&word));
            writeln!(out, "{}", json(&eval_word_refined(&word, tol)?))?;
        }
        Command::Xi {
            n,
            d,
            method,
            limit,
        } => {
            check_pair(n, d)?;
            if n > limit {
                return Err(Error::Domain(format!("n = {n} exceeds the limit {limit}")).into());
            }
            writeln!(out, "{}", json(&xi(n, d, method.into())?))?;
        }
        Command::Asum {
            n,
            d,
            alpha: Some(alpha),
            ..
        } => {
            writeln!(out, "{}", json(&a_alpha_small_depth(n, d, alpha)?))?;
        }
        Command::Asum {
            n, d, alpha: None, ..
        } => {
            check_pair(n, d)?;
            if d > 4 {
                return Err(Error::Unsupported(format!(
                    "the full α-table needs depth d ≤ 4, got d = {d}"
                ))
                .into());
            }
            let values = (0..=d)
                .map(|a| a_alpha_small_depth(n, d, a))
                .collect::<Result<Vec<_>, _>>()?;
            let total = a_total(n, d)?;
            let rows = values
                .iter()
                .enumerate()
                .map(|(alpha, value)| AlphaRow { alpha, value })
                .collect();
            writeln!(
                out,
                "{}",
                json(&AlphaTable {
                    d,
                    n,
                    rows,
                    total: &total
                })
            )?;
        }
        Command::Series { which, max_n } => {
            if max_n > MAX_SERIES_ORDER {
                return Err(Error::Domain(format!(
                    "max-n = {max_n} exceeds the series capacity {MAX_SERIES_ORDER}"
                ))
                .into());
            }
            let (series, name) = match which {
                Which::Phi => (phi_series(max_n), "phi"),
                Which::PsiTot => (psi_tot_series(max_n), "psi_tot"),
                Which::Psi1 => (psi1_series(max_n), "psi1"),
            };
            let matrix = (0..=max_n)
                .map(|n| {
                    (0..=max_n)
                        .map(|d| series.coeff(n, d).map(|c| c.to_string()))
                        .collect()
                })
                .collect::<Result<Vec<Vec<String>>, _>>()?;
            let dump = SeriesDump {
                grading: "matrix[n][d] is the rational coefficient of pi^(2n) u^n v^d",
                matrix,
                series: name,
            };
            writeln!(out, "{}", json(&dump))?;
        }
        Command::Verify { suite, max_n } => {
            let report = run_suite(suite.into(), max_n)?;
            writeln!(out, "{}", report.to_json())?;
            eprint!("{}", report.to_text());
            if !report.passed {
                return Err(Failure::Verify);
            }
        }
        Command::Table {
            kind,
            max_n,
            d,
            format,
            output,
        } => {
            let table = build_table(kind, max_n, d)?;
            let text = match format {
                Format::Json => format!("{}\n", json(&table)),
                Format::Csv => to_csv(&table),
            };
            match output {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    file.write_all(text.as_bytes())?;
                    file.flush()?;
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(())
}

fn build_table(kind: Kind, max_n: usize, depth: Option<usize>) -> Result<Table, Error> {
    let mut entries = Vec::new();
    for n in 1..=max_n {
        let depths: Vec<usize> = match (kind, depth) {
            (_, Some(d)) => (d..=d).filter(|&d| d >= 1 && d <= n).collect(),
            (Kind::Xi, None) => (1..=n).collect(),
            (Kind::AAlpha, None) => (1..=n.min(4)).collect(),
        };
        for d in depths {
            match kind {
                Kind::Xi => entries.push(Entry {
                    alpha: None,
                    d,
                    n,
                    value: xi(n, d, XiMethod::Thm11)?,
                }),
                Kind::AAlpha => {
                    for alpha in 0..=d {
                        match a_alpha_small_depth(n, d, alpha) {
                            Ok(value) => entries.push(Entry {
                                alpha: Some(alpha),
                                d,
                                n,
                                value,
                            }),
                            Err(Error::Unsupported(_)) => {}
                            Err(e) => return Err(e),
                        }
                    }
                }
            }
        }
    }
    let kind = match kind {
        Kind::Xi => "xi",
        Kind::AAlpha => "a_alpha",
    };
    Ok(Table { entries, kind })
}

/// One row per π-power term; a zero value gets a single 0 row.
fn to_csv(table: &Table) -> String {
    let mut s = String::from("n,d,alpha,pi_exp,num,den\n");
    for e in &table.entries {
        let alpha = e.alpha.map(|a| a.to_string()).unwrap_or_default();
        let terms = e.value.to_wire();
        if terms.is_empty() {
            s.push_str(&format!("{},{},{},0,0,1\n", e.n, e.d, alpha));
        }
        for t in terms {
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                e.n, e.d, alpha, t.pi_exp, t.num, t.den
            ));
        }
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("eulersum: {e}");
            ExitCode::from(if matches!(e, Error::Unsupported(_)) {
                3
            } else {
                2
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("eulersum: {e}");
            ExitCode::from(2)
        }
    }
}
