//! Command-line front end: tables, point evaluations, subset enumeration,
//! and the identity verification suite, in CSV or JSON with exact `p/q`
//! values (and optional fixed-significant-figure decimals).
//!
//! Exit codes: 0 success, 1 verification failure or route mismatch, 2 usage
//! error. All behavior is flag-driven; there is no configuration file.

use clap::{Parser, Subcommand, ValueEnum};
use ffcalc::derivative::{self, Route};
use ffcalc::harmonic;
use ffcalc::identities::{self, IdentityReport};
use ffcalc::missing_factor;
use ffcalc::rational::{decimal_sig, parse_rat, Rat};
use ffcalc::stirling;
use ffcalc::{enumerate_subsets, MissingFactorSet, Poly};
use serde_json::json;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ffcalc",
    version,
    about = "Exact falling-factorial calculus tables and checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a table of values
    Table(TableArgs),
    /// Evaluate a single quantity
    #[command(subcommand)]
    Eval(EvalCmd),
    /// List l-subsets of {0, .., n-1} in lexicographic order
    #[command(name = "enum")]
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Run the identity catalog and report pass/fail per identity
    Verify {
        /// Grid scale for the catalog
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Comma-separated identity ids to run (default: all)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Stirling1,
    Stirling2,
    Rstirling,
    Acoeff,
    Esh,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(value_enum)]
    kind: TableKind,
    /// First row (defaults: 0, or -5 under --paper-table)
    #[arg(long, allow_negative_numbers = true)]
    nmin: Option<i64>,
    /// Last row (defaults: 10, or 5 under --paper-table)
    #[arg(long, allow_negative_numbers = true)]
    nmax: Option<i64>,
    /// Last column (defaults: 10, or 5 under --paper-table)
    #[arg(long)]
    kmax: Option<i64>,
    /// Offset parameter for rstirling/esh tables
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Reciprocal power for esh tables
    #[arg(long, default_value_t = 1)]
    v: u32,
    /// Reproduce the extended first-kind grid (rows -5..5, columns 0..5)
    /// with 3-significant-figure decimals and correction footnotes
    #[arg(long)]
    paper_table: bool,
    /// Render a decimal column with this many significant figures
    #[arg(long, num_args = 0..=1, default_missing_value = "3")]
    decimal: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Derivative of the order-n falling factorial at integer m
    Deriv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = RouteArg::Stirling)]
        route: RouteArg,
        /// Evaluate every route and print a MATCH/MISMATCH verdict
        #[arg(long)]
        all_routes: bool,
    },
    /// Derivative polynomial coefficients, or its value at a rational point
    DerivPoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        /// Rational evaluation point "p/q" (omit to list coefficients)
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Falling factorial with missing factors: coefficients or a value
    Theta {
        #[arg(long)]
        n: usize,
        /// Comma-separated missing factors, strictly increasing
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        missing: Vec<usize>,
        /// Rational evaluation point "p/q" (omit to list coefficients)
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Elementary symmetric harmonic sum H(n,l,r) at power v
    Esh {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        v: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Oracle,
    Symbolic,
    Harmonic,
    Stirling,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Oracle => Route::Oracle,
            RouteArg::Symbolic => Route::Symbolic,
            RouteArg::Harmonic => Route::Harmonic,
            RouteArg::Stirling => Route::Stirling,
        }
    }
}

struct Record {
    labels: Vec<String>,
    exact: String,
    decimal: Option<String>,
}

impl Record {
    fn new(labels: Vec<String>, value: &Rat, decimal_digits: Option<u32>) -> Record {
        Record {
            labels,
            exact: value.to_string(),
            decimal: decimal_digits.map(|d| decimal_sig(value, d)),
        }
    }
}

/// Writes to stdout, swallowing broken-pipe errors so piping into `head`
/// does not turn into a panic.
fn emit(text: &str) {
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
}

/// CSV with a header row, comma separation, LF endings; correction notes go
/// last as '#' comment lines. JSON wraps the records and notes in one
/// object, each record carrying {labels, exact, decimal?}.
fn render_records(
    format: Format,
    label_names: &[&str],
    records: &[Record],
    notes: &[String],
    with_decimal: bool,
) -> String {
    match format {
        Format::Csv => {
            let mut out = label_names.join(",") + ",exact";
            if with_decimal {
                out.push_str(",decimal");
            }
            out.push('\n');
            for rec in records {
                out.push_str(&rec.labels.join(","));
                out.push(',');
                out.push_str(&rec.exact);
                if with_decimal {
                    out.push(',');
                    out.push_str(rec.decimal.as_deref().unwrap_or(""));
                }
                out.push('\n');
            }
            for note in notes {
                out.push_str("# ");
                out.push_str(note);
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let records: Vec<_> = records
                .iter()
                .map(|rec| {
                    let mut obj = json!({
                        "labels": rec.labels,
                        "exact": rec.exact,
                    });
                    if let Some(d) = &rec.decimal {
                        obj["decimal"] = json!(d);
                    }
                    obj
                })
                .collect();
            let out = json!({ "records": records, "notes": notes });
            serde_json::to_string_pretty(&out).unwrap() + "\n"
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run with --help for usage");
    ExitCode::from(2)
}

fn run_table(args: TableArgs) -> ExitCode {
    if args.paper_table && !matches!(args.kind, TableKind::Stirling1) {
        return usage_error("--paper-table applies to `table stirling1` only");
    }
    let (nmin, nmax, kmax) = if args.paper_table {
        (-5, 5, 5)
    } else {
        let lo = args.nmin.unwrap_or(0);
        (
            lo,
            args.nmax.unwrap_or(lo.max(0) + 10),
            args.kmax.unwrap_or(10),
        )
    };
    if nmax < nmin || kmax < 0 {
        return usage_error("empty table range");
    }
    let decimal = if args.paper_table {
        Some(args.decimal.unwrap_or(3))
    } else {
        args.decimal
    };

    let mut records = Vec::new();
    let mut notes = Vec::new();
    match args.kind {
        TableKind::Stirling1 => {
            for n in nmin..=nmax {
                for k in 0..=kmax {
                    let v = stirling::stirling1(n, k);
                    records.push(Record::new(vec![n.to_string(), k.to_string()], &v, decimal));
                }
            }
            if args.paper_table {
                notes.push(
                    "row 5, column 3 holds 35, the x^3 coefficient of x(x-1)(x-2)(x-3)(x-4) \
                     = x^5 - 10x^4 + 35x^3 - 50x^2 + 24x; 36 seen in print there does not \
                     satisfy the expansion"
                        .to_string(),
                );
                notes.push(
                    "for rows n < 0, column 0 holds 1/(-n)! (1, 0.5, 0.167, ..), the boundary \
                     the recurrence s(n+1,k) = s(n,k-1) - n*s(n,k) requires; printing this \
                     column shifted down one row (0.5, 0.167, ..) contradicts the k >= 1 \
                     entries of rows -1..-5"
                        .to_string(),
                );
                notes.push(
                    "row -4, column 5 is -952525/5971968 = -0.1594993.., which rounds to \
                     -0.159 at 3 significant figures (-0.160 is a misrounding)"
                        .to_string(),
                );
            }
        }
        TableKind::Stirling2 => {
            for n in nmin..=nmax {
                for k in 0..=kmax {
                    let v = stirling::stirling2(n, k as usize);
                    records.push(Record::new(vec![n.to_string(), k.to_string()], &v, decimal));
                }
            }
        }
        TableKind::Rstirling => {
            if nmin < 0 {
                return usage_error("rstirling rows must be non-negative");
            }
            for n in nmin..=nmax {
                for k in 0..=kmax {
                    let v = stirling::r_stirling1(n as usize, k as usize, args.r);
                    records.push(Record::new(vec![n.to_string(), k.to_string()], &v, decimal));
                }
            }
        }
        TableKind::Acoeff => {
            if nmin < 0 {
                return usage_error("acoeff rows must be non-negative");
            }
            for r in nmin..=nmax {
                for k in 0..=kmax {
                    let v = stirling::a_coefficient(r as usize, k as usize);
                    records.push(Record::new(vec![r.to_string(), k.to_string()], &v, decimal));
                }
            }
        }
        TableKind::Esh => {
            if nmin < 0 {
                return usage_error("esh rows must be non-negative");
            }
            let matrix = harmonic::esh_matrix(nmax.max(0) as usize, args.r, args.v);
            for n in nmin.max(0)..=nmax {
                for l in 0..=kmax.min(nmax) {
                    let v = matrix.at(n as usize, l as usize);
                    records.push(Record::new(vec![n.to_string(), l.to_string()], v, decimal));
                }
            }
        }
    }
    let label_names: &[&str] = match args.kind {
        TableKind::Acoeff => &["r", "k"],
        TableKind::Esh => &["n", "l"],
        _ => &["n", "k"],
    };
    emit(&render_records(
        args.format,
        label_names,
        &records,
        &notes,
        decimal.is_some(),
    ));
    ExitCode::SUCCESS
}

fn poly_records(p: &Poly) -> Vec<Record> {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| Record::new(vec![j.to_string()], c, None))
        .collect()
}

fn run_eval(cmd: EvalCmd) -> ExitCode {
    match cmd {
        EvalCmd::Deriv {
            n,
            l,
            m,
            route,
            all_routes,
        } => {
            if all_routes {
                let values: Vec<(&str, Rat)> = Route::ALL
                    .iter()
                    .map(|r| (r.name(), derivative::deriv_at(n, l, m, *r)))
                    .collect();
                let mut out = String::new();
                for (name, v) in &values {
                    out.push_str(&format!("{name} {v}\n"));
                }
                let all_equal = values.windows(2).all(|w| w[0].1 == w[1].1);
                out.push_str(if all_equal { "MATCH\n" } else { "MISMATCH\n" });
                emit(&out);
                return if all_equal {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                };
            }
            emit(&format!(
                "{}\n",
                derivative::deriv_at(n, l, m, route.into())
            ));
            ExitCode::SUCCESS
        }
        EvalCmd::DerivPoly { n, l, at } => {
            let p = derivative::deriv_poly_symbolic(n, l);
            match at {
                Some(s) => match parse_rat(&s) {
                    Ok(x) => {
                        emit(&format!("{}\n", p.evaluate(&x)));
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
                None => {
                    emit(&render_records(
                        Format::Csv,
                        &["j"],
                        &poly_records(&p),
                        &[],
                        false,
                    ));
                    ExitCode::SUCCESS
                }
            }
        }
        EvalCmd::Theta { n, missing, at } => {
            let set = match MissingFactorSet::new(n, missing) {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            match at {
                Some(s) => match parse_rat(&s) {
                    Ok(x) => {
                        emit(&format!("{}\n", missing_factor::theta_eval(&set, &x)));
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                },
                None => {
                    let p = missing_factor::theta_poly(&set);
                    emit(&render_records(
                        Format::Csv,
                        &["j"],
                        &poly_records(&p),
                        &[],
                        false,
                    ));
                    ExitCode::SUCCESS
                }
            }
        }
        EvalCmd::Esh { n, l, r, v } => {
            emit(&format!("{}\n", harmonic::esh(n, l, r, v)));
            ExitCode::SUCCESS
        }
    }
}

fn run_enumerate(n: usize, l: usize) -> ExitCode {
    match enumerate_subsets(n, l) {
        Ok(iter) => {
            let mut out = String::new();
            for subset in iter {
                let line: Vec<String> = subset.members().iter().map(|k| k.to_string()).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn run_verify(max_n: usize, only: Vec<String>, format: ReportFormat) -> ExitCode {
    let reports = if only.is_empty() {
        identities::run_all(max_n)
    } else {
        match identities::run_selected(&only, max_n) {
            Ok(r) => r,
            Err(e) => return usage_error(&e),
        }
    };
    let all_passed = reports.iter().all(IdentityReport::is_pass);
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                let status = if r.is_pass() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {:9} {}/{}", r.id, r.passed, r.checked));
                if let Some(f) = &r.first_failure {
                    let params: Vec<String> =
                        f.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    out.push_str(&format!(
                        "  first failure at {}: {}",
                        params.join(" "),
                        f.detail
                    ));
                }
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.is_pass()).count();
            out.push_str(&format!(
                "{} identities, {} passed, {} failed\n",
                reports.len(),
                reports.len() - failed,
                failed
            ));
            emit(&out);
        }
        ReportFormat::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "checked": r.checked,
                        "passed": r.passed,
                        "first_failure": r.first_failure.as_ref().map(|f| {
                            json!({
                                "params": f.params.iter()
                                    .map(|(k, v)| json!({"name": k, "value": v}))
                                    .collect::<Vec<_>>(),
                                "detail": f.detail,
                            })
                        }),
                    })
                })
                .collect();
            let out = json!({ "reports": items, "all_passed": all_passed });
            emit(&(serde_json::to_string_pretty(&out).unwrap() + "\n"));
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Table(args) => run_table(args),
        Command::Eval(cmd) => run_eval(cmd),
        Command::Enumerate { n, l } => run_enumerate(n, l),
        Command::Verify {
            max_n,
            only,
            format,
        } => run_verify(max_n, only, format),
    }
}
