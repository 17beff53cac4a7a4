//! Command-line surface: `eval`, `table`, `verify`, `bench`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench;
use crate::error::Error;
use crate::format::{self, LatexOptions, TableFile};
use crate::realdeg::stirling_real;
use crate::stirling::{knuth_real, stirling, Method, Region, StirlingTable};
use crate::verify::{self, Family, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Caps the number of cells a single request may touch.
pub const MAX_REGION_ENV: &str = "GSTIRLING_MAX_REGION";
pub const DEFAULT_MAX_CELLS: usize = 1_000_000;
pub const MAX_ABS_DEGREE: i64 = 500;
pub const MAX_ORDER: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "gstirling", version, about = "Generalized Stirling numbers of the first kind")]
pub struct Cli {
    /// Reserved for randomized checks; currently unused.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Fan independent work out over threads.
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one cell s(n, k).
    Eval(EvalArgs),
    /// Build and emit a table.
    Table(TableArgs),
    /// Run the identity suite.
    Verify(VerifyArgs),
    /// Time the algorithms cell by cell.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Defn,
    Recurrence,
    Knuth,
    Partition,
    Symfunc,
    Real,
}

impl MethodArg {
    fn exact(self) -> Option<Method> {
        match self {
            MethodArg::Defn => Some(Method::Definition),
            MethodArg::Recurrence => Some(Method::Recurrence),
            MethodArg::Knuth => Some(Method::Knuth),
            MethodArg::Partition => Some(Method::PartitionSum),
            MethodArg::Symfunc => Some(Method::SymFunc),
            MethodArg::Real => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Latex,
    Native,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Degree: an integer for exact values, a non-integer for the float path.
    #[arg(short = 'n', long = "degree", allow_negative_numbers = true)]
    pub degree: String,
    #[arg(short = 'k', long = "order")]
    pub order: usize,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// n_min:n_max:k_max
    #[arg(long, default_value = "-5:5:6", allow_hyphen_values = true)]
    pub region: String,
    #[arg(long, value_enum, default_value = "native")]
    pub format: FormatArg,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub method: MethodArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// LaTeX: group digits of long numbers with commas.
    #[arg(long)]
    pub group_digits: bool,
    /// LaTeX: label the degree-6 column "-6" as in the historical table.
    #[arg(long)]
    pub legacy_minus_six: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "-8:8:12", allow_hyphen_values = true)]
    pub region: String,
    /// Tolerance for the floating-point checks.
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Restrict to these identity families (repeatable).
    #[arg(long)]
    pub only: Vec<String>,
    /// Upper degree for the harmonic identities.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Corrupt one table cell first; the run must then fail.
    #[arg(long)]
    pub inject_fault: bool,
    /// Print the machine-readable report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "-10:0:8", allow_hyphen_values = true)]
    pub region: String,
    /// Comma-separated subset of defn,recurrence,knuth,partition,symfunc.
    #[arg(long, value_delimiter = ',')]
    pub algorithms: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub repetitions: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A command failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::DivisionByZero | Error::Consistency(_) => EXIT_DOMAIN,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn io_failure(e: std::io::Error) -> Failure {
    usage(format!("I/O error: {e}"))
}

fn max_cells() -> usize {
    std::env::var(MAX_REGION_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// Parses a region and enforces the configured limits.
pub fn checked_region(text: &str) -> Result<Region, Error> {
    let region: Region = text.parse()?;
    if region.n_min.abs() > MAX_ABS_DEGREE || region.n_max.abs() > MAX_ABS_DEGREE || region.k_max > MAX_ORDER {
        return Err(Error::Region(format!(
            "region {region} exceeds |n| <= {MAX_ABS_DEGREE}, k <= {MAX_ORDER}"
        )));
    }
    let cap = max_cells();
    if region.cell_count() > cap {
        return Err(Error::Region(format!(
            "region {region} has {} cells, over the {MAX_REGION_ENV} cap of {cap}",
            region.cell_count()
        )));
    }
    Ok(region)
}

/// Creation time for table headers; `SOURCE_DATE_EPOCH` pins it for reproducible output.
fn creation_time() -> u64 {
    std::env::var("SOURCE_DATE_EPOCH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0))
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(io_failure),
        None => out.write_all(text.as_bytes()).map_err(io_failure),
    }
}

enum ParsedDegree {
    Integer(i64),
    Real(f64),
}

fn parse_degree(s: &str) -> Result<ParsedDegree, Failure> {
    if let Ok(n) = s.parse::<i64>() {
        return Ok(ParsedDegree::Integer(n));
    }
    let a: f64 = s.parse().map_err(|_| usage(format!("degree {s:?} is not a number")))?;
    if !a.is_finite() {
        return Err(Error::Domain(format!("degree {s} is not finite")).into());
    }
    if a.fract() == 0.0 && a.abs() <= i64::MAX as f64 {
        Ok(ParsedDegree::Integer(a as i64))
    } else {
        Ok(ParsedDegree::Real(a))
    }
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = args.order;
    let value = match (parse_degree(&args.degree)?, args.method) {
        (ParsedDegree::Integer(n), Some(MethodArg::Real)) => {
            return Err(Error::Domain(format!("degree {n} is an integer; the real path needs a non-integer")).into())
        }
        (ParsedDegree::Integer(n), method) => {
            if n.abs() > MAX_ABS_DEGREE || k > MAX_ORDER {
                return Err(Error::Region(format!("cell ({n},{k}) exceeds |n| <= {MAX_ABS_DEGREE}, k <= {MAX_ORDER}")).into());
            }
            let method = method.and_then(MethodArg::exact).unwrap_or(Method::Recurrence);
            stirling(n, k, method)?.to_string()
        }
        (ParsedDegree::Real(a), None | Some(MethodArg::Real)) => format!("{}", stirling_real(a, k)?),
        (ParsedDegree::Real(a), Some(MethodArg::Knuth)) => {
            knuth_real(a, k as u32)?;
            unreachable!("binomial sum accepted a non-integer degree")
        }
        (ParsedDegree::Real(a), Some(m)) => {
            return Err(Error::Domain(format!("method {m:?} is exact; degree {a} needs --method real")).into())
        }
    };
    writeln!(out, "{value}").map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let region = checked_region(&args.region)?;
    let method = args
        .method
        .exact()
        .ok_or_else(|| usage("tables are exact; choose defn, recurrence, knuth, partition or symfunc"))?;
    let table = StirlingTable::build(region, method)?;
    let text = match args.format {
        FormatArg::Csv => format::to_csv(&table),
        FormatArg::Json => format::to_json(&TableFile::new(table, creation_time())),
        FormatArg::Native => TableFile::new(table, creation_time()).to_native(),
        FormatArg::Latex => format::to_latex(
            &table,
            LatexOptions { group_digits: args.group_digits, legacy_minus_six: args.legacy_minus_six },
        ),
    };
    emit(out, &args.out, &text)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let region = checked_region(&args.region)?;
    let only = args
        .only
        .iter()
        .map(|s| s.parse::<Family>().map_err(|_| usage(format!("unknown family {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let opts = VerifyOptions { region, real_tol: args.tol, only, n_max: args.n_max, inject_fault: args.inject_fault };
    let report = verify::run(&opts);
    if args.json {
        writeln!(out, "{}", report.to_json()).map_err(io_failure)?;
    } else {
        writeln!(out, "{report}").map_err(io_failure)?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_bench(args: &BenchArgs, parallel: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let region = checked_region(&args.region)?;
    let algorithms = if args.algorithms.is_empty() {
        Method::ALL.to_vec()
    } else {
        args.algorithms
            .iter()
            .map(|s| s.parse::<Method>())
            .collect::<Result<Vec<_>, _>>()?
    };
    let records = bench::run(region, &algorithms, args.repetitions, parallel);
    emit(out, &args.out, &bench::to_csv(&records))?;
    for (k, frontier) in bench::crossover(&records) {
        let line = match frontier {
            Some(n) => format!("crossover k={k}: partition sum slower than knuth for all n <= {n}"),
            None => format!("crossover k={k}: partition sum not slower at the most negative degree"),
        };
        writeln!(err, "{line}").map_err(io_failure)?;
    }
    Ok(EXIT_OK)
}

/// Parses `argv` and runs the command, returning the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, cli.parallel, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gstirling").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_cells() {
        assert_eq!(call(&["eval", "-n", "-3", "-k", "2"]), (0, "85/216\n".into(), String::new()));
        assert_eq!(call(&["eval", "-n", "0", "-k", "0"]).1, "1\n");
        assert_eq!(call(&["eval", "-n", "2.0", "-k", "1"]).1, "-1\n");
        let (code, out, _) = call(&["eval", "-n", "0.5", "-k", "0"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("0.564189583"), "{out}");
        for m in ["defn", "recurrence", "knuth", "partition", "symfunc"] {
            assert_eq!(call(&["eval", "-n", "-5", "-k", "1", "--method", m]).1, "-137/7200\n", "{m}");
        }
    }

    #[test]
    fn eval_errors() {
        assert_eq!(call(&["eval", "-n", "0.5", "-k", "1", "--method", "knuth"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["eval", "-n", "0.5", "-k", "1", "--method", "defn"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["eval", "-n", "3", "-k", "1", "--method", "real"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["eval", "-n", "3", "-k", "1", "--method", "knuth"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["eval", "-n", "3", "-k", "1", "--method", "guess"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "-n", "x", "-k", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "-n", "900", "-k", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_csv() {
        let (code, out, _) = call(&["table", "--region", "0:0:2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,k,value\n0,0,1\n0,1,0\n0,2,0\n");
        assert_eq!(call(&["table", "--region", "-600:0:2"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--region", "1:3:2", "--method", "knuth"]).0, EXIT_DOMAIN);
    }

    #[test]
    fn verify_filters_and_faults() {
        let (code, out, _) = call(&["verify", "--only", "harmonic", "--n-max", "20"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS harmonic"));
        assert!(!out.contains("agreement"));
        let (code, out, _) = call(&["verify", "--region", "-3:3:4", "--only", "agreement", "--inject-fault"]);
        assert_eq!(code, EXIT_VERIFY_FAILED);
        assert!(out.contains("first counterexample at (n=-1, k=1)"), "{out}");
        assert_eq!(call(&["verify", "--only", "nonsense"]).0, EXIT_USAGE);
    }
}
