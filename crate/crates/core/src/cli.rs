//! Command-line front end.
//!
//! Every subcommand renders into an [`Output`] (text plus a success flag) so
//! the whole surface can be tested without spawning a process; the binary
//! only parses arguments, writes the text and maps the flag to an exit code.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::enumerate::{
    count_bivariate_oracle, count_block_separated, count_block_separated_explicit,
    list_block_separated, DEFAULT_LISTING_CAP, DEFAULT_PARTITION_CAP,
};
use crate::error::Error;
use crate::fibonacci::{
    decoration_count, enumerate_decorations, tiling_to_string, word_to_independent_set,
    word_to_tiling, DEFAULT_DECORATION_CAP,
};
use crate::qseries::{
    euler_inverse, euler_inverse_pentagonal, euler_inverse_product, overpartition_product,
    TruncatedSeries,
};
use crate::recurrence::euler_factorized_gf;
use crate::symfun::{bivariate_gf, fibonacci_weighted_gf, power_of_two, weighted_gf};
use crate::transfer::matrix_product_gf;

/// Default range of `n` over which `verify` runs the brute-force oracles.
pub const DEFAULT_VERIFY_ORACLE_CAP: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Matrix,
    Recurrence,
    Symmetric,
    Bruteforce,
    All,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Matrix => "matrix",
            Method::Recurrence => "recurrence",
            Method::Symmetric => "symmetric",
            Method::Bruteforce => "bruteforce",
            Method::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Parser)]
#[command(
    name = "blocksep",
    version,
    about = "Count block-separated overpartitions exactly"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Highest n (truncation order).
    #[arg(long, global = true, env = "BLOCKSEP_LIMIT", default_value_t = 10)]
    pub limit: usize,

    #[arg(long, global = true, env = "BLOCKSEP_METHOD", value_enum, default_value_t = Method::Matrix)]
    pub method: Method,

    #[arg(long, global = true, env = "BLOCKSEP_FORMAT", value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Overrides the enumeration cap of the subcommand (brute-force n for
    /// seq/table, oracle range for verify, n for list, r for decorations).
    #[arg(long = "cap-enum", global = true, env = "BLOCKSEP_CAP_ENUM")]
    pub cap_enum: Option<usize>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true, env = "BLOCKSEP_OUTPUT")]
    pub output: Option<PathBuf>,

    /// Run independent methods on separate threads.
    #[arg(long, global = true, env = "BLOCKSEP_PARALLEL")]
    pub parallel: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print b(0), ..., b(limit).
    Seq,
    /// Print p(n), pbar(n) and b(n) side by side.
    Table,
    /// Run the cross-method and oracle checks.
    Verify {
        /// Corrupt one coefficient of the matrix route (detector self-test).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// List decoration words of length r with their independent sets and tilings.
    Decorations { r: usize },
    /// Print the triangle b(n, m) by number m of overlined blocks.
    Bivariate,
    /// List every block-separated overpartition of n.
    List { n: usize },
}

/// Everything a subcommand needs besides its own positional arguments.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub limit: usize,
    pub method: Method,
    pub format: Format,
    pub cap_enum: Option<usize>,
    pub parallel: bool,
}

impl RunConfig {
    pub fn new(limit: usize) -> Self {
        RunConfig {
            limit,
            method: Method::Matrix,
            format: Format::Plain,
            cap_enum: None,
            parallel: false,
        }
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn format(mut self, format: Format) -> Self {
        self.format = format;
        self
    }

    pub fn cap_enum(mut self, cap: usize) -> Self {
        self.cap_enum = Some(cap);
        self
    }

    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }
}

impl From<&Cli> for RunConfig {
    fn from(cli: &Cli) -> Self {
        RunConfig {
            limit: cli.limit,
            method: cli.method,
            format: cli.format,
            cap_enum: cli.cap_enum,
            parallel: cli.parallel,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("methods disagree: {0}")]
    Disagreement(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Disagreement(_) => 1,
            CliError::Core(_) | CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

/// Rendered result of a subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

/// One named verification with the range of `n` it covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, hi: usize, failure: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            range: format!("0..={hi}"),
            passed: failure.is_none(),
            detail: failure,
        }
    }
}

#[derive(Serialize)]
struct JsonDoc<'a> {
    n: usize,
    values: Value,
    method: &'a str,
    checks: &'a [Check],
}

fn json_doc(n: usize, values: Value, method: &str, checks: &[Check]) -> String {
    let doc = JsonDoc {
        n,
        values,
        method,
        checks,
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

fn strings<T: ToString>(v: &[T]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn reject_bfile(format: Format, what: &str) -> Result<(), CliError> {
    if format == Format::Bfile {
        return Err(CliError::Usage(format!(
            "the bfile format holds a single sequence; {what} cannot be written as one (try `seq --format bfile`)"
        )));
    }
    Ok(())
}

/// `b(0..=limit)` by one method. `Method::All` is rejected here.
pub fn compute_sequence(method: Method, limit: usize, cap: usize) -> Result<Vec<BigInt>, CliError> {
    let series = match method {
        Method::Matrix => matrix_product_gf(limit),
        Method::Recurrence => euler_factorized_gf(limit),
        Method::Symmetric => fibonacci_weighted_gf(limit),
        Method::Bruteforce => {
            if limit > cap {
                return Err(Error::CapExceeded {
                    what: "brute-force limit",
                    requested: limit,
                    cap,
                }
                .into());
            }
            return (0..=limit)
                .map(|n| Ok(BigInt::from(count_block_separated(n, cap)?)))
                .collect();
        }
        Method::All => {
            return Err(CliError::Usage(
                "`all` is a comparison, not a single method".into(),
            ))
        }
    };
    Ok(series.into_coeffs())
}

fn first_difference(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Runs every applicable method and returns the common sequence, or the
/// first coefficient where a method departs from the matrix route.
pub fn agreed_sequence(cfg: &RunConfig) -> Result<(Vec<BigInt>, Vec<Check>), CliError> {
    let cap = cfg.cap_enum.unwrap_or(DEFAULT_PARTITION_CAP);
    let mut methods = vec![Method::Matrix, Method::Recurrence, Method::Symmetric];
    if cfg.limit <= cap {
        methods.push(Method::Bruteforce);
    }
    let results: Vec<Result<Vec<BigInt>, CliError>> = if cfg.parallel {
        std::thread::scope(|scope| {
            let handles: Vec<_> = methods
                .iter()
                .map(|&m| scope.spawn(move || compute_sequence(m, cfg.limit, cap)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("method thread panicked"))
                .collect()
        })
    } else {
        methods
            .iter()
            .map(|&m| compute_sequence(m, cfg.limit, cap))
            .collect()
    };
    let results = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let reference = &results[0];
    let mut checks = Vec::new();
    for (m, seq) in methods.iter().zip(&results).skip(1) {
        let name = format!("matrix_vs_{}", m.name());
        match first_difference(reference, seq) {
            None => checks.push(Check::new(&name, cfg.limit, None)),
            Some(n) => {
                return Err(CliError::Disagreement(format!(
                    "{} gives b({n}) = {} but matrix gives {}",
                    m.name(),
                    seq[n],
                    reference[n]
                )))
            }
        }
    }
    Ok((results.into_iter().next().expect("matrix result"), checks))
}

fn sequence_for(cfg: &RunConfig) -> Result<(Vec<BigInt>, Vec<Check>), CliError> {
    match cfg.method {
        Method::All => agreed_sequence(cfg),
        m => Ok((
            compute_sequence(m, cfg.limit, cfg.cap_enum.unwrap_or(DEFAULT_PARTITION_CAP))?,
            Vec::new(),
        )),
    }
}

pub fn cmd_seq(cfg: &RunConfig) -> Result<Output, CliError> {
    let (values, checks) = sequence_for(cfg)?;
    let text = match cfg.format {
        Format::Plain => {
            let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
            parts.join(" ") + "\n"
        }
        Format::Csv => {
            let mut s = String::from("n,b\n");
            for (n, v) in values.iter().enumerate() {
                writeln!(s, "{n},{v}").unwrap();
            }
            s
        }
        Format::Bfile => bfile(&values),
        Format::Json => json_doc(cfg.limit, strings(&values), cfg.method.name(), &checks),
    };
    Ok(Output {
        text,
        success: true,
    })
}

/// `n value` per line, `n` from 0, single space, no header.
pub fn bfile(values: &[BigInt]) -> String {
    let mut s = String::new();
    for (n, v) in values.iter().enumerate() {
        writeln!(s, "{n} {v}").unwrap();
    }
    s
}

fn sandwich_check(p: &[BigInt], pbar: &[BigInt], b: &[BigInt]) -> Check {
    let failure = (0..b.len()).find_map(|n| {
        let chain = p[n] <= b[n] && b[n] <= pbar[n];
        let lower_strict = n == 0 || p[n] < b[n];
        (!(chain && lower_strict)).then(|| format!("n={n}: p={} b={} pbar={}", p[n], b[n], pbar[n]))
    });
    Check::new("sandwich", b.len() - 1, failure)
}

pub fn cmd_table(cfg: &RunConfig) -> Result<Output, CliError> {
    reject_bfile(cfg.format, "the three-row table")?;
    let (b, mut checks) = sequence_for(cfg)?;
    let p = euler_inverse(cfg.limit).into_coeffs();
    let pbar = overpartition_product(cfg.limit).into_coeffs();
    checks.push(sandwich_check(&p, &pbar, &b));
    let success = checks.iter().all(|c| c.passed);

    let labels = ["p(n)", "pbar(n)", "b(n)"];
    let rows = [&p, &pbar, &b];
    let text = match cfg.format {
        Format::Plain => {
            let width = |n: usize| {
                rows.iter()
                    .map(|r| r[n].to_string().len())
                    .chain([n.to_string().len()])
                    .max()
                    .unwrap_or(1)
            };
            let widths: Vec<usize> = (0..=cfg.limit).map(width).collect();
            let mut s = String::new();
            let mut line = format!("{:<7} |", "n");
            for (n, w) in widths.iter().enumerate() {
                write!(line, " {n:>w$}").unwrap();
            }
            writeln!(s, "{line}").unwrap();
            for (label, row) in labels.iter().zip(rows) {
                let mut line = format!("{label:<7} |");
                for (v, w) in row.iter().zip(&widths) {
                    write!(line, " {:>w$}", v.to_string()).unwrap();
                }
                writeln!(s, "{line}").unwrap();
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n");
            for n in 0..=cfg.limit {
                write!(s, ",{n}").unwrap();
            }
            s.push('\n');
            for (label, row) in ["p", "pbar", "b"].iter().zip(rows) {
                s.push_str(label);
                for v in row.iter() {
                    write!(s, ",{v}").unwrap();
                }
                s.push('\n');
            }
            s
        }
        Format::Json => json_doc(
            cfg.limit,
            json!({ "p": strings(&p), "pbar": strings(&pbar), "b": strings(&b) }),
            cfg.method.name(),
            &checks,
        ),
        Format::Bfile => unreachable!("rejected above"),
    };
    Ok(Output { text, success })
}

fn compare_series(name: &str, hi: usize, a: &[BigInt], b: &[BigInt]) -> Check {
    let failure =
        first_difference(a, b).map(|n| format!("first difference at n={n}: {} vs {}", a[n], b[n]));
    Check::new(name, hi, failure)
}

/// Runs the verification suite up to `limit`, with the brute-force oracles
/// up to the oracle cap.
pub fn verify_checks(cfg: &RunConfig, inject_fault: bool) -> Vec<Check> {
    let n = cfg.limit;
    let oracle_hi = n.min(cfg.cap_enum.unwrap_or(DEFAULT_VERIFY_ORACLE_CAP));

    let (mut matrix, recurrence, symmetric) = if cfg.parallel {
        std::thread::scope(|s| {
            let m = s.spawn(|| matrix_product_gf(n));
            let r = s.spawn(|| euler_factorized_gf(n));
            let y = s.spawn(|| fibonacci_weighted_gf(n));
            (m.join().unwrap(), r.join().unwrap(), y.join().unwrap())
        })
    } else {
        (
            matrix_product_gf(n),
            euler_factorized_gf(n),
            fibonacci_weighted_gf(n),
        )
    };
    if inject_fault {
        let mut coeffs = matrix.into_coeffs();
        coeffs[n] += 1;
        matrix = TruncatedSeries::from_vec(coeffs);
    }
    let b = matrix.coeffs();
    let p = euler_inverse_pentagonal(n).into_coeffs();
    let pbar = overpartition_product(n).into_coeffs();
    let mut checks = vec![
        compare_series("partition_routes", n, &p, euler_inverse_product(n).coeffs()),
        compare_series("matrix_vs_recurrence", n, b, recurrence.coeffs()),
        compare_series("matrix_vs_symmetric", n, b, symmetric.coeffs()),
    ];

    let mut weighted = Vec::new();
    let mut explicit = Vec::new();
    let mut bivariate_oracle = Vec::new();
    for k in 0..=oracle_hi {
        weighted.push(BigInt::from(
            count_block_separated(k, usize::MAX).expect("uncapped"),
        ));
        let row = count_bivariate_oracle(k, usize::MAX).expect("uncapped");
        explicit.push(BigInt::from(row.iter().sum::<BigUint>()));
        bivariate_oracle.push(row);
    }
    checks.push(compare_series(
        "oracle_weighted_count",
        oracle_hi,
        &b[..=oracle_hi],
        &weighted,
    ));
    checks.push(compare_series(
        "oracle_explicit_enumeration",
        oracle_hi,
        &b[..=oracle_hi],
        &explicit,
    ));

    let triangle = bivariate_gf(n);
    let biv_failure = (0..=oracle_hi)
        .find(|&k| triangle.row(k) != bivariate_oracle[k].as_slice())
        .map(|k| format!("row {k} differs from the enumeration"));
    checks.push(Check::new("bivariate_vs_oracle", oracle_hi, biv_failure));

    let to_int = |v: Vec<BigUint>| -> Vec<BigInt> { v.into_iter().map(BigInt::from).collect() };
    checks.push(compare_series(
        "bivariate_row_sums",
        n,
        b,
        &to_int(triangle.row_sums()),
    ));
    checks.push(compare_series(
        "bivariate_column_zero",
        n,
        &p,
        &to_int(triangle.column(0)),
    ));
    checks.push(compare_series(
        "weight_one_is_partitions",
        n,
        &p,
        weighted_gf(n, |_| BigInt::one()).coeffs(),
    ));
    checks.push(compare_series(
        "weight_two_pow_is_overpartitions",
        n,
        &pbar,
        weighted_gf(n, power_of_two).coeffs(),
    ));
    checks.push(sandwich_check(&p, &pbar, b));
    checks
}

pub fn cmd_verify(cfg: &RunConfig, inject_fault: bool) -> Result<Output, CliError> {
    reject_bfile(cfg.format, "a verification report")?;
    let checks = verify_checks(cfg, inject_fault);
    let success = checks.iter().all(|c| c.passed);
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                write!(s, "{status} {} n in {}", c.name, c.range).unwrap();
                if let Some(d) = &c.detail {
                    write!(s, " ({d})").unwrap();
                }
                s.push('\n');
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            writeln!(s, "{passed}/{} checks passed", checks.len()).unwrap();
            s
        }
        Format::Csv => {
            let mut s = String::from("check,range,passed\n");
            for c in &checks {
                writeln!(s, "{},{},{}", c.name, c.range, c.passed).unwrap();
            }
            s
        }
        Format::Json => json_doc(cfg.limit, Value::Null, "all", &checks),
        Format::Bfile => unreachable!("rejected above"),
    };
    Ok(Output { text, success })
}

fn render_set(set: &BTreeSet<usize>, sep: &str) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn cmd_decorations(cfg: &RunConfig, r: usize) -> Result<Output, CliError> {
    reject_bfile(cfg.format, "a decoration listing")?;
    let cap = cfg.cap_enum.unwrap_or(DEFAULT_DECORATION_CAP);
    let words = enumerate_decorations(r, cap)?;
    let expected = decoration_count(r);
    let count_ok = BigUint::from(words.len()) == expected;
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for w in &words {
                let word = if w.is_empty() {
                    "-".to_string()
                } else {
                    w.to_string()
                };
                let set = word_to_independent_set(w);
                let tiling = tiling_to_string(&word_to_tiling(w));
                writeln!(s, "{word}\t{{{}}}\t{tiling}", render_set(&set, ",")).unwrap();
            }
            writeln!(s, "count {}", words.len()).unwrap();
            s
        }
        Format::Csv => {
            let mut s = String::from("word,independent_set,tiling\n");
            for w in &words {
                let set = word_to_independent_set(w);
                let tiling = tiling_to_string(&word_to_tiling(w));
                writeln!(s, "{w},{},{tiling}", render_set(&set, " ")).unwrap();
            }
            s
        }
        Format::Json => {
            let values: Vec<Value> = words
                .iter()
                .map(|w| {
                    json!({
                        "word": w.to_string(),
                        "independent_set": word_to_independent_set(w),
                        "tiling": tiling_to_string(&word_to_tiling(w)),
                    })
                })
                .collect();
            let check = Check {
                name: "count_is_fibonacci".into(),
                range: format!("r={r}"),
                passed: count_ok,
                detail: (!count_ok).then(|| format!("expected {expected}")),
            };
            json_doc(r, Value::Array(values), "enumeration", &[check])
        }
        Format::Bfile => unreachable!("rejected above"),
    };
    Ok(Output {
        text,
        success: count_ok,
    })
}

pub fn cmd_bivariate(cfg: &RunConfig) -> Result<Output, CliError> {
    reject_bfile(cfg.format, "the bivariate triangle")?;
    let triangle = bivariate_gf(cfg.limit);
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for (n, row) in triangle.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(s, "{n}: {}", cells.join(" ")).unwrap();
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,m,count\n");
            for (n, row) in triangle.rows().iter().enumerate() {
                for (m, c) in row.iter().enumerate() {
                    writeln!(s, "{n},{m},{c}").unwrap();
                }
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = triangle.rows().iter().map(|r| strings(r)).collect();
            json_doc(cfg.limit, Value::Array(rows), "symmetric", &[])
        }
        Format::Bfile => unreachable!("rejected above"),
    };
    Ok(Output {
        text,
        success: true,
    })
}

pub fn cmd_list(cfg: &RunConfig, n: usize) -> Result<Output, CliError> {
    reject_bfile(cfg.format, "a listing of overpartitions")?;
    let cap = cfg.cap_enum.unwrap_or(DEFAULT_LISTING_CAP);
    let items = list_block_separated(n, cap)?;
    let text = match cfg.format {
        Format::Plain => {
            let mut s = String::new();
            for d in &items {
                writeln!(s, "{d}").unwrap();
            }
            writeln!(s, "count {}", items.len()).unwrap();
            s
        }
        Format::Csv => {
            let mut s = String::from("index,partition,overlined_blocks\n");
            for (i, d) in items.iter().enumerate() {
                writeln!(s, "{i},{d},{}", d.overlined()).unwrap();
            }
            s
        }
        Format::Json => {
            let values: Vec<Value> = items
                .iter()
                .map(|d| {
                    let blocks: Vec<Value> = d
                        .skeleton()
                        .blocks()
                        .iter()
                        .enumerate()
                        .map(|(i, b)| {
                            json!({
                                "part": b.part,
                                "multiplicity": b.multiplicity,
                                "overlined": d.decoration().is_overlined(i),
                            })
                        })
                        .collect();
                    json!({ "text": d.to_string(), "blocks": blocks })
                })
                .collect();
            let explicit = count_block_separated_explicit(n, usize::MAX)?;
            let check = Check {
                name: "listing_matches_count".into(),
                range: format!("n={n}"),
                passed: BigUint::from(items.len()) == explicit,
                detail: None,
            };
            json_doc(n, Value::Array(values), "bruteforce", &[check])
        }
        Format::Bfile => unreachable!("rejected above"),
    };
    Ok(Output {
        text,
        success: true,
    })
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cfg = RunConfig::from(cli);
    match &cli.command {
        Command::Seq => cmd_seq(&cfg),
        Command::Table => cmd_table(&cfg),
        Command::Verify { inject_fault } => cmd_verify(&cfg, *inject_fault),
        Command::Decorations { r } => cmd_decorations(&cfg, *r),
        Command::Bivariate => cmd_bivariate(&cfg),
        Command::List { n } => cmd_list(&cfg, *n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seq_plain() {
        let out = cmd_seq(&RunConfig::new(10)).unwrap();
        assert_eq!(out.text, "1 2 4 7 12 19 31 47 72 107 157\n");
        assert_eq!(cmd_seq(&RunConfig::new(0)).unwrap().text, "1\n");
    }

    #[test]
    fn seq_all_methods_agree() {
        for parallel in [false, true] {
            let cfg = RunConfig::new(10).method(Method::All).parallel(parallel);
            assert_eq!(
                cmd_seq(&cfg).unwrap().text,
                "1 2 4 7 12 19 31 47 72 107 157\n"
            );
        }
    }

    #[test]
    fn bruteforce_respects_cap() {
        let cfg = RunConfig::new(12).method(Method::Bruteforce).cap_enum(10);
        let err = cmd_seq(&cfg).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let cfg = RunConfig::new(12).method(Method::Bruteforce);
        assert!(cmd_seq(&cfg).is_ok());
    }

    #[test]
    fn all_skips_bruteforce_past_cap() {
        let cfg = RunConfig::new(12).method(Method::All).cap_enum(5);
        let (_, checks) = agreed_sequence(&cfg).unwrap();
        assert_eq!(checks.len(), 2);
        let cfg = RunConfig::new(12).method(Method::All);
        assert_eq!(agreed_sequence(&cfg).unwrap().1.len(), 3);
    }

    #[test]
    fn bfile_layout() {
        let out = cmd_seq(&RunConfig::new(3).format(Format::Bfile)).unwrap();
        assert_eq!(out.text, "0 1\n1 2\n2 4\n3 7\n");
    }

    #[test]
    fn table_csv() {
        let out = cmd_table(&RunConfig::new(10).format(Format::Csv)).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "n,0,1,2,3,4,5,6,7,8,9,10");
        assert_eq!(lines[1], "p,1,1,2,3,5,7,11,15,22,30,42");
        assert_eq!(lines[2], "pbar,1,2,4,8,14,24,40,64,100,154,232");
        assert_eq!(lines[3], "b,1,2,4,7,12,19,31,47,72,107,157");
        assert!(out.success);

        let zero = cmd_table(&RunConfig::new(0).format(Format::Csv)).unwrap();
        assert_eq!(zero.text, "n,0\np,1\npbar,1\nb,1\n");
        assert!(cmd_table(&RunConfig::new(3).format(Format::Bfile)).is_err());
    }

    #[test]
    fn verify_passes_and_detects_faults() {
        let cfg = RunConfig::new(30);
        assert!(cmd_verify(&cfg, false).unwrap().success);
        let faulty = cmd_verify(&cfg, true).unwrap();
        assert!(!faulty.success);
        assert!(faulty.text.contains("FAIL matrix_vs_recurrence"));
    }

    #[test]
    fn decorations_listing() {
        let out = cmd_decorations(&RunConfig::new(10), 3).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "000\t{}\t[0][0][0][0]");
        assert_eq!(lines[4], "101\t{1,3}\t[10][10]");
        assert_eq!(lines[5], "count 5");
        let zero = cmd_decorations(&RunConfig::new(10), 0).unwrap();
        assert_eq!(zero.text, "-\t{}\t[0]\ncount 1\n");
        let five = cmd_decorations(&RunConfig::new(10), 5).unwrap();
        assert!(five.text.ends_with("count 13\n"));
        assert!(cmd_decorations(&RunConfig::new(10).cap_enum(4), 5).is_err());
    }

    #[test]
    fn bivariate_plain() {
        let out = cmd_bivariate(&RunConfig::new(5)).unwrap();
        let lines: Vec<&str> = out.text.lines().collect();
        assert_eq!(lines[0], "0: 1");
        assert_eq!(lines[1], "1: 1 1");
        assert_eq!(lines[5], "5: 7 12");
    }

    #[test]
    fn list_plain() {
        let out = cmd_list(&RunConfig::new(10), 3).unwrap();
        assert_eq!(out.text, "3\n3~\n2+1\n2+1~\n2~+1\n1+1+1\n1~+1+1\ncount 7\n");
        assert!(cmd_list(&RunConfig::new(10), 21).is_err());
        assert!(cmd_list(&RunConfig::new(10).cap_enum(22), 21).is_ok());
    }
}
