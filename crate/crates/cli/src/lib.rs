//! Command-line front end for `hookstat`.
//!
//! Exit codes: 0 when everything checked out, 1 when a verification found a
//! counterexample, 2 for usage errors (bad flags, malformed input, out of
//! range parameters).

pub mod schema;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use hookstat::abacus::CanonicalCoreAbacus;
use hookstat::cores::{
    c2, c3_divisor_sum, c3_nonvanishing, c3_qf_count, count_t_cores_by_abacus, ct_count_series,
    enumerate_t_cores, CoreSearch,
};
use hookstat::distribution::{sweep, CellReport, HookCountTable, Part, Verdict};
use hookstat::nekrasov::{check_no_identity, no_lhs_series, no_rhs, specialize, NoVerdict};
use hookstat::series::eta_power_series;
use hookstat::{decompose, Abacus, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::schema::*;

/// Rows of the reference proportion table.
pub const DEFAULT_TABLE_ROWS: [usize; 6] = [300, 600, 900, 4500, 4800, 5100];
/// Odd primes swept by `verify part1` unless `--ell` is given.
pub const DEFAULT_PART1_PRIMES: [i64; 5] = [3, 5, 7, 11, 13];
/// Primes `≡ 2 (mod 3)` swept by `verify part2` unless `--ell` is given.
pub const DEFAULT_PART2_PRIMES: [i64; 3] = [2, 5, 11];
/// Largest `n` compared against brute-force enumeration in `core-formulas`.
const ORACLE_LIMIT: usize = 30;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hookstat",
    version,
    about = "Partitions, t-cores, t-quotients and t-hook statistics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<std::path::PathBuf>,

    /// Worker threads for verification sweeps (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// 2-hooks modulo an odd prime ℓ.
    Part1,
    /// 3-hooks modulo ℓ² for primes ℓ ≡ 2 (mod 3).
    Part2,
    /// The Nekrasov–Okounkov identity and its z = 2, 4 specializations.
    NoIdentity,
    /// Three-way agreement of the 2- and 3-core counts, and general t.
    CoreFormulas,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hook lengths of a partition, row by row.
    Hooks {
        /// Comma-separated parts, e.g. "3,2,1"; empty for the empty partition.
        partition: String,
        /// Report h_t for these t (repeatable; default 2 and 3).
        #[arg(long = "t")]
        t: Vec<usize>,
    },
    /// t-core and t-quotient of a partition.
    Decompose {
        partition: String,
        #[arg(long = "t")]
        t: usize,
    },
    /// t-core of a partition and its canonical abacus.
    Core {
        partition: String,
        #[arg(long = "t")]
        t: usize,
    },
    /// Number of t-core partitions of n, by every available method.
    CoresCount {
        #[arg(long = "t")]
        t: usize,
        #[arg(long = "n")]
        n: usize,
        /// Also list the cores.
        #[arg(long)]
        witnesses: bool,
    },
    /// p_t(a, b; n) for every residue a, with proportions of p(n).
    Table {
        #[arg(long = "t", default_value_t = 2)]
        t: usize,
        #[arg(long = "b", default_value_t = 3)]
        b: u64,
        /// Rows (repeatable; default 300, 600, 900, 4500, 4800, 5100).
        #[arg(long = "n")]
        n: Vec<usize>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Primes to sweep (repeatable).
        #[arg(long = "ell")]
        ell: Vec<i64>,
        /// Restrict to one residue pair; requires --a2.
        #[arg(long, requires = "a2", allow_hyphen_values = true)]
        a1: Option<i64>,
        #[arg(long, requires = "a1", allow_hyphen_values = true)]
        a2: Option<i64>,
        #[arg(long, default_value_t = 2000)]
        nmax: usize,
        #[arg(long, default_value_t = 12)]
        mmax: usize,
        /// Lift the size guard on the identity check.
        #[arg(long)]
        allow_large: bool,
    },
    /// Both sides of the Nekrasov–Okounkov identity, degree by degree.
    NoCheck {
        #[arg(long, default_value_t = 12)]
        mmax: usize,
        #[arg(long)]
        allow_large: bool,
    },
}

/// What a subcommand produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            exit_code: EXIT_OK,
        }
    }

    fn verdict(output: String, passed: bool) -> Self {
        Self {
            output,
            exit_code: if passed { EXIT_OK } else { EXIT_COUNTEREXAMPLE },
        }
    }
}

/// Invalid input; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<hookstat::Error> for UsageError {
    fn from(e: hookstat::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(UsageError(msg.into()))
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    s.parse::<Partition>()
        .map_err(|e| UsageError(format!("malformed partition {s:?}: {e}")))
}

fn check_t(t: usize) -> CliResult<()> {
    if t < 2 {
        return usage(format!("--t must be at least 2, got {t}"));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("in-memory CSV write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

fn unsupported<T>(format: Format, command: &str) -> CliResult<T> {
    usage(format!("--format {format:?} is not supported by {command}").to_lowercase())
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn show_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        "∅".to_string()
    } else {
        join(parts, ",")
    }
}

/// Runs one parsed command line and renders its output.
pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Hooks { partition, t } => {
            cmd_hooks(partition, t, cli.format.unwrap_or(Format::Text))
        }
        Command::Decompose { partition, t } => {
            cmd_decompose(partition, *t, cli.format.unwrap_or(Format::Json))
        }
        Command::Core { partition, t } => {
            cmd_core(partition, *t, cli.format.unwrap_or(Format::Text))
        }
        Command::CoresCount { t, n, witnesses } => {
            cmd_cores_count(*t, *n, *witnesses, cli.format.unwrap_or(Format::Text))
        }
        Command::Table { t, b, n } => cmd_table(*t, *b, n, cli.format.unwrap_or(Format::Csv)),
        Command::Verify {
            theorem,
            ell,
            a1,
            a2,
            nmax,
            mmax,
            allow_large,
        } => {
            let pair = a1.zip(*a2);
            let format = cli.format.unwrap_or(Format::Text);
            match theorem {
                Theorem::Part1 => cmd_verify_part(Part::One, ell, pair, *nmax, format),
                Theorem::Part2 => cmd_verify_part(Part::Two, ell, pair, *nmax, format),
                Theorem::NoIdentity => cmd_verify_no(*mmax, *allow_large, format),
                Theorem::CoreFormulas => cmd_verify_cores(*nmax, format),
            }
        }
        Command::NoCheck { mmax, allow_large } => {
            cmd_no_check(*mmax, *allow_large, cli.format.unwrap_or(Format::Text))
        }
    }
}

pub fn cmd_hooks(partition: &str, ts: &[usize], format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(partition)?;
    let ts: Vec<usize> = if ts.is_empty() {
        vec![2, 3]
    } else {
        ts.to_vec()
    };
    for &t in &ts {
        check_t(t)?;
    }
    let rows = lambda.hook_rows();
    let report = HooksReport {
        partition: lambda.parts().to_vec(),
        size: lambda.size(),
        rows: rows.clone(),
        multiset: lambda.hook_multiset().entries().to_vec(),
        t_hooks: ts
            .iter()
            .map(|&t| THookCount {
                t,
                count: lambda.count_t_hooks(t).expect("t checked"),
            })
            .collect(),
        dimension: lambda.representation_dimension().to_string(),
    };
    let output = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = String::new();
            for row in &rows {
                writeln!(s, "{}", join(row, " ")).unwrap();
            }
            writeln!(s, "multiset: {{{}}}", join(&report.multiset, ",")).unwrap();
            for th in &report.t_hooks {
                writeln!(s, "h_{} = {}", th.t, th.count).unwrap();
            }
            writeln!(s, "dim = {}", report.dimension).unwrap();
            s
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Cell {
                row: usize,
                col: usize,
                hook: usize,
            }
            let cells: Vec<Cell> = rows
                .iter()
                .enumerate()
                .flat_map(|(i, r)| {
                    r.iter().enumerate().map(move |(j, &hook)| Cell {
                        row: i + 1,
                        col: j + 1,
                        hook,
                    })
                })
                .collect();
            to_csv(&cells)
        }
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_decompose(partition: &str, t: usize, format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(partition)?;
    check_t(t)?;
    let cq = decompose(&lambda, t)?;
    let t_hooks = lambda.count_t_hooks(t)?;
    let quotient_sizes: Vec<usize> = cq.quotient.iter().map(Partition::size).collect();
    let qsum: usize = quotient_sizes.iter().sum();
    let holds = lambda.size() == cq.core.size() + t * qsum && qsum == t_hooks;
    let report = DecomposeReport {
        partition: lambda.parts().to_vec(),
        t,
        core: cq.core.parts().to_vec(),
        quotient: cq.quotient.iter().map(|q| q.parts().to_vec()).collect(),
        size: lambda.size(),
        core_size: cq.core.size(),
        quotient_sizes,
        t_hooks,
        check: format!("{} = {} + {}·{}", lambda.size(), cq.core.size(), t, qsum),
        holds,
    };
    let output = match format {
        Format::Json => to_json(&report),
        Format::Text => {
            let quotient: Vec<String> = report.quotient.iter().map(|q| show_parts(q)).collect();
            format!(
                "core: {}\nquotient: ({})\nh_{t} = {}\n{} {}\n",
                show_parts(&report.core),
                quotient.join(" | "),
                report.t_hooks,
                report.check,
                if holds { "✓" } else { "✗" }
            )
        }
        Format::Csv => return unsupported(format, "decompose"),
    };
    Ok(Outcome::verdict(output, holds))
}

pub fn cmd_core(partition: &str, t: usize, format: Format) -> CliResult<Outcome> {
    let lambda = parse_partition(partition)?;
    check_t(t)?;
    let slid = Abacus::from_partition(&lambda, t)?.slide_all_up();
    let canonical = CanonicalCoreAbacus::from_abacus(&slid)?;
    let core = slid.to_partition();
    let report = CoreReport {
        partition: lambda.parts().to_vec(),
        t,
        core: core.parts().to_vec(),
        core_size: core.size(),
        canonical_abacus: canonical.column_counts().to_vec(),
        removed_hooks: (lambda.size() - core.size()) / t,
    };
    let output = match format {
        Format::Json => to_json(&report),
        Format::Text => format!(
            "{t}-core: {}\nremoved {} rim {t}-hooks\ncanonical abacus: ({})\n{}",
            show_parts(&report.core),
            report.removed_hooks,
            join(&report.canonical_abacus, ","),
            canonical.to_abacus()
        ),
        Format::Csv => return unsupported(format, "core"),
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_cores_count(t: usize, n: usize, witnesses: bool, format: Format) -> CliResult<Outcome> {
    check_t(t)?;
    let mut methods: Vec<(String, BigInt)> = Vec::new();
    match t {
        2 => methods.push(("closed form (8n+1 square)".into(), c2(n as u64).into())),
        3 => {
            methods.push(("divisor sum".into(), c3_divisor_sum(n as u64).into()));
            methods.push(("quadratic form".into(), c3_qf_count(n as u64).into()));
        }
        _ => {}
    }
    methods.push((
        "generating function".into(),
        ct_count_series(t, n)?[n].clone(),
    ));
    methods.push((
        "abacus enumeration".into(),
        count_t_cores_by_abacus(t, n)?[n].into(),
    ));
    if n <= ORACLE_LIMIT {
        let oracle = enumerate_t_cores(n, t, CoreSearch::Oracle)?.len();
        methods.push(("brute force".into(), oracle.into()));
    }
    let count = methods[0].1.clone();
    let mut agree = methods.iter().all(|(_, c)| *c == count);
    if t == 3 {
        agree &= c3_nonvanishing(n as u64) == (count > BigInt::from(0));
    }
    let witnesses = witnesses
        .then(|| enumerate_t_cores(n, t, CoreSearch::Abacus))
        .transpose()?
        .map(|ws| ws.iter().map(|w| w.parts().to_vec()).collect::<Vec<_>>());
    let report = CoresCountReport {
        t,
        n,
        count: count.to_string(),
        methods: methods
            .iter()
            .map(|(m, c)| MethodCount {
                method: m.clone(),
                count: c.to_string(),
            })
            .collect(),
        agree,
        witnesses,
    };
    let output = match format {
        Format::Json => to_json(&report),
        Format::Csv => to_csv(&report.methods),
        Format::Text => {
            let mut s = format!("c_{t}({n}) = {}\n", report.count);
            for m in &report.methods {
                writeln!(s, "  {}: {}", m.method, m.count).unwrap();
            }
            if let Some(ws) = &report.witnesses {
                for w in ws {
                    writeln!(s, "  {}", show_parts(w)).unwrap();
                }
            }
            if !agree {
                s.push_str("methods DISAGREE\n");
            }
            s
        }
    };
    Ok(Outcome::verdict(output, agree))
}

/// Builds the reference table rows for `t`, `b` and the requested `n`.
pub fn table_report(t: usize, b: u64, ns: &[usize]) -> CliResult<TableReport> {
    check_t(t)?;
    if b == 0 {
        return usage("--b must be at least 1");
    }
    let ns: Vec<usize> = if ns.is_empty() {
        DEFAULT_TABLE_ROWS.to_vec()
    } else {
        ns.to_vec()
    };
    let n_max = ns.iter().copied().max().unwrap_or(0);
    let table = HookCountTable::new(t, n_max)?;
    let mut rows = Vec::new();
    for &n in &ns {
        let profile = table.profile(b, n)?;
        for a in 0..b as usize {
            rows.push(TableRow {
                n,
                a: a as u64,
                count: profile.counts[a].to_string(),
                proportion: profile.proportion_4dp(a),
            });
        }
    }
    Ok(TableReport { t, b, rows })
}

pub fn cmd_table(t: usize, b: u64, ns: &[usize], format: Format) -> CliResult<Outcome> {
    let report = table_report(t, b, ns)?;
    let output = match format {
        Format::Csv => to_csv(&report.rows),
        Format::Json => to_json(&report),
        Format::Text => {
            let mut s = format!("p_{}(a,{};n) / p(n)\n", report.t, report.b);
            let mut current = None;
            for row in &report.rows {
                if current != Some(row.n) {
                    if current.is_some() {
                        s.push('\n');
                    }
                    write!(s, "{:>6}", row.n).unwrap();
                    current = Some(row.n);
                }
                write!(s, "  a={}: {}", row.a, row.proportion).unwrap();
            }
            s.push('\n');
            s
        }
    };
    Ok(Outcome::ok(output))
}

fn cell_to_schema(cell: &CellReport) -> VerifyCell {
    let (status, n, count, note) = match &cell.verdict {
        Verdict::HypothesisNotMet { reason } => (
            CellStatus::HypothesisNotMet,
            Vec::new(),
            None,
            Some(reason.clone()),
        ),
        Verdict::Verified { checked } => (CellStatus::Verified, checked.clone(), None, None),
        Verdict::Counterexample { n, count } => (
            CellStatus::Counterexample,
            vec![*n],
            Some(count.to_string()),
            None,
        ),
    };
    VerifyCell {
        ell: cell.ell,
        a1: cell.a1,
        a2: cell.a2,
        status,
        n,
        count,
        note,
    }
}

fn render_verify(report: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                ell: i64,
                a1: i64,
                a2: i64,
                status: &'a CellStatus,
                checked: usize,
                n: Option<usize>,
                count: Option<&'a str>,
            }
            let rows: Vec<Row> = report
                .cells
                .iter()
                .map(|c| Row {
                    ell: c.ell,
                    a1: c.a1,
                    a2: c.a2,
                    status: &c.status,
                    checked: if c.status == CellStatus::Verified {
                        c.n.len()
                    } else {
                        0
                    },
                    n: (c.status == CellStatus::Counterexample).then(|| c.n[0]),
                    count: c.count.as_deref(),
                })
                .collect();
            if rows.is_empty() {
                #[derive(Serialize)]
                struct Check<'a> {
                    name: &'a str,
                    passed: bool,
                    detail: &'a str,
                }
                let checks: Vec<Check> = report
                    .checks
                    .iter()
                    .map(|c| Check {
                        name: &c.name,
                        passed: c.passed,
                        detail: &c.detail,
                    })
                    .collect();
                to_csv(&checks)
            } else {
                to_csv(&rows)
            }
        }
        Format::Text => {
            let mut s = String::new();
            for c in &report.cells {
                match c.status {
                    CellStatus::Verified => {
                        let range = match (c.n.first(), c.n.last()) {
                            (Some(lo), Some(hi)) => format!(" (n = {lo}..={hi})"),
                            _ => String::new(),
                        };
                        writeln!(
                            s,
                            "ell={} a1={} a2={}: verified at {} values of n{range}",
                            c.ell,
                            c.a1,
                            c.a2,
                            c.n.len()
                        )
                        .unwrap();
                    }
                    CellStatus::Counterexample => writeln!(
                        s,
                        "ell={} a1={} a2={}: COUNTEREXAMPLE at n={} (count {})",
                        c.ell,
                        c.a1,
                        c.a2,
                        c.n[0],
                        c.count.as_deref().unwrap_or("?")
                    )
                    .unwrap(),
                    CellStatus::HypothesisNotMet => {}
                }
            }
            for c in &report.checks {
                writeln!(
                    s,
                    "[{}] {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )
                .unwrap();
            }
            let bad = report
                .cells
                .iter()
                .filter(|c| c.status == CellStatus::Counterexample)
                .count()
                + report.checks.iter().filter(|c| !c.passed).count();
            writeln!(
                s,
                "{}: {} ({} cells, {} checks, {} failures)",
                report.theorem,
                if report.verified {
                    "verified"
                } else {
                    "FAILED"
                },
                report.cells.len(),
                report.checks.len(),
                bad
            )
            .unwrap();
            s
        }
    }
}

pub fn verify_part_report(
    part: Part,
    ells: &[i64],
    pair: Option<(i64, i64)>,
    n_max: usize,
) -> CliResult<VerifyReport> {
    let ells: Vec<i64> = match (ells.is_empty(), part) {
        (false, _) => ells.to_vec(),
        (true, Part::One) => DEFAULT_PART1_PRIMES.to_vec(),
        (true, Part::Two) => DEFAULT_PART2_PRIMES.to_vec(),
    };
    for &ell in &ells {
        let ok = hookstat::cores::is_prime(ell)
            && match part {
                Part::One => ell != 2,
                Part::Two => ell % 3 == 2,
            };
        if !ok {
            return usage(match part {
                Part::One => format!("--ell {ell} is not an odd prime"),
                Part::Two => format!("--ell {ell} is not a prime ≡ 2 (mod 3)"),
            });
        }
    }
    let cells = match pair {
        None => sweep(part, &ells, n_max)?,
        Some((a1, a2)) => {
            let t = match part {
                Part::One => 2,
                Part::Two => 3,
            };
            let table = HookCountTable::new(t, n_max)?;
            ells.iter()
                .map(|&ell| {
                    let verdict = match part {
                        Part::One => {
                            hookstat::distribution::verify_part1_with(&table, ell, a1, a2, n_max)?
                        }
                        Part::Two => {
                            hookstat::distribution::verify_part2_with(&table, ell, a1, a2, n_max)?
                        }
                    };
                    Ok(CellReport {
                        ell,
                        a1,
                        a2,
                        verdict,
                    })
                })
                .collect::<CliResult<Vec<_>>>()?
        }
    };
    let cells: Vec<VerifyCell> = cells
        .iter()
        .filter(|c| !matches!(c.verdict, Verdict::HypothesisNotMet { .. }) || pair.is_some())
        .map(cell_to_schema)
        .collect();
    let verified = cells.iter().all(|c| c.status != CellStatus::Counterexample);
    Ok(VerifyReport {
        theorem: match part {
            Part::One => "part1".into(),
            Part::Two => "part2".into(),
        },
        verified,
        cells,
        checks: Vec::new(),
    })
}

fn cmd_verify_part(
    part: Part,
    ells: &[i64],
    pair: Option<(i64, i64)>,
    n_max: usize,
    format: Format,
) -> CliResult<Outcome> {
    let report = verify_part_report(part, ells, pair, n_max)?;
    Ok(Outcome::verdict(
        render_verify(&report, format),
        report.verified,
    ))
}

fn integer_sequence_matches(values: &[BigRational], exponent: usize) -> Option<usize> {
    let oracle = eta_power_series(exponent, values.len() - 1);
    values
        .iter()
        .enumerate()
        .find(|(m, v)| **v != BigRational::from_integer(oracle[*m].clone()))
        .map(|(m, _)| m)
}

pub fn no_identity_report(m_max: usize, allow_large: bool) -> CliResult<VerifyReport> {
    let mut checks = Vec::new();
    let verdict = check_no_identity(m_max, allow_large)?;
    checks.push(CheckLine {
        name: "product side = hook side".into(),
        passed: matches!(verdict, NoVerdict::Verified { .. }),
        detail: match verdict {
            NoVerdict::Verified { m_max } => format!("exact for all q-degrees m <= {m_max}"),
            NoVerdict::Counterexample { m, z_degree } => {
                format!("mismatch at q^{m}, coefficient of z^{z_degree}")
            }
        },
    });
    for (z, exponent) in [(2i64, 1usize), (4, 3)] {
        let values = specialize(m_max, &BigRational::from_integer(z.into()), allow_large)?;
        let bad = integer_sequence_matches(&values, exponent);
        checks.push(CheckLine {
            name: format!("z = {z} gives ∏(1-q^n)^{exponent}"),
            passed: bad.is_none(),
            detail: match bad {
                None => format!("coefficients agree for m <= {m_max}"),
                Some(m) => format!("mismatch at q^{m}"),
            },
        });
    }
    let verified = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        theorem: "no-identity".into(),
        verified,
        cells: Vec::new(),
        checks,
    })
}

fn cmd_verify_no(m_max: usize, allow_large: bool, format: Format) -> CliResult<Outcome> {
    let report = no_identity_report(m_max, allow_large)?;
    Ok(Outcome::verdict(
        render_verify(&report, format),
        report.verified,
    ))
}

fn first_mismatch<A: PartialEq<B>, B>(left: &[A], right: &[B]) -> Option<usize> {
    left.iter().zip(right).position(|(a, b)| a != b)
}

fn check_line(name: String, mismatch: Option<usize>, n_max: usize) -> CheckLine {
    CheckLine {
        name,
        passed: mismatch.is_none(),
        detail: match mismatch {
            None => format!("agree for all n <= {n_max}"),
            Some(n) => format!("disagree at n = {n}"),
        },
    }
}

pub fn core_formulas_report(n_max: usize) -> CliResult<VerifyReport> {
    let ns = 0..=n_max as u64;
    let divisor: Vec<u64> = ns.clone().map(c3_divisor_sum).collect();
    let qf: Vec<u64> = ns.clone().map(c3_qf_count).collect();
    let closed2: Vec<u64> = ns.clone().map(c2).collect();
    let nonvanishing: Vec<bool> = ns.map(c3_nonvanishing).collect();
    let abacus3 = count_t_cores_by_abacus(3, n_max)?;
    let abacus2 = count_t_cores_by_abacus(2, n_max)?;

    let mut checks = vec![
        check_line(
            "c3: divisor sum = quadratic form".into(),
            first_mismatch(&divisor, &qf),
            n_max,
        ),
        check_line(
            "c3: divisor sum = abacus enumeration".into(),
            first_mismatch(&divisor, &abacus3),
            n_max,
        ),
        check_line(
            "c3: nonvanishing criterion".into(),
            nonvanishing
                .iter()
                .zip(&divisor)
                .position(|(&nv, &d)| nv != (d > 0)),
            n_max,
        ),
        check_line(
            "c2: closed form = abacus enumeration".into(),
            first_mismatch(&closed2, &abacus2),
            n_max,
        ),
    ];
    let oracle_max = n_max.min(ORACLE_LIMIT);
    for (t, closed) in [(2usize, &closed2), (3, &divisor)] {
        let oracle: Vec<u64> = (0..=oracle_max)
            .map(|n| enumerate_t_cores(n, t, CoreSearch::Oracle).map(|v| v.len() as u64))
            .collect::<Result<_, _>>()?;
        checks.push(check_line(
            format!("c{t}: closed form = brute force"),
            first_mismatch(&closed[..=oracle_max], &oracle),
            oracle_max,
        ));
    }
    for t in 2..=7 {
        let series = ct_count_series(t, n_max)?;
        let abacus: Vec<BigInt> = count_t_cores_by_abacus(t, n_max)?
            .into_iter()
            .map(BigInt::from)
            .collect();
        checks.push(check_line(
            format!("c{t}: generating function = abacus enumeration"),
            first_mismatch(&series, &abacus),
            n_max,
        ));
    }
    let verified = checks.iter().all(|c| c.passed);
    Ok(VerifyReport {
        theorem: "core-formulas".into(),
        verified,
        cells: Vec::new(),
        checks,
    })
}

fn cmd_verify_cores(n_max: usize, format: Format) -> CliResult<Outcome> {
    let report = core_formulas_report(n_max)?;
    Ok(Outcome::verdict(
        render_verify(&report, format),
        report.verified,
    ))
}

pub fn no_check_report(m_max: usize, allow_large: bool) -> CliResult<NoCheckReport> {
    let lhs = no_lhs_series(m_max, allow_large)?;
    let mut degrees = Vec::new();
    for (m, left) in lhs.iter().enumerate() {
        let right = no_rhs(m, allow_large)?;
        degrees.push(NoDegree {
            m,
            product_side: left.to_string(),
            hook_side: right.to_string(),
            equal: *left == right,
        });
    }
    let at = |z: i64| -> CliResult<Vec<String>> {
        Ok(
            specialize(m_max, &BigRational::from_integer(z.into()), allow_large)?
                .iter()
                .map(ToString::to_string)
                .collect(),
        )
    };
    Ok(NoCheckReport {
        m_max,
        verified: degrees.iter().all(|d| d.equal),
        degrees,
        z2: at(2)?,
        z4: at(4)?,
    })
}

fn cmd_no_check(m_max: usize, allow_large: bool, format: Format) -> CliResult<Outcome> {
    let report = no_check_report(m_max, allow_large)?;
    let output = match format {
        Format::Json => to_json(&report),
        Format::Csv => to_csv(&report.degrees),
        Format::Text => {
            let mut s = String::new();
            for d in &report.degrees {
                writeln!(
                    s,
                    "q^{}: {} {}",
                    d.m,
                    d.hook_side,
                    if d.equal {
                        "✓"
                    } else {
                        "✗ (product side differs)"
                    }
                )
                .unwrap();
            }
            writeln!(s, "z=2: {}", report.z2.join(" ")).unwrap();
            writeln!(s, "z=4: {}", report.z4.join(" ")).unwrap();
            s
        }
    };
    Ok(Outcome::verdict(output, report.verified))
}
