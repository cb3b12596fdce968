//! Computing distributions by either route and comparing them.

use std::fmt;
use std::time::Instant;

use cyclocode::closed_form::{closed_form_distribution, derive_params, PeriodBook};
use cyclocode::trace_code::{distribution_bruteforce, DEFAULT_MAX_TUPLES};
use cyclocode::{CodeSpec, CycInt, Error, WeightDistribution};

use crate::report::{DerivedInfo, DistributionRecord, FieldInfo, Method, RunReport, SpecRecord, Verdict};

pub const BUDGET_VAR: &str = "CYCLOCODE_MAX_TUPLES";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Parameter = 1,
    Mismatch = 2,
    Budget = 3,
}

/// A failure with the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub status: ExitStatus,
    pub message: String,
}

impl Failure {
    pub fn parameter(message: impl Into<String>) -> Failure {
        Failure {
            status: ExitStatus::Parameter,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Internal errors mean two computations disagreed with each other.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } => ExitStatus::Budget,
            Error::Internal(_) => ExitStatus::Mismatch,
            _ => ExitStatus::Parameter,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

pub fn tuple_budget() -> Result<u128, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::parameter(format!("{BUDGET_VAR} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_TUPLES),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub table: bool,
    pub oracle: bool,
    pub prefer_lemmas: bool,
    /// Corrupt one period before evaluating the table.
    pub inject_fault: bool,
}

/// Overwrites one value of the largest cached period table with a different
/// value from the same table, or shifts it when all values coincide.
fn corrupt(book: &PeriodBook, p: u32) -> Result<(), Failure> {
    let &n = book
        .cached_orders()
        .iter().rfind(|&&n| n > 1)
        .ok_or_else(|| Failure::parameter("no period table to corrupt"))?;
    let table = book.over_field(n)?;
    let first = table.get(0).clone();
    let (index, value) = match (1..n as usize).find(|&i| table.values()[i] != first) {
        Some(i) => (i, first),
        None => (0, &first + &CycInt::from_int(p, 1)),
    };
    book.inject_fault(n, index, value)?;
    Ok(())
}

fn table_distribution(spec: &CodeSpec, opts: &RunOptions) -> Result<WeightDistribution, Failure> {
    let book = PeriodBook::new(spec.field()).prefer_lemmas(opts.prefer_lemmas);
    let clean = closed_form_distribution(spec, &book)?;
    if !opts.inject_fault {
        return Ok(clean);
    }
    corrupt(&book, spec.field().p() as u32)?;
    Ok(closed_form_distribution(spec, &book)?)
}

pub fn run(record: &SpecRecord, opts: &RunOptions) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let spec = record.build()?;
    let budget = tuple_budget()?;
    let derived = derive_params(&spec).ok().map(DerivedInfo::from);
    let mut distributions = Vec::new();
    let mut codewords = Vec::new();
    let mut sources = Vec::new();
    if opts.table {
        sources.push((Method::Table, table_distribution(&spec, opts)?));
    }
    if opts.oracle {
        sources.push((Method::Oracle, distribution_bruteforce(&spec, budget)?));
    }
    for (method, tuples) in sources {
        let (collapsed, _) = tuples.collapse_to_codewords()?;
        distributions.push(DistributionRecord::of(method, &collapsed));
        distributions.push(DistributionRecord::of(method, &tuples));
        codewords.push(collapsed);
    }
    let verdict = match codewords.as_slice() {
        [a, b] if a == b => Verdict::Match,
        [_, _] => Verdict::Mismatch,
        _ => Verdict::Single,
    };
    Ok(RunReport {
        spec: record.clone(),
        field: FieldInfo::of(spec.field()),
        derived,
        distributions,
        verdict,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Lines `weight: table vs oracle` for every differing weight.
pub fn diff_lines(report: &RunReport) -> Vec<String> {
    let (Some(t), Some(o)) = (report.codeword(Method::Table), report.codeword(Method::Oracle)) else {
        return Vec::new();
    };
    let lookup = |entries: &[(u64, String)], w: u64| {
        entries
            .iter()
            .find(|e| e.0 == w)
            .map_or_else(|| "0".to_string(), |e| e.1.clone())
    };
    let mut weights: Vec<u64> = t.entries.iter().chain(&o.entries).map(|e| e.0).collect();
    weights.sort_unstable();
    weights.dedup();
    weights
        .into_iter()
        .filter_map(|w| {
            let (a, b) = (lookup(&t.entries, w), lookup(&o.entries, w));
            (a != b).then(|| format!("weight {w}: table {a}, oracle {b}"))
        })
        .collect()
}
