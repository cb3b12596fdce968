//! Batch verification: closed form against the oracle for a list of codes.

use std::path::Path;

use cyclocode::arith::{divisors, gcd};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::report::{Method, RunReport, SpecRecord, Verdict};
use crate::run::{diff_lines, run, ExitStatus, Failure, RunOptions};

/// A config entry: a spec plus an optional expected enumerator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    #[serde(flatten)]
    pub spec: SpecRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
}

fn record(q: u64, m: u32, orders: &[u64], with_one: bool, expect: &str) -> VerifyRecord {
    VerifyRecord {
        spec: SpecRecord {
            q,
            m,
            orders: orders.to_vec(),
            with_one,
        },
        expect: Some(expect.to_string()),
    }
}

/// The worked examples with their published enumerators.
pub fn worked_examples() -> Vec<VerifyRecord> {
    vec![
        record(4, 2, &[5, 3], false, "1+45x^11+15x^12+3x^15"),
        record(8, 2, &[9, 7], false, "1+441x^55+63x^56+7x^63"),
        record(9, 2, &[5, 16], false, "1+16x^40+40x^64+640x^68+2560x^70+2560x^72+640x^75+104x^80"),
        record(7, 2, &[3, 16], false, "1+288x^41+48x^42+6x^48"),
        record(4, 2, &[5, 3], true, "1+30x^9+54x^10+45x^11+105x^12+21x^15"),
        record(8, 2, &[9, 7], true, "1+252x^49+1372x^54+441x^55+1827x^56+203x^63"),
        record(2, 4, &[5, 3], true, "1+5x^3+3x^5+25x^6+30x^7+30x^8+25x^9+3x^10+5x^12+x^15"),
    ]
}

const SWEEP_FIELDS: &[(u64, u32)] = &[
    (2, 4), (4, 2), (2, 6), (8, 2), (4, 3), (2, 8), (4, 4), (16, 2), (3, 4), (9, 2), (3, 3),
    (5, 2), (7, 2), (11, 2), (13, 2), (5, 3), (2, 5), (2, 7),
];

/// Oracle work cap for sweep specs: tuples times length.
const SWEEP_WORK: u128 = 1 << 22;

/// `count` distinct random admissible two-order specs, determined by `seed`.
pub fn random_specs(count: usize, seed: u64) -> Vec<VerifyRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 1000 * (count + 1) {
        attempts += 1;
        let &(q, m) = SWEEP_FIELDS.choose(&mut rng).expect("nonempty");
        let r = q.pow(m);
        let divs = divisors(r - 1);
        let n1 = *divs.choose(&mut rng).expect("nonempty");
        let n2 = *divs.choose(&mut rng).expect("nonempty");
        let with_one = rng.gen_bool(0.5) && n1 > 1 && n2 > 1;
        if n1 == n2 || gcd(n1, n2) != 1 {
            continue;
        }
        let work = (r as u128).pow(2) * if with_one { q as u128 } else { 1 } * (n1 * n2) as u128;
        if work > SWEEP_WORK {
            continue;
        }
        let spec = SpecRecord {
            q,
            m,
            orders: vec![n1, n2],
            with_one,
        };
        if out.iter().any(|r: &VerifyRecord| r.spec == spec) {
            continue;
        }
        out.push(VerifyRecord { spec, expect: None });
    }
    out
}

pub fn load_config(path: &Path) -> Result<Vec<VerifyRecord>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parameter(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::parameter(format!("bad config {}: {e}", path.display())))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyRun {
    pub source: String,
    pub spec: SpecRecord,
    pub report: Option<RunReport>,
    pub expect: Option<String>,
    pub expect_ok: Option<bool>,
    /// Set when a computation failed an internal consistency check.
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifySummary {
    pub runs: Vec<VerifyRun>,
    pub passed: usize,
    pub total: usize,
}

fn enumerators_agree(report: &RunReport, expect: &str) -> bool {
    [Method::Table, Method::Oracle].iter().all(|&m| {
        report
            .codeword(m)
            .is_some_and(|d| crate::report::enumerator(&d.entries) == expect)
    })
}

/// Runs every record in "both" mode. Parameter and budget errors abort;
/// consistency failures are recorded as failed runs.
pub fn verify(records: Vec<(String, VerifyRecord)>, inject_fault: bool) -> Result<VerifySummary, Failure> {
    let opts = RunOptions {
        table: true,
        oracle: true,
        prefer_lemmas: false,
        inject_fault,
    };
    let mut runs = Vec::new();
    for (source, rec) in records {
        let (report, error) = match run(&rec.spec, &opts) {
            Ok(r) => (Some(r), None),
            Err(f) if f.status == ExitStatus::Mismatch => (None, Some(f.message)),
            Err(f) => return Err(Failure {
                status: f.status,
                message: format!("{}: {}", rec.spec.label(), f.message),
            }),
        };
        let expect_ok = match (&report, &rec.expect) {
            (Some(r), Some(e)) => Some(enumerators_agree(r, e)),
            _ => None,
        };
        let passed = report.as_ref().is_some_and(|r| r.verdict == Verdict::Match) && expect_ok != Some(false);
        runs.push(VerifyRun {
            source,
            spec: rec.spec,
            report,
            expect: rec.expect,
            expect_ok,
            error,
            passed,
        });
    }
    let passed = runs.iter().filter(|r| r.passed).count();
    let total = runs.len();
    Ok(VerifySummary { runs, passed, total })
}

pub fn render_text(summary: &VerifySummary) -> String {
    let mut out = String::new();
    out.push_str(&format!("{:<4} {:<8} {:<20} {:<9} {:<8} {}\n", "#", "source", "code", "verdict", "expect", "enumerator"));
    for (i, run) in summary.runs.iter().enumerate() {
        let verdict = match (&run.report, &run.error) {
            (Some(r), _) if r.verdict == Verdict::Match => "match",
            (Some(_), _) => "MISMATCH",
            (None, _) => "ERROR",
        };
        let expect = match run.expect_ok {
            Some(true) => "ok",
            Some(false) => "WRONG",
            None => "-",
        };
        let shown = run
            .report
            .as_ref()
            .and_then(|r| r.codeword(Method::Table))
            .map(|d| crate::report::enumerator(&d.entries))
            .unwrap_or_default();
        out.push_str(&format!(
            "{:<4} {:<8} {:<20} {:<9} {:<8} {}\n",
            i + 1,
            run.source,
            run.spec.label(),
            verdict,
            expect,
            shown
        ));
        if let Some(r) = &run.report {
            for line in diff_lines(r) {
                out.push_str(&format!("       {line}\n"));
            }
        }
        if let Some(e) = &run.error {
            out.push_str(&format!("       {e}\n"));
        }
        if run.expect_ok == Some(false) {
            out.push_str(&format!("       expected {}\n", run.expect.as_deref().unwrap_or("")));
        }
    }
    for source in ["example", "config", "sweep"] {
        let group: Vec<_> = summary.runs.iter().filter(|r| r.source == source).collect();
        if !group.is_empty() {
            let ok = group.iter().filter(|r| r.passed).count();
            out.push_str(&format!("{source}: {ok}/{} passed\n", group.len()));
        }
    }
    out
}
