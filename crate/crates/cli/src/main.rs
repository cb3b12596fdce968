//! `cyclocode`: fields, Gauss periods and weight distributions from the shell.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cyclocode::cyclotomy::{
    gauss_period_direct, orient_index2, period_index2, period_quadratic, period_semiprimitive,
    semiprimitive_params,
};
use cyclocode::field::render_poly;
use cyclocode::{Field, GaussPeriodTable};

use cyclocode_cli::report::{self, render_csv, render_text, SpecRecord, Verdict};
use cyclocode_cli::run::{self, ExitStatus, Failure, RunOptions};
use cyclocode_cli::verify;

#[derive(Parser)]
#[command(name = "cyclocode", version, about = "Gauss periods and weight distributions of trace cyclic codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Show the constructed field GF(p^(s m)).
    Field {
        #[arg(short)]
        p: u64,
        #[arg(short, default_value_t = 1)]
        s: u32,
        #[arg(short)]
        m: u32,
    },
    /// Gauss periods of order N over GF(p^(s m)).
    Periods {
        #[arg(short)]
        p: u64,
        #[arg(short, default_value_t = 1)]
        s: u32,
        #[arg(short)]
        m: u32,
        #[arg(short = 'N')]
        n: u64,
        #[arg(long, value_enum, default_value_t = PeriodMethod::Direct)]
        method: PeriodMethod,
        /// Semi-primitive exponent with p^e = -1 (mod N).
        #[arg(short)]
        e: Option<u32>,
        /// Semi-primitive multiplier: r = p^(2 e f).
        #[arg(short)]
        f: Option<u32>,
        /// Index-2 multiplier: r = p^((N-1) k / 2).
        #[arg(short)]
        k: Option<u32>,
    },
    /// Weight distribution of C(q, m, n1, ..., [1]).
    Weights {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: u32,
        /// Comma-separated pairwise coprime orders.
        #[arg(short, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        /// Append the unit term Tr(c).
        #[arg(long)]
        with_one: bool,
        #[arg(long, value_enum, default_value_t = WeightMethod::Table)]
        method: WeightMethod,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Take period tables from the lemmas where they apply.
        #[arg(long)]
        prefer_lemmas: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Closed form against the oracle for a batch of codes.
    Verify {
        /// JSON list of {q, m, orders, with_one, expect}; defaults to the worked examples.
        config: Option<PathBuf>,
        /// Number of random admissible codes appended to the batch.
        #[arg(long, default_value_t = 8)]
        sweep: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Corrupt one Gauss period before the closed-form evaluation.
        #[arg(long)]
        inject_fault: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PeriodMethod {
    Direct,
    /// Quadratic periods.
    Lemma21,
    /// Semi-primitive case.
    Lemma22,
    /// Index-2 case.
    Lemma23,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WeightMethod {
    Table,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn set_threads(threads: Option<usize>) -> Result<(), Failure> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::parameter(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn cmd_field(p: u64, s: u32, m: u32) -> Result<ExitStatus, Failure> {
    let f = Field::new(p, s, m)?;
    println!("GF({}) = GF({p})[x]/({})", f.r(), render_poly(f.modulus()));
    println!("r        {}", f.r());
    println!("q        {} (subfield GF({p}^{s}))", f.q());
    println!("alpha    {}", render_poly(f.alpha_poly()));
    println!("N0       {} (GF(q)* = <alpha^N0>)", f.subfield_generator_exponent());
    Ok(ExitStatus::Ok)
}

fn lemma_table(field: &Field, n: u64, method: PeriodMethod, e: Option<u32>, ff: Option<u32>, k: Option<u32>) -> Result<GaussPeriodTable, Failure> {
    let (p, r) = (field.p(), field.r());
    let degree = field.s() * field.m();
    let table = match method {
        PeriodMethod::Direct => unreachable!("handled by the caller"),
        PeriodMethod::Lemma21 => {
            if n != 2 {
                return Err(Failure::parameter(format!("quadratic periods have N = 2, got N = {n}")));
            }
            period_quadratic(p, field.s(), field.m())?
        }
        PeriodMethod::Lemma22 => {
            let (e, ff) = match (e, ff) {
                (Some(e), Some(ff)) => (e, ff),
                _ => semiprimitive_params(p, n, r).ok_or_else(|| {
                    Failure::parameter(format!("(N, r) = ({n}, {r}) is not semi-primitive"))
                })?,
            };
            period_semiprimitive(p, e, ff, n)?
        }
        PeriodMethod::Lemma23 => {
            let half = (n.saturating_sub(1) / 2) as u32;
            let k = match k {
                Some(k) => k,
                None if half > 0 && degree.is_multiple_of(half) => degree / half,
                None => return Err(Failure::parameter(format!("r = {r} is not p^((N-1)k/2)"))),
            };
            orient_index2(&period_index2(n, p, k)?, field)?
        }
    };
    if table.field_order() != r {
        return Err(Failure::parameter(format!(
            "the lemma parameters describe GF({}), the field is GF({r})",
            table.field_order()
        )));
    }
    Ok(table)
}

fn print_values(table: &GaussPeriodTable) {
    match table.integers() {
        Some(v) => {
            let v: Vec<String> = v.iter().map(i128::to_string).collect();
            println!("values   {}", v.join(", "));
        }
        None => {
            for (i, v) in table.values().iter().enumerate() {
                println!("eta_{i}    {v}");
            }
        }
    }
}

fn cmd_periods(
    field: Field,
    n: u64,
    method: PeriodMethod,
    e: Option<u32>,
    ff: Option<u32>,
    k: Option<u32>,
) -> Result<ExitStatus, Failure> {
    let direct = gauss_period_direct(&field, n)?;
    println!("eta^({n},{}) over GF({})[x]/({}), alpha = {}", field.r(), field.p(), render_poly(field.modulus()), render_poly(field.alpha_poly()));
    if method == PeriodMethod::Direct {
        println!("method   direct");
        print_values(&direct);
        return Ok(ExitStatus::Ok);
    }
    let table = lemma_table(&field, n, method, e, ff, k)?;
    println!("method   {:?}", table.source());
    print_values(&table);
    if table.values() == direct.values() {
        println!("direct   agrees");
        Ok(ExitStatus::Ok)
    } else {
        println!("direct   DIFFERS");
        print_values(&direct);
        Ok(ExitStatus::Mismatch)
    }
}

fn emit(report: &report::RunReport, format: Format) -> Result<(), Failure> {
    match format {
        Format::Text => print!("{}", render_text(report)),
        Format::Csv => print!("{}", render_csv(report)),
        Format::Json => {
            let json = serde_json::to_string_pretty(report).map_err(|e| Failure::parameter(e.to_string()))?;
            println!("{json}");
        }
    }
    Ok(())
}

fn cmd_weights(record: SpecRecord, method: WeightMethod, format: Format, prefer_lemmas: bool) -> Result<ExitStatus, Failure> {
    let opts = RunOptions {
        table: method != WeightMethod::Oracle,
        oracle: method != WeightMethod::Table,
        prefer_lemmas,
        inject_fault: false,
    };
    let report = run::run(&record, &opts)?;
    emit(&report, format)?;
    if report.verdict == Verdict::Mismatch {
        for line in run::diff_lines(&report) {
            eprintln!("{line}");
        }
        return Ok(ExitStatus::Mismatch);
    }
    Ok(ExitStatus::Ok)
}

fn cmd_verify(config: Option<PathBuf>, sweep: usize, seed: u64, inject_fault: bool, format: Format) -> Result<ExitStatus, Failure> {
    let mut records: Vec<(String, verify::VerifyRecord)> = match &config {
        Some(path) => verify::load_config(path)?.into_iter().map(|r| ("config".to_string(), r)).collect(),
        None => verify::worked_examples().into_iter().map(|r| ("example".to_string(), r)).collect(),
    };
    records.extend(verify::random_specs(sweep, seed).into_iter().map(|r| ("sweep".to_string(), r)));
    let summary = verify::verify(records, inject_fault)?;
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&summary).map_err(|e| Failure::parameter(e.to_string()))?;
            println!("{json}");
        }
        Format::Text | Format::Csv => print!("{}", verify::render_text(&summary)),
    }
    Ok(match summary.passed == summary.total {
        true => ExitStatus::Ok,
        false => ExitStatus::Mismatch,
    })
}

fn dispatch(cli: Cli) -> Result<ExitStatus, Failure> {
    match cli.command {
        Command::Field { p, s, m } => cmd_field(p, s, m),
        Command::Periods { p, s, m, n, method, e, f, k } => cmd_periods(Field::new(p, s, m)?, n, method, e, f, k),
        Command::Weights { q, m, n, with_one, method, format, prefer_lemmas, threads } => {
            set_threads(threads)?;
            let record = SpecRecord { q, m, orders: n, with_one };
            cmd_weights(record, method, format, prefer_lemmas)
        }
        Command::Verify { config, sweep, seed, inject_fault, format, threads } => {
            set_threads(threads)?;
            cmd_verify(config, sweep, seed, inject_fault, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.status as u8)
        }
    }
}
