//! Serializable run reports and their text and CSV renderings.

use std::fmt::Write as _;

use cyclocode::closed_form::DerivedParams;
use cyclocode::field::render_poly;
use cyclocode::{CodeSpec, Field, Level, WeightDistribution};
use serde::{Deserialize, Serialize};

/// A code as given on the command line or in a config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecRecord {
    pub q: u64,
    pub m: u32,
    pub orders: Vec<u64>,
    #[serde(default)]
    pub with_one: bool,
}

impl SpecRecord {
    pub fn build(&self) -> cyclocode::Result<CodeSpec> {
        CodeSpec::from_params(self.q, self.m, self.orders.clone(), self.with_one)
    }

    pub fn label(&self) -> String {
        let orders: Vec<String> = self.orders.iter().map(u64::to_string).collect();
        let unit = if self.with_one { "+1" } else { "" };
        format!("({},{},[{}]{unit})", self.q, self.m, orders.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub p: u64,
    pub s: u32,
    pub m: u32,
    pub q: u64,
    pub r: u64,
    pub modulus: String,
    pub alpha: String,
    pub subfield_generator_exponent: u64,
}

impl FieldInfo {
    pub fn of(f: &Field) -> FieldInfo {
        FieldInfo {
            p: f.p(),
            s: f.s(),
            m: f.m(),
            q: f.q(),
            r: f.r(),
            modulus: render_poly(f.modulus()),
            alpha: render_poly(f.alpha_poly()),
            subfield_generator_exponent: f.subfield_generator_exponent(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedInfo {
    pub n0: u64,
    pub big_n1: u64,
    pub big_n2: u64,
    pub d1: u64,
    pub d2: u64,
    pub d: u64,
}

impl From<DerivedParams> for DerivedInfo {
    fn from(d: DerivedParams) -> Self {
        DerivedInfo {
            n0: d.n0,
            big_n1: d.big_n1,
            big_n2: d.big_n2,
            d1: d.d1,
            d2: d.d2,
            d: d.d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Table,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelTag {
    Tuple,
    Codeword,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionRecord {
    pub method: Method,
    pub level: LevelTag,
    /// `[weight, frequency]`, ascending; frequencies as decimal strings.
    pub entries: Vec<(u64, String)>,
}

impl DistributionRecord {
    pub fn of(method: Method, d: &WeightDistribution) -> DistributionRecord {
        DistributionRecord {
            method,
            level: match d.level() {
                Level::Tuple => LevelTag::Tuple,
                Level::Codeword => LevelTag::Codeword,
            },
            entries: d.entries().iter().map(|(&w, f)| (w, f.to_string())).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    /// Only one method ran.
    Single,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub spec: SpecRecord,
    pub field: FieldInfo,
    pub derived: Option<DerivedInfo>,
    pub distributions: Vec<DistributionRecord>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn codeword(&self, method: Method) -> Option<&DistributionRecord> {
        self.distributions
            .iter()
            .find(|d| d.method == method && d.level == LevelTag::Codeword)
    }
}

/// `1+45x^11+...` from codeword-level entries.
pub fn enumerator(entries: &[(u64, String)]) -> String {
    let terms: Vec<String> = entries
        .iter()
        .map(|(w, f)| match (w, f.as_str()) {
            (0, f) => f.to_string(),
            (1, "1") => "x".to_string(),
            (1, f) => format!("{f}x"),
            (w, "1") => format!("x^{w}"),
            (w, f) => format!("{f}x^{w}"),
        })
        .collect();
    terms.join("+")
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Table => "table",
        Method::Oracle => "oracle",
    }
}

pub fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    let f = &r.field;
    let _ = writeln!(out, "code      {}", r.spec.label());
    let _ = writeln!(
        out,
        "field     GF({}) = GF({})[x]/({}), alpha = {}, q = {}, N0 = {}",
        f.r, f.p, f.modulus, f.alpha, f.q, f.subfield_generator_exponent
    );
    if let Some(d) = &r.derived {
        let _ = writeln!(
            out,
            "derived   N1 = {}, N2 = {}, d1 = {}, d2 = {}, d = {}",
            d.big_n1, d.big_n2, d.d1, d.d2, d.d
        );
    }
    for dist in &r.distributions {
        let name = method_name(dist.method);
        match dist.level {
            LevelTag::Codeword => {
                let _ = writeln!(out, "{name:<9} {}", enumerator(&dist.entries));
            }
            LevelTag::Tuple => {
                let pairs: Vec<String> = dist.entries.iter().map(|(w, f)| format!("{w}:{f}")).collect();
                let kernel = dist.entries.first().filter(|e| e.0 == 0).map_or("0", |e| e.1.as_str());
                let _ = writeln!(out, "{:<9} tuples {{{}}}, kernel {kernel}", "", pairs.join(", "));
            }
        }
    }
    let verdict = match r.verdict {
        Verdict::Match => "match",
        Verdict::Mismatch => "MISMATCH",
        Verdict::Single => "-",
    };
    let _ = writeln!(out, "verdict   {verdict}");
    let _ = writeln!(out, "elapsed   {} ms", r.elapsed_ms);
    out
}

pub fn render_csv(r: &RunReport) -> String {
    let mut out = String::from("method,weight,frequency\n");
    for dist in r.distributions.iter().filter(|d| d.level == LevelTag::Codeword) {
        for (w, f) in &dist.entries {
            let _ = writeln!(out, "{},{w},{f}", method_name(dist.method));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(pairs: &[(u64, &str)]) -> Vec<(u64, String)> {
        pairs.iter().map(|&(w, f)| (w, f.to_string())).collect()
    }

    #[test]
    fn enumerator_terms() {
        assert_eq!(enumerator(&entries(&[(0, "1")])), "1");
        assert_eq!(enumerator(&entries(&[(0, "1"), (1, "1"), (2, "3")])), "1+x+3x^2");
        assert_eq!(enumerator(&entries(&[(0, "1"), (1, "4"), (15, "1")])), "1+4x+x^15");
    }

    #[test]
    fn spec_labels() {
        let s = SpecRecord {
            q: 4,
            m: 2,
            orders: vec![5, 3],
            with_one: true,
        };
        assert_eq!(s.label(), "(4,2,[5,3]+1)");
        let parsed: SpecRecord = serde_json::from_str(r#"{"q": 4, "m": 2, "orders": [5, 3]}"#).unwrap();
        assert!(!parsed.with_one);
    }
}
