use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::exactlin::{IntegerPolynomial, Validity};
use crate::monocech::{DimValue, MonomialIdeal, PatternReport, PatternShape};
use crate::verify::{CheckResult, Status, VerificationReport};

/// Bumped whenever the JSON layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

/// Serializes as a JSON number when it fits in `i64`, else as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for JsonInt {
    fn from(b: &BigInt) -> Self {
        b.to_i64().map_or_else(|| JsonInt::Big(b.to_string()), JsonInt::Small)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            JsonInt::Small(x) => s.serialize_i64(*x),
            JsonInt::Big(t) => s.serialize_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEcho {
    pub deg0_vars: Vec<String>,
    pub deg1_vars: Vec<String>,
    pub generators: Vec<String>,
    /// squarefree, containment-free generators actually used
    pub normalized: Vec<String>,
}

impl IdealEcho {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let ctx = ideal.context();
        IdealEcho {
            deg0_vars: ctx.y_vars().map(|v| ctx.name(v).to_string()).collect(),
            deg1_vars: ctx.x_vars().map(|v| ctx.name(v).to_string()).collect(),
            generators: ideal.generator_strings(),
            normalized: ideal.normalize().generator_strings(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContributorRow {
    pub pattern: String,
    pub rank: usize,
    pub x_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternRow {
    pub index: usize,
    pub shape: PatternShape,
    pub degrees: String,
    pub contributors: Vec<ContributorRow>,
}

impl PatternRow {
    pub fn new(report: &PatternReport) -> Self {
        let ctx = report.ideal.context();
        PatternRow {
            index: report.index,
            shape: report.shape,
            degrees: report.shape.describe(ctx.m()),
            contributors: report
                .contributors
                .iter()
                .map(|c| ContributorRow {
                    pattern: c.pattern.display(ctx),
                    rank: c.rank,
                    x_count: c.x_count,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub index: usize,
    pub degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strand: Option<Vec<i64>>,
    pub dim: DimValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialRow {
    /// coordinates in the basis `binom(n + j, j)`, `j = 0, 1, ...`
    pub binomial_coefficients: Vec<JsonInt>,
    pub validity: Validity,
    pub expanded: String,
}

impl PolynomialRow {
    pub fn new(p: &IntegerPolynomial) -> Self {
        PolynomialRow {
            binomial_coefficients: p.coefficients().iter().map(JsonInt::from).collect(),
            validity: p.validity(),
            expanded: p.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertRow {
    pub index: usize,
    /// valid on the negative tail
    pub f: PolynomialRow,
    /// valid for `n >= 0`
    pub g: PolynomialRow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportRow {
    pub index: usize,
    pub degree: i64,
    pub min_primes: Vec<String>,
    /// `-1` for a zero piece
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub index: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub var: Option<String>,
    pub degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h1: Option<DimValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h0: Option<DimValue>,
    /// top Koszul homology in the degree-0 variables
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle: Option<DimValue>,
    /// patterns contributing to `h1` and `h0`
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub patterns: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// `"all"` or `"failures"`
    pub entries_included: String,
    pub entries: Vec<CheckResult>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra: Option<serde_json::Value>,
}

impl VerificationSummary {
    pub fn new(report: &VerificationReport, failures_only: bool) -> Self {
        VerificationSummary {
            passed: report.count(Status::Pass),
            failed: report.count(Status::Fail),
            skipped: report.count(Status::Skip),
            entries_included: if failures_only { "failures" } else { "all" }.into(),
            entries: if failures_only {
                report.failures().cloned().collect()
            } else {
                report.entries.clone()
            },
            extra: None,
        }
    }
}

/// Everything a subcommand reports. Empty sections are omitted from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealEcho>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub patterns: Vec<PatternRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dimensions: Vec<DimensionRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hilbert: Vec<HilbertRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub support: Vec<SupportRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homology: Vec<HomologyRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSummary>,
}

impl ReportDocument {
    pub fn new(command: &str, ideal: Option<&MonomialIdeal>) -> Self {
        ReportDocument {
            version: SCHEMA_VERSION,
            command: command.into(),
            ideal: ideal.map(IdealEcho::new),
            patterns: Vec::new(),
            dimensions: Vec::new(),
            hilbert: Vec::new(),
            support: Vec::new(),
            homology: Vec::new(),
            verification: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(ideal) = &self.ideal {
            let _ = writeln!(
                out,
                "ideal ({}) in K[{}][{}]",
                ideal.normalized.join(", "),
                ideal.deg0_vars.join(","),
                ideal.deg1_vars.join(",")
            );
        }
        for p in &self.patterns {
            let contributors: Vec<String> = p
                .contributors
                .iter()
                .map(|c| format!("{}:{}", c.pattern, c.rank))
                .collect();
            let line = format!(
                "H^{}  {:<12} {:<16} {}",
                p.index,
                p.shape.to_string(),
                p.degrees,
                contributors.join(" ")
            );
            let _ = writeln!(out, "{}", line.trim_end());
        }
        for d in &self.dimensions {
            let strand = d.strand.as_ref().map(|s| format!(" strand {s:?}")).unwrap_or_default();
            let _ = writeln!(out, "dim H^{}_{}{strand} = {}", d.index, d.degree, d.dim);
        }
        for h in &self.hilbert {
            let _ = writeln!(out, "H^{}: f(n) = {} for {}", h.index, h.f.expanded, h.f.validity);
            let _ = writeln!(out, "H^{}: g(n) = {} for {}", h.index, h.g.expanded, h.g.validity);
        }
        for s in &self.support {
            let primes = if s.min_primes.is_empty() {
                "none".to_string()
            } else {
                s.min_primes.join(" ")
            };
            let _ = writeln!(
                out,
                "H^{}_{}: minimal primes {primes}, dim {}",
                s.index, s.degree, s.dim
            );
        }
        for h in &self.homology {
            let var = h.var.as_deref().map(|v| format!(" {v}")).unwrap_or_default();
            let values = match (&h.h1, &h.h0, &h.socle) {
                (Some(a), Some(b), _) => format!("H_1 = {a}, H_0 = {b}"),
                (_, _, Some(s)) => format!("socle = {s}"),
                _ => String::new(),
            };
            let _ = writeln!(out, "H^{} {}{var} at {}: {values}", h.index, h.kind, h.degree);
        }
        if let Some(v) = &self.verification {
            for e in &v.entries {
                let case = if e.case.is_empty() {
                    String::new()
                } else {
                    format!("[{}] ", e.case)
                };
                let _ = writeln!(out, "{:4}  {case}{}", e.status.to_string(), e.name);
                if let (Status::Fail, Some(w)) = (e.status, &e.witness) {
                    let _ = writeln!(
                        out,
                        "      witness: {}",
                        serde_json::to_string(w).expect("witness serializes")
                    );
                }
            }
            if let Some(extra) = &v.extra {
                let _ = writeln!(out, "{extra}");
            }
            let _ = writeln!(out, "{} passed, {} failed, {} skipped", v.passed, v.failed, v.skipped);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_int_sizes() {
        let small = JsonInt::from(&BigInt::from(-3));
        assert_eq!(serde_json::to_string(&small).unwrap(), "-3");
        let big = JsonInt::from(&(BigInt::from(i64::MAX) * 10));
        assert_eq!(serde_json::to_string(&big).unwrap(), "\"92233720368547758070\"");
    }

    #[test]
    fn document_round_trips() {
        let i = MonomialIdeal::parse_standard(0, 2, &["X1", "X2"]).unwrap();
        let mut doc = ReportDocument::new("dim", Some(&i));
        doc.dimensions.push(DimensionRow {
            index: 2,
            degree: -3,
            strand: None,
            dim: DimValue::finite(2),
        });
        let back: ReportDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }
}
