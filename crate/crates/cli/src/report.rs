//! Structured report emission.
//!
//! Human-readable text goes to standard output and is byte-identical for
//! identical `(spec, command, options, seed)`. The machine-readable JSON
//! written via `--out` carries the same content plus wall-clock times
//! (`wall_ms`), the one intentionally non-deterministic field.

use famalg_core::suites::SuiteReport;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub algebra: String,
    pub representation: String,
    pub result: ReportResult,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportResult {
    Check {
        valid: bool,
        algebra_violations: Vec<String>,
        representation_violations: Vec<String>,
    },
    InvariantBasis {
        degree: u32,
        dimension: usize,
        elements: Vec<String>,
    },
    Expression {
        operation: String,
        inputs: Vec<String>,
        value: String,
    },
    Suites {
        all_zero: bool,
        reports: Vec<SuiteReport>,
    },
}

impl Report {
    pub fn new(
        command: &str,
        algebra: &str,
        representation: &str,
        result: ReportResult,
    ) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            algebra: algebra.to_string(),
            representation: representation.to_string(),
            result,
        }
    }

    /// Deterministic human-readable rendering (no timings).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            ReportResult::Check {
                valid,
                algebra_violations,
                representation_violations,
            } => {
                out.push_str(&format!(
                    "algebra {}: {}\n",
                    self.algebra,
                    if algebra_violations.is_empty() { "valid" } else { "INVALID" }
                ));
                for v in algebra_violations {
                    out.push_str(&format!("  {v}\n"));
                }
                out.push_str(&format!(
                    "representation {}: {}\n",
                    self.representation,
                    if representation_violations.is_empty() { "valid" } else { "INVALID" }
                ));
                for v in representation_violations {
                    out.push_str(&format!("  {v}\n"));
                }
                out.push_str(&format!(
                    "result: {}\n",
                    if *valid { "ok" } else { "invalid" }
                ));
            }
            ReportResult::InvariantBasis {
                degree,
                dimension,
                elements,
            } => {
                out.push_str(&format!(
                    "invariant basis of {} / {} at degree <= {}: dimension {}\n",
                    self.algebra, self.representation, degree, dimension
                ));
                for (i, e) in elements.iter().enumerate() {
                    out.push_str(&format!("  [{}] {}\n", i + 1, e));
                }
            }
            ReportResult::Expression {
                operation,
                inputs,
                value,
            } => {
                out.push_str(&format!("{operation}({}) = {value}\n", inputs.join(", ")));
            }
            ReportResult::Suites { all_zero, reports } => {
                for r in reports {
                    out.push_str(&format!(
                        "suite {}: {} (algebra {}, rep {}, degree {}, seed {}, tuples {})\n",
                        r.suite,
                        if r.all_zero { "PASS" } else { "FAIL" },
                        r.algebra,
                        r.representation,
                        r.degree,
                        r.seed,
                        r.tuple_count
                    ));
                    for check in &r.checks {
                        out.push_str(&format!(
                            "  check {}: {} ({} tuples, {} nonzero residuals)\n",
                            check.name,
                            if check.all_zero() { "ok" } else { "FAIL" },
                            check.tuples,
                            check.failures.len()
                        ));
                        for f in &check.failures {
                            out.push_str(&format!(
                                "    inputs: {}\n    residual: {}\n",
                                f.inputs.join(" , "),
                                f.residual
                            ));
                        }
                    }
                    for note in &r.notes {
                        out.push_str(&format!("  note: {note}\n"));
                    }
                }
                out.push_str(&format!(
                    "result: {}\n",
                    if *all_zero { "all residuals zero" } else { "NONZERO RESIDUALS" }
                ));
            }
        }
        out
    }
}
