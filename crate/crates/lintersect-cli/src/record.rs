//! Run records: the machine-readable payload of every command, cached and
//! emitted behind `--json`. All arbitrary-precision values travel as decimal
//! strings; families travel in the family file format.

use serde::{Deserialize, Serialize};

use lintersect::bounds::BoundSurvey;
use lintersect::solver::{ScanReport, SolveCertificate};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub command: String,
    pub parameters: serde_json::Value,
    pub timestamp_unix: u64,
    pub tool_version: String,
    pub result: Payload,
}

impl RunRecord {
    pub fn new(command: &str, parameters: serde_json::Value, result: Payload) -> Self {
        let timestamp_unix = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self {
            command: command.to_string(),
            parameters,
            timestamp_unix,
            tool_version: TOOL_VERSION.to_string(),
            result,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Bounds {
        survey: BoundSurvey,
    },
    Construct {
        family: String,
        summary: FamilySummary,
    },
    Verify {
        report: VerifyReport,
    },
    Solve {
        certificate: SolveCertificate,
        #[serde(skip_serializing_if = "Option::is_none")]
        enumeration: Option<EnumerationRecord>,
    },
    Scan {
        report: ScanReport,
    },
}

/// The verification summary printed by `construct` and embedded in records.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilySummary {
    pub n: u32,
    pub m: u64,
    /// Common block size when the family is uniform.
    pub uniform_k: Option<u32>,
    /// Deduplicated pairwise intersection sizes (empty below two blocks).
    pub intersection_sizes: Vec<u32>,
    /// Kernel elements; `None` for an empty family.
    pub kernel: Option<Vec<u32>>,
}

impl FamilySummary {
    pub fn of(family: &lintersect::Family) -> Self {
        let uniform_k = family
            .get(0)
            .map(|b| b.len())
            .filter(|&k| family.is_uniform(k));
        let intersection_sizes = family
            .intersection_sizes()
            .map(|s| s.into_iter().collect())
            .unwrap_or_default();
        let kernel = family.kernel().ok().map(|k| k.to_vec());
        Self {
            n: family.ground().n(),
            m: family.len() as u64,
            uniform_k,
            intersection_sizes,
            kernel,
        }
    }

    pub fn render(&self) -> String {
        let sizes = if self.m < 2 {
            "n/a (fewer than two blocks)".to_string()
        } else {
            format!(
                "{{{}}}",
                self.intersection_sizes
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let kernel = match &self.kernel {
            None => "n/a (empty family)".to_string(),
            Some(k) => format!(
                "{{{}}}",
                k.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        };
        let uniform = match self.uniform_k {
            Some(k) => format!("uniform k={k}"),
            None if self.m == 0 => "vacuously uniform (no blocks)".to_string(),
            None => "not uniform".to_string(),
        };
        format!(
            "{} blocks over [{}]; {}; intersections {}; kernel {}",
            self.m, self.n, uniform, sizes, kernel
        )
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub optimum: u64,
    pub count: u64,
    pub complete: bool,
    /// Every optimum family in the family file format.
    pub families: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: u32,
    pub m: u64,
    pub intersection_sizes: Vec<u32>,
    pub kernel: Option<Vec<u32>>,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Plain fixed-width table rendering.
pub fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            if i < widths.len() {
                widths[i] = widths[i].max(cell.len());
            }
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: Vec<String>, widths: &[usize]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..widths[i] {
                    line.push(' ');
                }
            }
        }
        line.push('\n');
        line
    };
    out.push_str(&fmt_row(
        headers.iter().map(|h| h.to_string()).collect(),
        &widths,
    ));
    for row in rows {
        out.push_str(&fmt_row(row.clone(), &widths));
    }
    out
}
