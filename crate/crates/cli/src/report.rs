//! Report envelope and text renderings.
//!
//! Every subcommand emits the same envelope: the echoed command line, the
//! parsed inputs, a status, and the result payload. JSON output is
//! deterministic: struct fields serialize in declaration order, maps are
//! ordered, and big integers are decimal strings.

use bbw::hpd::SectionReport;
use bbw::verify::{Method, VerificationLog};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report<T: Serialize> {
    pub command: String,
    pub inputs: serde_json::Value,
    pub status: String,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn ok(command: impl Into<String>, inputs: serde_json::Value, result: T) -> Self {
        Report {
            command: command.into(),
            inputs,
            status: "ok".into(),
            result,
        }
    }

    pub fn with_status(
        command: impl Into<String>,
        inputs: serde_json::Value,
        status: impl Into<String>,
        result: T,
    ) -> Self {
        Report {
            command: command.into(),
            inputs,
            status: status.into(),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn opt_big(v: &Option<num_bigint::BigInt>) -> String {
    v.as_ref()
        .map(|b| b.to_string())
        .unwrap_or_else(|| "-".into())
}

/// Markdown rendering of a linear-section case, mirroring the catalogue's
/// "r = k." headings.
pub fn render_section_markdown(r: &SectionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("## r = {} (n = {})\n\n", r.r, r.n));
    out.push_str(&format!(
        "expected dimensions: dim X_L = {}, dim Y_L = {}, dim Z_L = {}\n",
        r.dim_x, r.dim_y, r.dim_z
    ));
    out.push_str(&format!("{}\n", r.x_decomposition));
    out.push_str(&format!("{}\n", r.y_decomposition));
    if r.equivalence {
        out.push_str("the two sections are derived equivalent: C_L is both sides\n");
    }
    if let Some(count) = &r.computed_count {
        out.push_str(&format!(
            "exceptional collection length (computed): {count}\n"
        ));
    }
    if let Some(claim) = &r.catalogue_count {
        out.push_str(&format!(
            "exceptional collection length (catalogue): {claim}{}\n",
            if r.count_discrepancy {
                "  [DISCREPANCY]"
            } else {
                ""
            }
        ));
    }
    for inv in [&r.x_invariants, &r.y_invariants].into_iter().flatten() {
        let side = match inv.side {
            bbw::hpd::Side::Grassmannian => "X_L",
            bbw::hpd::Side::Pfaffian => "Y_L",
        };
        if inv.empty {
            out.push_str(&format!("{side}: empty (expected dimension {})\n", inv.dim));
            continue;
        }
        out.push_str(&format!(
            "{side}: dim {}, degree {}, genus {}, chi(O) {}",
            inv.dim,
            opt_big(&inv.degree),
            opt_big(&inv.genus),
            opt_big(&inv.chi_o)
        ));
        if inv.catalogue_degree.is_some() || inv.catalogue_genus.is_some() {
            out.push_str(&format!(
                "  (catalogue: degree {}, genus {}{})",
                opt_big(&inv.catalogue_degree),
                opt_big(&inv.catalogue_genus),
                if inv.discrepancy { "; DISCREPANCY" } else { "" }
            ));
        }
        out.push('\n');
    }
    if let Some(z) = &r.z_length {
        out.push_str(&format!("Z_L: finite of length {z}\n"));
    }
    out.push_str(&format!("tag: {}\n", r.tag));
    out
}

/// Plain-text rendering of verification logs: one summary line per suite,
/// then any failures.
pub fn render_logs_text(logs: &[VerificationLog]) -> String {
    let mut out = String::new();
    for log in logs {
        let rule = log
            .records
            .iter()
            .filter(|r| r.method == Method::SerreRule)
            .count();
        out.push_str(&format!(
            "suite {}: {} checks | {} direct passed | {} by Serre rule | {} failed\n",
            log.suite,
            log.records.len(),
            log.direct_passes(),
            rule,
            log.failures()
        ));
        for rec in log.records.iter().filter(|r| !r.pass) {
            out.push_str(&format!("  FAIL [{}]\n", rec.claim));
        }
    }
    out
}
