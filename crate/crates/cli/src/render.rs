//! Report rendering: JSON with a stable key order, CSV, and plain text.
//!
//! Floating values in machine formats are printed with 17 significant digits
//! so identical runs produce byte-identical output.

use spinor_frames::ResidualReport;

/// 17 significant digits, scientific; enough to round-trip any f64.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_escape(s: &str) -> String {
    // Param values are fractions and identity names; nothing needs more
    // than the basic escapes.
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Key order: identity, params, samples, seed, tolerance, max_abs_residual,
/// pass, then the optional per_sample array.
pub fn json_report(report: &ResidualReport) -> String {
    let mut out = String::with_capacity(256);
    out.push_str("{\"identity\":\"");
    out.push_str(report.kind.name());
    out.push_str("\",\"params\":{");
    for (i, (key, value)) in report.params.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('"');
        out.push_str(key);
        out.push_str("\":\"");
        out.push_str(&json_escape(value));
        out.push('"');
    }
    out.push_str("},\"samples\":");
    out.push_str(&report.samples.to_string());
    out.push_str(",\"seed\":");
    out.push_str(&report.seed.to_string());
    out.push_str(",\"tolerance\":");
    out.push_str(&float17(report.tolerance));
    out.push_str(",\"max_abs_residual\":");
    out.push_str(&float17(report.max_abs_residual));
    out.push_str(",\"pass\":");
    out.push_str(if report.pass { "true" } else { "false" });
    if let Some(per_sample) = &report.per_sample {
        out.push_str(",\"per_sample\":[");
        for (i, sample) in per_sample.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("{\"orientations\":[");
            for (k, e) in sample.orientations.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push('[');
                out.push_str(&float17(e.alpha));
                out.push(',');
                out.push_str(&float17(e.beta));
                out.push(',');
                out.push_str(&float17(e.gamma));
                out.push(']');
            }
            out.push_str("],\"residual\":");
            out.push_str(&float17(sample.residual));
            out.push('}');
        }
        out.push(']');
    }
    out.push('}');
    out
}

pub fn param_string(report: &ResidualReport) -> String {
    report
        .params
        .iter()
        .map(|(key, value)| format!("{key}={value}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub const CSV_HEADER: &str = "identity,param_string,samples,seed,tolerance,max_abs_residual,pass";

pub fn csv_row(report: &ResidualReport) -> String {
    format!(
        "{},{},{},{},{},{},{}",
        report.kind.name(),
        param_string(report),
        report.samples,
        report.seed,
        float17(report.tolerance),
        float17(report.max_abs_residual),
        report.pass
    )
}

pub fn text_report(report: &ResidualReport) -> String {
    let params = param_string(report);
    let mut out = format!(
        "identity:         {}\n\
         params:           {}\n\
         samples:          {} (+4 degenerate)\n\
         seed:             {}\n\
         tolerance:        {:e}\n\
         max_abs_residual: {:e}\n\
         pass:             {}\n",
        report.kind.name(),
        if params.is_empty() { "(none)" } else { &params },
        report.samples,
        report.seed,
        report.tolerance,
        report.max_abs_residual,
        report.pass
    );
    if let Some(per_sample) = &report.per_sample {
        for (i, sample) in per_sample.iter().enumerate() {
            out.push_str(&format!("sample {i:4}: residual {:e}  at", sample.residual));
            for e in &sample.orientations {
                out.push_str(&format!(" ({:.6},{:.6},{:.6})", e.alpha, e.beta, e.gamma));
            }
            out.push('\n');
        }
    }
    out
}

pub fn text_suite_row(report: &ResidualReport) -> String {
    format!(
        "{} {:<24} {:<40} max {:<24} tol {:e}",
        if report.pass { "PASS" } else { "FAIL" },
        report.kind.name(),
        param_string(report),
        format!("{:e}", report.max_abs_residual),
        report.tolerance
    )
}
