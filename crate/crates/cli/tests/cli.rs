//! Behavior of the installed binary: output formats, exit codes, and
//! determinism of the machine-readable reports.

use std::process::{Command, Output};

fn spinor_frames(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinor-frames"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn cg_prints_surd_and_float() {
    let out = spinor_frames(&[
        "cg", "--j1", "1", "--m1", "0", "--j2", "1/2", "--m2", "1/2", "--j", "1/2", "--m", "1/2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "-sqrt(1/3) ≈ -0.5773502691896257\n");
}

#[test]
fn cg_handles_negative_projections_and_zero() {
    let out = spinor_frames(&[
        "cg", "--j1", "1/2", "--m1", "-1/2", "--j2", "1/2", "--m2", "1/2", "--j", "0", "--m", "0",
    ]);
    assert_eq!(stdout_of(&out), "-sqrt(1/2) ≈ -0.7071067811865476\n");
    let out = spinor_frames(&[
        "cg", "--j1", "1", "--m1", "1", "--j2", "1", "--m2", "1", "--j", "1", "--m", "2",
    ]);
    assert_eq!(stdout_of(&out), "0 ≈ 0\n");
}

#[test]
fn unparseable_half_integer_is_usage_error_naming_the_flag() {
    let out = spinor_frames(&[
        "cg", "--j1", "1.3", "--m1", "0", "--j2", "1", "--m2", "0", "--j", "1", "--m", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty(), "no report on usage errors");
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("--j1"), "flag not named: {stderr}");
}

#[test]
fn domain_error_is_exit_two_without_report() {
    let out = spinor_frames(&[
        "verify", "--identity", "frame-boson", "--l1", "1", "--l2", "1", "--L", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("triangle"), "{stderr}");
}

#[test]
fn verify_singlet_json_passes() {
    let out = spinor_frames(&[
        "verify", "--identity", "singlet", "--samples", "100", "--seed", "42", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["identity"], "singlet-spin");
    assert_eq!(parsed["pass"], true);
    assert_eq!(parsed["samples"], 100);
    assert_eq!(parsed["seed"], 42);
    assert!(parsed["max_abs_residual"].as_f64().unwrap() < 1e-13);
    assert!(parsed.get("per_sample").is_none());
}

#[test]
fn verify_json_key_order_is_stable() {
    let out = spinor_frames(&["verify", "--identity", "singlet", "--format", "json"]);
    let text = stdout_of(&out);
    let keys = ["\"identity\"", "\"params\"", "\"samples\"", "\"seed\"", "\"tolerance\"",
        "\"max_abs_residual\"", "\"pass\""];
    let mut last = 0;
    for key in keys {
        let pos = text.find(key).unwrap_or_else(|| panic!("missing {key}"));
        assert!(pos > last || last == 0, "{key} out of order");
        last = pos;
    }
}

#[test]
fn verify_per_sample_includes_degenerate_pairs() {
    let out = spinor_frames(&[
        "verify", "--identity", "legendre", "--l", "2", "--samples", "7", "--per-sample",
        "--format", "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let per_sample = parsed["per_sample"].as_array().unwrap();
    assert_eq!(per_sample.len(), 7 + 4);
    for sample in per_sample {
        assert_eq!(sample["orientations"].as_array().unwrap().len(), 2);
        assert!(sample["residual"].as_f64().unwrap() < 1e-12);
    }
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = spinor_frames(&[
        "verify", "--identity", "legendre", "--l", "3", "--tolerance", "1e-20", "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(parsed["pass"], false);
}

#[test]
fn verify_runs_are_byte_identical() {
    let args = [
        "verify", "--identity", "addition-fermion", "--j", "3/2", "--l1", "1", "--l2", "2",
        "--samples", "25", "--per-sample", "--format", "json",
    ];
    let first = spinor_frames(&args);
    let second = spinor_frames(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn suite_csv_has_one_row_per_label_set() {
    let out = spinor_frames(&["suite", "--max-doubled-j", "7", "--samples", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "identity,param_string,samples,seed,tolerance,max_abs_residual,pass"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), spinor_frames::standard_suite(7).len());
    for row in &rows {
        assert!(row.ends_with(",true"), "failing row: {row}");
    }
    for kind in spinor_frames::IdentityKind::ALL {
        assert!(
            rows.iter().any(|r| r.starts_with(kind.name())),
            "{kind} missing from CSV"
        );
    }
}

#[test]
fn small_and_big_d_values_print() {
    let out = spinor_frames(&["d", "--j", "1", "--m", "0", "--mprime", "0", "--beta", "1.0471975511965976"]);
    let value: f64 = stdout_of(&out).trim().parse().unwrap();
    assert!((value - 0.5).abs() < 1e-15);

    let out = spinor_frames(&["D", "--j", "1/2", "--m", "1/2", "--mprime", "1/2", "--orientation", "0,0,0"]);
    assert_eq!(stdout_of(&out).trim(), "1+0i");

    let out = spinor_frames(&["d", "--j", "1/2", "--m", "3/2", "--mprime", "1/2", "--beta", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_covers_all_families() {
    let out = spinor_frames(&["eval", "--kind", "rotor", "--l", "0", "--m", "0", "--orientation", "2,1,3"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("0.28209479177387814"), "{text}");

    let out = spinor_frames(&["eval", "--kind", "spin", "--sigma", "1/2", "--orientation", "0,0,0"]);
    assert_eq!(stdout_of(&out).trim(), "1+0i");

    let out = spinor_frames(&["eval", "--kind", "spinor", "--j", "1/2", "--n", "1/2", "--l", "1", "--orientation", "0.4,1.2,2.2"]);
    assert_eq!(out.status.code(), Some(0));

    // Half-integral l is a domain error for the rotor family.
    let out = spinor_frames(&["eval", "--kind", "rotor", "--l", "1/2", "--m", "1/2", "--orientation", "0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}
