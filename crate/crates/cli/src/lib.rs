//! Front-end wiring: argument handling, evaluation, report rendering.
//!
//! Exit codes: 0 when every checked residual passes, 1 when any residual
//! exceeds its tolerance, 2 for usage or domain errors (no report is written
//! in that case).

pub mod args;
pub mod render;

use args::{Cli, Command, EvalArgs, Format, WavefunctionKind};
use spinor_frames::{
    check_identity, from_euler, standard_suite, Amplitude, CheckOptions, DMatrixEntryLabel,
    ParticleState, ResidualReport,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Run a parsed invocation to completion, returning the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

/// Angular momenta past this point exceed the factorial tables.
fn check_magnitudes(labels: &[(&str, Option<spinor_frames::HalfInt>)]) -> Result<(), String> {
    const MAX_DOUBLED: i32 = spinor_frames::wigner::MAX_DOUBLED_J;
    for (name, label) in labels {
        if let Some(value) = label {
            if value.twice().abs() > MAX_DOUBLED {
                return Err(format!(
                    "--{name} {value} exceeds the supported range (|2j| <= {MAX_DOUBLED})"
                ));
            }
        }
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Cg(args) => {
            check_magnitudes(&[
                ("j1", Some(args.j1)),
                ("m1", Some(args.m1)),
                ("j2", Some(args.j2)),
                ("m2", Some(args.m2)),
                ("j", Some(args.j)),
                ("m", Some(args.m)),
            ])?;
            let value = spinor_frames::cg(spinor_frames::CouplingLabel::new(
                args.j1, args.m1, args.j2, args.m2, args.j, args.m,
            ));
            println!("{value} ≈ {}", value.to_f64());
            Ok(true)
        }
        Command::SmallD(args) => {
            check_magnitudes(&[("j", Some(args.j))])?;
            let label = DMatrixEntryLabel::new(args.j, args.m, args.mprime);
            if !label.is_valid() {
                return Err(format!(
                    "d-matrix labels out of range: j={} m={} mprime={}",
                    args.j, args.m, args.mprime
                ));
            }
            println!("{}", spinor_frames::wigner_d_small(label, args.beta));
            Ok(true)
        }
        Command::BigD(args) => {
            check_magnitudes(&[("j", Some(args.j))])?;
            let label = DMatrixEntryLabel::new(args.j, args.m, args.mprime);
            if !label.is_valid() {
                return Err(format!(
                    "D-matrix labels out of range: j={} m={} mprime={}",
                    args.j, args.m, args.mprime
                ));
            }
            let u = from_euler(&args.orientation);
            print_amplitude(spinor_frames::wigner_big_d(label, &u));
            Ok(true)
        }
        Command::Eval(args) => {
            check_magnitudes(&[("l", args.l), ("j", args.j)])?;
            print_amplitude(evaluate(&args)?);
            Ok(true)
        }
        Command::Verify(args) => {
            let labels = args.labels.to_labels();
            check_magnitudes(&[
                ("l", labels.l),
                ("l1", labels.l1),
                ("l2", labels.l2),
                ("j", labels.j),
                ("j1", labels.j1),
                ("j2", labels.j2),
                ("L", labels.total_l),
                ("J", labels.total_j),
            ])?;
            let report = check_identity(
                args.identity,
                &labels,
                &CheckOptions {
                    samples: args.samples,
                    seed: args.seed,
                    tolerance: args.tolerance,
                    record_per_sample: args.per_sample,
                },
            )
            .map_err(|e| e.to_string())?;
            match args.format {
                Format::Text => print!("{}", render::text_report(&report)),
                Format::Json => println!("{}", render::json_report(&report)),
                Format::Csv => {
                    println!("{}", render::CSV_HEADER);
                    println!("{}", render::csv_row(&report));
                }
            }
            Ok(report.pass)
        }
        Command::Suite(args) => {
            if !(0..=spinor_frames::wigner::MAX_DOUBLED_J).contains(&args.max_doubled_j) {
                return Err(format!(
                    "--max-doubled-j must lie in 0..={}",
                    spinor_frames::wigner::MAX_DOUBLED_J
                ));
            }
            let reports = run_suite(args.max_doubled_j, args.seed, args.tolerance, args.samples)
                .map_err(|e| e.to_string())?;
            let all_pass = reports.iter().all(|r| r.pass);
            match args.format {
                Format::Text => {
                    for report in &reports {
                        println!("{}", render::text_suite_row(report));
                    }
                    let failed = reports.iter().filter(|r| !r.pass).count();
                    println!(
                        "{} checks, {} failed, worst residual {:e}",
                        reports.len(),
                        failed,
                        reports.iter().map(|r| r.max_abs_residual).fold(0.0, f64::max)
                    );
                }
                Format::Json => {
                    println!("[");
                    for (i, report) in reports.iter().enumerate() {
                        let sep = if i + 1 < reports.len() { "," } else { "" };
                        println!("{}{}", render::json_report(report), sep);
                    }
                    println!("]");
                }
                Format::Csv => {
                    println!("{}", render::CSV_HEADER);
                    for report in &reports {
                        println!("{}", render::csv_row(report));
                    }
                }
            }
            Ok(all_pass)
        }
    }
}

/// Run every suite entry; label sets come from the library enumeration.
pub fn run_suite(
    max_doubled_j: i32,
    seed: u64,
    tolerance: f64,
    samples_override: Option<usize>,
) -> Result<Vec<ResidualReport>, spinor_frames::Error> {
    standard_suite(max_doubled_j)
        .into_iter()
        .map(|entry| {
            check_identity(
                entry.kind,
                &entry.labels,
                &CheckOptions {
                    samples: samples_override.unwrap_or(entry.samples),
                    seed,
                    tolerance,
                    record_per_sample: false,
                },
            )
        })
        .collect()
}

fn evaluate(args: &EvalArgs) -> Result<Amplitude, String> {
    let state = ParticleState::new(from_euler(&args.orientation));
    let need = |label: Option<spinor_frames::HalfInt>, name: &str| {
        label.ok_or_else(|| format!("--{name} is required for this kind"))
    };
    match args.kind {
        WavefunctionKind::Rotor => spinor_frames::rotor_wavefunction(
            need(args.l, "l")?,
            need(args.m, "m")?,
            &state,
        )
        .map_err(|e| e.to_string()),
        WavefunctionKind::Spin => {
            spinor_frames::spin_function(need(args.sigma, "sigma")?, &state)
                .map_err(|e| e.to_string())
        }
        WavefunctionKind::Spinor => spinor_frames::spinor_function(
            need(args.j, "j")?,
            need(args.n, "n")?,
            need(args.l, "l")?,
            &state,
        )
        .map_err(|e| e.to_string()),
    }
}

fn print_amplitude(value: Amplitude) {
    // Flush negative zeros so the identity rotation prints as `1+0i`.
    let re = if value.re == 0.0 { 0.0 } else { value.re };
    let im = if value.im == 0.0 { 0.0 } else { value.im };
    println!("{re}{im:+}i");
}
