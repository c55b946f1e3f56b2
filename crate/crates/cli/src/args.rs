//! Command-line argument definitions.

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinor_frames::{EulerAngles, HalfInt, IdentityKind, Labels};

/// Parse a half-integer given as `k`, `k/2`, or a decimal on the 0.5 grid.
pub fn parse_halfint(s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| e.to_string())
}

/// Parse an orientation given as `alpha,beta,gamma` in radians.
pub fn parse_euler(s: &str) -> Result<EulerAngles, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("`{s}` is not an `alpha,beta,gamma` triple"));
    }
    let mut angles = [0.0f64; 3];
    for (slot, part) in angles.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("`{part}` is not a number"))?;
        if !slot.is_finite() {
            return Err(format!("`{part}` is not finite"));
        }
    }
    Ok(EulerAngles::new(angles[0], angles[1], angles[2]))
}

fn parse_identity(s: &str) -> Result<IdentityKind, String> {
    s.parse::<IdentityKind>().map_err(|e| {
        let names: Vec<&str> = IdentityKind::ALL.iter().map(|k| k.name()).collect();
        format!("{e}; expected one of: {}", names.join(", "))
    })
}

#[derive(Parser, Debug)]
#[command(
    name = "spinor-frames",
    version,
    about = "Exact angular-momentum coupling coefficients, rotor matrices on the \
             SU(2) double cover, and numeric certification of the frame-transformation \
             identities relating weakly and strongly coupled two-particle bases."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a Wigner coupling coefficient, exact surd plus float value.
    Cg(CgArgs),
    /// Evaluate a small-d rotation matrix entry d^j_{m m'}(beta).
    #[command(name = "d")]
    SmallD(SmallDArgs),
    /// Evaluate a D rotation matrix entry D^j_{m m'} at an orientation.
    #[command(name = "D")]
    BigD(BigDArgs),
    /// Evaluate one wavefunction amplitude at an orientation.
    Eval(EvalArgs),
    /// Check one identity over seeded orientation samples.
    Verify(VerifyArgs),
    /// Run the full identity sweep and report every label set.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
pub struct CgArgs {
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j1: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m1: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j2: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m2: HalfInt,
    /// Total angular momentum.
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j: HalfInt,
    /// Total projection.
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m: HalfInt,
}

#[derive(Args, Debug)]
pub struct SmallDArgs {
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub mprime: HalfInt,
    /// Rotation angle in radians.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
}

#[derive(Args, Debug)]
pub struct BigDArgs {
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m: HalfInt,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub mprime: HalfInt,
    /// Orientation as `alpha,beta,gamma` in radians (gamma up to 4π).
    #[arg(long, value_parser = parse_euler, allow_hyphen_values = true)]
    pub orientation: EulerAngles,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WavefunctionKind {
    Rotor,
    Spin,
    Spinor,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Which wavefunction family to evaluate.
    #[arg(long, value_enum)]
    pub kind: WavefunctionKind,
    /// Orbital label (rotor and spinor).
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub l: Option<HalfInt>,
    /// Projection label (rotor).
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub m: Option<HalfInt>,
    /// Spin projection (spin).
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub sigma: Option<HalfInt>,
    /// Total single-particle angular momentum (spinor).
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j: Option<HalfInt>,
    /// Spinor projection (spinor).
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub n: Option<HalfInt>,
    /// Orientation as `alpha,beta,gamma` in radians.
    #[arg(long, value_parser = parse_euler, allow_hyphen_values = true)]
    pub orientation: EulerAngles,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub l: Option<HalfInt>,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub l1: Option<HalfInt>,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub l2: Option<HalfInt>,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j: Option<HalfInt>,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j1: Option<HalfInt>,
    #[arg(long, value_parser = parse_halfint, allow_hyphen_values = true)]
    pub j2: Option<HalfInt>,
    /// Total orbital angular momentum L.
    #[arg(long = "L", value_parser = parse_halfint, allow_hyphen_values = true)]
    pub total_l: Option<HalfInt>,
    /// Total orbital projection M.
    #[arg(long = "M", value_parser = parse_halfint, allow_hyphen_values = true)]
    pub total_m: Option<HalfInt>,
    /// Total angular momentum J.
    #[arg(long = "J", value_parser = parse_halfint, allow_hyphen_values = true)]
    pub total_j: Option<HalfInt>,
    /// Total projection N.
    #[arg(long = "N", value_parser = parse_halfint, allow_hyphen_values = true)]
    pub total_n: Option<HalfInt>,
}

impl LabelArgs {
    pub fn to_labels(&self) -> Labels {
        Labels {
            l: self.l,
            l1: self.l1,
            l2: self.l2,
            j: self.j,
            j1: self.j1,
            j2: self.j2,
            total_l: self.total_l,
            total_m: self.total_m,
            total_j: self.total_j,
            total_n: self.total_n,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Identity to check, e.g. `singlet` or `frame-fermion`.
    #[arg(long, value_parser = parse_identity)]
    pub identity: IdentityKind,
    #[command(flatten)]
    pub labels: LabelArgs,
    /// Orientation pairs to draw (4 gimbal-degenerate pairs are appended).
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include every sampled orientation tuple and residual in the report.
    #[arg(long = "per-sample", default_value_t = false)]
    pub per_sample: bool,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Cap on doubled constituent labels (j1, j2, l1, l2).
    #[arg(long = "max-doubled-j", default_value_t = 7)]
    pub max_doubled_j: i32,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    pub tolerance: f64,
    /// Override the per-identity default sample counts.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
