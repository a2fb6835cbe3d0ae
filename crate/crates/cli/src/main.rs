//! `unruh`: measure, sweep and validate two-qubit states under the fermionic
//! Unruh channel.

mod report;

use std::f64::consts::FRAC_PI_4;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unruh_core::linalg::PSD_CLAMP;
use unruh_core::sweep::{evaluate_point, param_for, sweep_csv};
use unruh_core::{
    choi_of, compare_point, find_thresholds, herm_eigen, kraus_from_choi, unruh_kraus,
    validate_family, Acceleration, ChoiNormalization, ChoiOrdering, FamilyKind, SweepSpec,
    UnruhParam,
};

#[derive(Debug, Parser)]
#[command(
    name = "unruh",
    version,
    about = "Two-qubit resources under the fermionic Unruh channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Concurrence, teleportation fidelity and Bell maximum at one point,
    /// with the closed-form comparison.
    Measure(MeasureArgs),
    /// CSV grid over p and a list of accelerations.
    Sweep(SweepArgs),
    /// Closed forms against the engine over a (p, r) grid.
    Validate(ValidateArgs),
    /// Choi matrix, recovered Kraus operators or Choi spectrum.
    Choi(ChoiArgs),
    /// Values of p where F crosses 2/3 and B crosses 2.
    Thresholds(ThresholdArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ChannelParam {
    /// Acceleration in units of omega; a number or `inf`.
    #[arg(long, value_parser = parse_accel)]
    accel: Option<Acceleration>,
    /// Channel angle r directly.
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
}

#[derive(Debug, Args)]
struct MeasureArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    #[arg(long, allow_negative_numbers = true)]
    p: f64,
    #[command(flatten)]
    param: ChannelParam,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Accept r in (pi/4, pi/2], beyond any physical acceleration.
    #[arg(long)]
    allow_unphysical: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Families to sweep (repeatable or comma separated); all by default.
    #[arg(long, value_parser = parse_family, value_delimiter = ',')]
    family: Vec<FamilyKind>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    p_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    p_max: f64,
    #[arg(long, default_value_t = 101)]
    p_steps: usize,
    /// Comma separated accelerations in units of omega; `inf` allowed.
    #[arg(long, value_parser = parse_accel, value_delimiter = ',', default_value = "0,1,3,10,inf")]
    accels: Vec<Acceleration>,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    #[arg(long, default_value_t = 101)]
    p_steps: usize,
    #[arg(long, default_value_t = 51)]
    r_steps: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Emit {
    Choi,
    Kraus,
    Eigs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ordering {
    /// Channel on the second tensor factor.
    Second,
    /// Channel on the first tensor factor.
    First,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Normalization {
    /// Trace 2.
    TraceD,
    /// Trace 1.
    TraceOne,
}

#[derive(Debug, Args)]
struct ChoiArgs {
    #[command(flatten)]
    param: ChannelParam,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
    #[arg(long, value_enum, default_value = "choi")]
    emit: Emit,
    #[arg(long, value_enum, default_value = "second")]
    ordering: Ordering,
    #[arg(long, value_enum, default_value = "trace-d")]
    normalization: Normalization,
    #[arg(long)]
    allow_unphysical: bool,
}

#[derive(Debug, Args)]
struct ThresholdArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyKind,
    #[arg(long, value_parser = parse_accel)]
    accel: Acceleration,
    #[arg(long, default_value_t = 1.0)]
    omega: f64,
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse()
}

fn parse_accel(s: &str) -> Result<Acceleration, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<unruh_core::Error> for Failure {
    fn from(e: unruh_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl Failure {
    fn io(path: &Path, e: io::Error) -> Self {
        Failure::Io(format!("{}: {e}", path.display()))
    }
}

fn channel_param(
    p: &ChannelParam,
    omega: f64,
    allow_unphysical: bool,
) -> Result<UnruhParam, Failure> {
    match (p.accel, p.r) {
        (Some(a), None) => Ok(param_for(a, omega)?),
        (None, Some(r)) => {
            if r > FRAC_PI_4 && !allow_unphysical {
                return Err(Failure::Usage(format!(
                    "r = {r} exceeds pi/4, which no finite acceleration reaches; pass --allow-unphysical to use it"
                )));
            }
            Ok(UnruhParam::from_r(r)?)
        }
        _ => Err(Failure::Usage("give exactly one of --accel or --r".into())),
    }
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| Failure::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(format!("stdout: {e}")))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Measure(a) => {
            let u = channel_param(&a.param, a.omega, a.allow_unphysical)?;
            let rep = match a.param.accel {
                Some(accel) => evaluate_point(a.family, a.p, accel, a.omega)?.closed_form,
                None => compare_point(a.family, a.p, &u)?,
            };
            emit(None, report::measure(&rep, a.param.accel).as_bytes())
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                families: if a.family.is_empty() {
                    FamilyKind::ALL.to_vec()
                } else {
                    a.family
                },
                p_min: a.p_min,
                p_max: a.p_max,
                p_steps: a.p_steps,
                accels: a.accels,
                omega: a.omega,
            };
            let csv = sweep_csv(&spec)?;
            emit(a.out.as_deref(), &csv)
        }
        Command::Validate(a) => {
            if a.tol.is_nan() || a.tol < 0.0 {
                return Err(Failure::Usage(format!(
                    "tolerance must be non-negative, got {}",
                    a.tol
                )));
            }
            let summary = validate_family(a.family, a.p_steps, a.r_steps, a.tol)?;
            emit(a.out.as_deref(), summary.render().as_bytes())
        }
        Command::Choi(a) => {
            let u = channel_param(&a.param, a.omega, a.allow_unphysical)?;
            let ordering = match a.ordering {
                Ordering::Second => ChoiOrdering::ChannelOnSecond,
                Ordering::First => ChoiOrdering::ChannelOnFirst,
            };
            let normalization = match a.normalization {
                Normalization::TraceD => ChoiNormalization::TraceD,
                Normalization::TraceOne => ChoiNormalization::TraceOne,
            };
            let choi = choi_of(&unruh_kraus(&u), ordering, normalization);
            let text = match a.emit {
                Emit::Choi => report::matrix(choi.matrix()),
                Emit::Kraus => {
                    let recovered = kraus_from_choi(&choi)?;
                    format!(
                        "{}\n{}",
                        report::kraus(&unruh_kraus(&u)),
                        report::kraus(&recovered)
                    )
                }
                Emit::Eigs => {
                    let eigs: Vec<f64> = herm_eigen(choi.matrix())?
                        .descending()
                        .into_iter()
                        .map(|x| {
                            if (-PSD_CLAMP..0.0).contains(&x) {
                                0.0
                            } else {
                                x
                            }
                        })
                        .collect();
                    report::list(&eigs) + "\n"
                }
            };
            emit(None, text.as_bytes())
        }
        Command::Thresholds(a) => {
            let rep = find_thresholds(a.family, a.accel, a.omega)?;
            emit(None, rep.render().as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
