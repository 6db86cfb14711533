//! `dipcorr`: correlation reports and time-series data for two dipole-coupled
//! qubits.
//!
//! Exit codes: 0 success, 2 malformed input, 3 violated physical invariant,
//! 4 file I/O failure.

mod error;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dipcorr::analysis::{dicke_sweep, onset_time, series_from_states, sweep, uniform_grid, EventSet, TimeSeries};
use dipcorr::correlations::full_report;
use dipcorr::dynamics::{coupling_from_geometry, CouplingGeometry, DynamicsParams, Integrator};
use dipcorr::quantum_core::{DensityMatrix, Matrix4, Subsystem};
use serde::Deserialize;

use error::CliError;
use output::Derived;

#[derive(Parser)]
#[command(
    name = "dipcorr",
    version,
    about = "Correlations and dissipative dynamics of two dipole-coupled qubits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Correlation report of a single state read from a JSON file.
    Report {
        /// File holding {"matrix": [[[re, im] x4] x4]}.
        #[arg(long)]
        state: PathBuf,
        #[arg(long, default_value = "B")]
        side: Subsystem,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Correlations along the dissipative trajectory.
    Evolve {
        #[command(flatten)]
        coupling: CouplingArgs,
        /// Initial state: ee, eg, ge, gg or file:<path>.
        #[arg(long, default_value = "ee")]
        initial: String,
        /// RK4 step, used whenever the analytic solution does not apply.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Correlations in the zero-separation limit.
    Dicke {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Entanglement onset time for each collective damping value.
    Onset {
        /// Comma- or space-separated γ values.
        #[arg(required = true, value_delimiter = ',', allow_negative_numbers = true)]
        gammas: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Collective damping and exchange coupling from the pair geometry.
    Coupling {
        /// Separation in wavelengths.
        #[arg(long)]
        distance: f64,
        /// Cosine of the angle between dipoles and separation.
        #[arg(long = "dipole-cos", allow_negative_numbers = true)]
        dipole_cos: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Onset, degeneracy, MID = discord window and decay rate per γ.
    SweepGamma {
        #[arg(required = true, value_delimiter = ',', allow_negative_numbers = true)]
        gammas: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct CouplingArgs {
    /// Collective damping Γ₁₂/Γ.
    #[arg(
        long,
        allow_negative_numbers = true,
        required_unless_present = "distance",
        conflicts_with = "distance"
    )]
    gamma: Option<f64>,
    /// Separation in wavelengths; requires --dipole-cos.
    #[arg(long, requires = "dipole_cos")]
    distance: Option<f64>,
    #[arg(long = "dipole-cos", allow_negative_numbers = true, requires = "distance")]
    dipole_cos: Option<f64>,
    /// Exchange coupling Ω₁₂/Γ; only with --gamma.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "distance")]
    omega: Option<f64>,
}

impl CouplingArgs {
    fn resolve(&self) -> Result<(DynamicsParams, Option<Derived>), CliError> {
        match (self.gamma, self.distance, self.dipole_cos) {
            (Some(gamma), None, None) => Ok((DynamicsParams::new(gamma, self.omega.unwrap_or(0.0))?, None)),
            (None, Some(d), Some(cos)) => {
                let p = coupling_from_geometry(&CouplingGeometry::new(d, cos)?);
                Ok((
                    p,
                    Some(Derived {
                        gamma: p.gamma,
                        omega: p.omega,
                    }),
                ))
            }
            _ => Err(CliError::Parse(
                "give either --gamma or --distance with --dipole-cos".into(),
            )),
        }
    }
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 10.0)]
    tau_max: f64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(2..))]
    points: u64,
    #[arg(long, default_value = "B")]
    side: Subsystem,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StateFile {
    matrix: Matrix4,
}

fn read_state(path: &Path) -> Result<DensityMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let file: StateFile =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(DensityMatrix::new(file.matrix)?)
}

fn initial_state(spec: &str) -> Result<DensityMatrix, CliError> {
    if let Some(path) = spec.strip_prefix("file:") {
        return read_state(Path::new(path));
    }
    DensityMatrix::basis_state(spec).ok_or_else(|| {
        CliError::Parse(format!(
            "unknown initial state {spec:?}, expected ee, eg, ge, gg or file:<path>"
        ))
    })
}

fn evolve(
    coupling: &CouplingArgs,
    initial: &str,
    step: f64,
    sampling: &Sampling,
) -> Result<(TimeSeries, Option<Derived>), CliError> {
    let (params, derived) = coupling.resolve()?;
    let rho0 = initial_state(initial)?;
    let points = sampling.points as usize;
    let analytic = initial == "ee" && (0.0..=1.0).contains(&params.gamma);
    let series = if analytic {
        sweep(params.gamma, sampling.tau_max, points, sampling.side)?
    } else {
        let taus = uniform_grid(sampling.tau_max, points)?;
        let states = Integrator::new(step)?.sample(&rho0, &params, &taus)?;
        series_from_states(params.gamma, taus, &states, sampling.side)?
    };
    Ok((series, derived))
}

fn render_series(series: &TimeSeries, derived: Option<Derived>, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Csv => output::series_csv(series, derived),
        Format::Json => output::series_json(series, derived),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Report { state, side, out } => {
            let report = full_report(&read_state(&state)?, side)?;
            output::emit(&output::json(&report)?, out.as_deref())
        }
        Command::Evolve {
            coupling,
            initial,
            step,
            sampling,
            output,
        } => {
            let (series, derived) = evolve(&coupling, &initial, step, &sampling)?;
            output::emit(&render_series(&series, derived, output.format)?, output.out.as_deref())
        }
        Command::Dicke { sampling, output } => {
            let series = dicke_sweep(sampling.tau_max, sampling.points as usize, sampling.side)?;
            output::emit(&render_series(&series, None, output.format)?, output.out.as_deref())
        }
        Command::Onset { gammas, output } => {
            let table = gammas
                .iter()
                .map(|&g| Ok((g, onset_time(g)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let bytes = match output.format {
                Format::Csv => output::onset_csv(&table)?,
                Format::Json => {
                    let rows: Vec<_> = table
                        .iter()
                        .map(|&(gamma, tau_e)| serde_json::json!({ "gamma": gamma, "tau_e": tau_e }))
                        .collect();
                    output::json(&rows)?
                }
            };
            output::emit(&bytes, output.out.as_deref())
        }
        Command::Coupling {
            distance,
            dipole_cos,
            output,
        } => {
            let p = coupling_from_geometry(&CouplingGeometry::new(distance, dipole_cos)?);
            let d = Derived {
                gamma: p.gamma,
                omega: p.omega,
            };
            let bytes = match output.format {
                Format::Csv => output::coupling_csv(d)?,
                Format::Json => output::json(&d)?,
            };
            output::emit(&bytes, output.out.as_deref())
        }
        Command::SweepGamma { gammas, output } => {
            let events = gammas
                .iter()
                .map(|&g| EventSet::compute(g))
                .collect::<Result<Vec<_>, _>>()?;
            let bytes = match output.format {
                Format::Csv => output::events_csv(&events)?,
                Format::Json => output::json(&events)?,
            };
            output::emit(&bytes, output.out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dipcorr: {e}");
            e.exit_code()
        }
    }
}
