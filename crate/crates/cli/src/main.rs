use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steadycoh_cli::{failures, run_point, run_sweep, write_csv, CliError, RawConfig, Row, SweepSpec};

/// Steady-state coherence of two coupled atoms between two heat baths.
///
/// All energies, temperatures and rates are in units of the bath rate γ.
#[derive(Parser, Debug)]
#[command(name = "steadycoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve a single steady state and print it as one CSV row (axes in --config are ignored).
    Point(RunArgs),
    /// Evaluate a 1-D or 2-D grid, one CSV row per point (axis2 varies fastest).
    Sweep {
        #[command(flatten)]
        run: RunArgs,
        /// First sweep axis, `Name:min:max:steps` with Name one of Ta, DeltaT, Delta.
        #[arg(long)]
        axis1: Option<String>,
        /// Second sweep axis, same format as --axis1.
        #[arg(long)]
        axis2: Option<String>,
        /// Worker threads (default: one per core). Output is identical for any value.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Degenerate {
    /// Use the long-time limit reached from the maximally mixed state.
    Mixed,
    /// Report the point as failed.
    Error,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// TOML file with any of the settings below; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Coupling configuration.
    #[arg(long, value_parser = ["A", "B", "C", "D"])]
    case: Option<String>,
    /// Explicit coupling switches c1a,c1b,c2a,c2b (e.g. 1,0,1,1) instead of --case.
    #[arg(long, conflicts_with = "case")]
    channels: Option<String>,
    /// Apply the secular approximation.
    #[arg(long, value_enum)]
    secular: Option<Switch>,
    /// Mean atomic frequency Ω = (ω₁+ω₂)/2.
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<f64>,
    /// Inter-atom coupling ξ.
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<f64>,
    /// Detuning Δ = ω₁ − ω₂.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Cold-bath temperature T_a.
    #[arg(long, allow_hyphen_values = true)]
    ta: Option<f64>,
    /// Hot-bath temperature T_b.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "delta_t")]
    tb: Option<f64>,
    /// Temperature difference Δ_T = T_b − T_a.
    #[arg(long, allow_hyphen_values = true)]
    delta_t: Option<f64>,
    /// Bath coupling rate (the unit of everything else; default 1).
    #[arg(long)]
    gamma: Option<f64>,
    /// Columns to fill: coherence_abs, rho32_re, rho32_im, populations, flux (default: all).
    #[arg(long, value_delimiter = ',')]
    outputs: Option<Vec<String>>,
    /// Handling of points whose steady state is not unique.
    #[arg(long, value_enum)]
    degenerate: Option<Degenerate>,
    /// Accept channel switches that leave an atom without a bath.
    #[arg(long)]
    allow_uncoupled: bool,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn overrides(&self) -> RawConfig {
        RawConfig {
            case: self.case.clone(),
            channels: self.channels.clone(),
            secular: self.secular.map(|s| matches!(s, Switch::On)),
            omega: self.omega,
            xi: self.xi,
            delta: self.delta,
            ta: self.ta,
            tb: self.tb,
            delta_t: self.delta_t,
            gamma: self.gamma,
            axis1: None,
            axis2: None,
            outputs: self.outputs.clone(),
            degenerate: self.degenerate.map(|d| match d {
                Degenerate::Mixed => "mixed".to_string(),
                Degenerate::Error => "error".to_string(),
            }),
            allow_uncoupled: self.allow_uncoupled.then_some(true),
        }
    }

    /// Merge the config file (if any) with the flags. A single point ignores the file's axes.
    fn spec(&self, axes: Option<(Option<String>, Option<String>)>) -> Result<SweepSpec, CliError> {
        let mut file = match &self.config {
            Some(path) => RawConfig::from_file(path)?,
            None => RawConfig::default(),
        };
        let (axis1, axis2) = match axes {
            Some(axes) => axes,
            None => {
                file.axis1 = None;
                file.axis2 = None;
                (None, None)
            }
        };
        let cli = RawConfig { axis1, axis2, ..self.overrides() };
        SweepSpec::try_from(file.merge(cli))
    }
}

fn emit(rows: &[Row], spec: &SweepSpec, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
            write_csv(BufWriter::new(file), rows, &spec.outputs)
        }
        None => write_csv(io::stdout().lock(), rows, &spec.outputs),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let (rows, spec, out) = match cli.command {
        Command::Point(args) => {
            let spec = args.spec(None)?;
            (vec![run_point(&spec)?], spec, args.out)
        }
        Command::Sweep { run, axis1, axis2, threads } => {
            let spec = run.spec(Some((axis1, axis2)))?;
            (run_sweep(&spec, threads)?, spec, run.out)
        }
    };
    emit(&rows, &spec, out.as_ref())?;

    let failed = failures(&rows);
    if failed > 0 {
        eprintln!("{failed} of {} points failed", rows.len());
        for row in rows.iter().filter_map(|r| r.outcome.as_ref().err()).take(1) {
            eprintln!("first failure: {row}");
        }
    }
    Ok(if failed == rows.len() { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io::stderr(), "error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
