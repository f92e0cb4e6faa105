//! Point and sweep driver: configuration, grid evaluation and CSV output.

pub mod config;
pub mod output;
pub mod sweep;

pub use config::{Axis, AxisName, HotBath, Output, RawConfig, SweepSpec};
pub use output::{format_float, write_csv, HEADER};
pub use sweep::{evaluate, failures, grid, run_point, run_sweep, Row};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Invalid configuration or arguments (exit code 2).
    #[error("{0}")]
    Config(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) | CliError::Csv(_) => 1,
        }
    }
}
