//! Steady states of two coupled two-level atoms between two heat baths.
//!
//! The pipeline is
//!
//! 1. [`model`]: validate parameters and build the dressed eigenstructure,
//! 2. [`generator`]: assemble the Born-Markov generator (secular or not) for
//!    any coupling configuration,
//! 3. [`solver`]: extract the steady state from the generator's null space,
//! 4. [`observables`]: read off populations, the coherence `ρ₃₂` and the
//!    inter-atom heat flux.
//!
//! All matrices live in the dressed basis `{|λ₁⟩, …, |λ₄⟩}` and all energies
//! and temperatures are in units of the bath rate `γ`.

pub mod error;
pub mod generator;
pub mod linalg;
pub mod model;
pub mod observables;
pub mod solver;

pub use error::{Error, GeneratorError, ModelError, SolverError};
pub use generator::{build_generator, Approximation, Generator};
pub use model::{eigensystem, thermal_occupation, BathSetup, Case, Channels, EigenStructure, SystemParams};
pub use observables::{report, steady_report, SteadyReport};
pub use solver::{steady_state, DegeneratePolicy, DensityMatrix};
