//! Scenario configuration, boundary forcing, the coupled time loop,
//! diagnostics, CSV persistence and grid-refinement studies.

// Validation guards compare as `!(x > 0)` so NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boundary;
pub mod config;
pub mod convergence;
pub mod energy;
pub mod error;
pub mod output;
pub mod presets;
pub mod runner;

pub use config::{BodyMode, ForcingKind, Model, ScenarioConfig};
pub use error::{HarnessError, Result};
pub use runner::{run_scenario, run_scenario_observed, RunSummary, Scenario};
