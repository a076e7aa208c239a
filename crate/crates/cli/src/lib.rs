//! Experiment orchestration for the Quandary Den model: plan files, seeded
//! resumable result sets, replay, sampling, sweeps and analysis tables.

pub mod analyze;
pub mod error;
pub mod plan;
pub mod results;
pub mod run;
pub mod sample;
pub mod sweep;

pub use error::CliError;
pub use plan::{Plan, Profile};
pub use results::ResultSet;
