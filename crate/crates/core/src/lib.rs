//! Quandary Den: a grid-combat artificial-life model for studying how gene
//! number and interdependence evolve with and without purifying selection.
//!
//! * [`engine`] runs single sessions deterministically.
//! * [`genome`] holds the ACGT grammar, mutation and gene events.
//! * [`evolution`] drives bootstrap and neutral-phase trials.
//! * [`metrics`] measures LotB contribution, robustness, plasticity and
//!   evolvability.
//! * [`sampling`] estimates solution counts by gene number.
//! * [`stats`] provides the hypothesis tests used in analyses.

pub mod arena;
pub mod engine;
pub mod evolution;
pub mod genome;
pub mod metrics;
pub mod sampling;
pub mod seed;
pub mod stats;

pub use arena::Scenario;
pub use engine::{
    compute_max_score, run_session, AttackKind, Direction, EndReason, GridConfig, OpponentConfig, OpponentSpec,
    Position, Score, SessionOutcome, SessionRules,
};
pub use evolution::{run_trial, Condition, Regime, TrialConfig, TrialRecord};
pub use genome::{Gene, GeneOrigin, Genome, StartScheme, TokenTable};
