//! Experiment driver: seeded repetitions of the GA, persisted as
//! `run_<r>/generations.csv`, `run_<r>/best.tt` and a top-level
//! `summary.json` that echoes the effective configuration.

mod cli;
mod experiment;

pub use cli::{run_cli, Cli};
pub use experiment::{
    read_generations_csv, repetition_seed, run_experiment, write_generations_csv, Emit,
    ExperimentConfig, ExperimentSummary, RunSummary,
};
