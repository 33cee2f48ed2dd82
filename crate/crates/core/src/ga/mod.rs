//! Generational genetic algorithm over truth tables.
//!
//! Each generation: evaluate, record, select parents by tournament, apply
//! single-point crossover and bit-flip mutation, then put the best individual
//! of the previous generation back in place of the worst offspring.

mod config;
mod engine;
mod evaluator;
mod operators;

pub use config::{EvaluatorKind, GaConfig};
pub use engine::{run_ga, GaOutcome, GenerationStats};
pub use evaluator::Evaluator;
pub use operators::{apply_elitism, crossover_single_point, mutate_bitflip, tournament_select};
