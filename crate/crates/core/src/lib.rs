//! Search for bent Boolean functions with a generational genetic algorithm
//! whose fitness is the Gowers U2 norm.
//!
//! The norm can be computed exactly (fast Walsh–Hadamard transform, direct
//! triple sum, autocorrelation) or estimated through a simulated `3n`-qubit
//! interference circuit with finite-shot measurement noise.
//!
//! Module map:
//! * [`boolean`] — truth tables, Walsh spectra, exact Gowers norms, bent fixtures
//! * [`quantum`] — circuit model, statevector simulator and shot estimators
//! * [`ga`] — tournament/crossover/mutation/elitism engine
//! * [`cost`] — classical vs quantum resource formulas
//! * [`harness`] — experiment runner, file formats, CLI

pub mod boolean;
pub mod cost;
mod error;
pub mod ga;
pub mod harness;
pub mod quantum;
pub mod rng;

pub use boolean::{
    gowers_u2_bruteforce, gowers_u2_from_spectrum, is_bent, mm_bent, walsh_hadamard, GowersValue,
    TruthTable, WalshSpectrum,
};
pub use error::{Error, Result};
pub use ga::{run_ga, GaConfig, GaOutcome, GenerationStats};
pub use quantum::{EstimationMethod, GowersCircuit, GowersEstimate, ShotBudget};
