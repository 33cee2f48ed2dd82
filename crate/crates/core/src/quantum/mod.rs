//! Simulation of the `3n`-qubit Gowers U2 estimation circuit.
//!
//! Three `n`-qubit registers `X`, `A`, `B` are put in uniform superposition,
//! four phase-oracle calls interleaved with CNOT fans imprint
//! `(-1)^{Δ_{a,b} f(x)}`, and a closing Hadamard layer folds the phase sum
//! into the all-zero amplitude `a₀ = ||f||_{U2}^4`.

mod circuit;
mod estimate;
mod statevector;

pub use circuit::{gate_count, Gate, GateCount, GowersCircuit, Register};
pub use estimate::{
    estimate_shots_allzero, estimate_shots_hadamard_test, exact_amplitude, shot_budget,
    EstimationMethod, GowersEstimate, ShotBudget, EXACT_AMPLITUDE_MAX_VARS,
};
pub use statevector::{
    hadamard_test_probability, statevector_run, Statevector, STATEVECTOR_MAX_QUBITS,
};
