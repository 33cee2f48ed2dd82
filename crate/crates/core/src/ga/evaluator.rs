use crate::boolean::{gowers_u2_from_spectrum, walsh_hadamard, TruthTable};
use crate::quantum::{
    estimate_shots_allzero, estimate_shots_hadamard_test, exact_amplitude, EstimationMethod,
    GowersCircuit, GowersEstimate,
};
use crate::Result;

use super::EvaluatorKind;

/// `evaluate(TruthTable) -> GowersEstimate`, pure given `(table, seed)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Evaluator {
    pub kind: EvaluatorKind,
    pub shots: u64,
}

impl Evaluator {
    pub fn new(kind: EvaluatorKind, shots: u64) -> Self {
        Self { kind, shots }
    }

    pub fn classical() -> Self {
        Self::new(EvaluatorKind::Classical, 0)
    }

    /// `seed` is ignored by the exact evaluators.
    pub fn evaluate(&self, f: &TruthTable, seed: u64) -> Result<GowersEstimate> {
        let circuit = GowersCircuit::new(f);
        match self.kind {
            EvaluatorKind::Classical => Ok(GowersEstimate::exact(
                gowers_u2_from_spectrum(&walsh_hadamard(f))?,
                EstimationMethod::ClassicalSpectrum,
            )),
            EvaluatorKind::QuantumExact => exact_amplitude(&circuit),
            EvaluatorKind::QuantumShotsAllzero => {
                estimate_shots_allzero(&circuit, self.shots, seed)
            }
            EvaluatorKind::QuantumShotsHadamard => {
                estimate_shots_hadamard_test(&circuit, self.shots, seed)
            }
        }
    }
}
