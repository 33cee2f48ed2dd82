use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use super::circuit::GowersCircuit;
use crate::boolean::fourth_root;
use crate::boolean::GowersValue;
use crate::{Error, Result};

/// Largest `n` for the analytic all-zero amplitude (`4^n` work).
pub const EXACT_AMPLITUDE_MAX_VARS: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimationMethod {
    ClassicalSpectrum,
    ExactAmplitude,
    Statevector,
    ShotsAllzero,
    ShotsHadamardTest,
}

impl EstimationMethod {
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Self::ClassicalSpectrum | Self::ExactAmplitude | Self::Statevector
        )
    }
}

/// An evaluation of `||f||_{U2}^4`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GowersEstimate {
    /// Estimate of `u4`, clamped into `[0, 1]`.
    pub value: f64,
    /// `value^{1/4}`.
    pub norm: f64,
    /// The estimator before clamping. Unbiased for the Hadamard test.
    pub raw: f64,
    pub method: EstimationMethod,
    /// Shot count, `0` for exact methods.
    pub shots: u64,
    pub std_error: f64,
}

impl GowersEstimate {
    pub fn exact(value: GowersValue, method: EstimationMethod) -> Self {
        Self {
            value: value.u4,
            norm: value.norm,
            raw: value.u4,
            method,
            shots: 0,
            std_error: 0.0,
        }
    }

    fn sampled(raw: f64, method: EstimationMethod, shots: u64, std_error: f64) -> Self {
        let value = raw.clamp(0.0, 1.0);
        Self {
            value,
            norm: fourth_root(value),
            raw,
            method,
            shots,
            std_error,
        }
    }
}

/// All-zero amplitude of the circuit, evaluated without a statevector.
///
/// The Hadamard sandwich reduces `⟨0|H V H|0⟩` to
/// `2^{-3n} Σ_{x,a,b} (-1)^{Δ_{a,b}f(x)} = 2^{-3n} Σ_a C_f(a)^2`, with `C_f`
/// the autocorrelation `Σ_x (-1)^{f(x) ⊕ f(x⊕a)}`.
pub fn exact_amplitude(c: &GowersCircuit<'_>) -> Result<GowersEstimate> {
    let n = c.n();
    if n > EXACT_AMPLITUDE_MAX_VARS {
        return Err(Error::Range {
            what: "exact amplitude",
            n,
            min: 1,
            max: EXACT_AMPLITUDE_MAX_VARS,
        });
    }
    let f = c.oracle();
    let signs: Vec<i64> = (0..f.len()).map(|x| 1 - 2 * f.bit(x) as i64).collect();
    let phase_sum: u128 = (0..signs.len())
        .map(|a| {
            let corr: i64 = signs
                .iter()
                .enumerate()
                .map(|(x, s)| s * signs[x ^ a])
                .sum();
            (corr * corr) as u128
        })
        .sum();
    Ok(GowersEstimate::exact(
        GowersValue::from_phase_sum(n, phase_sum),
        EstimationMethod::ExactAmplitude,
    ))
}

fn check_shots(shots: u64) -> Result<()> {
    if shots == 0 {
        return Err(Error::InvalidParameter(
            "shot count must be at least 1".into(),
        ));
    }
    Ok(())
}

fn draw_successes(p: f64, shots: u64, seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Binomial::new(shots, p.clamp(0.0, 1.0))
        .expect("probability clamped into [0, 1]")
        .sample(&mut rng)
}

/// Success fraction used for standard errors: `k/M`, pulled half a count in
/// from either boundary so a run of all-equal outcomes still reports a
/// positive error.
fn variance_fraction(successes: u64, shots: u64) -> f64 {
    let m = shots as f64;
    (successes as f64).clamp(0.5, m - 0.5).max(0.0) / m
}

/// Samples the all-zero outcome, probability `a₀²`, and returns `sqrt(p̂)`.
///
/// The outcome count is drawn as one binomial variate, which has the same
/// distribution as `M` independent Bernoulli shots on the consumed statistic.
pub fn estimate_shots_allzero(
    c: &GowersCircuit<'_>,
    shots: u64,
    seed: u64,
) -> Result<GowersEstimate> {
    check_shots(shots)?;
    let a0 = exact_amplitude(c)?.value;
    let k = draw_successes(a0 * a0, shots, seed);
    let p_hat = k as f64 / shots as f64;
    // delta method: d sqrt(p) = dp / (2 sqrt p)
    let pv = variance_fraction(k, shots);
    let se = (pv * (1.0 - pv) / shots as f64).sqrt() / (2.0 * pv.sqrt());
    Ok(GowersEstimate::sampled(
        p_hat.sqrt(),
        EstimationMethod::ShotsAllzero,
        shots,
        se,
    ))
}

/// Ancilla Hadamard test: `P(ancilla = 0) = (1 + a₀)/2`, estimator `2p̂₀ − 1`.
pub fn estimate_shots_hadamard_test(
    c: &GowersCircuit<'_>,
    shots: u64,
    seed: u64,
) -> Result<GowersEstimate> {
    check_shots(shots)?;
    let a0 = exact_amplitude(c)?.value;
    let k = draw_successes((1.0 + a0) / 2.0, shots, seed);
    let p_hat = k as f64 / shots as f64;
    let pv = variance_fraction(k, shots);
    let se = 2.0 * (pv * (1.0 - pv) / shots as f64).sqrt();
    Ok(GowersEstimate::sampled(
        2.0 * p_hat - 1.0,
        EstimationMethod::ShotsHadamardTest,
        shots,
        se,
    ))
}

/// Hoeffding shot count `M = ⌈ln(2/δ) / (2ε²) · 2^{4n}⌉`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShotBudget {
    pub n: u32,
    pub epsilon: f64,
    pub delta: f64,
    pub shots: u128,
}

pub fn shot_budget(n: u32, epsilon: f64, delta: f64) -> Result<ShotBudget> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be > 0, got {epsilon}"
        )));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in (0, 1), got {delta}"
        )));
    }
    let raw = (2.0 / delta).ln() / (2.0 * epsilon * epsilon) * (4.0 * n as f64).exp2();
    // absorb rounding noise so that e.g. an exact 1.0 does not ceil to 2
    let nearest = raw.round();
    let m = if (raw - nearest).abs() <= 4.0 * f64::EPSILON * nearest.max(1.0) {
        nearest
    } else {
        raw.ceil()
    };
    if !m.is_finite() || m >= u128::MAX as f64 {
        return Err(Error::InvalidParameter(format!(
            "shot budget overflows for n = {n}, epsilon = {epsilon}, delta = {delta}"
        )));
    }
    Ok(ShotBudget {
        n,
        epsilon,
        delta,
        shots: m as u128,
    })
}
