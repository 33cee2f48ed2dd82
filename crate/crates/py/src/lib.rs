//! Python bindings: truth tables, exact and quantum-estimated Gowers U2
//! norms, the genetic search, and the cost model.
//!
//! Build the importable module with
//! `cargo build --release -p bentsearch-py --features extension-module`
//! and copy `libbentsearch_py.so` to `bentsearch.so` on the Python path.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use bentsearch::cost::{resource_table as build_resource_table, TableParams};
use bentsearch::ga::{Evaluator, EvaluatorKind};
use bentsearch::quantum::{self, GowersCircuit};
use bentsearch::rng::{stream, Role};
use bentsearch::{Error, GaConfig, GowersEstimate, GowersValue};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(e) => PyIOError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

#[pyclass(name = "TruthTable", module = "bentsearch", eq)]
#[derive(Clone, PartialEq)]
pub struct PyTruthTable {
    pub inner: bentsearch::TruthTable,
}

impl From<bentsearch::TruthTable> for PyTruthTable {
    fn from(inner: bentsearch::TruthTable) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyTruthTable {
    /// Build from a sequence of `2^n` zeros and ones; entry `x` is `f(x)`.
    #[new]
    fn new(n: u32, bits: Vec<u8>) -> PyResult<Self> {
        bentsearch::TruthTable::from_bits(n, &bits)
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn zero(n: u32) -> PyResult<Self> {
        bentsearch::TruthTable::zero(n)
            .map(Self::from)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_hex(n: u32, hex: &str) -> PyResult<Self> {
        bentsearch::TruthTable::from_hex(n, hex)
            .map(Self::from)
            .map_err(to_py)
    }

    /// Parse the `n=<k> tt=<hex>` text form.
    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse::<bentsearch::TruthTable>()
            .map(Self::from)
            .map_err(to_py)
    }

    /// Uniformly random table, reproducible from `seed`.
    #[staticmethod]
    #[pyo3(signature = (n, seed=0))]
    fn random(n: u32, seed: u64) -> PyResult<Self> {
        bentsearch::TruthTable::random(n, &mut stream(seed, Role::Init, 0, 0))
            .map(Self::from)
            .map_err(to_py)
    }

    /// `x1 x2 ⊕ x3 x4 ⊕ …`, bent for even `n`.
    #[staticmethod]
    fn inner_product(n: u32) -> PyResult<Self> {
        bentsearch::boolean::inner_product(n)
            .map(Self::from)
            .map_err(to_py)
    }

    /// Maiorana–McFarland bent function `x·π(y) ⊕ g(y)`.
    #[staticmethod]
    #[pyo3(signature = (n, perm, g=None))]
    fn maiorana_mcfarland(n: u32, perm: Vec<usize>, g: Option<PyTruthTable>) -> PyResult<Self> {
        bentsearch::mm_bent(n, &perm, g.as_ref().map(|t| &t.inner))
            .map(Self::from)
            .map_err(to_py)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __getitem__(&self, x: usize) -> PyResult<u8> {
        if x >= self.inner.len() {
            return Err(pyo3::exceptions::PyIndexError::new_err(format!(
                "index {x} out of range for {} entries",
                self.inner.len()
            )));
        }
        Ok(self.inner.bit(x))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TruthTable('{}')", self.inner)
    }

    fn to_bits(&self) -> Vec<u8> {
        self.inner.to_bits()
    }

    fn to_hex(&self) -> String {
        self.inner.to_hex()
    }

    fn weight(&self) -> u32 {
        self.inner.weight()
    }

    fn walsh(&self) -> Vec<i32> {
        bentsearch::walsh_hadamard(&self.inner).coeffs().to_vec()
    }

    fn gowers_u2(&self) -> PyResult<Gowers> {
        gowers_u2(self)
    }

    fn is_bent(&self) -> PyResult<bool> {
        bentsearch::is_bent(&self.inner).map_err(to_py)
    }
}

/// Exact `||f||_{U2}`; `phase_sum` is the integer numerator of `u4`.
#[pyclass(module = "bentsearch", frozen, get_all)]
#[derive(Clone)]
pub struct Gowers {
    pub n: u32,
    pub phase_sum: u128,
    pub u4: f64,
    pub norm: f64,
}

impl From<GowersValue> for Gowers {
    fn from(v: GowersValue) -> Self {
        Self {
            n: v.n,
            phase_sum: v.phase_sum,
            u4: v.u4,
            norm: v.norm,
        }
    }
}

#[pymethods]
impl Gowers {
    fn __repr__(&self) -> String {
        format!("Gowers(n={}, u4={}, norm={})", self.n, self.u4, self.norm)
    }
}

#[pyclass(module = "bentsearch", frozen, get_all)]
#[derive(Clone)]
pub struct Estimate {
    pub value: f64,
    pub norm: f64,
    pub raw: f64,
    pub method: String,
    pub shots: u64,
    pub std_error: f64,
}

impl From<GowersEstimate> for Estimate {
    fn from(e: GowersEstimate) -> Self {
        let method = match e.method {
            bentsearch::EstimationMethod::ClassicalSpectrum => "classical-spectrum",
            bentsearch::EstimationMethod::ExactAmplitude => "exact-amplitude",
            bentsearch::EstimationMethod::Statevector => "statevector",
            bentsearch::EstimationMethod::ShotsAllzero => "shots-allzero",
            bentsearch::EstimationMethod::ShotsHadamardTest => "shots-hadamard-test",
        };
        Self {
            value: e.value,
            norm: e.norm,
            raw: e.raw,
            method: method.to_owned(),
            shots: e.shots,
            std_error: e.std_error,
        }
    }
}

#[pymethods]
impl Estimate {
    fn __repr__(&self) -> String {
        format!(
            "Estimate(method='{}', value={}, norm={}, shots={}, std_error={})",
            self.method, self.value, self.norm, self.shots, self.std_error
        )
    }
}

#[pyfunction]
fn walsh_hadamard(tt: &PyTruthTable) -> Vec<i32> {
    tt.walsh()
}

#[pyfunction]
fn gowers_u2(tt: &PyTruthTable) -> PyResult<Gowers> {
    bentsearch::gowers_u2_from_spectrum(&bentsearch::walsh_hadamard(&tt.inner))
        .map(Gowers::from)
        .map_err(to_py)
}

/// Direct triple sum over `(x, a, b)`; `n <= 8`.
#[pyfunction]
fn gowers_u2_bruteforce(tt: &PyTruthTable) -> PyResult<Gowers> {
    bentsearch::gowers_u2_bruteforce(&tt.inner)
        .map(Gowers::from)
        .map_err(to_py)
}

#[pyfunction]
fn is_bent(tt: &PyTruthTable) -> PyResult<bool> {
    tt.is_bent()
}

/// Score `tt` with one of `classical`, `quantum-exact`,
/// `quantum-shots-allzero`, `quantum-shots-hadamard`.
#[pyfunction]
#[pyo3(signature = (tt, evaluator="classical", shots=1000, seed=0))]
fn evaluate(tt: &PyTruthTable, evaluator: &str, shots: u64, seed: u64) -> PyResult<Estimate> {
    let kind: EvaluatorKind = evaluator.parse().map_err(to_py)?;
    Evaluator::new(kind, shots)
        .evaluate(&tt.inner, seed)
        .map(Estimate::from)
        .map_err(to_py)
}

/// Final amplitudes of the simulated `3n`-qubit circuit.
#[pyfunction]
fn statevector(tt: &PyTruthTable) -> PyResult<Vec<f64>> {
    quantum::statevector_run(&GowersCircuit::new(&tt.inner)).map_err(to_py)
}

/// Hoeffding shot count for additive error `epsilon` with confidence `1 - delta`.
#[pyfunction]
fn shot_budget(n: u32, epsilon: f64, delta: f64) -> PyResult<u128> {
    quantum::shot_budget(n, epsilon, delta)
        .map(|b| b.shots)
        .map_err(to_py)
}

/// `(qubits, oracle_calls, cnot_count, two_qubit_total, two_qubit_bound)`.
#[pyfunction]
fn gate_count(n: u32) -> (u64, u64, u64, u64, u64) {
    let g = quantum::gate_count(n);
    (
        g.qubits,
        g.oracle_calls,
        g.cnot_count,
        g.two_qubit_total,
        g.two_qubit_bound,
    )
}

#[pyclass(module = "bentsearch", frozen, get_all)]
pub struct GaResult {
    pub best: PyTruthTable,
    pub best_norm: f64,
    pub best_u4: f64,
    pub best_generation: usize,
    /// `(generation, best_fitness, avg_fitness)` per generation.
    pub history: Vec<(usize, f64, f64)>,
}

#[pymethods]
impl GaResult {
    fn __repr__(&self) -> String {
        format!(
            "GaResult(best_norm={}, best_generation={}, generations={})",
            self.best_norm,
            self.best_generation,
            self.history.len()
        )
    }
}

#[pyfunction]
#[pyo3(signature = (
    n=6, population=25, generations=250, tournament_size=3,
    crossover_prob=0.5, mutation_prob=0.8, seed=0,
    evaluator="classical", shots=1000,
))]
#[allow(clippy::too_many_arguments)]
fn run_ga(
    py: Python<'_>,
    n: u32,
    population: usize,
    generations: usize,
    tournament_size: usize,
    crossover_prob: f64,
    mutation_prob: f64,
    seed: u64,
    evaluator: &str,
    shots: u64,
) -> PyResult<GaResult> {
    let config = GaConfig {
        n,
        population,
        generations,
        tournament_size,
        crossover_prob,
        mutation_prob,
        seed,
        evaluator: evaluator.parse().map_err(to_py)?,
        shots,
    };
    let out = py.detach(|| bentsearch::run_ga(&config)).map_err(to_py)?;
    Ok(GaResult {
        best: out.best.into(),
        best_norm: out.best_exact.norm,
        best_u4: out.best_exact.u4,
        best_generation: out.best_generation,
        history: out
            .history
            .iter()
            .map(|h| (h.generation, h.best_fitness, h.avg_fitness))
            .collect(),
    })
}

/// Classical vs quantum cost table as CSV text.
#[pyfunction]
#[pyo3(signature = (n_min=1, n_max=40, epsilon=0.01, delta=0.05))]
fn resource_table(n_min: u32, n_max: u32, epsilon: f64, delta: f64) -> PyResult<String> {
    let params = TableParams {
        n_min,
        n_max,
        epsilon,
        delta,
        ..TableParams::default()
    };
    build_resource_table(&params)
        .map(|t| t.to_csv())
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "bentsearch")]
pub fn bentsearch_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTruthTable>()?;
    m.add_class::<Gowers>()?;
    m.add_class::<Estimate>()?;
    m.add_class::<GaResult>()?;
    m.add_function(wrap_pyfunction!(walsh_hadamard, m)?)?;
    m.add_function(wrap_pyfunction!(gowers_u2, m)?)?;
    m.add_function(wrap_pyfunction!(gowers_u2_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_bent, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(statevector, m)?)?;
    m.add_function(wrap_pyfunction!(shot_budget, m)?)?;
    m.add_function(wrap_pyfunction!(gate_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_ga, m)?)?;
    m.add_function(wrap_pyfunction!(resource_table, m)?)?;
    Ok(())
}
