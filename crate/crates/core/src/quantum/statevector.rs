//! Dense statevector simulation.
//!
//! The gate set {H, CNOT, phase oracle} maps real amplitudes to real
//! amplitudes, so the state is stored as `f64` rather than complex numbers.
//! Qubit `q` corresponds to bit `q` of the basis index.

use std::f64::consts::FRAC_1_SQRT_2;

use super::circuit::{Gate, GowersCircuit, Register};
use crate::boolean::TruthTable;
use crate::{Error, Result};

/// 24 qubits, `n = 8`: 2^24 amplitudes.
pub const STATEVECTOR_MAX_QUBITS: usize = 24;

#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amps: Vec<f64>,
}

impl Statevector {
    /// Computational basis state `|index⟩`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits > STATEVECTOR_MAX_QUBITS + 1 {
            return Err(Error::Range {
                what: "statevector qubits",
                n: num_qubits as u32,
                min: 1,
                max: STATEVECTOR_MAX_QUBITS as u32 + 1,
            });
        }
        let mut amps = vec![0.0; 1usize << num_qubits];
        if index >= amps.len() {
            return Err(Error::InvalidParameter(format!(
                "basis index {index} outside {num_qubits}-qubit space"
            )));
        }
        amps[index] = 1.0;
        Ok(Self { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amps
    }

    pub fn into_amplitudes(self) -> Vec<f64> {
        self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a * a).sum()
    }

    pub fn h(&mut self, q: usize) {
        let bit = 1usize << q;
        for block in self.amps.chunks_exact_mut(2 * bit) {
            let (lo, hi) = block.split_at_mut(bit);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = (x + y) * FRAC_1_SQRT_2;
                *b = (x - y) * FRAC_1_SQRT_2;
            }
        }
    }

    /// CNOT, optionally with an extra control qubit (Toffoli).
    fn cnot(&mut self, control: usize, target: usize, extra: Option<usize>) {
        let c = 1usize << control;
        let t = 1usize << target;
        let e = extra.map_or(0, |q| 1usize << q);
        for i in 0..self.amps.len() {
            if i & c != 0 && i & t == 0 && i & e == e {
                self.amps.swap(i, i | t);
            }
        }
    }

    fn phase_oracle(&mut self, f: &TruthTable, offset: usize, extra: Option<usize>) {
        let mask = f.len() - 1;
        let e = extra.map_or(0, |q| 1usize << q);
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & e == e && f.get((i >> offset) & mask) {
                *a = -*a;
            }
        }
    }

    /// Applies one gate. `MeasureAll` leaves the state untouched; outcome
    /// probabilities are read off the amplitudes.
    pub fn apply(&mut self, gate: &Gate, oracle: &TruthTable) {
        self.apply_controlled(gate, oracle, None);
    }

    /// Applies `gate` conditioned on qubit `control` (when given).
    /// Controlled Hadamards are not needed by any circuit here.
    pub fn apply_controlled(&mut self, gate: &Gate, oracle: &TruthTable, control: Option<usize>) {
        let n = oracle.n();
        match *gate {
            Gate::H(q) => {
                assert!(control.is_none(), "controlled H unsupported");
                self.h(q)
            }
            Gate::Cnot { control: c, target } => self.cnot(c, target, control),
            Gate::PhaseOracle(r) => self.phase_oracle(oracle, r.offset(n), control),
            Gate::MeasureAll => {}
        }
    }

    /// Applies a gate list.
    pub fn run(&mut self, gates: &[Gate], oracle: &TruthTable) {
        for g in gates {
            self.apply(g, oracle);
        }
    }
}

fn check_qubits(qubits: usize) -> Result<()> {
    if qubits > STATEVECTOR_MAX_QUBITS {
        return Err(Error::Range {
            what: "statevector simulation (3n qubits)",
            n: (qubits / 3) as u32,
            min: 1,
            max: (STATEVECTOR_MAX_QUBITS / 3) as u32,
        });
    }
    Ok(())
}

/// Runs every gate of the circuit on `|0…0⟩` and returns all `2^{3n}`
/// amplitudes. Index `x | a << n | b << 2n` holds `|x⟩_X |a⟩_A |b⟩_B`.
pub fn statevector_run(c: &GowersCircuit<'_>) -> Result<Vec<f64>> {
    check_qubits(c.num_qubits())?;
    let mut sv = Statevector::basis(c.num_qubits(), 0)?;
    sv.run(&c.gates(), c.oracle());
    Ok(sv.into_amplitudes())
}

/// Ancilla-controlled phase block: returns `P(ancilla = 0) = (1 + a₀) / 2`.
///
/// Only the oracle calls are controlled; the CNOT fans compose to identity
/// on their own so the uncontrolled branch is unaffected by them.
pub fn hadamard_test_probability(c: &GowersCircuit<'_>) -> Result<f64> {
    check_qubits(c.num_qubits() + 1)?;
    let data = c.num_qubits();
    let ancilla = data;
    let mut sv = Statevector::basis(data + 1, 0)?;
    for q in 0..=data {
        sv.h(q);
    }
    for g in c.phase_block() {
        let ctrl = matches!(g, Gate::PhaseOracle(Register::X)).then_some(ancilla);
        sv.apply_controlled(&g, c.oracle(), ctrl);
    }
    sv.h(ancilla);
    let anc = 1usize << ancilla;
    Ok(sv
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(i, _)| i & anc == 0)
        .map(|(_, a)| a * a)
        .sum())
}
