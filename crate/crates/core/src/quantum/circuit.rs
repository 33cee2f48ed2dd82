use serde::Serialize;

use crate::boolean::TruthTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Register {
    X,
    A,
    B,
}

impl Register {
    /// Index of the register's first qubit; qubit `i` of register `r` is
    /// `r.offset(n) + i`.
    pub fn offset(self, n: u32) -> usize {
        n as usize
            * match self {
                Register::X => 0,
                Register::A => 1,
                Register::B => 2,
            }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    Cnot {
        control: usize,
        target: usize,
    },
    /// `|x⟩ ↦ (-1)^{f(x)} |x⟩` on one register.
    PhaseOracle(Register),
    MeasureAll,
}

/// The estimation circuit for one truth table.
#[derive(Clone, Copy, Debug)]
pub struct GowersCircuit<'a> {
    oracle: &'a TruthTable,
}

impl<'a> GowersCircuit<'a> {
    pub fn new(oracle: &'a TruthTable) -> Self {
        Self { oracle }
    }

    pub fn n(&self) -> u32 {
        self.oracle.n()
    }

    pub fn oracle(&self) -> &'a TruthTable {
        self.oracle
    }

    pub fn num_qubits(&self) -> usize {
        3 * self.n() as usize
    }

    pub fn layout(&self) -> [Register; 3] {
        [Register::X, Register::A, Register::B]
    }

    fn hadamard_layer(&self, out: &mut Vec<Gate>) {
        out.extend((0..self.num_qubits()).map(Gate::H));
    }

    fn fan(&self, from: Register, out: &mut Vec<Gate>) {
        let n = self.n();
        out.extend((0..n as usize).map(|i| Gate::Cnot {
            control: from.offset(n) + i,
            target: Register::X.offset(n) + i,
        }));
    }

    /// Oracle calls and CNOT fans between the two Hadamard layers. Leaves `X`
    /// holding `x` again and multiplies each `|x,a,b⟩` by `(-1)^{Δ_{a,b}f(x)}`.
    ///
    /// `X` walks `x → x⊕a → x⊕a⊕b → x⊕b → x`, with an oracle call at each of
    /// the first four points.
    pub fn phase_block(&self) -> Vec<Gate> {
        let mut g = vec![Gate::PhaseOracle(Register::X)];
        self.fan(Register::A, &mut g);
        g.push(Gate::PhaseOracle(Register::X));
        self.fan(Register::B, &mut g);
        g.push(Gate::PhaseOracle(Register::X));
        self.fan(Register::A, &mut g);
        g.push(Gate::PhaseOracle(Register::X));
        self.fan(Register::B, &mut g);
        g
    }

    /// Full gate sequence: `H^{⊗3n}`, phase block, `H^{⊗3n}`, measurement.
    pub fn gates(&self) -> Vec<Gate> {
        let mut g = Vec::new();
        self.hadamard_layer(&mut g);
        g.extend(self.phase_block());
        self.hadamard_layer(&mut g);
        g.push(Gate::MeasureAll);
        g
    }
}

/// Resource accounting with each oracle call costed as `n` two-qubit gates
/// ("oracle-as-given"). A synthesized oracle for an arbitrary table can be
/// far more expensive; `two_qubit_bound` is the `O(n^2)` worst-case figure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GateCount {
    pub qubits: u64,
    pub oracle_calls: u64,
    pub cnot_count: u64,
    pub two_qubit_total: u64,
    pub two_qubit_bound: u64,
}

pub fn gate_count(n: u32) -> GateCount {
    let n = n as u64;
    let oracle_calls = 4;
    let cnot_count = 4 * n;
    GateCount {
        qubits: 3 * n,
        oracle_calls,
        cnot_count,
        two_qubit_total: cnot_count + oracle_calls * n,
        two_qubit_bound: oracle_calls * n * n + cnot_count,
    }
}
