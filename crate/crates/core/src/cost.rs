//! Resource formulas for one Gowers-norm evaluation, with every big-O
//! constant set to 1. Values are asymptotic units, not wall-clock time.
//!
//! * classical: `T_C = n·2^n` operations, `n·2^n` bits of spectrum storage
//! * quantum: `T_Q = n²·2^{4n}·ln(1/δ)/ε²` gate-shots on `3n` qubits
//!
//! `T_Q / T_C = n·2^{3n}·ln(1/δ)/ε²` grows with `n`, so these formulas never
//! cross. The table instead marks two feasibility frontiers: where a dense
//! spectrum array stops fitting a RAM budget, and where `3n` exceeds a
//! logical-qubit budget.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::{Error, Result};

/// Default RAM budget: `2^36` bits (8 GiB).
pub const DEFAULT_RAM_BUDGET_BITS: u128 = 1 << 36;
pub const DEFAULT_QUBIT_BUDGET: u64 = 100;
/// Width of one stored spectrum entry in the memory-frontier model.
pub const SPECTRUM_WORD_BITS: u32 = 64;
/// Largest `n` the formulas are evaluated for.
pub const MAX_COST_VARS: u32 = 100;

fn check_n(n: u32) -> Result<()> {
    if n == 0 || n > MAX_COST_VARS {
        return Err(Error::Range {
            what: "cost model",
            n,
            min: 1,
            max: MAX_COST_VARS,
        });
    }
    Ok(())
}

fn check_eps_delta(epsilon: f64, delta: f64) -> Result<()> {
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
    Ok(())
}

/// `T_C(n) = n·2^n`.
pub fn classical_cost(n: u32) -> Result<u128> {
    check_n(n)?;
    Ok((n as u128) << n)
}

/// Integer part of the quantum cost, `n²·2^{4n}`.
pub fn quantum_cost_scale(n: u32) -> Result<BigUint> {
    check_n(n)?;
    Ok((BigUint::from(n) * BigUint::from(n)) << (4 * n as usize))
}

/// `T_Q(n, ε, δ) = n²·2^{4n}·ln(1/δ)/ε²`.
pub fn quantum_cost(n: u32, epsilon: f64, delta: f64) -> Result<f64> {
    check_eps_delta(epsilon, delta)?;
    let scale = quantum_cost_scale(n)?.to_f64().unwrap_or(f64::INFINITY);
    Ok(scale * (1.0 / delta).ln() / (epsilon * epsilon))
}

/// Bits to hold the full spectrum as `2^n` machine words.
pub fn spectrum_storage_bits(n: u32) -> u128 {
    (SPECTRUM_WORD_BITS as u128) << n
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CostReport {
    pub n: u32,
    pub epsilon: f64,
    pub delta: f64,
    pub t_classical: u128,
    pub t_quantum: f64,
    pub mem_classical_bits: u128,
    pub qubits: u64,
    pub ratio: f64,
    pub frontier_flags: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResourceTable {
    pub rows: Vec<CostReport>,
    pub ram_budget_bits: u128,
    pub qubit_budget: u64,
    /// Smallest `n` whose dense spectrum fills the RAM budget.
    pub memory_frontier: Option<u32>,
    /// Smallest `n` with `3n` above the qubit budget.
    pub qubit_frontier: Option<u32>,
}

#[derive(Clone, Copy, Debug)]
pub struct TableParams {
    pub n_min: u32,
    pub n_max: u32,
    pub epsilon: f64,
    pub delta: f64,
    pub ram_budget_bits: u128,
    pub qubit_budget: u64,
}

impl Default for TableParams {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 40,
            epsilon: 0.01,
            delta: 0.05,
            ram_budget_bits: DEFAULT_RAM_BUDGET_BITS,
            qubit_budget: DEFAULT_QUBIT_BUDGET,
        }
    }
}

pub fn cost_report(n: u32, epsilon: f64, delta: f64) -> Result<CostReport> {
    let t_classical = classical_cost(n)?;
    let t_quantum = quantum_cost(n, epsilon, delta)?;
    Ok(CostReport {
        n,
        epsilon,
        delta,
        t_classical,
        t_quantum,
        mem_classical_bits: t_classical,
        qubits: 3 * n as u64,
        ratio: t_quantum / t_classical as f64,
        frontier_flags: Vec::new(),
    })
}

pub fn resource_table(p: &TableParams) -> Result<ResourceTable> {
    if p.n_min > p.n_max {
        return Err(Error::InvalidParameter(format!(
            "empty range: n-min {} > n-max {}",
            p.n_min, p.n_max
        )));
    }
    check_n(p.n_min)?;
    check_n(p.n_max)?;
    check_eps_delta(p.epsilon, p.delta)?;
    if p.ram_budget_bits == 0 || p.qubit_budget == 0 {
        return Err(Error::InvalidParameter("budgets must be positive".into()));
    }

    let memory_frontier =
        (1..=MAX_COST_VARS).find(|&n| spectrum_storage_bits(n) >= p.ram_budget_bits);
    let qubit_frontier = (1..=MAX_COST_VARS).find(|&n| 3 * n as u64 > p.qubit_budget);

    let rows = (p.n_min..=p.n_max)
        .map(|n| {
            let mut row = cost_report(n, p.epsilon, p.delta)?;
            if memory_frontier == Some(n) {
                row.frontier_flags.push("ram-frontier");
            }
            if spectrum_storage_bits(n) >= p.ram_budget_bits {
                row.frontier_flags.push("ram-over");
            }
            if qubit_frontier == Some(n) {
                row.frontier_flags.push("qubit-frontier");
            }
            if row.qubits > p.qubit_budget {
                row.frontier_flags.push("qubit-over");
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    Ok(ResourceTable {
        rows,
        ram_budget_bits: p.ram_budget_bits,
        qubit_budget: p.qubit_budget,
        memory_frontier,
        qubit_frontier,
    })
}

pub const CSV_HEADER: &str =
    "n,t_classical,t_quantum,ratio,mem_classical_bits,qubits,frontier_flags";

impl ResourceTable {
    /// CSV rows followed by `#` footnote lines.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.12e},{:.12e},{},{},{}\n",
                r.n,
                r.t_classical,
                r.t_quantum,
                r.ratio,
                r.mem_classical_bits,
                r.qubits,
                r.frontier_flags.join("|")
            ));
        }
        let show = |v: Option<u32>| v.map_or("none".to_string(), |n| n.to_string());
        out.push_str(
            "# units: asymptotic formula values with unit constants, not wall-clock time\n",
        );
        out.push_str(
            "# t_quantum/t_classical = n*2^(3n)*ln(1/delta)/eps^2 increases with n: no runtime crossover exists under these formulas\n",
        );
        out.push_str(&format!(
            "# ram frontier: n = {} (2^n x {}-bit spectrum words >= {} bits)\n",
            show(self.memory_frontier),
            SPECTRUM_WORD_BITS,
            self.ram_budget_bits
        ));
        out.push_str(&format!(
            "# qubit frontier: n = {} (3n > {} logical qubits)\n",
            show(self.qubit_frontier),
            self.qubit_budget
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Repeated multiplication, no shifts.
    fn bignum_scale(n: u32) -> BigUint {
        let mut v = BigUint::one();
        for _ in 0..4 * n {
            v *= 2u32;
        }
        v * n * n
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_cost(1).unwrap(), 2);
        assert_eq!(classical_cost(8).unwrap(), 2048);
        let c30 = classical_cost(30).unwrap();
        assert_eq!(c30, 30 * (1u128 << 30));
        assert!((c30 as f64 - 3.2e10).abs() / 3.2e10 < 0.01);
        assert!(classical_cost(0).is_err());
    }

    #[test]
    fn quantum_examples() {
        let q = quantum_cost(1, 1.0, (-1.0f64).exp()).unwrap();
        assert!((q - 16.0).abs() < 1e-12);
        let q = quantum_cost(8, 0.01, 0.05).unwrap();
        let want = 64.0 * 2f64.powi(32) * 20f64.ln() / 1e-4;
        assert!((q - want).abs() / want < 1e-12);
        assert!((q - 8.2e15).abs() / 8.2e15 < 0.01);
        assert!(quantum_cost(8, 0.0, 0.05).is_err());
        assert!(quantum_cost(8, 0.1, 1.0).is_err());
    }

    #[test]
    fn closed_forms_match_bignum() {
        for n in 1..=40 {
            assert_eq!(quantum_cost_scale(n).unwrap(), bignum_scale(n));
            let mut tc = BigUint::one();
            for _ in 0..n {
                tc *= 2u32;
            }
            tc *= n;
            assert_eq!(BigUint::from(classical_cost(n).unwrap()), tc);
        }
    }

    #[test]
    fn ratio_strictly_increasing() {
        let t = resource_table(&TableParams::default()).unwrap();
        for w in t.rows.windows(2) {
            assert!(w[1].ratio / w[0].ratio > 1.0);
            assert!(w[1].mem_classical_bits > w[0].mem_classical_bits);
            assert!(
                w[1].mem_classical_bits - w[0].mem_classical_bits
                    > (w[1].qubits - w[0].qubits) as u128
            );
        }
        for r in &t.rows {
            assert_eq!(r.qubits, 3 * r.n as u64);
            assert!(r.t_classical > 0 && r.t_quantum > 0.0 && r.ratio > 0.0);
        }
    }

    #[test]
    fn frontiers() {
        let t = resource_table(&TableParams::default()).unwrap();
        assert_eq!(t.memory_frontier, Some(30));
        assert_eq!(t.qubit_frontier, Some(34));
        let r8 = &t.rows[7];
        assert_eq!((r8.n, r8.qubits), (8, 24));
        assert_eq!(1u32 << r8.n, 256);
        let r30 = &t.rows[29];
        assert_eq!(r30.qubits, 90);
        assert_eq!(r30.frontier_flags, vec!["ram-frontier", "ram-over"]);
        assert!(t.rows[33].frontier_flags.contains(&"qubit-frontier"));
    }

    #[test]
    fn csv_layout() {
        let t = resource_table(&TableParams {
            n_min: 8,
            n_max: 8,
            ..TableParams::default()
        })
        .unwrap();
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "8");
        assert_eq!(row[1], "2048");
        assert_eq!(row[5], "24");
        assert!(lines.all(|l| l.starts_with('#')));
    }

    #[test]
    fn empty_range_rejected() {
        let p = TableParams {
            n_min: 9,
            n_max: 8,
            ..TableParams::default()
        };
        assert!(resource_table(&p).is_err());
    }
}
