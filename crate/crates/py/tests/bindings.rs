use std::ffi::CString;
use std::sync::Once;

use pyo3::prelude::*;
use pyo3::types::PyDict;

use bentsearch_py::bentsearch_module;

static INIT: Once = Once::new();

/// Runs `code` with the module imported as `bs`; returns the `out` local.
fn run<T>(code: &str, f: impl FnOnce(&Bound<'_, PyAny>) -> T) -> T {
    INIT.call_once(|| {
        pyo3::append_to_inittab!(bentsearch_module);
        Python::initialize();
    });
    Python::attach(|py| {
        let locals = PyDict::new(py);
        let src = CString::new(format!("import bentsearch as bs\n{code}")).unwrap();
        py.run(&src, None, Some(&locals))
            .unwrap_or_else(|e| panic!("python error: {e}"));
        let out = locals.get_item("out").unwrap().expect("`out` not set");
        f(&out)
    })
}

#[test]
fn inner_product_is_bent_at_the_floor() {
    let (norm, bent): (f64, bool) = run(
        "f = bs.TruthTable.inner_product(6)\nout = (bs.gowers_u2(f).norm, f.is_bent())",
        |o| o.extract().unwrap(),
    );
    assert!((norm - 0.5f64.powf(1.5)).abs() < 1e-12);
    assert!(bent);
}

#[test]
fn exact_routes_agree() {
    let (a, b, c): (f64, f64, f64) = run(
        "f = bs.TruthTable.random(6, seed=11)\n\
         out = (bs.gowers_u2(f).u4, bs.gowers_u2_bruteforce(f).u4, \
         bs.evaluate(f, 'quantum-exact').value)",
        |o| o.extract().unwrap(),
    );
    assert_eq!(a, b);
    assert!((a - c).abs() < 1e-12);
}

#[test]
fn text_form_round_trips() {
    let same: bool = run(
        "f = bs.TruthTable.random(5, seed=3)\nout = bs.TruthTable.parse(str(f)) == f",
        |o| o.extract().unwrap(),
    );
    assert!(same);
}

#[test]
fn shot_estimate_reports_method_and_shots() {
    let (method, shots): (String, u64) = run(
        "e = bs.evaluate(bs.TruthTable.zero(4), 'quantum-shots-hadamard', shots=500, seed=1)\n\
         out = (e.method, e.shots)",
        |o| o.extract().unwrap(),
    );
    assert_eq!(method, "shots-hadamard-test");
    assert_eq!(shots, 500);
}

#[test]
fn invalid_input_raises_value_error() {
    let msg: String = run(
        "try:\n    bs.TruthTable(2, [0, 1, 0])\n    out = 'no error'\n\
         except ValueError as e:\n    out = 'ValueError'",
        |o| o.extract().unwrap(),
    );
    assert_eq!(msg, "ValueError");
}

#[test]
fn ga_budget_and_gate_count_match_the_core() {
    let (norm, budget, qubits): (f64, u128, u64) = run(
        "r = bs.run_ga(n=2, population=10, generations=20, seed=5)\n\
         out = (r.best_norm, bs.shot_budget(3, 0.05, 0.01), \
         bs.gate_count(8)[0])",
        |o| o.extract().unwrap(),
    );
    assert!((norm - 0.5f64.sqrt()).abs() < 1e-12);
    assert_eq!(
        budget,
        bentsearch::quantum::shot_budget(3, 0.05, 0.01)
            .unwrap()
            .shots
    );
    assert_eq!(qubits, 24);
}

#[test]
fn resource_table_has_header_and_rows() {
    let lines: usize = run(
        "out = sum(1 for l in bs.resource_table(1, 10).splitlines() if l and l[0].isdigit())",
        |o| o.extract().unwrap(),
    );
    assert_eq!(lines, 10);
}
