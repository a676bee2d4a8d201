//! Python bindings: run suites, print catalog elements, evaluate `₂φ₂`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use uqdyn::qhyper::{self, BigReal, Convention, Phi22Params};
use uqdyn::suites::{self, Format, SuiteConfig};

fn value_error(e: uqdyn::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Runs suites and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite = vec!["all".to_string()], max_dim = 4, pair_dim = 4, triple_dim = 3, trunc = 8, expand_order = 40))]
pub fn verify(suite: Vec<String>, max_dim: u32, pair_dim: u32, triple_dim: u32, trunc: u32, expand_order: u32) -> PyResult<String> {
    let config = SuiteConfig { suites: suite, max_dim, pair_dim, triple_dim, trunc, expand_order, format: Format::Json, out: None, timing: false };
    Ok(suites::run(&config, None).map_err(value_error)?.to_json())
}

/// Canonical text of a catalog element on the given legs.
#[pyfunction]
#[pyo3(signature = (element, dims, trunc = 8))]
pub fn eval_element(element: &str, dims: Vec<u32>, trunc: u32) -> PyResult<String> {
    uqdyn::elements::render(element, &dims, trunc).map_err(value_error)
}

/// Row-major canonical strings of a catalog element.
#[pyfunction]
#[pyo3(signature = (element, dims, trunc = 8))]
pub fn matrix(element: &str, dims: Vec<u32>, trunc: u32) -> PyResult<Vec<String>> {
    let op = uqdyn::elements::evaluate(element, &dims, trunc).map_err(value_error)?;
    Ok(op.entries().iter().map(|s| s.canonical_string()).collect())
}

#[pyfunction]
pub fn catalog() -> Vec<&'static str> {
    uqdyn::elements::CATALOG.to_vec()
}

#[pyfunction]
pub fn suite_names() -> Vec<&'static str> {
    suites::SUITES.to_vec()
}

/// `₂φ₂(a, b; c, d; q)(z)` from rationals `(num, den)`, as a decimal string.
#[pyfunction]
#[pyo3(signature = (a, b, c, d, q, z, plain = false))]
pub fn phi22(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64), q: (i64, i64), z: (i64, i64), plain: bool) -> PyResult<String> {
    let r = |(n, m): (i64, i64)| {
        if m == 0 {
            Err(PyValueError::new_err("zero denominator"))
        } else {
            Ok(BigReal::ratio(n, m))
        }
    };
    let params = Phi22Params { a: r(a)?, b: r(b)?, c: r(c)?, d: r(d)?, q: r(q)?, z: r(z)? };
    let conv = if plain { Convention::Plain } else { Convention::GasperRahman };
    Ok(qhyper::phi22(&params, qhyper::TAIL_DIGITS, conv).map_err(value_error)?.to_string())
}

#[pymodule]
fn uqdyn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(eval_element, m)?)?;
    m.add_function(wrap_pyfunction!(matrix, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    m.add_function(wrap_pyfunction!(phi22, m)?)?;
    Ok(())
}
