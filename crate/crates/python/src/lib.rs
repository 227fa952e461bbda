//! Python bindings. Truth values and rationals cross the boundary as
//! strings (`"1/2"`, `"1:0"`, `"top"`); reports come back as dicts.

use blchain::mcnaughton::{literal_to_pwl, pwl_zero_set};
use blchain::principles::{self, Principle};
use blchain::rational::{fmt_rational, parse_rational, Rational};
use blchain::semantics::{self, Valuation};
use blchain::{Error, Formula as CoreFormula};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "json")?.call_method1("loads", (v.to_string(),))
}

/// A BL-chain given by a descriptor such as `"MV[2] (+) MV[1]"` or `"PQ"`.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: blchain::Algebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(descriptor: &str) -> PyResult<Self> {
        Ok(PyAlgebra { inner: descriptor.parse().map_err(to_py)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Algebra('{}')", self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    #[getter]
    fn cardinality(&self) -> Option<usize> {
        self.inner.cardinality()
    }

    fn elements(&self) -> PyResult<Vec<String>> {
        let els = self.inner.elements().map_err(to_py)?;
        Ok(els.iter().map(|v| self.inner.format_value(v)).collect())
    }

    fn tnorm(&self, a: &str, b: &str) -> PyResult<String> {
        let (x, y) = (self.inner.parse_value(a).map_err(to_py)?, self.inner.parse_value(b).map_err(to_py)?);
        Ok(self.inner.format_value(&self.inner.tnorm(&x, &y).map_err(to_py)?))
    }

    fn residuum(&self, a: &str, b: &str) -> PyResult<String> {
        let (x, y) = (self.inner.parse_value(a).map_err(to_py)?, self.inner.parse_value(b).map_err(to_py)?);
        Ok(self.inner.format_value(&self.inner.residuum(&x, &y).map_err(to_py)?))
    }

    fn idempotents(&self) -> PyResult<Vec<String>> {
        let els = self.inner.idempotents().map_err(to_py)?;
        Ok(els.iter().map(|v| self.inner.format_value(v)).collect())
    }

    fn decompose(&self) -> PyResult<Vec<u32>> {
        self.inner.decompose().map_err(to_py)
    }
}

/// A formula in the core language (`bot`, variables, `->`, `&`).
#[pyclass(name = "Formula", frozen)]
struct PyFormula {
    inner: CoreFormula,
}

#[pymethods]
impl PyFormula {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyFormula { inner: blchain::parse_formula(text).map_err(to_py)? })
    }

    fn __str__(&self) -> String {
        self.inner.render()
    }

    fn __repr__(&self) -> String {
        format!("Formula('{}')", self.inner.render())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    #[getter]
    fn depth(&self) -> usize {
        self.inner.depth()
    }

    fn free_variables(&self) -> Vec<u32> {
        self.inner.free_variables().into_iter().collect()
    }
}

fn vars_for(n_vars: Option<u32>, formulas: &[&CoreFormula]) -> Vec<u32> {
    match n_vars {
        Some(n) => (1..=n).collect(),
        None => {
            let mut v: Vec<u32> = formulas.iter().flat_map(|f| f.free_variables()).collect();
            v.sort();
            v.dedup();
            if v.is_empty() {
                v.push(1);
            }
            v
        }
    }
}

fn judgment(alg: &PyAlgebra, j: semantics::Judgment) -> (bool, Option<String>) {
    (j.holds, j.witness.map(|w| w.format(&alg.inner)))
}

/// Value of `formula` at a valuation literal such as `"X1=1/2, X2=top"`.
#[pyfunction]
fn eval(alg: &PyAlgebra, formula: &PyFormula, valuation: &str) -> PyResult<String> {
    let v = Valuation::parse(&alg.inner, valuation).map_err(to_py)?;
    let value = semantics::eval(&alg.inner, &v, &formula.inner).map_err(to_py)?;
    Ok(alg.inner.format_value(&value))
}

/// `(holds, counterexample)` over a finite algebra.
#[pyfunction]
#[pyo3(signature = (alg, formula, n_vars=None))]
fn is_tautology(alg: &PyAlgebra, formula: &PyFormula, n_vars: Option<u32>) -> PyResult<(bool, Option<String>)> {
    let vars = vars_for(n_vars, &[&formula.inner]);
    Ok(judgment(alg, semantics::is_tautology(&alg.inner, &formula.inner, &vars).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (alg, f, g, n_vars=None))]
fn are_equivalent(alg: &PyAlgebra, f: &PyFormula, g: &PyFormula, n_vars: Option<u32>) -> PyResult<(bool, Option<String>)> {
    let vars = vars_for(n_vars, &[&f.inner, &g.inner]);
    Ok(judgment(alg, semantics::are_equivalent(&alg.inner, &f.inner, &g.inner, &vars).map_err(to_py)?))
}

fn rationals(xs: Vec<String>) -> PyResult<Vec<Rational>> {
    xs.iter().map(|s| parse_rational(s).map_err(to_py)).collect()
}

/// Formula positive at `p` and zero at `q` over the standard MV-algebra.
#[pyfunction]
fn separate_points<'py>(py: Python<'py>, p: Vec<String>, q: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
    let s = blchain::separate_points(&rationals(p)?, &rationals(q)?).map_err(to_py)?;
    let v = serde_json::json!({
        "formula": s.formula.render(),
        "literal": s.literal.to_string(),
        "negated": s.negated,
        "variable": s.var,
        "value_p": fmt_rational(&s.value_p),
        "value_q": fmt_rational(&s.value_q),
    });
    json_to_py(py, &v)
}

/// `(literal, zero_set)` for the threshold `h/k`.
#[pyfunction]
#[pyo3(signature = (h, k, step_bound=16))]
fn threshold_literal(h: i64, k: i64, step_bound: u32) -> PyResult<(String, String)> {
    let lit = blchain::threshold_literal(h, k, step_bound).map_err(to_py)?;
    let zs = pwl_zero_set(&literal_to_pwl(&lit)).map_err(to_py)?;
    Ok((lit.to_string(), zs.to_string()))
}

#[pyfunction]
#[pyo3(signature = (alg, n_vars=1, depth=3))]
fn check_p1<'py>(py: Python<'py>, alg: &PyAlgebra, n_vars: usize, depth: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = principles::check_p1(&alg.inner, n_vars, depth).map_err(to_py)?;
    principles::verify_report(&r).map_err(to_py)?;
    json_to_py(py, &r.to_json())
}

#[pyfunction]
#[pyo3(signature = (alg, n_vars=1, depth=3, variant="p2"))]
fn check_p2<'py>(
    py: Python<'py>,
    alg: &PyAlgebra,
    n_vars: usize,
    depth: usize,
    variant: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let v: Principle = variant.parse().map_err(to_py)?;
    let r = principles::check_p2(&alg.inner, n_vars, depth, v).map_err(to_py)?;
    principles::verify_report(&r).map_err(to_py)?;
    json_to_py(py, &r.to_json())
}

#[pyfunction]
fn classify_chain<'py>(py: Python<'py>, alg: &PyAlgebra) -> PyResult<Bound<'py, PyAny>> {
    let c = principles::classify_chain(&alg.inner).map_err(to_py)?;
    json_to_py(py, &c.to_json(&alg.inner))
}

#[pyfunction]
#[pyo3(signature = (max_size, n_vars=1, depth=3))]
fn census<'py>(py: Python<'py>, max_size: usize, n_vars: usize, depth: usize) -> PyResult<Bound<'py, PyAny>> {
    let rows = principles::census(max_size, n_vars, depth).map_err(to_py)?;
    json_to_py(py, &serde_json::Value::Array(rows.iter().map(|r| r.to_json()).collect()))
}

#[pyfunction]
fn enumerate_finite_chains(n: usize) -> PyResult<Vec<PyAlgebra>> {
    let algs = blchain::enumerate_finite_chains(n).map_err(to_py)?;
    Ok(algs.into_iter().map(|inner| PyAlgebra { inner }).collect())
}

#[pymodule]
fn blchain_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyFormula>()?;
    m.add_function(wrap_pyfunction!(eval, m)?)?;
    m.add_function(wrap_pyfunction!(is_tautology, m)?)?;
    m.add_function(wrap_pyfunction!(are_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(separate_points, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_literal, m)?)?;
    m.add_function(wrap_pyfunction!(check_p1, m)?)?;
    m.add_function(wrap_pyfunction!(check_p2, m)?)?;
    m.add_function(wrap_pyfunction!(classify_chain, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_finite_chains, m)?)?;
    Ok(())
}
