//! Python bindings. Posets are passed as `(n, covers)` with 1-based cover
//! pairs; structured results come back as plain dicts and lists.

use polytopes::geometry::{self, PolytopeKind};
use polytopes::partitions;
use polytopes::reproduce;
use polytopes::toric::{self, MonomialOrderSpec, ToricKind};
use polytopes::{Error, Poset};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;
use serde_json::json;

fn err(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn poset(n: usize, covers: Vec<(usize, usize)>) -> PyResult<Poset> {
    Poset::new(n, &covers).map_err(err)
}

fn parse_kind(name: &str) -> PyResult<PolytopeKind> {
    name.parse().map_err(err)
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Lattice points of the `m`-th dilate.
#[pyfunction]
fn count(n: usize, covers: Vec<(usize, usize)>, kind: &str, m: u32) -> PyResult<u64> {
    Ok(geometry::count_dilation(&poset(n, covers)?, parse_kind(kind)?, m))
}

/// Vertices as integer lists.
#[pyfunction]
fn points(n: usize, covers: Vec<(usize, usize)>, kind: &str) -> PyResult<Vec<Vec<i64>>> {
    let p = poset(n, covers)?;
    Ok(geometry::lattice_points(&p, parse_kind(kind)?).iter().map(|x| x.as_i64()).collect())
}

/// Facets as `(normal, rhs)` meaning `<normal, x> <= rhs`.
#[pyfunction]
fn facets(n: usize, covers: Vec<(usize, usize)>, kind: &str) -> PyResult<Vec<(Vec<i64>, i64)>> {
    let p = poset(n, covers)?;
    Ok(geometry::facets(&p, parse_kind(kind)?).into_iter().map(|h| (h.normal, h.rhs)).collect())
}

/// Ehrhart coefficients, constant term first, as exact strings like "7/2".
#[pyfunction]
fn ehrhart(n: usize, covers: Vec<(usize, usize)>, kind: &str) -> PyResult<Vec<String>> {
    let p = poset(n, covers)?;
    Ok(geometry::ehrhart(&p, parse_kind(kind)?).map_err(err)?.coefficient_strings())
}

#[pyfunction]
fn facet_counts(py: Python<'_>, n: usize, covers: Vec<(usize, usize)>) -> PyResult<Py<PyAny>> {
    to_py(py, &geometry::facet_count_formulas(&poset(n, covers)?))
}

#[pyfunction]
fn max_facet_bounds(py: Python<'_>, n: usize) -> PyResult<Py<PyAny>> {
    to_py(py, &geometry::max_facet_bounds(n).map_err(err)?)
}

/// Left enriched partition counts for values `0..=m`, after relabeling
/// along a linear extension if needed.
#[pyfunction]
fn left_enriched_counts(n: usize, covers: Vec<(usize, usize)>, m: u32) -> PyResult<Vec<u64>> {
    let (p, _) = poset(n, covers)?.natural_relabeling();
    (0..=m).map(|k| partitions::count_left_enriched(&p, k).map_err(err)).collect()
}

/// Buchberger check and initial-ideal flags for one toric family.
#[pyfunction]
fn groebner(py: Python<'_>, n: usize, covers: Vec<(usize, usize)>, kind: &str) -> PyResult<Py<PyAny>> {
    let p = poset(n, covers)?;
    let k: ToricKind = kind.parse().map_err(err)?;
    let family = toric::generators(&p, k);
    let order = MonomialOrderSpec::for_kind(&p, &family.vars).map_err(err)?;
    let report = toric::buchberger_verify(&family.binomials, &order);
    let initial = toric::initial_ideal(&family, &order);
    let gens: Vec<String> = family.binomials.iter().map(|b| family.binomial_string(b)).collect();
    to_py(
        py,
        &json!({
            "generators": gens,
            "buchberger": report,
            "passed": report.passed(),
            "initial_ideal": initial,
        }),
    )
}

/// Runs the verification suite, or the listed criteria only.
#[pyfunction]
#[pyo3(signature = (criteria = None))]
fn reproduce_paper(py: Python<'_>, criteria: Option<Vec<u32>>) -> PyResult<Py<PyAny>> {
    let ids = criteria.unwrap_or_else(reproduce::criterion_ids);
    let results = ids
        .into_iter()
        .map(reproduce::run_criterion)
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    to_py(py, &results)
}

#[pymodule]
#[pyo3(name = "poset_polytopes")]
fn python_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(points, m)?)?;
    m.add_function(wrap_pyfunction!(facets, m)?)?;
    m.add_function(wrap_pyfunction!(ehrhart, m)?)?;
    m.add_function(wrap_pyfunction!(facet_counts, m)?)?;
    m.add_function(wrap_pyfunction!(max_facet_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(left_enriched_counts, m)?)?;
    m.add_function(wrap_pyfunction!(groebner, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_paper, m)?)?;
    Ok(())
}
