//! Python bindings for the `fasnu` solvers.

use std::time::Duration;

use fasnu_core as core;
use fasnu_core::harness::VerifyOptions;
use fasnu_core::tournament::{self, CanonicalCode, Predicate};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

type Arcs = Vec<(usize, usize)>;
type Cycles = Vec<Vec<usize>>;
type Degrees = (Option<usize>, Option<usize>, usize);

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Digraph", module = "fasnu", frozen)]
struct PyDigraph {
    inner: core::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, arcs = Vec::new()))]
    fn new(n: usize, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: core::Digraph::from_arcs(n, arcs).map_err(err)? })
    }

    /// Parses the `n m` header plus arc-per-line text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: core::textio::parse_graph(text).map_err(err)? })
    }

    fn to_text(&self) -> String {
        core::textio::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs()
    }

    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_arc(u, v)
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.out_neighbors(v).collect())
    }

    fn in_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.in_neighbors(v).collect())
    }

    fn is_tournament(&self) -> bool {
        self.inner.is_tournament()
    }

    fn is_oriented(&self) -> bool {
        self.inner.is_oriented()
    }

    fn is_acyclic(&self) -> bool {
        self.inner.is_acyclic()
    }

    fn is_eulerian(&self) -> bool {
        self.inner.is_eulerian()
    }

    fn is_strongly_connected(&self) -> bool {
        self.inner.is_strongly_connected()
    }

    fn min_out_degree(&self) -> usize {
        self.inner.min_out_degree()
    }

    fn backward_arcs(&self, ordering: Vec<usize>) -> PyResult<Vec<(usize, usize)>> {
        let ord = core::VertexOrdering::new(ordering).map_err(err)?;
        Ok(self.inner.backward_arcs(&ord).map_err(err)?.to_vec())
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Digraph(n={}, arcs={})", self.inner.n(), self.inner.arc_count())
    }
}

#[pyclass(name = "FasResult", module = "fasnu", frozen, get_all)]
struct PyFasResult {
    tau: usize,
    ordering: Vec<usize>,
    fas: Vec<(usize, usize)>,
}

#[pymethods]
impl PyFasResult {
    fn __repr__(&self) -> String {
        format!("FasResult(tau={})", self.tau)
    }
}

#[pyclass(name = "NuResult", module = "fasnu", frozen, get_all)]
struct PyNuResult {
    value: usize,
    optimal: bool,
    cycles: Vec<Vec<usize>>,
    nodes: u64,
    seconds: f64,
}

#[pymethods]
impl PyNuResult {
    fn __repr__(&self) -> String {
        format!("NuResult(value={}, optimal={})", self.value, self.optimal)
    }
}

#[pyfunction]
fn tau(g: &PyDigraph) -> PyResult<PyFasResult> {
    let r = core::tau_exact(&g.inner).map_err(err)?;
    Ok(PyFasResult { tau: r.tau, ordering: r.ordering.as_slice().to_vec(), fas: r.fas.to_vec() })
}

#[pyfunction]
#[pyo3(signature = (g, limit = 100))]
fn min_fas_sets(g: &PyDigraph, limit: usize) -> PyResult<Vec<Vec<(usize, usize)>>> {
    let sets = core::enumerate_min_fas(&g.inner, limit).map_err(err)?;
    Ok(sets.iter().map(|s| s.to_vec()).collect())
}

#[pyfunction]
#[pyo3(signature = (g, budget_nodes = None, budget_secs = None))]
fn nu(py: Python<'_>, g: &PyDigraph, budget_nodes: Option<u64>, budget_secs: Option<f64>) -> PyNuResult {
    let mut budget = core::Budget::from_env();
    if let Some(n) = budget_nodes {
        budget.max_nodes = n;
    }
    if let Some(s) = budget_secs {
        budget.max_time = Duration::from_secs_f64(s.max(0.0));
    }
    let d = g.inner.clone();
    let r = py.detach(move || core::nu_exact(&d, budget));
    PyNuResult {
        value: r.value,
        optimal: r.optimal,
        cycles: r.certificate.cycles,
        nodes: r.nodes_explored,
        seconds: r.elapsed.as_secs_f64(),
    }
}

#[pyfunction]
fn nu_bruteforce(g: &PyDigraph) -> PyResult<usize> {
    core::nu_bruteforce(&g.inner).map_err(err)
}

#[pyfunction]
fn is_valid_packing(g: &PyDigraph, cycles: Vec<Vec<usize>>) -> bool {
    core::packing::is_valid_packing(&g.inner, &core::CyclePacking::new(cycles))
}

/// Returns `(value, cycles, cut)`.
#[pyfunction]
fn cycles_through(g: &PyDigraph, v: usize) -> PyResult<(usize, Cycles, Arcs)> {
    let (k, p) = core::max_cycles_through(&g.inner, v).map_err(err)?;
    let cut = core::min_arc_cover_through(&g.inner, v).map_err(err)?;
    Ok((k, p.cycles, cut.to_vec()))
}

/// Returns `(value, triangles)`.
#[pyfunction]
fn tri_through(g: &PyDigraph, v: usize) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let (k, p) = core::max_triangles_through(&g.inner, v).map_err(err)?;
    Ok((k, p.cycles))
}

/// `(a, b, d)` when the through-vertex theorem applies at `v`; `None` stands for +∞.
#[pyfunction]
fn theorem21_applies(g: &PyDigraph, v: usize) -> PyResult<Option<Degrees>> {
    let p = core::theorem21_applies(&g.inner, v).map_err(err)?;
    Ok(p.map(|p| (p.a, p.b, p.d)))
}

#[pyfunction]
fn builtin(name: &str) -> PyResult<PyDigraph> {
    let b: core::instances::Builtin = name.parse().map_err(err)?;
    Ok(PyDigraph { inner: b.graph().map_err(err)? })
}

#[pyfunction]
fn random_tournament(n: usize, seed: u64) -> PyDigraph {
    PyDigraph { inner: core::instances::random_tournament(n, seed) }
}

#[pyfunction]
#[pyo3(signature = (n, p = 0.5, seed = 0))]
fn random_oriented(n: usize, p: f64, seed: u64) -> PyDigraph {
    PyDigraph { inner: core::instances::random_oriented(n, p, seed) }
}

#[pyfunction]
fn canonical_code(g: &PyDigraph) -> PyResult<String> {
    Ok(tournament::canonical_code(&g.inner).map_err(err)?.to_string())
}

#[pyfunction]
fn from_code(code: &str) -> PyResult<PyDigraph> {
    let c: CanonicalCode = code.parse().map_err(err)?;
    Ok(PyDigraph { inner: c.tournament() })
}

#[pyfunction]
fn enumerate_tournaments(n: usize) -> PyResult<Vec<String>> {
    Ok(tournament::enumerate_codes(n).map_err(err)?.iter().map(ToString::to_string).collect())
}

#[pyfunction]
fn search_counterexamples(n: usize, predicate: &str) -> PyResult<Vec<String>> {
    let p: Predicate = predicate.parse().map_err(err)?;
    Ok(tournament::search_counterexamples(n, p).map_err(err)?.iter().map(ToString::to_string).collect())
}

/// One `(claim_id, status, observed, expected, seconds)` tuple per claim.
#[pyfunction]
#[pyo3(signature = (skip = Vec::new()))]
fn verify_paper(py: Python<'_>, skip: Vec<String>) -> Vec<(String, String, String, String, f64)> {
    let opts = VerifyOptions { skip, ..VerifyOptions::default() };
    let results = py.detach(|| core::harness::verify_paper_with(&opts));
    results
        .into_iter()
        .map(|r| (r.claim_id, r.status.to_string(), r.observed, r.expected, r.elapsed.as_secs_f64()))
        .collect()
}

#[pymodule]
fn fasnu(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<PyFasResult>()?;
    m.add_class::<PyNuResult>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(min_fas_sets, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(nu_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_valid_packing, m)?)?;
    m.add_function(wrap_pyfunction!(cycles_through, m)?)?;
    m.add_function(wrap_pyfunction!(tri_through, m)?)?;
    m.add_function(wrap_pyfunction!(theorem21_applies, m)?)?;
    m.add_function(wrap_pyfunction!(builtin, m)?)?;
    m.add_function(wrap_pyfunction!(random_tournament, m)?)?;
    m.add_function(wrap_pyfunction!(random_oriented, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_code, m)?)?;
    m.add_function(wrap_pyfunction!(from_code, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tournaments, m)?)?;
    m.add_function(wrap_pyfunction!(search_counterexamples, m)?)?;
    m.add_function(wrap_pyfunction!(verify_paper, m)?)?;
    Ok(())
}
