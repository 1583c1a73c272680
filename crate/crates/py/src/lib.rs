//! Python bindings for the graph toolkit.
//!
//! The module exposes the `Graph` and `Spectrum` classes plus a `search`
//! function. Everything numeric crosses the boundary exactly: eigenvalue
//! bounds and `ell` values travel as rational strings ("7", "-13/4") that
//! `fractions.Fraction` parses directly, and characteristic polynomial
//! coefficients arrive as Python ints of arbitrary size.

use std::str::FromStr;

use num_rational::BigRational;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use coedge_core::canon;
use coedge_core::codec;
use coedge_core::graph::{named_family, FamilyParams};
use coedge_core::pipeline;
use coedge_core::regularity;
use coedge_core::report;
use coedge_core::spectrum::{cmp_min_eigenvalue, Spectrum};
use coedge_core::Graph;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn check_vertex(g: &Graph, v: usize) -> PyResult<()> {
    if v >= g.n() {
        return Err(PyIndexError::new_err(format!(
            "vertex {v} out of range for a graph on {} vertices",
            g.n()
        )));
    }
    Ok(())
}

/// Converts a serde_json value into the corresponding Python object.
/// Report documents never contain floats, so only integer numbers appear.
fn json_to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                return Err(PyValueError::new_err("unexpected float in report"));
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(json_to_py(py, x)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(m) => {
            let dict = PyDict::new(py);
            for (k, x) in m {
                dict.set_item(k, json_to_py(py, x)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(v).map_err(value_error)?;
    json_to_py(py, &value)
}

/// An undirected simple graph with exact structural and spectral queries.
#[pyclass(frozen, name = "Graph", module = "coedge")]
#[derive(Debug)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Builds a named family member. Accepted names match the CLI:
    /// complete, cycle, complete-bipartite, cocktail-party, triangular,
    /// petersen, shrikhande, grid, ext-c5, ext-petersen, cone-two-cliques.
    #[staticmethod]
    #[pyo3(signature = (name, m=None, p=None, q=None, s=None, t=None))]
    fn family(
        name: &str,
        m: Option<usize>,
        p: Option<usize>,
        q: Option<usize>,
        s: Option<usize>,
        t: Option<usize>,
    ) -> PyResult<Self> {
        let params = FamilyParams { m, p, q, s, t };
        let inner = named_family(name, &params).map_err(value_error)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = codec::parse_graph6(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Parses the "n m" header plus one "u v" pair per line.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let inner = codec::parse_edge_list(text).map_err(value_error)?;
        Ok(Self { inner })
    }

    fn to_graph6(&self) -> String {
        codec::encode_graph6(&self.inner)
    }

    /// graph6 string of the canonical relabelling; equal across isomorphic
    /// graphs.
    fn canonical_graph6(&self) -> String {
        codec::encode_graph6(&canon::canonical_form(&self.inner).apply(&self.inner))
    }

    fn canonical_sha256(&self) -> String {
        report::canonical_hash(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        check_vertex(&self.inner, v)?;
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        check_vertex(&self.inner, u)?;
        check_vertex(&self.inner, v)?;
        Ok(self.inner.has_edge(u, v))
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        check_vertex(&self.inner, v)?;
        Ok(self.inner.neighbors_iter(v).collect())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// The common degree, or None when the graph is irregular or empty.
    fn regular_degree(&self) -> Option<usize> {
        self.inner.regular_degree()
    }

    /// (n, k, c) when every non-adjacent pair has exactly c >= 1 common
    /// neighbors, else None.
    fn co_edge_regular(&self) -> PyResult<Option<(usize, usize, usize)>> {
        let check = regularity::co_edge_regular_params(&self.inner).map_err(value_error)?;
        Ok(check.value().map(|p| (p.n, p.k, p.c)))
    }

    /// (n, k, c, ell) when additionally the non-adjacent degree sum is the
    /// constant ell, else None.
    fn strongly_co_edge_regular(&self) -> PyResult<Option<(usize, usize, usize, usize)>> {
        let check = regularity::strongly_co_edge_regular_ell(&self.inner).map_err(value_error)?;
        Ok(check.value().map(|p| (p.n, p.k, p.c, p.ell)))
    }

    fn is_walk_regular(&self) -> PyResult<bool> {
        Ok(regularity::is_walk_regular(&self.inner)
            .map_err(value_error)?
            .holds())
    }

    /// The spectral ell value 2*sum(theta_i) + prod(k - theta_i)/n - 2(k-2),
    /// as a rational string. Requires a connected regular graph with four
    /// distinct eigenvalues.
    fn theorem12_ell(&self) -> PyResult<String> {
        let ell = regularity::theorem12_ell(&self.inner).map_err(value_error)?;
        Ok(ell.to_string())
    }

    fn spectrum(&self) -> PyResult<PySpectrum> {
        let inner = Spectrum::of(&self.inner).map_err(value_error)?;
        Ok(PySpectrum { inner })
    }

    /// Compares the smallest eigenvalue against a rational threshold string;
    /// returns -1, 0, or 1.
    fn min_eigenvalue_cmp(&self, threshold: &str) -> PyResult<i32> {
        let r = BigRational::from_str(threshold)
            .map_err(|e| PyValueError::new_err(format!("bad rational {threshold:?}: {e}")))?;
        let ord = cmp_min_eigenvalue(&self.inner, &r).map_err(value_error)?;
        Ok(ord as i32)
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        canon::is_isomorphic(&self.inner, &other.inner)
    }

    /// (p, q) with p >= q >= 2 when the graph is a grid (Hamming) graph
    /// K_p x K_q, else None.
    fn recognize_grid(&self) -> Option<(usize, usize)> {
        canon::recognize_grid(&self.inner).map(|iso| (iso.p, iso.q))
    }

    /// Runs one classification theorem ("1.2", "1.3", "1.4", or "4.1") and
    /// returns the verdict as a dict with theorem / outcome / trail keys.
    fn classify<'py>(&self, py: Python<'py>, theorem: &str) -> PyResult<Bound<'py, PyAny>> {
        let verdict = match theorem {
            "1.2" => pipeline::classify_theorem_1_2(&self.inner),
            "1.3" => pipeline::classify_theorem_1_3(&self.inner),
            "1.4" => pipeline::classify_theorem_1_4(&self.inner),
            "4.1" => pipeline::verify_theorem_4_1(&self.inner),
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown theorem {other:?}; expected 1.2, 1.3, 1.4, or 4.1"
                )))
            }
        };
        serialize_to_py(py, &verdict)
    }

    /// Checks the two nonexistence windows and returns their verdicts as a
    /// list of dicts. An outcome of kind ConclusionViolated would mean a
    /// counterexample to a proved theorem.
    fn nonexistence_windows<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let verdicts = pipeline::check_nonexistence_windows(&self.inner);
        serialize_to_py(py, &verdicts)
    }

    /// Full structural report (regularity flags, parameters, witnesses) as a
    /// dict, mirroring the JSON schema of the command-line tool.
    fn regularity_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = regularity::analyze(&self.inner).map_err(value_error)?;
        serialize_to_py(py, &report)
    }

    fn __repr__(&self) -> String {
        match self.inner.label() {
            Some(label) => format!(
                "Graph(n={}, m={}, label={label:?})",
                self.inner.n(),
                self.inner.edge_count()
            ),
            None => format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count()),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }
}

/// Exact adjacency spectrum: characteristic polynomial coefficients and
/// isolated eigenvalue intervals with multiplicities.
#[pyclass(frozen, name = "Spectrum", module = "coedge")]
pub struct PySpectrum {
    inner: Spectrum,
}

#[pymethods]
impl PySpectrum {
    /// Coefficients of char(A, x) in ascending degree order, as Python ints.
    fn char_poly(&self) -> Vec<num_bigint::BigInt> {
        self.inner.char_poly().coeffs().to_vec()
    }

    #[getter]
    fn distinct_count(&self) -> usize {
        self.inner.distinct_count()
    }

    /// One dict per distinct eigenvalue, largest first: exact (rational
    /// string or None), lower, upper (rational interval endpoints), and
    /// multiplicity.
    fn eigenvalues<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyList>> {
        let list = PyList::empty(py);
        for entry in self.inner.entries() {
            let dict = PyDict::new(py);
            dict.set_item(
                "exact",
                entry.value.exact_value().map(|r| r.to_string()),
            )?;
            dict.set_item("lower", entry.value.lo().to_string())?;
            dict.set_item("upper", entry.value.hi().to_string())?;
            dict.set_item("multiplicity", entry.multiplicity)?;
            list.append(dict)?;
        }
        Ok(list)
    }

    /// The smallest eigenvalue as a (lower, upper) pair of rational strings;
    /// the endpoints coincide when the value is rational.
    fn theta_min(&self) -> (String, String) {
        let t = self.inner.theta_min();
        (t.lo().to_string(), t.hi().to_string())
    }

    fn __repr__(&self) -> String {
        format!(
            "Spectrum(distinct={}, theta_min={})",
            self.inner.distinct_count(),
            self.inner.theta_min()
        )
    }
}

/// Enumerates k-regular graphs on n vertices up to isomorphism, in a fixed
/// canonical order. With c set, keeps only co-edge-regular graphs with that
/// c. The cap guards against runaway instance sizes (default 12 vertices).
#[pyfunction]
#[pyo3(signature = (n, k, c=None, cap=None))]
fn search(n: usize, k: usize, c: Option<usize>, cap: Option<usize>) -> PyResult<Vec<PyGraph>> {
    let cap = cap.unwrap_or(pipeline::DEFAULT_SIZE_CAP);
    let graphs = match c {
        Some(c) => pipeline::search_co_edge_regular_with_cap(n, k, c, cap),
        None => pipeline::enumerate_regular_with_cap(n, k, cap),
    }
    .map_err(value_error)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

#[pymodule]
fn coedge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PySpectrum>()?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add("DEFAULT_SIZE_CAP", pipeline::DEFAULT_SIZE_CAP)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::{PyAnyMethods, PyDict, PyDictMethods, PyListMethods};

    fn with_py<R>(f: impl FnOnce(Python<'_>) -> R) -> R {
        Python::initialize();
        Python::attach(f)
    }

    fn dict_str(d: &Bound<'_, PyDict>, key: &str) -> String {
        d.get_item(key)
            .unwrap()
            .unwrap_or_else(|| panic!("missing key {key}"))
            .extract()
            .unwrap()
    }

    #[test]
    fn family_constructors_match_core_graphs() {
        let g = PyGraph::family("grid", None, Some(7), Some(4), None, None).unwrap();
        assert_eq!(g.vertex_count(), 28);
        assert_eq!(g.edge_count(), 126);
        assert_eq!(g.regular_degree(), Some(9));
        assert_eq!(g.strongly_co_edge_regular().unwrap(), Some((28, 9, 2, 7)));
        assert_eq!(g.theorem12_ell().unwrap(), "7");
        assert_eq!(g.recognize_grid(), Some((7, 4)));
        assert!(g.is_walk_regular().unwrap());
        assert_eq!(g.__len__(), 28);

        let h = PyGraph::from_graph6(&g.to_graph6()).unwrap();
        assert!(g.__eq__(&h));
        assert!(g.is_isomorphic(&h));
        assert_eq!(g.canonical_sha256(), h.canonical_sha256());

        let err = PyGraph::family("grid", None, Some(7), None, None, None).unwrap_err();
        with_py(|py| {
            assert!(err.value(py).to_string().contains("grid"));
        });
        assert!(PyGraph::family("nosuch", None, None, None, None, None).is_err());
    }

    #[test]
    fn classify_returns_plain_dicts() {
        with_py(|py| {
            let g = PyGraph::family("grid", None, Some(7), Some(4), None, None).unwrap();
            let verdict = g.classify(py, "1.2").unwrap();
            let verdict = verdict.cast::<PyDict>().unwrap();
            assert_eq!(dict_str(verdict, "theorem"), "1.2(i)");
            let outcome = verdict.get_item("outcome").unwrap().unwrap();
            let outcome = outcome.cast::<PyDict>().unwrap();
            assert_eq!(dict_str(outcome, "kind"), "Grid");
            let p: usize = outcome.get_item("p").unwrap().unwrap().extract().unwrap();
            assert_eq!(p, 7);
            let trail = verdict.get_item("trail").unwrap().unwrap();
            assert!(trail.len().unwrap() > 3);

            assert!(g.classify(py, "2.6").is_err());

            let pentagon_ext = PyGraph::family("ext-c5", None, None, None, Some(2), None).unwrap();
            let verdict = pentagon_ext.classify(py, "1.3").unwrap();
            let verdict = verdict.cast::<PyDict>().unwrap();
            let outcome = verdict.get_item("outcome").unwrap().unwrap();
            let outcome = outcome.cast::<PyDict>().unwrap();
            assert_eq!(dict_str(outcome, "kind"), "TwoCliqueExtC5");

            // Nonexistence windows report unmet hypotheses, never a violation.
            let windows = pentagon_ext.nonexistence_windows(py).unwrap();
            for verdict in windows.try_iter().unwrap() {
                let verdict = verdict.unwrap();
                let verdict = verdict.cast::<PyDict>().unwrap();
                let outcome = verdict.get_item("outcome").unwrap().unwrap();
                let outcome = outcome.cast::<PyDict>().unwrap();
                assert_eq!(dict_str(outcome, "kind"), "HypothesesNotMet");
            }
        });
    }

    #[test]
    fn spectrum_entries_are_exact_rational_strings() {
        with_py(|py| {
            let petersen = PyGraph::family("petersen", None, None, None, None, None).unwrap();
            let s = petersen.spectrum().unwrap();
            assert_eq!(s.distinct_count(), 3);
            let entries = s.eigenvalues(py).unwrap();
            let first = entries.get_item(0).unwrap();
            let first = first.cast::<PyDict>().unwrap();
            assert_eq!(dict_str(first, "exact"), "3");
            let last = entries.get_item(2).unwrap();
            let last = last.cast::<PyDict>().unwrap();
            assert_eq!(dict_str(last, "exact"), "-2");
            let mult: usize = last
                .get_item("multiplicity")
                .unwrap()
                .unwrap()
                .extract()
                .unwrap();
            assert_eq!(mult, 4);

            // x^2 - x - 1 roots are irrational, so the pentagon has no exact
            // entries below the valency.
            let pentagon = PyGraph::family("cycle", Some(5), None, None, None, None).unwrap();
            let s = pentagon.spectrum().unwrap();
            let entries = s.eigenvalues(py).unwrap();
            let mid = entries.get_item(1).unwrap();
            let mid = mid.cast::<PyDict>().unwrap();
            assert!(mid.get_item("exact").unwrap().unwrap().is_none());
            let (lo, hi) = pentagon.spectrum().unwrap().theta_min();
            assert_ne!(lo, hi);
        });
    }

    #[test]
    fn eigenvalue_comparison_and_errors() {
        let petersen_ext = PyGraph::family("ext-petersen", None, None, None, Some(2), None).unwrap();
        assert_eq!(petersen_ext.min_eigenvalue_cmp("-3").unwrap(), 0);
        assert_eq!(petersen_ext.min_eigenvalue_cmp("-2").unwrap(), -1);
        assert_eq!(petersen_ext.min_eigenvalue_cmp("-7/2").unwrap(), 1);
        with_py(|_| {
            assert!(petersen_ext.min_eigenvalue_cmp("x").is_err());
            assert!(petersen_ext.degree(99).is_err());
            assert!(petersen_ext.has_edge(0, 20).is_err());
        });
    }

    #[test]
    fn search_wraps_enumeration() {
        let cubic = search(6, 3, None, None).unwrap();
        let strings: Vec<String> = cubic.iter().map(|g| g.to_graph6()).collect();
        assert_eq!(strings, ["EFz_", "ELv_"]);
        let pentagons = search(5, 2, Some(1), None).unwrap();
        assert_eq!(pentagons.len(), 1);
        assert_eq!(pentagons[0].co_edge_regular().unwrap(), Some((5, 2, 1)));
        with_py(|_| {
            assert!(search(40, 3, None, None).is_err());
            assert!(search(5, 3, None, None).is_err());
        });
    }
}
