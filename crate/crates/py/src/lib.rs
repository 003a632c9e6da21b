//! Python bindings: the main types (digraphs, signed graphs, arrangements,
//! polynomials) as classes, plus module functions for the deformation
//! construction, exact characteristic polynomials, per-digraph analysis,
//! and the exhaustive verification harnesses (returned as plain dicts).
//!
//! Vertex orderings cross the boundary as plain lists: the vertex labels
//! by increasing position.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use braid_deform::digraph::VertexOrdering;
use braid_deform::{arrangement, charpoly, digraph, signed_graph, verify};

fn to_py_err(e: braid_deform::Error) -> PyErr {
    use braid_deform::Error::*;
    match e {
        InvalidInput(_) | Parse(_) | Budget(_) => PyValueError::new_err(e.to_string()),
        BadReduction(_) | Internal(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn ordering_from_sequence(seq: &[usize]) -> PyResult<VertexOrdering> {
    VertexOrdering::from_sequence(seq).map_err(to_py_err)
}

/// Recursive JSON → Python conversion for the summary/report dicts.
fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match value {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64()
                    .expect("JSON number is i64, u64, or f64")
                    .into_pyobject(py)?
                    .into_any()
            }
        }
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize_to_py<'py, T: serde::Serialize>(
    py: Python<'py>,
    value: &T,
) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    json_to_py(py, &json)
}

/// A loop-free directed graph on labeled vertices 0..n-1.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Digraph")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDigraph {
    inner: digraph::Digraph,
}

#[pymethods]
impl PyDigraph {
    #[new]
    #[pyo3(signature = (n, edges = vec![]))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: digraph::Digraph::new(n, edges).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn empty(n: usize) -> Self {
        PyDigraph {
            inner: digraph::Digraph::empty(n),
        }
    }

    #[staticmethod]
    fn complete_bidirected(n: usize) -> Self {
        PyDigraph {
            inner: digraph::Digraph::complete_bidirected(n),
        }
    }

    /// Parse the `n <count>` / `i j` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: digraph::Digraph::from_text_format(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i < self.inner.n() && j < self.inner.n() && self.inner.has_edge(i, j)
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: self.inner.relabel(&perm).map_err(to_py_err)?,
        })
    }

    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<Self> {
        Ok(PyDigraph {
            inner: self.inner.induced_subgraph(&vertices).map_err(to_py_err)?,
        })
    }

    /// Check (A1)/(A2) under the numbering given as a vertex sequence.
    fn satisfies_a1_a2_under(&self, sequence: Vec<usize>) -> PyResult<bool> {
        if sequence.len() != self.inner.n() {
            return Err(PyValueError::new_err("ordering length must equal n"));
        }
        let ord = ordering_from_sequence(&sequence)?;
        Ok(self.inner.satisfies_a1_a2_under(&ord))
    }

    /// The lexicographically smallest satisfying vertex sequence, or None.
    fn find_a1_a2_ordering(&self) -> Option<Vec<usize>> {
        self.inner.find_a1_a2_ordering().map(|o| o.sequence())
    }

    /// A forbidden induced triple as `(kind, (i, j, k))`, or None.
    fn find_forbidden_triple(&self) -> Option<(String, (usize, usize, usize))> {
        self.inner
            .find_forbidden_triple()
            .map(|p| (p.kind.to_string(), p.witness))
    }

    fn sign_map(&self) -> PySignedGraph {
        PySignedGraph {
            inner: signed_graph::sign_map(&self.inner),
        }
    }

    fn to_text(&self) -> String {
        self.inner.to_text_format()
    }

    fn __repr__(&self) -> String {
        format!("Digraph({})", self.inner)
    }
}

/// A signed graph: disjoint positive and negative unordered edge sets.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "SignedGraph")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PySignedGraph {
    inner: signed_graph::SignedGraph,
}

#[pymethods]
impl PySignedGraph {
    #[new]
    #[pyo3(signature = (n, plus = vec![], minus = vec![]))]
    fn new(n: usize, plus: Vec<(usize, usize)>, minus: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PySignedGraph {
            inner: signed_graph::SignedGraph::new(n, &plus, &minus).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn plus_edges(&self) -> Vec<(usize, usize)> {
        self.inner.plus_edges()
    }

    fn minus_edges(&self) -> Vec<(usize, usize)> {
        self.inner.minus_edges()
    }

    fn neutral_pairs(&self) -> Vec<(usize, usize)> {
        self.inner.neutral_pairs()
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        Ok(PySignedGraph {
            inner: self.inner.relabel(&perm).map_err(to_py_err)?,
        })
    }

    /// Check SE1/SE2 under the numbering given as a vertex sequence.
    fn is_signed_eliminable_under(&self, sequence: Vec<usize>) -> PyResult<bool> {
        if sequence.len() != self.inner.n() {
            return Err(PyValueError::new_err("ordering length must equal n"));
        }
        let ord = ordering_from_sequence(&sequence)?;
        Ok(self.inner.is_signed_eliminable_under(&ord))
    }

    fn find_elimination_ordering(&self) -> Option<Vec<usize>> {
        self.inner.find_elimination_ordering().map(|o| o.sequence())
    }

    /// All digraphs mapping onto this signed graph.
    fn enumerate_liftings(&self) -> Vec<PyDigraph> {
        self.inner
            .enumerate_liftings()
            .map(|g| PyDigraph { inner: g })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("SignedGraph({})", self.inner)
    }
}

/// A set of integer affine hyperplanes in canonical form.
#[pyclass(frozen, eq, skip_from_py_object, name = "Arrangement")]
#[derive(Clone, PartialEq, Eq)]
struct PyArrangement {
    inner: arrangement::Arrangement,
}

#[pymethods]
impl PyArrangement {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Hyperplanes as `(normal, offset)` pairs meaning `normal·x = offset`.
    fn hyperplanes(&self) -> Vec<(Vec<i64>, i64)> {
        self.inner
            .iter()
            .map(|h| (h.normal().to_vec(), h.offset()))
            .collect()
    }

    /// The designated infinite hyperplane, if this is a cone.
    fn marker(&self) -> Option<(Vec<i64>, i64)> {
        self.inner
            .marker()
            .map(|h| (h.normal().to_vec(), h.offset()))
    }

    fn cone(&self) -> Self {
        PyArrangement {
            inner: self.inner.cone(),
        }
    }

    fn localize_triple(&self, i: usize, j: usize, k: usize) -> PyResult<Self> {
        Ok(PyArrangement {
            inner: self.inner.localize_triple(i, j, k).map_err(to_py_err)?,
        })
    }

    fn drop_unused_coordinates(&self) -> (Self, usize) {
        let (a, dropped) = self.inner.drop_unused_coordinates();
        (PyArrangement { inner: a }, dropped)
    }

    /// The sorted one-hyperplane-per-line dump used for golden comparisons.
    fn dump(&self) -> String {
        self.inner.dump()
    }

    fn __repr__(&self) -> String {
        format!(
            "Arrangement(dim={}, hyperplanes={})",
            self.inner.dim(),
            self.inner.len()
        )
    }
}

/// A univariate polynomial with exact integer coefficients.
#[pyclass(frozen, eq, hash, skip_from_py_object, name = "Polynomial")]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPolynomial {
    inner: charpoly::IntPolynomial,
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(coeffs: Vec<i64>) -> Self {
        PyPolynomial {
            inner: charpoly::IntPolynomial::from_coeffs(coeffs),
        }
    }

    /// Coefficients in ascending degree.
    fn coeffs(&self) -> Vec<i64> {
        self.inner.coeffs().to_vec()
    }

    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn eval(&self, x: i64) -> i128 {
        self.inner.eval_i128(i128::from(x))
    }

    /// Multiply by `(t - r)`.
    fn mul_linear(&self, r: i64) -> Self {
        PyPolynomial {
            inner: self.inner.mul_linear(r),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

/// Iterator over all digraphs on n labeled vertices.
#[pyclass(name = "DigraphStream")]
struct PyDigraphStream {
    inner: digraph::DigraphEnumeration,
}

#[pymethods]
impl PyDigraphStream {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(&mut self) -> Option<PyDigraph> {
        self.inner.next().map(|g| PyDigraph { inner: g })
    }
}

/// The deformation of the braid arrangement for a digraph at level k.
#[pyfunction]
#[pyo3(signature = (g, k = 0))]
fn build_deformation(g: &PyDigraph, k: u32) -> PyResult<PyArrangement> {
    Ok(PyArrangement {
        inner: arrangement::build_deformation(&g.inner, k).map_err(to_py_err)?,
    })
}

/// The exact characteristic polynomial by finite-field counting.
#[pyfunction]
fn characteristic_polynomial(a: &PyArrangement) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial {
        inner: charpoly::characteristic_polynomial(&a.inner).map_err(to_py_err)?,
    })
}

/// Complement count over the q-element field, as `(q, count)`.
#[pyfunction]
fn count_complement_points(a: &PyArrangement, q: u64) -> PyResult<(u64, u64)> {
    let eval = charpoly::count_complement_points(&a.inner, q).map_err(to_py_err)?;
    Ok((eval.q, eval.count))
}

/// Sorted integer roots when the monic polynomial splits, else None.
#[pyfunction]
fn integer_root_split(p: &PyPolynomial) -> PyResult<Option<Vec<i64>>> {
    charpoly::integer_root_split(&p.inner).map_err(to_py_err)
}

/// Multiplicities `{(i, j): 2k + 1 + ε(i,j) + ε(j,i)}` on the pairs.
#[pyfunction]
#[pyo3(signature = (g, k = 0))]
fn ziegler_multiplicity(g: &PyDigraph, k: u32) -> std::collections::HashMap<(usize, usize), u64> {
    signed_graph::ziegler_multiplicity(&g.inner, k)
        .pairs()
        .into_iter()
        .collect()
}

#[pyfunction]
fn enumerate_digraphs(n: usize) -> PyResult<PyDigraphStream> {
    Ok(PyDigraphStream {
        inner: digraph::enumerate_digraphs(n).map_err(to_py_err)?,
    })
}

/// Full analysis of one digraph as a dict (see `analyze_text` for the
/// human-readable report).
#[pyfunction]
#[pyo3(signature = (g, k = 0))]
fn analyze<'py>(py: Python<'py>, g: &PyDigraph, k: u32) -> PyResult<Bound<'py, PyAny>> {
    let report = verify::analyze(&g.inner, k).map_err(to_py_err)?;
    serialize_to_py(py, &report)
}

#[pyfunction]
#[pyo3(signature = (g, k = 0))]
fn analyze_text(g: &PyDigraph, k: u32) -> PyResult<String> {
    Ok(verify::analyze(&g.inner, k).map_err(to_py_err)?.to_string())
}

/// Exhaustive equivalence harness over all digraphs on n vertices.
#[pyfunction]
fn verify_prop_char<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let summary = verify::verify_proposition_char(n, None).map_err(to_py_err)?;
    serialize_to_py(py, &summary)
}

/// Closed-form polynomial vectors for the three obstruction patterns.
#[pyfunction]
#[pyo3(signature = (k_max = 2))]
fn verify_lemma_vectors<'py>(py: Python<'py>, k_max: u32) -> PyResult<Bound<'py, PyAny>> {
    let summary = verify::verify_lemma_vectors(k_max).map_err(to_py_err)?;
    serialize_to_py(py, &summary)
}

/// Nonnegative-integer splitting of coned polynomials for satisfying digraphs.
#[pyfunction]
#[pyo3(signature = (n, k = 0))]
fn verify_factorization<'py>(py: Python<'py>, n: usize, k: u32) -> PyResult<Bound<'py, PyAny>> {
    let summary = verify::verify_factorization(n, k).map_err(to_py_err)?;
    serialize_to_py(py, &summary)
}

/// Localization identity harness.
#[pyfunction]
#[pyo3(signature = (n, k = 0, exhaustive = false))]
fn verify_localization<'py>(
    py: Python<'py>,
    n: usize,
    k: u32,
    exhaustive: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let summary = verify::verify_localization(n, k, exhaustive).map_err(to_py_err)?;
    serialize_to_py(py, &summary)
}

/// Ten-case lifting classification on three vertices.
#[pyfunction]
fn verify_ten_cases<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    let summary = verify::verify_ten_cases().map_err(to_py_err)?;
    serialize_to_py(py, &summary)
}

#[pymodule]
fn braid_deform_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDigraph>()?;
    m.add_class::<PySignedGraph>()?;
    m.add_class::<PyArrangement>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyDigraphStream>()?;
    m.add_function(wrap_pyfunction!(build_deformation, m)?)?;
    m.add_function(wrap_pyfunction!(characteristic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(count_complement_points, m)?)?;
    m.add_function(wrap_pyfunction!(integer_root_split, m)?)?;
    m.add_function(wrap_pyfunction!(ziegler_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_digraphs, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_text, m)?)?;
    m.add_function(wrap_pyfunction!(verify_prop_char, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(verify_factorization, m)?)?;
    m.add_function(wrap_pyfunction!(verify_localization, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ten_cases, m)?)?;
    Ok(())
}
