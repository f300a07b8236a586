//! Python bindings. Vertices cross the boundary as names; sets come back as
//! lists in vertex order.

use dagscope::{AdjustmentStream, Criterion, DiagramDocument, Error, MixedGraph, StreamStatus, VertexSet};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(dagscope, DagscopeError, PyValueError, "Base class for analysis errors.");
create_exception!(dagscope, ParseError, DagscopeError, "Diagram text does not parse.");
create_exception!(
    dagscope,
    NotXLoopFreeError,
    DagscopeError,
    "The exposure set has a directed loop through other vertices."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(p) => ParseError::new_err(p.to_string()),
        Error::NotXLoopFree(_) => NotXLoopFreeError::new_err(e.to_string()),
        _ => DagscopeError::new_err(e.to_string()),
    }
}

fn names(g: &MixedGraph, set: &VertexSet) -> Vec<String> {
    g.names_of(set).into_iter().map(String::from).collect()
}

fn criterion(name: &str) -> PyResult<Criterion> {
    match name {
        "adjustment" => Ok(Criterion::Adjustment),
        "backdoor" => Ok(Criterion::Backdoor),
        "moral" => Ok(Criterion::Moral),
        other => Err(PyValueError::new_err(format!(
            "unknown criterion `{other}`; expected adjustment, backdoor or moral"
        ))),
    }
}

/// A causal diagram with exposure, outcome, adjusted and latent roles.
#[pyclass(module = "dagscope", frozen)]
struct Diagram {
    doc: DiagramDocument,
}

impl Diagram {
    fn set(&self, names: Option<Vec<String>>, default: &VertexSet) -> PyResult<VertexSet> {
        match names {
            None => Ok(default.clone()),
            Some(names) => self.doc.graph.vertex_set(&names).map_err(to_py),
        }
    }

    fn query(&self) -> PyResult<(&VertexSet, &VertexSet)> {
        self.doc.roles.require_query().map_err(to_py)?;
        Ok((&self.doc.roles.exposure, &self.doc.roles.outcome))
    }
}

#[pymethods]
impl Diagram {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let doc = DiagramDocument::parse(text).map_err(|e| to_py(e.into()))?;
        Ok(Diagram { doc })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.doc.graph.names().to_vec()
    }

    /// Directed edges as `(u, v)` pairs meaning `u -> v`.
    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        let g = &self.doc.graph;
        g.directed_edges()
            .iter()
            .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect()
    }

    #[getter]
    fn exposure(&self) -> Vec<String> {
        names(&self.doc.graph, &self.doc.roles.exposure)
    }

    #[getter]
    fn outcome(&self) -> Vec<String> {
        names(&self.doc.graph, &self.doc.roles.outcome)
    }

    #[getter]
    fn adjusted(&self) -> Vec<String> {
        names(&self.doc.graph, &self.doc.roles.adjusted)
    }

    #[getter]
    fn latent(&self) -> Vec<String> {
        names(&self.doc.graph, &self.doc.roles.latent)
    }

    fn serialize(&self) -> String {
        self.doc.serialize()
    }

    fn is_x_loop_free(&self) -> PyResult<bool> {
        self.doc.graph.is_x_loop_free(&self.doc.roles.exposure).map_err(to_py)
    }

    /// Are exposure and outcome d-separated given `given`?
    #[pyo3(signature = (given = Vec::new()))]
    fn d_separated(&self, given: Vec<String>) -> PyResult<bool> {
        let (x, y) = self.query()?;
        let z = self.set(Some(given), &VertexSet::new())?;
        dagscope::d_separated(&self.doc.graph, x, y, &z).map_err(to_py)
    }

    /// One open path from exposure to outcome given `given`, as a list of
    /// names, or `None`.
    #[pyo3(signature = (given = Vec::new()))]
    fn d_connecting_path(&self, given: Vec<String>) -> PyResult<Option<Vec<String>>> {
        let (x, y) = self.query()?;
        let z = self.set(Some(given), &VertexSet::new())?;
        let g = &self.doc.graph;
        let path = dagscope::d_connecting_path(g, x, y, &z).map_err(to_py)?;
        Ok(path.map(|p| p.vertices().iter().map(|&v| g.name(v).to_string()).collect()))
    }

    /// Verdicts of all criteria for `adjusted` (default: the diagram's own
    /// adjusted set), as a dict.
    #[pyo3(signature = (adjusted = None))]
    fn check<'py>(&self, py: Python<'py>, adjusted: Option<Vec<String>>) -> PyResult<Bound<'py, PyDict>> {
        let (x, y) = self.query()?;
        let z = self.set(adjusted, &self.doc.roles.adjusted)?;
        let g = &self.doc.graph;
        let r = dagscope::check(g, x, y, &z).map_err(to_py)?;
        let out = PyDict::new(py);
        out.set_item("adjustment_criterion", r.adjustment_criterion)?;
        out.set_item("backdoor_criterion", r.backdoor_criterion)?;
        out.set_item("moral_criterion", r.moral_criterion)?;
        out.set_item("x_loop_free", r.x_loop_free)?;
        out.set_item("forbidden", names(g, &r.forbidden))?;
        out.set_item("witness", r.witness.map(|p| p.display(g).to_string()))?;
        Ok(out)
    }

    fn forbidden(&self) -> PyResult<Vec<String>> {
        let (x, y) = self.query()?;
        let f = dagscope::forbidden_vertices(&self.doc.graph, x, y).map_err(to_py)?;
        Ok(names(&self.doc.graph, &f))
    }

    /// Is `adjusted` a minimal set satisfying `criterion` (`"adjustment"`,
    /// `"backdoor"` or `"moral"`)?
    #[pyo3(signature = (adjusted, criterion = "adjustment"))]
    fn is_minimal(&self, adjusted: Vec<String>, criterion: &str) -> PyResult<bool> {
        let (x, y) = self.query()?;
        let z = self.set(Some(adjusted), &VertexSet::new())?;
        dagscope::is_minimal(&self.doc.graph, x, y, &z, self::criterion(criterion)?).map_err(to_py)
    }

    /// Directed edges on biasing paths that are open given `adjusted`.
    #[pyo3(signature = (adjusted = None))]
    fn biasing_edges(&self, adjusted: Option<Vec<String>>) -> PyResult<Vec<(String, String)>> {
        let (x, y) = self.query()?;
        let z = self.set(adjusted, &self.doc.roles.adjusted)?;
        let g = &self.doc.graph;
        let report = dagscope::biasing_edges(g, x, y, &z).map_err(to_py)?;
        Ok(report
            .edges
            .iter()
            .map(|&(u, v)| (g.name(u).to_string(), g.name(v).to_string()))
            .collect())
    }

    /// Lazily lists the minimal adjustment sets avoiding `latent` (default:
    /// the diagram's latent vertices).
    #[pyo3(signature = (latent = None))]
    fn minimal_adjustments(&self, latent: Option<Vec<String>>) -> PyResult<Adjustments> {
        let (x, y) = self.query()?;
        let l = self.set(latent, &self.doc.roles.latent)?;
        let stream = dagscope::list_minimal_adjustments(&self.doc.graph, x, y, &l).map_err(to_py)?;
        Ok(Adjustments {
            graph: self.doc.graph.clone(),
            stream,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Diagram({} vertices, {} edges)",
            self.doc.graph.vertex_count(),
            self.doc.graph.edge_count()
        )
    }
}

/// Iterator over minimal adjustment sets, each a list of names.
#[pyclass(module = "dagscope")]
struct Adjustments {
    graph: MixedGraph,
    stream: AdjustmentStream,
}

#[pymethods]
impl Adjustments {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(&mut self) -> Option<Vec<String>> {
        self.stream.next().map(|z| names(&self.graph, &z))
    }

    /// Up to `k` further sets; fewer means the listing is complete.
    fn next_batch(&mut self, k: usize) -> Vec<Vec<String>> {
        self.stream
            .next_batch(k)
            .iter()
            .map(|z| names(&self.graph, z))
            .collect()
    }

    /// True when some biasing path cannot be blocked at all.
    #[getter]
    fn no_adjustment_exists(&self) -> bool {
        self.stream.status() == StreamStatus::NoAdjustmentExists
    }

    #[getter]
    fn emitted(&self) -> usize {
        self.stream.emitted()
    }
}

#[pymodule]
#[pyo3(name = "dagscope")]
fn dagscope_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Diagram>()?;
    m.add_class::<Adjustments>()?;
    m.add("DagscopeError", py.get_type::<DagscopeError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("NotXLoopFreeError", py.get_type::<NotXLoopFreeError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
