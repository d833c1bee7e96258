//! Python bindings: states, measures, bound evaluation, sweeps and figure
//! tables. Results come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use monogamy::bounds::{self, AlphaGrid, BoundReport, Foci, StateAnalysis, TheoremId};
use monogamy::qcore::{self, SubsystemSet, C64};
use monogamy::{figures, gallery, measures, runner};

fn err(e: monogamy::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn subset(qubits: Vec<usize>) -> PyResult<SubsystemSet> {
    SubsystemSet::new(qubits).map_err(err)
}

fn foci(f: (usize, usize, usize)) -> Foci {
    Foci::new(f.0, f.1, f.2)
}

/// A normalized pure state; qubit 0 is the most significant bit.
#[pyclass(name = "PureState", module = "monogamy_py", frozen)]
struct PyPureState {
    inner: qcore::PureState,
}

#[pymethods]
impl PyPureState {
    #[new]
    #[pyo3(signature = (amplitudes, normalize = false))]
    fn new(amplitudes: Vec<C64>, normalize: bool) -> PyResult<Self> {
        let inner = if normalize {
            qcore::PureState::from_unnormalized(amplitudes)
        } else {
            qcore::PureState::new(amplitudes)
        };
        Ok(Self { inner: inner.map_err(err)? })
    }

    #[staticmethod]
    fn basis(bits: Vec<u8>) -> PyResult<Self> {
        Ok(Self { inner: qcore::PureState::basis(&bits).map_err(err)? })
    }

    /// Seeded Haar-random state.
    #[staticmethod]
    fn haar(n: usize, seed: u64) -> PyResult<Self> {
        Ok(Self { inner: qcore::haar_random_pure(n, seed).map_err(err)? })
    }

    /// Gallery family member, e.g. `PureState.named("gsd3")`.
    #[staticmethod]
    #[pyo3(signature = (family, params = Vec::new(), n = None))]
    fn named(family: &str, params: Vec<f64>, n: Option<usize>) -> PyResult<Self> {
        let family: gallery::Family = family.parse().map_err(err)?;
        Ok(Self { inner: gallery::named(family, &params, n).map_err(err)? })
    }

    /// Parses a state description in the CLI's JSON format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let spec = gallery::StateSpec::from_json(text).map_err(err)?;
        Ok(Self { inner: spec.build().map_err(err)? })
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.inner.num_qubits()
    }

    fn amplitudes(&self) -> Vec<C64> {
        self.inner.amplitudes().to_vec()
    }

    fn tensor(&self, other: PyRef<'_, PyPureState>) -> PyResult<Self> {
        Ok(Self { inner: self.inner.tensor(&other.inner).map_err(err)? })
    }

    /// Reduced density matrix on `keep`, as nested lists.
    fn reduced(&self, keep: Vec<usize>) -> PyResult<Vec<Vec<C64>>> {
        let rho = self.inner.reduced(&subset(keep)?).map_err(err)?;
        let m = rho.matrix();
        Ok((0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect())
    }

    fn schmidt_coefficients(&self, part: Vec<usize>) -> PyResult<Vec<f64>> {
        self.inner.schmidt_coefficients(&subset(part)?).map_err(err)
    }

    fn schmidt_rank(&self, part: Vec<usize>) -> PyResult<usize> {
        qcore::schmidt_rank(&self.inner, &subset(part)?).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("PureState(num_qubits={})", self.inner.num_qubits())
    }
}

/// Concurrence across `part | rest`.
#[pyfunction]
fn concurrence(psi: PyRef<'_, PyPureState>, part: Vec<usize>) -> PyResult<f64> {
    Ok(measures::concurrence_pure(&psi.inner, &subset(part)?).map_err(err)?.value)
}

/// Negativity across `part | rest`.
#[pyfunction]
fn negativity(psi: PyRef<'_, PyPureState>, part: Vec<usize>) -> PyResult<f64> {
    Ok(measures::negativity_pure_schmidt(&psi.inner, &subset(part)?).map_err(err)?.value)
}

/// `(C, C_a)` of the two-qubit reduction on qubits `a`, `b`.
#[pyfunction]
fn pair_measures(psi: PyRef<'_, PyPureState>, a: usize, b: usize) -> PyResult<(f64, f64)> {
    measures::pair_measures(&psi.inner, a, b).map_err(err)
}

#[pyfunction]
fn h_weight(alpha: f64) -> PyResult<f64> {
    bounds::h_weight(alpha).map_err(err)
}

fn report_dict<'py>(py: Python<'py>, r: &BoundReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theorem", r.theorem.as_str())?;
    d.set_item("alpha", r.alpha)?;
    d.set_item("lhs", r.lhs)?;
    d.set_item("rhs", r.rhs)?;
    d.set_item("slack", r.slack)?;
    d.set_item("status", r.status.as_str())?;
    d.set_item("orderings", r.orderings_label())?;
    d.set_item("note", r.note.as_deref())?;
    Ok(d)
}

/// One inequality at one α with the optimizer's best grouping.
#[pyfunction]
#[pyo3(signature = (psi, theorem, alpha, foci = (0, 1, 2)))]
fn evaluate<'py>(
    py: Python<'py>,
    psi: PyRef<'_, PyPureState>,
    theorem: &str,
    alpha: f64,
    foci: (usize, usize, usize),
) -> PyResult<Bound<'py, PyDict>> {
    let t: TheoremId = theorem.parse().map_err(err)?;
    let an = StateAnalysis::new(&psi.inner).map_err(err)?;
    let r = an.evaluate(t, &self::foci(foci), alpha).map_err(err)?;
    report_dict(py, &r)
}

/// Every selected inequality over an α grid (`"start:stop:step"` or one value).
#[pyfunction]
#[pyo3(signature = (psi, theorems = "thm1", alpha = "0.05:2:0.05", foci = (0, 1, 2)))]
fn verify<'py>(
    py: Python<'py>,
    psi: PyRef<'_, PyPureState>,
    theorems: &str,
    alpha: &str,
    foci: (usize, usize, usize),
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let theorems = TheoremId::parse_list(theorems).map_err(err)?;
    let grid: AlphaGrid = alpha.parse().map_err(err)?;
    let rows = runner::verify(&psi.inner, &theorems, &grid, &self::foci(foci)).map_err(err)?;
    rows.iter().map(|r| report_dict(py, r)).collect()
}

/// Seeded random-state sweep; returns one summary dict per theorem.
#[pyfunction]
#[pyo3(signature = (qubits, samples, seed = 42, theorems = "thm1", alpha = "0.05:2:0.05", foci = (0, 1, 2)))]
fn sweep<'py>(
    py: Python<'py>,
    qubits: usize,
    samples: usize,
    seed: u64,
    theorems: &str,
    alpha: &str,
    foci: (usize, usize, usize),
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let config = runner::SweepConfig {
        qubits,
        samples,
        seed,
        theorems: TheoremId::parse_list(theorems).map_err(err)?,
        grid: alpha.parse().map_err(err)?,
        foci: self::foci(foci),
    };
    let summary = py.detach(|| runner::sweep(&config)).map_err(err)?;
    summary
        .rows
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("theorem", r.theorem.as_str())?;
            d.set_item("evaluated", r.evaluated)?;
            d.set_item("satisfied", r.satisfied)?;
            d.set_item("violations", r.violations)?;
            d.set_item("not_applicable", r.not_applicable)?;
            d.set_item("min_slack", r.min_slack)?;
            d.set_item("mean_slack", r.mean_slack)?;
            Ok(d)
        })
        .collect()
}

/// `(columns, rows)` of figure 1, 2 or 3.
#[pyfunction]
fn figure(id: u8) -> PyResult<(Vec<&'static str>, Vec<Vec<f64>>)> {
    let t = figures::figure(id).map_err(err)?;
    Ok((t.columns, t.rows))
}

/// `(name, description)` for each gallery family.
#[pyfunction]
fn families() -> Vec<(&'static str, &'static str)> {
    gallery::Family::ALL.iter().map(|f| (f.as_str(), f.description())).collect()
}

#[pymodule]
fn monogamy_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPureState>()?;
    m.add_function(wrap_pyfunction!(concurrence, m)?)?;
    m.add_function(wrap_pyfunction!(negativity, m)?)?;
    m.add_function(wrap_pyfunction!(pair_measures, m)?)?;
    m.add_function(wrap_pyfunction!(h_weight, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(figure, m)?)?;
    m.add_function(wrap_pyfunction!(families, m)?)?;
    Ok(())
}
