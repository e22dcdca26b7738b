//! Python module `kbonacci`. Words are lists of ints, rationals are
//! `fractions.Fraction`.

use ::kbonacci as core;
use core::oracle;
use core::squares;
use core::{Digit, Rational, Strategy, VerificationReport, Word};
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

fn err(e: core::Error) -> PyErr {
    match e {
        core::Error::Overflow(_) | core::Error::Size { .. } => {
            PyOverflowError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, r: Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer(), r.denom()))
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let numer: i64 = obj.getattr("numerator")?.extract()?;
    let denom: i64 = obj.getattr("denominator")?.extract()?;
    Rational::new(numer, denom).map_err(err)
}

fn words(ws: Vec<Word>) -> Vec<Vec<Digit>> {
    ws.into_iter().map(Word::into_vec).collect()
}

#[pyfunction]
#[pyo3(signature = (k, n, strategy = "recursion"))]
fn finite_word(k: usize, n: usize, strategy: &str) -> PyResult<Vec<Digit>> {
    let strategy = match strategy {
        "recursion" => Strategy::Recursion,
        "morphism" => Strategy::Morphism,
        other => return Err(PyValueError::new_err(format!("unknown strategy {other:?}"))),
    };
    Ok(core::finite_word(k, n, strategy).map_err(err)?.into_vec())
}

#[pyfunction]
fn infinite_prefix(k: usize, length: usize) -> PyResult<Vec<Digit>> {
    Ok(core::infinite_prefix(k, length).map_err(err)?.into_vec())
}

#[pyfunction]
fn kbonacci_number(k: usize, n: usize) -> PyResult<u64> {
    core::kbonacci_number(k, n).map_err(err)
}

#[pyfunction]
fn word_length(k: usize, n: usize) -> PyResult<u64> {
    core::word_length(k, n).map_err(err)
}

#[pyfunction]
fn shift(word: Vec<Digit>, c: i64) -> PyResult<Vec<Digit>> {
    Ok(core::shift(&Word::new(word), c).map_err(err)?.into_vec())
}

#[pyfunction]
fn conjugate(word: Vec<Digit>, j: i64) -> PyResult<Vec<Digit>> {
    Ok(core::conjugate(&Word::new(word), j)
        .map_err(err)?
        .into_vec())
}

#[pyfunction]
fn fractional_power(word: Vec<Digit>, r: &Bound<'_, PyAny>) -> PyResult<Vec<Digit>> {
    Ok(core::fractional_power(&Word::new(word), rational(r)?)
        .map_err(err)?
        .into_vec())
}

#[pyfunction]
fn index_of<'py>(py: Python<'py>, u: Vec<Digit>, w: Vec<Digit>) -> PyResult<Bound<'py, PyAny>> {
    fraction(
        py,
        core::index_of(&Word::new(u), &Word::new(w)).map_err(err)?,
    )
}

#[pyfunction]
fn to_paper(word: Vec<Digit>) -> String {
    Word::new(word).to_paper()
}

#[pyfunction]
fn from_paper(s: &str) -> PyResult<Vec<Digit>> {
    Ok(Word::from_paper(s).map_err(err)?.into_vec())
}

#[pyfunction]
fn critical_exponent(py: Python<'_>, k: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, core::critical_exponent(k).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (k, i = 1))]
fn critical_factor(k: usize, i: usize) -> PyResult<Vec<Digit>> {
    Ok(core::critical_factor(k, i).map_err(err)?.into_vec())
}

#[pyfunction]
fn straddling_index(py: Python<'_>, k: usize, n: usize) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, core::straddling_index(k, n).map_err(err)?)
}

#[pyfunction]
fn straddling_square_roots(k: usize, n: usize) -> PyResult<Vec<Vec<Digit>>> {
    Ok(words(core::straddling_square_roots(k, n).map_err(err)?))
}

#[pyfunction]
fn distinct_straddling_square_roots(k: usize, n: usize) -> PyResult<Vec<Vec<Digit>>> {
    Ok(words(
        squares::distinct_straddling_square_roots(k, n).map_err(err)?,
    ))
}

#[pyfunction]
fn v_word(k: usize, n: usize) -> PyResult<Vec<Digit>> {
    Ok(core::v_word(k, n).map_err(err)?.into_vec())
}

#[pyfunction]
fn u_word(k: usize, n: usize) -> PyResult<Vec<Digit>> {
    Ok(core::u_word(k, n).map_err(err)?.into_vec())
}

#[pyfunction]
fn p_word(k: usize, n: usize) -> PyResult<Vec<Digit>> {
    Ok(core::p_word(k, n).map_err(err)?.into_vec())
}

/// The square root `ki + C^j(W_{n-2k+1})`.
#[pyclass(name = "SquareDescriptor", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PySquareDescriptor(squares::SquareDescriptor);

#[pymethods]
impl PySquareDescriptor {
    #[new]
    fn new(k: usize, n: usize, i: usize, j: usize) -> PyResult<Self> {
        squares::SquareDescriptor::new(k, n, i, j)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }

    #[getter]
    fn i(&self) -> usize {
        self.0.i
    }

    #[getter]
    fn j(&self) -> usize {
        self.0.j
    }

    #[getter]
    fn base_level(&self) -> usize {
        self.0.base_level()
    }

    fn root(&self) -> PyResult<Vec<Digit>> {
        Ok(core::expand_descriptor(&self.0).map_err(err)?.into_vec())
    }

    fn __repr__(&self) -> String {
        let d = self.0;
        format!(
            "SquareDescriptor(k={}, n={}, i={}, j={})",
            d.k, d.n, d.i, d.j
        )
    }
}

fn described(
    list: Vec<(squares::SquareDescriptor, Word)>,
) -> Vec<(PySquareDescriptor, Vec<Digit>)> {
    list.into_iter()
        .map(|(d, w)| (PySquareDescriptor(d), w.into_vec()))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (k, max_root_len, max_shift, host = None))]
fn enumerate_squares(
    k: usize,
    max_root_len: usize,
    max_shift: usize,
    host: Option<Vec<Digit>>,
) -> PyResult<Vec<(PySquareDescriptor, Vec<Digit>)>> {
    let host = host.map(Word::new);
    Ok(described(
        core::enumerate_squares(k, max_root_len, max_shift, host.as_ref()).map_err(err)?,
    ))
}

#[pyfunction]
fn squares_of_word(k: usize, n: usize) -> PyResult<Vec<(PySquareDescriptor, Vec<Digit>)>> {
    Ok(described(squares::squares_of_word(k, n).map_err(err)?))
}

#[pyfunction]
fn brute_square_roots(word: Vec<Digit>) -> Vec<Vec<Digit>> {
    words(oracle::brute_square_roots(&word).into_iter().collect())
}

#[pyfunction]
fn brute_index(py: Python<'_>, u: Vec<Digit>, w: Vec<Digit>) -> PyResult<Bound<'_, PyAny>> {
    fraction(
        py,
        oracle::brute_index(&Word::new(u), &Word::new(w)).map_err(err)?,
    )
}

#[pyfunction]
fn brute_max_index(py: Python<'_>, word: Vec<Digit>) -> PyResult<Bound<'_, PyAny>> {
    fraction(
        py,
        oracle::brute_max_index(&Word::new(word))
            .map_err(err)?
            .value,
    )
}

/// One verification outcome; `json()` gives the full report.
#[pyclass(name = "Report", frozen)]
struct PyReport(VerificationReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn subject(&self) -> String {
        self.0.subject.clone()
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.passed()
    }

    #[getter]
    fn expected(&self) -> String {
        self.0.expected.canonical.clone()
    }

    #[getter]
    fn actual(&self) -> String {
        self.0.actual.canonical.clone()
    }

    fn json(&self) -> String {
        self.0.to_json_line()
    }

    fn __repr__(&self) -> String {
        let verdict = if self.0.passed() { "pass" } else { "fail" };
        format!("Report({verdict}: {})", self.0.subject)
    }
}

#[pyfunction]
fn verify_squares(k: usize, n: usize) -> PyResult<PyReport> {
    oracle::verify_squares(k, n).map(PyReport).map_err(err)
}

#[pyfunction]
fn verify_critical(k: usize, n: usize) -> PyResult<PyReport> {
    oracle::verify_critical(k, n).map(PyReport).map_err(err)
}

#[pyfunction]
fn verify_invariants(k: usize, n: usize) -> PyResult<Vec<PyReport>> {
    Ok(oracle::verify_invariants(k, n)
        .map_err(err)?
        .into_iter()
        .map(PyReport)
        .collect())
}

#[pymodule(name = "kbonacci")]
fn kbonacci_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySquareDescriptor>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(finite_word, m)?)?;
    m.add_function(wrap_pyfunction!(infinite_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(kbonacci_number, m)?)?;
    m.add_function(wrap_pyfunction!(word_length, m)?)?;
    m.add_function(wrap_pyfunction!(shift, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_power, m)?)?;
    m.add_function(wrap_pyfunction!(index_of, m)?)?;
    m.add_function(wrap_pyfunction!(to_paper, m)?)?;
    m.add_function(wrap_pyfunction!(from_paper, m)?)?;
    m.add_function(wrap_pyfunction!(critical_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(critical_factor, m)?)?;
    m.add_function(wrap_pyfunction!(straddling_index, m)?)?;
    m.add_function(wrap_pyfunction!(straddling_square_roots, m)?)?;
    m.add_function(wrap_pyfunction!(distinct_straddling_square_roots, m)?)?;
    m.add_function(wrap_pyfunction!(v_word, m)?)?;
    m.add_function(wrap_pyfunction!(u_word, m)?)?;
    m.add_function(wrap_pyfunction!(p_word, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_squares, m)?)?;
    m.add_function(wrap_pyfunction!(squares_of_word, m)?)?;
    m.add_function(wrap_pyfunction!(brute_square_roots, m)?)?;
    m.add_function(wrap_pyfunction!(brute_index, m)?)?;
    m.add_function(wrap_pyfunction!(brute_max_index, m)?)?;
    m.add_function(wrap_pyfunction!(verify_squares, m)?)?;
    m.add_function(wrap_pyfunction!(verify_critical, m)?)?;
    m.add_function(wrap_pyfunction!(verify_invariants, m)?)?;
    Ok(())
}
