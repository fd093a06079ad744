//! Python bindings for the qmaj library.
//!
//! Exposes the exact q-polynomial type and the path/statistic/bijection
//! operations as plain functions over strings: words are "EDN..." strings,
//! step orderings are "X<Y<Z" strings, and families use the designator
//! syntax "del:m,n,l", "sch:n,l", "bdel:n,l".
//!
//! Build with `cargo build --release -p qmaj-python`, then import the
//! produced shared library as `qmaj_py` (see python/smoke_test.py).

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qmaj::bijections;
use qmaj::closedform;
use qmaj::paths::{LatticeWord, PathFamily};
use qmaj::stats;
use qmaj::verify::{self, VerifyScope};
use qmaj::StepOrder;

fn value_error(e: qmaj::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_word(text: &str) -> PyResult<LatticeWord> {
    text.parse().map_err(value_error)
}

fn parse_order(text: &str) -> PyResult<StepOrder> {
    text.parse().map_err(value_error)
}

fn parse_family(text: &str) -> PyResult<PathFamily> {
    text.parse().map_err(value_error)
}

/// A polynomial in q with arbitrary-precision nonnegative integer
/// coefficients, in canonical (trailing-zero-free) form.
#[pyclass(name = "QPoly", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyQPoly {
    inner: qmaj::QPoly,
}

#[pymethods]
impl PyQPoly {
    /// Coefficients in ascending power order, as Python ints.
    fn coefficients(&self) -> Vec<BigUint> {
        self.inner.coeffs().to_vec()
    }

    /// Coefficient of q**power (zero beyond the degree).
    fn coefficient(&self, power: usize) -> BigUint {
        self.inner.coeff(power)
    }

    /// Degree, or None for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Sum of all coefficients (the counting specialization q = 1).
    fn eval_at_one(&self) -> BigUint {
        self.inner.eval_at_one()
    }

    /// JSON form: array of decimal coefficient strings, index = power.
    fn to_json(&self) -> String {
        coeff_json(&self.inner)
    }

    /// Exact quotient; raises ValueError if the division is not exact.
    fn exact_div(&self, divisor: &PyQPoly) -> PyResult<PyQPoly> {
        self.inner
            .exact_div(&divisor.inner)
            .map(PyQPoly::from)
            .map_err(value_error)
    }

    fn __add__(&self, other: &PyQPoly) -> PyQPoly {
        self.inner.add(&other.inner).into()
    }

    fn __mul__(&self, other: &PyQPoly) -> PyQPoly {
        self.inner.mul(&other.inner).into()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QPoly({})", self.inner)
    }
}

impl From<qmaj::QPoly> for PyQPoly {
    fn from(inner: qmaj::QPoly) -> Self {
        PyQPoly { inner }
    }
}

/// JSON form: array of decimal coefficient strings, index = power.
fn coeff_json(poly: &qmaj::QPoly) -> String {
    let mut out = String::from("[");
    for (i, c) in poly.coeffs().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('"');
        out.push_str(&c.to_string());
        out.push('"');
    }
    out.push(']');
    out
}

/// The q-integer [n] = 1 + q + ... + q**(n-1).
#[pyfunction]
fn q_int(n: u64) -> PyQPoly {
    qmaj::QPoly::q_int(n).into()
}

/// The q-factorial [n]!.
#[pyfunction]
fn q_factorial(n: u64) -> PyQPoly {
    qmaj::QPoly::q_factorial(n).into()
}

/// The Gaussian binomial [a choose b]; zero when b is out of range.
#[pyfunction]
fn q_binomial(a: u64, b: i64) -> PyQPoly {
    qmaj::QPoly::q_binomial(a, b).into()
}

/// The q-multinomial [total; parts]; raises ValueError on a parts
/// mismatch.
#[pyfunction]
fn q_multinomial(total: u64, parts: Vec<u64>) -> PyResult<PyQPoly> {
    qmaj::QPoly::q_multinomial(total, &parts)
        .map(PyQPoly::from)
        .map_err(value_error)
}

/// Endpoint (x, y) of a word such as "NENNEE".
#[pyfunction]
fn endpoint(word: &str) -> PyResult<(u64, u64)> {
    Ok(parse_word(word)?.endpoint())
}

/// Prefix depths (#N - #E) at positions 1..=len(word).
#[pyfunction]
fn depth_profile(word: &str) -> PyResult<Vec<i64>> {
    Ok(parse_word(word)?.depth_profile())
}

#[pyfunction]
fn is_schroeder(word: &str, n: i64) -> PyResult<bool> {
    Ok(parse_word(word)?.is_schroeder(n))
}

#[pyfunction]
fn is_bad(word: &str, n: i64) -> PyResult<bool> {
    parse_word(word)?.is_bad(n).map_err(value_error)
}

/// All words of a family ("del:m,n,l", "sch:n,l", "bdel:n,l") in
/// canonical order.
#[pyfunction]
fn enumerate_family(family: &str) -> PyResult<Vec<String>> {
    let family = parse_family(family)?;
    Ok(family
        .words()
        .map_err(value_error)?
        .map(|w| w.to_string())
        .collect())
}

/// The six step orderings in their canonical sequence.
#[pyfunction]
fn step_orders() -> Vec<String> {
    StepOrder::ALL.iter().map(|o| o.to_string()).collect()
}

/// Descent positions of the word under an ordering such as "E<D<N".
#[pyfunction]
fn descent_set(word: &str, order: &str) -> PyResult<Vec<usize>> {
    Ok(stats::descent_set(&parse_word(word)?, parse_order(order)?))
}

/// The major index: sum of descent positions.
#[pyfunction]
fn maj(word: &str, order: &str) -> PyResult<u64> {
    Ok(stats::maj(&parse_word(word)?, parse_order(order)?))
}

/// Brute-force maj distribution of a family.
#[pyfunction]
fn maj_distribution(family: &str, order: &str) -> PyResult<PyQPoly> {
    stats::maj_distribution(&parse_family(family)?, parse_order(order)?)
        .map(PyQPoly::from)
        .map_err(value_error)
}

/// Closed form for Del(m,n,l): the q-multinomial [l; l-m, l-n, m+n-l].
#[pyfunction]
fn mdel_closed(m: i64, n: i64, l: i64) -> PyQPoly {
    closedform::mdel_closed(m, n, l).into()
}

/// Closed form for the bad paths in Del(n,n,l).
#[pyfunction]
fn mbdel_closed(n: i64, l: i64, order: &str) -> PyResult<PyQPoly> {
    Ok(closedform::mbdel_closed(n, l, parse_order(order)?).into())
}

/// Closed form for the Schröder paths Sch(n,l).
#[pyfunction]
fn msch_closed(n: i64, l: i64, order: &str) -> PyResult<PyQPoly> {
    closedform::msch_closed(n, l, parse_order(order)?)
        .map(PyQPoly::from)
        .map_err(value_error)
}

/// 1-based position of the first deepest step.
#[pyfunction]
fn first_deepest(word: &str) -> PyResult<usize> {
    bijections::first_deepest(&parse_word(word)?).map_err(value_error)
}

/// k such that position k-1 (with the empty prefix as 0) is the last
/// deepest prefix.
#[pyfunction]
fn last_deepest_predecessor(word: &str) -> PyResult<usize> {
    Ok(bijections::last_deepest_predecessor(&parse_word(word)?))
}

/// Maximal D-runs (r, s) around 1-based position k, as (k, r, s).
#[pyfunction]
fn block_around(word: &str, k: usize) -> PyResult<(usize, usize, usize)> {
    let block = bijections::block_around(&parse_word(word)?, k).map_err(value_error)?;
    Ok((block.k, block.r, block.s))
}

/// The depth-pivot bijection applied to a bad path.
#[pyfunction]
fn phi(word: &str, order: &str) -> PyResult<String> {
    bijections::phi(&parse_word(word)?, parse_order(order)?)
        .map(|w| w.to_string())
        .map_err(value_error)
}

/// Inverse of the bijection, applied to a word ending at (n+1, n-1).
#[pyfunction]
fn phi_inverse(word: &str, order: &str) -> PyResult<String> {
    bijections::phi_inverse(&parse_word(word)?, parse_order(order)?)
        .map(|w| w.to_string())
        .map_err(value_error)
}

/// The flawed single-letter map (order-independent, not injective).
#[pyfunction]
fn psi(word: &str) -> PyResult<String> {
    bijections::psi(&parse_word(word)?)
        .map(|w| w.to_string())
        .map_err(value_error)
}

/// Collision groups of the flawed map over the bad paths in Del(n,n,l),
/// as (image, [preimages]) pairs in canonical order.
#[pyfunction]
fn psi_collisions(n: i64, l: i64) -> PyResult<Vec<(String, Vec<String>)>> {
    let groups = bijections::psi_collisions(n, l).map_err(value_error)?;
    Ok(groups
        .into_iter()
        .map(|g| {
            (
                g.image.to_string(),
                g.preimages.iter().map(|w| w.to_string()).collect(),
            )
        })
        .collect())
}

/// Runs a verification sweep ("theorem", "lemma", "bijection" or "all")
/// up to n_max and returns the JSON report.
#[pyfunction]
fn verify_json(n_max: i64, scope: &str) -> PyResult<String> {
    let scope: VerifyScope = scope.parse().map_err(value_error)?;
    if n_max < 0 {
        return Err(PyValueError::new_err("n_max must be nonnegative"));
    }
    Ok(verify::run(scope, n_max).to_json())
}

#[pymodule]
fn qmaj_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyQPoly>()?;
    m.add_function(wrap_pyfunction!(q_int, m)?)?;
    m.add_function(wrap_pyfunction!(q_factorial, m)?)?;
    m.add_function(wrap_pyfunction!(q_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(q_multinomial, m)?)?;
    m.add_function(wrap_pyfunction!(endpoint, m)?)?;
    m.add_function(wrap_pyfunction!(depth_profile, m)?)?;
    m.add_function(wrap_pyfunction!(is_schroeder, m)?)?;
    m.add_function(wrap_pyfunction!(is_bad, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_family, m)?)?;
    m.add_function(wrap_pyfunction!(step_orders, m)?)?;
    m.add_function(wrap_pyfunction!(descent_set, m)?)?;
    m.add_function(wrap_pyfunction!(maj, m)?)?;
    m.add_function(wrap_pyfunction!(maj_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(mdel_closed, m)?)?;
    m.add_function(wrap_pyfunction!(mbdel_closed, m)?)?;
    m.add_function(wrap_pyfunction!(msch_closed, m)?)?;
    m.add_function(wrap_pyfunction!(first_deepest, m)?)?;
    m.add_function(wrap_pyfunction!(last_deepest_predecessor, m)?)?;
    m.add_function(wrap_pyfunction!(block_around, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(psi_collisions, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
