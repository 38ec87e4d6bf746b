//! Python bindings: `import quotlab`.
//!
//! Rational inputs may be `int`, `str` (`"p/q"`) or `fractions.Fraction`;
//! rational outputs are `Fraction`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use quot_core::adhm::{self, Sl2Point};
use quot_core::linalg::Matrix;
use quot_core::rational::{format_rational, parse_rational, Rational};
use quot_core::{crosscheck, segre, series};

fn err(e: quot_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rat(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_string_lossy()).map_err(err)
}

fn to_rats(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(to_rat).collect()
}

fn to_rows(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<Vec<Rational>>> {
    rows.iter().map(|r| to_rats(r)).collect()
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(q),))
}

fn fractions<'py>(py: Python<'py>, qs: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    qs.iter().map(|q| fraction(py, q)).collect()
}

/// Numerical Chow data of a surface.
#[pyclass(name = "Surface", module = "quotlab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySurface(quot_core::SurfaceModel);

#[pymethods]
impl PySurface {
    #[new]
    fn new(
        name: String,
        divisors: Vec<String>,
        pairing: Vec<Vec<Bound<'_, PyAny>>>,
        omega_c1: Vec<Bound<'_, PyAny>>,
        omega_c2: Bound<'_, PyAny>,
        chi_top: Bound<'_, PyAny>,
    ) -> PyResult<Self> {
        quot_core::SurfaceModel::new(
            name,
            divisors,
            to_rows(pairing)?,
            to_rats(&omega_c1)?,
            to_rat(&omega_c2)?,
            to_rat(&chi_top)?,
        )
        .map(PySurface)
        .map_err(err)
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    #[getter]
    fn divisors(&self) -> Vec<String> {
        self.0.divisors.clone()
    }

    #[getter]
    fn chi_top<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.chi_top)
    }

    /// Intersection number of two divisors given in the basis.
    fn pair<'py>(
        &self,
        py: Python<'py>,
        u: Vec<Bound<'py, PyAny>>,
        v: Vec<Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let (u, v) = (to_rats(&u)?, to_rats(&v)?);
        self.0.check_divisor(&u).map_err(err)?;
        self.0.check_divisor(&v).map_err(err)?;
        fraction(py, &self.0.pair(&u, &v))
    }

    fn __repr__(&self) -> String {
        format!("Surface({:?}, divisors={:?})", self.0.name, self.0.divisors)
    }
}

/// Rank and Chern data of a vector bundle.
#[pyclass(name = "Bundle", module = "quotlab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBundle(quot_core::BundleData);

#[pymethods]
impl PyBundle {
    #[new]
    #[pyo3(signature = (rank, c1, c2 = None))]
    fn new(rank: u32, c1: Vec<Bound<'_, PyAny>>, c2: Option<Bound<'_, PyAny>>) -> PyResult<Self> {
        let c2 = match c2 {
            Some(c) => to_rat(&c)?,
            None => Rational::from_integer(0.into()),
        };
        quot_core::BundleData::new(rank, to_rats(&c1)?, c2)
            .map(PyBundle)
            .map_err(err)
    }

    #[getter]
    fn rank(&self) -> u32 {
        self.0.rank
    }

    #[getter]
    fn c1<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, &self.0.c1)
    }

    #[getter]
    fn c2<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.c2int)
    }

    fn __repr__(&self) -> String {
        let c1: Vec<String> = self.0.c1.iter().map(format_rational).collect();
        format!("Bundle(rank={}, c1=[{}], c2={})", self.0.rank, c1.join(", "), format_rational(&self.0.c2int))
    }
}

/// Named surfaces and bundles.
#[pyclass(name = "Catalog", module = "quotlab", frozen)]
struct PyCatalog(quot_core::Catalog);

#[pymethods]
impl PyCatalog {
    /// The catalog shipped with the library.
    #[staticmethod]
    fn builtin() -> Self {
        PyCatalog(quot_core::Catalog::builtin())
    }

    /// `$QUOT_CATALOG` if set, else the shipped catalog.
    #[staticmethod]
    fn from_env() -> PyResult<Self> {
        quot_core::Catalog::from_env().map(PyCatalog).map_err(err)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        quot_core::Catalog::load(path).map(PyCatalog).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        quot_core::Catalog::parse(text).map(PyCatalog).map_err(err)
    }

    fn surface_names(&self) -> Vec<String> {
        self.0.surfaces.iter().map(|s| s.name.clone()).collect()
    }

    fn bundle_names(&self, surface: &str) -> Vec<String> {
        self.0.bundles_on(surface).map(|b| b.name.clone()).collect()
    }

    fn surface(&self, name: &str) -> PyResult<PySurface> {
        self.0.surface(name).cloned().map(PySurface).map_err(err)
    }

    fn bundle(&self, surface: &str, name: &str) -> PyResult<PyBundle> {
        self.0.bundle(surface, name).cloned().map(PyBundle).map_err(err)
    }

    /// Runs the cross-validation sweep; returns `(id, title, passed, detail)` rows.
    #[pyo3(signature = (seed = crosscheck::DEFAULT_SEED))]
    fn crosscheck(&self, py: Python<'_>, seed: u64) -> Vec<(String, String, bool, String)> {
        py.detach(|| crosscheck::run_all(&self.0, seed))
            .into_iter()
            .map(|r| (r.id, r.title.to_string(), r.passed, r.detail))
            .collect()
    }
}

#[pyfunction]
fn segre_quot1<'py>(py: Python<'py>, s: &PySurface, e: &PyBundle, l: &PyBundle) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &segre::segre_quot1(&s.0, &e.0, &l.0).map_err(err)?)
}

#[pyfunction]
fn segre_quot2<'py>(py: Python<'py>, s: &PySurface, e: &PyBundle, l: &PyBundle) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &segre::segre_quot2_theorem(&s.0, &e.0, &l.0).map_err(err)?)
}

/// The same number computed through `P(E)^[2]`.
#[pyfunction]
fn segre_quot2_pipeline<'py>(
    py: Python<'py>,
    s: &PySurface,
    e: &PyBundle,
    l: &PyBundle,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &segre::segre_quot2_pipeline(&s.0, &e.0, &l.0).map_err(err)?)
}

#[pyfunction]
fn segre_hilb2<'py>(py: Python<'py>, s: &PySurface, l: &PyBundle) -> PyResult<Bound<'py, PyAny>> {
    let lambda = segre::lambda_surface_direct(&s.0, &l.0).map_err(err)?;
    fraction(py, &segre::segre_hilb2(&lambda))
}

#[pyfunction]
fn lambda_closed_form<'py>(
    py: Python<'py>,
    s: &PySurface,
    e: &PyBundle,
    l: &PyBundle,
    k: usize,
) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &segre::lambda_closed_form(&s.0, &e.0, &l.0, k).map_err(err)?)
}

#[pyfunction]
fn lambda_proj_direct<'py>(
    py: Python<'py>,
    s: &PySurface,
    e: &PyBundle,
    l: &PyBundle,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let lambda = segre::lambda_proj_direct(&s.0, &e.0, &l.0).map_err(err)?;
    fractions(py, lambda.values())
}

/// Coefficients of `∏(1 − q^m)^{−r·χ}` up to `q^order`.
#[pyfunction]
fn quot_euler_series<'py>(
    py: Python<'py>,
    chi: Bound<'py, PyAny>,
    r: u32,
    order: usize,
) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let s = series::quot_euler_series(&to_rat(&chi)?, r, order).map_err(err)?;
    fractions(py, s.coeffs())
}

/// A framed commuting datum `(x, y, v)` on `V = Q^l` with `r` framing vectors.
#[pyclass(name = "AdhmDatum", module = "quotlab", frozen)]
struct PyAdhmDatum(adhm::AdhmDatum);

#[pymethods]
impl PyAdhmDatum {
    #[new]
    fn new(
        x: Vec<Vec<Bound<'_, PyAny>>>,
        y: Vec<Vec<Bound<'_, PyAny>>>,
        v: Vec<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Self> {
        let x = Matrix::from_rows(to_rows(x)?).map_err(err)?;
        let y = Matrix::from_rows(to_rows(y)?).map_err(err)?;
        adhm::AdhmDatum::new(x, y, to_rows(v)?).map(PyAdhmDatum).map_err(err)
    }

    /// A seeded random datum built from a structural commuting family.
    #[staticmethod]
    fn random(l: usize, r: usize, seed: u64) -> PyResult<Self> {
        if l == 0 || r == 0 {
            return Err(PyValueError::new_err("l and r must be positive"));
        }
        let mut rng = adhm::sampling::rng_from_seed(seed);
        Ok(PyAdhmDatum(adhm::sampling::random_commuting(&mut rng, l, r)))
    }

    #[getter]
    fn l(&self) -> usize {
        self.0.l()
    }

    #[getter]
    fn r(&self) -> usize {
        self.0.r()
    }

    fn is_commuting(&self) -> bool {
        adhm::is_commuting(&self.0)
    }

    fn is_stable(&self) -> bool {
        adhm::stability_check(&self.0)
    }

    fn stabilizer_dim(&self) -> usize {
        adhm::stabilizer_dim(&self.0)
    }

    fn tangent_dim(&self) -> PyResult<usize> {
        adhm::tangent_dim_quotient(&self.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("AdhmDatum({})", self.0)
    }
}

/// Rank of the Jacobian of the 2×2 minors at a point of the commuting
/// variety of `sl₂`, coordinates `x = (x₁, x₂, x₃)`, `y = (y₁, y₂, y₃)`.
#[pyfunction]
fn sl2_jacobian_rank(x: [Bound<'_, PyAny>; 3], y: [Bound<'_, PyAny>; 3]) -> PyResult<usize> {
    let [x1, x2, x3] = x;
    let [y1, y2, y3] = y;
    let p = Sl2Point::new(
        [to_rat(&x1)?, to_rat(&x2)?, to_rat(&x3)?],
        [to_rat(&y1)?, to_rat(&y2)?, to_rat(&y3)?],
    );
    adhm::sl2_jacobian_rank(&p).map_err(err)
}

#[pyfunction]
fn sl2_hilbert_coefficient(n: u64) -> String {
    adhm::sl2_hilbert_coefficient(n).to_string()
}

#[pymodule]
pub fn quotlab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySurface>()?;
    m.add_class::<PyBundle>()?;
    m.add_class::<PyCatalog>()?;
    m.add_class::<PyAdhmDatum>()?;
    m.add_function(wrap_pyfunction!(segre_quot1, m)?)?;
    m.add_function(wrap_pyfunction!(segre_quot2, m)?)?;
    m.add_function(wrap_pyfunction!(segre_quot2_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(segre_hilb2, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_proj_direct, m)?)?;
    m.add_function(wrap_pyfunction!(quot_euler_series, m)?)?;
    m.add_function(wrap_pyfunction!(sl2_jacobian_rank, m)?)?;
    m.add_function(wrap_pyfunction!(sl2_hilbert_coefficient, m)?)?;
    Ok(())
}
