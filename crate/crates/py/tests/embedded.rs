use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) -> PyResult<()> {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(quotlab::quotlab)(py);
        let globals = PyDict::new(py);
        globals.set_item("quotlab", module)?;
        let code = std::ffi::CString::new(code).unwrap();
        py.run(&code, Some(&globals), None)
    })
}

#[test]
fn catalog_and_segre_numbers() {
    run(r#"
cat = quotlab.Catalog.builtin()
p2 = cat.surface("p2")
o, h = cat.bundle("p2", "O"), cat.bundle("p2", "O(1)")
assert quotlab.segre_quot2(p2, o, h) == quotlab.segre_hilb2(p2, h)
assert quotlab.segre_quot1(p2, o, h) == 1
assert quotlab.quot_euler_series(24, 1, 3) == [1, 24, 324, 3200]
"#)
    .unwrap();
}

#[test]
fn invalid_input_raises_value_error() {
    run(r#"
try:
    quotlab.Catalog.builtin().surface("nowhere")
except ValueError as e:
    assert "nowhere" in str(e)
else:
    raise AssertionError
try:
    quotlab.Bundle(1, ["1/0"])
except ValueError:
    pass
else:
    raise AssertionError
"#)
    .unwrap();
}

#[test]
fn adhm_origin_datum() {
    run(r#"
d = quotlab.AdhmDatum([[0, 0, 0]] * 3, [[0, 0, 0]] * 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
assert d.tangent_dim() == 18
"#)
    .unwrap();
}
