//! Python bindings; populated once the library surface is complete.

use pyo3::prelude::*;

/// Module registration.
#[pymodule]
fn schargraph_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
