//! Python bindings. Every function returns the JSON rendering of the
//! corresponding command-line report.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use splitcurve::mpoly::{parse_form, plane_vars, space_vars};
use splitcurve::nodefile::parse_nodes;
use splitcurve::report::{self, VerifyOptions};
use splitcurve::{Error, Form};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::UnknownExample(id) => PyKeyError::new_err(id),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn plane(text: &str) -> Result<Form, Error> {
    parse_form(text, &plane_vars())
}

fn opts(height: u64, seed_shear: usize) -> VerifyOptions {
    VerifyOptions { height, seed_shear }
}

pub fn verify_example_json(id: &str, height: u64, seed_shear: usize) -> Result<String, Error> {
    Ok(report::run_verify_example(id, &opts(height, seed_shear))?.to_json())
}

pub fn analyze_json(curve: &str, conic: &str, nodes: Option<&str>, height: u64, seed_shear: usize) -> Result<String, Error> {
    let pts = nodes.map(|n| parse_nodes(n, 2)).transpose()?;
    Ok(report::analyze(&plane(curve)?, &plane(conic)?, pts.as_deref(), &opts(height, seed_shear))?.to_json())
}

#[pyfunction]
#[pyo3(signature = (id, height = splitcurve::conic::DEFAULT_HEIGHT, seed_shear = 0))]
fn verify_example(id: &str, height: u64, seed_shear: usize) -> PyResult<String> {
    verify_example_json(id, height, seed_shear).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (curve, conic, nodes = None, height = splitcurve::conic::DEFAULT_HEIGHT, seed_shear = 0))]
fn analyze(curve: &str, conic: &str, nodes: Option<&str>, height: u64, seed_shear: usize) -> PyResult<String> {
    analyze_json(curve, conic, nodes, height, seed_shear).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (curve, conic, nodes, height = splitcurve::conic::DEFAULT_HEIGHT, seed_shear = 0))]
fn split_type(curve: &str, conic: &str, nodes: &str, height: u64, seed_shear: usize) -> PyResult<String> {
    let run = || -> Result<String, Error> {
        let pts = parse_nodes(nodes, 2)?;
        Ok(report::split_type(&plane(curve)?, &plane(conic)?, &pts, &opts(height, seed_shear))?.to_json())
    };
    run().map_err(to_py)
}

#[pyfunction]
fn pullback(curve: &str) -> PyResult<String> {
    let run = || -> Result<String, Error> { Ok(report::pullback(&plane(curve)?)?.to_json()) };
    run().map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g2, g3, g4, height = splitcurve::conic::DEFAULT_HEIGHT))]
fn project_quartic(g2: &str, g3: &str, g4: &str, height: u64) -> PyResult<String> {
    let run = || -> Result<String, Error> {
        Ok(report::project(&plane(g2)?, &plane(g3)?, &plane(g4)?, &opts(height, 0))?.to_json())
    };
    run().map_err(to_py)
}

#[pyfunction]
fn syzygetic(surface: &str, nodes: &str) -> PyResult<String> {
    let run = || -> Result<String, Error> {
        let f = parse_form(surface, &space_vars())?;
        Ok(report::syzygetic(&f, &parse_nodes(nodes, 3)?)?.to_json())
    };
    run().map_err(to_py)
}

#[pyfunction]
fn example_ids() -> Vec<&'static str> {
    splitcurve::registry::EXAMPLE_IDS.to_vec()
}

#[pymodule]
fn pysplitcurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(verify_example, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(split_type, m)?)?;
    m.add_function(wrap_pyfunction!(pullback, m)?)?;
    m.add_function(wrap_pyfunction!(project_quartic, m)?)?;
    m.add_function(wrap_pyfunction!(syzygetic, m)?)?;
    m.add_function(wrap_pyfunction!(example_ids, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_entry_points() {
        let v: serde_json::Value = serde_json::from_str(&verify_example_json("nonsplit6a", 50, 0).unwrap()).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(verify_example_json("nope", 50, 0).unwrap_err(), Error::UnknownExample("nope".into()));
        let g6 = "(x^3+y^3+z^3)^2-(z^2-4*x*y)*(x*y+y*z+z*x)^2";
        let a: serde_json::Value = serde_json::from_str(&analyze_json(g6, "z^2-4*x*y", None, 50, 0).unwrap()).unwrap();
        assert_eq!(a["outcome"], "Split(3,3)");
    }
}
