use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("non-finite sample at index {0}")]
    NonFinite(usize),
    #[error("functions live on different grids")]
    GridMismatch,
    #[error("{name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("operation requires a real-valued function")]
    ComplexInput,
    #[error("unknown function id `{0}`")]
    UnknownFunction(String),
    #[error("point {0} is not in the grid interior")]
    OutsideInterior(f64),
    #[error("kernel parameters must satisfy xi1 <= xi2 (got {xi1}, {xi2})")]
    BadKernelParams { xi1: f64, xi2: f64 },
    #[error("degenerate gap: xi2 - xi1 must be positive")]
    DegenerateGap,
    #[error("norm diverges: {0}")]
    Divergent(String),
    #[error("no derivative available for `{0}`")]
    NoDerivative(String),
    #[error("quadrature failed to converge: {0}")]
    Quadrature(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_range(
    name: &'static str,
    value: f64,
    ok: bool,
    range: &'static str,
) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange { name, value, range })
    }
}
