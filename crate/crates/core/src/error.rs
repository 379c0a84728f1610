use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by series arithmetic, function evaluation and the
/// verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series with vanishing constant term")]
    DivisionByNonUnit,
    #[error("logarithm or power of a series with vanishing constant term")]
    BranchPointAtCenter,
    #[error("composition requires an inner series vanishing at 0 (constant term {0})")]
    NonvanishingInner(Complex64),
    #[error("series does not vanish at 0 (constant term {0})")]
    NonvanishingAtZero(Complex64),
    #[error("point {0} lies outside the unit disk")]
    OutsideDisk(Complex64),
    #[error("f'(z) vanishes at {0}")]
    VanishingDerivative(Complex64),
    #[error("finite-difference stencil around {z} with spacing {h} leaves the unit disk")]
    StencilOutsideDisk { z: Complex64, h: f64 },
    #[error("Dieudonne check needs z0 != 0")]
    CenterPoint,
    #[error("z1 and z2 coincide")]
    CoincidentPoints,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("value {value} out of range: {reason}")]
    OutOfRange { value: f64, reason: String },
    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),
    #[error("pole of a Mobius map at {0}")]
    Pole(Complex64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

pub(crate) fn check_in_disk(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk(z))
    }
}
