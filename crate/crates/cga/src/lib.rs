//! 3D conformal geometric algebra over the basis `{e1, e2, e3, e+, e-}` with
//! metric `diag(+,+,+,+,-)`.
//!
//! Points embed as null vectors `P = p + 1/2 |p|^2 e_inf + e_o`, and the
//! versors built here (rotors, translators, dilators and their motor
//! compositions) act on them by sandwich products. Every versor converts to
//! an equivalent homogeneous matrix via [`Versor::to_mat4`], which is what
//! ties this module to the matrix-based transform pipeline.

mod multivector;
mod point;
mod transform;
mod versor;

pub use multivector::Multivector;
pub use point::ConformalPoint;
pub use transform::GaTransform;
pub use versor::{Versor, VersorKind};

/// Errors from versor construction and point extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CgaError {
    /// Rotation axis shorter than 1e-12.
    DegenerateAxis,
    /// Dilation factor must be strictly positive.
    NonPositiveDilation,
    /// The e_o coefficient vanished; the point lies at infinity.
    PointAtInfinity,
}

impl std::fmt::Display for CgaError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CgaError::DegenerateAxis => write!(f, "rotation axis is degenerate"),
            CgaError::NonPositiveDilation => write!(f, "dilation factor must be positive"),
            CgaError::PointAtInfinity => write!(f, "point at infinity (e_o coefficient ~ 0)"),
        }
    }
}

impl std::error::Error for CgaError {}

pub type CgaResult<T> = Result<T, CgaError>;
