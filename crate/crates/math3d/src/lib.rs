//! Double-precision 3D math: vectors, column-major 4x4 matrices, quaternions
//! and dual quaternions, plus the usual camera matrix builders (`ortho`,
//! `perspective`, `look_at`).
//!
//! Conventions, fixed once and used everywhere downstream:
//!
//! - matrices are column-major and multiply column vectors (`M * v`),
//! - composing "A then B" is written `B * A` (the first transform is the
//!   right-most factor),
//! - eye space is right-handed, the camera looks down -z,
//! - projections map the near plane to NDC z = -1 and the far plane to +1.

mod dualquat;
mod mat;
mod quat;
mod vec;

pub use dualquat::DualQuat;
pub use mat::Mat4;
pub use quat::Quat;
pub use vec::{Vec3, Vec4};

/// Errors from matrix/quaternion constructors and inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MathError {
    /// Rotation axis shorter than 1e-12.
    DegenerateAxis,
    /// Frustum parameters violate `0 < near < far`, `fovy in (0, pi)`, etc.
    InvalidFrustum,
    /// `|det| < 1e-12` during inversion.
    SingularMatrix,
    /// Quaternion norm deviates from 1 by more than 1e-6.
    NonUnitQuaternion,
    /// `look_at` eye/target/up do not span a frame.
    DegenerateBasis,
}

impl std::fmt::Display for MathError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MathError::DegenerateAxis => write!(f, "rotation axis is degenerate (|axis| < 1e-12)"),
            MathError::InvalidFrustum => write!(f, "invalid frustum parameters"),
            MathError::SingularMatrix => write!(f, "matrix is singular (|det| < 1e-12)"),
            MathError::NonUnitQuaternion => write!(f, "quaternion is not unit norm"),
            MathError::DegenerateBasis => write!(f, "look_at vectors do not span a basis"),
        }
    }
}

impl std::error::Error for MathError {}

pub type MathResult<T> = Result<T, MathError>;
