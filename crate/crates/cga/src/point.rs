use math3d::Vec3;

use crate::multivector::Multivector;
use crate::{CgaError, CgaResult};

/// A Euclidean point embedded as a null vector of the conformal algebra:
/// `P = p + 1/2 |p|^2 e_inf + e_o`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalPoint {
    mv: Multivector,
}

impl ConformalPoint {
    pub fn embed(p: Vec3) -> ConformalPoint {
        let mv = Multivector::from_vec3(p)
            + Multivector::e_inf().scaled(0.5 * p.length_squared())
            + Multivector::e_o();
        ConformalPoint { mv }
    }

    pub(crate) fn from_multivector(mv: Multivector) -> ConformalPoint {
        ConformalPoint { mv }
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Recovers the Euclidean point, normalizing by the e_o coefficient
    /// first (versor sandwiches, dilators in particular, scale it).
    pub fn extract(&self) -> CgaResult<Vec3> {
        let w = self.mv.e_o_coeff();
        if w.abs() < 1e-12 {
            return Err(CgaError::PointAtInfinity);
        }
        Ok(self.mv.euclidean_part() / w)
    }

    /// `P * P` scalar part; zero (within rounding) for any embedded point.
    pub fn null_residual(&self) -> f64 {
        (self.mv * self.mv).scalar_part()
    }
}
