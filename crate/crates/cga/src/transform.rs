use math3d::{Mat4, Vec3};

use crate::versor::Versor;
use crate::CgaResult;

/// Transform component expressed in geometric-algebra form: translation,
/// rotation axis + angle and a uniform dilation, with the equivalent motor
/// and matrix cached at construction.
///
/// Drop-in alternative to a matrix-form transform: the renderer only ever
/// reads `matrix()`, which is `versor().to_mat4()` by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct GaTransform {
    translation: Vec3,
    axis: Vec3,
    angle: f64,
    dilation: f64,
    versor: Versor,
    matrix: Mat4,
}

impl GaTransform {
    pub fn new(translation: Vec3, axis: Vec3, angle: f64, dilation: f64) -> CgaResult<GaTransform> {
        let versor = Versor::motor(translation, axis, angle, dilation)?;
        let matrix = versor.to_mat4();
        Ok(GaTransform { translation, axis, angle, dilation, versor, matrix })
    }

    pub fn identity() -> GaTransform {
        GaTransform::new(Vec3::ZERO, Vec3::Z, 0.0, 1.0).expect("identity motor")
    }

    pub fn translation(&self) -> Vec3 {
        self.translation
    }

    pub fn axis(&self) -> Vec3 {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn dilation(&self) -> f64 {
        self.dilation
    }

    pub fn versor(&self) -> &Versor {
        &self.versor
    }

    /// Cached `versor().to_mat4()`.
    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_transform() {
        let t = GaTransform::identity();
        assert!(t.matrix().max_abs_diff(&Mat4::IDENTITY) < 1e-15);
    }

    #[test]
    fn cache_is_consistent_with_versor() {
        let t = GaTransform::new(Vec3::new(1.0, 2.0, 3.0), Vec3::new(0.0, 1.0, 0.0), 0.8, 1.5)
            .unwrap();
        assert!(t.matrix().max_abs_diff(&t.versor().to_mat4()) < 1e-9);
    }
}
