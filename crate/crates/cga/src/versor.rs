use math3d::{Mat4, Vec3};

use crate::multivector::Multivector;
use crate::point::ConformalPoint;
use crate::{CgaError, CgaResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VersorKind {
    Rotor,
    Translator,
    Dilator,
    Motor,
}

/// Even-grade multivector applied to points by the sandwich
/// `V P reverse(V)`.
///
/// All constructors use the closed-form exponentials: the translator series
/// truncates because `(t e_inf)^2 = 0`, the rotor and dilator exponents are
/// a Euclidean bivector (squaring to -1) and `e_o ^ e_inf` (squaring to +1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Versor {
    mv: Multivector,
    kind: VersorKind,
}

impl Versor {
    pub fn identity() -> Versor {
        Versor { mv: Multivector::scalar(1.0), kind: VersorKind::Motor }
    }

    /// `T = exp(-1/2 t e_inf) = 1 - 1/2 t e_inf`.
    pub fn translator(t: Vec3) -> Versor {
        let mv = Multivector::scalar(1.0)
            - (Multivector::from_vec3(t) * Multivector::e_inf()).scaled(0.5);
        Versor { mv, kind: VersorKind::Translator }
    }

    /// `R = exp(-phi/2 B) = cos(phi/2) - sin(phi/2) B`, with `B` the unit
    /// Euclidean bivector dual to the axis.
    pub fn rotor(axis: Vec3, angle: f64) -> CgaResult<Versor> {
        let n = axis.normalized().ok_or(CgaError::DegenerateAxis)?;
        let e1 = Multivector::basis_vector(0);
        let e2 = Multivector::basis_vector(1);
        let e3 = Multivector::basis_vector(2);
        let bivector =
            (e2 * e3).scaled(n.x) + (e3 * e1).scaled(n.y) + (e1 * e2).scaled(n.z);
        let (s, c) = (angle / 2.0).sin_cos();
        let mv = Multivector::scalar(c) - bivector.scaled(s);
        Ok(Versor { mv, kind: VersorKind::Rotor })
    }

    /// `D = exp(ln(d)/2 (e_o ^ e_inf)) = cosh(a) + sinh(a) E`, `a = ln(d)/2`.
    pub fn dilator(d: f64) -> CgaResult<Versor> {
        if !(d > 0.0) {
            return Err(CgaError::NonPositiveDilation);
        }
        let big_e = Multivector::e_o().wedge(&Multivector::e_inf());
        let a = d.ln() / 2.0;
        let mv = Multivector::scalar(a.cosh()) + big_e.scaled(a.sinh());
        Ok(Versor { mv, kind: VersorKind::Dilator })
    }

    /// `translator(t) * rotor(axis, angle) * dilator(d)`: dilation applies
    /// first, translation last, mirroring the `T * R * S` matrix product.
    pub fn motor(t: Vec3, axis: Vec3, angle: f64, d: f64) -> CgaResult<Versor> {
        let v = Versor::translator(t)
            .compose(&Versor::rotor(axis, angle)?)
            .compose(&Versor::dilator(d)?);
        Ok(Versor { mv: v.mv, kind: VersorKind::Motor })
    }

    pub fn kind(&self) -> VersorKind {
        self.kind
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    /// Geometric product of two versors; `self` applies last.
    pub fn compose(&self, rhs: &Versor) -> Versor {
        let kind = if self.kind == rhs.kind { self.kind } else { VersorKind::Motor };
        Versor { mv: self.mv * rhs.mv, kind }
    }

    pub fn reverse(&self) -> Versor {
        Versor { mv: self.mv.reverse(), kind: self.kind }
    }

    /// `V rev(V)` scalar part; 1 for all versors built here.
    pub fn normality_residual(&self) -> f64 {
        (self.mv * self.mv.reverse()).scalar_part() - 1.0
    }

    /// Sandwich application `V P rev(V)`, renormalized so the e_o
    /// coefficient is 1.
    pub fn apply(&self, p: &ConformalPoint) -> CgaResult<ConformalPoint> {
        let sandwich = self.mv * *p.as_multivector() * self.mv.reverse();
        let w = sandwich.e_o_coeff();
        if w.abs() < 1e-12 {
            return Err(CgaError::PointAtInfinity);
        }
        Ok(ConformalPoint::from_multivector(sandwich.scaled(1.0 / w)))
    }

    /// Equivalent homogeneous matrix, computed by transforming the origin
    /// and the three basis directions.
    pub fn to_mat4(&self) -> Mat4 {
        let origin = self
            .apply(&ConformalPoint::embed(Vec3::ZERO))
            .and_then(|p| p.extract())
            .unwrap_or(Vec3::ZERO);
        let mut m = Mat4::IDENTITY;
        for (i, axis) in [Vec3::X, Vec3::Y, Vec3::Z].into_iter().enumerate() {
            let image = self
                .apply(&ConformalPoint::embed(axis))
                .and_then(|p| p.extract())
                .unwrap_or(Vec3::ZERO);
            let col = image - origin;
            m.set(0, i, col.x);
            m.set(1, i, col.y);
            m.set(2, i, col.z);
        }
        m.set(0, 3, origin.x);
        m.set(1, 3, origin.y);
        m.set(2, 3, origin.z);
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn identity_constructions() {
        assert!(Versor::translator(Vec3::ZERO)
            .as_multivector()
            .approx_eq(&Multivector::scalar(1.0), 0.0));
        assert!(Versor::rotor(Vec3::Z, 0.0)
            .unwrap()
            .as_multivector()
            .approx_eq(&Multivector::scalar(1.0), 0.0));
        assert!(Versor::dilator(1.0)
            .unwrap()
            .as_multivector()
            .approx_eq(&Multivector::scalar(1.0), 0.0));
        assert!(Versor::motor(Vec3::ZERO, Vec3::Z, 0.0, 1.0)
            .unwrap()
            .as_multivector()
            .approx_eq(&Multivector::scalar(1.0), 1e-15));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Versor::rotor(Vec3::ZERO, 1.0).unwrap_err(), CgaError::DegenerateAxis);
        assert_eq!(Versor::dilator(0.0).unwrap_err(), CgaError::NonPositiveDilation);
        assert_eq!(Versor::dilator(-2.0).unwrap_err(), CgaError::NonPositiveDilation);
    }

    #[test]
    fn translator_moves_origin() {
        let t = Vec3::new(1.0, 2.0, 3.0);
        let moved = Versor::translator(t)
            .apply(&ConformalPoint::embed(Vec3::ZERO))
            .unwrap();
        assert!((moved.extract().unwrap() - t).length() < 1e-12);
    }

    #[test]
    fn translators_add() {
        let a = Vec3::new(0.5, -1.0, 2.0);
        let b = Vec3::new(-0.25, 3.0, 1.0);
        let composed = Versor::translator(a).compose(&Versor::translator(b));
        let direct = Versor::translator(a + b);
        assert!(composed.as_multivector().approx_eq(direct.as_multivector(), 1e-12));
        assert_eq!(composed.kind(), VersorKind::Translator);
    }

    #[test]
    fn rotor_quarter_turn() {
        let r = Versor::rotor(Vec3::Z, FRAC_PI_2).unwrap();
        let p = r.apply(&ConformalPoint::embed(Vec3::X)).unwrap();
        let v = p.extract().unwrap();
        assert!((v - Vec3::Y).length() < 1e-14);
    }

    #[test]
    fn rotor_angles_add() {
        let axis = Vec3::new(0.3, -0.5, 1.0);
        let a = Versor::rotor(axis, 0.7).unwrap();
        let b = Versor::rotor(axis, -1.9).unwrap();
        let direct = Versor::rotor(axis, 0.7 - 1.9).unwrap();
        assert!(a
            .compose(&b)
            .as_multivector()
            .approx_eq(direct.as_multivector(), 1e-9));
    }

    #[test]
    fn dilator_scales_points() {
        let d = Versor::dilator(2.0).unwrap();
        let p = d.apply(&ConformalPoint::embed(Vec3::X)).unwrap();
        assert!((p.extract().unwrap() - Vec3::new(2.0, 0.0, 0.0)).length() < 1e-12);
    }

    #[test]
    fn dilators_multiply() {
        let a = Versor::dilator(2.0).unwrap();
        let b = Versor::dilator(3.5).unwrap();
        let p = Vec3::new(1.0, -2.0, 0.5);
        let via_compose = a
            .compose(&b)
            .apply(&ConformalPoint::embed(p))
            .unwrap()
            .extract()
            .unwrap();
        assert!((via_compose - p * 7.0).length() < 1e-9);
    }

    #[test]
    fn versors_are_normalized() {
        let versors = [
            Versor::translator(Vec3::new(4.0, 5.0, 6.0)),
            Versor::rotor(Vec3::new(1.0, 1.0, 0.0), 2.2).unwrap(),
            Versor::dilator(3.0).unwrap(),
            Versor::motor(Vec3::new(1.0, 0.0, -1.0), Vec3::Y, PI / 3.0, 0.5).unwrap(),
        ];
        for v in versors {
            assert!(v.normality_residual().abs() < 1e-9, "{:?}", v.kind());
            assert!(v.as_multivector().is_even(1e-12));
        }
    }

    #[test]
    fn sandwich_preserves_nullity() {
        let m = Versor::motor(Vec3::new(2.0, -1.0, 0.5), Vec3::new(0.2, 1.0, 0.4), 1.1, 1.8)
            .unwrap();
        let p = m.apply(&ConformalPoint::embed(Vec3::new(0.3, 0.7, -2.0))).unwrap();
        assert!(p.null_residual().abs() < 1e-8);
    }

    // motor((1,0,0), z, pi/2, 2) on (1,0,0): dilate -> (2,0,0),
    // rotate -> (0,2,0), translate -> (1,2,0). Matches the matrix pipeline's
    // compose_trs example.
    #[test]
    fn motor_matches_trs_example() {
        let m = Versor::motor(Vec3::X, Vec3::Z, FRAC_PI_2, 2.0).unwrap();
        let p = m.apply(&ConformalPoint::embed(Vec3::X)).unwrap();
        let v = p.extract().unwrap();
        assert!((v - Vec3::new(1.0, 2.0, 0.0)).length() < 1e-12);
    }

    #[test]
    fn to_mat4_of_identity_and_translator() {
        assert!(Versor::identity().to_mat4().max_abs_diff(&Mat4::IDENTITY) < 1e-15);
        let t = Vec3::new(-2.0, 0.25, 9.0);
        assert!(Versor::translator(t)
            .to_mat4()
            .max_abs_diff(&Mat4::translate(t))
            < 1e-12);
    }
}
