use std::ops::Mul;

use crate::{MathError, MathResult, Quat, Vec3, Vec4};

/// 4x4 matrix, column-major storage: element (row, col) lives at `m[col * 4 + row]`.
///
/// Multiplies column vectors (`M * v`); composing "A then B" is `B * A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    pub m: [f64; 16],
}

impl Default for Mat4 {
    fn default() -> Self {
        Mat4::IDENTITY
    }
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4 {
        m: [
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 0.0, 0.0, 1.0,
        ],
    };

    /// Builds from 16 values given in row-major reading order (the way a
    /// matrix is written on paper).
    pub fn from_rows(r: [f64; 16]) -> Mat4 {
        let mut m = [0.0; 16];
        for row in 0..4 {
            for col in 0..4 {
                m[col * 4 + row] = r[row * 4 + col];
            }
        }
        Mat4 { m }
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.m[col * 4 + row]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, v: f64) {
        self.m[col * 4 + row] = v;
    }

    #[inline]
    pub fn col(&self, col: usize) -> Vec4 {
        Vec4::new(
            self.m[col * 4],
            self.m[col * 4 + 1],
            self.m[col * 4 + 2],
            self.m[col * 4 + 3],
        )
    }

    pub fn translate(t: Vec3) -> Mat4 {
        let mut m = Mat4::IDENTITY;
        m.set(0, 3, t.x);
        m.set(1, 3, t.y);
        m.set(2, 3, t.z);
        m
    }

    pub fn scale_uniform(s: f64) -> Mat4 {
        Mat4::scale(Vec3::new(s, s, s))
    }

    pub fn scale(s: Vec3) -> Mat4 {
        let mut m = Mat4::IDENTITY;
        m.set(0, 0, s.x);
        m.set(1, 1, s.y);
        m.set(2, 2, s.z);
        m
    }

    /// Rotation about an arbitrary axis (Rodrigues form).
    pub fn rotate(axis: Vec3, angle: f64) -> MathResult<Mat4> {
        let n = axis.normalized().ok_or(MathError::DegenerateAxis)?;
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let (x, y, z) = (n.x, n.y, n.z);
        Ok(Mat4::from_rows([
            t * x * x + c,
            t * x * y - s * z,
            t * x * z + s * y,
            0.0,
            t * x * y + s * z,
            t * y * y + c,
            t * y * z - s * x,
            0.0,
            t * x * z - s * y,
            t * y * z + s * x,
            t * z * z + c,
            0.0,
            0.0,
            0.0,
            0.0,
            1.0,
        ]))
    }

    /// `T * R * S` with uniform scale; the right-most factor applies first.
    pub fn compose_trs(t: Vec3, r: Quat, s: f64) -> MathResult<Mat4> {
        if (r.norm() - 1.0).abs() > 1e-6 {
            return Err(MathError::NonUnitQuaternion);
        }
        Ok(Mat4::translate(t) * r.to_mat4() * Mat4::scale_uniform(s))
    }

    /// Right-handed perspective projection, GL clip conventions
    /// (NDC z in [-1, 1], near plane at z = -1).
    pub fn perspective(fovy: f64, aspect: f64, near: f64, far: f64) -> MathResult<Mat4> {
        if !(fovy > 0.0 && fovy < std::f64::consts::PI)
            || aspect <= 0.0
            || near <= 0.0
            || far <= near
        {
            return Err(MathError::InvalidFrustum);
        }
        let f = 1.0 / (fovy / 2.0).tan();
        let mut m = Mat4 { m: [0.0; 16] };
        m.set(0, 0, f / aspect);
        m.set(1, 1, f);
        m.set(2, 2, (far + near) / (near - far));
        m.set(2, 3, 2.0 * far * near / (near - far));
        m.set(3, 2, -1.0);
        Ok(m)
    }

    /// Right-handed orthographic projection, GL clip conventions.
    pub fn ortho(l: f64, r: f64, b: f64, t: f64, n: f64, f: f64) -> MathResult<Mat4> {
        if r <= l || t <= b || f <= n {
            return Err(MathError::InvalidFrustum);
        }
        let mut m = Mat4::IDENTITY;
        m.set(0, 0, 2.0 / (r - l));
        m.set(1, 1, 2.0 / (t - b));
        m.set(2, 2, -2.0 / (f - n));
        m.set(0, 3, -(r + l) / (r - l));
        m.set(1, 3, -(t + b) / (t - b));
        m.set(2, 3, -(f + n) / (f - n));
        Ok(m)
    }

    /// View matrix mapping world to eye space; the camera looks down -z.
    pub fn look_at(eye: Vec3, target: Vec3, up: Vec3) -> MathResult<Mat4> {
        let fwd = (target - eye).normalized().ok_or(MathError::DegenerateBasis)?;
        let side = fwd.cross(up).normalized().ok_or(MathError::DegenerateBasis)?;
        let upv = side.cross(fwd);
        Ok(Mat4::from_rows([
            side.x,
            side.y,
            side.z,
            -side.dot(eye),
            upv.x,
            upv.y,
            upv.z,
            -upv.dot(eye),
            -fwd.x,
            -fwd.y,
            -fwd.z,
            fwd.dot(eye),
            0.0,
            0.0,
            0.0,
            1.0,
        ]))
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = Mat4 { m: [0.0; 16] };
        for row in 0..4 {
            for col in 0..4 {
                out.set(col, row, self.at(row, col));
            }
        }
        out
    }

    pub fn determinant(&self) -> f64 {
        let m = |r: usize, c: usize| self.at(r, c);
        let s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
        let s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
        let s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
        let s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
        let s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
        let s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
        let c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
        let c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
        let c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
        let c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
        let c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
        let c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);
        s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
    }

    /// Inverse via cofactors; errors when `|det| < 1e-12`.
    pub fn inverse(&self) -> MathResult<Mat4> {
        let m = |r: usize, c: usize| self.at(r, c);
        let s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
        let s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
        let s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
        let s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
        let s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
        let s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
        let c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
        let c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
        let c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
        let c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
        let c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
        let c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);

        let det = s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
        if det.abs() < 1e-12 {
            return Err(MathError::SingularMatrix);
        }
        let inv_det = 1.0 / det;

        let mut out = Mat4 { m: [0.0; 16] };
        out.set(0, 0, (m(1, 1) * c5 - m(1, 2) * c4 + m(1, 3) * c3) * inv_det);
        out.set(0, 1, (-m(0, 1) * c5 + m(0, 2) * c4 - m(0, 3) * c3) * inv_det);
        out.set(0, 2, (m(3, 1) * s5 - m(3, 2) * s4 + m(3, 3) * s3) * inv_det);
        out.set(0, 3, (-m(2, 1) * s5 + m(2, 2) * s4 - m(2, 3) * s3) * inv_det);
        out.set(1, 0, (-m(1, 0) * c5 + m(1, 2) * c2 - m(1, 3) * c1) * inv_det);
        out.set(1, 1, (m(0, 0) * c5 - m(0, 2) * c2 + m(0, 3) * c1) * inv_det);
        out.set(1, 2, (-m(3, 0) * s5 + m(3, 2) * s2 - m(3, 3) * s1) * inv_det);
        out.set(1, 3, (m(2, 0) * s5 - m(2, 2) * s2 + m(2, 3) * s1) * inv_det);
        out.set(2, 0, (m(1, 0) * c4 - m(1, 1) * c2 + m(1, 3) * c0) * inv_det);
        out.set(2, 1, (-m(0, 0) * c4 + m(0, 1) * c2 - m(0, 3) * c0) * inv_det);
        out.set(2, 2, (m(3, 0) * s4 - m(3, 1) * s2 + m(3, 3) * s0) * inv_det);
        out.set(2, 3, (-m(2, 0) * s4 + m(2, 1) * s2 - m(2, 3) * s0) * inv_det);
        out.set(3, 0, (-m(1, 0) * c3 + m(1, 1) * c1 - m(1, 2) * c0) * inv_det);
        out.set(3, 1, (m(0, 0) * c3 - m(0, 1) * c1 + m(0, 2) * c0) * inv_det);
        out.set(3, 2, (-m(3, 0) * s3 + m(3, 1) * s1 - m(3, 2) * s0) * inv_det);
        out.set(3, 3, (m(2, 0) * s3 - m(2, 1) * s1 + m(2, 2) * s0) * inv_det);
        Ok(out)
    }

    /// Transforms a point (w = 1) and performs the homogeneous divide.
    #[inline]
    pub fn transform_point(&self, p: Vec3) -> Vec3 {
        let v = *self * p.extend(1.0);
        if v.w == 1.0 {
            v.truncate()
        } else {
            v.truncate() / v.w
        }
    }

    /// Transforms a direction (w = 0); translation does not apply.
    #[inline]
    pub fn transform_dir(&self, d: Vec3) -> Vec3 {
        (*self * d.extend(0.0)).truncate()
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        self.m
            .iter()
            .zip(other.m.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().all(|v| v.is_finite())
    }
}

impl Mul for Mat4 {
    type Output = Mat4;

    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4 { m: [0.0; 16] };
        for col in 0..4 {
            for row in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    acc += self.at(row, k) * rhs.at(k, col);
                }
                out.set(row, col, acc);
            }
        }
        out
    }
}

impl Mul<Vec4> for Mat4 {
    type Output = Vec4;

    #[inline]
    fn mul(self, v: Vec4) -> Vec4 {
        Vec4::new(
            self.at(0, 0) * v.x + self.at(0, 1) * v.y + self.at(0, 2) * v.z + self.at(0, 3) * v.w,
            self.at(1, 0) * v.x + self.at(1, 1) * v.y + self.at(1, 2) * v.z + self.at(1, 3) * v.w,
            self.at(2, 0) * v.x + self.at(2, 1) * v.y + self.at(2, 2) * v.z + self.at(2, 3) * v.w,
            self.at(3, 0) * v.x + self.at(3, 1) * v.y + self.at(3, 2) * v.z + self.at(3, 3) * v.w,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_mat_eq(a: &Mat4, b: &Mat4, tol: f64) {
        assert!(
            a.max_abs_diff(b) <= tol,
            "matrices differ by {}\n{:?}\n{:?}",
            a.max_abs_diff(b),
            a,
            b
        );
    }

    #[test]
    fn translate_zero_is_identity() {
        assert_eq!(Mat4::translate(Vec3::ZERO), Mat4::IDENTITY);
    }

    #[test]
    fn quarter_turn_about_z() {
        let m = Mat4::rotate(Vec3::Z, std::f64::consts::FRAC_PI_2).unwrap();
        let v = m * Vec4::new(1.0, 0.0, 0.0, 1.0);
        assert!((v.x - 0.0).abs() < 1e-15);
        assert!((v.y - 1.0).abs() < 1e-15);
        assert!((v.z - 0.0).abs() < 1e-15);
        assert_eq!(v.w, 1.0);
    }

    #[test]
    fn rotate_rejects_degenerate_axis() {
        assert_eq!(Mat4::rotate(Vec3::ZERO, 1.0), Err(MathError::DegenerateAxis));
    }

    // scale(2) * translate(1,0,0) applied to the origin: translate first,
    // then scale, giving (2,0,0). Expected value from multiplying the two
    // 4x4 matrices by hand.
    #[test]
    fn scale_after_translate_on_origin() {
        let m = Mat4::scale_uniform(2.0) * Mat4::translate(Vec3::X);
        let p = m.transform_point(Vec3::ZERO);
        assert_eq!(p, Vec3::new(2.0, 0.0, 0.0));
    }

    #[test]
    fn compose_trs_identity_cases() {
        let id = Mat4::compose_trs(Vec3::ZERO, Quat::IDENTITY, 1.0).unwrap();
        assert_mat_eq(&id, &Mat4::IDENTITY, 0.0);

        let t = Vec3::new(4.0, -2.0, 7.0);
        let m = Mat4::compose_trs(t, Quat::IDENTITY, 1.0).unwrap();
        assert_mat_eq(&m, &Mat4::translate(t), 0.0);
    }

    // ((1,0,0), rot_z(pi/2), 2) applied to (1,0,0): scale -> (2,0,0),
    // rotate -> (0,2,0), translate -> (1,2,0). Evaluated stepwise by hand.
    #[test]
    fn compose_trs_stepwise_example() {
        let r = Quat::from_axis_angle(Vec3::Z, std::f64::consts::FRAC_PI_2).unwrap();
        let m = Mat4::compose_trs(Vec3::X, r, 2.0).unwrap();
        let p = m.transform_point(Vec3::X);
        assert!((p.x - 1.0).abs() < 1e-15);
        assert!((p.y - 2.0).abs() < 1e-15);
        assert!(p.z.abs() < 1e-15);
    }

    #[test]
    fn compose_trs_rejects_non_unit_rotation() {
        let q = Quat::new(0.9, 0.3, 0.0, 0.0); // norm != 1
        assert_eq!(Mat4::compose_trs(Vec3::ZERO, q, 1.0), Err(MathError::NonUnitQuaternion));
    }

    #[test]
    fn compose_trs_matches_factor_product_bitwise() {
        let r = Quat::from_axis_angle(Vec3::new(1.0, 2.0, -0.5), 0.83).unwrap();
        let t = Vec3::new(0.3, -1.2, 2.2);
        let a = Mat4::compose_trs(t, r, 1.7).unwrap();
        let b = Mat4::translate(t) * r.to_mat4() * Mat4::scale_uniform(1.7);
        assert_eq!(a.m, b.m);
    }

    // perspective(pi/2, 1, 1, 3): on-axis points on the near and far planes
    // map to NDC z = -1 and +1. Values from the textbook frustum formula:
    // z_ndc = (A*z + B) / -z with A = (f+n)/(n-f), B = 2fn/(n-f).
    #[test]
    fn perspective_maps_near_and_far_planes() {
        let m = Mat4::perspective(std::f64::consts::FRAC_PI_2, 1.0, 1.0, 3.0).unwrap();
        let near = m.transform_point(Vec3::new(0.0, 0.0, -1.0));
        assert!((near.z + 1.0).abs() < 1e-12, "near z {}", near.z);
        let far = m.transform_point(Vec3::new(0.0, 0.0, -3.0));
        assert!((far.z - 1.0).abs() < 1e-12, "far z {}", far.z);
    }

    #[test]
    fn ortho_unit_cube_flips_z() {
        let m = Mat4::ortho(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0).unwrap();
        let expect = Mat4::scale(Vec3::new(1.0, 1.0, -1.0));
        assert_mat_eq(&m, &expect, 0.0);
    }

    #[test]
    fn frustum_validation() {
        assert!(Mat4::perspective(0.0, 1.0, 1.0, 2.0).is_err());
        assert!(Mat4::perspective(1.0, 1.0, 2.0, 1.0).is_err());
        assert!(Mat4::perspective(1.0, -1.0, 1.0, 2.0).is_err());
        assert!(Mat4::ortho(1.0, -1.0, -1.0, 1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn look_at_canonical_frame_is_identity() {
        let m = Mat4::look_at(Vec3::ZERO, Vec3::new(0.0, 0.0, -1.0), Vec3::Y).unwrap();
        assert_mat_eq(&m, &Mat4::IDENTITY, 1e-15);
    }

    #[test]
    fn look_at_translation_only() {
        let m = Mat4::look_at(Vec3::new(0.0, 0.0, 5.0), Vec3::ZERO, Vec3::Y).unwrap();
        let p = m.transform_point(Vec3::ZERO);
        assert!((p.z + 5.0).abs() < 1e-12);
        assert!(p.x.abs() < 1e-12 && p.y.abs() < 1e-12);
    }

    #[test]
    fn look_at_rejects_parallel_up() {
        let r = Mat4::look_at(Vec3::ZERO, Vec3::Z, Vec3::Z);
        assert_eq!(r, Err(MathError::DegenerateBasis));
    }

    #[test]
    fn inverse_of_identity_and_translation() {
        assert_mat_eq(&Mat4::IDENTITY.inverse().unwrap(), &Mat4::IDENTITY, 0.0);
        let t = Vec3::new(3.0, -1.0, 0.5);
        let inv = Mat4::translate(t).inverse().unwrap();
        assert_mat_eq(&inv, &Mat4::translate(-t), 1e-15);
    }

    #[test]
    fn inverse_rejects_singular() {
        assert_eq!(Mat4::scale_uniform(0.0).inverse(), Err(MathError::SingularMatrix));
    }
}
