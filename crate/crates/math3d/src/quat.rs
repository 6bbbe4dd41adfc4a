use std::ops::Mul;

use crate::{Mat4, MathError, MathResult, Vec3};

/// Rotation quaternion, `w + xi + yj + zk`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quat {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quat {
    pub const IDENTITY: Quat = Quat { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    #[inline]
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_axis_angle(axis: Vec3, angle: f64) -> MathResult<Quat> {
        let n = axis.normalized().ok_or(MathError::DegenerateAxis)?;
        let (s, c) = (angle / 2.0).sin_cos();
        Ok(Quat::new(c, n.x * s, n.y * s, n.z * s))
    }

    /// Extracts the rotation from the upper-left 3x3 block of `m`
    /// (Shepperd's method). The block must be a pure rotation.
    pub fn from_rotation_mat4(m: &Mat4) -> Quat {
        let trace = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
        let q = if trace > 0.0 {
            let s = (trace + 1.0).sqrt() * 2.0;
            Quat::new(
                0.25 * s,
                (m.at(2, 1) - m.at(1, 2)) / s,
                (m.at(0, 2) - m.at(2, 0)) / s,
                (m.at(1, 0) - m.at(0, 1)) / s,
            )
        } else if m.at(0, 0) > m.at(1, 1) && m.at(0, 0) > m.at(2, 2) {
            let s = (1.0 + m.at(0, 0) - m.at(1, 1) - m.at(2, 2)).sqrt() * 2.0;
            Quat::new(
                (m.at(2, 1) - m.at(1, 2)) / s,
                0.25 * s,
                (m.at(0, 1) + m.at(1, 0)) / s,
                (m.at(0, 2) + m.at(2, 0)) / s,
            )
        } else if m.at(1, 1) > m.at(2, 2) {
            let s = (1.0 + m.at(1, 1) - m.at(0, 0) - m.at(2, 2)).sqrt() * 2.0;
            Quat::new(
                (m.at(0, 2) - m.at(2, 0)) / s,
                (m.at(0, 1) + m.at(1, 0)) / s,
                0.25 * s,
                (m.at(1, 2) + m.at(2, 1)) / s,
            )
        } else {
            let s = (1.0 + m.at(2, 2) - m.at(0, 0) - m.at(1, 1)).sqrt() * 2.0;
            Quat::new(
                (m.at(1, 0) - m.at(0, 1)) / s,
                (m.at(0, 2) + m.at(2, 0)) / s,
                (m.at(1, 2) + m.at(2, 1)) / s,
                0.25 * s,
            )
        };
        q.normalized()
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    #[inline]
    pub fn dot(self, rhs: Quat) -> f64 {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn normalized(self) -> Quat {
        let n = self.norm();
        Quat::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    #[inline]
    pub fn conjugate(self) -> Quat {
        Quat::new(self.w, -self.x, -self.y, -self.z)
    }

    #[inline]
    pub fn scaled(self, s: f64) -> Quat {
        Quat::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn to_mat4(self) -> Mat4 {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        Mat4::from_rows([
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            0.0,
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            0.0,
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
            0.0,
            0.0,
            0.0,
            0.0,
            1.0,
        ])
    }

    pub fn rotate_vec(self, v: Vec3) -> Vec3 {
        let qv = Quat::new(0.0, v.x, v.y, v.z);
        let r = self * qv * self.conjugate();
        Vec3::new(r.x, r.y, r.z)
    }

    /// Spherical interpolation along the shorter arc. Falls back to a
    /// normalized lerp when the arc angle drops below 1e-6.
    pub fn slerp(q0: Quat, q1: Quat, u: f64) -> Quat {
        let mut b = q1;
        let mut cos_theta = q0.dot(q1);
        if cos_theta < 0.0 {
            b = b.scaled(-1.0);
            cos_theta = -cos_theta;
        }
        let cos_theta = cos_theta.min(1.0);
        let theta = cos_theta.acos();
        if theta < 1e-6 {
            let lerped = Quat::new(
                q0.w + (b.w - q0.w) * u,
                q0.x + (b.x - q0.x) * u,
                q0.y + (b.y - q0.y) * u,
                q0.z + (b.z - q0.z) * u,
            );
            return lerped.normalized();
        }
        let sin_theta = theta.sin();
        let wa = ((1.0 - u) * theta).sin() / sin_theta;
        let wb = (u * theta).sin() / sin_theta;
        Quat::new(
            q0.w * wa + b.w * wb,
            q0.x * wa + b.x * wb,
            q0.y * wa + b.y * wb,
            q0.z * wa + b.z * wb,
        )
    }
}

impl Mul for Quat {
    type Output = Quat;

    fn mul(self, r: Quat) -> Quat {
        Quat::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn slerp_endpoints() {
        let q0 = Quat::IDENTITY;
        let q1 = Quat::from_axis_angle(Vec3::Z, FRAC_PI_2).unwrap();
        assert_eq!(Quat::slerp(q0, q1, 0.0), q0);
        assert_eq!(Quat::slerp(q0, q1, 1.0), q1);
    }

    #[test]
    fn slerp_halfway_is_quarter_turn() {
        let q0 = Quat::IDENTITY;
        let q1 = Quat::from_axis_angle(Vec3::Z, FRAC_PI_2).unwrap();
        let mid = Quat::slerp(q0, q1, 0.5);
        let expect = Quat::from_axis_angle(Vec3::Z, FRAC_PI_4).unwrap();
        assert!((mid.dot(expect).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn slerp_takes_shorter_arc() {
        let q0 = Quat::from_axis_angle(Vec3::Z, 0.1).unwrap();
        let q1 = Quat::from_axis_angle(Vec3::Z, 0.4).unwrap().scaled(-1.0);
        let mid = Quat::slerp(q0, q1, 0.5);
        let expect = Quat::from_axis_angle(Vec3::Z, 0.25).unwrap();
        assert!((mid.dot(expect).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rotation_roundtrip_through_matrix() {
        let q = Quat::from_axis_angle(Vec3::new(0.3, -1.0, 0.8), 1.9).unwrap();
        let back = Quat::from_rotation_mat4(&q.to_mat4());
        // Same rotation up to quaternion sign.
        assert!((q.dot(back).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rotate_vec_matches_matrix() {
        let q = Quat::from_axis_angle(Vec3::new(1.0, 1.0, 0.2), -0.7).unwrap();
        let v = Vec3::new(0.5, -2.0, 3.0);
        let a = q.rotate_vec(v);
        let b = q.to_mat4().transform_point(v);
        assert!((a - b).length() < 1e-12);
    }
}
