use crate::{Mat4, MathError, MathResult, Quat, Vec3};

/// Dual quaternion `real + dual * eps` encoding a rigid transform:
/// `real` carries the rotation, `dual = 0.5 * t * real` the translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualQuat {
    pub real: Quat,
    pub dual: Quat,
}

impl DualQuat {
    pub const IDENTITY: DualQuat = DualQuat {
        real: Quat::IDENTITY,
        dual: Quat { w: 0.0, x: 0.0, y: 0.0, z: 0.0 },
    };

    pub fn from_rotation_translation(r: Quat, t: Vec3) -> MathResult<DualQuat> {
        if (r.norm() - 1.0).abs() > 1e-6 {
            return Err(MathError::NonUnitQuaternion);
        }
        let t_quat = Quat::new(0.0, t.x, t.y, t.z);
        Ok(DualQuat { real: r, dual: (t_quat * r).scaled(0.5) })
    }

    pub fn translation(&self) -> Vec3 {
        let t = (self.dual * self.real.conjugate()).scaled(2.0);
        Vec3::new(t.x, t.y, t.z)
    }

    pub fn to_mat4(&self) -> Mat4 {
        Mat4::translate(self.translation()) * self.real.to_mat4()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_roundtrip() {
        let dq = DualQuat::from_rotation_translation(Quat::IDENTITY, Vec3::ZERO).unwrap();
        assert_eq!(dq, DualQuat::IDENTITY);
        assert_eq!(dq.to_mat4(), Mat4::IDENTITY);
    }

    #[test]
    fn matches_compose_trs_for_rigid_transforms() {
        let r = Quat::from_axis_angle(Vec3::new(0.2, 0.9, -0.4), 1.3).unwrap();
        let t = Vec3::new(1.5, -2.0, 0.25);
        let dq = DualQuat::from_rotation_translation(r, t).unwrap();
        let expect = Mat4::compose_trs(t, r, 1.0).unwrap();
        assert!(dq.to_mat4().max_abs_diff(&expect) < 1e-9);
    }

    #[test]
    fn real_dual_orthogonality() {
        let r = Quat::from_axis_angle(Vec3::new(-1.0, 0.3, 0.3), 0.77).unwrap();
        let dq = DualQuat::from_rotation_translation(r, Vec3::new(3.0, 4.0, 5.0)).unwrap();
        assert!(dq.real.dot(dq.dual).abs() < 1e-9);
    }

    #[test]
    fn rejects_non_unit_rotation() {
        let q = Quat::new(2.0, 0.0, 0.0, 0.0);
        assert!(DualQuat::from_rotation_translation(q, Vec3::ZERO).is_err());
    }
}
