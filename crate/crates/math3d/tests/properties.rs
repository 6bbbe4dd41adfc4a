use math3d::{Mat4, Quat, Vec3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rand_unit_vec(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        if let Some(n) = v.normalized() {
            if v.length() > 0.1 {
                return n;
            }
        }
    }
}

fn rand_quat(rng: &mut ChaCha8Rng) -> Quat {
    let axis = rand_unit_vec(rng);
    Quat::from_axis_angle(axis, rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI))
        .unwrap()
}

fn rand_trs(rng: &mut ChaCha8Rng) -> Mat4 {
    let t = Vec3::new(
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
        rng.gen_range(-5.0..5.0),
    );
    let r = rand_quat(rng);
    let s = rng.gen_range(0.2..3.0);
    Mat4::compose_trs(t, r, s).unwrap()
}

#[test]
fn inverse_of_random_trs_is_a_true_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let m = rand_trs(&mut rng);
        let prod = m.inverse().unwrap() * m;
        assert!(prod.max_abs_diff(&Mat4::IDENTITY) < 1e-9);
    }
}

#[test]
fn look_at_rotation_block_is_orthonormal() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..500 {
        let eye = Vec3::new(
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
        );
        let target = eye + rand_unit_vec(&mut rng) * rng.gen_range(0.5..10.0);
        let up = rand_unit_vec(&mut rng);
        let m = match Mat4::look_at(eye, target, up) {
            Ok(m) => m,
            Err(_) => continue, // up happened to be parallel to the view dir
        };
        let rt_r = m.transpose() * m;
        // Translation column makes the full product differ from I; check the
        // 3x3 block only.
        for row in 0..3 {
            for col in 0..3 {
                let expect = if row == col { 1.0 } else { 0.0 };
                assert!((rt_r.at(row, col) - expect).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn slerp_angle_is_linear_in_u() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let q0 = rand_quat(&mut rng);
        let q1 = rand_quat(&mut rng);
        let full = 2.0 * q0.dot(q1).abs().min(1.0).acos();
        for &u in &[0.25, 0.5, 0.75] {
            let q = Quat::slerp(q0, q1, u);
            let part = 2.0 * q0.dot(q).abs().min(1.0).acos();
            assert!(
                (part - u * full).abs() < 1e-7,
                "angle {} vs expected {}",
                part,
                u * full
            );
        }
    }
}

#[test]
fn dual_quat_roundtrip_matches_matrix_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..500 {
        let r = rand_quat(&mut rng);
        let t = Vec3::new(
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
            rng.gen_range(-5.0..5.0),
        );
        let dq = math3d::DualQuat::from_rotation_translation(r, t).unwrap();
        let expect = Mat4::compose_trs(t, r, 1.0).unwrap();
        assert!(dq.to_mat4().max_abs_diff(&expect) < 1e-9);
        assert!(dq.real.dot(dq.dual).abs() < 1e-9);
    }
}

mod prop {
    use super::*;
    use proptest::prelude::*;

    fn arb_quat() -> impl Strategy<Value = Quat> {
        (
            -1.0f64..1.0,
            -1.0f64..1.0,
            -1.0f64..1.0,
            0.1f64..3.0,
        )
            .prop_filter_map("axis too short", |(x, y, z, angle)| {
                Quat::from_axis_angle(Vec3::new(x, y, z), angle).ok()
            })
    }

    proptest! {
        #[test]
        fn slerp_output_stays_unit(q0 in arb_quat(), q1 in arb_quat(), u in 0.0f64..1.0) {
            let q = Quat::slerp(q0, q1, u);
            prop_assert!((q.norm() - 1.0).abs() < 1e-9);
        }

        #[test]
        fn rotation_matrices_preserve_length(q in arb_quat(), x in -5.0f64..5.0, y in -5.0f64..5.0, z in -5.0f64..5.0) {
            let v = Vec3::new(x, y, z);
            let rotated = q.to_mat4().transform_point(v);
            prop_assert!((rotated.length() - v.length()).abs() < 1e-9);
        }
    }
}
