use math3d::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShadingModel {
    /// Per-vertex color interpolation, no lighting.
    Flat,
    /// Ambient + diffuse + half-vector specular per fragment.
    BlinnPhong,
}

/// Point light in world space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Light {
    pub position: Vec3,
    pub color: Vec3,
    pub intensity: f64,
}

impl Light {
    pub fn white(position: Vec3) -> Light {
        Light { position, color: Vec3::ONE, intensity: 1.0 }
    }
}

/// Blinn-Phong material coefficients, all per-channel in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    pub ambient: Vec3,
    pub diffuse: Vec3,
    pub specular: Vec3,
    pub shininess: f64,
}

impl Material {
    /// The scene-file defaults: ambient 0.1, diffuse 0.7, specular 0.3,
    /// shininess 32.
    pub fn default_gray() -> Material {
        Material {
            ambient: Vec3::new(0.1, 0.1, 0.1),
            diffuse: Vec3::new(0.7, 0.7, 0.7),
            specular: Vec3::new(0.3, 0.3, 0.3),
            shininess: 32.0,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("ambient", self.ambient),
            ("diffuse", self.diffuse),
            ("specular", self.specular),
        ] {
            for c in [v.x, v.y, v.z] {
                if !(0.0..=1.0).contains(&c) {
                    return Err(format!("material {name} coefficient {c} outside [0,1]"));
                }
            }
        }
        if self.shininess < 1.0 {
            return Err(format!("shininess {} must be >= 1", self.shininess));
        }
        Ok(())
    }
}

/// `ambient + sum over lights of [kd max(N.L,0) + ks max(N.H,0)^shininess] * light`,
/// `H = normalize(L + V)`, specular gated off for back-facing light, result
/// clamped to [0, 1] per channel.
pub fn shade_blinn_phong(
    world_pos: Vec3,
    normal: Vec3,
    material: &Material,
    lights: &[Light],
    view_pos: Vec3,
) -> Vec3 {
    let mut out = material.ambient;
    let Some(n) = normal.normalized() else {
        return clamp01(out);
    };
    let view = (view_pos - world_pos).normalized();
    for light in lights {
        let Some(l) = (light.position - world_pos).normalized() else {
            continue;
        };
        let n_dot_l = n.dot(l);
        if n_dot_l <= 0.0 {
            continue;
        }
        let radiance = light.color * light.intensity;
        out += material.diffuse.mul_elem(radiance) * n_dot_l;
        if let Some(v) = view {
            if let Some(h) = (l + v).normalized() {
                let n_dot_h = n.dot(h).max(0.0);
                out += material.specular.mul_elem(radiance) * n_dot_h.powf(material.shininess);
            }
        }
    }
    clamp01(out)
}

fn clamp01(c: Vec3) -> Vec3 {
    Vec3::new(c.x.clamp(0.0, 1.0), c.y.clamp(0.0, 1.0), c.z.clamp(0.0, 1.0))
}
