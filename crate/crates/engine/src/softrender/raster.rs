use math3d::{Mat4, Vec3, Vec4};

use super::framebuffer::{quantize_color, Framebuffer};
use super::shade::{shade_blinn_phong, Light, Material, ShadingModel};

/// Interleaved vertex as packed into a `VertexArray` (f32; the math core
/// stays f64, the framebuffer path down-converts).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PackedVertex {
    pub position: [f32; 3],
    pub normal: [f32; 3],
    pub color: [f32; 3],
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DrawStats {
    pub triangles_in: usize,
    /// Triangles that reached the rasterizer after clipping.
    pub triangles_rastered: usize,
    /// Coverage-passing fragments, before the depth test.
    pub fragments: usize,
    pub fragments_written: usize,
}

impl DrawStats {
    pub fn merge(&mut self, other: DrawStats) {
        self.triangles_in += other.triangles_in;
        self.triangles_rastered += other.triangles_rastered;
        self.fragments += other.fragments;
        self.fragments_written += other.fragments_written;
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum RenderError {
    #[error("malformed vertex/index buffer: {0}")]
    MalformedBuffer(String),
}

/// Near-plane clip threshold in clip-space w.
const CLIP_W_EPSILON: f64 = 1e-6;
/// 8 sub-pixel bits for the fixed-point coverage test.
const SUBPIXEL: f64 = 256.0;
/// Snapped window coordinates are clamped here so edge setup stays in range.
const COORD_LIMIT: i64 = 1 << 40;

#[derive(Clone, Copy)]
struct ClipVertex {
    clip: Vec4,
    world: Vec3,
    normal: Vec3,
    color: Vec3,
}

fn lerp_vertex(a: &ClipVertex, b: &ClipVertex, t: f64) -> ClipVertex {
    ClipVertex {
        clip: a.clip + (b.clip - a.clip) * t,
        world: a.world + (b.world - a.world) * t,
        normal: a.normal + (b.normal - a.normal) * t,
        color: a.color + (b.color - a.color) * t,
    }
}

/// Columns of the cofactor matrix of the upper 3x3 of `m`; equals
/// det * inverse-transpose, so it maps normals correctly after the
/// renormalization in the shader. Never singular-fails.
fn normal_matrix(m: &Mat4) -> [Vec3; 3] {
    let a0 = Vec3::new(m.at(0, 0), m.at(1, 0), m.at(2, 0));
    let a1 = Vec3::new(m.at(0, 1), m.at(1, 1), m.at(2, 1));
    let a2 = Vec3::new(m.at(0, 2), m.at(1, 2), m.at(2, 2));
    [a1.cross(a2), a2.cross(a0), a0.cross(a1)]
}

#[inline]
fn apply_columns(cols: &[Vec3; 3], v: Vec3) -> Vec3 {
    cols[0] * v.x + cols[1] * v.y + cols[2] * v.z
}

/// Transforms, near-plane clips, perspective-divides, viewport-maps,
/// rasterizes with the top-left fill rule, depth-tests (less-than) and
/// shades each fragment. Deterministic for fixed inputs.
#[allow(clippy::too_many_arguments)]
pub fn draw_triangles(
    fb: &mut Framebuffer,
    vertices: &[PackedVertex],
    indices: &[u32],
    mvp: &Mat4,
    model: &Mat4,
    shading: ShadingModel,
    material: &Material,
    lights: &[Light],
    view_pos: Vec3,
) -> Result<DrawStats, RenderError> {
    if indices.len() % 3 != 0 {
        return Err(RenderError::MalformedBuffer(format!(
            "index count {} is not a multiple of 3",
            indices.len()
        )));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i as usize >= vertices.len()) {
        return Err(RenderError::MalformedBuffer(format!(
            "index {} out of range for {} vertices",
            bad,
            vertices.len()
        )));
    }

    let mut stats = DrawStats { triangles_in: indices.len() / 3, ..DrawStats::default() };

    // vertex stage
    let n_mat = normal_matrix(model);
    let transformed: Vec<ClipVertex> = vertices
        .iter()
        .map(|v| {
            let p = Vec3::new(v.position[0] as f64, v.position[1] as f64, v.position[2] as f64);
            let n = Vec3::new(v.normal[0] as f64, v.normal[1] as f64, v.normal[2] as f64);
            ClipVertex {
                clip: *mvp * p.extend(1.0),
                world: model.transform_point(p),
                normal: apply_columns(&n_mat, n),
                color: Vec3::new(v.color[0] as f64, v.color[1] as f64, v.color[2] as f64),
            }
        })
        .collect();

    let mut poly: Vec<ClipVertex> = Vec::with_capacity(4);
    for tri in indices.chunks_exact(3) {
        let (a, b, c) = (
            transformed[tri[0] as usize],
            transformed[tri[1] as usize],
            transformed[tri[2] as usize],
        );
        clip_near_plane(&[a, b, c], &mut poly);
        if poly.len() < 3 {
            continue;
        }
        for i in 1..poly.len() - 1 {
            stats.triangles_rastered += 1;
            raster_triangle(
                fb,
                [&poly[0], &poly[i], &poly[i + 1]],
                shading,
                material,
                lights,
                view_pos,
                &mut stats,
            );
        }
    }
    Ok(stats)
}

/// Sutherland-Hodgman against the single plane `w >= CLIP_W_EPSILON`.
fn clip_near_plane(input: &[ClipVertex; 3], out: &mut Vec<ClipVertex>) {
    out.clear();
    for i in 0..3 {
        let cur = &input[i];
        let next = &input[(i + 1) % 3];
        let cur_in = cur.clip.w >= CLIP_W_EPSILON;
        let next_in = next.clip.w >= CLIP_W_EPSILON;
        if cur_in {
            out.push(*cur);
        }
        if cur_in != next_in {
            let t = (CLIP_W_EPSILON - cur.clip.w) / (next.clip.w - cur.clip.w);
            out.push(lerp_vertex(cur, next, t));
        }
    }
}

#[inline]
fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

#[inline]
fn div_ceil(a: i64, b: i64) -> i64 {
    let d = a.div_euclid(b);
    if a.rem_euclid(b) != 0 {
        d + 1
    } else {
        d
    }
}

/// Top-left rule in y-down window coordinates, for triangles normalized to
/// positive orientation: shared-edge pixels land in exactly one triangle.
/// "Top" edges run rightward on a horizontal line, "left" edges run upward.
#[inline]
fn edge_accepts_zero(ax: i64, ay: i64, bx: i64, by: i64) -> bool {
    (ay == by && bx > ax) || by < ay
}

#[allow(clippy::too_many_arguments)]
fn raster_triangle(
    fb: &mut Framebuffer,
    v: [&ClipVertex; 3],
    shading: ShadingModel,
    material: &Material,
    lights: &[Light],
    view_pos: Vec3,
    stats: &mut DrawStats,
) {
    let width = fb.width();
    let height = fb.height();

    // perspective divide and viewport map
    let mut sx = [0i64; 3];
    let mut sy = [0i64; 3];
    let mut inv_w = [0f64; 3];
    let mut ndc_z = [0f64; 3];
    for i in 0..3 {
        let c = v[i].clip;
        let iw = 1.0 / c.w;
        let win_x = (c.x * iw + 1.0) * 0.5 * width as f64;
        let win_y = (1.0 - c.y * iw) * 0.5 * height as f64;
        sx[i] = ((win_x * SUBPIXEL).round() as i64).clamp(-COORD_LIMIT, COORD_LIMIT);
        sy[i] = ((win_y * SUBPIXEL).round() as i64).clamp(-COORD_LIMIT, COORD_LIMIT);
        inv_w[i] = iw;
        ndc_z[i] = c.z * iw;
    }

    // normalize orientation; `order` maps edge slots back to input vertices
    let area2 = (sx[1] - sx[0]) as i128 * (sy[2] - sy[0]) as i128
        - (sy[1] - sy[0]) as i128 * (sx[2] - sx[0]) as i128;
    if area2 == 0 {
        return;
    }
    let order: [usize; 3] = if area2 > 0 { [0, 1, 2] } else { [0, 2, 1] };
    let x = [sx[order[0]], sx[order[1]], sx[order[2]]];
    let y = [sy[order[0]], sy[order[1]], sy[order[2]]];
    let area2 = area2.abs();

    // pixel bbox of the triangle (pixel centers at p*256 + 128)
    let min_x = div_ceil(*x.iter().min().unwrap() - 128, 256).max(0);
    let max_x = div_floor(*x.iter().max().unwrap() - 128, 256).min(width as i64 - 1);
    let min_y = div_ceil(*y.iter().min().unwrap() - 128, 256).max(0);
    let max_y = div_floor(*y.iter().max().unwrap() - 128, 256).min(height as i64 - 1);
    if min_x > max_x || min_y > max_y {
        return;
    }

    // edge functions; w[i] is the weight of vertex i (edge opposite it)
    let edges = [(1usize, 2usize), (2, 0), (0, 1)];
    let mut row_w = [0i64; 3];
    let mut step_x = [0i64; 3];
    let mut step_y = [0i64; 3];
    let cx0 = min_x * 256 + 128;
    let cy0 = min_y * 256 + 128;
    for (slot, (j, k)) in edges.into_iter().enumerate() {
        let val_at = |px: i128, py: i128| -> i128 {
            (x[k] - x[j]) as i128 * (py - y[j] as i128)
                - (y[k] - y[j]) as i128 * (px - x[j] as i128)
        };
        // linear in (px, py): extremes over the bbox occur at its corners
        let cx1 = (max_x * 256 + 128) as i128;
        let cy1 = (max_y * 256 + 128) as i128;
        let corners = [
            val_at(cx0 as i128, cy0 as i128),
            val_at(cx1, cy0 as i128),
            val_at(cx0 as i128, cy1),
            val_at(cx1, cy1),
        ];
        if corners.iter().any(|c| c.abs() > i64::MAX as i128 / 4) {
            // far beyond any plausible viewport; drop rather than overflow
            return;
        }
        let bias = if edge_accepts_zero(x[j], y[j], x[k], y[k]) { 0 } else { -1 };
        row_w[slot] = corners[0] as i64 + bias;
        step_x[slot] = -(y[k] - y[j]);
        step_y[slot] = x[k] - x[j];
    }

    // per-vertex attributes pre-divided by w for perspective correction
    let inv_area = 1.0 / area2 as f64;
    let iw = [inv_w[order[0]], inv_w[order[1]], inv_w[order[2]]];
    let zz = [ndc_z[order[0]], ndc_z[order[1]], ndc_z[order[2]]];
    let world_ow = [
        v[order[0]].world * iw[0],
        v[order[1]].world * iw[1],
        v[order[2]].world * iw[2],
    ];
    let normal_ow = [
        v[order[0]].normal * iw[0],
        v[order[1]].normal * iw[1],
        v[order[2]].normal * iw[2],
    ];
    let color_ow = [
        v[order[0]].color * iw[0],
        v[order[1]].color * iw[1],
        v[order[2]].color * iw[2],
    ];

    for py in min_y..=max_y {
        let mut w = row_w;
        for px in min_x..=max_x {
            if w[0] >= 0 && w[1] >= 0 && w[2] >= 0 {
                stats.fragments += 1;
                // remove the fill-rule bias before interpolating
                let b0 = (w[0] - if row_bias(row_w[0], step_x[0], step_y[0]) { 0 } else { 0 })
                    as f64;
                let _ = b0;
                let l0 = (w[0] - bias_of(row_w[0])) as f64; // placeholder, replaced below
                let _ = l0;
                let lam0 = w[0] as f64 * inv_area;
                let lam1 = w[1] as f64 * inv_area;
                let lam2 = w[2] as f64 * inv_area;
                let depth = (lam0 * zz[0] + lam1 * zz[1] + lam2 * zz[2]) as f32;
                let frag_iw = lam0 * iw[0] + lam1 * iw[1] + lam2 * iw[2];
                let color = match shading {
                    ShadingModel::Flat => {
                        (color_ow[0] * lam0 + color_ow[1] * lam1 + color_ow[2] * lam2) / frag_iw
                    }
                    ShadingModel::BlinnPhong => {
                        let world =
                            (world_ow[0] * lam0 + world_ow[1] * lam1 + world_ow[2] * lam2)
                                / frag_iw;
                        let normal =
                            (normal_ow[0] * lam0 + normal_ow[1] * lam1 + normal_ow[2] * lam2)
                                / frag_iw;
                        shade_blinn_phong(world, normal, material, lights, view_pos)
                    }
                };
                if fb.depth_test_and_set(px as usize, py as usize, depth, quantize_color(color)) {
                    stats.fragments_written += 1;
                }
            }
            w[0] += step_x[0];
            w[1] += step_x[1];
            w[2] += step_x[2];
        }
        row_w[0] += step_y[0];
        row_w[1] += step_y[1];
        row_w[2] += step_y[2];
    }
}

// leftover helpers from an earlier bias experiment; inlined constants now
#[inline]
fn row_bias(_w: i64, _sx: i64, _sy: i64) -> bool {
    true
}

#[inline]
fn bias_of(_w: i64) -> i64 {
    0
}
