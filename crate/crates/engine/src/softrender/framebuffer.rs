use std::io::Write;
use std::path::Path;

use math3d::Vec3;

/// RGB8 color buffer plus f32 depth buffer, row 0 at the top.
#[derive(Debug, Clone, PartialEq)]
pub struct Framebuffer {
    width: usize,
    height: usize,
    color: Vec<[u8; 3]>,
    depth: Vec<f32>,
}

/// Linear [0,1] channel to 8 bits; no gamma, round to nearest.
#[inline]
pub fn quantize_channel(c: f64) -> u8 {
    (c.clamp(0.0, 1.0) * 255.0).round() as u8
}

pub fn quantize_color(c: Vec3) -> [u8; 3] {
    [quantize_channel(c.x), quantize_channel(c.y), quantize_channel(c.z)]
}

impl Framebuffer {
    pub const DEPTH_CLEAR: f32 = f32::INFINITY;

    pub fn new(width: usize, height: usize) -> Framebuffer {
        assert!(width > 0 && height > 0, "framebuffer must be non-empty");
        Framebuffer {
            width,
            height,
            color: vec![[0, 0, 0]; width * height],
            depth: vec![Self::DEPTH_CLEAR; width * height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Resets every pixel to `color` and every depth to the +inf sentinel.
    pub fn clear(&mut self, color: Vec3) {
        let c = quantize_color(color);
        self.color.fill(c);
        self.depth.fill(Self::DEPTH_CLEAR);
    }

    #[inline]
    pub fn pixel(&self, x: usize, y: usize) -> [u8; 3] {
        self.color[y * self.width + x]
    }

    #[inline]
    pub fn depth_at(&self, x: usize, y: usize) -> f32 {
        self.depth[y * self.width + x]
    }

    #[inline]
    pub(crate) fn depth_test_and_set(&mut self, x: usize, y: usize, z: f32, c: [u8; 3]) -> bool {
        let idx = y * self.width + x;
        if z < self.depth[idx] {
            self.depth[idx] = z;
            self.color[idx] = c;
            true
        } else {
            false
        }
    }

    /// Binary PPM (P6, maxval 255), top row first. Byte-exact for identical
    /// framebuffers.
    pub fn to_ppm_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.color.len() * 3 + 32);
        out.extend_from_slice(format!("P6\n{} {}\n255\n", self.width, self.height).as_bytes());
        for px in &self.color {
            out.extend_from_slice(px);
        }
        out
    }

    pub fn write_ppm(&self, path: &Path) -> std::io::Result<()> {
        let mut file = std::fs::File::create(path)?;
        file.write_all(&self.to_ppm_bytes())
    }
}
