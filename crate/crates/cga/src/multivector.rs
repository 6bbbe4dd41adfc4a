use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use math3d::Vec3;

/// Basis vector bit assignments inside a blade mask.
pub(crate) const E1: usize = 1 << 0;
pub(crate) const E2: usize = 1 << 1;
pub(crate) const E3: usize = 1 << 2;
pub(crate) const EPLUS: usize = 1 << 3;
pub(crate) const EMINUS: usize = 1 << 4;

const DIM: usize = 32;

/// Dense multivector of the conformal algebra: 32 coefficients indexed by
/// blade bitmask over `(e1, e2, e3, e+, e-)`, bit i set = basis vector i
/// present, vectors in ascending order within a blade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector {
    pub(crate) c: [f64; 32],
}

/// Sign of the basis-blade product `blade(a) * blade(b)`: the number of
/// transpositions needed to interleave the two sorted vector lists, plus the
/// metric factor for annihilated pairs (only e- squares to -1).
fn blade_sign(a: usize, b: usize) -> f64 {
    let mut x = a >> 1;
    let mut swaps = 0u32;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    let mut sign = if swaps % 2 == 0 { 1.0 } else { -1.0 };
    if a & b & EMINUS != 0 {
        sign = -sign;
    }
    sign
}

/// 32x32 Cayley table: entry `(i, j)` is the signed result blade of
/// `blade(i) * blade(j)`. The result mask is always `i ^ j`.
fn cayley() -> &'static [[f64; DIM]; DIM] {
    static TABLE: OnceLock<[[f64; DIM]; DIM]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0.0; DIM]; DIM];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = blade_sign(i, j);
            }
        }
        t
    })
}

impl Multivector {
    pub const ZERO: Multivector = Multivector { c: [0.0; 32] };

    pub fn scalar(s: f64) -> Multivector {
        let mut mv = Multivector::ZERO;
        mv.c[0] = s;
        mv
    }

    /// Basis vector by index 0..=4 (e1, e2, e3, e+, e-).
    pub fn basis_vector(i: usize) -> Multivector {
        assert!(i < 5);
        let mut mv = Multivector::ZERO;
        mv.c[1 << i] = 1.0;
        mv
    }

    /// Euclidean vector `x e1 + y e2 + z e3`.
    pub fn from_vec3(v: Vec3) -> Multivector {
        let mut mv = Multivector::ZERO;
        mv.c[E1] = v.x;
        mv.c[E2] = v.y;
        mv.c[E3] = v.z;
        mv
    }

    /// Null origin `e_o = (e- - e+) / 2`.
    pub fn e_o() -> Multivector {
        let mut mv = Multivector::ZERO;
        mv.c[EPLUS] = -0.5;
        mv.c[EMINUS] = 0.5;
        mv
    }

    /// Null infinity `e_inf = e- + e+`.
    pub fn e_inf() -> Multivector {
        let mut mv = Multivector::ZERO;
        mv.c[EPLUS] = 1.0;
        mv.c[EMINUS] = 1.0;
        mv
    }

    #[inline]
    pub fn coeff(&self, blade: usize) -> f64 {
        self.c[blade]
    }

    #[inline]
    pub fn set_coeff(&mut self, blade: usize, v: f64) {
        self.c[blade] = v;
    }

    #[inline]
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// Coefficient of `e_o` when the multivector is written over the null
    /// basis: with `a = coeff(e+)`, `b = coeff(e-)`, this is `b - a`.
    pub fn e_o_coeff(&self) -> f64 {
        self.c[EMINUS] - self.c[EPLUS]
    }

    /// Coefficient of `e_inf` over the null basis: `(a + b) / 2`.
    pub fn e_inf_coeff(&self) -> f64 {
        (self.c[EPLUS] + self.c[EMINUS]) / 2.0
    }

    pub fn euclidean_part(&self) -> Vec3 {
        Vec3::new(self.c[E1], self.c[E2], self.c[E3])
    }

    pub fn geometric_product(&self, rhs: &Multivector) -> Multivector {
        let table = cayley();
        let mut out = Multivector::ZERO;
        for i in 0..DIM {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            let signs = &table[i];
            for j in 0..DIM {
                let b = rhs.c[j];
                if b == 0.0 {
                    continue;
                }
                out.c[i ^ j] += signs[j] * a * b;
            }
        }
        out
    }

    /// Outer product: the grade-raising part, i.e. only blade pairs with no
    /// common basis vector contribute.
    pub fn wedge(&self, rhs: &Multivector) -> Multivector {
        let table = cayley();
        let mut out = Multivector::ZERO;
        for i in 0..DIM {
            let a = self.c[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..DIM {
                if i & j != 0 {
                    continue;
                }
                let b = rhs.c[j];
                if b == 0.0 {
                    continue;
                }
                out.c[i | j] += table[i][j] * a * b;
            }
        }
        out
    }

    /// Reversion: each grade-g blade picks up `(-1)^(g(g-1)/2)`.
    pub fn reverse(&self) -> Multivector {
        let mut out = *self;
        for (blade, v) in out.c.iter_mut().enumerate() {
            let g = (blade as u32).count_ones();
            if (g * (g.saturating_sub(1)) / 2) % 2 == 1 {
                *v = -*v;
            }
        }
        out
    }

    pub fn grade_part(&self, grade: u32) -> Multivector {
        let mut out = Multivector::ZERO;
        for blade in 0..DIM {
            if (blade as u32).count_ones() == grade {
                out.c[blade] = self.c[blade];
            }
        }
        out
    }

    /// True when every coefficient lies in an even-grade blade.
    pub fn is_even(&self, tol: f64) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(blade, v)| (blade as u32).count_ones() % 2 == 0 || v.abs() <= tol)
    }

    pub fn max_abs_diff(&self, rhs: &Multivector) -> f64 {
        self.c
            .iter()
            .zip(rhs.c.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Multivector, tol: f64) -> bool {
        self.max_abs_diff(rhs) <= tol
    }

    pub fn scaled(&self, s: f64) -> Multivector {
        let mut out = *self;
        for v in &mut out.c {
            *v *= s;
        }
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for (o, r) in out.c.iter_mut().zip(rhs.c.iter()) {
            *o += r;
        }
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for (o, r) in out.c.iter_mut().zip(rhs.c.iter()) {
            *o -= r;
        }
        out
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scaled(-1.0)
    }
}

/// `*` is the geometric product.
impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.geometric_product(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scaled(s)
    }
}
