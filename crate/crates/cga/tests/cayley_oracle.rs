//! Brute-force oracle for the geometric product: basis blades are kept as
//! explicit sorted vector lists, multiplied by concatenation, bubble-sorted
//! with sign flips, and contracted pair-by-pair with the metric. This never
//! touches the library's Cayley table.

use cga::Multivector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Metric of (e1, e2, e3, e+, e-).
const METRIC: [f64; 5] = [1.0, 1.0, 1.0, 1.0, -1.0];

/// Multiplies two basis blades symbolically. Returns (sign, result mask).
fn oracle_blade_product(a: usize, b: usize) -> (f64, usize) {
    let mut seq: Vec<usize> = (0..5).filter(|i| a >> i & 1 == 1).collect();
    seq.extend((0..5).filter(|i| b >> i & 1 == 1));
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < seq.len() {
            if seq[i] > seq[i + 1] {
                seq.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if seq[i] == seq[i + 1] {
                sign *= METRIC[seq[i]];
                seq.drain(i..=i + 1);
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let mask = seq.iter().fold(0usize, |m, &i| m | 1 << i);
    (sign, mask)
}

fn oracle_geometric_product(a: &Multivector, b: &Multivector) -> Multivector {
    let mut out = Multivector::ZERO;
    for i in 0..32 {
        if a.coeff(i) == 0.0 {
            continue;
        }
        for j in 0..32 {
            if b.coeff(j) == 0.0 {
                continue;
            }
            let (sign, mask) = oracle_blade_product(i, j);
            out.set_coeff(mask, out.coeff(mask) + sign * a.coeff(i) * b.coeff(j));
        }
    }
    out
}

fn blade(mask: usize) -> Multivector {
    let mut mv = Multivector::ZERO;
    mv.set_coeff(mask, 1.0);
    mv
}

fn rand_multivector(rng: &mut ChaCha8Rng) -> Multivector {
    let mut mv = Multivector::ZERO;
    for i in 0..32 {
        mv.set_coeff(i, rng.gen_range(-2.0..2.0));
    }
    mv
}

#[test]
fn all_basis_blade_products_match_oracle() {
    for i in 0..32 {
        for j in 0..32 {
            let got = blade(i) * blade(j);
            let (sign, mask) = oracle_blade_product(i, j);
            let mut expect = Multivector::ZERO;
            expect.set_coeff(mask, sign);
            assert!(
                got.approx_eq(&expect, 0.0),
                "blade {:#07b} * {:#07b}: got {:?}, oracle sign {} mask {:#07b}",
                i,
                j,
                got,
                sign,
                mask
            );
        }
    }
}

#[test]
fn random_products_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..200 {
        let a = rand_multivector(&mut rng);
        let b = rand_multivector(&mut rng);
        let got = a * b;
        let expect = oracle_geometric_product(&a, &b);
        assert!(got.approx_eq(&expect, 1e-12));
    }
}

#[test]
fn wedge_is_the_grade_raising_part() {
    // For basis blades: a ^ b = a * b when disjoint, else 0.
    for i in 0..32usize {
        for j in 0..32usize {
            let w = blade(i).wedge(&blade(j));
            if i & j == 0 {
                assert!(w.approx_eq(&(blade(i) * blade(j)), 0.0));
            } else {
                assert!(w.approx_eq(&Multivector::ZERO, 0.0));
            }
        }
    }
}

#[test]
fn reverse_is_an_antiautomorphism() {
    // rev(a b) = rev(b) rev(a)
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..100 {
        let a = rand_multivector(&mut rng);
        let b = rand_multivector(&mut rng);
        let lhs = (a * b).reverse();
        let rhs = b.reverse() * a.reverse();
        assert!(lhs.approx_eq(&rhs, 1e-12));
    }
}
