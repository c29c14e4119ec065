//! Seeded random polynomial corpora for the inequality suites. All
//! generation is ChaCha8-seeded so reports are reproducible.

use crate::exact::{rat, Qc};
use crate::sphere::{Monomial, SpherePolynomial};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random holomorphic polynomials of degree <= max_deg with small
/// integer coefficients (guaranteed nonzero).
pub fn seeded_holomorphic(seed: u64, count: usize, max_deg: u32) -> Vec<SpherePolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = SpherePolynomial::zero();
        for a in 0..=max_deg {
            for b in 0..=(max_deg - a) {
                // Sparse-ish coefficients in {-3..3} + i{-3..3}.
                if rng.random_range(0..3) == 0 {
                    let re = rng.random_range(-3..=3i64);
                    let im = rng.random_range(-3..=3i64);
                    if re != 0 || im != 0 {
                        p = p.add(&SpherePolynomial::monomial(
                            Monomial::new(a, b, 0, 0),
                            Qc::new(rat(re, 1), rat(im, 1)),
                        ));
                    }
                }
            }
        }
        if !p.is_zero() {
            out.push(p);
        }
    }
    out
}

/// Random real circular potentials: sums c (m + conj m) over monomials
/// with equal holomorphic and antiholomorphic degree, with small
/// rational coefficients scaled by `amplitude`.
pub fn seeded_circular_potentials(
    seed: u64,
    count: usize,
    amplitude: (i64, i64),
) -> Vec<SpherePolynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Circular monomials of low degree: a + b == c + d.
    let pool: Vec<Monomial> = [
        (1u32, 0u32, 1u32, 0u32),
        (0, 1, 0, 1),
        (1, 0, 0, 1),
        (2, 0, 2, 0),
        (0, 2, 0, 2),
        (1, 1, 1, 1),
        (2, 0, 1, 1),
        (1, 1, 2, 0),
        (2, 0, 0, 2),
        (2, 1, 2, 1),
    ]
    .iter()
    .map(|&(a, b, c, d)| Monomial::new(a, b, c, d))
    .collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = SpherePolynomial::zero();
        for m in &pool {
            if rng.random_range(0..3) == 0 {
                let num = rng.random_range(-amplitude.0..=amplitude.0);
                if num != 0 {
                    let c = Qc::from_rat(rat(num, amplitude.1));
                    let mono = SpherePolynomial::monomial(*m, c);
                    p = p.add(&mono).add(&mono.conj());
                }
            }
        }
        if !p.is_zero() {
            debug_assert!(p.is_real());
            out.push(p);
        }
    }
    out
}

/// Random invertible 2x2 complex matrices (rows reasonably conditioned)
/// for the linear-image equality cases.
pub fn seeded_linear_images(seed: u64, count: usize) -> Vec<[Complex64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut draw = || {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        };
        let (a, b, c, d) = (draw(), draw(), draw(), draw());
        let det = a * d - b * c;
        if det.norm() > 0.3 {
            out.push([a, b, c, d]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = seeded_holomorphic(7, 5, 4);
        let b = seeded_holomorphic(7, 5, 4);
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
        let c = seeded_holomorphic(8, 5, 4);
        assert!(a.iter().zip(&c).any(|(x, y)| x != y));
    }

    #[test]
    fn circular_potentials_are_circular_and_real() {
        for p in seeded_circular_potentials(3, 10, (2, 10)) {
            assert!(p.is_real());
            assert!(crate::sphere::t(&p).is_zero());
        }
    }

    #[test]
    fn linear_images_invertible() {
        for m in seeded_linear_images(11, 8) {
            assert!((m[0] * m[3] - m[1] * m[2]).norm() > 0.3);
        }
    }
}
