//! Seeded test-input generators.

use num::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{int, rat, Polynomial, Scalar};

/// Largest denominator used for sampled root coordinates.
pub const GRID_DENOMINATOR: i64 = 16;

/// Expands `prod (x - r) * prod ((x - re)^2 + im^2)` with leading coefficient 1.
pub fn expand_roots(real_roots: &[Scalar], conjugate_pairs: &[(Scalar, Scalar)]) -> Polynomial {
    let mut f = Polynomial::constant(int(1));
    for r in real_roots {
        f = f.mul(&Polynomial::new(vec![-r, int(1)]).expect("nonempty"));
    }
    for (re, im) in conjugate_pairs {
        let quadratic = vec![re * re + im * im, -(re * int(2)), int(1)];
        f = f.mul(&Polynomial::new(quadratic).expect("nonempty"));
    }
    f
}

/// A grid point `k/d` in `(0, limit)`, `d <= 16`, falling back to `1/16`.
fn grid_point(rng: &mut ChaCha8Rng, limit: f64) -> Scalar {
    let d = rng.random_range(1..=GRID_DENOMINATOR);
    let k_max = ((limit * d as f64).ceil() as i64 - 1).max(0);
    if k_max == 0 {
        return rat(1, GRID_DENOMINATOR);
    }
    rat(rng.random_range(1..=k_max), d)
}

/// A stable polynomial of degree `n`: `n / 2` conjugate pairs and `n mod 2`
/// real roots, all with real part in `(-spread, 0)` on a rational grid.
pub fn gen_stable(n: usize, seed: u64, spread: f64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(Scalar, Scalar)> = (0..n / 2)
        .map(|_| {
            let re = -grid_point(&mut rng, spread);
            let im = grid_point(&mut rng, spread + f64::EPSILON);
            (re, im)
        })
        .collect();
    let reals: Vec<Scalar> = (0..n % 2).map(|_| -grid_point(&mut rng, spread)).collect();
    let f = expand_roots(&reals, &pairs);
    debug_assert!(f.constant_term().is_positive());
    f
}

/// Integer coefficients uniform in `[-bound, bound]`, leading coefficient in
/// `[1, bound]`. A zero constant term is kept.
pub fn gen_random(n: usize, seed: u64, coeff_bound: i64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = coeff_bound.max(1);
    let mut coeffs: Vec<Scalar> = (0..n)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect();
    coeffs.push(int(rng.random_range(1..=bound)));
    Polynomial::new(coeffs).expect("nonempty")
}

/// Which generator produced a corpus entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Stable,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub kind: Kind,
    pub seed: u64,
    pub polynomial: Polynomial,
}

/// Per-item seed, decorrelated from neighbouring indices (splitmix64 finalizer).
pub fn item_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `count` inputs: the first half from [`gen_stable`], the rest from
/// [`gen_random`], degrees cycling through `1..=degree_max`.
pub fn corpus(count: usize, degree_max: usize, seed: u64, coeff_bound: i64, spread: f64) -> Vec<Generated> {
    let degree_max = degree_max.max(1);
    let stable_count = count.div_ceil(2);
    (0..count)
        .map(|i| {
            let item = item_seed(seed, i as u64);
            let degree = 1 + i % degree_max;
            let (kind, polynomial) = if i < stable_count {
                (Kind::Stable, gen_stable(degree, item, spread))
            } else {
                (Kind::Random, gen_random(degree, item, coeff_bound))
            };
            Generated {
                kind,
                seed: item,
                polynomial,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_stability, OracleClass, DEFAULT_TOLERANCE};

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand_roots(&[int(-1), int(-2), int(-3)], &[]), poly(&[6, 11, 6, 1]));
        assert_eq!(expand_roots(&[int(-5)], &[]), poly(&[5, 1]));
        assert_eq!(expand_roots(&[], &[(int(-1), int(2))]), poly(&[5, 2, 1]));
    }

    #[test]
    fn random_is_reproducible_with_exact_degree() {
        assert_eq!(gen_random(4, 7, 20), gen_random(4, 7, 20));
        for seed in 0..100 {
            let f = gen_random(4, seed, 20);
            assert_eq!(f.degree(), 4);
            assert!(f.leading().is_positive());
            assert!(f.coeffs().iter().all(|c| c.abs() <= int(20)));
        }
        // the generator does not filter zero constant terms
        assert!((0..500).any(|seed| gen_random(3, seed, 2).constant_term() == &int(0)));
    }

    #[test]
    fn stable_generator_is_sound() {
        for seed in 0..200 {
            let n = 1 + seed as usize % 12;
            let f = gen_stable(n, seed, 4.0);
            assert_eq!(f.degree(), n);
            assert_eq!(gen_stable(n, seed, 4.0), f);
            assert!(f.all_coeffs_positive());
            let v = oracle_stability(&f, DEFAULT_TOLERANCE).unwrap();
            assert_eq!(v.class, OracleClass::Stable, "seed {seed}");
            assert!(v.margin < 0.0);
        }
    }

    #[test]
    fn corpus_is_deterministic_and_split() {
        let a = corpus(20, 5, 42, 20, 4.0);
        assert_eq!(a, corpus(20, 5, 42, 20, 4.0));
        assert_eq!(a.iter().filter(|g| g.kind == Kind::Stable).count(), 10);
        assert!(a.iter().all(|g| (1..=5).contains(&g.polynomial.degree())));
        assert_ne!(a, corpus(20, 5, 43, 20, 4.0));
        assert_eq!(corpus(1, 1, 0, 20, 4.0).len(), 1);
    }

    #[test]
    fn tiny_spread_still_produces_stable_roots() {
        let f = gen_stable(3, 1, 0.01);
        assert!(f.all_coeffs_positive());
    }
}
