//! Deterministic random generators for vectors, sphere vectors, and
//! sign sequences, shared by the property suites and the CLI sweeps.
//!
//! Sphere vectors need exact unit p-th-power sums on an admissible set,
//! so the magnitudes are built multiplicatively: telescoping splits keep
//! the sums rational at p = 2 (Pythagorean triples) and p = 3 (integer
//! cube identities). Sum-of-two-cubes solutions do not exist, so p = 3
//! supports never have size 2.

use num::{BigRational, One, Zero};
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::family::enumerate;
use crate::finset::FinSet;
use crate::norm::{is_on_sphere, Exponent};
use crate::ordinal::Ordinal;
use crate::rational::ratio;
use crate::signs::SignSeq;
use crate::vector::FinVector;

/// A decorrelated per-sample generator, stable across job counts.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// A random vector with support inside `{1..max_index}` and coordinates
/// `+/- num/den`, `1 <= num, den <= max_abs`. May be zero.
pub fn random_vector(
    rng: &mut ChaCha8Rng,
    max_index: u32,
    max_support: usize,
    max_abs: i64,
) -> FinVector {
    let size = rng.random_range(0..=max_support.min(max_index as usize));
    let mut indices: Vec<u32> = (1..=max_index).collect();
    let mut pairs = Vec::with_capacity(size);
    for _ in 0..size {
        let k = rng.random_range(0..indices.len());
        let i = indices.swap_remove(k);
        let num = rng.random_range(1..=max_abs);
        let den = rng.random_range(1..=max_abs);
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        pairs.push((i, ratio(sign * num, den)));
    }
    FinVector::from_pairs(pairs).expect("distinct indices by construction")
}

/// A uniformly random sign sequence of the given length.
pub fn random_signs(rng: &mut ChaCha8Rng, len: usize) -> SignSeq {
    SignSeq::new(
        (0..len)
            .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
            .collect(),
    )
    .expect("signs are +/-1")
}

const PYTHAGOREAN: &[(i64, i64, i64)] = &[
    (3, 4, 5),
    (5, 12, 13),
    (8, 15, 17),
    (7, 24, 25),
    (20, 21, 29),
    (9, 40, 41),
];

// a^3 + b^3 + c^3 = d^3
const CUBE_TRIPLES: &[(i64, i64, i64, i64)] = &[
    (3, 4, 5, 6),
    (1, 6, 8, 9),
    (7, 14, 17, 20),
    (2, 17, 40, 41),
    (4, 17, 22, 25),
    (18, 19, 21, 28),
    (11, 15, 27, 29),
];

// 11^3 + 12^3 + 13^3 + 14^3 = 20^3
const CUBE_QUAD: (i64, i64, i64, i64, i64) = (11, 12, 13, 14, 20);
// 1^3 + 3^3 + 4^3 + 5^3 + 8^3 = 9^3
const CUBE_QUINT: (i64, i64, i64, i64, i64, i64) = (1, 3, 4, 5, 8, 9);

/// `size` positive rational magnitudes whose p-th powers sum to 1
/// exactly. For p = 3, `size = 2` is impossible and panics; callers
/// resample the support instead.
pub fn unit_magnitudes(rng: &mut ChaCha8Rng, size: usize, p: u32) -> Vec<BigRational> {
    assert!(size >= 1);
    match p {
        1 => {
            let parts: Vec<i64> = (0..size).map(|_| rng.random_range(1..=9)).collect();
            let total: i64 = parts.iter().sum();
            parts.into_iter().map(|u| ratio(u, total)).collect()
        }
        2 => {
            let mut mags = vec![BigRational::one()];
            while mags.len() < size {
                let k = rng.random_range(0..mags.len());
                let &(a, b, c) = PYTHAGOREAN.choose(rng).expect("nonempty pool");
                let v = mags.swap_remove(k);
                mags.push(&v * ratio(a, c));
                mags.push(&v * ratio(b, c));
            }
            mags
        }
        3 => {
            assert!(size != 2, "no two-term rational unit cube sums exist");
            let mut mags: Vec<BigRational> = match size % 2 {
                _ if size == 1 => vec![BigRational::one()],
                _ if size % 2 == 0 => {
                    let (a, b, c, d, e) = CUBE_QUAD;
                    [a, b, c, d].iter().map(|&t| ratio(t, e)).collect()
                }
                _ => {
                    if size >= 5 && rng.random_bool(0.3) {
                        let (a, b, c, d, e, f) = CUBE_QUINT;
                        [a, b, c, d, e].iter().map(|&t| ratio(t, f)).collect()
                    } else {
                        let &(a, b, c, d) = CUBE_TRIPLES.choose(rng).expect("nonempty pool");
                        [a, b, c].iter().map(|&t| ratio(t, d)).collect()
                    }
                }
            };
            while mags.len() < size {
                let k = rng.random_range(0..mags.len());
                let &(a, b, c, d) = CUBE_TRIPLES.choose(rng).expect("nonempty pool");
                let v = mags.swap_remove(k);
                mags.push(&v * ratio(a, d));
                mags.push(&v * ratio(b, d));
                mags.push(&v * ratio(c, d));
            }
            mags
        }
        _ => panic!("unit magnitudes implemented for p in {{1, 2, 3}}"),
    }
}

/// Samples exact sphere vectors of `X_{S_alpha, p}` with support inside
/// `{1..universe}`.
pub struct SphereSampler {
    alpha: Ordinal,
    members: Vec<FinSet>,
    universe: u32,
}

impl SphereSampler {
    pub fn new(alpha: Ordinal, universe: u32) -> Result<Self, Error> {
        let members: Vec<FinSet> = enumerate(alpha, universe)?
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect();
        Ok(SphereSampler {
            alpha,
            members,
            universe,
        })
    }

    pub fn alpha(&self) -> Ordinal {
        self.alpha
    }

    /// A random admissible nonempty set.
    pub fn random_member(&self, rng: &mut ChaCha8Rng) -> &FinSet {
        self.members.choose(rng).expect("nonempty family")
    }

    /// A sphere vector at exact exponent `p` in `{1, 2, 3}`: unit
    /// magnitudes placed on an admissible set with random signs,
    /// occasionally padded with small off-set coordinates (kept only
    /// when the vector verifiably stays on the sphere).
    pub fn sample(&self, rng: &mut ChaCha8Rng, p: u32) -> FinVector {
        let exp = Exponent::Exact(p);
        loop {
            let f = self.random_member(rng);
            if p == 3 && f.len() == 2 {
                continue;
            }
            let mags = unit_magnitudes(rng, f.len(), p);
            let base: Vec<(u32, BigRational)> = f
                .iter()
                .zip(mags)
                .map(|(i, m)| (i, if rng.random_bool(0.5) { -m } else { m }))
                .collect();
            let x = FinVector::from_pairs(base.clone()).expect("distinct indices");
            debug_assert!(matches!(is_on_sphere(&x, self.alpha, &exp), Ok(true)));

            if rng.random_bool(0.5) {
                if let Some(padded) = self.try_pad(rng, &x, &exp) {
                    return padded;
                }
            }
            return x;
        }
    }

    /// Adds up to two tiny coordinates outside the current support; the
    /// candidate is kept only if it still lies on the sphere exactly.
    fn try_pad(&self, rng: &mut ChaCha8Rng, x: &FinVector, exp: &Exponent) -> Option<FinVector> {
        let supp = x.support();
        let free: Vec<u32> = (1..=self.universe).filter(|&i| !supp.contains(i)).collect();
        if free.is_empty() {
            return None;
        }
        let mut candidate = x.clone();
        for _ in 0..rng.random_range(1..=2usize) {
            let &i = free.choose(rng)?;
            if !candidate.coord(i).is_zero() {
                continue;
            }
            let small = ratio(1, rng.random_range(16..=64));
            let signed = if rng.random_bool(0.5) { -small } else { small };
            candidate = candidate.with_coord(i, signed);
        }
        match is_on_sphere(&candidate, self.alpha, exp) {
            Ok(true) => Some(candidate),
            _ => None,
        }
    }

    /// A batch of pairwise distinct sphere vectors.
    pub fn sample_distinct(&self, rng: &mut ChaCha8Rng, p: u32, count: usize) -> Vec<FinVector> {
        let mut out: Vec<FinVector> = Vec::with_capacity(count);
        let mut guard = 0;
        while out.len() < count {
            let x = self.sample(rng, p);
            if !out.contains(&x) {
                out.push(x);
            }
            guard += 1;
            assert!(guard < count * 1000, "sphere sampling stalled");
        }
        out
    }
}
