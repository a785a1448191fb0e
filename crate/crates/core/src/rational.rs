//! Rational solutions built from two Pythagorean triples sharing a leg `w`.
//!
//! If `(x1, w, x2)` and `(y1, w, y2)` are right triangles with hypotenuses
//! `x2 < y2`, then `a = x1/w`, `b = y1/w` and
//!
//! ```text
//! c = (x1 y2 + x2 y1) / (w (y2 + x2))   or   c = (x1 y2 - x2 y1) / (w (y2 - x2))
//! ```
//!
//! satisfy the bisector equation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::triple::{Branch, Provenance, StarTriple};

/// A positive solution of `v^2 - u^2 = w^2`: the triangle `(u, w, v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LegPair {
    pub w: u64,
    pub u: u128,
    pub v: u128,
}

/// `value = 2^e0 · Π p^e` with odd primes `p` strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: u64,
    pub e0: u32,
    pub odd_primes: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(value: u64) -> Self {
        assert!(value > 0, "cannot factor 0");
        let e0 = value.trailing_zeros();
        let mut rest = value >> e0;
        let mut odd_primes = Vec::new();
        let mut p = 3u64;
        while p <= rest / p {
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                odd_primes.push((p, e));
            }
            p += 2;
        }
        if rest > 1 {
            odd_primes.push((rest, 1));
        }
        Factorization {
            value,
            e0,
            odd_primes,
        }
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega_total(&self) -> u32 {
        self.e0 + self.odd_primes.iter().map(|&(_, e)| e).sum::<u32>()
    }

    pub fn product(&self) -> u64 {
        self.odd_primes
            .iter()
            .fold(1u64 << self.e0, |acc, &(p, e)| acc * p.pow(e))
    }
}

fn is_composite(n: u64) -> bool {
    n > 1 && Factorization::of(n).omega_total() >= 2
}

/// `w` is a multiple of 4 above 4, twice an odd composite, or an odd composite.
pub fn admissible_w(w: u64) -> bool {
    match w % 4 {
        0 => w > 4,
        2 => is_composite(w / 2),
        _ => is_composite(w),
    }
}

/// Number of positive `(u, v)` with `v^2 - u^2 = w^2`:
/// `((2e0 - 1) Π(2e_i + 1) - 1) / 2` for even `w`, `(Π(2e_i + 1) - 1) / 2` for odd `w`.
pub fn count_leg_pairs(w: u64) -> u64 {
    if w == 0 {
        return 0;
    }
    let fac = Factorization::of(w);
    let odd: u64 = fac
        .odd_primes
        .iter()
        .map(|&(_, e)| 2 * e as u64 + 1)
        .product();
    let total = if fac.e0 > 0 {
        (2 * fac.e0 as u64 - 1) * odd
    } else {
        odd
    };
    (total - 1) / 2
}

/// All leg pairs over `w`, ordered by `u` (equivalently by `v`).
///
/// With `s = v + u` and `t = v - u`: `s t = w^2`, `s > t > 0` and
/// `s ≡ t ≡ w (mod 2)`.
pub fn enumerate_leg_pairs(w: u64) -> Vec<LegPair> {
    let square = (w as u128) * (w as u128);
    let parity = w % 2;
    // t < w, and larger t means smaller u
    (1..w)
        .rev()
        .filter(|&t| t % 2 == parity && square.is_multiple_of(t as u128))
        .filter_map(|t| {
            let (s, t) = (square / t as u128, t as u128);
            (s % 2 == parity as u128).then(|| LegPair {
                w,
                u: (s - t) / 2,
                v: (s + t) / 2,
            })
        })
        .collect()
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// The two triples built from an ordered pair of leg pairs over the same `w`.
fn pair_triples(x: &LegPair, y: &LegPair, first: usize, second: usize) -> [StarTriple; 2] {
    debug_assert_eq!(x.w, y.w);
    assert!(
        x.v != y.v,
        "distinct leg pairs over one leg have distinct hypotenuses"
    );
    let w = BigInt::from(x.w);
    let (x1, x2) = (BigInt::from(x.u), BigInt::from(x.v));
    let (y1, y2) = (BigInt::from(y.u), BigInt::from(y.v));
    let a = ratio(x1.clone(), w.clone());
    let b = ratio(y1.clone(), w.clone());
    let c_sum = ratio(&x1 * &y2 + &x2 * &y1, &w * (&y2 + &x2));
    let c_diff = ratio(&x1 * &y2 - &x2 * &y1, &w * (&y2 - &x2));
    let prov = |branch| Provenance::RationalW {
        w: x.w,
        first,
        second,
        branch,
    };
    [
        StarTriple::new(a.clone(), b.clone(), c_sum, prov(Branch::Sum)),
        StarTriple::new(a, b, c_diff, prov(Branch::Difference)),
    ]
}

/// Both triples for every pair of distinct leg pairs over `w`, the one with the
/// smaller hypotenuse supplying `a`. Sorted by `(a, |b|, b, c)`.
///
/// Empty when `w` is not admissible (fewer than two leg pairs exist).
pub fn rational_solutions(w: u64) -> Vec<StarTriple> {
    if !admissible_w(w) {
        log::info!("w = {w} is not admissible; no rational solutions of this form");
        return Vec::new();
    }
    let pairs = enumerate_leg_pairs(w);
    let mut out = BTreeSet::new();
    for (i, x) in pairs.iter().enumerate() {
        for (j, y) in pairs.iter().enumerate().skip(i + 1) {
            out.extend(pair_triples(x, y, i, j));
        }
    }
    out.into_iter().collect()
}
