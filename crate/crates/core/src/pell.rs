//! Solutions of `|x^2 - d y^2| = 1` for square-free `d` whose negative equation
//! `x^2 - d y^2 = -1` is solvable.
//!
//! Every positive solution is a power of the fundamental unit
//! `ε = f1 + g1·√d`, so the n-th term `(f_n, g_n)` is the pair of integer
//! coordinates of `ε^n`. The norm of `ε` is `-1`, hence `f_n^2 - d g_n^2 = (-1)^n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::isqrt_u64;
use crate::error::{Error, Result};

/// True iff no prime square divides `n`.
pub fn is_square_free(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    Ok(squarefree_part(n)? == n)
}

/// The square-free `d` with `n = d · k^2`, by trial division up to `√n`.
pub fn squarefree_part(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    let mut rest = n;
    let mut part = 1u64;
    let mut p = 2u64;
    while p <= isqrt_u64(rest) {
        let mut exp = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            exp += 1;
        }
        if exp % 2 == 1 {
            part *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // whatever is left is 1 or a prime appearing once
    Ok(part * rest)
}

/// A square-free `d > 1` together with the least positive solution of
/// `x^2 - d y^2 = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellContext {
    d: u64,
    f1: BigInt,
    g1: BigInt,
}

/// The n-th smallest solution of `|x^2 - d y^2| = 1`, with `(f_0, g_0) = (1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PellPair {
    pub n: u64,
    pub f: BigInt,
    pub g: BigInt,
}

/// Expands `√d` as a continued fraction for one period and reports the
/// convergent closing it.
///
/// Returns `(period, p, q)` where `p/q` is the last convergent of the first
/// period. `p^2 - d q^2 = (-1)^period`.
fn sqrt_period(d: u64) -> (u64, BigInt, BigInt) {
    let a0 = isqrt_u64(d);
    debug_assert!(a0 * a0 != d);
    // √d = [a0; a1, a2, ...] via the standard (m, den, a) recurrence;
    // every quantity stays below 2√d so u64 suffices.
    let (mut m, mut den, mut a) = (0u64, 1u64, a0);
    let (mut p_prev, mut p) = (BigInt::one(), BigInt::from(a0));
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    let mut period = 0u64;
    loop {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        period += 1;
        if a == 2 * a0 {
            return (period, p, q);
        }
        let p_next = &p * a + &p_prev;
        let q_next = &q * a + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// Decides solvability of `x^2 - d y^2 = -1` by the parity of the period of
/// `√d`, returning the least positive solution when it exists.
pub fn negative_pell_fundamental(d: u64) -> Result<Option<PellContext>> {
    if d <= 1 {
        return Err(Error::DTooSmall(d));
    }
    if !is_square_free(d)? {
        return Err(Error::NotSquareFree(d));
    }
    let (period, f1, g1) = sqrt_period(d);
    if period % 2 == 0 {
        return Ok(None);
    }
    Ok(Some(PellContext { d, f1, g1 }))
}

impl PellContext {
    /// Looks up the context for `d`, failing when the negative equation has no solution.
    pub fn new(d: u64) -> Result<Self> {
        negative_pell_fundamental(d)?.ok_or(Error::Unsolvable(d))
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn f1(&self) -> &BigInt {
        &self.f1
    }

    pub fn g1(&self) -> &BigInt {
        &self.g1
    }

    /// `(f_n, g_n)` in O(log n) multiplications, scanning the bits of `n`
    /// from the top: doubling `(f, g) -> (f^2 + d g^2, 2 f g)` and, on a set
    /// bit, one step `(f, g) -> (f1 f + d g1 g, f1 g + g1 f)`.
    pub fn term(&self, n: u64) -> PellPair {
        let mut f = BigInt::one();
        let mut g = BigInt::zero();
        if n > 0 {
            for bit in (0..=n.ilog2()).rev() {
                let f2 = &f * &f + &g * &g * self.d;
                let g2 = (&f * &g) << 1;
                f = f2;
                g = g2;
                if (n >> bit) & 1 == 1 {
                    let f_next = &self.f1 * &f + &self.g1 * &g * self.d;
                    let g_next = &self.f1 * &g + &self.g1 * &f;
                    f = f_next;
                    g = g_next;
                }
            }
        }
        PellPair { n, f, g }
    }

    /// All terms from `n = 1` upward.
    pub fn stream(&self) -> PellStream<'_> {
        PellStream {
            ctx: self,
            n: 0,
            f: BigInt::one(),
            g: BigInt::zero(),
        }
    }
}

/// `(f_n, g_n)` for the given context.
pub fn pell_term(ctx: &PellContext, n: u64) -> PellPair {
    ctx.term(n)
}

/// Unbounded iterator over `(f_n, g_n)` for `n = 1, 2, ...` using the one-step
/// recurrence.
#[derive(Debug, Clone)]
pub struct PellStream<'a> {
    ctx: &'a PellContext,
    n: u64,
    f: BigInt,
    g: BigInt,
}

impl Iterator for PellStream<'_> {
    type Item = PellPair;

    fn next(&mut self) -> Option<PellPair> {
        let ctx = self.ctx;
        let f = &ctx.f1 * &self.f + &ctx.g1 * &self.g * ctx.d;
        let g = &ctx.f1 * &self.g + &ctx.g1 * &self.f;
        self.n += 1;
        self.f = f;
        self.g = g;
        Some(PellPair {
            n: self.n,
            f: self.f.clone(),
            g: self.g.clone(),
        })
    }
}

pub fn pell_stream(ctx: &PellContext) -> PellStream<'_> {
    ctx.stream()
}

/// Closed form for `f_n | f_m`: either `d = 2, n = 1` (where `f_1 = 1`) or
/// `m` is an odd multiple of `n`.
///
/// Panics unless `1 <= n <= m`.
pub fn f_divides(d: u64, n: u64, m: u64) -> bool {
    assert!(1 <= n && n <= m, "need 1 <= n <= m, got n={n}, m={m}");
    (d == 2 && n == 1) || (m.is_multiple_of(n) && (m / n) % 2 == 1)
}

/// Closed form for `g_n | g_m`: `n | m`.
///
/// Panics unless `1 <= n <= m`.
pub fn g_divides(_d: u64, n: u64, m: u64) -> bool {
    assert!(1 <= n && n <= m, "need 1 <= n <= m, got n={n}, m={m}");
    m.is_multiple_of(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    fn ctx(d: u64) -> PellContext {
        PellContext::new(d).unwrap()
    }

    #[test]
    fn square_free_examples() {
        assert_eq!(is_square_free(10), Ok(true));
        assert_eq!(is_square_free(12), Ok(false));
        assert_eq!(is_square_free(1), Ok(true));
        assert_eq!(is_square_free(0), Err(Error::NotPositive(0)));
    }

    #[test]
    fn squarefree_part_examples() {
        assert_eq!(squarefree_part(50), Ok(2));
        assert_eq!(squarefree_part(7 * 7 + 1), Ok(2));
        assert_eq!(squarefree_part(38 * 38 + 1), Ok(5));
        assert_eq!(squarefree_part(1), Ok(1));
        assert_eq!(squarefree_part(0), Err(Error::NotPositive(0)));
        // large prime square times a small factor
        let p = 4_294_967_291u64;
        assert_eq!(squarefree_part(p), Ok(p));
    }

    #[test]
    fn fundamental_solutions() {
        let c = ctx(2);
        assert_eq!((c.f1(), c.g1()), (&big(1), &big(1)));
        let c = ctx(5);
        assert_eq!((c.f1(), c.g1()), (&big(2), &big(1)));
        let c = ctx(13);
        assert_eq!((c.f1(), c.g1()), (&big(18), &big(5)));
        assert_eq!(negative_pell_fundamental(3), Ok(None));
        assert_eq!(negative_pell_fundamental(34), Ok(None));
        assert_eq!(PellContext::new(34), Err(Error::Unsolvable(34)));
    }

    #[test]
    fn fundamental_rejects_bad_d() {
        assert_eq!(negative_pell_fundamental(1), Err(Error::DTooSmall(1)));
        assert_eq!(negative_pell_fundamental(0), Err(Error::DTooSmall(0)));
        assert_eq!(negative_pell_fundamental(12), Err(Error::NotSquareFree(12)));
    }

    #[test]
    fn known_large_fundamentals() {
        // d = 61 has a famously large fundamental unit for the negative equation
        let c = ctx(61);
        assert_eq!(c.f1(), &big(29718));
        assert_eq!(c.g1(), &big(3805));
    }

    #[test]
    fn term_examples() {
        let c2 = ctx(2);
        assert_eq!(
            c2.term(0),
            PellPair {
                n: 0,
                f: big(1),
                g: big(0)
            }
        );
        assert_eq!(
            c2.term(1),
            PellPair {
                n: 1,
                f: big(1),
                g: big(1)
            }
        );
        assert_eq!(
            c2.term(4),
            PellPair {
                n: 4,
                f: big(17),
                g: big(12)
            }
        );
        assert_eq!(
            c2.term(10),
            PellPair {
                n: 10,
                f: big(3363),
                g: big(2378)
            }
        );
        assert_eq!(
            ctx(5).term(2),
            PellPair {
                n: 2,
                f: big(9),
                g: big(4)
            }
        );
    }

    #[test]
    fn stream_examples() {
        let c2 = ctx(2);
        let fs: Vec<_> = c2.stream().take(5).map(|p| p.f).collect();
        let gs: Vec<_> = c2.stream().take(5).map(|p| p.g).collect();
        assert_eq!(fs, [1, 3, 7, 17, 41].map(big));
        assert_eq!(gs, [1, 2, 5, 12, 29].map(big));
        let fs: Vec<_> = ctx(5).stream().take(3).map(|p| p.f).collect();
        assert_eq!(fs, [2, 9, 38].map(big));
    }

    #[test]
    fn divisibility_examples() {
        assert!(f_divides(2, 3, 9));
        assert!(!f_divides(2, 3, 6));
        assert!(f_divides(2, 1, 4));
        assert!(!f_divides(5, 1, 4));
        assert!(g_divides(2, 3, 6));
        assert!(!g_divides(2, 2, 5));
        assert!(g_divides(13, 7, 7));
    }

    #[test]
    #[should_panic]
    fn divisibility_rejects_zero_index() {
        f_divides(2, 0, 3);
    }

    #[test]
    fn closed_forms_match_trial_division() {
        for d in [2, 5, 10, 13, 17, 26, 29] {
            let c = ctx(d);
            let terms: Vec<_> = c.stream().take(60).collect();
            for n in 1..=60u64 {
                for m in n..=60u64 {
                    let (tn, tm) = (&terms[n as usize - 1], &terms[m as usize - 1]);
                    assert_eq!(
                        f_divides(d, n, m),
                        tm.f.is_multiple_of(&tn.f),
                        "f d={d} n={n} m={m}"
                    );
                    assert_eq!(
                        g_divides(d, n, m),
                        tm.g.is_multiple_of(&tn.g),
                        "g d={d} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn magnitude_and_coprimality() {
        for d in [2, 5, 10, 13, 17, 26, 29] {
            let c = ctx(d);
            assert!(c.f1() * c.f1() >= big(d - 1));
            for p in c.stream().take(200) {
                assert!(p.f >= p.g);
                assert_eq!(p.f == p.g, d == 2 && p.n == 1);
                assert!(p.f.gcd(&big(d)) == BigInt::one());
                assert!(p.f.gcd(&p.g) == BigInt::one());
            }
        }
    }

    proptest! {
        #[test]
        fn term_satisfies_norm_and_matches_stream(
            d in prop::sample::select(vec![2u64, 5, 10, 13, 17, 26, 29, 37, 41, 53, 58, 61]),
            n in 0u64..300,
        ) {
            let c = ctx(d);
            let p = c.term(n);
            let norm = &p.f * &p.f - &p.g * &p.g * d;
            prop_assert_eq!(norm, if n % 2 == 0 { big(1) } else { -big(1) });
            if n > 0 {
                prop_assert_eq!(c.stream().nth(n as usize - 1).unwrap(), p);
            }
        }

        #[test]
        fn squarefree_part_leaves_a_square(n in 1u64..5_000_000) {
            let d = squarefree_part(n).unwrap();
            prop_assert_eq!(n % d, 0);
            prop_assert!(crate::arith::exact_sqrt_u64(n / d).is_some());
            prop_assert!(is_square_free(d).unwrap());
        }
    }
}
