//! Construction, verification and bounded enumeration of integral solutions
//! of `(a-c)^2 (b^2+1) = (b-c)^2 (a^2+1)`.
//!
//! Up to the sign flip `(a, b, c) -> (-a, -b, -c)` and the swap of `a` and `b`,
//! every nontrivial integral solution is one of
//!
//! * `(f_{(2m-1)(2n-1)}, f_{(2m-1)(2n+1)}, g_{(2m-1)2n} / g_{2m-1})` for some
//!   square-free `d` with a solvable negative Pell equation, or
//! * `(f_{2n-1}, -f_{2n+1}, f_{2n})` over `d = 2`,
//!
//! where `(f_k, g_k)` are the terms of [`PellContext`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::exact_sqrt_rational;
use crate::error::{Error, Result};
use crate::pell::{is_square_free, negative_pell_fundamental, squarefree_part, PellContext};
use crate::triple::{Provenance, StarTriple};

/// The two bisector slopes of lines with slopes `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BisectorSlopes {
    /// `(c_plus, c_minus)`, taking `+√` and `-√` respectively; `c_plus · c_minus = -1`.
    Rational(BigRational, BigRational),
    /// `(a^2+1)(b^2+1)` is not the square of a rational.
    Irrational,
}

/// Solves the bisector equation for `c`:
/// `c = (ab - 1 ± √((a^2+1)(b^2+1))) / (a + b)`.
pub fn bisector_slopes(a: &BigRational, b: &BigRational) -> Result<BisectorSlopes> {
    if a.abs() == b.abs() {
        return Err(Error::TrivialInput);
    }
    let one = BigRational::one();
    let disc = (a * a + &one) * (b * b + &one);
    let Some(root) = exact_sqrt_rational(&disc) else {
        return Ok(BisectorSlopes::Irrational);
    };
    // |a| != |b| rules out a + b = 0
    let sum = a + b;
    let base = a * b - &one;
    Ok(BisectorSlopes::Rational(
        (&base + &root) / &sum,
        (&base - &root) / &sum,
    ))
}

/// The triple of the general family for the context's `d`.
pub fn family_d_triple(ctx: &PellContext, m: u64, n: u64) -> Result<StarTriple> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroIndex);
    }
    let k = 2 * m - 1;
    let a = ctx.term(k * (2 * n - 1)).f;
    let b = ctx.term(k * (2 * n + 1)).f;
    let (c, rem) = ctx.term(k * 2 * n).g.div_rem(&ctx.term(k).g);
    assert!(rem.is_zero(), "g_k must divide g_(2kn)");
    Ok(StarTriple::from_ints(
        a,
        b,
        c,
        Provenance::FamilyD { d: ctx.d(), m, n },
    ))
}

/// The general family for `d`, failing when `x^2 - d y^2 = -1` is unsolvable.
pub fn solution_family_d(d: u64, m: u64, n: u64) -> Result<StarTriple> {
    family_d_triple(&PellContext::new(d)?, m, n)
}

/// The family over `d = 2` with `b < 0`.
pub fn solution_family_2(n: u64) -> Result<StarTriple> {
    if n == 0 {
        return Err(Error::ZeroIndex);
    }
    let ctx = PellContext::new(2)?;
    Ok(family_2_triple(&ctx, n))
}

fn family_2_triple(ctx: &PellContext, n: u64) -> StarTriple {
    debug_assert_eq!(ctx.d(), 2);
    let a = ctx.term(2 * n - 1).f;
    let b = -ctx.term(2 * n + 1).f;
    let c = ctx.term(2 * n).f;
    StarTriple::from_ints(a, b, c, Provenance::Family2 { n })
}

/// `(e, e(4e^2 + 3), 2e)`.
pub fn special_family_e(e: u64) -> Result<StarTriple> {
    if e == 0 {
        return Err(Error::ZeroIndex);
    }
    let e_big = BigInt::from(e);
    let b = &e_big * (&e_big * &e_big * 4 + 3);
    let c = &e_big * 2;
    Ok(StarTriple::from_ints(
        e_big,
        b,
        c,
        Provenance::SpecialE { e },
    ))
}

/// The `(d, m, n)` for which the general family reproduces [`special_family_e`].
///
/// `e^2 + 1 = d·y^2` makes `e = f_k` for some odd `k`; the triple is then
/// `(f_k, f_{3k}, g_{2k} / g_k)`, i.e. `m = (k + 1) / 2` and `n = 1`.
pub fn special_family_parameters(e: u64) -> Result<(u64, u64, u64)> {
    if e == 0 {
        return Err(Error::ZeroIndex);
    }
    let d = squarefree_part(e * e + 1)?;
    let ctx = PellContext::new(d)?;
    let target = BigInt::from(e);
    let k = ctx
        .stream()
        .find(|p| p.f >= target)
        .filter(|p| p.f == target)
        .map(|p| p.n)
        .expect("e is an x-coordinate of x^2 - d y^2 = -1");
    debug_assert!(k % 2 == 1);
    Ok((d, k.div_ceil(2), 1))
}

/// Orbit of `t` under `c -> -1/c` (when `c != 0`), `(a, b, c) -> (-a, -b, -c)`
/// and the swap of `a` and `b`. Members keep the provenance of `t`.
pub fn symmetry_closure(t: &StarTriple) -> BTreeSet<StarTriple> {
    let mut orbit = BTreeSet::new();
    let mut pending = vec![t.clone()];
    while let Some(cur) = pending.pop() {
        if orbit.contains(&cur) {
            continue;
        }
        let mut images = vec![
            StarTriple::new(-&cur.a, -&cur.b, -&cur.c, cur.provenance.clone()),
            StarTriple::new(
                cur.b.clone(),
                cur.a.clone(),
                cur.c.clone(),
                cur.provenance.clone(),
            ),
        ];
        if !cur.c.is_zero() {
            let inv = -cur.c.recip();
            images.push(StarTriple::new(
                cur.a.clone(),
                cur.b.clone(),
                inv,
                cur.provenance.clone(),
            ));
        }
        orbit.insert(cur);
        pending.extend(images.into_iter().filter(|img| !orbit.contains(img)));
    }
    orbit
}

/// Largest `x >= 1` with `4x^3 + 3x <= bound`, if any.
///
/// Every family member over `d` has `b >= f_3 = 4 f_1^3 + 3 f_1` (using
/// `f_1^2 + 1 = d g_1^2`), so only `f_1 <= x`, hence `d <= x^2 + 1`, can
/// contribute below the bound.
fn max_fundamental_x(bound: u64) -> Option<u64> {
    let fits = |x: u64| {
        (x as u128)
            .pow(3)
            .checked_mul(4)
            .map(|v| v + 3 * x as u128 <= bound as u128)
            .unwrap_or(false)
    };
    if !fits(1) {
        return None;
    }
    let (mut lo, mut hi) = (1u64, 1u64 << 22);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(lo)
}

/// The x-coordinates `f_1, f_2, ...` of the context that do not exceed `bound`.
fn f_values_up_to(ctx: &PellContext, bound: &BigInt) -> Vec<BigInt> {
    ctx.stream()
        .map(|p| p.f)
        .take_while(|f| f <= bound)
        .collect()
}

/// All canonical nontrivial integral solutions with `0 < a < |b| <= bound`,
/// sorted by `(a, |b|, b, c)`.
///
/// A duplicate produced by two different parameterizations keeps the first
/// entry and is logged.
pub fn enumerate_int_solutions(bound: u64) -> Result<BTreeSet<StarTriple>> {
    if bound == 0 {
        return Err(Error::InvalidBound);
    }
    let mut found = BTreeSet::new();
    let Some(max_f1) = max_fundamental_x(bound) else {
        return Ok(found);
    };
    let limit = BigInt::from(bound);
    let max_f1_big = BigInt::from(max_f1);

    let mut insert = |t: StarTriple| {
        debug_assert!(t.satisfies_star());
        if let Some(prev) = found.get(&t) {
            log::warn!(
                "collision: {} from both {} and {}",
                t,
                prev.provenance,
                t.provenance
            );
        } else {
            found.insert(t);
        }
    };

    for d in 2..=max_f1 * max_f1 + 1 {
        if !is_square_free(d)? {
            continue;
        }
        let Some(ctx) = negative_pell_fundamental(d)? else {
            continue;
        };
        if ctx.f1() > &max_f1_big {
            continue;
        }
        // f is strictly increasing, so every index above `top` overshoots the bound
        let top = f_values_up_to(&ctx, &limit).len() as u64;
        for m in 1.. {
            let k = 2 * m - 1;
            if 3 * k > top {
                break;
            }
            for n in 1.. {
                if k * (2 * n + 1) > top {
                    break;
                }
                insert(family_d_triple(&ctx, m, n)?);
            }
        }
        if d == 2 {
            for n in 1.. {
                if 2 * n + 1 > top {
                    break;
                }
                insert(family_2_triple(&ctx, n));
            }
        }
    }
    Ok(found)
}

/// Convenience for callers holding integer slopes.
pub fn int_triple(a: i64, b: i64, c: i64) -> StarTriple {
    StarTriple::from_ints(a.into(), b.into(), c.into(), Provenance::External)
}
