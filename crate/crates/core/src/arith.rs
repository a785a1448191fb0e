//! Exact square-root and perfect-square helpers shared by the solvers and the oracles.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::Signed;

/// Floor of the square root of `n`.
pub fn isqrt_u64(n: u64) -> u64 {
    n.sqrt()
}

/// Returns `Some(r)` when `n == r * r`.
pub fn exact_sqrt_u64(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub fn exact_sqrt_u128(n: u128) -> Option<u128> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub fn exact_sqrt_big(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Square root of a rational if it is the square of a rational.
///
/// A fraction in lowest terms is a rational square iff numerator and
/// denominator are both perfect squares.
pub fn exact_sqrt_rational(q: &BigRational) -> Option<BigRational> {
    let num = exact_sqrt_big(q.numer())?;
    let den = exact_sqrt_big(q.denom())?;
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_near_u64_max() {
        let r = u32::MAX as u64;
        assert_eq!(exact_sqrt_u64(r * r), Some(r));
        assert_eq!(exact_sqrt_u64(r * r - 1), None);
        assert_eq!(isqrt_u64(r * r - 1), r - 1);
        assert_eq!(isqrt_u64(u64::MAX), r);
    }

    #[test]
    fn big_and_rational_squares() {
        let n: BigInt = "12477253282759".parse().unwrap();
        assert_eq!(exact_sqrt_big(&(&n * &n)), Some(n.clone()));
        assert_eq!(exact_sqrt_big(&(&n * &n + 1)), None);
        assert_eq!(exact_sqrt_big(&BigInt::from(-4)), None);

        let q = BigRational::new(BigInt::from(25), BigInt::from(36));
        assert_eq!(
            exact_sqrt_rational(&q),
            Some(BigRational::new(BigInt::from(5), BigInt::from(6)))
        );
        let q = BigRational::new(BigInt::from(2), BigInt::from(1));
        assert_eq!(exact_sqrt_rational(&q), None);
    }
}
