//! Naive exhaustive searches used to check the closed forms.
//!
//! Nothing here depends on the Pell, star or rational solvers; only the shared
//! triple type and exact square roots are used.

use std::collections::BTreeSet;

use crate::arith::exact_sqrt_u128;
use crate::error::{Error, Result};
use crate::triple::StarTriple;

/// A positive search limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SearchBound(u64);

impl SearchBound {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidBound);
        }
        Ok(SearchBound(limit))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Positive `(x, y)` with `x^2 - d y^2 = ±1` and `y <= bound`, by increasing `y`.
pub fn brute_pell(d: u64, bound: SearchBound) -> Vec<(u128, u128)> {
    let d = d as u128;
    let mut out = Vec::new();
    for y in 1..=bound.get() as u128 {
        let dy2 = d * y * y;
        for x2 in [dy2 - 1, dy2 + 1] {
            if let Some(x) = exact_sqrt_u128(x2) {
                if x > 0 {
                    out.push((x, y));
                }
            }
        }
    }
    out
}

/// Every integral `(a, b, c)` with `0 < a < |b| <= bound` solving the bisector
/// equation, by solving for `c` over each slope pair.
pub fn brute_star_pairs(bound: SearchBound) -> BTreeSet<StarTriple> {
    let bound = bound.get() as i128;
    let mut out = BTreeSet::new();
    for a in 1..=bound {
        for abs_b in a + 1..=bound {
            for b in [abs_b, -abs_b] {
                let disc = ((a * a + 1) * (b * b + 1)) as u128;
                let Some(root) = exact_sqrt_u128(disc) else {
                    continue;
                };
                let root = root as i128;
                let sum = a + b;
                for num in [a * b - 1 + root, a * b - 1 - root] {
                    if num % sum == 0 {
                        out.insert(StarTriple::external(int(a), int(b), int(num / sum)));
                    }
                }
            }
        }
    }
    out
}

fn int(v: i128) -> num_rational::BigRational {
    num_rational::BigRational::from_integer(v.into())
}

/// Positive `(u, v)` with `v^2 - u^2 = w^2`, by increasing `u`.
///
/// `v >= u + 1` forces `w^2 >= 2u + 1`, which bounds the scan.
pub fn brute_leg_pairs(w: u64) -> Vec<(u128, u128)> {
    let w2 = (w as u128) * (w as u128);
    if w2 < 3 {
        return Vec::new();
    }
    (1..=(w2 - 1) / 2)
        .filter_map(|u| exact_sqrt_u128(u * u + w2).map(|v| (u, v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(limit: u64) -> SearchBound {
        SearchBound::new(limit).unwrap()
    }

    #[test]
    fn search_bound_rejects_zero() {
        assert_eq!(SearchBound::new(0), Err(Error::InvalidBound));
    }

    #[test]
    fn pell_scans() {
        assert_eq!(
            brute_pell(2, b(30)),
            [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)]
        );
        assert_eq!(brute_pell(5, b(5)), [(2, 1), (9, 4)]);
        let d3 = brute_pell(3, b(100));
        assert!(!d3.is_empty());
        assert!(d3.iter().all(|&(x, y)| x * x == 3 * y * y + 1));
    }

    #[test]
    fn star_scans() {
        let lines = |n| {
            brute_star_pairs(b(n))
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        };
        assert!(lines(6).is_empty());
        assert_eq!(lines(10), ["1 -7 3", "1 7 2"]);
        assert_eq!(
            lines(45),
            ["1 -7 3", "1 7 2", "2 38 4", "7 -41 17", "7 41 12"]
        );
    }

    #[test]
    fn leg_scans() {
        assert_eq!(brute_leg_pairs(12).len(), 4);
        assert!(brute_leg_pairs(2).is_empty());
        assert!(brute_leg_pairs(1).is_empty());
        assert_eq!(brute_leg_pairs(9), [(12, 15), (40, 41)]);
    }
}
