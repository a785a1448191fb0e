//! Triples `(a, b, c)` of slopes where `c` bisects the angle between lines of
//! slopes `a` and `b`, i.e. solutions of `(a-c)^2 (b^2+1) = (b-c)^2 (a^2+1)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Where a triple came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// `(f_{(2m-1)(2n-1)}, f_{(2m-1)(2n+1)}, g_{(2m-1)2n} / g_{2m-1})` over `d`.
    FamilyD {
        d: u64,
        m: u64,
        n: u64,
    },
    /// `(f_{2n-1}, -f_{2n+1}, f_{2n})` over `d = 2`.
    Family2 {
        n: u64,
    },
    /// `(e, e(4e^2+3), 2e)`.
    SpecialE {
        e: u64,
    },
    /// Built from the leg pairs at positions `first < second` of the common leg `w`.
    RationalW {
        w: u64,
        first: usize,
        second: usize,
        branch: Branch,
    },
    External,
}

/// Which of the two `c` expressions produced a rational triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Sum,
    Difference,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::FamilyD { d, m, n } => write!(f, "family-d(d={d},m={m},n={n})"),
            Provenance::Family2 { n } => write!(f, "family-2(n={n})"),
            Provenance::SpecialE { e } => write!(f, "special(e={e})"),
            Provenance::RationalW {
                w,
                first,
                second,
                branch,
            } => {
                let sign = match branch {
                    Branch::Sum => '+',
                    Branch::Difference => '-',
                };
                write!(f, "rational-w(w={w},pairs={first}:{second},{sign})")
            }
            Provenance::External => f.write_str("external"),
        }
    }
}

/// A solution triple with its origin.
///
/// Equality, hashing and ordering look at `(a, b, c)` only; ordering is by
/// `(a, |b|, b, c)`.
#[derive(Debug, Clone)]
pub struct StarTriple {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub provenance: Provenance,
}

impl StarTriple {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, provenance: Provenance) -> Self {
        StarTriple {
            a,
            b,
            c,
            provenance,
        }
    }

    pub fn from_ints(a: BigInt, b: BigInt, c: BigInt, provenance: Provenance) -> Self {
        StarTriple::new(a.into(), b.into(), c.into(), provenance)
    }

    pub fn external(a: BigRational, b: BigRational, c: BigRational) -> Self {
        StarTriple::new(a, b, c, Provenance::External)
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer() && self.c.is_integer()
    }

    pub fn is_trivial(&self) -> bool {
        self.a.abs() == self.b.abs()
    }

    pub fn satisfies_star(&self) -> bool {
        verify_star(&self.a, &self.b, &self.c)
    }

    pub fn satisfies_companion(&self) -> bool {
        verify_companion(&self.a, &self.b, &self.c)
    }

    fn sort_key(&self) -> (&BigRational, BigRational, &BigRational, &BigRational) {
        (&self.a, self.b.abs(), &self.b, &self.c)
    }
}

impl PartialEq for StarTriple {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl Eq for StarTriple {}

impl std::hash::Hash for StarTriple {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
    }
}

impl Ord for StarTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for StarTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Space-separated `a b c`, rationals as `p/q` in lowest terms.
impl fmt::Display for StarTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}

/// `(a-c)^2 (b^2+1) == (b-c)^2 (a^2+1)`, exactly.
pub fn verify_star(a: &BigRational, b: &BigRational, c: &BigRational) -> bool {
    let one = BigRational::one();
    let lhs = sq(&(a - c)) * (sq(b) + &one);
    let rhs = sq(&(b - c)) * (sq(a) + &one);
    lhs == rhs
}

/// `(ac+1)^2 (b^2+1) == (bc+1)^2 (a^2+1)`, the same condition seen from the
/// perpendicular bisector `-1/c`.
pub fn verify_companion(a: &BigRational, b: &BigRational, c: &BigRational) -> bool {
    let one = BigRational::one();
    let lhs = sq(&(a * c + &one)) * (sq(b) + &one);
    let rhs = sq(&(b * c + &one)) * (sq(a) + &one);
    lhs == rhs
}

fn sq(x: &BigRational) -> BigRational {
    x * x
}

/// Parses `p`, `-p` or `p/q` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
