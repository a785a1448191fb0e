//! Oracle-versus-closed-form checks behind the `verify` subcommand.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Result;
use crate::oracle::{brute_leg_pairs, brute_pell, brute_star_pairs, SearchBound};
use crate::pell::{f_divides, g_divides, is_square_free, negative_pell_fundamental};
use crate::rational::{admissible_w, count_leg_pairs, enumerate_leg_pairs, rational_solutions};
use crate::star::{enumerate_int_solutions, symmetry_closure};

/// Caps keeping the quadratic and cubic oracles at desk scale.
pub const PELL_D_CAP: u64 = 100;
pub const PELL_Y_CAP: u64 = 2000;
pub const LEG_W_CAP: u64 = 500;
pub const DIVISIBILITY_INDEX_CAP: u64 = 60;
pub const DIVISIBILITY_D_CAP: u64 = 30;
pub const RATIONAL_W_CAP: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str, failures: Vec<String>, scope: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            scope
        } else {
            format!(
                "{scope}; {} failure(s), first: {}",
                failures.len(),
                failures[0]
            )
        };
        CheckOutcome {
            name,
            passed,
            detail,
        }
    }
}

fn solvable_ds(up_to: u64) -> Result<Vec<crate::pell::PellContext>> {
    let mut out = Vec::new();
    for d in 2..=up_to {
        if is_square_free(d)? {
            if let Some(ctx) = negative_pell_fundamental(d)? {
                out.push(ctx);
            }
        }
    }
    Ok(out)
}

fn star_completeness(bound: SearchBound) -> Result<CheckOutcome> {
    let closed = enumerate_int_solutions(bound.get())?;
    let brute = brute_star_pairs(bound);
    let mut failures: Vec<String> = closed
        .symmetric_difference(&brute)
        .map(|t| {
            let side = if closed.contains(t) {
                "enumerator only"
            } else {
                "oracle only"
            };
            format!("{t} ({side})")
        })
        .collect();
    failures.extend(
        closed
            .iter()
            .filter(|t| t.a.is_zero() || t.b.is_zero())
            .map(|t| format!("{t} has a zero slope")),
    );
    Ok(CheckOutcome::new(
        "star-completeness",
        failures,
        format!("B={}, {} solutions", bound.get(), closed.len()),
    ))
}

fn star_orbits(bound: SearchBound) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for t in enumerate_int_solutions(bound.get())? {
        for member in symmetry_closure(&t) {
            checked += 1;
            if !member.satisfies_star() || !member.satisfies_companion() {
                failures.push(member.to_string());
            }
        }
    }
    Ok(CheckOutcome::new(
        "star-orbits",
        failures,
        format!("{checked} orbit members"),
    ))
}

fn pell_prefix(bound: SearchBound) -> Result<CheckOutcome> {
    let d_cap = bound.get().min(PELL_D_CAP);
    let y_cap = SearchBound::new(bound.get().min(PELL_Y_CAP))?;
    let mut failures = Vec::new();
    for ctx in solvable_ds(d_cap)? {
        let brute = brute_pell(ctx.d(), y_cap);
        let limit = BigInt::from(y_cap.get());
        let stream: Vec<(BigInt, BigInt)> = ctx
            .stream()
            .take_while(|p| p.g <= limit)
            .map(|p| (p.f, p.g))
            .collect();
        let brute: Vec<(BigInt, BigInt)> = brute
            .into_iter()
            .map(|(x, y)| (x.into(), y.into()))
            .collect();
        if brute != stream {
            failures.push(format!("d={}", ctx.d()));
        }
    }
    Ok(CheckOutcome::new(
        "pell-prefix",
        failures,
        format!("solvable d<={d_cap}, y<={}", y_cap.get()),
    ))
}

fn divisibility(bound: SearchBound) -> Result<CheckOutcome> {
    let top = bound.get().min(DIVISIBILITY_INDEX_CAP);
    let mut failures = Vec::new();
    for ctx in solvable_ds(DIVISIBILITY_D_CAP)? {
        let terms: Vec<_> = ctx.stream().take(top as usize).collect();
        for n in 1..=top {
            for m in n..=top {
                let (tn, tm) = (&terms[n as usize - 1], &terms[m as usize - 1]);
                if f_divides(ctx.d(), n, m) != tm.f.is_multiple_of(&tn.f) {
                    failures.push(format!("f d={} n={n} m={m}", ctx.d()));
                }
                if g_divides(ctx.d(), n, m) != tm.g.is_multiple_of(&tn.g) {
                    failures.push(format!("g d={} n={n} m={m}", ctx.d()));
                }
            }
        }
    }
    Ok(CheckOutcome::new(
        "divisibility",
        failures,
        format!("solvable d<={DIVISIBILITY_D_CAP}, 1<=n<=m<={top}"),
    ))
}

fn leg_pairs(bound: SearchBound) -> CheckOutcome {
    let cap = bound.get().min(LEG_W_CAP);
    let mut failures = Vec::new();
    for w in 1..=cap {
        let closed: BTreeSet<(u128, u128)> =
            enumerate_leg_pairs(w).iter().map(|p| (p.u, p.v)).collect();
        let brute: BTreeSet<(u128, u128)> = brute_leg_pairs(w).into_iter().collect();
        if closed != brute || brute.len() as u64 != count_leg_pairs(w) {
            failures.push(format!("w={w}"));
        }
    }
    CheckOutcome::new("leg-pairs", failures, format!("w<={cap}"))
}

fn admissibility(bound: SearchBound) -> CheckOutcome {
    let failures = (1..=bound.get())
        .filter(|&w| admissible_w(w) != (count_leg_pairs(w) >= 2))
        .map(|w| format!("w={w}"))
        .collect();
    CheckOutcome::new("admissibility", failures, format!("w<={}", bound.get()))
}

fn rational(bound: SearchBound) -> CheckOutcome {
    let cap = bound.get().min(RATIONAL_W_CAP);
    let mut failures = Vec::new();
    let mut emitted = 0usize;
    for w in (1..=cap).filter(|&w| admissible_w(w)) {
        let sols = rational_solutions(w);
        let k = count_leg_pairs(w) as usize;
        let expected = k * k.saturating_sub(1);
        if sols.len() != expected {
            failures.push(format!(
                "w={w}: {} triples, expected {expected}",
                sols.len()
            ));
        }
        emitted += sols.len();
        failures.extend(
            sols.iter()
                .filter(|t| !t.satisfies_star() || !t.satisfies_companion())
                .map(|t| format!("w={w}: {t}")),
        );
    }
    CheckOutcome::new(
        "rational",
        failures,
        format!("admissible w<={cap}, {emitted} triples"),
    )
}

/// Runs every check at the given bound.
pub fn run_checks(bound: SearchBound) -> Result<Vec<CheckOutcome>> {
    Ok(vec![
        star_completeness(bound)?,
        star_orbits(bound)?,
        pell_prefix(bound)?,
        divisibility(bound)?,
        leg_pairs(bound),
        admissibility(bound),
        rational(bound),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bound_passes() {
        let outcomes = run_checks(SearchBound::new(60).unwrap()).unwrap();
        assert_eq!(outcomes.len(), 7);
        for o in outcomes {
            assert!(o.passed, "{} {}", o.name, o.detail);
        }
    }
}
