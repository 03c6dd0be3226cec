//! Per-element cycle statistics and the cycle-count bound for primitive
//! solvable groups of prime-power degree.
//!
//! For a nontrivial element g of prime order o on p^t points with n(g) cycles
//! and s(g) fixed points, the verified chain is
//!
//!   n(g) <= (n + (o-1) s(g)) / o <= (p + o - 1) n / (o p) <= 3n/4,
//!
//! together with the coarser n(g) <= (n + s(g)) / 2 that holds for any
//! permutation. All four comparisons are exact integer arithmetic.

use permcore::{PermGroup, Permutation};
use serde_json::json;

use crate::error::{CheckError, Result};
use crate::numeric::ln_u128;
use crate::outcome::CheckOutcome;

#[derive(Debug, Clone)]
pub struct CycleStats {
    /// n(g): number of cycles on the full point set.
    pub cycles: u64,
    /// s(g): number of fixed points.
    pub fixed: u64,
    /// exact element order.
    pub order: u128,
    /// o(g): smallest prime divisor of the element order (0 for the identity).
    pub smallest_prime: u64,
}

pub fn smallest_prime_factor(n: u128) -> u64 {
    if n < 2 {
        return 0;
    }
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            return d as u64;
        }
        d += 1;
    }
    n as u64
}

pub fn cycle_stats(g: &Permutation) -> CycleStats {
    let order = g.order();
    CycleStats {
        cycles: g.cycle_count() as u64,
        fixed: g.fixed_point_count() as u64,
        order,
        smallest_prime: smallest_prime_factor(order),
    }
}

#[derive(Debug)]
pub struct CycleBoundReport {
    pub outcome: CheckOutcome,
    pub elements_checked: u64,
    pub violations: u64,
}

/// Verifies the cycle-count chain for every prime-order element of a
/// primitive solvable group. The reported logs are those of the tightest
/// instance of n(g) against its first bound.
pub fn check_cycle_bound(g: &PermGroup, group_id: &str) -> Result<CycleBoundReport> {
    if !g.is_solvable() {
        return Err(CheckError::NotSolvable);
    }
    if !g.is_primitive() || g.order() == 1 {
        return Err(CheckError::NotPrimitive);
    }
    let n = g.degree() as u64;
    let (p, _t) = permcore::prime_power(n as u128)
        .ok_or(CheckError::DegreeNotPrimePower(n as u128))?;

    let mut checked = 0u64;
    let mut violations = 0u64;
    // worst = element minimizing bound1 / n(g); compared by cross products
    let mut worst: Option<(u64, u64, u64, u64)> = None; // (n_g, s, o, bound1_num)

    for e in g.elements() {
        if e.is_identity() {
            continue;
        }
        let stats = cycle_stats(&e);
        if stats.order != stats.smallest_prime as u128 {
            continue; // prime order only
        }
        checked += 1;
        let (ng, s, o) = (stats.cycles, stats.fixed, stats.smallest_prime);
        let bound1_num = n + (o - 1) * s; // first bound is bound1_num / o
        let ok = 2 * ng <= n + s
            && o * ng <= bound1_num
            && p * bound1_num <= (p + o - 1) * n
            && 4 * (p + o - 1) <= 3 * o * p;
        if !ok {
            violations += 1;
        }
        let tighter = match &worst {
            None => true,
            // bound1_num/(o*ng) < w_num/(w_o*w_ng)
            Some((w_ng, _ws, w_o, w_num)) => {
                (bound1_num as u128) * (*w_o as u128) * (*w_ng as u128)
                    < (*w_num as u128) * (o as u128) * (ng as u128)
            }
        };
        if tighter {
            worst = Some((ng, s, o, bound1_num));
        }
    }

    let (ng, s, o, bound1_num) = worst.ok_or_else(|| {
        CheckError::Internal("no prime-order elements in a nontrivial group".into())
    })?;
    let lhs = ln_u128(ng as u128);
    let rhs = ln_u128(bound1_num as u128).sub(&ln_u128(o as u128));
    let mut outcome = CheckOutcome::classify(
        "cycle_bound",
        group_id,
        &lhs,
        &rhs,
        json!({
            "degree": n,
            "prime": p,
            "worst_element": {"cycles": ng, "fixed": s, "order": o},
            "elements_checked": checked,
            "violations": violations,
        }),
    );
    if violations > 0 {
        outcome.status = crate::outcome::CheckStatus::Fail;
    }
    Ok(CycleBoundReport {
        outcome,
        elements_checked: checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gfmatrix::{affine_primitive, build_exceptional, gamma0_group, ExceptionalTag};

    #[test]
    fn stats_of_double_transposition() {
        // (0 1)(2 3) in the degree-4 affine group: n=2 cycles, s=0, o=2
        let e = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let st = cycle_stats(&e);
        assert_eq!((st.cycles, st.fixed, st.smallest_prime), (2, 0, 2));
        // chain by hand: 2 <= 2 <= 3 <= 3 (times n/4)
        let (n, o, p) = (4u64, 2u64, 2u64);
        assert!(o * st.cycles <= n + (o - 1) * st.fixed);
        assert_eq!((p + o - 1) * n / (o * p), 3);
    }

    #[test]
    fn degree9_order3_element() {
        // an order-3 element with 3 fixed points on 9 points:
        // n(g) = 3 + (9-3)/3 = 5 and (9+3)/2 = 6
        let e = Permutation::from_cycles(9, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let st = cycle_stats(&e);
        assert_eq!((st.cycles, st.fixed, st.smallest_prime), (5, 3, 3));
        assert!(2 * st.cycles <= 9 + st.fixed);
        assert!(3 * st.cycles <= 9 + 2 * st.fixed);
    }

    #[test]
    fn fixed_point_free_involution_is_boundary() {
        let e = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let st = cycle_stats(&e);
        // n(g) = n/2 exactly
        assert_eq!(2 * st.cycles, 4 + st.fixed);
    }

    #[test]
    fn chain_holds_on_affine_groups() {
        for g in [
            affine_primitive(&build_exceptional(ExceptionalTag::Gl22).unwrap()).unwrap(),
            affine_primitive(&build_exceptional(ExceptionalTag::Sl23).unwrap()).unwrap(),
            affine_primitive(&gamma0_group(2, 3).unwrap()).unwrap(),
        ] {
            let report = check_cycle_bound(&g, "t").unwrap();
            assert_eq!(report.violations, 0);
            assert!(report.elements_checked > 0);
            assert!(report.outcome.passed());
        }
    }

    #[test]
    fn non_solvable_rejected() {
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let a5 = PermGroup::new(5, vec![a, b]).unwrap();
        assert!(matches!(
            check_cycle_bound(&a5, "a5"),
            Err(CheckError::NotSolvable)
        ));
    }
}
