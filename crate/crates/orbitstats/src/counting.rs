//! Subset-stabilization counts and the two exact counting certificates for
//! the power-set orbit theorem.
//!
//! An element with n(g) cycles stabilizes exactly 2^n(g) subsets. The two
//! certificates bound the number of (element, stabilized subset) incidences:
//!
//!   (*)   |G| * 2^floor((p+o-1) n / (o p)) < 2^(n-k)
//!   (**)  (1/lambda) n^(13/4) * 2^floor(3n/4) < 2^(n-k)
//!
//! Both are decided in exact integer arithmetic ((**) after raising to the
//! 12th power, using lambda^12 = 24^4).

use num_bigint::BigUint;
use permcore::{PermGroup, Permutation};

use crate::constants::k_of;
use crate::cycles::smallest_prime_factor;
use crate::error::{CheckError, Result};

/// 2^n(g), cross-checked against an exhaustive subset scan for degree <= 12.
pub fn stabilized_subset_count(g: &Permutation) -> Result<u128> {
    let n = g.degree();
    if n > 64 {
        return Err(CheckError::Budget(format!(
            "degree {n} exceeds the subset-work limit of 64"
        )));
    }
    let count = 1u128 << g.cycle_count();
    if n <= 12 {
        let mut scan = 0u128;
        for mask in 0..(1u64 << n) {
            if g.apply_mask(mask) == mask {
                scan += 1;
            }
        }
        if scan != count {
            return Err(CheckError::Internal(format!(
                "stabilized subset scan {scan} disagrees with 2^n(g) = {count}"
            )));
        }
    }
    Ok(count)
}

#[derive(Debug, Clone)]
pub struct CountingCertificates {
    /// The group-order certificate (*).
    pub basic: bool,
    /// The degree-only certificate (**).
    pub refined: bool,
    pub degree: u64,
    pub prime: u64,
    /// Smallest element order among nontrivial elements (= least prime
    /// divisor of |G|).
    pub smallest_order: u64,
    pub k: u32,
}

/// Evaluates both certificates for a primitive solvable group of prime-power
/// degree.
pub fn counting_certificates(g: &PermGroup) -> Result<CountingCertificates> {
    if !g.is_solvable() {
        return Err(CheckError::NotSolvable);
    }
    if !g.is_primitive() || g.order() == 1 {
        return Err(CheckError::NotPrimitive);
    }
    let n = g.degree() as u64;
    let (p, _) =
        permcore::prime_power(n as u128).ok_or(CheckError::DegreeNotPrimePower(n as u128))?;
    let order = g.order();
    let o = smallest_prime_factor(order);
    let k = k_of(order);

    // (*): |G| < 2^(n - k - e1)
    let e1 = (p + o - 1) * n / (o * p);
    let basic = match (n as i128) - (k as i128) - (e1 as i128) {
        d if d <= 0 => false,
        d => BigUint::from(order) < (BigUint::from(1u8) << (d as u64)),
    };

    // (**): n^39 < 24^4 * 2^(12 (n - k - e2))
    let e2 = 3 * n / 4;
    let d = (n as i128) - (k as i128) - (e2 as i128);
    let lhs = BigUint::from(n).pow(39);
    let c = BigUint::from(24u8).pow(4);
    let refined = if d >= 0 {
        lhs < c << (12 * d as u64)
    } else {
        lhs << (12 * (-d) as u64) < c
    };

    Ok(CountingCertificates {
        basic,
        refined,
        degree: n,
        prime: p,
        smallest_order: o,
        k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gfmatrix::{affine_primitive, gamma0_group};

    #[test]
    fn identity_stabilizes_everything() {
        let id = Permutation::identity(5);
        assert_eq!(stabilized_subset_count(&id).unwrap(), 32);
    }

    #[test]
    fn transposition_on_two_points() {
        let p = Permutation::from_images(vec![1, 0]).unwrap();
        // n(g) = 1: the empty set and the full set
        assert_eq!(stabilized_subset_count(&p).unwrap(), 2);
    }

    #[test]
    fn double_transposition_on_four_points() {
        let p = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(stabilized_subset_count(&p).unwrap(), 4);
    }

    #[test]
    fn certificate_holds_for_degree_128_affine() {
        // V : C with |G| = 128 * 127 on GF(2)^7
        let g = affine_primitive(&gamma0_group(2, 7).unwrap()).unwrap();
        assert_eq!(g.order(), 128 * 127);
        let c = counting_certificates(&g).unwrap();
        assert_eq!((c.prime, c.smallest_order), (2, 2));
        assert_eq!(c.k, k_of(128 * 127));
        assert!(c.basic);
    }

    #[test]
    fn small_cases_fail_certificates() {
        // S4 on 4 points: 24 * 2^3 = 192 >= 2^(4-3)
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap();
        let c = counting_certificates(&s4).unwrap();
        assert!(!c.basic);

        // S3 on 3 points fails the refined certificate
        let s3 = PermGroup::new(
            3,
            vec![
                Permutation::from_images(vec![1, 0, 2]).unwrap(),
                Permutation::from_images(vec![1, 2, 0]).unwrap(),
            ],
        )
        .unwrap();
        let c = counting_certificates(&s3).unwrap();
        assert!(!c.refined);
    }
}
