//! Solvability and the minimal normal subgroup of a primitive solvable group.

use crate::error::{GroupError, Result};
use crate::group::PermGroup;

/// Derived series length cap; desk-scale groups have derived length far below
/// this, so hitting the cap is reported as "not solvable".
const DERIVED_SERIES_CAP: usize = 30;

/// True iff the derived series reaches the trivial group.
pub fn is_solvable(g: &PermGroup) -> bool {
    let mut order = g.order();
    if order == 1 {
        return true;
    }
    let mut cur = g.derived_subgroup();
    for _ in 0..DERIVED_SERIES_CAP {
        let next_order = cur.order();
        if next_order == 1 {
            return true;
        }
        if next_order == order {
            return false;
        }
        order = next_order;
        cur = cur.derived_subgroup();
    }
    false
}

/// The minimal normal subgroup data of a primitive solvable group: the
/// subgroup itself together with the prime `p` and exponent `t` with
/// `|V| = p^t` equal to the degree.
pub struct MinimalNormal {
    pub subgroup: PermGroup,
    pub prime: u64,
    pub exponent: u32,
}

/// Factors `n` as a prime power, if it is one.
pub fn prime_power(n: u128) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 0u64;
    let mut d = 2u128;
    while d * d <= m {
        if m % d == 0 {
            p = d as u64;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((m as u64, 1));
    }
    let mut t = 0u32;
    while m % p as u128 == 0 {
        m /= p as u128;
        t += 1;
    }
    if m == 1 {
        Some((p, t))
    } else {
        None
    }
}

/// Returns the unique minimal normal subgroup of a primitive solvable group.
///
/// For such a group the last nontrivial term of the derived series is a
/// self-centralizing elementary abelian regular normal subgroup of order equal
/// to the degree; all of those properties are re-verified here.
pub fn minimal_normal_regular(g: &PermGroup) -> Result<MinimalNormal> {
    if !is_solvable(g) {
        return Err(GroupError::NotSolvable);
    }
    if g.order() == 1 || !crate::blocks::is_primitive(g) {
        return Err(GroupError::NotPrimitive);
    }
    let mut cur = g.clone();
    loop {
        let next = cur.derived_subgroup();
        if next.order() == 1 {
            break;
        }
        cur = next;
    }
    let v = cur;
    let degree = g.degree() as u128;
    let (prime, exponent) = prime_power(degree).ok_or_else(|| {
        GroupError::Internal(format!("primitive solvable degree {degree} is not a prime power"))
    })?;
    if v.order() != degree {
        return Err(GroupError::Internal(format!(
            "minimal normal subgroup order {} differs from degree {}",
            v.order(),
            degree
        )));
    }
    if !g.normalizes(&v) {
        return Err(GroupError::Internal(
            "minimal normal candidate is not normal".into(),
        ));
    }
    // elementary abelian and regular: every nontrivial element has order p and
    // no fixed point
    if !v.is_abelian() {
        return Err(GroupError::Internal("minimal normal candidate not abelian".into()));
    }
    for e in v.elements() {
        if e.is_identity() {
            continue;
        }
        if e.order() != prime as u128 {
            return Err(GroupError::Internal(
                "minimal normal candidate not elementary abelian".into(),
            ));
        }
        if e.fixed_point_count() != 0 {
            return Err(GroupError::Internal(
                "minimal normal candidate not regular".into(),
            ));
        }
    }
    Ok(MinimalNormal {
        subgroup: v,
        prime,
        exponent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn agl15() -> PermGroup {
        // x -> x+1 and x -> 2x on GF(5)
        let t = Permutation::from_images(vec![1, 2, 3, 4, 0]).unwrap();
        let m = Permutation::from_images(vec![0, 2, 4, 1, 3]).unwrap();
        PermGroup::new(5, vec![t, m]).unwrap()
    }

    fn a5() -> PermGroup {
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        PermGroup::new(5, vec![a, b]).unwrap()
    }

    #[test]
    fn solvability_examples() {
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap();
        assert!(is_solvable(&s4));
        assert!(!is_solvable(&a5()));
        assert!(is_solvable(&PermGroup::trivial(3)));
    }

    #[test]
    fn minimal_normal_of_agl15() {
        let g = agl15();
        assert_eq!(g.order(), 20);
        let mn = minimal_normal_regular(&g).unwrap();
        assert_eq!(mn.subgroup.order(), 5);
        assert_eq!(mn.prime, 5);
        assert_eq!(mn.exponent, 1);
    }

    #[test]
    fn minimal_normal_of_s4() {
        let s4 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap();
        let mn = minimal_normal_regular(&s4).unwrap();
        assert_eq!(mn.subgroup.order(), 4);
        assert_eq!(mn.prime, 2);
        assert_eq!(mn.exponent, 2);
    }

    #[test]
    fn a5_rejected() {
        assert!(matches!(
            minimal_normal_regular(&a5()),
            Err(GroupError::NotSolvable)
        ));
    }
}
