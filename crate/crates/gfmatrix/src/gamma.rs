//! Semilinear groups on GF(q^n): the full group of maps x -> a x^sigma with
//! a nonzero and sigma in Gal(GF(q^n)/GF(q)), and its multiplication-only
//! subgroup, both realized as GF(p)-linear matrix groups.

use std::sync::Arc;

use crate::error::{FieldError, Result};
use crate::field::{prime_power, FieldSpec};
use crate::matrix::{Mat, MatrixGroup};

/// Construction budget: q^n must stay at or below this.
pub const GAMMA_SPACE_LIMIT: u64 = 1 << 20;
/// Self-check budget: orders are verified through the bridge up to here at
/// construction time; larger parameters are covered by the order tests.
const SELF_CHECK_LIMIT: u64 = 1 << 10;

/// The matrix of a GF(p)-linear map on GF(p^d), given its action on the
/// polynomial basis 1, x, ..., x^(d-1). Row i is the coordinate vector of the
/// image of x^i.
fn linear_map_matrix(field: &FieldSpec, dim: usize, map: impl Fn(u64) -> u64) -> Mat {
    let p = field.characteristic();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let basis = p.pow(i as u32); // encoding of x^i
        let image = map(basis);
        let mut row = Vec::with_capacity(dim);
        let mut e = image;
        for _ in 0..dim {
            row.push(e % p);
            e /= p;
        }
        rows.push(row);
    }
    Mat::from_rows(&rows).expect("square by construction")
}

fn gamma_parts(q: u64, n: u32) -> Result<(u64, usize, Arc<FieldSpec>, Mat)> {
    let (p, k) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
    let qn = q
        .checked_pow(n)
        .filter(|&v| v <= GAMMA_SPACE_LIMIT)
        .ok_or_else(|| FieldError::Budget(format!("q^n exceeds {GAMMA_SPACE_LIMIT}")))?;
    let dim = k * n as usize;
    // the big field GF(q^n) = GF(p^dim)
    let big = FieldSpec::with_least_modulus(p, dim)?;
    debug_assert_eq!(big.size(), qn);
    let alpha = big.multiplicative_generator()?;
    let mult = linear_map_matrix(&big, dim, |x| big.mul(x, alpha));
    let prime = Arc::new(FieldSpec::prime_field(p)?);
    Ok((p, dim, prime, mult))
}

/// The multiplication-only group x -> a x on GF(q^n), of order q^n - 1,
/// as GF(p)-linear matrices.
pub fn gamma0_group(q: u64, n: u32) -> Result<MatrixGroup> {
    let (_, dim, prime, mult) = gamma_parts(q, n)?;
    let g = MatrixGroup::new(prime, dim, vec![mult])?;
    self_check_order(&g, (q.pow(n) - 1) as u128, "gamma0")?;
    Ok(g)
}

/// The full semilinear group x -> a x^sigma on GF(q^n) with sigma ranging
/// over Gal(GF(q^n)/GF(q)), of order n (q^n - 1).
pub fn gamma_group(q: u64, n: u32) -> Result<MatrixGroup> {
    let (p, dim, prime, mult) = gamma_parts(q, n)?;
    let (_, k) = prime_power(q).expect("checked");
    let big = FieldSpec::with_least_modulus(p, dim)?;
    let mut gens = vec![mult];
    if n > 1 {
        // the Galois generator x -> x^q is the k-fold p-power Frobenius
        let galois = linear_map_matrix(&big, dim, |x| {
            let mut y = x;
            for _ in 0..k {
                y = big.frobenius(y);
            }
            y
        });
        gens.push(galois);
    }
    let g = MatrixGroup::new(prime, dim, gens)?;
    self_check_order(&g, n as u128 * (q.pow(n) - 1) as u128, "gamma")?;
    Ok(g)
}

fn self_check_order(g: &MatrixGroup, expect: u128, what: &str) -> Result<()> {
    if g.space_size() <= SELF_CHECK_LIMIT as u128 {
        let got = g.order()?;
        if got != expect {
            return Err(FieldError::Internal(format!(
                "{what} group order {got}, expected {expect}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::vector_orbits;

    #[test]
    fn gamma_2_2_is_gl22() {
        let g = gamma_group(2, 2).unwrap();
        assert_eq!(g.dim, 2);
        assert_eq!(g.order().unwrap(), 6);
        // orbit sizes {1, 3} on GF(4)
        let mut sizes = vector_orbits(&g).unwrap().sizes;
        sizes.sort();
        assert_eq!(sizes, vec![1, 3]);
        assert_eq!(vector_orbits(&g).unwrap().largest, 3);
    }

    #[test]
    fn gamma0_2_4_has_order_15() {
        let g = gamma0_group(2, 4).unwrap();
        assert_eq!(g.order().unwrap(), 15);
    }

    #[test]
    fn gamma_3_2_has_order_16() {
        let g = gamma_group(3, 2).unwrap();
        assert_eq!(g.order().unwrap(), 16);
    }

    #[test]
    fn gamma_orders_match_formula() {
        for (q, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (5, 2), (2, 6), (8, 2)] {
            let g = gamma_group(q, n).unwrap();
            assert_eq!(
                g.order().unwrap(),
                n as u128 * (q.pow(n) - 1) as u128,
                "gamma({q}^{n})"
            );
            let g0 = gamma0_group(q, n).unwrap();
            assert_eq!(g0.order().unwrap(), (q.pow(n) - 1) as u128);
        }
    }

    #[test]
    fn gamma_order_formula_at_the_catalog_ceiling() {
        // a large parameter pair beyond the construction-time self-check
        let g = gamma_group(2, 12).unwrap();
        assert_eq!(g.order().unwrap(), 12 * 4095);
        let g = gamma0_group(64, 2).unwrap();
        assert_eq!(g.order().unwrap(), 4095);
    }

    #[test]
    fn gamma0_is_normal_cyclic_of_index_n() {
        let (q, n) = (3, 2);
        let g = gamma_group(q, n).unwrap();
        let g0 = gamma0_group(q, n).unwrap();
        let pg = g.to_perm().unwrap();
        let pg0 = g0.to_perm().unwrap();
        assert_eq!(pg.order() / pg0.order(), n as u128);
        assert!(pg.normalizes(pg0));
        assert!(pg0.is_abelian());
    }
}
