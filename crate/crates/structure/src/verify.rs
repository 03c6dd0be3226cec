//! The Fitting-index bound verifications: the alpha-bound for Gluck's
//! conjecture, the beta-bound for the second Fitting index, the Navarro
//! product bound for Sylow b-values, and the module-orbit form of the
//! Fitting-index bound for linear groups.

use gfmatrix::{vector_orbits, MatrixGroup};
use permcore::PermGroup;
use serde_json::json;

use chardeg::b_of;
use orbitstats::{constants, ln_u128, CheckOutcome, Fix};

use crate::error::{Result, StructureError};
use crate::fitting::{fitting, fitting2};
use crate::sylow::{prime_factors, sylow};

fn require_solvable(g: &PermGroup) -> Result<()> {
    if g.is_solvable() {
        Ok(())
    } else {
        Err(StructureError::NotSolvable)
    }
}

/// |G : F(G)| against b(G)^alpha (proven) and b(G)^2 (the conjectured bound).
pub fn verify_gluck(g: &PermGroup, group_id: &str) -> Result<(CheckOutcome, CheckOutcome)> {
    require_solvable(g)?;
    let f = fitting(g)?;
    let b = b_of(g)?;
    let lhs = ln_u128(f.index);
    let lnb = ln_u128(b as u128);
    let c = constants();
    let witness = json!({
        "b": b,
        "fitting_order": f.order.to_string(),
        "index": f.index.to_string(),
    });
    let alpha_bound = CheckOutcome::classify(
        "gluck_alpha",
        group_id,
        &lhs,
        &c.alpha.mul(&lnb),
        witness.clone(),
    );
    let square_bound =
        CheckOutcome::classify("gluck_square", group_id, &lhs, &lnb.mul_int(2), witness);
    Ok((alpha_bound, square_bound))
}

/// |G : F2(G)| against b(G)^beta.
pub fn verify_second_fitting(g: &PermGroup, group_id: &str) -> Result<CheckOutcome> {
    require_solvable(g)?;
    let t = fitting2(g)?;
    let b = b_of(g)?;
    let lhs = ln_u128(t.index_second);
    let rhs = constants().beta.mul(&ln_u128(b as u128));
    Ok(CheckOutcome::classify(
        "second_fitting",
        group_id,
        &lhs,
        &rhs,
        json!({
            "b": b,
            "fitting_order": t.fitting_order.to_string(),
            "second_fitting_order": t.second_order.to_string(),
            "index": t.index_second.to_string(),
        }),
    ))
}

/// prod_p b(G_p) against b(G)^(alpha+1) (proven) and b(G) (the conjectured
/// bound).
pub fn verify_navarro(g: &PermGroup, group_id: &str) -> Result<(CheckOutcome, CheckOutcome)> {
    require_solvable(g)?;
    let order = g.order();
    let b = b_of(g)?;
    let mut product_log = Fix::zero();
    let mut parts = Vec::new();
    for p in prime_factors(order) {
        let gp = sylow(g, p)?;
        let bp = b_of(&gp)?;
        product_log = product_log.add(&ln_u128(bp as u128));
        parts.push (json!({"p": p, "b": bp, "sylow_order": gp.order().to_string()}));
    }
    let lnb = ln_u128(b as u128);
    let c = constants();
    let witness = json!({"b": b, "sylow": parts});
    let proven = CheckOutcome::classify(
        "navarro_alpha_plus_one",
        group_id,
        &product_log,
        &c.alpha.add(&Fix::from_int(1)).mul(&lnb),
        witness.clone(),
    );
    let conjecture =
        CheckOutcome::classify("navarro_product", group_id, &product_log, &lnb, witness);
    Ok((proven, conjecture))
}

/// |G : F(G)| against M^beta for a nontrivial solvable linear group, with
/// F computed through the permutation bridge and M the largest vector orbit.
pub fn verify_fitting_orbit_bound(g: &MatrixGroup, group_id: &str) -> Result<CheckOutcome> {
    let order = g.order()?;
    if order == 1 {
        return Err(StructureError::TrivialGroup);
    }
    let perm = g.to_perm()?;
    require_solvable(perm)?;
    let f = fitting(perm)?;
    let orbits = vector_orbits(g)?;
    let lhs = ln_u128(f.index);
    let rhs = constants().beta.mul(&ln_u128(orbits.largest));
    Ok(CheckOutcome::classify(
        "fitting_orbit_bound",
        group_id,
        &lhs,
        &rhs,
        json!({
            "order": order.to_string(),
            "fitting_order": f.order.to_string(),
            "index": f.index.to_string(),
            "largest_orbit": orbits.largest.to_string(),
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gfmatrix::{build_exceptional, gamma_group, ExceptionalTag};
    use orbitstats::CheckStatus;
    use permcore::Permutation;

    fn s4() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 0, 2, 3]).unwrap(),
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::new(
            3,
            vec![
                Permutation::from_images(vec![1, 0, 2]).unwrap(),
                Permutation::from_images(vec![1, 2, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn gluck_bounds_on_s4_and_s3() {
        let (alpha, square) = verify_gluck(&s4(), "s4").unwrap();
        // 6 <= 3^alpha = 17.3 and 6 <= 9
        assert_eq!(alpha.status, CheckStatus::Pass);
        assert!((alpha.rhs_log.exp() - 17.307).abs() < 0.01);
        assert_eq!(square.status, CheckStatus::Pass);

        let (alpha, square) = verify_gluck(&s3(), "s3").unwrap();
        assert_eq!(alpha.status, CheckStatus::Pass);
        assert!((alpha.rhs_log.exp() - 6.043).abs() < 0.01);
        assert_eq!(square.status, CheckStatus::Pass);
    }

    #[test]
    fn second_fitting_bounds() {
        let out = verify_second_fitting(&s4(), "s4").unwrap();
        // 2 <= 3^beta = 7.2
        assert_eq!(out.status, CheckStatus::Pass);
        assert!((out.rhs_log.exp() - 7.198).abs() < 0.01);

        let out = verify_second_fitting(&s3(), "s3").unwrap();
        assert_eq!(out.status, CheckStatus::Pass);
        assert_eq!(out.lhs_log, 0.0); // index 1
    }

    #[test]
    fn sl23_tower() {
        let g = build_exceptional(ExceptionalTag::Sl23).unwrap();
        let perm = g.to_perm().unwrap();
        let f = fitting(perm).unwrap();
        assert_eq!(f.order, 8); // the quaternion subgroup
        let t = fitting2(perm).unwrap();
        assert_eq!(t.index_second, 1);
        let out = verify_second_fitting(perm, "sl23").unwrap();
        assert_eq!(out.status, CheckStatus::Pass);
    }

    #[test]
    fn navarro_on_s4_and_sl23() {
        let (proven, conjecture) = verify_navarro(&s4(), "s4").unwrap();
        assert_eq!(proven.status, CheckStatus::Pass);
        // b(D8) b(C3) = 2 <= b(S4) = 3
        assert_eq!(conjecture.status, CheckStatus::Pass);

        let g = build_exceptional(ExceptionalTag::Sl23).unwrap();
        let (proven, conjecture) = verify_navarro(g.to_perm().unwrap(), "sl23").unwrap();
        assert_eq!(proven.status, CheckStatus::Pass);
        assert_eq!(conjecture.status, CheckStatus::Pass);
    }

    #[test]
    fn abelian_navarro_is_tight() {
        let c6 = PermGroup::new(
            6,
            vec![Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
        )
        .unwrap();
        let (_, conjecture) = verify_navarro(&c6, "c6").unwrap();
        // product = 1 = b
        assert_eq!(conjecture.status, CheckStatus::Tight);
    }

    #[test]
    fn fitting_orbit_bound_examples() {
        // the semilinear group on GF(4): |G : F| = 2 <= 3^beta = 7.2
        let g = gamma_group(2, 2).unwrap();
        let out = verify_fitting_orbit_bound(&g, "gamma_2_2").unwrap();
        assert_eq!(out.status, CheckStatus::Pass);
        assert!((out.lhs_log.exp() - 2.0).abs() < 1e-9);
        assert!((out.rhs_log.exp() - 7.198).abs() < 0.01);

        // SL(2,3): 24/8 = 3 <= 8^beta = 42
        let g = build_exceptional(ExceptionalTag::Sl23).unwrap();
        let out = verify_fitting_orbit_bound(&g, "sl23").unwrap();
        assert_eq!(out.status, CheckStatus::Pass);
        assert!((out.rhs_log.exp() - 41.9).abs() < 0.2);
    }
}
