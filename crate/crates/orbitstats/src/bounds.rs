//! The order bound for solvable permutation groups and the largest-orbit
//! bound for solvable linear groups, plus the direct-sum composition lower
//! bound for decomposable modules.

use num_bigint::BigUint;
use permcore::PermGroup;
use serde_json::json;

use gfmatrix::{vector_orbits, FieldError, Mat, MatrixGroup};

use crate::constants::constants;
use crate::error::{CheckError, Result};
use crate::numeric::ln_u128;
use crate::outcome::CheckOutcome;

/// |G| <= lambda^(n-1) for a solvable group of degree n, compared in log
/// space; exact equality (|G|^3 = 24^(n-1)) is noted in the witness.
pub fn solvable_order_bound(g: &PermGroup, group_id: &str) -> Result<CheckOutcome> {
    if !g.is_solvable() {
        return Err(CheckError::NotSolvable);
    }
    let n = g.degree();
    let order = g.order();
    let lhs = ln_u128(order);
    let rhs = constants().ln_lambda.mul_int(n as i128 - 1);
    let exact_tight =
        BigUint::from(order).pow(3) == BigUint::from(24u8).pow(n as u32 - 1);
    Ok(CheckOutcome::classify(
        "order_bound",
        group_id,
        &lhs,
        &rhs,
        json!({
            "degree": n,
            "order": order.to_string(),
            "exact_equality": exact_tight,
        }),
    ))
}

/// lambda |G| <= M^alpha for a nontrivial solvable linear group, with M the
/// largest orbit size on the vector space.
pub fn largest_orbit_bound(g: &MatrixGroup, group_id: &str) -> Result<CheckOutcome> {
    let order = g.order()?;
    if order == 1 {
        return Err(CheckError::TrivialGroup);
    }
    let orbits = vector_orbits(g)?;
    let c = constants();
    let lhs = c.ln_lambda.add(&ln_u128(order));
    let rhs = c.alpha.mul(&ln_u128(orbits.largest));
    Ok(CheckOutcome::classify(
        "orbit_bound",
        group_id,
        &lhs,
        &rhs,
        json!({
            "order": order.to_string(),
            "largest_orbit": orbits.largest.to_string(),
            "witness_vector": orbits.witness,
        }),
    ))
}

/// Budget for enumerating element matrices of decomposable groups.
const KERNEL_ENUM_BUDGET: usize = 1 << 16;

fn project(m: &Mat, rows: std::ops::Range<usize>) -> Mat {
    let dim = rows.len();
    let mut entries = Vec::with_capacity(dim * dim);
    for i in rows.clone() {
        for j in rows.clone() {
            entries.push(m.at(i, j));
        }
    }
    Mat { dim, entries }
}

fn is_block_diagonal(m: &Mat, dim1: usize) -> bool {
    let n = m.dim;
    for i in 0..n {
        for j in 0..n {
            if (i < dim1) != (j < dim1) && m.at(i, j) != 0 {
                return false;
            }
        }
    }
    true
}

/// For V = V1 + V2 with both summands invariant: m1 * m2, where m1 is the
/// largest G-orbit size on V1 and m2 the largest orbit of the pointwise
/// V1-stabilizer on V2. The product never exceeds the true largest orbit
/// size on V.
pub fn direct_sum_orbit_lower_bound(g: &MatrixGroup, dim1: usize) -> Result<u128> {
    let dim2 = g
        .dim
        .checked_sub(dim1)
        .filter(|&d| d > 0 && dim1 > 0)
        .ok_or_else(|| CheckError::Precondition("invalid block split".into()))?;
    for m in g.generators() {
        if !is_block_diagonal(m, dim1) {
            return Err(CheckError::Precondition(
                "generators are not block-diagonal for the given split".into(),
            ));
        }
    }
    let proj1: Vec<Mat> = g.generators().iter().map(|m| project(m, 0..dim1)).collect();
    let g1 = MatrixGroup::new(g.field.clone(), dim1, proj1).map_err(CheckError::Field)?;
    let m1 = vector_orbits(&g1)?.largest;

    // pointwise stabilizer of V1: elements whose first block is the identity
    let elements = g
        .element_matrices(KERNEL_ENUM_BUDGET)
        .map_err(|e| match e {
            FieldError::Budget(b) => CheckError::Budget(b),
            other => CheckError::Field(other),
        })?;
    let id1 = Mat::identity(dim1);
    let mut kernel_blocks: Vec<Mat> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for m in &elements {
        if project(m, 0..dim1) == id1 {
            let block2 = project(m, dim1..g.dim);
            if seen.insert(block2.entries.clone()) {
                kernel_blocks.push(block2);
            }
        }
    }
    let g2 = MatrixGroup::new(g.field.clone(), dim2, kernel_blocks).map_err(CheckError::Field)?;
    let m2 = vector_orbits(&g2)?.largest;
    Ok(m1 * m2)
}
