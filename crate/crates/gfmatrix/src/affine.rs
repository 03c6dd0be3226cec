//! Affine primitive permutation groups V : H on the vectors of a prime-field
//! space, from an irreducible solvable matrix group H.

use permcore::{PermGroup, Permutation};

use crate::error::{FieldError, Result};
use crate::matrix::MatrixGroup;
use crate::orbits::is_irreducible;

/// Point budget for affine constructions.
pub const AFFINE_SPACE_LIMIT: u128 = 1 << 20;

/// The permutation group V : H on the p^t points of the vector space, where
/// H must act over a prime field and irreducibly when t >= 2. The result is
/// primitive of degree p^t whenever H is irreducible.
pub fn affine_primitive(h: &MatrixGroup) -> Result<PermGroup> {
    if !h.field.is_prime_field() {
        return Err(FieldError::NotPrimeField {
            p: h.field.characteristic(),
            k: h.field.extension_degree(),
        });
    }
    let space = h.space_size();
    if space > AFFINE_SPACE_LIMIT {
        return Err(FieldError::Budget(format!(
            "affine space {space} exceeds {AFFINE_SPACE_LIMIT}"
        )));
    }
    if h.dim >= 2 && !is_irreducible(h)? {
        return Err(FieldError::NotIrreducible);
    }
    let space = space as u64;
    let degree = space as usize;
    let p = h.field.characteristic();
    let mut gens: Vec<Permutation> = Vec::new();
    // translations by the standard basis vectors
    for i in 0..h.dim {
        let mut images = Vec::with_capacity(degree);
        for idx in 0..space {
            let mut v = h.vector_from_index(idx);
            v[i] = (v[i] + 1) % p;
            images.push(h.index_of_vector(&v) as u32);
        }
        gens.push(Permutation::from_images(images)?);
    }
    // the linear part fixes 0 and acts on vectors
    for m in h.generators() {
        let mut images = Vec::with_capacity(degree);
        for idx in 0..space {
            let v = h.vector_from_index(idx);
            let w = m.apply_row(&v, &h.field);
            images.push(h.index_of_vector(&w) as u32);
        }
        gens.push(Permutation::from_images(images)?);
    }
    Ok(PermGroup::new(degree, gens)?)
}
