//! Orbit enumeration on the vector space, regular-orbit counting on V + V,
//! and irreducibility by spinning.

use crate::error::{FieldError, Result};
use crate::field::FieldSpec;
use crate::matrix::{Mat, MatrixGroup};

/// Vector-space budget for orbit enumeration.
pub const ORBIT_SPACE_LIMIT: u128 = 1 << 22;
/// Budget for pair counting on V + V (limit on |V|^2).
pub const PAIR_SPACE_LIMIT: u128 = 1 << 24;
/// Vector-space budget for irreducibility spinning.
pub const SPIN_SPACE_LIMIT: u128 = 1 << 20;

/// Orbit structure of a matrix group on its vector space.
pub struct VectorOrbits {
    /// Orbit sizes in discovery order (the zero orbit first).
    pub sizes: Vec<u128>,
    /// Largest orbit size M.
    pub largest: u128,
    /// Coordinates of one vector in a largest orbit (least vector index).
    pub witness: Vec<u64>,
}

/// Enumerates all orbits of the group on V, including the zero vector.
pub fn vector_orbits(g: &MatrixGroup) -> Result<VectorOrbits> {
    let space = g.space_size();
    if space > ORBIT_SPACE_LIMIT {
        return Err(FieldError::Budget(format!(
            "orbit space {space} exceeds {ORBIT_SPACE_LIMIT}"
        )));
    }
    let space = space as u64;
    let mut seen = vec![false; space as usize];
    let mut sizes = Vec::new();
    let mut largest = 0u128;
    let mut witness = 0u64;
    for start in 0..space {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let v = g.vector_from_index(orbit[i]);
            for m in g.generators() {
                let w = m.apply_row(&v, &g.field);
                let widx = g.index_of_vector(&w);
                if !seen[widx as usize] {
                    seen[widx as usize] = true;
                    orbit.push(widx);
                }
            }
            i += 1;
        }
        let size = orbit.len() as u128;
        if size > largest {
            largest = size;
            witness = start;
        }
        sizes.push(size);
    }
    Ok(VectorOrbits {
        sizes,
        largest,
        witness: g.vector_from_index(witness),
    })
}

/// Size of the orbit of a single vector.
pub fn orbit_size_of(g: &MatrixGroup, v: &[u64]) -> Result<u128> {
    let space = g.space_size();
    if space > ORBIT_SPACE_LIMIT {
        return Err(FieldError::Budget(format!(
            "orbit space {space} exceeds {ORBIT_SPACE_LIMIT}"
        )));
    }
    let mut seen = std::collections::HashSet::new();
    let mut orbit = vec![g.index_of_vector(v)];
    seen.insert(orbit[0]);
    let mut i = 0;
    while i < orbit.len() {
        let v = g.vector_from_index(orbit[i]);
        for m in g.generators() {
            let w = m.apply_row(&v, &g.field);
            let widx = g.index_of_vector(&w);
            if seen.insert(widx) {
                orbit.push(widx);
            }
        }
        i += 1;
    }
    Ok(orbit.len() as u128)
}

/// Outcome of regular-orbit counting on V + V.
pub struct RegularPairs {
    pub group_order: u128,
    /// Number of pairs (v, u) with trivial joint stabilizer.
    pub regular_pairs: u128,
    /// regular_pairs / |G|.
    pub regular_orbits: u128,
    /// When a regular pair exists: a vector from it whose centralizer order
    /// is at most sqrt(|G|), with that order.
    pub witness: Option<(Vec<u64>, u128)>,
}

/// Counts regular orbits of the group on V + V by marking, for every
/// nontrivial element, the pairs of vectors it fixes.
pub fn regular_orbits_on_double(g: &MatrixGroup, element_budget: usize) -> Result<RegularPairs> {
    let space = g.space_size();
    if space * space > PAIR_SPACE_LIMIT {
        return Err(FieldError::Budget(format!(
            "pair space {} exceeds {PAIR_SPACE_LIMIT}",
            space * space
        )));
    }
    let space = space as u64;
    let elements = g.element_matrices(element_budget)?;
    let order = elements.len() as u128;

    // fixed[v] per element, then mark pair (v, u) as non-regular
    let mut nonregular = vec![false; (space * space) as usize];
    for m in &elements {
        if m.is_identity() {
            continue;
        }
        let fixed: Vec<u64> = (0..space)
            .filter(|&idx| {
                let v = g.vector_from_index(idx);
                m.apply_row(&v, &g.field) == v
            })
            .collect();
        for &v in &fixed {
            for &u in &fixed {
                nonregular[(v * space + u) as usize] = true;
            }
        }
    }
    let mut regular_pairs = 0u128;
    let mut first: Option<(u64, u64)> = None;
    for v in 0..space {
        for u in 0..space {
            if !nonregular[(v * space + u) as usize] {
                regular_pairs += 1;
                if first.is_none() {
                    first = Some((v, u));
                }
            }
        }
    }
    if regular_pairs % order != 0 {
        return Err(FieldError::Internal(
            "regular pair count not divisible by group order".into(),
        ));
    }
    let witness = match first {
        None => None,
        Some((v, u)) => {
            let vv = g.vector_from_index(v);
            let uu = g.vector_from_index(u);
            let cv = order / orbit_size_of(g, &vv)?;
            let cu = order / orbit_size_of(g, &uu)?;
            let (best, c) = if cv <= cu { (vv, cv) } else { (uu, cu) };
            if c * c > order {
                return Err(FieldError::Internal(
                    "no small centralizer beside a regular pair".into(),
                ));
            }
            Some((best, c))
        }
    };
    Ok(RegularPairs {
        group_order: order,
        regular_pairs,
        regular_orbits: regular_pairs / order,
        witness,
    })
}

/// Smallest G-invariant subspace containing `v`, as a row basis.
fn spin(v: &[u64], gens: &[Mat], f: &FieldSpec) -> Vec<Vec<u64>> {
    let dim = v.len();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    // reduce w against basis; push if independent
    let add = |w: Vec<u64>, basis: &mut Vec<Vec<u64>>, pivots: &mut Vec<usize>| -> bool {
        let mut w = w;
        for (b, &pc) in basis.iter().zip(pivots.iter()) {
            if w[pc] != 0 {
                let factor = f.mul(w[pc], f.inv(b[pc]).expect("pivot nonzero"));
                for j in 0..dim {
                    let sub = f.mul(factor, b[j]);
                    w[j] = f.sub(w[j], sub);
                }
            }
        }
        if let Some(pc) = (0..dim).find(|&j| w[j] != 0) {
            basis.push(w);
            pivots.push(pc);
            true
        } else {
            false
        }
    };

    add(v.to_vec(), &mut basis, &mut pivots);
    let mut i = 0;
    while i < basis.len() {
        let cur = basis[i].clone();
        for m in gens {
            let w = m.apply_row(&cur, f);
            add(w, &mut basis, &mut pivots);
        }
        i += 1;
    }
    basis
}

/// True iff the spin of every nonzero vector is the full space.
pub fn is_irreducible(g: &MatrixGroup) -> Result<bool> {
    let space = g.space_size();
    if space > SPIN_SPACE_LIMIT {
        return Err(FieldError::Budget(format!(
            "spin space {space} exceeds {SPIN_SPACE_LIMIT}"
        )));
    }
    for idx in 1..space as u64 {
        let v = g.vector_from_index(idx);
        if spin(&v, g.generators(), &g.field).len() < g.dim {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use std::sync::Arc;

    fn gl22() -> MatrixGroup {
        let f = Arc::new(FieldSpec::prime_field(2).unwrap());
        MatrixGroup::new(
            f,
            2,
            vec![
                Mat::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap(),
                Mat::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap(),
            ],
        )
        .unwrap()
    }

    fn sl23() -> MatrixGroup {
        let f = Arc::new(FieldSpec::prime_field(3).unwrap());
        MatrixGroup::new(
            f,
            2,
            vec![
                Mat::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap(),
                Mat::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn scalar_group_orbits_on_gf3_squared() {
        // the scalar group {I, 2I} on GF(3)^2: orbit sizes {1,2,2,2,2}, M = 2
        let f = Arc::new(FieldSpec::prime_field(3).unwrap());
        let s = Mat::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap();
        let g = MatrixGroup::new(f, 2, vec![s]).unwrap();
        let mut sizes = vector_orbits(&g).unwrap().sizes;
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2, 2, 2]);
        assert_eq!(vector_orbits(&g).unwrap().largest, 2);
    }

    #[test]
    fn trivial_group_all_orbits_singletons() {
        let f = Arc::new(FieldSpec::prime_field(2).unwrap());
        let g = MatrixGroup::new(f, 2, vec![]).unwrap();
        let orbits = vector_orbits(&g).unwrap();
        assert!(orbits.sizes.iter().all(|&s| s == 1));
        assert_eq!(orbits.largest, 1);
    }

    #[test]
    fn gl22_has_exactly_one_regular_orbit_on_double() {
        let rp = regular_orbits_on_double(&gl22(), 100).unwrap();
        assert_eq!(rp.group_order, 6);
        assert_eq!(rp.regular_pairs, 6);
        assert_eq!(rp.regular_orbits, 1);
        let (_, c) = rp.witness.unwrap();
        assert!(c * c <= 6);
    }

    #[test]
    fn sl23_has_fewer_than_three_regular_orbits() {
        let rp = regular_orbits_on_double(&sl23(), 100).unwrap();
        assert_eq!(rp.group_order, 24);
        assert!(rp.regular_orbits < 3);
        assert_eq!(rp.regular_orbits, 2);
    }

    #[test]
    fn trivial_group_every_nonzero_pair_is_regular() {
        let f = Arc::new(FieldSpec::prime_field(2).unwrap());
        let g = MatrixGroup::new(f, 2, vec![]).unwrap();
        let rp = regular_orbits_on_double(&g, 10).unwrap();
        // all 16 pairs are regular for the trivial group
        assert_eq!(rp.regular_pairs, 16);
    }

    #[test]
    fn irreducibility_examples() {
        // multiplications of GF(4) on GF(2)^2 (order 3) act irreducibly
        let f = Arc::new(FieldSpec::prime_field(2).unwrap());
        let m = Mat::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap(); // mult by x in GF(4)
        let g = MatrixGroup::new(f.clone(), 2, vec![m.clone()]).unwrap();
        assert_eq!(g.order().unwrap(), 3);
        assert!(is_irreducible(&g).unwrap());

        // block sum of two copies is reducible
        let block = m.direct_sum(&m);
        let g2 = MatrixGroup::new(f.clone(), 4, vec![block]).unwrap();
        assert!(!is_irreducible(&g2).unwrap());

        // one-dimensional nontrivial group is irreducible
        let f3 = Arc::new(FieldSpec::prime_field(3).unwrap());
        let s = Mat::from_rows(&[vec![2]]).unwrap();
        let g3 = MatrixGroup::new(f3, 1, vec![s]).unwrap();
        assert!(is_irreducible(&g3).unwrap());
    }
}
