//! Conjugacy classes, class-multiplication constants, and irreducible
//! character degrees via the modular class-matrix method. Only degrees are
//! recovered, never character values; b(G) is the largest degree.

pub mod classes;
pub mod dixon;
pub mod error;
pub mod modular;

pub use classes::{conjugacy_classes, ConjugacyClasses};
pub use dixon::{character_degrees, DegreeList};
pub use error::{DegreeError, Result};

use permcore::{PermGroup, Permutation};

/// The largest irreducible character degree b(G).
pub fn b_of(g: &PermGroup) -> Result<u64> {
    Ok(character_degrees(g)?.largest())
}

/// Character degrees of G/N, computed on the coset action image. N must be
/// normal.
pub fn degrees_of_quotient(g: &PermGroup, n_gens: &[Permutation]) -> Result<DegreeList> {
    let n = PermGroup::new(g.degree(), n_gens.to_vec())?;
    if !g.normalizes(&n) {
        return Err(DegreeError::NotNormal);
    }
    let table = g.coset_action(n_gens)?;
    character_degrees(&table.action)
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn b_of_s4_is_3() {
        assert_eq!(b_of(&s4()).unwrap(), 3);
    }

    #[test]
    fn quotient_degrees_are_a_sub_multiset() {
        let g = s4();
        let v4 = g.derived_subgroup().derived_subgroup();
        let q = degrees_of_quotient(&g, v4.generators()).unwrap();
        // S4 / V4 is S3
        assert_eq!(q.0, vec![1, 1, 2]);
        let full = character_degrees(&g).unwrap();
        assert!(q.sub_multiset_of(&full));
    }

    #[test]
    fn non_normal_rejected() {
        let g = s4();
        let h = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        assert!(matches!(
            degrees_of_quotient(&g, &[h]),
            Err(DegreeError::NotNormal)
        ));
    }

    #[test]
    fn dihedral_and_quaternion_degrees() {
        // D8 as symmetries of a square
        let d8 = PermGroup::new(
            4,
            vec![
                Permutation::from_images(vec![1, 2, 3, 0]).unwrap(),
                Permutation::from_images(vec![0, 3, 2, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(character_degrees(&d8).unwrap().0, vec![1, 1, 1, 1, 2]);

        // Q8 in its regular representation: right multiplication by i and j
        // on 1, i, -1, -i, j, k, -j, -k
        let q8 = PermGroup::new(
            8,
            vec![
                Permutation::from_images(vec![1, 2, 3, 0, 7, 4, 5, 6]).unwrap(),
                Permutation::from_images(vec![4, 5, 6, 7, 2, 3, 0, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(character_degrees(&q8).unwrap().0, vec![1, 1, 1, 1, 2]);
        assert_eq!(b_of(&q8).unwrap(), 2);
    }

    #[test]
    fn b_squared_at_most_index_of_center() {
        // b(G)^2 <= |G : Z(G)| on a few groups
        for (g, _) in [(s4(), "s4")] {
            let elements: Vec<Permutation> = g.elements().collect();
            let center = elements
                .iter()
                .filter(|e| g.generators().iter().all(|s| e.mul(s) == s.mul(e)))
                .count() as u128;
            let b = b_of(&g).unwrap() as u128;
            assert!(b * b <= g.order() / center);
        }
    }
}
