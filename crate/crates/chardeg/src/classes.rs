//! Conjugacy classes by generator-conjugation closure over the full element
//! list.

use std::collections::HashMap;

use permcore::{PermGroup, Permutation};

use crate::error::{DegreeError, Result};

/// Element-enumeration budget for class computations.
pub const CLASS_ENUM_BUDGET: u128 = 1_000_000;

pub struct ConjugacyClasses {
    /// One representative per class; class 0 is the identity class.
    pub representatives: Vec<Permutation>,
    pub sizes: Vec<u64>,
    /// Pairing of each class with the class of inverses; an involution.
    pub inverse_map: Vec<usize>,
    /// All group elements in chain order.
    pub elements: Vec<Permutation>,
    /// Class index of each element, parallel to `elements`.
    pub class_of_element: Vec<u32>,
    element_index: HashMap<Vec<u32>, u32>,
}

impl ConjugacyClasses {
    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.element_index
            .get(g.images())
            .map(|&i| self.class_of_element[i as usize] as usize)
    }

    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Computes the complete class list with inverse pairing.
pub fn conjugacy_classes(g: &PermGroup) -> Result<ConjugacyClasses> {
    let order = g.order();
    if order > CLASS_ENUM_BUDGET {
        return Err(DegreeError::Budget(format!(
            "order {order} exceeds the class enumeration budget"
        )));
    }
    let mut elements: Vec<Permutation> = g.elements().collect();
    // identity first, then deterministic order
    elements.sort_by(|a, b| a.images().cmp(b.images()));
    let mut element_index: HashMap<Vec<u32>, u32> = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        element_index.insert(e.images().to_vec(), i as u32);
    }

    let mut class_of_element = vec![u32::MAX; elements.len()];
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();
    for start in 0..elements.len() {
        if class_of_element[start] != u32::MAX {
            continue;
        }
        let class_id = representatives.len() as u32;
        representatives.push(elements[start].clone());
        let mut members = vec![start as u32];
        class_of_element[start] = class_id;
        let mut i = 0;
        while i < members.len() {
            let cur = elements[members[i] as usize].clone();
            for gen in g.generators() {
                let conj = cur.conjugate_by(gen);
                let idx = element_index[conj.images()];
                if class_of_element[idx as usize] == u32::MAX {
                    class_of_element[idx as usize] = class_id;
                    members.push(idx);
                }
            }
            i += 1;
        }
        sizes.push(members.len() as u64);
    }

    let inverse_map: Vec<usize> = representatives
        .iter()
        .map(|r| {
            let inv = r.inverse();
            let idx = element_index[inv.images()];
            class_of_element[idx as usize] as usize
        })
        .collect();

    Ok(ConjugacyClasses {
        representatives,
        sizes,
        inverse_map,
        elements,
        class_of_element,
        element_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn s3_classes() {
        let c = conjugacy_classes(&s3()).unwrap();
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(c.sizes.iter().sum::<u64>(), 6);
    }

    #[test]
    fn s4_classes() {
        let c = conjugacy_classes(&s4()).unwrap();
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn abelian_all_singletons() {
        let c6 = PermGroup::new(
            6,
            vec![Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap()],
        )
        .unwrap();
        let c = conjugacy_classes(&c6).unwrap();
        assert_eq!(c.count(), 6);
        assert!(c.sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn inverse_map_is_involution_and_sizes_divide() {
        let c = conjugacy_classes(&s4()).unwrap();
        for (i, &j) in c.inverse_map.iter().enumerate() {
            assert_eq!(c.inverse_map[j], i);
            assert_eq!(c.sizes[i], c.sizes[j]);
        }
        for &s in &c.sizes {
            assert_eq!(24 % s, 0);
        }
    }
}
