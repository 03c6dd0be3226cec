//! Actions on cosets of a subgroup, used to realize quotients.

use crate::error::{GroupError, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// The transitive action of a group on the right cosets of a subgroup.
///
/// `action` is the image of the parent in the symmetric group of degree
/// `index`; when the subgroup is normal this image is isomorphic to the
/// quotient.
pub struct CosetTable {
    pub subgroup_order: u128,
    pub parent_order: u128,
    pub index: u128,
    /// Coset representatives; `reps[0]` is the identity.
    pub reps: Vec<Permutation>,
    subgroup: PermGroup,
    /// Images of the parent generators on cosets, in generator order.
    pub action: PermGroup,
}

impl CosetTable {
    /// Coset index of an arbitrary parent element, by scanning the reps.
    fn coset_of(&self, g: &Permutation) -> u32 {
        for (i, r) in self.reps.iter().enumerate() {
            if self.subgroup.contains(&g.mul(&r.inverse())) {
                return i as u32;
            }
        }
        unreachable!("element lies in no coset; reps are incomplete")
    }

    /// The permutation an arbitrary parent element induces on the cosets.
    pub fn image_of(&self, g: &Permutation) -> Permutation {
        let images: Vec<u32> = self
            .reps
            .iter()
            .map(|r| self.coset_of(&r.mul(g)))
            .collect();
        Permutation::from_images(images).expect("coset action is a bijection")
    }
}

impl PermGroup {
    /// Enumerates the cosets of the subgroup generated by `subgroup_gens`
    /// (which must be members) and returns the action on them.
    pub fn coset_action(&self, subgroup_gens: &[Permutation]) -> Result<CosetTable> {
        for h in subgroup_gens {
            if !self.contains(h) {
                return Err(GroupError::NotMember);
            }
        }
        let subgroup = PermGroup::new(self.degree(), subgroup_gens.to_vec())?;
        let subgroup_order = subgroup.order();
        let parent_order = self.order();

        let mut reps: Vec<Permutation> = vec![Permutation::identity(self.degree())];
        let mut i = 0;
        while i < reps.len() {
            let r = reps[i].clone();
            for g in self.generators() {
                let z = r.mul(g);
                if !reps
                    .iter()
                    .any(|y| subgroup.contains(&z.mul(&y.inverse())))
                {
                    reps.push(z);
                }
            }
            i += 1;
        }
        let index = reps.len() as u128;
        if index * subgroup_order != parent_order {
            return Err(GroupError::Internal(format!(
                "coset enumeration found {index} cosets for index {}",
                parent_order / subgroup_order
            )));
        }

        let mut table = CosetTable {
            subgroup_order,
            parent_order,
            index,
            reps,
            subgroup,
            action: PermGroup::trivial(1),
        };
        let action_gens: Vec<Permutation> = self
            .generators()
            .iter()
            .map(|g| table.image_of(g))
            .collect();
        table.action = PermGroup::new(index as usize, action_gens)?;
        Ok(table)
    }
}
