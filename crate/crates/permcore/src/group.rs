use std::sync::OnceLock;

use crate::chain::{Elements, StabChain};
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// A permutation group given by generators, with a lazily built stabilizer
/// chain for exact order and membership.
///
/// The chain is built at most once; concurrent readers block until the first
/// construction finishes, after which the group is immutable.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        // a built chain is carried over rather than recomputed
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.clone(),
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, {} generators)",
            self.degree,
            self.generators.len()
        )
    }
}

impl PermGroup {
    /// Builds a group from generators of equal degree. An empty list yields
    /// the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let generators = if generators.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            generators
        };
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    /// Exact group order via the stabilizer chain. Idempotent.
    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Chain membership test.
    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    /// Iterates over all elements; intended for desk-scale groups.
    pub fn elements(&self) -> Elements<'_> {
        self.chain().elements()
    }

    /// Orbit of a point under the generators, in BFS order.
    pub fn point_orbit(&self, start: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![start];
        seen[start as usize] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit
    }

    /// All point orbits, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let orbit = self.point_orbit(p);
            for &x in &orbit {
                seen[x as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.point_orbit(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if a.mul(b) != b.mul(a) {
                    return false;
                }
            }
        }
        true
    }

    /// Subgroup generated by the given elements of this group, with
    /// generators pruned through the chain so redundant ones are dropped.
    pub fn subgroup(&self, elements: &[Permutation]) -> Result<PermGroup> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut sub = PermGroup::trivial(self.degree);
        for e in elements {
            if !self.contains(e) {
                return Err(GroupError::NotMember);
            }
            if !sub.contains(e) {
                gens.push(e.clone());
                sub = PermGroup::new(self.degree, gens.clone())?;
            }
        }
        Ok(sub)
    }

    /// Normal closure of the subgroup generated by `seeds` under this group.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> PermGroup {
        let mut gens: Vec<Permutation> =
            seeds.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut closure = PermGroup::new(self.degree, gens.clone()).expect("degrees checked");
        let mut i = 0;
        while i < gens.len() {
            let h = gens[i].clone();
            for g in &self.generators {
                let c = h.conjugate_by(g);
                if !closure.contains(&c) {
                    gens.push(c);
                    closure = PermGroup::new(self.degree, gens.clone()).expect("degrees checked");
                }
            }
            i += 1;
        }
        closure
    }

    /// Derived subgroup: the normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Whether every generator of `other` lies in this group.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Whether the subgroup `h` is normalized by all generators.
    pub fn normalizes(&self, h: &PermGroup) -> bool {
        self.generators.iter().all(|g| {
            h.generators()
                .iter()
                .all(|x| h.contains(&x.conjugate_by(g)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn s4() -> PermGroup {
        let a = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        PermGroup::new(4, vec![a, b]).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(s4().order(), 24);
        let id_only = PermGroup::new(3, vec![Permutation::identity(3)]).unwrap();
        assert_eq!(id_only.order(), 1);
        let c3 = PermGroup::new(3, vec![Permutation::from_images(vec![1, 2, 0]).unwrap()]).unwrap();
        assert_eq!(c3.order(), 3);
    }

    #[test]
    fn orbit_sizes_partition_and_divide() {
        let g = s4();
        let orbits = g.orbits();
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, g.degree());
        for o in &orbits {
            assert_eq!(g.order() % o.len() as u128, 0);
        }
    }

    #[test]
    fn derived_series_of_s4() {
        let g = s4();
        let a4 = g.derived_subgroup();
        assert_eq!(a4.order(), 12);
        let v4 = a4.derived_subgroup();
        assert_eq!(v4.order(), 4);
        let triv = v4.derived_subgroup();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn membership_of_generators_and_outsiders() {
        let g = s4();
        for gen in g.generators() {
            assert!(g.contains(gen));
        }
        assert!(g.contains(&Permutation::identity(4)));
        let a4 = g.derived_subgroup();
        let odd = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        assert!(!a4.contains(&odd));
    }
}
