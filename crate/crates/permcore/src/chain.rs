//! Deterministic Schreier-Sims stabilizer chains.
//!
//! The chain stores, per level, a base point, the strong generators that
//! stalled at that level, and a Schreier tree for the orbit of the base under
//! all strong generators of this and deeper levels. Trees are built with an
//! augmented label set (generators plus their repeated squares) so that tree
//! depth stays logarithmic even for cyclic generators; transversal elements
//! are reconstructed on demand by walking the tree.

use std::collections::VecDeque;

use crate::perm::Permutation;

#[derive(Clone)]
struct Level {
    base: u32,
    /// Strong generators first stalling at this level.
    gens: Vec<Permutation>,
    /// Tree-building labels: the full generator set of this level plus
    /// repeated squares.
    labels: Vec<Permutation>,
    /// `tree[p] = (label index, parent)` for points in the orbit; the base
    /// carries a sentinel label index.
    tree: Vec<Option<(u32, u32)>>,
    orbit: Vec<u32>,
}

const ROOT: u32 = u32::MAX;

impl Level {
    fn new(degree: usize, base: u32) -> Self {
        Level {
            base,
            gens: Vec::new(),
            labels: Vec::new(),
            tree: vec![None; degree],
            orbit: Vec::new(),
        }
    }

    /// Recomputes the orbit and Schreier tree of the base under `full_gens`
    /// (the strong generators of this level and all deeper ones).
    fn rebuild(&mut self, full_gens: &[Permutation], degree: usize) {
        self.labels = full_gens.to_vec();
        // Repeated squares keep Schreier trees shallow for near-cyclic orbits.
        let extra = usize::BITS - degree.leading_zeros();
        for g in full_gens {
            let mut p = g.mul(g);
            for _ in 0..extra {
                if p.is_identity() {
                    break;
                }
                self.labels.push(p.clone());
                p = p.mul(&p);
            }
        }
        self.tree = vec![None; degree];
        self.orbit.clear();
        self.tree[self.base as usize] = Some((ROOT, self.base));
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for (li, label) in self.labels.iter().enumerate() {
                let y = label.apply(x);
                if self.tree[y as usize].is_none() {
                    self.tree[y as usize] = Some((li as u32, x));
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }

    /// Transversal element mapping the base to `point`.
    fn transversal(&self, mut point: u32, degree: usize) -> Permutation {
        let mut path = Vec::new();
        loop {
            let (li, parent) = self.tree[point as usize].expect("point not in orbit");
            if li == ROOT {
                break;
            }
            path.push(li);
            point = parent;
        }
        let mut u = Permutation::identity(degree);
        for &li in path.iter().rev() {
            u = u.mul(&self.labels[li as usize]);
        }
        u
    }

    fn in_orbit(&self, point: u32) -> bool {
        self.tree[point as usize].is_some()
    }
}

/// A base-and-strong-generating-set chain giving exact order and membership.
#[derive(Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain from the given generators. Deterministic: generators
    /// are processed in order and Schreier generators in orbit-then-generator
    /// order.
    pub fn build(degree: usize, gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let mut pending: VecDeque<(usize, Permutation)> = gens
            .iter()
            .filter(|g| !g.is_identity())
            .map(|g| (0usize, g.clone()))
            .collect();

        while let Some((from, g)) = pending.pop_front() {
            let (stall, residue) = chain.sift_from(from, g);
            if residue.is_identity() {
                continue;
            }
            if stall == chain.levels.len() {
                let base = residue.first_moved().expect("non-identity residue");
                chain.levels.push(Level::new(degree, base));
            }
            chain.levels[stall].gens.push(residue.clone());

            // The new generator enlarges the generating set of every level at
            // or above the stall level, so their orbits and Schreier sets must
            // be refreshed.
            for lv in (0..=stall).rev() {
                let full_gens = chain.full_gens(lv);
                let old_len = chain.levels[lv].orbit.len();
                chain.levels[lv].rebuild(&full_gens, degree);
                let level = &chain.levels[lv];
                if lv == stall || level.orbit.len() != old_len {
                    // all pairs over the (possibly new) orbit
                    sweep_schreier_pairs(level, &full_gens, degree, lv, &mut pending);
                } else {
                    // orbit unchanged: only pairs with the new generator are new
                    sweep_schreier_pairs(
                        level,
                        std::slice::from_ref(&residue),
                        degree,
                        lv,
                        &mut pending,
                    );
                }
            }
        }
        chain
    }

    /// Strong generators of level `lv` and everything below it.
    fn full_gens(&self, lv: usize) -> Vec<Permutation> {
        self.levels[lv..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    fn sift_from(&self, from: usize, g: Permutation) -> (usize, Permutation) {
        let mut g = g;
        for lv in from..self.levels.len() {
            if g.is_identity() {
                return (lv, g);
            }
            let level = &self.levels[lv];
            let x = g.apply(level.base);
            if x == level.base {
                continue;
            }
            if !level.in_orbit(x) {
                return (lv, g);
            }
            g = g.mul(&level.transversal(x, self.degree).inverse());
        }
        (self.levels.len(), g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Exact group order as the product of fundamental orbit lengths.
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u128)
            .product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (_, r) = self.sift_from(0, g.clone());
        r.is_identity()
    }

    pub fn base_points(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Iterates over all group elements in a deterministic order.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            chain: self,
            state: vec![0; self.levels.len()],
            exhausted: false,
        }
    }
}

/// Transversal cache cap: orbit length times degree, in words. Sweeps under
/// the cap materialize every transversal element once, in BFS order, so each
/// Schreier pair costs one composition and one comparison.
const SWEEP_CACHE_WORDS: usize = 1 << 25;

/// Enqueues the non-identity Schreier generators of `level` over `gens`.
fn sweep_schreier_pairs(
    level: &Level,
    gens: &[Permutation],
    degree: usize,
    lv: usize,
    pending: &mut VecDeque<(usize, Permutation)>,
) {
    if level.orbit.len().saturating_mul(degree) <= SWEEP_CACHE_WORDS {
        let mut pos = vec![0u32; degree];
        for (i, &x) in level.orbit.iter().enumerate() {
            pos[x as usize] = i as u32;
        }
        // BFS order puts every parent before its children
        let mut trans: Vec<Permutation> = Vec::with_capacity(level.orbit.len());
        trans.push(Permutation::identity(degree));
        for &x in &level.orbit[1..] {
            let (li, parent) = level.tree[x as usize].expect("orbit point");
            let u = trans[pos[parent as usize] as usize].mul(&level.labels[li as usize]);
            trans.push(u);
        }
        for (i, &x) in level.orbit.iter().enumerate() {
            for s in gens {
                let w = trans[i].mul(s);
                let uy = &trans[pos[s.apply(x) as usize] as usize];
                if w != *uy {
                    pending.push_back((lv + 1, w.mul(&uy.inverse())));
                }
            }
        }
    } else {
        for &x in &level.orbit {
            let ux = level.transversal(x, degree);
            for s in gens {
                let y = s.apply(x);
                let sg = ux.mul(s).mul(&level.transversal(y, degree).inverse());
                if !sg.is_identity() {
                    pending.push_back((lv + 1, sg));
                }
            }
        }
    }
}

/// Iterator over all elements of a chain, as products of transversal
/// representatives, deepest level first.
pub struct Elements<'a> {
    chain: &'a StabChain,
    state: Vec<usize>,
    exhausted: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.exhausted {
            return None;
        }
        let mut g = Permutation::identity(self.chain.degree);
        for (lv, &idx) in self.state.iter().enumerate().rev() {
            let level = &self.chain.levels[lv];
            let point = level.orbit[idx];
            if point != level.base {
                g = g.mul(&level.transversal(point, self.chain.degree));
            }
        }
        // odometer increment, level 0 fastest
        let mut lv = 0;
        loop {
            if lv == self.state.len() {
                self.exhausted = true;
                break;
            }
            self.state[lv] += 1;
            if self.state[lv] < self.chain.levels[lv].orbit.len() {
                break;
            }
            self.state[lv] = 0;
            lv += 1;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::collections::HashSet;

    fn closure_order(gens: &[Permutation], degree: usize) -> usize {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue = vec![Permutation::identity(degree)];
        seen.insert(queue[0].images().to_vec());
        while let Some(g) = queue.pop() {
            for s in gens {
                let h = g.mul(s);
                if seen.insert(h.images().to_vec()) {
                    queue.push(h);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn s4_order_and_membership() {
        let a = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let chain = StabChain::build(4, &[a.clone(), b.clone()]);
        assert_eq!(chain.order(), 24);
        assert_eq!(closure_order(&[a.clone(), b.clone()], 4), 24);
        assert!(chain.contains(&a));
        assert!(chain.contains(&b));
        assert!(chain.contains(&Permutation::identity(4)));
        assert!(!chain.contains(&Permutation::identity(5)));
    }

    #[test]
    fn element_iteration_is_exhaustive() {
        let a = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let b = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        let chain = StabChain::build(4, &[a, b]);
        let all: HashSet<Vec<u32>> = chain.elements().map(|g| g.images().to_vec()).collect();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn cyclic_large_orbit() {
        // single 97-cycle: order 97, shallow tree via squared labels
        let c: Vec<u32> = (0..97).map(|i| (i + 1) % 97).collect();
        let g = Permutation::from_images(c).unwrap();
        let chain = StabChain::build(97, &[g]);
        assert_eq!(chain.order(), 97);
    }

    #[test]
    fn chain_order_matches_closure_on_small_groups() {
        let cases: Vec<(usize, Vec<Vec<u32>>)> = vec![
            (3, vec![vec![1, 0, 2], vec![1, 2, 0]]),          // S3
            (4, vec![vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),    // D8? rotation + reflection
            (5, vec![vec![1, 2, 3, 4, 0], vec![0, 2, 4, 1, 3]]), // AGL(1,5)
            (6, vec![vec![1, 2, 0, 4, 5, 3], vec![3, 4, 5, 0, 1, 2]]),
            (5, vec![vec![1, 2, 0, 3, 4], vec![0, 1, 2, 4, 3]]),
        ];
        for (degree, gens) in cases {
            let gens: Vec<Permutation> = gens
                .into_iter()
                .map(|v| Permutation::from_images(v).unwrap())
                .collect();
            let chain = StabChain::build(degree, &gens);
            assert_eq!(
                chain.order(),
                closure_order(&gens, degree) as u128,
                "degree {degree}"
            );
        }
    }
}
