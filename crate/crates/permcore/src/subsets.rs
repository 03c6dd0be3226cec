//! Orbits of point subsets under a group, for degrees up to 64.
//!
//! Subsets are encoded as `u64` bitmasks, so the setwise-stabilizer index of a
//! subset is just the size of its orbit in the power set.

use std::collections::HashSet;

use crate::error::{GroupError, Result};
use crate::group::PermGroup;

/// Orbit of a subset in the power set: its size and the least mask it
/// contains (a canonical representative).
pub struct SubsetOrbit {
    pub size: u128,
    pub min_mask: u64,
    pub members: Vec<u64>,
}

/// Breadth-first closure of `mask` under the group generators.
pub fn subset_orbit(g: &PermGroup, mask: u64) -> Result<SubsetOrbit> {
    if g.degree() > 64 {
        return Err(GroupError::SubsetDegreeLimit(g.degree()));
    }
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue = vec![mask];
    seen.insert(mask);
    let mut min_mask = mask;
    let mut i = 0;
    while i < queue.len() {
        let m = queue[i];
        for gen in g.generators() {
            let im = gen.apply_mask(m);
            if seen.insert(im) {
                if im < min_mask {
                    min_mask = im;
                }
                queue.push(im);
            }
        }
        i += 1;
    }
    Ok(SubsetOrbit {
        size: seen.len() as u128,
        min_mask,
        members: queue,
    })
}

pub fn mask_from_points(degree: usize, points: &[u32]) -> Result<u64> {
    if degree > 64 {
        return Err(GroupError::SubsetDegreeLimit(degree));
    }
    let mut mask = 0u64;
    for &p in points {
        if p as usize >= degree {
            return Err(GroupError::PointOutOfRange { point: p, degree });
        }
        mask |= 1u64 << p;
    }
    Ok(mask)
}

pub fn points_from_mask(mask: u64) -> Vec<u32> {
    let mut out = Vec::new();
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

impl PermGroup {
    /// Index of the setwise stabilizer of a point subset, computed as the
    /// size of the subset's orbit in the power set. The stabilizer order is
    /// `order / index`.
    pub fn setwise_stabilizer_index(&self, delta: &[u32]) -> Result<u128> {
        let mask = mask_from_points(self.degree(), delta)?;
        Ok(subset_orbit(self, mask)?.size)
    }
}
