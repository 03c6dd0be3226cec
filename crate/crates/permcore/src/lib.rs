//! Permutations and permutation groups with exact order via stabilizer
//! chains, plus the subgroup primitives (solvability, primitivity, subset
//! orbits, coset actions) the rest of the workspace builds on.
//!
//! Groups are immutable once their chain is built; the chain is constructed
//! on first use behind a [`std::sync::OnceLock`], so all query operations are
//! safe for simultaneous read-only use.

pub mod blocks;
pub mod chain;
pub mod cosets;
pub mod error;
pub mod group;
pub mod perm;
pub mod solvable;
pub mod subsets;

pub use blocks::is_primitive;
pub use chain::StabChain;
pub use cosets::CosetTable;
pub use error::{GroupError, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub use solvable::{is_solvable, minimal_normal_regular, prime_power, MinimalNormal};
pub use subsets::{mask_from_points, points_from_mask, subset_orbit, SubsetOrbit};

impl PermGroup {
    /// Convenience wrapper for [`solvable::is_solvable`].
    pub fn is_solvable(&self) -> bool {
        solvable::is_solvable(self)
    }

    /// Convenience wrapper for [`blocks::is_primitive`].
    pub fn is_primitive(&self) -> bool {
        blocks::is_primitive(self)
    }
}
