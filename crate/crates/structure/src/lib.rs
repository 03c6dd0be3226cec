//! Sylow subgroups, p-cores, Fitting and second-Fitting subgroups, and the
//! Fitting-index bound verifications for solvable groups.

pub mod error;
pub mod fitting;
pub mod sylow;
pub mod verify;

pub use error::{Result, StructureError};
pub use fitting::{fitting, fitting2, FittingRecord, TowerRecord};
pub use sylow::{p_core, p_part, prime_factors, sylow};
pub use verify::{
    verify_fitting_orbit_bound, verify_gluck, verify_navarro, verify_second_fitting,
};
