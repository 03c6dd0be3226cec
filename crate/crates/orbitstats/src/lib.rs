//! The inequality engine: high-precision bound constants, cycle statistics,
//! subset-stabilization counting, the power-set orbit search, and the
//! orbit-size and order bounds with tolerance-classified certificates.

pub mod bounds;
pub mod constants;
pub mod counting;
pub mod cycles;
pub mod error;
pub mod gamma_checks;
pub mod numeric;
pub mod outcome;
pub mod powerset;

pub use bounds::{direct_sum_orbit_lower_bound, largest_orbit_bound, solvable_order_bound};
pub use constants::{constants, k_of, BoundConstants};
pub use counting::{counting_certificates, stabilized_subset_count, CountingCertificates};
pub use cycles::{check_cycle_bound, cycle_stats, smallest_prime_factor, CycleBoundReport, CycleStats};
pub use error::{CheckError, Result};
pub use gamma_checks::{gamma_case_checks, gamma_exception_table, GammaRow, GammaTable};
pub use numeric::{ln_big, ln_u128, Fix};
pub use outcome::{CheckOutcome, CheckStatus};
pub use powerset::{powerset_orbit_search, Certificate, PowersetSearchOutcome};
