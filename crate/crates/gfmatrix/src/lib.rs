//! Finite-field arithmetic GF(p^k), matrix groups on F^n, the semilinear
//! group family, the exceptional constructions, affine primitive permutation
//! groups, and the matrix-to-permutation bridge.

pub mod affine;
pub mod error;
pub mod exceptional;
pub mod field;
pub mod gamma;
pub mod matrix;
pub mod orbits;

pub use affine::affine_primitive;
pub use error::{FieldError, Result};
pub use exceptional::{build_exceptional, ExceptionalTag};
pub use field::{is_prime, poly_irreducible, prime_power, FieldSpec};
pub use gamma::{gamma0_group, gamma_group};
pub use matrix::{Mat, MatrixGroup};
pub use orbits::{
    is_irreducible, orbit_size_of, regular_orbits_on_double, vector_orbits, RegularPairs,
    VectorOrbits,
};
