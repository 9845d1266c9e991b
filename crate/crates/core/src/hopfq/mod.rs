//! Hopf quasigroups by structure constants: axiom suites, loop
//! linearisation, dualization, and automorphisms.

mod automorphism;
mod coquasi;
mod structure;

pub use automorphism::{automorphism_from_loop_perm, check_automorphism, HqgAutomorphism};
pub use coquasi::{check_coquasigroup, coquasigroup_predicates, dualize, CoquasigroupPredicates, HopfCoquasigroup};
pub use structure::{
    ab_flexible_witness, antipode_properties, check_hopf_quasigroup, hopf_predicates, loop_algebra,
    HopfPredicates, HopfQuasigroup, StructureMaps,
};

use crate::scalar::Scalar;

/// `α(h1)(gβ(h2)) = (α(h1)g)β(h2)` for all basis pairs.
pub fn ab_flexible<T: Scalar>(h: &HopfQuasigroup<T>, alpha: &HqgAutomorphism<T>, beta: &HqgAutomorphism<T>) -> bool {
    ab_flexible_witness(h, Some(alpha.matrix()), Some(beta.matrix())).is_none()
}
