//! Semilattice decomposition of commutative Moufang groupoids into
//! Archimedean components.
//!
//! `a ρ b` holds when some power of `a` lies in the principal ideal of `b`,
//! and `σ` is mutual `ρ`. On commutative Moufang inputs `σ` is a congruence,
//! the quotient is a semilattice and every class is Archimedean on its own.
//! Everything here is also computable on arbitrary magmas, where the
//! certification flags report what actually holds.

mod congruence;
mod decompose;
mod ideal;
mod order;
mod partition;
mod relations;

pub use congruence::{quotient, verify_congruence, CongruenceReport, CongruenceViolation, Side};
pub use decompose::{decompose, CertificationFlags, Component, DecomposeOptions, Decomposition};
pub use ideal::{principal_ideal, Ideal};
pub use order::{is_semilattice, natural_order, SemilatticeOrder};
pub use partition::Partition;
pub use relations::{is_archimedean, rho, sigma_partition, RhoTable};
