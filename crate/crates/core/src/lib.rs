//! Finite commutative Moufang groupoids: identity checking, power and
//! translation properties, the decomposition into a semilattice of
//! Archimedean components, concrete example families and exhaustive
//! enumeration of small models.

pub mod caps;
pub mod decomp;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod identity;
pub mod lemmas;
pub mod magma;
pub mod power;
pub mod suite;

pub use caps::Caps;
pub use error::{Error, Result};
pub use identity::{check_identity, IdentityKind, IdentityReport};
pub use magma::{ElementId, Magma, TranslationWord};
