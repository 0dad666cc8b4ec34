//! Additive and multiplicative Deligne–Simpson problems for generic
//! eigenvalues: class shapes, the size-reducing construction, the catalog
//! of rigid series and eigenvalue genericity checks.

pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod genericity;
pub mod jnf;
pub mod oracle;
pub mod partition;
pub mod reduction;
pub mod rigidity;

pub use error::{Error, Result};
pub use jnf::{ConjugacyShape, Jnf, JnfTuple, MultiplicityVector, Pmv, ShapeTuple};
pub use partition::Partition;
pub use reduction::{decide, Reason, ReductionTrace, Verdict};
