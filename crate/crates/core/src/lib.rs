//! Exact computation of restricted representation counts and `t`-fold sumsets
//! `(hA)^(t)` for finite integer sets, the structure of those sumsets for large
//! `h`, and the thresholds beyond which that structure is guaranteed.

pub mod caps;
pub mod denumerant;
pub mod error;
pub mod extremal;
pub mod frobenius;
pub mod lattice;
pub mod numeric;
pub mod serde_count;
pub mod set;
pub mod structure;
pub mod threeset;

pub use caps::Caps;
pub use error::{Error, Result};
pub use set::{normalize, AffineRecord, Count, IntegerSet};
