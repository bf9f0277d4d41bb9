//! Exchange-only universality for families of partitions.
//!
//! The crate decides whether a family of partitions, each labelling a qudit
//! encoded in a symmetric-group irreducible, admits universal computation by
//! exchange interactions alone. Decisions rest on exact combinatorics
//! (tableau counts, Littlewood–Richardson coefficients) and on numeric
//! matrices of Young's orthogonal form.

pub mod error;
pub mod lr;
pub mod partition;
pub mod repn;
pub mod schur_weyl;
pub mod tableau;
pub mod universality;

pub use error::{Error, Result};
pub use partition::{parse_partition, Partition, PartitionFamily};
