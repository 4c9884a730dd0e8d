//! Integer partitions, abaci, `t`-cores and `t`-quotients, and exact counts
//! of partitions by their number of `t`-hooks.
//!
//! - [`partition`]: the [`Partition`] type, enumeration, hook lengths and the
//!   hook-length dimension formula
//! - [`abacus`]: structure numbers, bead sliding and the core/quotient
//!   bijection
//! - [`cores`]: closed-form and enumerative `t`-core counts
//! - [`series`]: big-integer truncated power series
//! - [`distribution`]: `p_t(a, b; n)` and the vanishing checks
//! - [`nekrasov`]: the Nekrasov–Okounkov hook-length identity as a polynomial
//!   identity in `z`

pub mod abacus;
pub mod cores;
pub mod distribution;
pub mod error;
pub mod nekrasov;
pub mod partition;
pub mod series;

pub use abacus::{
    compose, decompose, t_core, Abacus, Bead, CanonicalCoreAbacus, CoreQuotient, StructureNumbers,
};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, HookMultiset, Partition, Partitions};
pub use series::BigSeries;
