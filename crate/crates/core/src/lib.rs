//! Partition bijections, rooted partitions and exact verification of weighted
//! forms of Euler's partition theorem.
//!
//! * [`partition`]: partitions, rooted partitions, class enumeration.
//! * [`bijections`]: Sylvester's bijection, Dyson's map, the iterated Dyson
//!   map, and the maps on rooted partitions.
//! * [`weighted`]: weighted sums, identity reports and bijective certificates.
//! * [`qseries`]: truncated power series with exact rational coefficients and
//!   the generating functions behind the identities.
//! * [`cli`]: the command-line front end.

pub mod bijections;
pub mod cli;
pub mod partition;
pub mod qseries;
pub mod weighted;

pub use bijections::{BijectionError, HookDecomposition};
pub use partition::{Member, Partition, PartitionClass, RootedPartition};
pub use qseries::{SeriesBuilder, SeriesIdentity, TruncatedSeries};
pub use weighted::{IdentityId, VerificationReport, WeightFunction};
