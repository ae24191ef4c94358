//! Exact verification engine for hook-length statistics of t-regular
//! partitions.
//!
//! Everything lives in a truncated power-series ring over unbounded
//! integers ([`series`]). Named generating functions and auxiliary series are
//! assembled from their defining formulas in [`identities`], recomputed by
//! brute-force enumeration in [`partitions`], and compared coefficient by
//! coefficient in [`verify`].

pub mod identities;
pub mod partitions;
pub mod series;
pub mod verify;

pub use identities::{IdentityError, Name, NamedSeries};
pub use partitions::{Constraint, HookCountTable, Partition, PartitionError};
pub use series::{Series, SeriesError, Sign, TermList};
pub use verify::{CheckId, CheckReport, Counterexample, LemmaId, Mode, TheoremId, VerifyConfig, VerifyError};
