//! Exact-arithmetic library for the Yamanouchi toppling game on connected
//! graphs: toppling group normal forms, dominance-order solving, interval
//! decomposition enumeration with statistics, Hall-Littlewood symmetric
//! polynomial expansion, and orthogonal polynomial systems built from
//! moment sequences.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere in the crate, so every identity
//! checked in the test suite is an exact symbolic equality.

pub mod algebra;
pub mod decomp;
pub mod graph;
pub mod group;
pub mod hl;
pub mod ortho;
pub mod tableaux;

pub use algebra::{BigRational, LaurentMonomial, ParamPoly};
pub use graph::{Configuration, Graph};
pub use group::{solve_dominance, DominanceFailure, DominantElement, GroupElement};
pub use tableaux::{Partition, StandardYoungTableau, YamanouchiWord};

/// Default cap on enumerated objects, overridable via the
/// `TOPPLING_ENUM_CAP` environment variable.
pub fn enumeration_cap() -> u64 {
    std::env::var("TOPPLING_ENUM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1_000_000)
}

/// Default bound on `n` for interval-subset enumeration (which visits
/// `2^(n choose 2)` subsets), overridable via `TOPPLING_SUBSET_MAX_N`.
pub fn subset_budget() -> usize {
    std::env::var("TOPPLING_SUBSET_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(8)
}
