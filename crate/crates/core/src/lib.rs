//! Bijective combinatorics of Schmidt-weighted partitions: the matrix
//! bijection underlying them, tuple/sequence correspondences with their
//! overpartition analogues, k-elongated partition diamonds, brute-force
//! enumeration oracles, and exact truncated q-series.

pub mod diamonds;
pub mod enumerate;
pub mod error;
pub mod overlays;
pub mod phi;
pub mod qseries;
pub mod render;
pub mod schmidt;
pub mod types;

pub use diamonds::{diamond_to_tuple, tuple_to_diamond, validate_diamond, Diamond, DiamondStats};
pub use error::{Error, Result};
pub use phi::{classify_matrix, classify_sequence, phi_forward, phi_inverse, IntMatrix};
pub use schmidt::{
    durfee_compose, durfee_decompose, schmidt_to_strict_tuple, schmidt_to_unrestricted_tuple,
    staircase_backward, staircase_forward, strict_tuple_to_schmidt, unrestricted_tuple_to_schmidt,
    SchmidtSequence,
};
pub use types::{
    schmidt_weight, KTuple, MarkedPart, Overpartition, Partition, StrictOverpartition, TupleMember,
};
