//! Homology of unitarizable highest-weight modules over infinite-rank classical Lie
//! algebras of types a, c and d, computed by independent combinatorial routes, and its
//! finite-rank truncations.

pub mod characters;
pub mod error;
pub mod half;
pub mod homology;
pub mod parallel;
pub mod partitions;
pub mod rootsystem;
pub mod verify;
pub mod weights;
pub mod weylgroup;

pub use error::{Error, Result};
pub use half::Half;
