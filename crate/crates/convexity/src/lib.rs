//! P3 convexity: a set is convex when no outside vertex has two neighbours in
//! it. The hull of a set is the least convex superset, obtained by repeatedly
//! adding any vertex with two neighbours already inside.
//!
//! [`hull`] records a parent pair for every added vertex, which gives the
//! 2-path certificates of [`two_path_certificate`]. [`Closure`] is the
//! untraced incremental engine used in hot loops.

#![forbid(unsafe_code)]

mod closure;
mod hull;
mod independence;
mod set;

pub use closure::Closure;
pub use hull::{hull, hull_by_rank, is_convex, two_path_certificate, HullTrace};
pub use independence::{first_violator, is_convexly_independent, is_independent, is_two_packing, IndependenceVerdict};
pub use set::VertexSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvexityError {
    #[error("vertex {} out of range 1..={n}", vertex + 1)]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("the set must not be empty")]
    EmptySet,
}
