//! Graph substrate for P3-convexity: simple undirected graphs, permutation
//! diagrams, cotrees, the two text formats, instance generators and the
//! structural recogniser used for solver dispatch.
//!
//! Vertex ids are 0-based everywhere in this crate's API. The text formats in
//! [`parse`] are 1-based.

#![forbid(unsafe_code)]

mod classify;
mod cotree;
mod diagram;
mod generate;
mod graph;
pub mod parse;

pub use classify::{classify, is_cycle, is_path, GraphClass};
pub use cotree::{build_cotree, find_p4, Cotree, CotreeError};
pub use diagram::PermutationDiagram;
pub use generate::{
    canonical_tree, gen_all_trees, gen_cycle, gen_ladder, gen_path, gen_random_cograph, gen_random_permutation,
    gen_random_tree, gen_spider, ladder_rails,
};
pub use graph::{components, Graph};
pub use parse::{parse_edge_list, parse_permutation, ParseError};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("bottom positions must be a permutation of 1..={n} (saw {value})")]
    NotAPermutation { value: usize, n: usize },
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
}
