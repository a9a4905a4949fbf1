//! Convex-independence numbers of paths, cycles and trees.
//!
//! Paths and cycles have closed forms, and a leafy tree (at most one vertex of
//! degree two) scores its leaf count. General trees are solved exactly by the
//! dynamic program in [`solve_tree`]. [`tree_decompose`] splits a tree into
//! leafy trees and connecting paths; its [`TreeDecomposition::combined_value`]
//! is kept as a structural summary, not as the solver.

#![forbid(unsafe_code)]

mod closed;
mod decompose;
mod tree;

pub use closed::{beta_c_cycle, beta_c_leafy, beta_c_path, cycle_witness, is_leafy, leafy_witness, path_witness};
pub use decompose::{tree_decompose, TreeDecomposition};
pub use tree::{beta_c_tree, solve_tree, TreeSolution};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("{what} needs at least {min} vertices, got {got}")]
    TooSmall { what: &'static str, min: usize, got: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree has more than one vertex of degree two")]
    NotLeafy,
}
