//! Maximum convexly independent sets in permutation graphs.
//!
//! Components of a convexly independent set are single vertices or crossing
//! pairs, and they are totally ordered left to right in the diagram. The
//! dynamic program in [`PermutationDp`] adds them in that order. Its states
//! record the last component, the border of the hull, a witness triple and an
//! interface summary of how the set reacts to later components.

#![forbid(unsafe_code)]

mod border;
mod component;
mod dp;
mod interface;
mod witness;

pub use border::{compute_border, left_of_border, membership_by_border, Border};
pub use component::{enumerate_components, is_right_of, DiagramComponent};
pub use dp::{
    beta_c_permutation, beta_c_permutation_with, CheckMode, DpConfig, DpState, KeyPolicy, PermutationDp,
    PermutationSolution,
};
pub use interface::{ProbeOutcome, Reaction};
pub use witness::{witness_triple, WitnessTriple};

use p3c_oracle::OracleError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermutationError {
    #[error("{0:?} is neither a vertex nor a crossing pair")]
    NotAComponent(Vec<usize>),
    #[error("hull is empty")]
    EmptyHull,
    #[error("vertex {vertex} does not lie right of the last component")]
    NotRightOfLast { vertex: usize },
    #[error("{0:?} is not convexly independent")]
    NotIndependent(Vec<usize>),
    #[error(
        "state and witness checks disagree on adding {component:?} to {representative:?} \
         (state {state}, witness {witness})"
    )]
    ModeDisagreement {
        representative: Vec<usize>,
        component: Vec<usize>,
        state: bool,
        witness: bool,
    },
    #[error("dynamic program found {dp}, exhaustive search {oracle}")]
    OracleMismatch { dp: usize, oracle: usize },
    #[error("oracle check refused: {n} vertices exceeds the bound of {max}")]
    TooLargeForOracle { n: usize, max: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
