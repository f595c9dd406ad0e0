//! Quasi-local string comparison and sparse spliced alignment.
//!
//! The crate stores the all-substring LCS scores of a string against a
//! reference implicitly, as a permutation of "seaweeds" ([`SeaweedMatrix`]),
//! and builds everything else on the algebra of those permutations:
//!
//! * [`multiply`]: min-plus products, composition of stacked grids and the
//!   windowed factor-chain composition for shallow operands;
//! * [`quasilocal`]: seaweed matrices for a prescribed set of substrings of
//!   `a`, built from dyadic pieces guided by a range-counting index;
//! * [`score_mv`]: max-plus matrix-vector products against score vectors;
//! * [`splice`]: the best chain of candidate exons against a reference gene.
//!
//! Every layer has a slow counterpart in [`oracle`].

pub mod error;
pub mod gen;
pub mod lcs;
pub mod multiply;
pub mod oracle;
pub mod quasilocal;
pub mod rangecount;
pub mod score_mv;
pub mod seaweed;
pub mod splice;
pub mod verify;

pub use error::{Error, Result};
pub use lcs::build;
pub use multiply::{
    compose, compose_balanced, decompose, multiply_core, multiply_windowed, ColumnLine, Factor,
    FactorChain,
};
pub use quasilocal::{IntervalStore, Phase2Options, PrescribedSet, QuasiLocal};
pub use score_mv::{mv_maxplus, ScoreVector};
pub use seaweed::{DominanceCounter, Permutation, SeaweedMatrix};
pub use splice::{solve, Chain, ExonDag};
