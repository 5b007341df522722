//! Largest k-ended trees, independent-set degree sums, and a verification
//! harness for the degree-sum theorems that relate them.
//!
//! A k-ended tree is a tree with at most k leaves; `t_k` denotes the order
//! of a largest one in a connected graph, with `t_1` read as the
//! circumference under the convention that a vertex is a 1-cycle and an edge
//! a 2-cycle. `sigma_m` is the minimum degree sum over independent sets of
//! exactly m vertices (+infinity when none exist). The crate provides exact
//! solvers for both at desk scale, the tree exchanges used in the
//! structure-theoretic proofs, graph6 short-form I/O, and a harness that
//! evaluates the theorem predicates exhaustively over graph corpora.

pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod naive;
pub mod solver;
pub mod transforms;
pub mod tree;

pub use error::{Error, Result};
pub use family::{build_family, Family};
pub use graph::{ExtendedCount, Graph};
pub use graph6::{parse_graph6, write_graph6};
pub use solver::{t_k_exact, t_profile, TkResult, Witness};
pub use tree::SubTree;
