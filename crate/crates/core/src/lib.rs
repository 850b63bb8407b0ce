//! Reduced words of permutations, their move graphs, and the hook-tableau,
//! Grassmannian and lattice-simplex structures isomorphic to them for the
//! family `[n, 1, 2, ..., n-4, n-2, n-1, n-3]`.

pub mod chain;
pub mod cli;
pub mod error;
pub mod family;
pub mod graph;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod simplex;
pub mod suite;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
pub use graph::{EdgeKind, LabeledGraph};
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::IntPolynomial;
