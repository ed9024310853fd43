//! Exact query-complexity analysis of explicitly represented Boolean
//! functions.
//!
//! The crate works on complete truth tables (up to 20 variables) and computes
//! the classical measures exactly: decision-tree complexity, certificate
//! complexity (per input, maximum and minimum), polynomial degree via the
//! Möbius expansion, and instance complexity — the best worst-case ratio,
//! over all inputs, between the queries a tree makes and the certificate
//! complexity of that input, minimized over all trees computing the function.
//!
//! All ratios are exact rationals; there is no floating point anywhere in the
//! solvers.

pub mod algos;
pub mod error;
pub mod family;
pub mod lattice;
pub mod measures;
pub mod mobius;
pub mod oracle;
pub mod ratio;
pub mod solver;
pub mod subcube;
pub mod table;
pub mod tree;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use lattice::ConstancyLattice;
pub use ratio::Ratio;
pub use subcube::Subcube;
pub use table::TruthTable;
pub use tree::{AlgRun, DecisionTree, NaivePolicy, QueryAlgorithm};
