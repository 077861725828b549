//! Train binary neural networks by quadratic unconstrained binary optimization.
//!
//! The pipeline: [`dataio`] samples small spin-labeled datasets, [`builder`]
//! compiles a network architecture plus dataset into a QUBO whose ground
//! states are exactly the loss-minimizing weight settings, [`solvers`] finds
//! low-energy assignments (exhaustive enumeration or simulated annealing),
//! [`embedding`] maps instances onto hardware-style topology graphs with
//! chains, and [`bnn`] provides the reference network semantics plus a
//! brute-force weight oracle used as ground truth throughout.
//!
//! All builder-produced QUBOs have integer coefficients and are evaluated in
//! exact integer arithmetic; the energy of a constraint-satisfying assignment
//! equals the misclassification count of the decoded weights.

pub mod bnn;
pub mod builder;
pub mod dataio;
pub mod embedding;
pub mod error;
pub mod penalties;
pub mod qubo;
pub mod seeds;
pub mod solvers;

pub use error::{Error, Result};
pub use qubo::{Assignment, Qubo};
