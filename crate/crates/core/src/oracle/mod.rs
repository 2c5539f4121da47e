//! Independent desk-scale oracles: exact Cayley-graph certificates on trees,
//! lattice connectivity probes, and seeded cross-checks binding pointwise
//! case logic to the polyhedral constructions.

mod crosscheck;
mod lattice;
mod tree;

pub use crosscheck::{cross_check, xg_boundary_samples, CrossCheckReport, SampleSpec};
pub use lattice::lattice_probe;
pub use tree::{free_tree_sigma1_witness, TreeWitness};
