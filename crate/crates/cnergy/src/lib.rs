//! Common-neighborhood graph matrices, their spectra and energies.
//!
//! The library builds the eight standard matrices of a finite simple graph
//! (adjacency, degree, Laplacian, signless Laplacian, and the
//! common-neighborhood variants CN, CNRS, CNL, CNSL), extracts their
//! eigenvalues with a cyclic Jacobi solver, and derives the six graph
//! energies together with the first Zagreb index. On top of that sits a
//! verification layer: closed-form oracles for the solvable families and
//! per-theorem inequality checks that can be run over whole corpora of
//! graphs.
//!
//! Entry points:
//! - [`Graph`] and [`GraphFamily`] for building graphs,
//! - [`EnergyReport::compute`](energy::EnergyReport::compute) for the full
//!   per-graph report,
//! - [`bounds::BoundContext`] plus the `check_*` functions for individual
//!   theorem checks,
//! - [`scan::scan_corpus`] for aggregate verification runs.

pub mod bounds;
pub mod closed_forms;
pub mod energy;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod scan;
pub mod spectra;

pub use energy::{EnergyReport, HyperFlags};
pub use family::GraphFamily;
pub use graph::Graph;
pub use matrix::SymmetricMatrix;
pub use spectra::Spectrum;

/// Numeric tolerances shared across the solver and the theorem checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative off-diagonal norm target for the Jacobi solver.
    pub tau_solve: f64,
    /// Relative gap below which consecutive eigenvalues share a group.
    pub tau_group: f64,
    /// Absolute threshold for equality detection and bound violations.
    pub tau_eq: f64,
    /// Absolute margin for the strict hyperenergetic comparisons.
    pub tau_cmp: f64,
    /// Jacobi sweep cap; exceeding it is a solver failure.
    pub max_sweeps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            tau_solve: 1e-12,
            tau_group: 1e-7,
            tau_eq: 1e-7,
            tau_cmp: 1e-6,
            max_sweeps: 100,
        }
    }
}
