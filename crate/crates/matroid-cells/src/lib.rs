//! Complete-cell enumeration for uniform oriented matroids.
//!
//! A uniform oriented matroid of rank r on n elements, given as a chirotope
//! (one sign per sorted r-subset), determines an arrangement of n
//! pseudohyperplanes in projective (r−1)-space. This crate computes, per
//! chirotope:
//!
//! 1. the signed circuits (one per (r+1)-subset, chained from basis signs),
//! 2. the topes (full-support sign vectors orthogonal to every circuit),
//! 3. the complete cells (topes whose every single-element flip is a tope),
//!
//! and provides a parallel, checkpointable driver that sweeps chirotope
//! databases for the maximum complete-cell count, comparing each class
//! against the cyclic-arrangement value 2·C_{r−1}(n).
//!
//! The [`oracle`] module carries independent cross-checks (exact determinant
//! signs on integer point configurations, circuit-axiom validation) used to
//! keep the combinatorial path honest.

pub mod chirotope;
pub mod circuits;
pub mod combinatorics;
pub mod error;
pub mod oracle;
pub mod sign_vector;
pub mod subset;
pub mod sweep;
pub mod topes;

pub use chirotope::Chirotope;
pub use circuits::CircuitSet;
pub use combinatorics::{binomial, cyclic_complete_cells, roudneff_bound, BoundParams};
pub use error::{Error, Result};
pub use oracle::{validate_circuit_axioms, AxiomReport, PointConfiguration};
pub use sign_vector::{Element, ElementSet, SignVector};
pub use subset::{SubsetIndex, SubsetOrder};
pub use sweep::{
    process_one, resume, signed_bound, sweep_file, sweep_reader, ClassReport, SweepConfig,
    SweepRun, SweepSummary,
};
pub use topes::{is_tope, TopeSet};
