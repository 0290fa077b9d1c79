//! Closed simplicial complexes whose ridge links are short cycles, their
//! classification by characteristic partitions, 2-dimensional cubical
//! complexes and their zones, and exact tests for embedding graph metrics
//! into hypercubes.
//!
//! The main entry points are:
//!
//! * [`SimplicialComplex`] with faces, links, type, skeleton and Euler
//!   characteristic,
//! * [`Partition`] and [`build_kp`], which construct every complex of type
//!   `{3,4}`, together with [`classify`] going the other way,
//! * [`symmetry`] for brute-force automorphism groups and the reflection
//!   group of a partition,
//! * [`metric`] for path metrics, gonal inequalities, partial cubes and
//!   cut-cone decompositions over exact rationals,
//! * [`Quadrillage`] for zones of quad complexes.

pub mod complex;
pub mod error;
pub mod format;
pub mod metric;
pub mod partition;
pub mod quadrillage;
pub mod report;
mod search;
pub mod symmetry;

pub use complex::{Closedness, Face, LinkReport, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use metric::Graph;
pub use partition::{
    build_kp, classify, enumerate_partitions, kp_summary, product_dual, KpSummary, Partition,
};
pub use quadrillage::{Quadrillage, Zone};
