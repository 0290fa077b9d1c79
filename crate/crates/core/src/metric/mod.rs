//! Path metrics of graphs and their embeddings into hypercubes.
//!
//! A graph embeds into a hypercube with scale `λ` when its vertices can be
//! given binary addresses whose Hamming distances are `λ` times the path
//! distances. Scale 1 embeddings are partial cubes; embeddings at some scale
//! exist exactly when the path metric is a nonnegative combination of cut
//! metrics, which [`cut_cone_decompose`] decides in exact arithmetic.

mod cut_cone;
mod gonal;
mod graph;
pub mod lp;
mod partial_cube;
mod scaled;

use std::fmt;

pub use cut_cone::{
    cut_cone_decompose, embedding_from_cuts, CutConeVerdict, CutDecomposition, FarkasCertificate,
    ScaledEmbedding, MAX_CUT_CONE_VERTICES,
};
pub use gonal::{five_gonal_violations, kgonal_violations, GonalVector, DEFAULT_HYPERMETRIC_BOUND};
pub use graph::{make_graph, Graph, GraphKind};
pub use partial_cube::{partial_cube, PartialCubeLabeling};
pub use scaled::{a_m, find_scaled_embedding, MAX_SCALED_DIM, MAX_SCALED_VERTICES};

/// A binary hypercube address.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Address(pub Vec<bool>);

impl Address {
    pub fn zeros(len: usize) -> Self {
        Address(vec![false; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn hamming(&self, other: &Address) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
            + self.0.len().abs_diff(other.0.len())
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

/// Whether `addresses` realize `scale` times the path metric of `graph`.
pub fn is_scaled_embedding(graph: &Graph, scale: u64, addresses: &[Address]) -> bool {
    addresses.len() == graph.vertex_count()
        && (0..graph.vertex_count()).all(|i| {
            (0..i).all(|j| match graph.distance(i, j) {
                Some(d) => addresses[i].hamming(&addresses[j]) as u64 == scale * d as u64,
                None => false,
            })
        })
}
