//! Maximal cliques of graphs of projective codes.
//!
//! The Grassmann graph on k-subspaces of F_q^n joins two subspaces when
//! they meet in dimension k - 1. Restricting it to projective codes (no
//! zero columns, no two proportional columns) gives the graph studied
//! here. Its maximal cliques are traces of stars (all k-codes through a
//! fixed (k-1)-space) and tops (all k-codes inside a fixed (k+1)-space).
//!
//! Module map:
//! - [`gf`]: GF(q) arithmetic for prime powers q <= 32
//! - [`matfq`]: matrices, RREF, canonical subspaces
//! - [`grassmann`]: q-binomials, enumeration, stars and tops of the full graph
//! - [`codeprof`]: zero columns and proportionality classes of a code
//! - [`starlab`]: star sizes, maximality classification, brute-force oracle, census
//! - [`fixtures`]: worked examples shipped with the crate

pub mod codeprof;
pub mod error;
pub mod fixtures;
pub mod gf;
pub mod grassmann;
pub mod matfq;
pub mod starlab;

pub use codeprof::{column_profile, is_nondegenerate, is_projective, puncture_zero, ColumnProfile};
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use grassmann::{
    adjacent, enumerate_grassmannian, gaussian_binomial, star_superspaces, top_subspaces,
    GrassmannParams, Grassmannian,
};
pub use matfq::{parse_matrix, rowspace, MatFq, Subspace};
pub use starlab::{
    analyze, census, classify_star, component_count, is_maximal_clique_oracle, predicted_star_size,
    star_pi, top_pi, w_dim, Census, CensusRow, Classification, Kind, StarReport,
};
