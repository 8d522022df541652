//! Exact and numeric machinery for chromatic polynomials of sparse graphs:
//! deletion-contraction and subgraph-expansion computation, chromatic root
//! measures and their holomorphic moments, homomorphism counting with the
//! partition-lattice Mobius bridge, hom-combination formulas for chromatic
//! coefficients and moments, transfer matrices for 4xn tubes, and local
//! (Benjamini-Schramm style) statistics with girth-based entropy estimates.

pub mod basis;
pub mod canon;
pub mod chromatic;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hom;
pub mod limits;
pub mod poly;
pub mod spectra;
pub mod tube;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use poly::IntPolynomial;
