//! Exact combinatorics and symbolic geometry of the 27 lines on cubic
//! surfaces arising as hyperplane sections of a cubic threefold: the E6 root
//! lattice and Weyl group, the census of singular hyperplane sections, and
//! rational-arithmetic classification of lines and singular points.

pub mod error;
pub mod exact;
pub mod lattice;
pub mod weyl;
pub mod census;
pub mod cli;
pub mod geometry;

pub use error::{Error, Result};
