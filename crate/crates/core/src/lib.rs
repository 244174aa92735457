#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod betti;
pub mod breakable;
pub mod chain;
pub mod chordal;
pub mod coeff;
pub mod complex;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod exec;
mod field;
pub mod golod;
pub mod homology;
pub mod linalg;
pub mod maps;
mod mask;
#[cfg(feature = "serde")]
mod serde_util;

pub use coeff::Coefficient;
pub use complex::{Simplex, SimplicialComplex, Vertex, VertexSubset};
pub use error::{Error, Result};
