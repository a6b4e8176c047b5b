//! Polyomino ideals: ideals of inner 2-minors of collections of cells, their primality,
//! Hilbert series and rook-theoretic invariants.

pub mod algebra;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod ideals;
pub mod invariants;
pub mod rook;
pub mod shape;

pub use error::{Error, Result};
