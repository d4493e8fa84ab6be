//! Leibniz cohomology of Lie algebras with coefficients in Leibniz
//! representations, and the classification of exact Courant algebras by it.
//!
//! All arithmetic is exact, over ℚ or a prime field.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod courant;
pub mod document;
pub mod error;
pub mod linalg;

pub use error::{Error, Result, Witness};
