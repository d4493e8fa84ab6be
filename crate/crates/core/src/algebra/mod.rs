//! Algebra presentations by structure constants, Leibniz representations,
//! and the derived-bracket and Leibniz-kernel constructions.

mod differential;
mod ideal;
mod linear_map;
mod presentation;
mod representation;

pub use differential::DifferentialLieAlgebra;
pub use ideal::{ideal_closure, leibniz_kernel, quotient_algebra};
pub use linear_map::LinearMap;
pub use presentation::{AlgebraKindReport, AlgebraPresentation, MAX_WITNESSES};
pub use representation::{Axiom, Representation, RepresentationReport, RepresentationViolation};
