//! Courant algebras over a Lie algebra, their split presentations, and the
//! cohomological classification of exact ones.

mod algebra;
mod classify;
mod morphism;
mod presentation;

pub use algebra::{CourantAlgebra, CourantReport, Section};
pub use classify::{
    are_isomorphic, characteristic_class, AutomorphismSpace, CharacteristicClass, Classification, IsomorphismOutcome,
    NonIsomorphism,
};
pub use morphism::CourantMorphism;
pub use presentation::ExactCourantPresentation;
