use thiserror::Error;

use crate::linalg::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A basis-index witness together with the nonzero residual it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub residual: Vec<Scalar>,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let residual: Vec<String> = self.residual.iter().map(|s| s.to_string()).collect();
        write!(f, "{:?} -> [{}]", self.indices, residual.join(", "))
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("invalid degree: {0}")]
    InvalidDegree(String),
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("algebra is not a left Leibniz algebra (witness {0})")]
    NotLeibniz(Witness),
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("representation axioms fail: {0}")]
    InvalidRepresentation(String),
    #[error("not a Lie-module action: {0}")]
    NotALieModule(String),
    #[error("not a differential (witness {0})")]
    NotADifferential(Witness),
    #[error("subspace is not a two-sided ideal (witness {0})")]
    NotAnIdeal(Witness),
    #[error("cochain is not a cocycle (witness {0})")]
    NotACocycle(Witness),
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("Courant algebra is not exact: {0}")]
    NotExact(String),
    #[error("not a Courant algebra: {0}")]
    NotCourant(String),
    #[error("map is not a section of the projection")]
    InvalidSection,
    #[error("value {0} lies outside the kernel of the projection")]
    ValueOutsideKernel(Witness),
    #[error("base algebras differ: {0}")]
    BaseMismatch(String),
    #[error("not a Courant algebra morphism: {0}")]
    NotAMorphism(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
}

impl Error {
    /// True for failures of a mathematical property of well-formed input, as
    /// opposed to malformed or mismatched input.
    pub fn is_negative_verdict(&self) -> bool {
        !matches!(
            self,
            Error::BadField(_)
                | Error::FieldMismatch
                | Error::DimensionMismatch(_)
                | Error::DegreeTooLarge { .. }
                | Error::InvalidDegree(_)
                | Error::DuplicateBasisName(_)
                | Error::BaseMismatch(_)
        )
    }
}
