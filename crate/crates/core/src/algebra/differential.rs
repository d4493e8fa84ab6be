use super::{AlgebraPresentation, LinearMap};
use crate::error::{Error, Result, Witness};
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, unit_vector};

/// A Lie algebra with a square-zero derivation `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialLieAlgebra {
    algebra: AlgebraPresentation,
    differential: LinearMap,
}

impl DifferentialLieAlgebra {
    /// Validates `d ∘ d = 0` and `d[x,y] = [dx,y] + [x,dy]` on basis pairs.
    ///
    /// Witness indices are `[i]` for a failure of `d² = 0` on `e_i`, and
    /// `[i, j]` for a failure of the derivation law.
    pub fn new(algebra: AlgebraPresentation, differential: LinearMap) -> Result<Self> {
        let n = algebra.dim();
        if differential.source_dim() != n || differential.target_dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "differential is {}x{}, algebra has dimension {n}",
                differential.target_dim(),
                differential.source_dim()
            )));
        }
        algebra.require_lie()?;
        let field = algebra.field();
        let d = |v: &[crate::linalg::Scalar]| differential.apply(v).expect("square");
        for i in 0..n {
            let dd = d(&d(&unit_vector(field, n, i)));
            if !is_zero_vector(&dd) {
                return Err(Error::NotADifferential(Witness {
                    indices: vec![i],
                    residual: dd,
                }));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (unit_vector(field, n, i), unit_vector(field, n, j));
                let lhs = d(algebra.bracket_basis(i, j));
                let rhs = add_vectors(
                    &algebra.bracket_unchecked(&d(&ei), &ej),
                    &algebra.bracket_unchecked(&ei, &d(&ej)),
                );
                let residual = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&residual) {
                    return Err(Error::NotADifferential(Witness {
                        indices: vec![i, j],
                        residual,
                    }));
                }
            }
        }
        Ok(DifferentialLieAlgebra { algebra, differential })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn differential(&self) -> &LinearMap {
        &self.differential
    }

    /// `[x, y]_d := [dx, y]`.
    pub fn derived_bracket(&self) -> AlgebraPresentation {
        let alg = &self.algebra;
        let field = alg.field();
        let n = alg.dim();
        let mut out = AlgebraPresentation::abelian(field, alg.basis_names().to_vec()).expect("names already distinct");
        for i in 0..n {
            let dei = self.differential.image_of(i);
            for j in 0..n {
                let value = alg.bracket_unchecked(&dei, &unit_vector(field, n, j));
                out.set_bracket(i, j, value).expect("shape");
            }
        }
        out
    }
}
