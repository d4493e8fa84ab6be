use std::collections::HashSet;

use super::CourantAlgebra;
use crate::algebra::{AlgebraPresentation, LinearMap, Representation};
use crate::cohomology::{Cochain, CochainComplex};
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix, Vector};

/// An exact Courant algebra in split form on `𝔤 ⊕ 𝔥`:
///
/// `[(g₁,h₁), (g₂,h₂)] = ([g₁,g₂], [g₁,h₂] + [h₁,g₂] + f(g₁,g₂))`
///
/// with `[g₁,h₂]` the left action, `[h₁,g₂]` the right action and `f` a
/// 2-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCourantPresentation {
    base: AlgebraPresentation,
    coefficients: Representation,
    twisting_cocycle: Cochain,
}

impl ExactCourantPresentation {
    pub fn from_cocycle(base: &AlgebraPresentation, rep: &Representation, f: &Cochain) -> Result<Self> {
        base.require_lie()?;
        if rep.algebra() != base {
            return Err(Error::BaseMismatch("representation acts on a different algebra".into()));
        }
        let complex = CochainComplex::new(rep)?;
        if f.degree() != 2 || !f.fits(rep) {
            return Err(Error::DimensionMismatch(
                "twisting cochain must be a 2-cochain on this representation".into(),
            ));
        }
        complex.require_cocycle(f)?;
        Ok(ExactCourantPresentation {
            base: base.clone(),
            coefficients: rep.clone(),
            twisting_cocycle: f.clone(),
        })
    }

    /// `[(g₁,h₁),(g₂,h₂)] = ([g₁,g₂], g₁·h₂)` for a Lie-module action `g·h`.
    pub fn hemisemidirect(
        base: &AlgebraPresentation,
        module_basis: Vec<String>,
        left_action: Vec<Matrix>,
    ) -> Result<Self> {
        if !base.check().lie {
            return Err(Error::NotALieModule("acting algebra is not a Lie algebra".into()));
        }
        let rep = Representation::left_module(base, module_basis, left_action)?;
        let report = rep.check();
        if let Some(v) = report.violations.first() {
            return Err(Error::NotALieModule(format!(
                "L_i L_j − L_j L_i ≠ L_[e_i,e_j] for basis pair {:?}",
                v.pair
            )));
        }
        let zero = Cochain::zero(&rep, 2);
        ExactCourantPresentation::from_cocycle(base, &rep, &zero)
    }

    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    pub fn coefficients(&self) -> &Representation {
        &self.coefficients
    }

    pub fn twisting_cocycle(&self) -> &Cochain {
        &self.twisting_cocycle
    }

    /// Basis names of `𝔤 ⊕ 𝔥`: base names first, then module names, each
    /// module name primed until it no longer clashes.
    pub fn total_basis_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.base.basis_names().to_vec();
        let mut taken: HashSet<String> = names.iter().cloned().collect();
        for name in self.coefficients.basis_names() {
            let mut candidate = name.clone();
            while taken.contains(&candidate) {
                candidate.push('\'');
            }
            taken.insert(candidate.clone());
            names.push(candidate);
        }
        names
    }

    /// The split algebra as a [`CourantAlgebra`] with `π` the first projection.
    pub fn to_courant(&self) -> CourantAlgebra {
        let field = self.base.field();
        let g = self.base.dim();
        let h = self.coefficients.dim();
        let n = g + h;
        let mut total = AlgebraPresentation::abelian(field, self.total_basis_names()).expect("names deduplicated");
        let embed = |gpart: &[crate::linalg::Scalar], hpart: &[crate::linalg::Scalar]| -> Vector {
            let mut v = zero_vector(field, n);
            v[..g].clone_from_slice(gpart);
            v[g..].clone_from_slice(hpart);
            v
        };
        let zero_g = zero_vector(field, g);
        for i in 0..g {
            for j in 0..g {
                let value = embed(self.base.bracket_basis(i, j), self.twisting_cocycle.value(&[i, j]));
                total.set_bracket(i, j, value).expect("shape");
            }
            for k in 0..h {
                let left = embed(&zero_g, &self.coefficients.left(i).column(k));
                total.set_bracket(i, g + k, left).expect("shape");
                let right = embed(&zero_g, &self.coefficients.right(i).column(k));
                total.set_bracket(g + k, i, right).expect("shape");
            }
        }
        let images: Vec<Vector> = (0..n)
            .map(|t| {
                if t < g {
                    crate::linalg::unit_vector(field, g, t)
                } else {
                    zero_vector(field, g)
                }
            })
            .collect();
        let projection = LinearMap::from_images(field, g, &images).expect("shape");
        CourantAlgebra::new(total, self.base.clone(), projection).expect("consistent shapes")
    }
}
