use crate::algebra::{AlgebraKindReport, AlgebraPresentation, LinearMap, Representation, MAX_WITNESSES};
use crate::error::{Error, Result, Witness};
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, unit_vector, Matrix, Scalar, Subspace, Vector};

/// A left Leibniz algebra `𝔞` with a bracket-preserving projection `π : 𝔞 → 𝔤`
/// onto a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CourantAlgebra {
    total: AlgebraPresentation,
    base: AlgebraPresentation,
    projection: LinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CourantReport {
    pub valid: bool,
    pub total: AlgebraKindReport,
    pub base: AlgebraKindReport,
    /// Basis pairs `(i, j)` with residual `π[a_i,a_j] − [πa_i, πa_j]`.
    pub projection_violations: Vec<Witness>,
}

impl CourantAlgebra {
    pub fn new(total: AlgebraPresentation, base: AlgebraPresentation, projection: LinearMap) -> Result<Self> {
        if total.field() != base.field() || projection.field() != base.field() {
            return Err(Error::FieldMismatch);
        }
        if projection.source_dim() != total.dim() || projection.target_dim() != base.dim() {
            return Err(Error::DimensionMismatch(format!(
                "projection is {}x{}, expected {}x{}",
                projection.target_dim(),
                projection.source_dim(),
                base.dim(),
                total.dim()
            )));
        }
        Ok(CourantAlgebra {
            total,
            base,
            projection,
        })
    }

    pub fn total(&self) -> &AlgebraPresentation {
        &self.total
    }

    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    pub fn projection(&self) -> &LinearMap {
        &self.projection
    }

    /// Both Courant conditions: `𝔞` is left Leibniz, `𝔤` is Lie, and `π`
    /// preserves brackets on basis pairs.
    pub fn check(&self) -> CourantReport {
        let total = self.total.check();
        let base = self.base.check();
        let n = self.total.dim();
        let mut projection_violations = Vec::new();
        let mut projection_ok = true;
        for i in 0..n {
            let pi_i = self.projection.image_of(i);
            for j in 0..n {
                let lhs = self.projection.apply(self.total.bracket_basis(i, j)).expect("shape");
                let rhs = self.base.bracket_unchecked(&pi_i, &self.projection.image_of(j));
                let residual = sub_vectors(&lhs, &rhs);
                if !is_zero_vector(&residual) {
                    projection_ok = false;
                    if projection_violations.len() < MAX_WITNESSES {
                        projection_violations.push(Witness {
                            indices: vec![i, j],
                            residual,
                        });
                    }
                }
            }
        }
        CourantReport {
            valid: total.leibniz_left && base.lie && projection_ok,
            total,
            base,
            projection_violations,
        }
    }

    /// `ker π` as a canonical subspace of `𝔞`.
    pub fn kernel(&self) -> Subspace {
        self.projection.matrix().kernel()
    }

    /// Why the algebra fails to be exact, if it does.
    pub fn exactness_failure(&self) -> Option<String> {
        if self.projection.matrix().rank() != self.base.dim() {
            return Some("projection is not surjective".into());
        }
        let kernel = self.kernel();
        for (s, u) in kernel.basis().iter().enumerate() {
            for (t, v) in kernel.basis().iter().enumerate() {
                if !is_zero_vector(&self.total.bracket_unchecked(u, v)) {
                    return Some(format!("kernel basis elements {s} and {t} do not commute"));
                }
            }
        }
        None
    }

    /// `π` surjective and `ker π` abelian.
    pub fn is_exact(&self) -> bool {
        self.exactness_failure().is_none()
    }

    pub(crate) fn require_exact(&self) -> Result<()> {
        let report = self.check();
        if !report.valid {
            let reason = if !report.total.leibniz_left {
                "total bracket violates the left Leibniz identity"
            } else if !report.base.lie {
                "base is not a Lie algebra"
            } else {
                "projection does not preserve brackets"
            };
            return Err(Error::NotCourant(reason.into()));
        }
        match self.exactness_failure() {
            Some(reason) => Err(Error::NotExact(reason)),
            None => Ok(()),
        }
    }

    /// Right inverse of `π` obtained column by column from the pivoted solver,
    /// free variables set to zero.
    pub fn choose_section(&self) -> Result<Section> {
        let field = self.base.field();
        let g = self.base.dim();
        let mut images = Vec::with_capacity(g);
        for j in 0..g {
            match self.projection.matrix().solve(&unit_vector(field, g, j))? {
                Some(x) => images.push(x),
                None => return Err(Error::NotSurjective),
            }
        }
        let map = LinearMap::from_images(field, self.total.dim(), &images)?;
        Section::new(self, map)
    }

    /// Kernel coordinates of `x`, failing when `π(x) ≠ 0`.
    pub(crate) fn kernel_coordinates(&self, kernel: &Subspace, x: &[Scalar]) -> Result<Vector> {
        kernel.coordinates(x).ok_or_else(|| {
            Error::ValueOutsideKernel(Witness {
                indices: vec![],
                residual: x.to_vec(),
            })
        })
    }

    /// The representation of `𝔤` on `ker π` given by `[g, h] = [a, h]` and
    /// `[h, g] = [h, a]` for any preimage `a` of `g`.
    ///
    /// Kernel coordinates are taken in the canonical echelon basis of `ker π`,
    /// and the module basis is named after the pivot positions of that basis.
    pub fn induced_actions(&self) -> Result<Representation> {
        self.require_exact()?;
        let q = self.choose_section()?;
        let kernel = self.kernel();
        let field = self.base.field();
        let h = kernel.dim();
        let mut left = Vec::with_capacity(self.base.dim());
        let mut right = Vec::with_capacity(self.base.dim());
        for i in 0..self.base.dim() {
            let a = q.map().image_of(i);
            let mut l_cols = Vec::with_capacity(h);
            let mut r_cols = Vec::with_capacity(h);
            for k in kernel.basis() {
                l_cols.push(self.kernel_coordinates(&kernel, &self.total.bracket_unchecked(&a, k))?);
                r_cols.push(self.kernel_coordinates(&kernel, &self.total.bracket_unchecked(k, &a))?);
            }
            left.push(Matrix::from_columns(field, h, &l_cols)?);
            right.push(Matrix::from_columns(field, h, &r_cols)?);
        }
        let names = kernel
            .pivots()
            .iter()
            .map(|&p| self.total.basis_names()[p].clone())
            .collect();
        Representation::new(self.base.clone(), names, left, right)
    }

    /// `α(x) = (π(x), x − q(π(x)))` with the second part in kernel coordinates.
    pub fn to_split(&self, q: &Section, x: &[Scalar]) -> Result<(Vector, Vector)> {
        let kernel = self.kernel();
        self.to_split_in(&kernel, q, x)
    }

    pub(crate) fn to_split_in(&self, kernel: &Subspace, q: &Section, x: &[Scalar]) -> Result<(Vector, Vector)> {
        let g = self.projection.apply(x)?;
        let lifted = q.map().apply(&g)?;
        let h = self.kernel_coordinates(kernel, &sub_vectors(x, &lifted))?;
        Ok((g, h))
    }

    /// `α⁻¹(g, h) = q(g) + h`.
    pub fn from_split(&self, q: &Section, g: &[Scalar], h: &[Scalar]) -> Result<Vector> {
        let kernel = self.kernel();
        self.join_split_in(&kernel, q, g, h)
    }

    pub(crate) fn join_split_in(&self, kernel: &Subspace, q: &Section, g: &[Scalar], h: &[Scalar]) -> Result<Vector> {
        if h.len() != kernel.dim() {
            return Err(Error::DimensionMismatch(format!(
                "kernel part of length {}, kernel has dimension {}",
                h.len(),
                kernel.dim()
            )));
        }
        let lifted = q.map().apply(g)?;
        Ok(add_vectors(&lifted, &kernel.combine(h)))
    }
}

/// A linear right inverse `q` of the projection: `π ∘ q = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    map: LinearMap,
}

impl Section {
    pub fn new(c: &CourantAlgebra, map: LinearMap) -> Result<Self> {
        if map.source_dim() != c.base.dim() || map.target_dim() != c.total.dim() {
            return Err(Error::DimensionMismatch(format!(
                "section is {}x{}, expected {}x{}",
                map.target_dim(),
                map.source_dim(),
                c.total.dim(),
                c.base.dim()
            )));
        }
        if !c.projection.compose(&map)?.is_identity() {
            return Err(Error::InvalidSection);
        }
        Ok(Section { map })
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// `q + β`, where `β : 𝔤 → ker π` is a degree-1 cochain in kernel coordinates.
    pub fn shifted(&self, c: &CourantAlgebra, beta: &crate::cohomology::Cochain) -> Result<Section> {
        let kernel = c.kernel();
        if beta.degree() != 1 || beta.acting_dim() != c.base.dim() || beta.coeff_dim() != kernel.dim() {
            return Err(Error::DimensionMismatch(
                "shift must be a 1-cochain with values in ker π".into(),
            ));
        }
        let images: Vec<Vector> = (0..c.base.dim())
            .map(|i| add_vectors(&self.map.image_of(i), &kernel.combine(beta.value(&[i]))))
            .collect();
        Section::new(c, LinearMap::from_images(c.base.field(), c.total.dim(), &images)?)
    }
}
