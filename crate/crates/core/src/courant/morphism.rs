use super::CourantAlgebra;
use crate::algebra::LinearMap;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, sub_vectors};

/// A linear map `F : 𝔞 → 𝔞′` that preserves brackets, satisfies `π′ ∘ F = π`,
/// and is the identity from `ker π` onto `ker π′` (in canonical kernel bases).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CourantMorphism {
    map: LinearMap,
    source: CourantAlgebra,
    target: CourantAlgebra,
}

impl CourantMorphism {
    /// Checks every invariant exhaustively on basis elements and pairs.
    pub fn new(map: LinearMap, source: CourantAlgebra, target: CourantAlgebra) -> Result<Self> {
        if let Some(reason) = morphism_failure(&map, &source, &target)? {
            return Err(Error::NotAMorphism(reason));
        }
        Ok(CourantMorphism { map, source, target })
    }

    pub fn identity(c: &CourantAlgebra) -> Self {
        let map = LinearMap::identity(c.total().field(), c.total().dim());
        CourantMorphism {
            map,
            source: c.clone(),
            target: c.clone(),
        }
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn source(&self) -> &CourantAlgebra {
        &self.source
    }

    pub fn target(&self) -> &CourantAlgebra {
        &self.target
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &CourantMorphism) -> Result<CourantMorphism> {
        if inner.target != self.source {
            return Err(Error::NotAMorphism(
                "composition of morphisms between different algebras".into(),
            ));
        }
        CourantMorphism::new(self.map.compose(&inner.map)?, inner.source.clone(), self.target.clone())
    }
}

/// The first failing morphism invariant, or `None` when all hold.
pub(crate) fn morphism_failure(
    map: &LinearMap,
    source: &CourantAlgebra,
    target: &CourantAlgebra,
) -> Result<Option<String>> {
    let (a, b) = (source.total(), target.total());
    if map.source_dim() != a.dim() || map.target_dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            map.target_dim(),
            map.source_dim(),
            b.dim(),
            a.dim()
        )));
    }
    if source.base() != target.base() {
        return Ok(Some("source and target have different base algebras".into()));
    }
    let images: Vec<_> = (0..a.dim()).map(|i| map.image_of(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = map.apply(a.bracket_basis(i, j))?;
            let rhs = b.bracket_unchecked(&images[i], &images[j]);
            if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                return Ok(Some(format!("bracket not preserved on basis pair ({i}, {j})")));
            }
        }
    }
    if target.projection().compose(map)? != *source.projection() {
        return Ok(Some("projection not preserved".into()));
    }
    let (k_src, k_tgt) = (source.kernel(), target.kernel());
    if k_src.dim() != k_tgt.dim() {
        return Ok(Some("kernels have different dimensions".into()));
    }
    for (t, (u, v)) in k_src.basis().iter().zip(k_tgt.basis()).enumerate() {
        if map.apply(u)? != *v {
            return Ok(Some(format!("kernel basis element {t} is not fixed")));
        }
    }
    Ok(None)
}
