use super::morphism::morphism_failure;
use super::{CourantAlgebra, CourantMorphism, ExactCourantPresentation, Section};
use crate::algebra::{leibniz_kernel, quotient_algebra, AlgebraPresentation, LinearMap, Representation};
use crate::cohomology::{Cochain, CochainComplex, CohomologyReport};
use crate::error::{Error, Result, Witness};
use crate::linalg::{add_vectors, sub_vectors, Subspace, Vector};

impl CourantAlgebra {
    /// `φ_q(g₁, g₂) = [q(g₁), q(g₂)] − q([g₁, g₂])` in kernel coordinates.
    pub fn extract_cocycle(&self, q: &Section) -> Result<Cochain> {
        let rep = self.induced_actions()?;
        self.extract_cocycle_over(&rep, q)
    }

    fn extract_cocycle_over(&self, rep: &Representation, q: &Section) -> Result<Cochain> {
        let kernel = self.kernel();
        let g = self.base().dim();
        let lifts: Vec<Vector> = (0..g).map(|i| q.map().image_of(i)).collect();
        let mut phi = Cochain::zero(rep, 2);
        for i in 0..g {
            for j in 0..g {
                let product = self.total().bracket_unchecked(&lifts[i], &lifts[j]);
                let lifted = q.map().apply(self.base().bracket_basis(i, j))?;
                let diff = sub_vectors(&product, &lifted);
                let coords = kernel.coordinates(&diff).ok_or_else(|| {
                    Error::ValueOutsideKernel(Witness {
                        indices: vec![i, j],
                        residual: diff.clone(),
                    })
                })?;
                phi.set(&[i, j], coords)?;
            }
        }
        Ok(phi)
    }

    /// Transports the algebra to split coordinates `𝔤 ⊕ ker π` along `q`.
    pub fn normalize(&self, q: &Section) -> Result<ExactCourantPresentation> {
        let rep = self.induced_actions()?;
        let phi = self.extract_cocycle_over(&rep, q)?;
        ExactCourantPresentation::from_cocycle(self.base(), &rep, &phi)
    }

    /// Class of `φ_q` in `HL²(𝔤; ker π)` for the deterministic section.
    pub fn classify(&self) -> Result<Classification> {
        let q = self.choose_section()?;
        self.classify_with(&q)
    }

    pub fn classify_with(&self, q: &Section) -> Result<Classification> {
        let rep = self.induced_actions()?;
        let cocycle = self.extract_cocycle_over(&rep, q)?;
        let report = CochainComplex::new(&rep)?.cohomology(2)?;
        let coordinates = report.class_coordinates(&cocycle).ok_or_else(|| {
            Error::NotACocycle(Witness {
                indices: vec![],
                residual: cocycle.flat().to_vec(),
            })
        })?;
        Ok(Classification {
            section: q.clone(),
            representation: rep,
            cocycle,
            report,
            coordinates,
        })
    }

    /// Builds `F = α₂⁻¹ ∘ ((g, h) ↦ (g, h + ψ(g))) ∘ α₁` as a raw linear map.
    fn shift_map(&self, q: &Section, target: &CourantAlgebra, q_target: &Section, psi: &Cochain) -> Result<LinearMap> {
        let field = self.total().field();
        let (k_src, k_tgt) = (self.kernel(), target.kernel());
        let shift = psi
            .as_linear_map()
            .ok_or_else(|| Error::InvalidDegree("shift must have degree 1".into()))?;
        let images = (0..self.total().dim())
            .map(|t| {
                let e = crate::linalg::unit_vector(field, self.total().dim(), t);
                let (g, h) = self.to_split_in(&k_src, q, &e)?;
                let h = add_vectors(&h, &shift.mul_vec(&g)?);
                target.join_split_in(&k_tgt, q_target, &g, &h)
            })
            .collect::<Result<Vec<_>>>()?;
        LinearMap::from_images(field, target.total().dim(), &images)
    }

    /// The automorphism `(g, h)_q ↦ (g, h + ψ(g))_q` for a 1-cocycle `ψ`.
    pub fn automorphism_from_cocycle(&self, psi: &Cochain, q: &Section) -> Result<CourantMorphism> {
        let rep = self.induced_actions()?;
        if psi.degree() != 1 || !psi.fits(&rep) {
            return Err(Error::DimensionMismatch(
                "ψ must be a 1-cochain with values in ker π".into(),
            ));
        }
        CochainComplex::new(&rep)?.require_cocycle(psi)?;
        let map = self.shift_map(q, self, q, psi)?;
        CourantMorphism::new(map, self.clone(), self.clone())
    }

    /// `ψ(g) = F₂((g, 0)_q)`, the kernel part of `F(q(g))`.
    pub fn cocycle_from_automorphism(&self, map: &LinearMap, q: &Section) -> Result<Cochain> {
        let rep = self.induced_actions()?;
        if let Some(reason) = morphism_failure(map, self, self)? {
            return Err(Error::NotAnAutomorphism(reason));
        }
        let kernel = self.kernel();
        let psi = Cochain::from_fn(&rep, 1, |tuple| {
            let image = map.apply(&q.map().image_of(tuple[0])).expect("shape");
            self.to_split_in(&kernel, q, &image)
                .expect("π∘F = π keeps the image over g")
                .1
        })?;
        match CochainComplex::new(&rep)?.require_cocycle(&psi) {
            Ok(()) => Ok(psi),
            Err(e) => Err(Error::NotAnAutomorphism(e.to_string())),
        }
    }

    /// Degree-1 data governing the automorphism group.
    pub fn automorphism_space(&self) -> Result<AutomorphismSpace> {
        let rep = self.induced_actions()?;
        let q = self.choose_section()?;
        let complex = CochainComplex::new(&rep)?;
        let cocycles = complex.cocycle_space(1)?;
        let coboundaries = complex.coboundary_space(1)?;
        let cocycle_basis = to_cochains(&rep, &cocycles)?;
        let automorphisms = cocycle_basis
            .iter()
            .map(|psi| self.automorphism_from_cocycle(psi, &q))
            .collect::<Result<Vec<_>>>()?;
        let coboundaries_act_trivially = to_cochains(&rep, &coboundaries)?
            .iter()
            .map(|psi| self.automorphism_from_cocycle(psi, &q).map(|f| f.is_identity()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        Ok(AutomorphismSpace {
            dim_cocycles: cocycles.dim(),
            dim_coboundaries: coboundaries.dim(),
            dim_cohomology: cocycles.dim() - coboundaries.dim(),
            cocycle_basis,
            automorphisms,
            coboundaries_act_trivially,
        })
    }
}

fn to_cochains(rep: &Representation, space: &Subspace) -> Result<Vec<Cochain>> {
    space
        .basis()
        .iter()
        .map(|v| Cochain::from_flat(rep, 1, v.clone()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub section: Section,
    pub representation: Representation,
    pub cocycle: Cochain,
    pub report: CohomologyReport,
    /// Class of `cocycle` in the basis `report.representatives`.
    pub coordinates: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismSpace {
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    /// Canonical basis of `ZL¹`.
    pub cocycle_basis: Vec<Cochain>,
    /// The automorphism attached to each element of `cocycle_basis`.
    pub automorphisms: Vec<CourantMorphism>,
    /// Whether every 1-coboundary yields the identity automorphism; this
    /// holds exactly when `BL¹ = 0`.
    pub coboundaries_act_trivially: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsomorphism {
    /// The induced representations on the kernels differ.
    DifferentReps,
    /// Same representation, but the cocycles lie in different `HL²` classes.
    DistinctClasses,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsomorphismOutcome {
    Isomorphic {
        morphism: Box<CourantMorphism>,
        /// `ψ` with `δψ = φ_{q₁} − φ_{q₂}`.
        shift: Cochain,
    },
    NotIsomorphic(NonIsomorphism),
}

/// Decides whether two exact Courant algebras over the same base are
/// isomorphic through a map fixing the kernel pointwise, and builds the
/// witness `F(g, h) = (g, h + ψ(g))` in split coordinates when they are.
pub fn are_isomorphic(c1: &CourantAlgebra, c2: &CourantAlgebra) -> Result<IsomorphismOutcome> {
    c1.require_exact()?;
    c2.require_exact()?;
    if c1.base() != c2.base() {
        return Err(Error::BaseMismatch(
            "the two algebras project onto different bases".into(),
        ));
    }
    if c1.kernel().dim() != c2.kernel().dim() {
        return Err(Error::BaseMismatch("kernels have different dimensions".into()));
    }
    let (q1, q2) = (c1.choose_section()?, c2.choose_section()?);
    let (rep1, rep2) = (c1.induced_actions()?, c2.induced_actions()?);
    if !rep1.same_actions(&rep2) {
        return Ok(IsomorphismOutcome::NotIsomorphic(NonIsomorphism::DifferentReps));
    }
    let phi1 = c1.extract_cocycle_over(&rep1, &q1)?;
    let phi2 = c2.extract_cocycle_over(&rep1, &q2)?;
    let Some(psi) = CochainComplex::new(&rep1)?.is_coboundary(&(&phi1 - &phi2))? else {
        return Ok(IsomorphismOutcome::NotIsomorphic(NonIsomorphism::DistinctClasses));
    };
    let map = c1.shift_map(&q1, c2, &q2, &psi)?;
    let morphism = CourantMorphism::new(map, c1.clone(), c2.clone())?;
    Ok(IsomorphismOutcome::Isomorphic {
        morphism: Box::new(morphism),
        shift: psi,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicClass {
    pub kernel: Subspace,
    pub quotient: AlgebraPresentation,
    pub courant: CourantAlgebra,
    pub classification: Classification,
}

/// Views a left Leibniz algebra as an exact Courant algebra over its quotient
/// by the Leibniz kernel and classifies it.
pub fn characteristic_class(a: &AlgebraPresentation) -> Result<CharacteristicClass> {
    a.require_leibniz()?;
    let kernel = leibniz_kernel(a);
    let (quotient, projection) = quotient_algebra(a, &kernel)?;
    let courant = CourantAlgebra::new(a.clone(), quotient.clone(), projection)?;
    courant.require_exact()?;
    let classification = courant.classify()?;
    Ok(CharacteristicClass {
        kernel,
        quotient,
        courant,
        classification,
    })
}
