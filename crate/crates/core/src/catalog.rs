//! Built-in desk-scale instances.

use crate::algebra::{AlgebraPresentation, DifferentialLieAlgebra, LinearMap, Representation};
use crate::courant::ExactCourantPresentation;
use crate::document::Document;
use crate::linalg::{FieldSpec, Vector};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn coords(field: FieldSpec, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

fn presentation(field: FieldSpec, basis: &[&str], brackets: &[(usize, usize, &[i64])]) -> AlgebraPresentation {
    let mut alg = AlgebraPresentation::abelian(field, basis.iter().map(|s| s.to_string()).collect())
        .expect("catalog names are distinct");
    for &(i, j, value) in brackets {
        alg.set_bracket(i, j, coords(field, value)).expect("catalog shapes");
    }
    alg
}

/// Abelian algebra on `e1..en`.
pub fn abelian(field: FieldSpec, n: usize) -> AlgebraPresentation {
    AlgebraPresentation::abelian(field, names("e", n)).expect("distinct")
}

/// The non-abelian 2-dimensional Lie algebra, `[e1, e2] = e2`.
pub fn aff1(field: FieldSpec) -> AlgebraPresentation {
    presentation(field, &["e1", "e2"], &[(0, 1, &[0, 1]), (1, 0, &[0, -1])])
}

/// `[x, y] = z`.
pub fn heisenberg3(field: FieldSpec) -> AlgebraPresentation {
    presentation(field, &["x", "y", "z"], &[(0, 1, &[0, 0, 1]), (1, 0, &[0, 0, -1])])
}

/// `[e, f] = h`, `[h, e] = 2e`, `[h, f] = −2f`.
pub fn sl2(field: FieldSpec) -> AlgebraPresentation {
    presentation(
        field,
        &["e", "f", "h"],
        &[
            (0, 1, &[0, 0, 1]),
            (1, 0, &[0, 0, -1]),
            (2, 0, &[2, 0, 0]),
            (0, 2, &[-2, 0, 0]),
            (2, 1, &[0, -2, 0]),
            (1, 2, &[0, 2, 0]),
        ],
    )
}

/// The 2-dimensional non-Lie Leibniz algebra `[e1, e1] = e2`.
pub fn leibniz2(field: FieldSpec) -> AlgebraPresentation {
    presentation(field, &["e1", "e2"], &[(0, 0, &[0, 1])])
}

/// Heisenberg algebra with the differential `d(y) = x`, `d(x) = d(z) = 0`.
pub fn heisenberg_dla(field: FieldSpec) -> DifferentialLieAlgebra {
    let alg = heisenberg3(field);
    let d = LinearMap::from_images(
        field,
        3,
        &[
            coords(field, &[0, 0, 0]),
            coords(field, &[1, 0, 0]),
            coords(field, &[0, 0, 0]),
        ],
    )
    .expect("3x3");
    DifferentialLieAlgebra::new(alg, d).expect("valid differential")
}

/// One-dimensional module with both actions zero.
pub fn trivial_rep(alg: &AlgebraPresentation, dim: usize) -> Representation {
    Representation::trivial(alg, names("h", dim)).expect("distinct")
}

/// The algebra acting on a copy of itself by left and right multiplication.
pub fn adjoint_rep(alg: &AlgebraPresentation) -> Representation {
    let rep = Representation::self_representation(alg);
    Representation::new(
        alg.clone(),
        names("h", alg.dim()),
        rep.left_actions().to_vec(),
        rep.right_actions().to_vec(),
    )
    .expect("shapes")
}

/// Left multiplication as the left action, right action zero.
pub fn hemisemidirect_rep(alg: &AlgebraPresentation) -> Representation {
    let left = (0..alg.dim()).map(|i| alg.left_multiplication(i)).collect();
    Representation::left_module(alg, names("h", alg.dim()), left).expect("shapes")
}

/// Named algebras available to [`catalog`].
pub fn algebras(field: FieldSpec) -> Vec<(&'static str, AlgebraPresentation)> {
    vec![
        ("abelian1", abelian(field, 1)),
        ("abelian2", abelian(field, 2)),
        ("abelian3", abelian(field, 3)),
        ("aff1", aff1(field)),
        ("heisenberg3", heisenberg3(field)),
        ("sl2", sl2(field)),
        ("leibniz2", leibniz2(field)),
        ("heisenberg_derived", heisenberg_dla(field).derived_bracket()),
    ]
}

/// Every (algebra, representation) pair shipped in the catalog.
pub fn representations(field: FieldSpec) -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    for (name, alg) in algebras(field) {
        out.push((format!("{name}-trivial"), trivial_rep(&alg, 1)));
        out.push((format!("{name}-adjoint"), adjoint_rep(&alg)));
        out.push((format!("{name}-hemisemidirect"), hemisemidirect_rep(&alg)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub document: Document,
}

fn entry(name: impl Into<String>, description: impl Into<String>, document: Document) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        description: description.into(),
        document,
    }
}

fn describe(name: &str) -> &'static str {
    match name {
        "abelian1" | "abelian2" | "abelian3" => "abelian Lie algebra",
        "aff1" => "non-abelian 2-dimensional Lie algebra, [e1,e2] = e2",
        "heisenberg3" => "3-dimensional Heisenberg Lie algebra, [x,y] = z",
        "sl2" => "sl(2) with [e,f] = h, [h,e] = 2e, [h,f] = -2f",
        "leibniz2" => "non-Lie left Leibniz algebra, [e1,e1] = e2",
        "heisenberg_derived" => "derived bracket [a,b]_d = [da,b] of heisenberg_dla",
        _ => "",
    }
}

/// All catalog entries over ℚ, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let field = FieldSpec::Rationals;
    let mut out = Vec::new();
    for (name, alg) in algebras(field) {
        out.push(entry(name, describe(name), Document::with_algebra(alg.clone())));
        for (kind, rep) in [
            ("trivial", trivial_rep(&alg, 1)),
            ("adjoint", adjoint_rep(&alg)),
            ("hemisemidirect", hemisemidirect_rep(&alg)),
        ] {
            let description = match kind {
                "trivial" => "one-dimensional module with zero actions",
                "adjoint" => "left and right multiplication on a copy of the algebra",
                _ => "left multiplication, zero right action",
            };
            out.push(entry(
                format!("{name}-{kind}"),
                format!("{}: {description}", describe(name)),
                Document::with_representation(rep.clone()),
            ));
            if kind == "hemisemidirect" && alg.check().lie {
                let courant = ExactCourantPresentation::hemisemidirect(
                    &alg,
                    rep.basis_names().to_vec(),
                    rep.left_actions().to_vec(),
                )
                .expect("left multiplication of a Lie algebra is a Lie module")
                .to_courant();
                out.push(entry(
                    format!("{name}-hemisemidirect-courant"),
                    format!("{}: hemisemidirect exact Courant algebra", describe(name)),
                    Document::with_courant(courant),
                ));
            }
        }
    }
    let dla = heisenberg_dla(field);
    let mut doc = Document::with_algebra(dla.algebra().clone());
    doc.differential = Some(dla.differential().clone());
    out.push(entry(
        "heisenberg_dla",
        "Heisenberg Lie algebra with differential d(y) = x",
        doc,
    ));
    out
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
