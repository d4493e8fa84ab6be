//! Helpers shared by the integration tests: seeded generators and
//! brute-force checks written directly from the definitions.
#![allow(dead_code)]

use courant_core::algebra::{AlgebraPresentation, LinearMap, Representation};
use courant_core::cohomology::Cochain;
use courant_core::linalg::{FieldSpec, Scalar, Vector};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut impl Rng, field: FieldSpec) -> Scalar {
    match field {
        FieldSpec::Rationals => {
            let n = rng.gen_range(-3i64..=3);
            let d = rng.gen_range(1i64..=3);
            &field.from_i64(n) * &field.from_i64(d).inverse().unwrap()
        }
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

pub fn random_vector(rng: &mut impl Rng, field: FieldSpec, n: usize) -> Vector {
    (0..n).map(|_| random_scalar(rng, field)).collect()
}

pub fn random_cochain(rng: &mut impl Rng, rep: &Representation, degree: usize) -> Cochain {
    let len = Cochain::zero(rep, degree).flat().len();
    Cochain::from_flat(rep, degree, random_vector(rng, rep.algebra().field(), len)).unwrap()
}

/// A random linear combination of `basis` (the zero vector when it is empty).
pub fn random_combination(rng: &mut impl Rng, field: FieldSpec, ambient: usize, basis: &[Vector]) -> Vector {
    let mut out = vec![field.zero(); ambient];
    for b in basis {
        let c = random_scalar(rng, field);
        for (o, x) in out.iter_mut().zip(b) {
            *o = &*o + &(&c * x);
        }
    }
    out
}

/// `𝔤 ⊕ 𝔥` with `[(x, m), (y, n)] = ([x, y], L_x n + R_y m + f(x, y))`,
/// assembled entry by entry without any validation.
pub fn split_bracket(rep: &Representation, f: &Cochain) -> AlgebraPresentation {
    let g = rep.algebra();
    let field = g.field();
    let (n, h) = (g.dim(), rep.dim());
    let mut names: Vec<String> = g.basis_names().to_vec();
    names.extend(rep.basis_names().iter().map(|s| format!("{s}'")));
    let mut total = AlgebraPresentation::abelian(field, names).unwrap();
    for i in 0..n {
        for j in 0..n {
            let mut v = g.bracket_basis(i, j).to_vec();
            v.extend_from_slice(f.value(&[i, j]));
            total.set_bracket(i, j, v).unwrap();
        }
        for b in 0..h {
            let mut v = vec![field.zero(); n];
            v.extend(rep.left(i).column(b));
            total.set_bracket(i, n + b, v).unwrap();
            let mut v = vec![field.zero(); n];
            v.extend(rep.right(i).column(b));
            total.set_bracket(n + b, i, v).unwrap();
        }
    }
    total
}

/// Equal structure constants, ignoring basis names.
pub fn same_constants(a: &AlgebraPresentation, b: &AlgebraPresentation) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

/// `F[e_i, e_j] = [F e_i, F e_j]` on every pair of basis vectors.
pub fn preserves_brackets(map: &LinearMap, source: &AlgebraPresentation, target: &AlgebraPresentation) -> bool {
    (0..source.dim()).all(|i| {
        (0..source.dim()).all(|j| {
            let lhs = map.apply(source.bracket_basis(i, j)).unwrap();
            let rhs = target.bracket(&map.image_of(i), &map.image_of(j)).unwrap();
            lhs == rhs
        })
    })
}

const FIELDS: [&str; 5] = ["Q", "Fp:2", "Fp:3", "Fp:5", "Fp:7"];
const NAME_POOL: [&str; 10] = ["e1", "e2", "e3", "e4", "x", "y", "z", "h_1", "h_2", "w"];

fn scalar_text(rng: &mut impl Rng, field: &str) -> String {
    let n = rng.gen_range(-9i64..=9);
    if field == "Q" && rng.gen_bool(0.4) {
        format!("{n}/{}", rng.gen_range(1..=6))
    } else {
        n.to_string()
    }
}

fn coeffs(rng: &mut impl Rng, field: &str, names: &[String]) -> Value {
    let mut map = Map::new();
    let mut picked: Vec<&String> = names.iter().filter(|_| rng.gen_bool(0.5)).collect();
    picked.shuffle(rng);
    for n in picked {
        map.insert(n.clone(), json!(scalar_text(rng, field)));
    }
    Value::Object(map)
}

fn basis(rng: &mut impl Rng) -> Vec<String> {
    let dim = rng.gen_range(1..=4);
    let mut pool: Vec<String> = NAME_POOL.iter().map(|s| s.to_string()).collect();
    pool.shuffle(rng);
    pool.truncate(dim);
    pool
}

fn products(rng: &mut impl Rng, field: &str, left: &[String], right: &[String], values: &[String]) -> Value {
    let mut pairs: Vec<(&String, &String)> = left.iter().flat_map(|l| right.iter().map(move |r| (l, r))).collect();
    pairs.shuffle(rng);
    let keep = rng.gen_range(0..=pairs.len());
    let items: Vec<Value> = pairs[..keep]
        .iter()
        .map(|(l, r)| json!({"left": l, "right": r, "value": coeffs(rng, field, values)}))
        .collect();
    Value::Array(items)
}

fn images(rng: &mut impl Rng, field: &str, source: &[String], target: &[String]) -> Value {
    let mut src: Vec<&String> = source.iter().filter(|_| rng.gen_bool(0.7)).collect();
    src.shuffle(rng);
    Value::Array(
        src.into_iter()
            .map(|s| json!({"source": s, "value": coeffs(rng, field, target)}))
            .collect(),
    )
}

/// A random well-formed document: every name resolves and every scalar
/// parses, but no algebraic axiom is imposed.
pub fn fuzz_document(rng: &mut impl Rng) -> String {
    let field = *FIELDS.choose(rng).unwrap();
    let g = basis(rng);
    let mut doc = Map::new();
    doc.insert("field".into(), json!(field));
    doc.insert(
        "algebra".into(),
        json!({"basis": g, "brackets": products(rng, field, &g, &g, &g)}),
    );
    if rng.gen_bool(0.6) {
        let h = basis(rng);
        doc.insert(
            "representation".into(),
            json!({
                "basis": h,
                "left_action": products(rng, field, &g, &h, &h),
                "right_action": products(rng, field, &h, &g, &h),
            }),
        );
        if rng.gen_bool(0.6) {
            let mut cochains = Vec::new();
            for k in 0..rng.gen_range(1..=2) {
                let degree = rng.gen_range(0..=3usize);
                let mut tuples: Vec<Vec<usize>> = vec![vec![]];
                for _ in 0..degree {
                    tuples = tuples
                        .into_iter()
                        .flat_map(|t| (0..g.len()).map(move |i| [t.clone(), vec![i]].concat()))
                        .collect();
                }
                tuples.shuffle(rng);
                let keep = rng.gen_range(0..=tuples.len().min(6));
                let values: Vec<Value> = tuples[..keep]
                    .iter()
                    .map(|t| {
                        let args: Vec<&String> = t.iter().map(|&i| &g[i]).collect();
                        json!({"args": args, "value": coeffs(rng, field, &h)})
                    })
                    .collect();
                cochains.push(json!({"name": format!("c{k}"), "degree": degree, "values": values}));
            }
            doc.insert("cochains".into(), Value::Array(cochains));
        }
    }
    if rng.gen_bool(0.4) {
        let t = basis(rng);
        doc.insert(
            "courant".into(),
            json!({
                "total": {"basis": t, "brackets": products(rng, field, &t, &t, &t)},
                "projection": images(rng, field, &t, &g),
            }),
        );
    }
    if rng.gen_bool(0.3) {
        doc.insert("differential".into(), images(rng, field, &g, &g));
    }
    let value = Value::Object(doc);
    if rng.gen_bool(0.5) {
        serde_json::to_string_pretty(&value).unwrap()
    } else {
        serde_json::to_string(&value).unwrap()
    }
}
