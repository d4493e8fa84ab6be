//! The JSON document format shared by the CLI and the catalog.
//!
//! ```json
//! {
//!   "field": "Q",
//!   "algebra": {
//!     "basis": ["e1", "e2"],
//!     "brackets": [{"left": "e1", "right": "e2", "value": {"e2": "1"}}]
//!   },
//!   "representation": {
//!     "basis": ["h1"],
//!     "left_action": [{"left": "e1", "right": "h1", "value": {"h1": "1"}}],
//!     "right_action": []
//!   },
//!   "cochains": [{"name": "f", "degree": 2, "values": [{"args": ["e1", "e2"], "value": {"h1": "1"}}]}],
//!   "courant": {"total": {"basis": [...], "brackets": [...]}, "projection": [{"source": "a1", "value": {"e1": "1"}}]},
//!   "differential": [{"source": "y", "value": {"x": "1"}}]
//! }
//! ```
//!
//! Tables are sparse: omitted brackets, action entries, cochain values and
//! map images are zero. A representation's left action lists `[g, h]` and its
//! right action `[h, g]`. A courant section projects onto `algebra`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{AlgebraPresentation, LinearMap, Representation};
use crate::cohomology::Cochain;
use crate::courant::CourantAlgebra;
use crate::linalg::{zero_vector, FieldSpec, Matrix, Scalar, Vector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown basis name `{name}` at {location}")]
    UnknownBasisName { name: String, location: String },
    #[error("bad scalar at {location}: {reason}")]
    BadScalar { location: String, reason: String },
    #[error("duplicate entry at {location}")]
    DuplicateEntry { location: String },
    #[error("invalid document at {location}: {message}")]
    Invalid { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError::Invalid {
        location: location.into(),
        message: message.into(),
    }
}

/// Coefficient map `basis name → scalar string`, kept in document order and
/// with duplicates preserved so they can be reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Coeffs(Vec<(String, String)>);

impl Serialize for Coeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Coeffs {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffsVisitor;

        impl<'de> Visitor<'de> for CoeffsVisitor {
            type Value = Coeffs;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from basis names to scalar strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Coeffs, A::Error> {
                let mut entries = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    entries.push((k, v));
                }
                Ok(Coeffs(entries))
            }
        }

        deserializer.deserialize_map(CoeffsVisitor)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    algebra: Option<RawAlgebra>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    representation: Option<RawRepresentation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cochains: Vec<RawCochain>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    courant: Option<RawCourant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    differential: Option<Vec<RawImage>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<RawProduct>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProduct {
    left: String,
    right: String,
    value: Coeffs,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    basis: Vec<String>,
    #[serde(default)]
    left_action: Vec<RawProduct>,
    #[serde(default)]
    right_action: Vec<RawProduct>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochain {
    name: String,
    degree: usize,
    #[serde(default)]
    values: Vec<RawCochainValue>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCochainValue {
    args: Vec<String>,
    value: Coeffs,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCourant {
    total: RawAlgebra,
    #[serde(default)]
    projection: Vec<RawImage>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawImage {
    source: String,
    value: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCochain {
    pub name: String,
    pub cochain: Cochain,
}

/// A parsed, name-resolved document.
///
/// `representation` acts on `algebra`, cochains live on `representation`,
/// `courant` projects onto `algebra`, and `differential` acts on `algebra`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: FieldSpec,
    pub algebra: Option<AlgebraPresentation>,
    pub representation: Option<Representation>,
    pub cochains: Vec<NamedCochain>,
    pub courant: Option<CourantAlgebra>,
    pub differential: Option<LinearMap>,
}

impl Document {
    pub fn empty(field: FieldSpec) -> Self {
        Document {
            field,
            algebra: None,
            representation: None,
            cochains: Vec::new(),
            courant: None,
            differential: None,
        }
    }

    pub fn with_algebra(algebra: AlgebraPresentation) -> Self {
        let mut doc = Document::empty(algebra.field());
        doc.algebra = Some(algebra);
        doc
    }

    pub fn with_representation(rep: Representation) -> Self {
        let mut doc = Document::with_algebra(rep.algebra().clone());
        doc.representation = Some(rep);
        doc
    }

    pub fn with_courant(courant: CourantAlgebra) -> Self {
        let mut doc = Document::with_algebra(courant.base().clone());
        doc.courant = Some(courant);
        doc
    }

    pub fn push_cochain(&mut self, name: impl Into<String>, cochain: Cochain) {
        self.cochains.push(NamedCochain {
            name: name.into(),
            cochain,
        });
    }

    pub fn cochain(&self, name: &str) -> Option<&Cochain> {
        self.cochains.iter().find(|c| c.name == name).map(|c| &c.cochain)
    }
}

struct Names<'a> {
    names: &'a [String],
    index: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn new(names: &'a [String], location: &str) -> Result<Self, DocumentError> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.as_str(), i).is_some() {
                return Err(DocumentError::DuplicateEntry {
                    location: format!("{location}[{i}] (`{n}`)"),
                });
            }
        }
        Ok(Names { names, index })
    }

    fn resolve(&self, name: &str, location: &str) -> Result<usize, DocumentError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| DocumentError::UnknownBasisName {
                name: name.to_string(),
                location: location.to_string(),
            })
    }

    fn len(&self) -> usize {
        self.names.len()
    }
}

fn parse_coeffs(coeffs: &Coeffs, names: &Names, field: FieldSpec, location: &str) -> Result<Vector, DocumentError> {
    let mut out = zero_vector(field, names.len());
    let mut seen = HashSet::new();
    for (name, text) in &coeffs.0 {
        let here = format!("{location}.{name}");
        let k = names.resolve(name, &here)?;
        if !seen.insert(k) {
            return Err(DocumentError::DuplicateEntry { location: here });
        }
        out[k] = field.parse_scalar(text).map_err(|reason| DocumentError::BadScalar {
            location: here.clone(),
            reason,
        })?;
    }
    Ok(out)
}

fn parse_algebra(raw: &RawAlgebra, field: FieldSpec, location: &str) -> Result<AlgebraPresentation, DocumentError> {
    let names = Names::new(&raw.basis, &format!("{location}.basis"))?;
    let mut alg =
        AlgebraPresentation::abelian(field, raw.basis.clone()).map_err(|e| invalid(location, e.to_string()))?;
    let mut seen = HashSet::new();
    for (t, b) in raw.brackets.iter().enumerate() {
        let here = format!("{location}.brackets[{t}]");
        let i = names.resolve(&b.left, &format!("{here}.left"))?;
        let j = names.resolve(&b.right, &format!("{here}.right"))?;
        if !seen.insert((i, j)) {
            return Err(DocumentError::DuplicateEntry { location: here });
        }
        let value = parse_coeffs(&b.value, &names, field, &format!("{here}.value"))?;
        alg.set_bracket(i, j, value)
            .map_err(|e| invalid(&here, e.to_string()))?;
    }
    Ok(alg)
}

fn parse_action(
    entries: &[RawProduct],
    acting: &Names,
    module: &Names,
    field: FieldSpec,
    acting_on_left: bool,
    location: &str,
) -> Result<Vec<Matrix>, DocumentError> {
    let h = module.len();
    let mut mats = vec![Matrix::zeros(field, h, h); acting.len()];
    let mut seen = HashSet::new();
    for (t, e) in entries.iter().enumerate() {
        let here = format!("{location}[{t}]");
        let (acting_name, module_name, acting_slot, module_slot) = if acting_on_left {
            (&e.left, &e.right, "left", "right")
        } else {
            (&e.right, &e.left, "right", "left")
        };
        let i = acting.resolve(acting_name, &format!("{here}.{acting_slot}"))?;
        let k = module.resolve(module_name, &format!("{here}.{module_slot}"))?;
        if !seen.insert((i, k)) {
            return Err(DocumentError::DuplicateEntry { location: here });
        }
        let value = parse_coeffs(&e.value, module, field, &format!("{here}.value"))?;
        for (r, s) in value.into_iter().enumerate() {
            mats[i].set(r, k, s);
        }
    }
    Ok(mats)
}

fn parse_images(
    entries: &[RawImage],
    source: &Names,
    target: &Names,
    field: FieldSpec,
    location: &str,
) -> Result<LinearMap, DocumentError> {
    let mut images = vec![zero_vector(field, target.len()); source.len()];
    let mut seen = HashSet::new();
    for (t, e) in entries.iter().enumerate() {
        let here = format!("{location}[{t}]");
        let i = source.resolve(&e.source, &format!("{here}.source"))?;
        if !seen.insert(i) {
            return Err(DocumentError::DuplicateEntry { location: here });
        }
        images[i] = parse_coeffs(&e.value, target, field, &format!("{here}.value"))?;
    }
    LinearMap::from_images(field, target.len(), &images).map_err(|e| invalid(location, e.to_string()))
}

/// Parses a document whose `field` entry is required.
pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    parse_document_with_field(text, None)
}

/// Parses a document; `default_field` applies only when the document has no
/// `field` entry, and supplying both is an error.
pub fn parse_document_with_field(text: &str, default_field: Option<FieldSpec>) -> Result<Document, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let field = match (&raw.field, default_field) {
        (Some(_), Some(_)) => {
            return Err(invalid(
                "field",
                "document declares a field; an override is not permitted",
            ))
        }
        (Some(text), None) => text.parse::<FieldSpec>().map_err(|e| invalid("field", e.to_string()))?,
        (None, Some(f)) => f,
        (None, None) => return Err(invalid("field", "missing field specification")),
    };
    let mut doc = Document::empty(field);

    let algebra = raw
        .algebra
        .as_ref()
        .map(|a| parse_algebra(a, field, "algebra"))
        .transpose()?;
    let algebra_names = raw
        .algebra
        .as_ref()
        .map(|a| Names::new(&a.basis, "algebra.basis"))
        .transpose()?;

    if let Some(r) = &raw.representation {
        let (Some(alg), Some(acting)) = (&algebra, &algebra_names) else {
            return Err(invalid(
                "representation",
                "a representation requires an algebra section",
            ));
        };
        let module = Names::new(&r.basis, "representation.basis")?;
        let left = parse_action(
            &r.left_action,
            acting,
            &module,
            field,
            true,
            "representation.left_action",
        )?;
        let right = parse_action(
            &r.right_action,
            acting,
            &module,
            field,
            false,
            "representation.right_action",
        )?;
        let rep = Representation::new(alg.clone(), r.basis.clone(), left, right)
            .map_err(|e| invalid("representation", e.to_string()))?;
        doc.representation = Some(rep);
    }

    let mut cochain_names = HashSet::new();
    for (t, c) in raw.cochains.iter().enumerate() {
        let here = format!("cochains[{t}]");
        let (Some(rep), Some(acting)) = (&doc.representation, &algebra_names) else {
            return Err(invalid(&here, "cochains require a representation section"));
        };
        if !cochain_names.insert(c.name.as_str()) {
            return Err(DocumentError::DuplicateEntry {
                location: format!("{here}.name"),
            });
        }
        let module = Names::new(rep.basis_names(), "representation.basis")?;
        let mut cochain = Cochain::zero(rep, c.degree);
        let mut seen = HashSet::new();
        for (u, v) in c.values.iter().enumerate() {
            let loc = format!("{here}.values[{u}]");
            if v.args.len() != c.degree {
                return Err(invalid(
                    &loc,
                    format!("{} arguments for a degree-{} cochain", v.args.len(), c.degree),
                ));
            }
            let tuple = v
                .args
                .iter()
                .enumerate()
                .map(|(s, a)| acting.resolve(a, &format!("{loc}.args[{s}]")))
                .collect::<Result<Vec<_>, _>>()?;
            if !seen.insert(tuple.clone()) {
                return Err(DocumentError::DuplicateEntry { location: loc });
            }
            let value = parse_coeffs(&v.value, &module, field, &format!("{loc}.value"))?;
            cochain.set(&tuple, value).map_err(|e| invalid(&loc, e.to_string()))?;
        }
        doc.push_cochain(c.name.clone(), cochain);
    }

    if let Some(c) = &raw.courant {
        let (Some(base), Some(base_names)) = (&algebra, &algebra_names) else {
            return Err(invalid(
                "courant",
                "a courant section requires an algebra section (the base)",
            ));
        };
        let total = parse_algebra(&c.total, field, "courant.total")?;
        let total_names = Names::new(&c.total.basis, "courant.total.basis")?;
        let projection = parse_images(&c.projection, &total_names, base_names, field, "courant.projection")?;
        let courant =
            CourantAlgebra::new(total, base.clone(), projection).map_err(|e| invalid("courant", e.to_string()))?;
        doc.courant = Some(courant);
    }

    if let Some(d) = &raw.differential {
        let Some(names) = &algebra_names else {
            return Err(invalid("differential", "a differential requires an algebra section"));
        };
        doc.differential = Some(parse_images(d, names, names, field, "differential")?);
    }

    doc.algebra = algebra;
    Ok(doc)
}

fn coeffs_of(names: &[String], v: &[Scalar]) -> Coeffs {
    Coeffs(
        names
            .iter()
            .zip(v)
            .filter(|(_, s)| !s.is_zero())
            .map(|(n, s)| (n.clone(), s.to_string()))
            .collect(),
    )
}

fn raw_algebra(alg: &AlgebraPresentation) -> RawAlgebra {
    let names = alg.basis_names();
    let mut brackets = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let value = coeffs_of(names, alg.bracket_basis(i, j));
            if !value.0.is_empty() {
                brackets.push(RawProduct {
                    left: names[i].clone(),
                    right: names[j].clone(),
                    value,
                });
            }
        }
    }
    RawAlgebra {
        basis: names.to_vec(),
        brackets,
    }
}

fn raw_action(rep: &Representation, acting_on_left: bool) -> Vec<RawProduct> {
    let g_names = rep.algebra().basis_names();
    let h_names = rep.basis_names();
    let mut out = Vec::new();
    for (i, gi) in g_names.iter().enumerate() {
        let m = if acting_on_left { rep.left(i) } else { rep.right(i) };
        for (k, hk) in h_names.iter().enumerate() {
            let value = coeffs_of(h_names, &m.column(k));
            if value.0.is_empty() {
                continue;
            }
            let (left, right) = if acting_on_left { (gi, hk) } else { (hk, gi) };
            out.push(RawProduct {
                left: left.clone(),
                right: right.clone(),
                value,
            });
        }
    }
    if !acting_on_left {
        // right-action records sort by (module element, acting element)
        let h_index: HashMap<&str, usize> = h_names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let g_index: HashMap<&str, usize> = g_names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        out.sort_by_key(|p| (h_index[p.left.as_str()], g_index[p.right.as_str()]));
    }
    out
}

fn raw_images(map: &LinearMap, source: &[String], target: &[String]) -> Vec<RawImage> {
    (0..map.source_dim())
        .filter_map(|i| {
            let value = coeffs_of(target, &map.image_of(i));
            (!value.0.is_empty()).then(|| RawImage {
                source: source[i].clone(),
                value,
            })
        })
        .collect()
}

fn raw_cochain(name: &str, c: &Cochain, g_names: &[String], h_names: &[String]) -> RawCochain {
    let values = c
        .tuples()
        .filter_map(|t| {
            let value = coeffs_of(h_names, c.value(&t));
            (!value.0.is_empty()).then(|| RawCochainValue {
                args: t.iter().map(|&i| g_names[i].clone()).collect(),
                value,
            })
        })
        .collect();
    RawCochain {
        name: name.to_string(),
        degree: c.degree(),
        values,
    }
}

fn raw_document(doc: &Document) -> RawDocument {
    let algebra = doc
        .algebra
        .as_ref()
        .or(doc.representation.as_ref().map(|r| r.algebra()))
        .or(doc.courant.as_ref().map(|c| c.base()));
    let representation = doc.representation.as_ref().map(|rep| RawRepresentation {
        basis: rep.basis_names().to_vec(),
        left_action: raw_action(rep, true),
        right_action: raw_action(rep, false),
    });
    let cochains = match (&doc.representation, algebra) {
        (Some(rep), Some(alg)) => doc
            .cochains
            .iter()
            .map(|c| raw_cochain(&c.name, &c.cochain, alg.basis_names(), rep.basis_names()))
            .collect(),
        _ => Vec::new(),
    };
    let courant = doc.courant.as_ref().map(|c| RawCourant {
        total: raw_algebra(c.total()),
        projection: raw_images(c.projection(), c.total().basis_names(), c.base().basis_names()),
    });
    let differential = match (&doc.differential, algebra) {
        (Some(d), Some(alg)) => Some(raw_images(d, alg.basis_names(), alg.basis_names())),
        _ => None,
    };
    RawDocument {
        field: Some(doc.field.to_string()),
        algebra: algebra.map(raw_algebra),
        representation,
        cochains,
        courant,
        differential,
    }
}

/// Canonical text: fixed key order, entries in basis order, zero entries
/// dropped, scalars in lowest terms.
pub fn serialize_document(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(&raw_document(doc)).expect("documents always serialize");
    text.push('\n');
    text
}

/// The canonical document as a JSON value, for embedding in reports.
pub fn document_value(doc: &Document) -> serde_json::Value {
    serde_json::to_value(raw_document(doc)).expect("documents always serialize")
}

/// A vector as a sparse `name → scalar` map.
pub fn vector_value(names: &[String], v: &[Scalar]) -> serde_json::Value {
    serde_json::to_value(coeffs_of(names, v)).expect("coefficients always serialize")
}

/// A linear map as sparse `{source, value}` image records.
pub fn map_value(map: &LinearMap, source: &[String], target: &[String]) -> serde_json::Value {
    serde_json::to_value(raw_images(map, source, target)).expect("images always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const AFF1: &str = r#"{
        "field": "Q",
        "algebra": {
            "basis": ["e1", "e2"],
            "brackets": [
                {"left": "e1", "right": "e2", "value": {"e2": "1"}},
                {"left": "e2", "right": "e1", "value": {"e2": "-1"}}
            ]
        }
    }"#;

    #[test]
    fn reads_aff1() {
        let doc = parse_document(AFF1).unwrap();
        assert_eq!(doc.algebra.unwrap(), catalog::aff1(FieldSpec::Rationals));
    }

    #[test]
    fn bad_scalar() {
        let text = AFF1.replace("\"-1\"", "\"1/0\"");
        assert!(matches!(parse_document(&text), Err(DocumentError::BadScalar { .. })));
    }

    #[test]
    fn unknown_basis_name() {
        let text = AFF1.replace("{\"e2\": \"-1\"}", "{\"e3\": \"-1\"}");
        match parse_document(&text) {
            Err(DocumentError::UnknownBasisName { name, location }) => {
                assert_eq!(name, "e3");
                assert_eq!(location, "algebra.brackets[1].value.e3");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_pair() {
        let text = AFF1.replace(
            "\"left\": \"e2\", \"right\": \"e1\"",
            "\"left\": \"e1\", \"right\": \"e2\"",
        );
        assert!(matches!(
            parse_document(&text),
            Err(DocumentError::DuplicateEntry { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_document("{\n  \"field\": \"Q\",\n  \"algebra\": [\n}") {
            Err(DocumentError::Syntax { line, .. }) => assert!(line >= 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_document(r#"{"field": "Q", "extra": 1}"#),
            Err(DocumentError::Syntax { .. })
        ));
    }

    #[test]
    fn field_override() {
        let text = r#"{"algebra": {"basis": ["x"]}}"#;
        assert!(parse_document(text).is_err());
        let doc = parse_document_with_field(text, Some(FieldSpec::PrimeField(5))).unwrap();
        assert_eq!(doc.field, FieldSpec::PrimeField(5));
        assert!(parse_document_with_field(AFF1, Some(FieldSpec::PrimeField(5))).is_err());
    }

    #[test]
    fn canonicalization() {
        let text = r#"{"field": "Q", "algebra": {"basis": ["a", "b"], "brackets": [
            {"left": "b", "right": "a", "value": {"a": "2/4", "b": "0"}},
            {"left": "a", "right": "a", "value": {"b": "0"}}]}}"#;
        let doc = parse_document(text).unwrap();
        let out = serialize_document(&doc);
        assert!(out.contains("\"1/2\""));
        assert!(!out.contains("\"0\""));
        assert_eq!(parse_document(&out).unwrap(), doc);
        assert_eq!(serialize_document(&parse_document(&out).unwrap()), out);
    }

    #[test]
    fn catalog_round_trips() {
        for entry in catalog::catalog() {
            let text = serialize_document(&entry.document);
            let back = parse_document(&text).unwrap();
            assert_eq!(back, entry.document, "{}", entry.name);
            assert_eq!(serialize_document(&back), text);
        }
    }
}
