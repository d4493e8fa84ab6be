//! The `courant` command line.
//!
//! Every command reads documents in the format of [`crate::document`] and
//! prints a JSON report on standard output. Exit codes: 0 for success or an
//! affirmative verdict, 1 for a negative verdict (a failed check, a
//! non-isomorphism, a non-cocycle), 2 for malformed input or usage errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraPresentation, DifferentialLieAlgebra, Representation};
use crate::catalog;
use crate::cohomology::{Cochain, CochainComplex, CohomologyReport, DEFAULT_MAX_DEGREE};
use crate::courant::{
    are_isomorphic, characteristic_class, Classification, CourantAlgebra, ExactCourantPresentation, IsomorphismOutcome,
    NonIsomorphism,
};
use crate::document::{
    document_value, map_value, parse_document_with_field, serialize_document, vector_value, Document,
};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::{Error, Witness};

#[derive(Debug, Parser)]
#[command(name = "courant", version, about = "Leibniz cohomology and exact Courant algebras")]
struct Cli {
    /// Field for documents that do not declare one (`Q` or `Fp:p`)
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every section of a document
    Validate { file: PathBuf },
    /// Compute HLⁿ of the document's representation
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Build an exact Courant algebra from a module or a 2-cocycle
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        file: PathBuf,
        /// Name of the 2-cochain to twist by (defaults to the only one)
        #[arg(long)]
        cochain: Option<String>,
    },
    /// Read off the induced representation and cocycle of a Courant algebra
    Extract { file: PathBuf },
    /// Locate a Courant algebra's cocycle class in HL²
    Classify { file: PathBuf },
    /// Decide whether two Courant algebras are isomorphic
    Iso { first: PathBuf, second: PathBuf },
    /// Describe the automorphisms of a Courant algebra
    Aut { file: PathBuf },
    /// Classify a Leibniz algebra over its Lie quotient
    Characteristic { file: PathBuf },
    /// Browse the built-in examples
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    Hemisemidirect,
    FromCocycle,
}

#[derive(Debug, Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Math(e)
    }
}

struct Report {
    affirmative: bool,
    body: Value,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report {
            affirmative: true,
            body,
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => CommandOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli) {
        Ok(Output::Text(text)) => CommandOutput {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Ok(Output::Report(report)) => {
            let mut body = Map::new();
            body.insert("command".into(), json!(name));
            if let Value::Object(fields) = report.body {
                body.extend(fields);
            }
            CommandOutput {
                code: if report.affirmative { 0 } else { 1 },
                stdout: render(&Value::Object(body)),
                stderr: String::new(),
            }
        }
        Err(Failure::Input(msg)) => CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Math(e)) if e.is_negative_verdict() => CommandOutput {
            code: 1,
            stdout: render(&json!({"command": name, "verdict": "negative", "error": error_value(&e)})),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Math(e)) => CommandOutput {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

enum Output {
    Text(String),
    Report(Report),
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Cohomology { .. } => "cohomology",
        Command::Construct { .. } => "construct",
        Command::Extract { .. } => "extract",
        Command::Classify { .. } => "classify",
        Command::Iso { .. } => "iso",
        Command::Aut { .. } => "aut",
        Command::Characteristic { .. } => "characteristic",
        Command::Catalog { .. } => "catalog",
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialize");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let load = |path: &Path| load(path, cli.field);
    let report = match &cli.command {
        Command::Validate { file } => validate(&load(file)?)?,
        Command::Cohomology {
            file,
            degree,
            max_degree,
        } => cohomology(&load(file)?, *degree, *max_degree)?,
        Command::Construct { kind, file, cochain } => construct(*kind, &load(file)?, cochain.as_deref())?,
        Command::Extract { file } => extract(courant_of(&load(file)?)?)?,
        Command::Classify { file } => classify(courant_of(&load(file)?)?)?,
        Command::Iso { first, second } => {
            let (a, b) = (load(first)?, load(second)?);
            iso(courant_of(&a)?, courant_of(&b)?)?
        }
        Command::Aut { file } => aut(courant_of(&load(file)?)?)?,
        Command::Characteristic { file } => characteristic(&load(file)?)?,
        Command::Catalog { action } => return catalog_command(action),
    };
    Ok(Output::Report(report))
}

fn load(path: &Path, field: Option<FieldSpec>) -> Result<Document, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_document_with_field(&text, field).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn require<'a, T>(section: &'a Option<T>, name: &str) -> Result<&'a T, Failure> {
    section
        .as_ref()
        .ok_or_else(|| Failure::Input(format!("document has no `{name}` section")))
}

fn courant_of(doc: &Document) -> Result<&CourantAlgebra, Failure> {
    require(&doc.courant, "courant")
}

fn strings(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| json!(s.to_string())).collect())
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| strings(r)).collect())
}

fn witness_value(w: &Witness) -> Value {
    json!({"indices": w.indices, "residual": strings(&w.residual)})
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::BadField(_) => "bad_field",
        Error::FieldMismatch => "field_mismatch",
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::DegreeTooLarge { .. } => "degree_too_large",
        Error::InvalidDegree(_) => "invalid_degree",
        Error::DuplicateBasisName(_) => "duplicate_basis_name",
        Error::NotLeibniz(_) => "not_leibniz",
        Error::NotLie => "not_lie",
        Error::InvalidRepresentation(_) => "invalid_representation",
        Error::NotALieModule(_) => "not_a_lie_module",
        Error::NotADifferential(_) => "not_a_differential",
        Error::NotAnIdeal(_) => "not_an_ideal",
        Error::NotACocycle(_) => "not_a_cocycle",
        Error::NotSurjective => "not_surjective",
        Error::NotExact(_) => "not_exact",
        Error::NotCourant(_) => "not_courant",
        Error::InvalidSection => "invalid_section",
        Error::ValueOutsideKernel(_) => "value_outside_kernel",
        Error::BaseMismatch(_) => "base_mismatch",
        Error::NotAMorphism(_) => "not_a_morphism",
        Error::NotAnAutomorphism(_) => "not_an_automorphism",
    }
}

fn error_value(e: &Error) -> Value {
    let mut v = json!({"kind": error_kind(e), "message": e.to_string()});
    let witness = match e {
        Error::NotLeibniz(w)
        | Error::NotADifferential(w)
        | Error::NotAnIdeal(w)
        | Error::NotACocycle(w)
        | Error::ValueOutsideKernel(w) => Some(w),
        _ => None,
    };
    if let Some(w) = witness {
        v["witness"] = witness_value(w);
    }
    v
}

fn names(ns: &[String], idx: &[usize]) -> Value {
    Value::Array(idx.iter().map(|&i| json!(ns[i])).collect())
}

fn algebra_check(alg: &AlgebraPresentation) -> (bool, Value) {
    let r = alg.check();
    let ns = alg.basis_names();
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|w| json!({"triple": names(ns, &w.indices), "residual": vector_value(ns, &w.residual)}))
        .collect();
    let body = json!({
        "leibniz_left": r.leibniz_left,
        "antisymmetric": r.antisymmetric,
        "lie": r.lie,
        "violations": violations,
    });
    (r.leibniz_left, body)
}

fn validate(doc: &Document) -> Result<Report, Failure> {
    let mut ok = true;
    let mut checks = Map::new();
    if let Some(alg) = &doc.algebra {
        let (valid, body) = algebra_check(alg);
        ok &= valid;
        checks.insert("algebra".into(), body);
    }
    let mut rep_valid = false;
    if let Some(rep) = &doc.representation {
        let r = rep.check();
        rep_valid = r.valid;
        ok &= r.valid;
        let g = rep.algebra().basis_names();
        let violations: Vec<Value> = r
            .violations
            .iter()
            .map(|v| {
                json!({
                    "axiom": v.axiom.label(),
                    "pair": names(g, &[v.pair.0, v.pair.1]),
                    "residual": matrix_value(&v.residual),
                })
            })
            .collect();
        checks.insert(
            "representation".into(),
            json!({"valid": r.valid, "violations": violations}),
        );
    }
    if !doc.cochains.is_empty() {
        let mut entries = Vec::new();
        for c in &doc.cochains {
            let mut entry = json!({"name": c.name, "degree": c.cochain.degree()});
            if let (true, Some(rep)) = (rep_valid, &doc.representation) {
                match CochainComplex::new(rep)?.require_cocycle(&c.cochain) {
                    Ok(()) => entry["cocycle"] = json!(true),
                    Err(Error::NotACocycle(w)) => {
                        entry["cocycle"] = json!(false);
                        entry["witness"] = json!({
                            "args": names(rep.algebra().basis_names(), &w.indices),
                            "residual": vector_value(rep.basis_names(), &w.residual),
                        });
                    }
                    Err(e) => entry["cocycle_error"] = json!(e.to_string()),
                }
            }
            entries.push(entry);
        }
        checks.insert("cochains".into(), Value::Array(entries));
    }
    if let Some(c) = &doc.courant {
        let r = c.check();
        ok &= r.valid;
        let total = c.total().basis_names();
        let violations: Vec<Value> = r
            .projection_violations
            .iter()
            .map(|w| json!({"pair": names(total, &w.indices), "residual": vector_value(c.base().basis_names(), &w.residual)}))
            .collect();
        let (_, total_body) = algebra_check(c.total());
        let mut body = json!({
            "valid": r.valid,
            "total": total_body,
            "base_lie": r.base.lie,
            "projection_violations": violations,
            "exact": r.valid && c.is_exact(),
        });
        if r.valid {
            if let Some(why) = c.exactness_failure() {
                body["exactness_failure"] = json!(why);
            }
        }
        checks.insert("courant".into(), body);
    }
    if let (Some(d), Some(alg)) = (&doc.differential, &doc.algebra) {
        let body = match DifferentialLieAlgebra::new(alg.clone(), d.clone()) {
            Ok(_) => json!({"valid": true}),
            Err(e) if e.is_negative_verdict() => {
                ok = false;
                json!({"valid": false, "error": error_value(&e)})
            }
            Err(e) => return Err(e.into()),
        };
        checks.insert("differential".into(), body);
    }
    Ok(Report {
        affirmative: ok,
        body: json!({"valid": ok, "checks": checks}),
    })
}

fn cohomology_body(report: &CohomologyReport, rep: &Representation, prefix: &str) -> Value {
    let mut doc = Document::with_representation(rep.clone());
    for (k, r) in report.representatives.iter().enumerate() {
        doc.push_cochain(format!("{prefix}{}", k + 1), r.clone());
    }
    json!({
        "degree": report.degree,
        "dim_cochains": report.dim_cochains,
        "dim_cocycles": report.dim_cocycles,
        "dim_coboundaries": report.dim_coboundaries,
        "dim_cohomology": report.dim_cohomology,
        "representatives": document_value(&doc),
    })
}

fn cohomology(doc: &Document, degree: usize, max_degree: usize) -> Result<Report, Failure> {
    let rep = require(&doc.representation, "representation")?;
    let report = CochainComplex::new(rep)?
        .with_max_degree(max_degree)
        .cohomology(degree)?;
    Ok(Report::ok(cohomology_body(&report, rep, "class")))
}

fn pick_cochain<'a>(doc: &'a Document, name: Option<&str>) -> Result<&'a Cochain, Failure> {
    if let Some(name) = name {
        return doc
            .cochain(name)
            .ok_or_else(|| Failure::Input(format!("document has no cochain named `{name}`")));
    }
    let mut twos = doc.cochains.iter().filter(|c| c.cochain.degree() == 2);
    match (twos.next(), twos.next()) {
        (Some(c), None) => Ok(&c.cochain),
        (None, _) => Err(Failure::Input("document has no 2-cochain".into())),
        (Some(_), Some(_)) => Err(Failure::Input("several 2-cochains; choose one with --cochain".into())),
    }
}

fn construct(kind: ConstructKind, doc: &Document, cochain: Option<&str>) -> Result<Report, Failure> {
    let alg = require(&doc.algebra, "algebra")?;
    let rep = require(&doc.representation, "representation")?;
    let (pres, kind) = match kind {
        ConstructKind::Hemisemidirect => {
            if !rep.right_actions().iter().all(Matrix::is_zero) {
                return Err(Failure::Input(
                    "the hemisemidirect construction takes a left module; right_action must be empty".into(),
                ));
            }
            let pres =
                ExactCourantPresentation::hemisemidirect(alg, rep.basis_names().to_vec(), rep.left_actions().to_vec())?;
            (pres, "hemisemidirect")
        }
        ConstructKind::FromCocycle => {
            let f = pick_cochain(doc, cochain)?;
            (ExactCourantPresentation::from_cocycle(alg, rep, f)?, "from-cocycle")
        }
    };
    let courant = pres.to_courant();
    Ok(Report::ok(json!({
        "kind": kind,
        "document": document_value(&Document::with_courant(courant)),
    })))
}

fn section_value(c: &CourantAlgebra, cl: &Classification) -> Value {
    map_value(cl.section.map(), c.base().basis_names(), c.total().basis_names())
}

fn extract(c: &CourantAlgebra) -> Result<Report, Failure> {
    let q = c.choose_section()?;
    let pres = c.normalize(&q)?;
    let mut doc = Document::with_representation(pres.coefficients().clone());
    doc.push_cochain("phi", pres.twisting_cocycle().clone());
    Ok(Report::ok(json!({
        "section": map_value(q.map(), c.base().basis_names(), c.total().basis_names()),
        "document": document_value(&doc),
    })))
}

fn classification_body(c: &CourantAlgebra, cl: &Classification) -> Value {
    let mut doc = Document::with_representation(cl.representation.clone());
    doc.push_cochain("phi", cl.cocycle.clone());
    json!({
        "section": section_value(c, cl),
        "document": document_value(&doc),
        "cohomology": cohomology_body(&cl.report, &cl.representation, "class"),
        "coordinates": strings(&cl.coordinates),
    })
}

fn classify(c: &CourantAlgebra) -> Result<Report, Failure> {
    let cl = c.classify()?;
    Ok(Report::ok(classification_body(c, &cl)))
}

fn iso(c1: &CourantAlgebra, c2: &CourantAlgebra) -> Result<Report, Failure> {
    match are_isomorphic(c1, c2)? {
        IsomorphismOutcome::Isomorphic { morphism, shift } => {
            let mut doc = Document::with_representation(c1.induced_actions()?);
            doc.push_cochain("psi", shift);
            Ok(Report::ok(json!({
                "isomorphic": true,
                "identity": morphism.is_identity(),
                "morphism": map_value(morphism.map(), c1.total().basis_names(), c2.total().basis_names()),
                "shift": document_value(&doc),
            })))
        }
        IsomorphismOutcome::NotIsomorphic(why) => {
            let reason = match why {
                NonIsomorphism::DifferentReps => "the induced representations differ",
                NonIsomorphism::DistinctClasses => "the cocycles lie in different cohomology classes",
            };
            Ok(Report {
                affirmative: false,
                body: json!({"isomorphic": false, "reason": reason}),
            })
        }
    }
}

fn aut(c: &CourantAlgebra) -> Result<Report, Failure> {
    let space = c.automorphism_space()?;
    let mut doc = Document::with_representation(c.induced_actions()?);
    for (k, psi) in space.cocycle_basis.iter().enumerate() {
        doc.push_cochain(format!("psi{}", k + 1), psi.clone());
    }
    let total = c.total().basis_names();
    let automorphisms: Vec<Value> = space
        .automorphisms
        .iter()
        .map(|f| map_value(f.map(), total, total))
        .collect();
    Ok(Report::ok(json!({
        "dim_cocycles": space.dim_cocycles,
        "dim_coboundaries": space.dim_coboundaries,
        "dim_cohomology": space.dim_cohomology,
        "coboundaries_act_trivially": space.coboundaries_act_trivially,
        "cocycle_basis": document_value(&doc),
        "automorphisms": automorphisms,
    })))
}

fn characteristic(doc: &Document) -> Result<Report, Failure> {
    let alg = require(&doc.algebra, "algebra")?;
    let alg = match &doc.differential {
        Some(d) => DifferentialLieAlgebra::new(alg.clone(), d.clone())?.derived_bracket(),
        None => alg.clone(),
    };
    let cc = characteristic_class(&alg)?;
    let ns = alg.basis_names();
    let kernel: Vec<Value> = cc.kernel.basis().iter().map(|b| vector_value(ns, b)).collect();
    Ok(Report::ok(json!({
        "algebra": document_value(&Document::with_algebra(alg.clone())),
        "kernel": kernel,
        "quotient": document_value(&Document::with_algebra(cc.quotient.clone())),
        "projection": map_value(cc.courant.projection(), ns, cc.quotient.basis_names()),
        "classification": classification_body(&cc.courant, &cc.classification),
    })))
}

fn catalog_command(action: &CatalogAction) -> Result<Output, Failure> {
    match action {
        CatalogAction::List => {
            let entries: Vec<Value> = catalog::catalog()
                .iter()
                .map(|e| json!({"name": e.name, "description": e.description}))
                .collect();
            Ok(Output::Report(Report::ok(json!({"entries": entries}))))
        }
        CatalogAction::Show { name } => catalog::lookup(name)
            .map(|e| Output::Text(serialize_document(&e.document)))
            .ok_or_else(|| Failure::Input(format!("no catalog entry named `{name}`"))),
    }
}
