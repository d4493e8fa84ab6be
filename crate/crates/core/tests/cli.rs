use std::path::{Path, PathBuf};

use courant_core::catalog;
use courant_core::cli::{run_command, CommandOutput};
use courant_core::cohomology::CochainComplex;
use courant_core::document::{parse_document, serialize_document, Document};
use courant_core::linalg::FieldSpec;
use serde_json::{json, Value};
use tempfile::TempDir;

fn run(args: &[&str]) -> CommandOutput {
    run_command(std::iter::once("courant").chain(args.iter().copied()))
}

fn report(out: &CommandOutput) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}\n{}", out.stdout))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn catalog_file(dir: &TempDir, name: &str) -> PathBuf {
    write(
        dir,
        &format!("{name}.json"),
        &serialize_document(&catalog::lookup(name).unwrap().document),
    )
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn golden_dimensions_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let golden: Value = serde_json::from_str(include_str!("golden/hl_dims.json")).unwrap();
    for entry in golden.as_array().unwrap() {
        let name = entry["representation"].as_str().unwrap();
        let file = catalog_file(&dir, name);
        for d in entry["degrees"].as_array().unwrap() {
            let degree = d["degree"].to_string();
            let out = run(&["cohomology", s(&file), "--degree", &degree]);
            assert_eq!(out.code, 0, "{name}: {}", out.stderr);
            let r = report(&out);
            assert_eq!(r["dim_cocycles"], d["cocycles"], "{name} degree {degree}");
            assert_eq!(r["dim_coboundaries"], d["coboundaries"], "{name} degree {degree}");
            assert_eq!(r["dim_cohomology"], d["cohomology"], "{name} degree {degree}");
        }
    }
}

#[test]
fn cohomology_report_lists_representatives() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(&dir, "aff1-trivial");
    let out = run(&["cohomology", s(&file), "--degree", "1"]);
    assert_eq!(out.code, 0);
    let r = report(&out);
    assert_eq!(r["dim_cohomology"], 1);
    let doc = parse_document(&r["representatives"].to_string()).unwrap();
    assert_eq!(doc.cochains.len(), 1);
    let rep = doc.representation.unwrap();
    assert!(CochainComplex::new(&rep)
        .unwrap()
        .is_cocycle(&doc.cochains[0].cochain)
        .unwrap());
}

#[test]
fn iso_of_a_document_with_itself_is_the_identity() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(&dir, "sl2-hemisemidirect-courant");
    let out = run(&["iso", s(&file), s(&file)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r = report(&out);
    assert_eq!(r["isomorphic"], true);
    assert_eq!(r["identity"], true);
}

#[test]
fn validate_lists_violating_triples() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "broken.json",
        r#"{"field": "Q", "algebra": {"basis": ["e"], "brackets": [{"left": "e", "right": "e", "value": {"e": "1"}}]}}"#,
    );
    let out = run(&["validate", s(&file)]);
    assert_eq!(out.code, 1);
    let r = report(&out);
    assert_eq!(r["valid"], false);
    assert_eq!(
        r["checks"]["algebra"]["violations"][0],
        json!({"triple": ["e", "e", "e"], "residual": {"e": "-1"}})
    );
}

#[test]
fn validate_reports_cocycle_witnesses() {
    let dir = TempDir::new().unwrap();
    let g = catalog::aff1(FieldSpec::Rationals);
    let rep = catalog::trivial_rep(&g, 1);
    let mut doc = Document::with_representation(rep.clone());
    let mut f = courant_core::cohomology::Cochain::zero(&rep, 1);
    f.set(&[1], vec![FieldSpec::Rationals.one()]).unwrap();
    doc.push_cochain("dual_e2", f);
    let file = write(&dir, "c.json", &serialize_document(&doc));
    let out = run(&["validate", s(&file)]);
    // cochains are reported but do not affect the verdict
    assert_eq!(out.code, 0);
    let c = &report(&out)["checks"]["cochains"][0];
    assert_eq!(c["cocycle"], false);
    assert_eq!(c["witness"]["args"], json!(["e1", "e2"]));
}

#[test]
fn construct_then_classify() {
    let dir = TempDir::new().unwrap();
    let g = catalog::aff1(FieldSpec::Rationals);
    let rep = catalog::trivial_rep(&g, 1);
    let generator = CochainComplex::new(&rep)
        .unwrap()
        .cohomology(2)
        .unwrap()
        .representatives[0]
        .clone();
    let mut doc = Document::with_representation(rep);
    doc.push_cochain("f", generator.clone());
    let file = write(&dir, "f.json", &serialize_document(&doc));

    let out = run(&["construct", "from-cocycle", s(&file)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let built = write(&dir, "built.json", &report(&out)["document"].to_string());
    assert!(parse_document(&std::fs::read_to_string(&built).unwrap())
        .unwrap()
        .courant
        .unwrap()
        .is_exact());

    let r = report(&run(&["classify", s(&built)]));
    assert_eq!(r["coordinates"], json!(["1"]));
    assert_eq!(r["cohomology"]["dim_cohomology"], 1);

    let r = report(&run(&["extract", s(&built)]));
    let back = parse_document(&r["document"].to_string()).unwrap();
    assert_eq!(back.cochain("phi").unwrap().flat(), generator.flat());

    let hemi = catalog_file(&dir, "aff1-hemisemidirect");
    let out = run(&["construct", "hemisemidirect", s(&hemi)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let built = write(&dir, "hemi.json", &report(&out)["document"].to_string());
    let r = report(&run(&["classify", s(&built)]));
    assert!(r["coordinates"].as_array().unwrap().iter().all(|c| c == "0"));
}

#[test]
fn aut_reports_dimensions_and_maps() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(&dir, "abelian2-hemisemidirect-courant");
    let out = run(&["aut", s(&file)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r = report(&out);
    assert_eq!(r["dim_cocycles"], 4);
    assert_eq!(r["dim_coboundaries"], 0);
    assert_eq!(r["coboundaries_act_trivially"], true);
    assert_eq!(r["automorphisms"].as_array().unwrap().len(), 4);
}

#[test]
fn characteristic_uses_the_differential() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(&dir, "heisenberg_dla");
    let out = run(&["characteristic", s(&file)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let r = report(&out);
    assert_eq!(r["kernel"], json!([{"z": "1"}]));
    let quotient = parse_document(&r["quotient"].to_string()).unwrap();
    assert!(quotient.algebra.unwrap().check().lie);
}

#[test]
fn diagnostics_name_the_location() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "bad.json", "{\n  \"field\": \"Q\",\n  \"algebra\": {\"basis\": [\"e1\"], \"brackets\": [\n    {\"left\": \"e1\", \"right\": \"e9\", \"value\": {}}]}}");
    let out = run(&["validate", s(&file)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("algebra.brackets[0].right"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    let file = write(&dir, "syntax.json", "{\n  \"field\": \"Q\",\n  \"algebra\": {\n");
    let out = run(&["validate", s(&file)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);
}

#[test]
fn negative_verdicts_carry_witnesses() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "broken.json",
        r#"{"field": "Q", "algebra": {"basis": ["e"], "brackets": [{"left": "e", "right": "e", "value": {"e": "1"}}]}}"#,
    );
    let out = run(&["characteristic", s(&file)]);
    assert_eq!(out.code, 1);
    let r = report(&out);
    assert_eq!(r["error"]["kind"], "not_leibniz");
    assert_eq!(r["error"]["witness"], json!({"indices": [0, 0, 0], "residual": ["-1"]}));
}

#[test]
fn field_override_applies_to_fieldless_documents() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "f.json",
        r#"{"algebra": {"basis": ["x", "y"], "brackets": [{"left": "x", "right": "y", "value": {"y": "6"}}]}}"#,
    );
    let out = run(&["--field", "Fp:5", "validate", s(&file)]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    // [y, x] is absent, so antisymmetry fails
    assert_eq!(report(&out)["checks"]["algebra"]["antisymmetric"], false);
    assert_eq!(run(&["validate", s(&file)]).code, 2);
    assert_eq!(run(&["--field", "R", "validate", s(&file)]).code, 2);
}

#[test]
fn catalog_commands() {
    let out = run(&["catalog", "list"]);
    assert_eq!(out.code, 0);
    let names: Vec<String> = report(&out)["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap().to_string())
        .collect();
    for wanted in [
        "abelian1",
        "abelian2",
        "abelian3",
        "aff1",
        "heisenberg3",
        "sl2",
        "leibniz2",
        "heisenberg_dla",
    ] {
        assert!(names.iter().any(|n| n == wanted), "{wanted}");
    }
    let out = run(&["catalog", "show", "leibniz2"]);
    assert_eq!(
        out.stdout,
        serialize_document(&catalog::lookup("leibniz2").unwrap().document)
    );
    assert_eq!(run(&["catalog", "show", "nope"]).code, 2);
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = catalog_file(&dir, "heisenberg3-hemisemidirect-courant");
    for cmd in ["classify", "aut", "extract"] {
        let a = run(&[cmd, s(&file)]);
        let b = run(&[cmd, s(&file)]);
        assert_eq!(a, b);
        assert_eq!(a.code, 0, "{cmd}: {}", a.stderr);
    }
}

#[test]
fn help_and_usage() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("cohomology"));
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["cohomology", "x.json"]).code, 2);
}
