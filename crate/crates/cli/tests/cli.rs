use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const T345: &str = "0,0 4,0 0,3";
const TACU: &str = "0,0 4,0 1,3";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orthocevia"))
        .args(args)
        .env_remove("ORTHOCEVIA_EPS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn pt(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

fn near(v: &Value, x: f64, y: f64, eps: f64) -> bool {
    let (a, b) = pt(v);
    (a - x).abs() <= eps && (b - y).abs() <= eps
}

#[test]
fn centers_of_t345() {
    let out = run(&["centers", "--triangle", T345]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    let pts = &doc["points"];
    assert!(near(&pts["incenter"], 1., 1., 1e-12));
    assert!(near(&pts["nagel"], 2., 1., 1e-12));
    assert!(near(&pts["bevan"], 3., 2., 1e-12));
    assert!(near(&pts["gergonne"], 8. / 11., 9. / 11., 1e-12));
    assert_eq!(doc["s"].as_f64(), Some(6.0));
    assert_eq!(pts.as_object().unwrap().len(), 8);
}

#[test]
fn numbers_carry_seventeen_digits() {
    let out = run(&["centers", "--triangle", T345]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0.72727272727272729"), "{text}");
    assert!(text.contains("6.0000000000000000"));
}

#[test]
fn equilateral_centers_coincide() {
    let h = 3f64.sqrt().to_string();
    let tri = format!("0,0 2,0 1,{h}");
    let doc = json(&run(&["centers", "--triangle", &tri]));
    let g = pt(&doc["points"]["centroid"]);
    for name in ["incenter", "circumcenter", "orthocenter"] {
        assert!(near(&doc["points"][name], g.0, g.1, 1e-12), "{name}");
    }
}

#[test]
fn degenerate_triangle_exits_3() {
    let out = run(&["centers", "--triangle", "0,0 1,1 2,2"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("2*area/max_side^2"));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&run(&["centers", "--triangle", "0,0 4,0"])), 2);
    assert_eq!(code(&run(&["centers", "--triangle", "0,0 4,zero 0,3"])), 2);
    assert_eq!(code(&run(&["centers"])), 2);
    assert_eq!(code(&run(&["nonsense"])), 2);
    assert_eq!(code(&run(&["check", "sixpoint", "--triangle", T345])), 2);
    assert_eq!(code(&run(&["check", "homology", "--triangle", T345])), 2);
    assert_eq!(code(&run(&["check", "sixpoint", "--triangle", T345, "--point", "P1=nowhere"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn theorem7_on_t345_incenter() {
    let out = run(&["check", "theorem7", "--triangle", T345, "--point", "P1=incenter"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["holds"], Value::Bool(true));
    assert!(near(&doc["result"]["f1"], 8. / 11., 9. / 11., 1e-12));
    assert!(near(&doc["result"]["f2"], 8. / 11., 9. / 11., 1e-12));
}

#[test]
fn sixpoint_on_tacu_circumcenter() {
    let out = run(&["check", "sixpoint", "--triangle", TACU, "--point", "P1=circumcenter"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert!(near(&doc["result"]["center"], 1.5, 1., 1e-12));
    assert!(doc["result"]["max_deviation"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn sixpoint_with_wrong_partner_fails() {
    let out = run(&["check", "sixpoint", "--triangle", TACU, "--point", "P1=circumcenter", "--point", "P2=1.2,1"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["holds"], Value::Bool(false));
}

#[test]
fn sixpoint_at_vertex_is_a_precondition_failure() {
    let out = run(&["check", "sixpoint", "--triangle", TACU, "--point", "P1=0,0"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn pairwise_relations() {
    assert_eq!(code(&run(&["check", "homology", "--triangle", T345, "--with", "contact"])), 0);
    assert_eq!(code(&run(&["check", "homology", "--triangle", T345, "--with", "extouch"])), 0);
    let pedal = ["check", "orthohomological", "--triangle", TACU, "--with", "pedal", "--point", "P1=circumcenter"];
    assert_eq!(code(&run(&pedal)), 0);
    let generic = [
        "check", "orthology", "--triangle", TACU, "--with", "points", "--point", "A1=0.3,-0.2", "--point",
        "B1=2,2.5", "--point", "C1=-1,1.4",
    ];
    assert_eq!(code(&run(&generic)), 1);
    // a vertex of TACU is on its circumcircle, so its pedal triangle is flat
    let flat = ["check", "orthology", "--triangle", TACU, "--with", "pedal", "--point", "P1=4,0"];
    assert_eq!(code(&run(&flat)), 4);
    let bilogical = ["check", "bilogical", "--triangle", TACU, "--with", "pedal", "--point", "P1=incenter"];
    assert_eq!(code(&run(&bilogical)), 0);
}

#[test]
fn terquem_on_tacu_medial() {
    let out = run(&["check", "terquem", "--triangle", TACU, "--with", "medial"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert!(near(&doc["result"]["f1"], 5. / 3., 1., 1e-9));
    assert!(near(&doc["result"]["f2"], 1., 1., 1e-9));
}

#[test]
fn centers_output_replays_as_scene() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("centers.json");
    let out = run(&["centers", "--triangle", TACU]);
    std::fs::write(&scene, &out.stdout).unwrap();
    let scene = scene.to_str().unwrap();
    let direct = run(&["check", "theorem7", "--triangle", TACU, "--point", "P1=circumcenter"]);
    let replayed = run(&["check", "theorem7", "--scene", scene, "--point", "P1=circumcenter"]);
    assert_eq!(code(&direct), 0);
    assert_eq!(direct.stdout, replayed.stdout);
}

#[test]
fn scene_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scene.json");
    std::fs::write(&path, r#"{"triangle": [[0,0],[4,0],[1,3]], "points": {"P1": [2, 1]}}"#).unwrap();
    let out = run(&["check", "sixpoint", "--scene", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    std::fs::write(&path, r#"{"triangle": [[0,0],[4,0]]}"#).unwrap();
    assert_eq!(code(&run(&["centers", "--scene", path.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["centers", "--scene", "/nonexistent/scene.json"])), 2);
}

#[test]
fn eps_from_environment() {
    let bin = env!("CARGO_BIN_EXE_orthocevia");
    let out = Command::new(bin)
        .args(["check", "sixpoint", "--triangle", TACU, "--point", "P1=circumcenter"])
        .env("ORTHOCEVIA_EPS", "1e-6")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["tolerance"]["rel_eps"].as_f64(), Some(1e-6));
    let out = Command::new(bin)
        .args(["centers", "--triangle", TACU])
        .env("ORTHOCEVIA_EPS", "tiny")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(bin)
        .args(["check", "sixpoint", "--triangle", TACU, "--point", "P1=circumcenter", "--eps", "1e-8"])
        .env("ORTHOCEVIA_EPS", "1e-6")
        .output()
        .unwrap();
    assert_eq!(json(&out)["tolerance"]["rel_eps"].as_f64(), Some(1e-8));
    assert_eq!(code(&run(&["centers", "--triangle", TACU, "--eps", "-1"])), 2);
}

#[test]
fn verify_steiner_acceptance_run() {
    let out = run(&["verify", "steiner", "--trials", "10000", "--seed", "42"]);
    assert_eq!(code(&out), 0);
    let doc = json(&out);
    assert_eq!(doc["failures"].as_array().unwrap().len(), 0);
    assert!(doc["max_residuals"]["steiner_relative"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn verify_counterexample_and_unknown() {
    assert_eq!(code(&run(&["verify", "counterexample"])), 0);
    assert_eq!(code(&run(&["verify", "bogus"])), 2);
    assert_eq!(code(&run(&["verify", "steiner", "--trials", "0"])), 2);
}

#[test]
fn verify_report_file_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let out = run(&["verify", "six_point", "--trials", "200", "--seed", "5", "--json", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        assert!(out.stdout.is_empty());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let doc: Value = serde_json::from_slice(&ta).unwrap();
    for key in ["suite", "config", "trials", "failures", "max_residuals"] {
        assert!(doc.get(key).is_some(), "{key}");
    }
    assert_eq!(doc["config"]["seed"].as_u64(), Some(5));
}

#[test]
fn verify_failure_exits_1() {
    let out = run(&["verify", "steiner", "--trials", "5", "--eps", "1e-30"]);
    assert_eq!(code(&out), 1);
    let doc = json(&out);
    let failure = &doc["failures"][0];
    assert_eq!(failure["inputs"]["triangle"].as_array().unwrap().len(), 3);
}

fn figure(args: &[&str], dir: &Path, name: &str) -> (i32, String) {
    let path = dir.join(name);
    let mut all = vec!["figure"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = run(&all);
    (code(&out), std::fs::read_to_string(&path).unwrap_or_default())
}

fn elements<'a>(doc: &'a roxmltree::Document, tag: &str) -> Vec<roxmltree::Node<'a, 'a>> {
    doc.descendants().filter(|n| n.has_tag_name(tag)).collect()
}

fn labels(doc: &roxmltree::Document) -> Vec<String> {
    elements(doc, "text").iter().filter_map(|n| n.text()).map(|s| s.trim().to_owned()).collect()
}

#[test]
fn sixpoint_figure_structure() {
    let dir = tempfile::tempdir().unwrap();
    let (c, svg) = figure(&["fig7_sixpoint", "--triangle", TACU, "--point", "P1=circumcenter"], dir.path(), "f7.svg");
    assert_eq!(c, 0);
    let doc = roxmltree::Document::parse(&svg).expect("well-formed XML");
    let root = doc.root_element();
    assert_eq!(root.tag_name().name(), "svg");
    assert_eq!(root.attribute("version"), Some("1.1"));
    assert!(root.attribute("viewBox").is_some());
    assert_eq!(elements(&doc, "circle").len(), 1);
    let l = labels(&doc);
    for foot in ["A1", "A2", "B1", "B2", "C1", "C2"] {
        assert!(l.iter().any(|x| x == foot), "{foot} in {l:?}");
    }
}

#[test]
fn excircle_figure_structure() {
    let dir = tempfile::tempdir().unwrap();
    let (c, svg) = figure(&["fig10_excircle", "--triangle", T345], dir.path(), "f10.svg");
    assert_eq!(c, 0);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(elements(&doc, "circle").len(), 2);
    let l = labels(&doc);
    for name in ["D", "Da", "I", "Ia"] {
        assert!(l.iter().any(|x| x == name), "{name}");
    }
}

#[test]
fn every_figure_renders_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["fig3_contact", "fig5_orthology", "fig7_sixpoint", "fig9_terquem", "fig10_excircle"] {
        let (c1, a) = figure(&[id], dir.path(), "a.svg");
        let (c2, b) = figure(&[id, "--size", "800"], dir.path(), "b.svg");
        assert_eq!((c1, c2), (0, 0), "{id}");
        assert_eq!(a, b, "{id}");
        let doc = roxmltree::Document::parse(&a).unwrap();
        assert!(doc.root_element().attribute("viewBox").is_some());
    }
}

#[test]
fn figure_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(figure(&["fig99"], dir.path(), "x.svg").0, 2);
    assert_eq!(figure(&["fig3_contact", "--triangle", "0,0 1,0 2,0"], dir.path(), "x.svg").0, 3);
}
