use std::path::PathBuf;
use std::process::{Command, Output};

use grhopf::verify::Report;
use grhopf::{Element, ElementJson};

const FUNMATH_KEY: &str = "f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,u>a";

fn graph_file(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "graphs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn grhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grhopf"))
        .args(args)
        .env_remove("GRHOPF_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_json(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("grhopf-cli-{tag}-{}.json", std::process::id()))
}

#[test]
fn antipode_all_methods_agree_on_funmath() {
    let g = graph_file("funmath.g");
    let out = grhopf(&["antipode", "--monoid", "AO", "--graph", &g, "--key", FUNMATH_KEY, "--method", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let reversed = "-q^10·[a>m,a>u,h>m,h>t,n>a,n>f,n>u,t>a,u>f,u>m]";
    for method in ["takeuchi", "milnor-moore-left", "milnor-moore-right", "closed"] {
        assert!(text.contains(&format!("{method}: {reversed}")), "{text}");
    }
    assert!(text.trim_end().ends_with("AGREE"));
}

#[test]
fn antipode_json_round_trips_through_the_element_parser() {
    let g = graph_file("funmath.g");
    let path = temp_json("antipode");
    let out = grhopf(&[
        "antipode", "--monoid", "AO", "--graph", &g, "--key", FUNMATH_KEY, "--json", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let j: ElementJson = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let x = Element::from_json(&j).unwrap();
    assert_eq!(format!("{x}\n"), stdout(&out));
    std::fs::remove_file(path).ok();
}

#[test]
fn enumerate_flats_of_triangle() {
    let out = grhopf(&["enumerate", "--monoid", "FL_M", "--graph", &graph_file("k3.g")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("5 basis keys of FL_M"), "{text}");
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn coproduct_and_morphism_examples() {
    let g = graph_file("funmath.g");
    let out = grhopf(&["coproduct", "-m", "AO", "-g", &g, "--split", "f,u,n|m,a,t,h", "-k", FUNMATH_KEY]);
    assert_eq!(stdout(&out).trim(), "(q^2)·[f>n,f>u,u>n]⊗[a>t,m>a,m>h,t>h]");

    let out = grhopf(&["morphism", "--name", "phi_Pi_FL", "-g", &g, "-k", "u,n/f,m,a,t/h"]);
    assert_eq!(stdout(&out).trim(), "[am,at,nu]");

    let out = grhopf(&["basis-change", "--from", "Pi_m", "--to", "Pi_p", "-g", "a,b|a-b", "-k", "a,b"]);
    assert_eq!(stdout(&out).trim(), "[a,b] + [a/b]");
}

#[test]
fn verify_is_deterministic_and_exits_zero() {
    let path = temp_json("verify");
    let args = ["verify", "--suite", "bimonoid", "--nmax", "3", "--monoid", "all"];
    let a = grhopf(&args);
    let b = grhopf(&[&args[..], &["--jobs", "1", "--json", path.to_str().unwrap()]].concat());
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.corpus.graphs, 12);
    assert!(report.ok());
    std::fs::remove_file(path).ok();
}

#[test]
fn informational_counterexample_replays_standalone() {
    let path = temp_json("replay");
    let out = grhopf(&[
        "verify", "--suite", "commutativity", "--nmax", "2", "--monoid", "L", "--json", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(path).ok();
    let rec = report.records.iter().find(|r| r.check == "commutative" && !r.pass).unwrap();
    let ce = rec.counterexample.as_ref().unwrap();
    // inputs: `split=S|T x=.. y=..`
    let fields: Vec<&str> = ce.inputs.split(' ').collect();
    let split = fields[0].strip_prefix("split=").unwrap();
    let x = fields[1].strip_prefix("x=").unwrap();
    let y = fields[2].strip_prefix("y=").unwrap();
    let (s, t) = split.split_once('|').unwrap();
    let swapped = format!("{t}|{s}");
    let lhs = grhopf(&["product", "-m", "L", "-g", &rec.graph, "--split", split, "--left", x, "--right", y]);
    let rhs = grhopf(&["product", "-m", "L", "-g", &rec.graph, "--split", &swapped, "--left", y, "--right", x]);
    assert_eq!(stdout(&lhs).trim(), format!("[{}]", ce.lhs));
    assert_eq!(stdout(&rhs).trim(), format!("[{}]", ce.rhs));
}

#[test]
fn usage_errors_exit_two_with_positions() {
    let bad = std::env::temp_dir().join(format!("grhopf-bad-{}.g", std::process::id()));
    std::fs::write(&bad, "v a\ne a z\n").unwrap();
    let out = grhopf(&["enumerate", "-m", "L", "-g", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains(":2:5: undeclared vertex `z`"), "{}", stderr(&out));
    std::fs::remove_file(bad).ok();

    let out = grhopf(&["antipode", "-m", "L", "-g", "a,b|", "-k", "a<<b"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--key:1:3"), "{}", stderr(&out));

    let out = grhopf(&["enumerate", "-m", "Nope", "-g", "a|"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown monoid"));

    let out = grhopf(&["verify", "--nmax", "6"]);
    assert_eq!(out.status.code(), Some(2));

    let out = grhopf(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
