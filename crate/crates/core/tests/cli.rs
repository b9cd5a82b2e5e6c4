use std::io::Write;

use serde_json::Value;
use twistspin::cli::{run, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, EXIT_VERIFY};
use twistspin::{CountReport, GroupDescriptor, TargetGroup};

fn json(args: &[&str]) -> Value {
    let mut full = vec!["twistspin"];
    full.extend_from_slice(args);
    let out = run(full);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    let mut full = vec!["twistspin"];
    full.extend_from_slice(args);
    run(full).code
}

#[test]
fn count_examples() {
    // enumerated homomorphisms; the published dihedral values count them up
    // to conjugation
    let r = json(&[
        "count", "--knot", "trefoil", "--m", "3", "--n", "1", "--group", "d2k:3",
    ]);
    assert_eq!(r["count"], 3);
    assert_eq!(r["h_image"], "r^3");
    assert_eq!(r["beta"], 4);
    let r = json(&[
        "count", "--knot", "trefoil", "--m", "2", "--n", "1", "--group", "sl2z3",
    ]);
    assert_eq!(r["count"], 6);
    assert_eq!(r["engine"], "backtracking");
    let r = json(&[
        "count", "--knot", "unknot", "--m", "0", "--n", "1", "--group", "d2k:4",
    ]);
    assert_eq!(r["count"], 0);
    assert_eq!(r["beta"], Value::Null);
    let r = json(&[
        "count",
        "--knot",
        "figure-eight",
        "--m",
        "3",
        "--n",
        "2",
        "--group",
        "d2k:6",
        "--engine",
        "oracle",
    ]);
    assert_eq!(r["count"], 3);
}

#[test]
fn count_report_round_trips_and_renders_parse_back() {
    let mut args = vec![
        "twistspin",
        "count",
        "--knot",
        "5_2",
        "--m",
        "6",
        "--n",
        "1",
        "--group",
        "d2k:6",
    ];
    let out = run(args.clone());
    let report: CountReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap() + "\n", out.stdout);
    let g = TargetGroup::from_descriptor(&GroupDescriptor::parse(&report.group).unwrap()).unwrap();
    for w in &report.witnesses {
        for x in w {
            assert_eq!(g.parse_element(x).unwrap().to_string(), *x);
        }
    }
    args.extend(["--timing"]);
    let timed: Value = serde_json::from_str(&run(args).stdout).unwrap();
    assert!(timed["runtime_us"].is_u64());
}

#[test]
fn output_is_byte_stable() {
    let args = [
        "twistspin",
        "enumerate",
        "--knot",
        "6_1",
        "--m",
        "3",
        "--n",
        "1",
        "--group",
        "sl2z3",
    ];
    assert_eq!(run(args).stdout, run(args).stdout);
}

#[test]
fn witness_limit_truncates() {
    let r = json(&[
        "count",
        "--knot",
        "trefoil",
        "--m",
        "2",
        "--group",
        "sl2z3",
        "--witnesses",
        "2",
    ]);
    assert_eq!(r["count"], 6);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(r["witnesses_truncated"], true);
}

#[test]
fn enumerate_examples() {
    let r = json(&[
        "enumerate",
        "--knot",
        "trefoil",
        "--m",
        "2",
        "--n",
        "1",
        "--group",
        "sl2z3",
    ]);
    let ws = r["witnesses"].as_array().unwrap();
    assert_eq!(ws.len(), 6);
    for w in ws {
        let w = w.as_array().unwrap();
        assert!(w.iter().all(|x| x == &w[0]));
    }
    let r = json(&[
        "enumerate",
        "--knot",
        "unknot",
        "--m",
        "1",
        "--n",
        "1",
        "--group",
        "d2k:3",
    ]);
    assert_eq!(r["witnesses"], serde_json::json!([["1"]]));
}

#[test]
fn explicit_h_image() {
    let r = json(&[
        "count",
        "--knot",
        "trefoil",
        "--m",
        "2",
        "--group",
        "sl2z3",
        "--h-image",
        "[[1,0],[0,1]]",
    ]);
    assert_eq!(r["h_image"], "[[1,0],[0,1]]");
    assert_eq!(
        code(&[
            "count",
            "--knot",
            "trefoil",
            "--m",
            "2",
            "--group",
            "sl2z3",
            "--h-image",
            "r^2"
        ]),
        EXIT_USAGE
    );
}

#[test]
fn table_groups() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // cyclic group of order 4, central involution 2
    writeln!(f, "# Z/4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2").unwrap();
    let spec = format!("table:{}", f.path().display());
    let r = json(&["count", "--knot", "trefoil", "--m", "2", "--group", &spec]);
    assert_eq!(r["h_image"], "g2");
    // x1 = x2 = x3 = g with g^2 = g2: g1 and g3
    assert_eq!(r["count"], 2);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "0 1\n1 1").unwrap();
    let spec = format!("table:{}", bad.path().display());
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "2", "--group", &spec]),
        EXIT_USAGE
    );
}

#[test]
fn distinguish_examples() {
    assert_eq!(
        json(&["distinguish", "--m1", "2", "--m2", "3"]),
        serde_json::json!({"m1": 2, "m2": 3, "k_max": 3, "result": "witness", "k": 1, "count1": 0, "count2": 1})
    );
    assert_eq!(
        json(&["distinguish", "--m1", "5", "--m2", "5"])["result"],
        "indistinguishable"
    );
    let r = json(&["distinguish", "--m1", "0", "--m2", "1", "--kmax", "1"]);
    assert_eq!(
        (r["k"].clone(), r["count1"].clone(), r["count2"].clone()),
        (1.into(), 0.into(), 1.into())
    );
    let r = json(&["distinguish", "--m1", "-4", "--m2", "4"]);
    assert_eq!(r["result"], "indistinguishable");
}

#[test]
fn catalog_list() {
    let r = json(&["catalog", "list"]);
    let names: Vec<&str> = r
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.len() >= 6);
    assert!(names.contains(&"trefoil") && names.contains(&"figure-eight"));
    let pretty = run(["twistspin", "catalog", "list", "--pretty"]);
    assert!(pretty.stdout.lines().any(|l| l.starts_with("6_1")));
}

#[test]
fn usage_and_resource_errors() {
    assert_eq!(
        code(&[
            "count",
            "--knot",
            "nosuchknot",
            "--m",
            "2",
            "--group",
            "sl2z3"
        ]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "4", "--n", "2", "--group", "sl2z3"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "2", "--n", "0", "--group", "sl2z3"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "2", "--group", "d2k:0"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "2", "--group", "gl2"]),
        EXIT_USAGE
    );
    assert_eq!(
        code(&["count", "--knot", "trefoil", "--m", "2", "--group", "d2k:2000"]),
        EXIT_RESOURCE
    );
    let out = run([
        "twistspin",
        "count",
        "--knot",
        "6_1",
        "--m",
        "2",
        "--group",
        "sl2z3",
        "--engine",
        "oracle",
    ]);
    assert_eq!(out.code, EXIT_RESOURCE);
    assert!(out.stderr.contains("--engine backtracking"));
    assert_eq!(code(&["verify", "--m-range", "1-5"]), EXIT_USAGE);
    assert_eq!(code(&["verify", "--k-range", "0..3"]), EXIT_USAGE);
    assert_eq!(code(&["frobnicate"]), EXIT_USAGE);
}

#[test]
fn knot_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        "name: my-trefoil\ngenerators: 3\ncrossing: 1 2 3\ncrossing: 2 3 1\ncrossing: 3 1 2\n"
    )
    .unwrap();
    let path = f.path().display().to_string();
    let r = json(&["count", "--knot", &path, "--m", "2", "--group", "sl2z3"]);
    assert_eq!(
        (r["knot"].as_str().unwrap(), r["count"].as_u64().unwrap()),
        ("my-trefoil", 6)
    );

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "generators: 3\ncrossing: 1 2 9\n").unwrap();
    let out = run([
        "twistspin",
        "count",
        "--knot",
        &bad.path().display().to_string(),
        "--m",
        "2",
        "--group",
        "sl2z3",
    ]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 2, column 15"), "{}", out.stderr);
}

#[test]
fn verify_lemmas_documents_discrepancies() {
    let r = json(&["verify", "--suite", "lemmas"]);
    assert_eq!(r["summary"]["fail"], 0);
    assert_eq!(r["summary"]["discrepancy_documented"], 2);
    let quasi = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "p2-quasiconjugation")
        .unwrap();
    assert_eq!(quasi["status"], "discrepancy-documented");
    assert!(quasi.get("runtime_us").is_none());
}

#[test]
fn verify_theorems_reports_formula_conflicts() {
    let out = run([
        "twistspin",
        "verify",
        "--suite",
        "theorems",
        "--m-range",
        "-6..6",
        "--k-range",
        "1..8",
        "--knots",
        "all",
    ]);
    assert_eq!(out.code, EXIT_VERIFY);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    let status = |id: &str| {
        r["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["id"] == id)
            .unwrap()["status"]
            .clone()
    };
    assert_eq!(status("sl2z3-counts"), "pass");
    assert_eq!(status("dihedral-counts-exact"), "pass");
    assert_eq!(status("derived-power-relators"), "pass");
    assert_eq!(status("oracle-equivalence"), "pass");
    assert_eq!(status("dihedral-counts"), "fail");
    assert_eq!(status("dihedral-distinguisher"), "fail");
}

#[test]
fn verify_flags_corrupted_knot_file() {
    // two meridians with no crossing between them: a two-component unlink
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "name: corrupted\ngenerators: 2\n").unwrap();
    let knots = format!("trefoil,{}", f.path().display());
    let out = run([
        "twistspin",
        "verify",
        "--suite",
        "all",
        "--m-range",
        "-3..3",
        "--k-range",
        "1..3",
        "--knots",
        &knots,
    ]);
    assert_eq!(out.code, EXIT_VERIFY);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    let inputs = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "knot-inputs")
        .unwrap();
    assert_eq!(inputs["status"], "fail");
    assert!(inputs["details"]
        .as_array()
        .unwrap()
        .iter()
        .any(|d| d == "corrupted: abelianization Z + Z, expected Z"));
}
