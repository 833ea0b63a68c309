use fusionring::construct::{dihedral_character_table, group_ring, near_group};
use fusionring::serial::{character_table_to_json, ring_from_str};
use fusionring::FiniteGroup;
use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fusionring"))
        .args(args)
        .env_remove("FUSIONRING_JOBS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn build_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    path
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(!n.is_f64(), "float {n} in machine output"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn build_outputs_reparse_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("d5.json");
    std::fs::write(&table, character_table_to_json(&dihedral_character_table(5).unwrap()).to_string()).unwrap();
    let table = table.to_string_lossy().into_owned();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("g.ring", vec!["group", "--group", "2,2"]),
        ("s3.ring", vec!["group", "--group", "s3"]),
        ("ng.ring", vec!["neargroup", "--group", "3", "--level", "6"]),
        ("hi.ring", vec!["haagerup-izumi", "--group", "3"]),
        ("u.ring", vec!["uniform", "--group", "4", "--stab", "0,2", "--theta", "0,1", "--k", "2"]),
        ("ch.ring", vec!["charring", "--table", &table]),
        ("d.ring", vec!["dihedral", "--n", "7"]),
    ];
    for (name, args) in cases {
        let path = build_to(dir.path(), name, &args);
        let ring = ring_from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(ring.verify_axioms().is_ok(), "{name}");
        let o = run(&["verify", &path]);
        assert_eq!(code(&o), 0, "{name}");
    }
    let path = build_to(dir.path(), "ng2.ring", &["neargroup", "--group", "2,2", "--level", "4"]);
    let ring = ring_from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let c22 = fusionring::AbelianGroupSpec::new(vec![2, 2]).unwrap().to_group();
    assert!(ring.same_rules(&near_group(&c22, 4)));
}

#[test]
fn obstruct_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let open = build_to(dir.path(), "a.ring", &["neargroup", "--group", "2,2", "--level", "4"]);
    assert_eq!(code(&run(&["obstruct", &open])), 0);
    let endgame = build_to(dir.path(), "b.ring", &["neargroup", "--group", "2,2,2", "--level", "8"]);
    let o = run(&["obstruct", &endgame, "--json"]);
    assert_eq!(code(&o), 10);
    assert_eq!(json(&o)["eliminated_by"], "elementary2_endgame");
    let div = build_to(dir.path(), "c.ring", &["neargroup", "--group", "3", "--level", "4"]);
    assert_eq!(code(&run(&["obstruct", &div])), 10);
    assert_eq!(code(&run(&["classify", "ring", &div])), 10);
}

#[test]
fn broken_duality_pairing_lists_violations() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value = serde_json::from_str(&fusionring::serial::ring_to_json_string(&group_ring(&FiniteGroup::cyclic(3)))).unwrap();
    // A valid involution that does not match the multiplication.
    v["dual"] = serde_json::json!([0, 1, 2]);
    let path = dir.path().join("bad.ring");
    std::fs::write(&path, v.to_string()).unwrap();
    let path = path.to_string_lossy();
    let o = run(&["verify", &path, "--json"]);
    assert_eq!(code(&o), 2);
    let report = json(&o);
    assert_eq!(report["ok"], false);
    let violations = report["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    assert!(violations.iter().all(|x| x["axiom"] == "duality_pairing"));
    let human = run(&["verify", &path]);
    assert_eq!(code(&human), 2);
    assert!(String::from_utf8_lossy(&human.stdout).contains("duality pairing"));
    assert_eq!(code(&run(&["obstruct", &path])), 2);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.ring");
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(code(&run(&["verify", &path.to_string_lossy()])), 2);
    assert_eq!(code(&run(&["verify", "/nonexistent/ring"])), 2);
    let o = run(&["verify", "--bogus-flag"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).to_lowercase().contains("usage"));
}

#[test]
fn elementary2_m3_json() {
    let o = run(&["classify", "elementary2", "--m", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_no_floats(&v);
    let open: Vec<u64> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] != "eliminated")
        .map(|e| e["level"].as_u64().unwrap())
        .collect();
    assert_eq!(open, vec![0]);
    let l0 = &v["levels"][0];
    assert_eq!(l0["status"], "categorifiable_known");
    assert!(l0["literature"].as_str().unwrap().contains("Tambara-Yamagami"));
}

#[test]
fn machine_output_has_no_floats() {
    let dir = tempfile::tempdir().unwrap();
    let hi = build_to(dir.path(), "hi.ring", &["haagerup-izumi", "--group", "3"]);
    for cmd in ["fpdim", "codegrees", "irreps", "obstruct"] {
        let o = run(&[cmd, &hi, "--json"]);
        assert_eq!(code(&o), 0, "{cmd}");
        assert_no_floats(&json(&o));
    }
    assert_no_floats(&json(&run(&["classify", "prime", "--p", "7", "--kmax", "2000", "--json"])));
}

#[test]
fn csv_output_parses() {
    let o = run(&["classify", "elementary2", "--m", "2", "--csv"]);
    assert_eq!(code(&o), 0);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert!(headers.iter().any(|h| h == "level"));
    assert!(rdr.records().count() > 2);
}

#[test]
fn output_is_byte_identical() {
    let args = ["classify", "prime", "--p", "7", "--kmax", "40000", "--json"];
    let first = run(&args).stdout;
    assert_eq!(first, run(&args).stdout);
    for jobs in ["1", "3", "8"] {
        let mut a = args.to_vec();
        a.extend_from_slice(&["--jobs", jobs]);
        assert_eq!(first, run(&a).stdout, "jobs={jobs}");
    }
    let e = ["classify", "elementary2", "--m", "4", "--json"];
    assert_eq!(run(&e).stdout, run(&e).stdout);
}
