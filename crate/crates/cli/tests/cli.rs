use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["loctri"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = loctri_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn ok_json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

fn error_code(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 2, "{args:?} should fail with a domain error");
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["schema_version"], "1");
    assert!(!v["error"]["message"].as_str().unwrap().is_empty());
    v["error"]["code"].as_str().unwrap().to_string()
}

fn golden(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(p).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("loctri-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn mesh_hom_a2() {
    let out = ok(&["mesh", "hom", "--family", "A", "--rank", "2", "--from", "0,1"]);
    assert_eq!(out, golden("mesh_hom_a2.tsv"));
    assert_eq!(out, "p\tq\tdim\n0\t1\t1\n0\t2\t1\n");
}

#[test]
fn mesh_hom_d4_center() {
    assert_eq!(
        ok(&["mesh", "hom", "--family", "D", "--rank", "4", "--from", "0,2"]),
        golden("mesh_hom_d4.tsv")
    );
}

#[test]
fn mesh_hom_json_matches_tsv() {
    let v = ok_json(&[
        "mesh", "hom", "--family", "A", "--rank", "3", "--from", "0,2", "--format", "json",
    ]);
    let tsv = ok(&["mesh", "hom", "--family", "A", "--rank", "3", "--from", "0,2"]);
    let rows: Vec<String> = v["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| format!("{}\t{}\t{}", r[0], r[1], r[2]))
        .collect();
    assert_eq!(tsv.lines().skip(1).collect::<Vec<_>>(), rows);
}

#[test]
fn mesh_oracle_agrees_with_knitting() {
    let tsv = ok(&["mesh", "hom", "--family", "D", "--rank", "5", "--from", "0,3"]);
    for line in tsv.lines().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let to = format!("{},{}", f[0], f[1]);
        let o = ok(&[
            "mesh", "oracle", "--family", "D", "--rank", "5", "--from", "0,3", "--to", &to,
        ]);
        assert_eq!(o.trim(), f[2], "Hom((0,3), {to})");
    }
}

#[test]
fn classify_e8_threshold() {
    let v = ok_json(&["classify", "--family", "E", "--rank", "8", "--gen", "tau^14"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["by_table"], true);
    assert_eq!(v["by_hom_condition"], true);
}

#[test]
fn classify_max_cy_cluster_category() {
    let v = ok_json(&["classify", "--family", "A", "--rank", "3", "--max-cy", "2"]);
    assert_eq!(v["cy_dimension"], 2);
    assert_eq!(v["by_table"], true);
}

#[test]
fn orbit_a2_rho_is_a_loop() {
    let out = ok(&[
        "orbit", "--family", "A", "--rank", "2", "--gen", "rho", "--format", "dot",
    ]);
    assert_eq!(out, golden("orbit_a2_rho.dot"));
    assert_eq!(
        out.lines()
            .filter(|l| l.contains("->") && !l.contains("dashed"))
            .count(),
        1
    );
}

#[test]
fn orbit_json_round_trips_through_identify() {
    let q = ok(&[
        "orbit",
        "--family",
        "D",
        "--rank",
        "4",
        "--gen",
        "phi*tau^2",
        "--format",
        "json",
    ]);
    let path = temp_file("d4.json", &q);
    let v = ok_json(&["orbit", "--input", path.to_str().unwrap()]);
    assert_eq!(v["tree"], "D4");
    let n = serde_json::from_str::<Value>(&q).unwrap()["vertices"]
        .as_array()
        .unwrap()
        .len();
    assert_eq!(v["isomorphism"].as_array().unwrap().len(), n);
}

#[test]
fn orbit_input_errors() {
    let bad = temp_file(
        "bad.json",
        "{\"vertices\": [\"a\"], \"arrows\": [], \"tau\": [[\"a\", \"b\"]]}",
    );
    assert_eq!(error_code(&["orbit", "--input", bad.to_str().unwrap()]), "InvalidInput");
    assert_eq!(error_code(&["orbit", "--input", "/nonexistent/q.json"]), "InvalidInput");
}

#[test]
fn ppa_d4_char2() {
    let out = ok(&[
        "ppa",
        "build",
        "--family",
        "D",
        "--rank",
        "4",
        "--char",
        "2",
        "--f",
        "1*x*y + 1*y*x",
    ]);
    assert_eq!(out, golden("ppa_d4_char2.json"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 28);
    assert_eq!(v["reduced_f"], "0");
}

#[test]
fn ppa_basis_tsv() {
    assert_eq!(
        ok(&["ppa", "build", "--family", "A", "--rank", "2", "--format", "tsv"]),
        golden("ppa_a2_basis.tsv")
    );
}

#[test]
fn ppa_default_characteristic() {
    let v = ok_json(&["ppa", "build", "--family", "L", "--rank", "2"]);
    assert_eq!(v["characteristic"], 32003);
    assert_eq!(v["f"], "0");
    assert_eq!(v["selfinjective"], true);
}

#[test]
fn dynkin_outputs() {
    assert_eq!(
        ok(&["dynkin", "--family", "E", "--rank", "6", "--format", "dot"]),
        golden("dynkin_e6.dot")
    );
    let v = ok_json(&["dynkin", "--family", "E", "--rank", "8"]);
    assert_eq!(v["coxeter_number"], 30);
    assert_eq!(v["positive_roots"], 120);
}

#[test]
fn auto_commands() {
    let v = ok_json(&["auto", "show", "--family", "A", "--rank", "3", "--gen", "tau^2"]);
    assert_eq!(v["weakly_admissible"], true);
    let list = ok(&[
        "auto",
        "list",
        "--family",
        "A",
        "--rank",
        "3",
        "--max-exponent",
        "2",
        "--format",
        "text",
    ]);
    assert!(list.lines().any(|l| l == "tau^2"));
    assert_eq!(
        ok(&["auto", "conj", "--family", "A", "--rank", "3", "--gen", "tau", "--other", "tau"]),
        "true\n"
    );
}

#[test]
fn batch_is_independent_of_jobs() {
    let q = temp_file("queries.tsv", "0,1\t0,2\n0,2\t1,1\n# comment\n\n1,3 0,1\n0,1\t4,2\n");
    let args = |jobs: &'static str| {
        [
            "mesh",
            "batch",
            "--family",
            "A",
            "--rank",
            "3",
            "--gen",
            "tau^2",
            "--queries",
            q.to_str().unwrap(),
            "--jobs",
            jobs,
        ]
        .map(String::from)
    };
    let one = ok(&args("1").iter().map(String::as_str).collect::<Vec<_>>());
    let four = ok(&args("4").iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 5);
    for line in one.lines().skip(1) {
        let f: Vec<&str> = line.split('\t').collect();
        let single = ok(&[
            "mesh", "orbit", "--family", "A", "--rank", "3", "--gen", "tau^2", "--from", f[0], "--to", f[1],
        ]);
        assert_eq!(single.trim(), f[2]);
    }
}

#[test]
fn total_hom_has_no_additivity_failures_for_standard_quotient() {
    let v = ok_json(&["mesh", "total", "--family", "A", "--rank", "2", "--gen", "tau^2"]);
    assert!(v["additivity_failures"].as_array().unwrap().is_empty());
    assert_eq!(v["hom"].as_array().unwrap().len(), 4);
}

#[test]
fn domain_errors_exit_2() {
    assert_eq!(
        error_code(&["mesh", "hom", "--family", "A", "--rank", "0", "--from", "0,1"]),
        "RankOutOfRange"
    );
    assert_eq!(
        error_code(&["ppa", "build", "--family", "A", "--rank", "3", "--degree-cap", "1"]),
        "DegreeCapExceeded"
    );
    assert_eq!(
        error_code(&["ppa", "build", "--family", "D", "--rank", "4", "--f", "x*"]),
        "ParseError"
    );
    assert_eq!(
        error_code(&["ppa", "build", "--family", "D", "--rank", "4", "--char", "4"]),
        "InvalidCharacteristic"
    );
    assert_eq!(
        error_code(&["ppa", "build", "--family", "D", "--rank", "4", "--f", "x"]),
        "NotInRadicalSquare"
    );
    assert_eq!(
        error_code(&["ppa", "build", "--family", "A", "--rank", "4", "--f", "x*y"]),
        "DeformationArityMismatch"
    );
    assert_eq!(
        error_code(&["dynkin", "--family", "A", "--rank", "2", "--format", "tsv"]),
        "UnsupportedFormat"
    );
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["bogus"][..],
        &["mesh", "hom", "--family", "A"],
        &["dynkin", "--family", "Q", "--rank", "2"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_loctri");
    let st = Command::new(bin)
        .args(["mesh", "hom", "--family", "A", "--rank", "2", "--from", "0,1"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8(st.stdout).unwrap(), golden("mesh_hom_a2.tsv"));
    let st = Command::new(bin)
        .args(["classify", "--family", "A", "--rank", "3", "--gen", "tau^0"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(st.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["mesh", "total", "--family", "D", "--rank", "5", "--gen", "tau^3"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["ppa", "build", "--family", "E", "--rank", "6"];
    assert_eq!(ok(&args), ok(&args));
}
