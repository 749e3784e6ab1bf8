//! End-to-end CLI tests: verbs, JSON determinism, exit codes, config caps.

use std::io::Write;
use std::process::{Command, Output};

fn maxab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn root_fixed_type_report() {
    let out = maxab(&[
        "root",
        "fixed-type",
        "--type",
        "F4",
        "--coweight",
        "0,0,2/3,1/3",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["type"], "A2L+A2S");
    assert_eq!(v["dim"], 16);
    assert_eq!(v["order_adjoint"], 3);
    assert_eq!(v["schema"], "maxab/1");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "root",
        "fixed-type",
        "--type",
        "E8",
        "--coweight",
        "1/3,1/3,-1/3,0,0,0,0,0",
    ];
    let a = maxab(&args);
    let b = maxab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn decompose_round_trips_catalog_output() {
    // catalog build writes a subgroup JSON; decompose consumes it.
    let dir = std::env::temp_dir().join(format!("maxab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let built = maxab(&[
        "catalog",
        "build",
        "H-product",
        "--param",
        "chain=2,2",
        "--param",
        "n=4",
    ]);
    let v = stdout_json(&built);
    let sub_path = dir.join("h2h2.json");
    std::fs::write(
        &sub_path,
        serde_json::to_string_pretty(&v["realization"]).unwrap(),
    )
    .unwrap();
    let out = maxab(&["decompose", "--subgroup", sub_path.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["invariants"], serde_json::json!([2, 2]));
    assert_eq!(v["torus_dim"], 0);
}

#[test]
fn decompose_accepts_catalog_references() {
    let out = maxab(&[
        "decompose",
        "--subgroup",
        "catalog:H-product?chain=4&n=8",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["invariants"], serde_json::json!([4]));
    assert_eq!(v["torus_dim"], 1);
}

#[test]
fn star_reports_and_asserts() {
    let out = maxab(&[
        "star",
        "--subgroup",
        "catalog:E7-F1",
        "--algebra",
        "su6+su3",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["dim_fixed"], 0);
    assert_eq!(v["condition_star"], true);

    // A failing assertion exits with status 1.
    let out = maxab(&[
        "star",
        "--subgroup",
        "catalog:H2-O?n=4",
        "--algebra",
        "so4",
        "--assert",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bd_invariants_verb() {
    let out = maxab(&[
        "bd-invariants",
        "--subgroup",
        "catalog:H2p-Sp?n=1",
        "--family",
        "symplectic",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["k"], 1);
    assert_eq!(v["s0"], 1);
    assert_eq!(v["s1"], 0);
}

#[test]
fn pairing_verb_reports_gram() {
    let out = maxab(&["pairing", "--subgroup", "catalog:Hk?k=3&n=3"]);
    let v = stdout_json(&out);
    assert_eq!(v["order"], 9);
    assert_eq!(v["abelian"], true);
    assert_eq!(v["kernel_size"], 1);
}

#[test]
fn nonabelian_decompose_is_a_property_failure() {
    // SU(3) Heisenberg group without the quotient: not abelian, exit 1.
    let dir = std::env::temp_dir().join(format!("maxab-test-na-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let sub = serde_json::json!({
        "schema": "maxab/1",
        "group": {
            "factors": [{"family": "SU", "n": 3}],
            "center": "trivial",
            "twisted": false,
            "label": "SU(3)",
            "torus_frames": ["Diagonal"],
        },
        "generators": [
            {"parts": [{"complex": {"rows": [
                [{"N": 1, "coeffs": ["1"]}, {"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["0"]}],
                [{"N": 1, "coeffs": ["0"]}, {"N": 3, "coeffs": ["0", "1"]}, {"N": 1, "coeffs": ["0"]}],
                [{"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["0"]}, {"N": 3, "coeffs": ["-1", "-1"]}]
            ]}}], "tau": false},
            {"parts": [{"complex": {"rows": [
                [{"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["1"]}, {"N": 1, "coeffs": ["0"]}],
                [{"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["1"]}],
                [{"N": 1, "coeffs": ["1"]}, {"N": 1, "coeffs": ["0"]}, {"N": 1, "coeffs": ["0"]}]
            ]}}], "tau": false}
        ],
        "torus": []
    });
    let path = dir.join("heis.json");
    let mut fh = std::fs::File::create(&path).unwrap();
    write!(fh, "{}", serde_json::to_string_pretty(&sub).unwrap()).unwrap();
    let out = maxab(&["decompose", "--subgroup", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    let out = maxab(&["catalog", "build", "no-such-key"]);
    assert_eq!(out.status.code(), Some(2));
    let out = maxab(&["root", "fixed-type", "--type", "Q9", "--coweight", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn caps_exit_3_and_config_file_sets_them() {
    let out = maxab(&[
        "pairing",
        "--subgroup",
        "catalog:Hk?k=4&n=4",
        "--closure-cap",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));

    let dir = std::env::temp_dir().join(format!("maxab-test-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("maxab.conf");
    std::fs::write(&cfg, "# caps\nclosure_cap=3\nsearch_bound=12\n").unwrap();
    let out = maxab(&[
        "pairing",
        "--subgroup",
        "catalog:Hk?k=4&n=4",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));

    // Flag overrides the file.
    let out = maxab(&[
        "pairing",
        "--subgroup",
        "catalog:Hk?k=4&n=4",
        "--config",
        cfg.to_str().unwrap(),
        "--closure-cap",
        "100",
    ]);
    assert!(out.status.success());
}

#[test]
fn clifford_verb_parses_and_projects() {
    let out = maxab(&["clifford", "--n", "4", "(1+e1e2)/sqrt2", "--project"]);
    let v = stdout_json(&out);
    assert_eq!(v["pin_unit"], true);
    assert_eq!(v["spin"], true);
    // Bad generator index is a usage error.
    let out = maxab(&["clifford", "--n", "2", "e5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spin_search_verb() {
    let out = maxab(&["spin-search", "--n", "8"]);
    let v = stdout_json(&out);
    assert_eq!(v["witness_rank"], 3);
    let out = maxab(&["spin-search", "--n", "42"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_list_mentions_required_keys() {
    let out = maxab(&["catalog", "list"]);
    let v = stdout_json(&out);
    let keys: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["key"].as_str().unwrap())
        .collect();
    for want in ["Hk", "spin-F", "halfspin-F3", "E7-F1", "E8-theta1", "K_p"] {
        assert!(keys.contains(&want), "missing {want}");
    }
}

#[test]
fn verify_paper_runs_a_small_suite() {
    let out = maxab(&["verify-paper", "--suite", "root"]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let lines = String::from_utf8_lossy(&out.stderr);
    assert!(lines.contains("PASS criterion"));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn twisted_lift_verb() {
    // <tau, [I_{1,1}]> in PU(2) >< tau, via a definition file.
    let dir = std::env::temp_dir().join(format!("maxab-test-tw-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let one = serde_json::json!({"N": 1, "coeffs": ["1"]});
    let zero = serde_json::json!({"N": 1, "coeffs": ["0"]});
    let neg = serde_json::json!({"N": 1, "coeffs": ["-1"]});
    let sub = serde_json::json!({
        "schema": "maxab/1",
        "group": {
            "factors": [{"family": "U", "n": 2}],
            "center": "u1",
            "twisted": true,
            "label": "PU(2)><tau",
            "torus_frames": ["Diagonal"],
        },
        "generators": [
            {"parts": [{"complex": {"rows": [[one, zero], [zero, one]]}}], "tau": true},
            {"parts": [{"complex": {"rows": [[neg, zero], [zero, one]]}}], "tau": false}
        ],
        "torus": []
    });
    let path = dir.join("tw.json");
    std::fs::write(&path, serde_json::to_string(&sub).unwrap()).unwrap();
    let out = maxab(&["twisted-lift", "--subgroup", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "maxab/1");
    assert_eq!(v["group"]["twisted"], true);
}
