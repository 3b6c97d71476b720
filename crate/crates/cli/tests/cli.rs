use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_milnorhodge"))
        .args(args)
        .env_remove("MILNORHODGE_THREADS")
        .output()
        .expect("binary runs");
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

/// Compares against `tests/golden/<name>.json`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, stdout: &str) -> Value {
    let path = dir("golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, stdout).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(stdout, expected, "output of `{name}` drifted from its golden file");
    serde_json::from_str(stdout).unwrap()
}

fn ok(name: &str, args: &[&str]) -> Value {
    let (out, code) = run(args);
    assert_eq!(code, 0, "{name}: {out}");
    golden(name, &out)
}

#[test]
fn combinatorics() {
    let v = ok("combinatorics_ceva", &["combinatorics", "--arrangement", &fixture("ceva.txt")]);
    assert_eq!(v["weak"]["m"]["3"], 12);
    assert_eq!(v["invariants"]["chi_f"], 81);
    assert_eq!(v["points"].as_array().unwrap().len(), 12);
    let v = ok("combinatorics_boolean", &["combinatorics", "--arrangement", &fixture("boolean.txt")]);
    assert_eq!(v["invariants"]["charpoly"], serde_json::json!([-1, 3, -3, 1]));
}

#[test]
fn local_hodge() {
    let v = ok("local_hodge_3_9", &["local-hodge", "--k", "3", "--d", "9"]);
    assert_eq!(v["milnor_number"], 32);
    let entries = v["table"]["entries"].as_array().unwrap();
    let at = |p: i64, q: i64| entries.iter().find(|e| e["p"] == p && e["q"] == q).unwrap()["mult"].clone();
    assert_eq!(at(2, 1), serde_json::json!([0, 0, 0, 0, 0, 0, 1, 0, 0]));
    assert_eq!(at(1, 2), serde_json::json!([0, 0, 0, 1, 0, 0, 0, 0, 0]));
    assert_eq!(at(2, 0), serde_json::json!([0, 0, 0, 0, 0, 0, 0, 1, 1]));
    assert_eq!(at(1, 1), serde_json::json!([0, 3, 3, 3, 4, 4, 3, 3, 3]));
}

#[test]
fn fermat() {
    let v = ok("fermat_9", &["fermat", "--d", "9"]);
    let entries = v["table"]["entries"].as_array().unwrap();
    let h20 = entries.iter().find(|e| e["p"] == 2 && e["q"] == 0).unwrap();
    assert_eq!(h20["mult"][3], 1);
    assert_eq!(h20["mult"][8], 21);
}

#[test]
fn spectrum() {
    let v = ok("spectrum_ceva", &["spectrum", "--arrangement", &fixture("ceva.txt")]);
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.contains(&serde_json::json!({"a": "1", "m": 16})));
    assert!(entries.contains(&serde_json::json!({"a": "4/3", "m": -2})));
}

#[test]
fn h2f() {
    let v = ok("h2f_ceva", &["h2f", "--arrangement", &fixture("ceva.txt"), "--h3x", &fixture("eq24.json")]);
    assert!(v["global"]["h2f"].is_object());
}

#[test]
fn counting() {
    let primes = "7,13,19,31";
    let v = ok(
        "count_boolean_fiber",
        &["count", "--arrangement", &fixture("boolean.txt"), "--target", "fiber", "--primes", primes],
    );
    assert_eq!(v["counts"][0]["twisted"], serde_json::json!([36, 36, 36]));
    ok(
        "count_generic3_complement",
        &["count", "--arrangement", &fixture("generic3.txt"), "--target", "complement", "--primes", "7,13,19,31,37"],
    );
    ok("count_ceva_fiber", &["count", "--arrangement", &fixture("ceva.txt"), "--target", "fiber"]);

    let v = ok(
        "extract_boolean_fiber",
        &["hodge-from-counts", "--arrangement", &fixture("boolean.txt"), "--target", "fiber", "--primes", primes],
    );
    assert_eq!(v["result"], "polynomial");
    assert_eq!(v["certification"], "conditional");
    let v = ok(
        "extract_ceva_complement",
        &["hodge-from-counts", "--arrangement", &fixture("ceva.txt"), "--target", "complement"],
    );
    assert_eq!(v["fits"][0]["coeffs"], serde_json::json!(["-16", "24", "-9", "1"]));
}

#[test]
fn ceva_fiber_verdict() {
    let v =
        ok("extract_ceva_fiber", &["hodge-from-counts", "--arrangement", &fixture("ceva.txt"), "--target", "fiber"]);
    assert_eq!(v["result"], "not_polynomial_count");
}

#[test]
fn check_suite() {
    let v = ok("check_ceva", &["check", "--arrangement", &fixture("ceva.txt"), "--h3x", &fixture("eq24.json")]);
    assert_eq!(v["passed"], true);
    let v = ok("check_boolean", &["check", "--arrangement", &fixture("boolean.txt")]);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"complement_count_q7") && names.contains(&"complement_count_q13"));

    let (out, code) = run(&["check", "--arrangement", &fixture("ceva.txt"), "--h3x", &fixture("h3x_asymmetric.json")]);
    assert_eq!(code, 1);
    let v = golden("check_ceva_asymmetric", &out);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"conjugation_symmetry"), "{failed:?}");
}

#[test]
fn errors() {
    let (out, code) = run(&["h2f", "--arrangement", &fixture("ceva.txt"), "--h3x", &fixture("h3x_bad_support.json")]);
    assert_eq!(code, 1);
    assert_eq!(golden("error_bad_support", &out)["error"]["code"], "bad_h3_support");

    let (out, code) = run(&["local-hodge", "--k", "1", "--d", "9"]);
    assert_eq!(code, 1);
    assert_eq!(golden("error_invalid_sing", &out)["error"]["code"], "invalid_singularity");

    let (out, code) =
        run(&["count", "--arrangement", &fixture("boolean.txt"), "--target", "fiber", "--primes", "7,13,19,23"]);
    assert_eq!(code, 1);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["code"], "bad_prime");

    assert_eq!(run(&["spectrum", "--arrangement", &fixture("ceva.txt"), "--no-such-flag"]).1, 2);
    assert_eq!(run(&["frobnicate"]).1, 2);
}

#[test]
fn thread_count_does_not_change_output() {
    let cases: [&[&str]; 4] = [
        &["count", "--arrangement", &fixture("boolean.txt"), "--target", "fiber", "--primes", "7,13,19,31"],
        &["count", "--arrangement", &fixture("generic3.txt"), "--target", "complement", "--primes", "7,13,19,31,37"],
        &["count", "--arrangement", &fixture("ceva.txt"), "--target", "fiber"],
        &["hodge-from-counts", "--arrangement", &fixture("ceva.txt"), "--target", "fiber"],
    ];
    for args in cases {
        let one = run(&[args, &["--threads", "1"]].concat());
        let eight = run(&[args, &["--threads", "8"]].concat());
        assert_eq!(one.1, 0);
        assert_eq!(one, eight, "{args:?}");
    }
}
