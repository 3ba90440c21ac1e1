use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn harmonica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_harmonica"))
        .args(args)
        .env_remove("HARMONICA_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares with the stored file; `UPDATE_GOLDEN=1` rewrites it instead.
fn assert_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap();
    assert!(
        expected == actual,
        "{name} differs from the golden file:\n{actual}"
    );
}

#[test]
fn verify_all_n3_matches_golden() {
    let o = harmonica(&["verify", "--n", "3", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_golden("verify_n3_all.json", &text);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["suite"], "all");
    assert_eq!(report["passed"], true);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().split(':').next().unwrap())
        .collect();
    let mut suites = names.clone();
    suites.dedup();
    assert_eq!(suites.len(), 11);
}

#[test]
fn vanishing_report_lists_f3() {
    let o = harmonica(&["verify", "--n", "3", "--suite", "vanishing"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_golden("verify_n3_vanishing.json", &text);
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    let f3 = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "F3 = 0 on the hook model")
        .expect("F3 check present");
    assert_eq!(f3["passed"], true);
}

#[test]
fn figure1_matches_eleven_generators() {
    let o = harmonica(&["verify", "--n", "3", "--suite", "figure1"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let gens = checks
        .iter()
        .find(|c| c["name"] == "eleven generators")
        .unwrap();
    assert_eq!(gens["witness"], "11");
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn exports_match_golden() {
    let o = harmonica(&["export", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_golden("export_n3.json", &text);
    let table: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(table["records"].as_array().unwrap().len(), 11);

    let o = harmonica(&["export", "--n", "2", "--format", "csv"]);
    let text = stdout(&o);
    assert_golden("export_n2.csv", &text);
    assert_eq!(text.lines().count(), 1 + 3);
}

#[test]
fn compute_outputs_match_golden() {
    let o = harmonica(&["compute", "--n", "3", "--space", "drn-sign"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_golden("compute_n3_drn_sign.txt", &text);
    assert!(text.contains("hilbert: q^3 + q^2*t + q*t^2 + q*t + t^3\n"));

    let o = harmonica(&["compute", "--n", "2", "--space", "hook", "--format", "json"]);
    let text = stdout(&o);
    assert_golden("compute_n2_hook.json", &text);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["by_a"], serde_json::json!([2, 1]));
}

#[test]
fn compute_n4_total() {
    let o = harmonica(&["compute", "--n", "4", "--space", "drn"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("total: 125\n"));
}

#[test]
fn custom_dictionary_relabels_only() {
    let dir = tempfile::tempdir().unwrap();
    let dict = dir.path().join("custom.json");
    fs::write(
        &dict,
        r#"{"q1":"1","q2":"0","q0":"0","t1":"1","t2":"0","t0":"0","a1":"1","a0":"0"}"#,
    )
    .unwrap();
    let o = harmonica(&[
        "export",
        "--n",
        "3",
        "--format",
        "json",
        "--dict",
        dict.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let custom: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let standard: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(golden_path("export_n3.json")).unwrap()).unwrap();
    let (a, b) = (
        custom["records"].as_array().unwrap(),
        standard["records"].as_array().unwrap(),
    );
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        for key in ["dx", "dy", "da", "basis"] {
            assert_eq!(x[key], y[key]);
        }
        let (dx, dy, da) = (
            x["dx"].as_i64().unwrap(),
            x["dy"].as_i64().unwrap(),
            x["da"].as_i64().unwrap(),
        );
        assert_eq!(x["Q"].as_i64().unwrap(), dx - dy);
        assert_eq!(x["T"].as_i64().unwrap(), dy);
        assert_eq!(x["A"].as_i64().unwrap(), da);
    }
}

#[test]
fn cache_hit_and_miss_give_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["verify", "--n", "3", "--suite", "all", "--cache-dir", cache];
    let miss = harmonica(&args);
    assert!(
        fs::read_dir(dir.path()).unwrap().count() > 0,
        "cache was written"
    );
    let hit = harmonica(&args);
    assert_eq!(stdout(&miss), stdout(&hit));
    assert_eq!(
        stdout(&hit),
        fs::read_to_string(golden_path("verify_n3_all.json")).unwrap()
    );
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let a = harmonica(&["verify", "--n", "3", "--jobs", "1"]);
    let b = harmonica(&["verify", "--n", "3", "--jobs", "2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = harmonica(&[
        "verify",
        "--n",
        "2",
        "--suite",
        "dims",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(report["n"], 2);
}

#[test]
fn timings_are_opt_in() {
    let plain = stdout(&harmonica(&["verify", "--n", "2", "--suite", "dims"]));
    let timed = stdout(&harmonica(&[
        "verify",
        "--n",
        "2",
        "--suite",
        "dims",
        "--timings",
    ]));
    assert!(!plain.contains("seconds"));
    assert!(timed.contains("seconds"));
}

#[test]
fn exit_codes() {
    let refused = harmonica(&["compute", "--n", "5", "--space", "drn"]);
    assert_eq!(refused.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("--allow-large"));
    assert_eq!(
        harmonica(&["compute", "--n", "6", "--space", "drn", "--allow-large"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        harmonica(&["verify", "--n", "3", "--suite", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(harmonica(&["compute", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        harmonica(&["compute", "--n", "0", "--space", "drn"])
            .status
            .code(),
        Some(2)
    );
    let missing = harmonica(&["export", "--n", "2", "--dict", "/nonexistent/dict.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("/nonexistent/dict.json"));
}
