use std::process::{Command, Output};

fn nsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_text_report() {
    let o = nsg(&["invariants", "10", "14", "53"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "delta_max=7",
        "catenary=9",
        "minimal=true",
        "delta_set={1,2,3,5,7}",
    ] {
        assert!(text.lines().any(|l| l == line), "{line}:\n{text}");
    }
}

#[test]
fn invariants_of_whole_naturals() {
    let o = nsg(&["invariants", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("frobenius=-1") && text.contains("betti_elements={}"));

    let o = nsg(&["invariants", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["characterization"].is_null());
    assert_eq!(v["invariants"]["genus"], 0);
}

#[test]
fn invariants_json() {
    let o = nsg(&["invariants", "4", "9", "15", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["characterization"]["witness"], "thm24.bullet1");
    assert_eq!(v["characterization"]["betti_count"], 3);
    assert_eq!(v["generators"], serde_json::json!([4, 9, 15]));
    // identical invocations, identical bytes
    assert_eq!(
        o.stdout,
        nsg(&["invariants", "4", "9", "15", "--json"]).stdout
    );
}

#[test]
fn invalid_input_is_a_usage_error() {
    for args in [
        &["invariants", "0", "3"][..],
        &["invariants", "4", "6"],
        &["invariants", "-3", "5"],
        &["invariants", "x"],
        &["verify", "4"],
        &["verify", "10", "--filter", "some"],
        &["nonsense"],
    ] {
        let o = nsg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn scan_bound_too_small_is_reported() {
    let o = nsg(&["invariants", "10", "14", "53", "--scan-bound", "20"]);
    assert_eq!(o.status.code(), Some(2));
    let ok = nsg(&["invariants", "5", "6", "7", "9", "--scan-bound", "200"]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn generator_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(["invariants", "10", "14", "53"])
        .env("NSG_MAX_GEN", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_nsg"))
        .args(["invariants", "10", "14", "53"])
        .env("NSG_MAX_GEN", "53")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn examples_pass_and_corruption_fails() {
    let o = nsg(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("14/14 pass"));

    let o = nsg(&["examples", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL <10,14,53>"));

    let o = nsg(&["examples", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 14);
    assert!(v.as_array().unwrap().iter().all(|f| f["passed"] == true));
}

#[test]
fn verify_writes_sorted_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("v12.csv");
    let o = nsg(&["verify", "12", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("4,5,7,") && l.contains(",true,")));
    let keys: Vec<(i64, i64, i64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<i64> = l.split(',').take(3).map(|x| x.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_parallel_and_filter() {
    let seq = nsg(&["verify", "24"]);
    let par = nsg(&["verify", "24", "--parallel", "4"]);
    assert_eq!(seq.status.code(), Some(0));
    assert_eq!(seq.stdout, par.stdout);

    let o = nsg(&["verify", "24", "--filter", "minimal"]);
    let text = stdout(&o);
    assert!(text.lines().count() > 1);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(8) == Some("true")));
}

#[test]
fn betti_subcommand() {
    let o = nsg(&["betti", "4", "9", "15"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("betti element 24") && text.contains("betti element 30"));

    let o = nsg(&["betti", "5", "6", "7", "9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!v["betti_elements"].as_array().unwrap().is_empty());
}
