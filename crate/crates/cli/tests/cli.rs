use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn vizdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vizdom")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn invariants(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(&vizdom(args))).unwrap()
}

#[test]
fn invariants_of_families() {
    let r = invariants(&["invariants", "--family", "Gm:3", "--no-timing"]);
    assert_eq!(r["gamma"]["value"], 4);
    assert_eq!(r["rho"]["value"], 3);
    assert!(r.get("elapsed_ms").is_none());
    let r = invariants(&["invariants", "cycle:5"]);
    assert_eq!(r["gamma_t"]["value"], 5);
    let r = invariants(&["invariants", "path:1", "--no-timing"]);
    assert!(r["gamma_t"].is_null());
}

#[test]
fn invariants_from_file_and_rejections() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("tri.arcs");
    fs::write(&good, "n 3\n0 1\n1 2\n2 0\n").unwrap();
    let r = invariants(&["invariants", good.to_str().unwrap(), "--no-timing"]);
    assert_eq!((r["id"].as_str(), r["gamma"]["value"].as_u64()), (Some("tri"), Some(2)));

    let empty = dir.path().join("empty.arcs");
    fs::write(&empty, "").unwrap();
    let out = vizdom(&["invariants", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let bad = dir.path().join("bad.arcs");
    fs::write(&bad, "n 3\n0 1\n1 7\n").unwrap();
    let out = vizdom(&["invariants", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn product_and_family_round_trip() {
    let cart = stdout(&vizdom(&["product", "cart", "Gm:1", "Gm:1"]));
    assert!(cart.lines().any(|l| l == "n 9"));
    assert_eq!(cart.lines().filter(|l| !l.starts_with('#') && !l.starts_with('n')).count(), 18);
    let direct = stdout(&vizdom(&["product", "direct", "cycle:3", "cycle:3"]));
    assert_eq!(direct.lines().filter(|l| !l.starts_with('#') && !l.starts_with('n')).count(), 9);

    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("h.arcs");
    let out = vizdom(&["family", "chorded-pentagon", "--out", fam.to_str().unwrap()]);
    assert!(out.status.success());
    let p = dir.path().join("p.arcs");
    vizdom(&["product", "cart", "cycle:3", fam.to_str().unwrap(), "--out", p.to_str().unwrap()]);
    let r = invariants(&["invariants", p.to_str().unwrap(), "--no-timing"]);
    assert_eq!(r["gamma"]["value"], 5);

    let text = stdout(&vizdom(&["family", "Hm:3"]));
    fs::write(dir.path().join("again.arcs"), &text).unwrap();
    let again = stdout(&vizdom(&["product", "cart", dir.path().join("again.arcs").to_str().unwrap(), "arcless:1"]));
    assert_eq!(
        text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>(),
        again.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>()
    );
    assert_eq!(vizdom(&["family", "nope:1"]).status.code(), Some(2));
}

#[test]
fn verify_default_suite_passes_and_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let out = vizdom(&["verify", "--no-timing", "--jobs", jobs, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    for line in text.lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        assert!(rec["claim"].is_string() && rec["verdict"].is_string());
    }
}

#[test]
fn verify_custom_config_and_malformed_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.cfg");
    fs::write(&cfg, "# ditrees on four vertices\ncheck = packing-equals-domination enum-ditrees:4\n").unwrap();
    let out = stdout(&vizdom(&["verify", cfg.to_str().unwrap(), "--no-timing"]));
    assert_eq!(out.lines().count(), 432);
    assert!(out.lines().all(|l| l.contains("\"verdict\":\"holds\"")));

    // Records stream to --out by appending.
    let log = dir.path().join("log.jsonl");
    for _ in 0..2 {
        vizdom(&["verify", cfg.to_str().unwrap(), "--no-timing", "--out", log.to_str().unwrap()]);
    }
    assert_eq!(fs::read_to_string(&log).unwrap().lines().count(), 864);

    fs::write(&cfg, "check = no-such-claim family:path:3\n").unwrap();
    assert_eq!(vizdom(&["verify", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_reports_expected_failures_without_failing() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.cfg");
    fs::write(&cfg, "check = vizing-inequality family:cycle:3 family:chorded-pentagon\n").unwrap();
    let out = stdout(&vizdom(&["verify", cfg.to_str().unwrap(), "--no-timing"]));
    let rec: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!((rec["verdict"].as_str(), rec["lhs"].as_i64(), rec["rhs"].as_i64()), (Some("fails"), Some(5), Some(6)));
}

#[test]
fn seeds_reproduce_random_suites() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("suite.cfg");
    fs::write(&cfg, "check = meir-moon random-trees:n=5..9,count=20\n").unwrap();
    let run = |seed: &str| stdout(&vizdom(&["verify", cfg.to_str().unwrap(), "--no-timing", "--seed", seed]));
    assert_eq!(run("7"), run("7"));
    assert_ne!(run("7"), run("8"));
}

#[test]
fn search_acyclic_counts() {
    let out = vizdom(&["search-acyclic", "--max-n", "4", "--budget", "10", "--no-timing"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 3 + 25 + 543 + 10);
    assert!(String::from_utf8_lossy(&out.stderr).contains("582 acyclic digraphs"));
}
