//! End-to-end tests of the command-line interface.

use std::process::Command;

fn sextic(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.success(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn enumerate_summary_line() {
    let (ok, stdout, _) = sextic(&["enumerate", "--format", "csv"]);
    assert!(ok);
    assert!(stdout.contains("93 classes / 71 sets / 53 irreducible / 40 reducible"));
    // one CSV line per row plus the header and the summary
    assert_eq!(
        stdout
            .lines()
            .filter(|l| l.starts_with("T1-") || l.starts_with("T2-"))
            .count(),
        80
    );
}

#[test]
fn enumerate_json_round_trips() {
    let dir = std::env::temp_dir().join("sextic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("catalog.json");
    let (ok, stdout, _) = sextic(&[
        "enumerate",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(ok);
    assert!(stdout.contains("93 classes"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["schema"], "1.0");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 80);
    let total: usize = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["classes"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 93);
}

#[test]
fn enumerate_reduced_run() {
    // Small-vertex budgets still reach Milnor number 19 through extra E6
    // or D fibers (the three-E6 row and the two-D rows); strictly fewer
    // classes than the full run.
    let (ok, stdout, _) = sextic(&["enumerate", "--max-vertices", "4", "--format", "csv"]);
    assert!(ok);
    assert!(stdout.contains("4 accepted classes"));
    assert!(stdout.contains("3E6+A1"));
    let (ok, stdout, _) = sextic(&["enumerate", "--max-vertices", "2", "--format", "csv"]);
    assert!(ok);
    assert!(stdout.contains("1 accepted classes"));
}

#[test]
fn group_quotient_7680() {
    let (ok, stdout, _) = sextic(&["group", "T1-09", "--quotient", "a1^5"]);
    assert!(ok, "{}", stdout);
    assert!(stdout.contains("order 7680"));
    assert!(stdout.contains("perfect"));
}

#[test]
fn group_external_row_is_explained() {
    let (ok, _, stderr) = sextic(&["group", "T1-01"]);
    assert!(!ok);
    assert!(stderr.contains("cited literature"));
}

#[test]
fn group_commutant_certificate() {
    let (ok, stdout, _) = sextic(&["group", "T1-13", "--free-certificate"]);
    assert!(ok);
    assert!(stdout.contains("free of rank 2"));
}

#[test]
fn alexander_published_pairs() {
    let (ok, stdout, _) = sextic(&["alexander", "T2-22'"]);
    assert!(ok);
    assert!(stdout.contains("t a = (1) a"));
    assert!(stdout.contains("s^6 - s^5 + s^3 - s + 1"));

    let (ok, stdout, _) = sextic(&["alexander", "T2-24'"]);
    assert!(ok);
    assert!(stdout.contains("1 + s^-4"));
    assert!(stdout.contains("s^2 - s + 1"));

    let (ok, stdout, _) = sextic(&["alexander", "T2-37'"]);
    assert!(ok);
    assert!(stdout.contains("t a = (1) a"));

    let (ok, _, stderr) = sextic(&["alexander", "T1-09"]);
    assert!(!ok);
    assert!(stderr.contains("two linear components"));
}

#[test]
fn perturb_order_six() {
    let (ok, stdout, _) = sextic(&["perturb", "T1-05", "--point", "A4", "--target", "full"]);
    assert!(ok);
    assert!(stdout.contains("order: 6"));
}

#[test]
fn perturb_inadmissible_is_explained() {
    let (ok, _, stderr) = sextic(&["perturb", "T1-05", "--point", "A4", "--target", "s=4"]);
    assert!(!ok);
    assert!(stderr.contains("divisor"));
}

#[test]
fn tables_render() {
    let (ok, stdout, _) = sextic(&["tables", "--format", "csv"]);
    assert!(ok);
    assert_eq!(stdout.lines().count(), 81); // header + 80 rows
    let (ok, stdout, _) = sextic(&["tables", "--format", "md"]);
    assert!(ok);
    assert!(stdout.contains("| T1-09 |"));
}

#[test]
fn verify_tables_section() {
    let (ok, stdout, _) = sextic(&["verify", "tables"]);
    assert!(ok, "{}", stdout);
    assert!(stdout.contains("PASS"));
    assert!(!stdout.contains("FAIL"));
}
