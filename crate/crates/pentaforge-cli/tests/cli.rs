//! End-to-end tests against the built binary: command surface, exit
//! codes, output formats, and file round-trips.

use std::path::Path;
use std::process::{Command, Output};

use pentaforge::construct::rgdd_from_mols;
use pentaforge::io::{DesignFile, Kind};

fn pentaforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentaforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn catalog_list_counts() {
    let out = pentaforge(&["catalog", "list"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 51);

    let out = pentaforge(&["catalog", "list", "--kind", "gdd"]);
    assert_eq!(stdout(&out).lines().count(), 7);

    let out = pentaforge(&["catalog", "list", "--k", "5", "--kind", "pent"]);
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn catalog_show_and_emit() {
    let out = pentaforge(&["catalog", "show", "PENT-4-13"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("girth 6"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p13.txt");
    let out = pentaforge(&["catalog", "emit", "PENT-4-13", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let piped = pentaforge(&["catalog", "emit", "PENT-4-13"]);
    assert_eq!(stdout(&piped), text);

    // The emitted file is a developed design that feeds straight back in.
    assert!(text.starts_with("DESIGN v=44 kind=PENT"));
    let out = pentaforge(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let raw = pentaforge(&["catalog", "emit", "PENT-4-13", "--raw"]);
    assert!(stdout(&raw).contains("AUT "));
    assert!(stdout(&raw).contains("BASE"));

    let out = pentaforge(&["catalog", "show", "NO-SUCH-ID"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_catalog_entry_reports_girth() {
    let out = pentaforge(&["verify", "PENT-4-13"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("girth=6"));

    let json = pentaforge(&["verify", "PENT-4-13", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["valid"], true);
    assert_eq!(value["girth"], 6);
    assert_eq!(value["olp_count"], 0);
    assert_eq!(value["b"], 143);
}

#[test]
fn verify_rejects_broken_design_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupted.design");
    std::fs::write(
        &path,
        "DESIGN v=5 kind=PENT\nK=2 R=2\nBLOCKS\n0 1\n1 2\n2 3\n3 4\n0 3\n",
    )
    .unwrap();
    let out = pentaforge(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn usage_errors_exit_1() {
    let out = pentaforge(&["verify", "--bogus"]);
    assert_eq!(code(&out), 1);
    let out = pentaforge(&["no-such-command"]);
    assert_eq!(code(&out), 1);
    let out = pentaforge(&["--help"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn missing_ingredient_exits_3() {
    let out = pentaforge(&["construct", "inflate", "--in", "GDD5-2^35", "--h", "6"]);
    assert_eq!(code(&out), 3);
    let out = pentaforge(&["construct", "td", "--k", "5", "--q", "6"]);
    assert_eq!(code(&out), 3);
}

fn written_file_round_trips(path: &Path) {
    let text = std::fs::read_to_string(path).unwrap();
    let parsed = DesignFile::parse(&text).unwrap();
    assert_eq!(parsed.format(), text);
}

#[test]
fn construct_pent3_writes_verifiable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p33.design");
    let out = pentaforge(&["construct", "pent3", "--m", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("r=33"));
    written_file_round_trips(&path);

    let out = pentaforge(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn inflate_then_overlay_builds_the_350_point_geometry() {
    let dir = tempfile::tempdir().unwrap();
    let gdd_path = dir.path().join("g.design");
    let out = pentaforge(&[
        "construct",
        "inflate",
        "--in",
        "GDD5-2^35",
        "--h",
        "5",
        "-o",
        gdd_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    written_file_round_trips(&gdd_path);

    let pent_path = dir.path().join("p.design");
    let out = pentaforge(&[
        "construct",
        "overlay",
        "--gdd",
        gdd_path.to_str().unwrap(),
        "--filler",
        "10=degenerate",
        "-o",
        pent_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["r"], 86);
    assert_eq!(value["olp_count"], 35);
    written_file_round_trips(&pent_path);
}

#[test]
fn overlay_with_missing_filler_size_exits_3() {
    // Type 10^10 18^1: the 18-point group has no filler supplied.
    let out = pentaforge(&[
        "construct",
        "overlay",
        "--gdd",
        "GDD5-10^10 18^1",
        "--filler",
        "10=degenerate",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn rgdd5_paths_agree() {
    let built = pentaforge(&["construct", "rgdd5", "--q", "5"]);
    assert_eq!(code(&built), 0);
    let from_q = DesignFile::parse(&stdout(&built)).unwrap();
    assert_eq!(from_q.design.v(), 25);
    assert_eq!(from_q.groups.as_ref().unwrap().len(), 5);

    // The same conversion applied to an RGDD file, classes written as
    // contiguous runs.
    let rgdd = rgdd_from_mols(4, 5).unwrap();
    let mut blocks = Vec::new();
    for class in &rgdd.classes {
        for &b in class {
            blocks.push(rgdd.gdd.design.blocks()[b].clone());
        }
    }
    let file = DesignFile {
        kind: Kind::Rgdd,
        design: pentaforge::Design::new(rgdd.gdd.design.v(), blocks).unwrap(),
        k: Some(4),
        r: None,
        groups: Some(rgdd.gdd.groups.clone()),
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.design");
    file.write(&path).unwrap();

    let out = pentaforge(&["construct", "rgdd5", "--in", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let from_file = DesignFile::parse(&stdout(&out)).unwrap();
    assert_eq!(from_file.design.v(), 25);
    assert_eq!(from_file.design.block_count(), from_q.design.block_count());

    // Neither or both sources is a usage error.
    let out = pentaforge(&["construct", "rgdd5"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn mset_matches_library_values() {
    let out = pentaforge(&["construct", "mset", "--family", "40", "--g", "2", "--q", "43"]);
    assert_eq!(code(&out), 0);
    let values: Vec<usize> = stdout(&out).lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values.first(), Some(&86));
    assert_eq!(values.last(), Some(&1118));
    assert!(values.contains(&1046));
    assert!(!values.contains(&1042));

    let out = pentaforge(&["construct", "mset", "--family", "10", "--g", "10", "--q", "43"]);
    let values: Vec<usize> = stdout(&out).lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values.first(), Some(&430));
    assert_eq!(values.last(), Some(&1290));
}

#[test]
fn spectrum_status_text_and_json() {
    let out = pentaforge(&["spectrum", "status", "--k", "4", "--r", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("nonexistent"));

    let out = pentaforge(&["spectrum", "status", "--k", "3", "--r", "7"]);
    let text = stdout(&out);
    assert!(text.contains("any: exists"));
    assert!(text.contains("no-olp: nonexistent"));

    let out = pentaforge(&["spectrum", "status", "--k", "5", "--r", "86", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["any"]["status"], "exists");
    assert_eq!(value["admissible"], true);
}

#[test]
fn spectrum_replay_tables_all_pass() {
    let out = pentaforge(&["spectrum", "replay-tables"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.starts_with("PASS")));

    let out = pentaforge(&["spectrum", "replay-tables", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 12);
}

#[test]
fn spectrum_plan53_reproduces_worked_row() {
    let out = pentaforge(&[
        "spectrum", "plan53", "--g", "2", "--u", "40", "--q", "43", "--r0", "20",
    ]);
    assert_eq!(code(&out), 0);
    let values: Vec<usize> = stdout(&out).lines().map(|l| l.parse().unwrap()).collect();
    assert!(values.contains(&880) && values.contains(&1066));

    let out = pentaforge(&[
        "spectrum", "plan53", "--g", "2", "--u", "40", "--q", "44", "--r0", "21",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn diffcensus_lists_every_class_once() {
    let out = pentaforge(&["diffcensus", "--m", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 69);
    let mut sorted = lines.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 69);
}

#[test]
fn worker_count_does_not_change_output() {
    let one = pentaforge(&["verify", "--all-catalog", "--jobs", "1"]);
    let four = pentaforge(&["verify", "--all-catalog", "--jobs", "4"]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));

    let env = Command::new(env!("CARGO_BIN_EXE_pentaforge"))
        .args(["verify", "--all-catalog"])
        .env("PENTAFORGE_JOBS", "2")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&env), stdout(&one));
}
