//! End-to-end checks of the kended binary: output formats, exit codes, and
//! the environment override for the witness-enumeration guard.

use std::process::{Command, Output};

fn kended(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kended"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn tk_on_family() {
    let out = kended(&[
        "tk",
        "--family",
        "g1",
        "--fk",
        "2",
        "--flambda",
        "2",
        "--k",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");
}

#[test]
fn profile_on_graph6() {
    let out = kended(&["profile", "--graph6", "Bw", "--kmax", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[3, 3]\n");
}

#[test]
fn verify_enumerated_corpus() {
    let out = kended(&["verify", "--enumerate", "4", "--kmax", "3", "--lmax", "3"]);
    assert!(out.status.success(), "exit must be 0 with zero violations");
    let text = stdout(&out);
    assert!(text.contains("38 checked"), "{text}");
    assert!(text.contains("violations:  0"), "{text}");
}

#[test]
fn verify_json_is_deterministic() {
    let run = || {
        let out = kended(&[
            "verify",
            "--enumerate",
            "3",
            "--kmax",
            "2",
            "--lmax",
            "2",
            "--format",
            "json",
        ]);
        assert!(out.status.success());
        let mut v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        v["elapsed_ms"] = 0.into();
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn verify_json_field_order() {
    let out = kended(&["verify", "--enumerate", "3", "--format", "json"]);
    let text = stdout(&out);
    let corpus_pos = text.find("\"corpus\"").unwrap();
    let instances_pos = text.find("\"instances\"").unwrap();
    let violations_pos = text.find("\"violations\"").unwrap();
    let sharpness_pos = text.find("\"sharpness\"").unwrap();
    let elapsed_pos = text.find("\"elapsed_ms\"").unwrap();
    assert!(corpus_pos < instances_pos);
    assert!(instances_pos < violations_pos);
    assert!(violations_pos < sharpness_pos);
    assert!(sharpness_pos < elapsed_pos);
}

#[test]
fn verify_respects_theorem_subset_and_jobs() {
    let out = kended(&[
        "verify",
        "--enumerate",
        "4",
        "--theorems",
        "thm1,cor2",
        "--jobs",
        "2",
    ]);
    assert!(out.status.success());
    // thm1 has 6 (k, lambda) bindings and cor2 has 2, over 38 graphs
    assert!(stdout(&out).contains("304 evaluated"), "{}", stdout(&out));
}

#[test]
fn gen_emits_graph6_lines() {
    let out = kended(&["gen", "--family", "krr", "--fr", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);

    let out = kended(&["gen", "--enumerate", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
}

#[test]
fn corpus_file_round_trips_through_verify() {
    let dir = std::env::temp_dir().join(format!("kended-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("corpus.g6");

    let gen = kended(&["gen", "--enumerate", "4"]);
    std::fs::write(&corpus, gen.stdout).unwrap();

    let out = kended(&[
        "verify",
        "--corpus",
        corpus.to_str().unwrap(),
        "--kmax",
        "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("38 checked"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn source_precedence_graph6_over_family() {
    // both sources given: --graph6 wins (K_3 rather than the 7-vertex g1)
    let out = kended(&[
        "tk",
        "--graph6",
        "Bw",
        "--family",
        "g1",
        "--fk",
        "2",
        "--flambda",
        "2",
        "--k",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn report_written_to_output_path() {
    let dir = std::env::temp_dir().join(format!("kended-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = kended(&[
        "verify",
        "--enumerate",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn replay_reports_tree_counts() {
    let out = kended(&[
        "replay",
        "--family",
        "g1",
        "--fk",
        "2",
        "--flambda",
        "2",
        "--k",
        "2",
        "--lambda",
        "2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("8 maximum 3-ended trees checked, claims 1-3 ok"));
}

#[test]
fn sharpness_subcommand() {
    let out = kended(&["sharpness", "--kmax", "3", "--lmax", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));
}

#[test]
fn usage_errors_exit_2() {
    // malformed graph6
    let out = kended(&["tk", "--graph6", "B", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));

    // no source at all
    let out = kended(&["tk", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // unknown flag (clap's own usage error)
    let out = kended(&["tk", "--nope"]);
    assert_eq!(out.status.code(), Some(2));

    // disconnected input
    let out = kended(&["tk", "--graph6", "C?", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_lifts_enumeration_guard() {
    // star on 11 vertices: t_2 = 3 <= t_3 - 1, so the replay wants to
    // enumerate maximum trees and trips the default order guard
    let gen = kended(&["gen", "--family", "star", "--fq", "11"]);
    let g6 = stdout(&gen).trim().to_string();

    let out = kended(&["replay", "--graph6", &g6, "--k", "2", "--lambda", "1"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "default guard must reject n = 11"
    );

    let out = Command::new(env!("CARGO_BIN_EXE_kended"))
        .args(["replay", "--graph6", &g6, "--k", "2", "--lambda", "1"])
        .env("KENDED_MAX_N", "11")
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("claims 1-3 ok"));
}
