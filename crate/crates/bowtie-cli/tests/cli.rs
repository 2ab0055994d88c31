//! End-to-end runs of the binary against the fixture files: the exit-status
//! contract, machine output shape, and byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .expect("crates/bowtie-cli sits two levels down")
        .to_path_buf()
}

fn bowtie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bowtie"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn a_passing_suite_exits_zero() {
    let out = bowtie(&["ndframe", "verify", "fixtures/twist2.nd"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn a_failing_check_exits_one_with_its_witness() {
    let out = bowtie(&["lattice", "check", "fixtures/m3.lat", "--distributive"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  distributivity"), "{text}");
    assert!(text.contains("(a, b, c)"), "witness triple missing: {text}");
}

#[test]
fn the_same_lattice_passes_without_the_flag() {
    let out = bowtie(&["lattice", "check", "fixtures/m3.lat"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn a_missing_file_is_a_usage_error() {
    let out = bowtie(&["dframe", "check", "fixtures/ghost.df"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn an_unknown_connective_is_a_usage_error() {
    let out = bowtie(&["chu", "table", "fixtures/square.lat", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn the_fixtures_flag_resolves_bare_names() {
    let out = bowtie(&["--fixtures", "fixtures", "lattice", "check", "m3.lat"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn machine_output_is_tab_separated() {
    let out = bowtie(&["--machine", "dframe", "check", "fixtures/twist2.nd"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 3, "bad machine line: {line}");
        assert!(matches!(fields[1], "pass" | "fail" | "note"), "{line}");
    }
}

#[test]
fn output_is_byte_deterministic() {
    let once = bowtie(&["--machine", "chu", "verify", "fixtures/square.lat"]);
    let twice = bowtie(&["--machine", "chu", "verify", "fixtures/square.lat"]);
    assert_eq!(once.stdout, twice.stdout);
    assert_eq!(once.status.code(), Some(0));
}

#[test]
fn the_broken_frame_fails_naming_the_first_axiom() {
    let out = bowtie(&["--machine", "dframe", "check", "fixtures/twist2-broken.df"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text
        .lines()
        .filter(|l| l.split('\t').nth(1) == Some("fail"))
        .collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert!(failing[0].starts_with("axiom1-con"), "{text}");
}

#[test]
fn subtype_queries_answer_through_the_exit_status() {
    let holds = bowtie(&["blame", "subtype", "standard", "int", "dyn"]);
    assert_eq!(holds.status.code(), Some(0));
    let fails = bowtie(&["blame", "subtype", "standard", "dyn", "int"]);
    assert_eq!(fails.status.code(), Some(1));
    let negative = bowtie(&["blame", "subtype", "negative", "dyn", "int"]);
    assert_eq!(negative.status.code(), Some(0));
}

#[test]
fn refinement_blame_is_reported_but_is_not_a_failure() {
    let out = bowtie(&["blame", "eval", "fixtures/reject.term"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("positive blame on p"));

    let out = bowtie(&["blame", "eval", "fixtures/accept.term"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("value 1"));

    let out = bowtie(&["blame", "eval", "fixtures/context.term"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("negative blame on p"));
}

#[test]
fn blame_verify_at_depth_one_passes() {
    let out = bowtie(&["blame", "verify", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn conflicting_puts_reach_top_in_every_interleaving() {
    let out = bowtie(&["lvar", "simulate", "fixtures/conflict35.sched", "--all-interleavings"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let runs: Vec<&str> = text.lines().filter(|l| l.contains("run ")).collect();
    assert_eq!(runs.len(), 2);
    assert!(runs.iter().all(|l| l.contains("final=top conflicted=true")), "{text}");

    let verify = bowtie(&["lvar", "verify", "fixtures/conflict35.sched"]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn the_threshold_schedule_is_deterministic() {
    let out = bowtie(&["lvar", "verify", "fixtures/threshold.sched"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("final-value: 3"));
}

#[test]
fn injection_frames_verify_and_round_trip() {
    for fixture in [
        "fixtures/inj-two-three.nd",
        "fixtures/inj-two-square.nd",
        "fixtures/inj-three-four.nd",
    ] {
        let verify = bowtie(&["ndframe", "verify", fixture]);
        assert_eq!(verify.status.code(), Some(0), "{fixture}: {}", stdout(&verify));
        let roundtrip = bowtie(&["partial", "roundtrip", fixture]);
        assert_eq!(roundtrip.status.code(), Some(0), "{fixture}: {}", stdout(&roundtrip));
    }
}

#[test]
fn twist_tables_include_negation_only_for_symmetric_products() {
    let symmetric = bowtie(&["twist", "fixtures/two.lat"]);
    assert!(stdout(&symmetric).contains("info  not:"));

    let asymmetric = bowtie(&["twist", "fixtures/inj-two-three.nd"]);
    assert_eq!(asymmetric.status.code(), Some(0));
    assert!(!stdout(&asymmetric).contains("info  not:"));
}

#[test]
fn represent_recovers_a_component_lattice() {
    let out = bowtie(&["represent", "fixtures/square.lat"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("round-trip-isomorphic"));
}
