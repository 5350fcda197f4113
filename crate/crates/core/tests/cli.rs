use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn game(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("games")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimatrix"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &[u8]) -> Value {
    serde_json::from_slice(out).expect("valid JSON")
}

#[test]
fn solve_stackelberg_on_commitment_example() {
    let out = run(&["solve", "--concept", "stackelberg", &game("commitment_example.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["value"], "5/2");
    assert_eq!(v["strategy"], serde_json::json!(["1/2", "1/2"]));
    assert_eq!(v["response"], "R");
    assert_eq!(v["per_response"], serde_json::json!(["1", "5/2"]));
}

#[test]
fn every_concept_answers() {
    let expected = [
        ("maximin", "1"),
        ("pure-commit", "2"),
        ("stackelberg", "5/2"),
        ("stackelberg-single-lp", "5/2"),
        ("ce-max-leader", "1"),
        ("nash", "1"),
        ("dominance", "1"),
    ];
    for (concept, value) in expected {
        let out = run(&["solve", "--concept", concept, &game("commitment_example.json")]);
        assert_eq!(out.status.code(), Some(0), "{concept}");
        assert_eq!(json(&out.stdout)["value"], value, "{concept}");
    }
}

#[test]
fn column_player_can_lead() {
    let out = run(&["solve", "--concept", "stackelberg", "--leader", "2", &game("commitment_example.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["leader"], 2);
    assert_eq!(v["value"], "1");
}

#[test]
fn compare_reports_checks() {
    let out = run(&["compare", &game("matching_pennies.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    for key in ["maximin_value", "stackelberg_value", "ce_max_leader_value"] {
        assert_eq!(v[key], "0", "{key}");
    }
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["holds"] == true));
    assert!(checks.iter().any(|c| c["claim"].as_str().unwrap().starts_with("constant-sum")));
}

#[test]
fn discretize_adversarial_grid() {
    let out = run(&[
        "discretize",
        "--resolution",
        "100",
        "--tie-break",
        "adversarial",
        &game("commitment_example.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out.stdout);
    assert_eq!(v["value"], "249/100");
    assert_eq!(v["best_strategy"], serde_json::json!(["49/100", "51/100"]));
    assert_eq!(v["grid_count"], "101");
}

#[test]
fn discretize_over_budget() {
    let out = run(&[
        "discretize",
        "--resolution",
        "1000",
        "--tie-break",
        "leader-favorable",
        "--budget",
        "10",
        &game("rock_paper_scissors.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stderr)["error"], "budget_exceeded");
}

#[test]
fn count_is_exact_for_huge_grids() {
    let out = run(&["count", "--pure", "3", "--resolution", "10"]);
    assert_eq!(json(&out.stdout)["grid_count"], "66");
    let out = run(&["count", "--pure", "40", "--resolution", "1000000"]);
    assert_eq!(out.status.code(), Some(0));
    let digits = json(&out.stdout)["grid_count"].as_str().unwrap().to_string();
    assert!(digits.len() > 150 && digits.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn errors_are_structured() {
    let missing = run(&["solve", "--concept", "nash", "no/such/game.json"]);
    assert_eq!(missing.status.code(), Some(1));
    assert_eq!(json(&missing.stderr)["error"], "file_not_found");
    assert!(missing.stdout.is_empty());

    let concept = run(&["solve", "--concept", "bogus", &game("commitment_example.json")]);
    assert_eq!(concept.status.code(), Some(1));
    assert_eq!(json(&concept.stderr)["error"], "unknown_concept");

    let leader = run(&["solve", "--concept", "nash", "--leader", "3", &game("commitment_example.json")]);
    assert_eq!(leader.status.code(), Some(1));

    let dir = std::env::temp_dir().join(format!("bimatrix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"row_labels": ["a"], "col_labels": ["b"], "payoffs": [[[1, "x/0"]]]}"#).unwrap();
    let out = run(&["solve", "--concept", "maximin", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = json(&out.stderr);
    assert_eq!(err["error"], "malformed_numeral");
    assert_eq!(err["location"], "payoffs[0][0][1]");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["solve", "--concept", "nash", "battle_of_the_sexes.json"],
        vec!["solve", "--concept", "stackelberg-single-lp", "security_patrol.json"],
        vec!["compare", "prisoners_dilemma.json"],
    ] {
        let path = game(args[args.len() - 1]);
        let mut full: Vec<&str> = args[..args.len() - 1].to_vec();
        full.push(&path);
        let first = run(&full);
        let second = run(&full);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn help_succeeds() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("solve"));
}
