//! End-to-end tests of the command-line surface: verbs, grammars,
//! formats and exit codes.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chromatic-hopf"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn graphs_counts_and_formats() {
    let out = run(&["graphs", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("5 graphs (Catalan(3) = 5)"));
    assert!(text.contains("D3:h=233 edges=1-2,2-3 diagram=(1)@3"));

    let out = run(&["graphs", "--n", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1 graphs (Catalan(0) = 1)"));

    let out = run(&["graphs", "--n", "5", "--format", "json"]);
    assert!(out.status.success());
    let records: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 42);
    assert_eq!(records[0]["n"], 5);
}

#[test]
fn graphs_out_of_range_is_usage_error() {
    let out = run(&["graphs", "--n", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn expand_reference_outputs() {
    let out = run(&["expand", "--graph", "h:2,2", "--target", "X:wqsym-M"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "t*M[12] + M[21]");

    let out = run(&["expand", "--graph", "h:1,2", "--target", "X:wqsym-M"]);
    assert_eq!(stdout(&out).trim(), "M[11] + M[12] + M[21]");

    let out = run(&["expand", "--graph", "h:1", "--target", "LLT:wqsym-M"]);
    assert_eq!(stdout(&out).trim(), "M[1]");

    // the six-term Phi expansion of the single-edge graph
    let out = run(&["expand", "--graph", "h:2,2,3", "--target", "X:wqsym-Phi"]);
    let text = stdout(&out);
    assert_eq!(text.matches("Phi[").count(), 6);
    for term in ["t*Phi[121]", "t*Phi[122]", "Phi[211]", "Phi[212]", "t*Phi[231]", "Phi[321]"] {
        assert!(text.contains(term), "missing {} in {}", term, text);
    }

    // edge-list grammar agrees with the Hessenberg grammar
    let a = run(&["expand", "--graph", "e:3;1-2,2-3", "--target", "X:qsym-M"]);
    let b = run(&["expand", "--graph", "h:2,3,3", "--target", "X:qsym-M"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn expand_rejects_bad_input() {
    assert_eq!(run(&["expand", "--graph", "h:3,2", "--target", "X:wqsym-M"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--graph", "h:2,2", "--target", "X:nope"]).status.code(), Some(2));
    // Phi targets need interval-closed graphs
    let out = run(&["expand", "--graph", "e:3;1-3", "--target", "X:wqsym-Phi"]);
    assert_eq!(out.status.code(), Some(2));
    // but the chromatic function itself accepts general labeled graphs
    let out = run(&["expand", "--graph", "e:3;1-3", "--target", "X:wqsym-M"]);
    assert!(out.status.success());
}

#[test]
fn expand_json_round_trips_through_transform() {
    let out = run(&["expand", "--graph", "h:2,2", "--target", "X:qsym-M", "--json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["basis"], "QSym.M");

    let dir = std::env::temp_dir().join("chromatic-hopf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("element.json");
    std::fs::write(&path, stdout(&out).trim()).unwrap();

    let out = run(&["transform", "--alphabet", "t-1", "--input", path.to_str().unwrap()]);
    assert!(out.status.success());

    // transforming M_(1) by t-1 scales it
    let m1 = r#"{"basis":"QSym.M","terms":[{"key":[1],"coeff":{"num":["1"],"den":["1"]}}]}"#;
    let path1 = dir.join("m1.json");
    std::fs::write(&path1, m1).unwrap();
    let out = run(&["transform", "--alphabet", "t-1", "--input", path1.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "(t - 1)*M[(1)]");

    // unknown alphabet and non-transformable basis are usage errors
    let out = run(&["transform", "--alphabet", "2-t", "--input", path1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let f = r#"{"basis":"QSym.F","terms":[{"key":[1],"coeff":{"num":["1"],"den":["1"]}}]}"#;
    let pathf = dir.join("f.json");
    std::fs::write(&pathf, f).unwrap();
    let out = run(&["transform", "--alphabet", "t-1", "--input", pathf.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = run(&["verify", "--identity", "rank", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rank 14 = Catalan 14"));
    assert!(text.contains("=> PASS"));

    let out = run(&["verify", "--identity", "mahonian", "--n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("42 graphs x 120 permutations"));

    assert_eq!(run(&["verify", "--identity", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_respects_resource_ceiling() {
    let out = bin()
        .args(["verify", "--identity", "rank", "--n", "5"])
        .env("CHROMATIC_HOPF_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("truncated at n = 3"));
}

#[test]
fn stats_tables() {
    let out = run(&["stats", "--graph", "h:2,3,5,5,5", "--statistic", "st", "--perm", "35142"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("35142\t2\t6\t8"));

    let out = run(&[
        "stats", "--graph", "h:2,3,5,5,5", "--statistic", "st", "--perm", "35142", "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out).trim(), "perm,inv,maj,st\n35142,2,6,8");

    let out = run(&[
        "stats", "--graph", "h:2,4,4,6,6,6", "--statistic", "increments", "--perm", "52314",
    ]);
    assert!(stdout(&out).contains("^4 5 ^3 2 ^5 3 ^2 1 ^1 4 ^0"));

    // full table over S_3 in CSV
    let out = run(&["stats", "--graph", "h:2,2,3", "--statistic", "code", "--format", "csv"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);

    assert_eq!(
        run(&["stats", "--graph", "h:2,2", "--statistic", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["stats", "--graph", "h:2,2", "--statistic", "st", "--perm", "123"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_idempotent_output() {
    let a = run(&["verify", "--identity", "mt", "--n", "4"]);
    let b = run(&["verify", "--identity", "mt", "--n", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(a.status.success());
}
