//! End-to-end tests of the `topolab` binary.

use std::io::Read;
use std::path::Path;
use std::process::{Command, Output};

fn topolab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topolab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_poly_check_flow() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "discrete3.json",
        r#"{"n":3,"opens":[7,0,1,2,4,3,5,6]}"#,
    );

    let out = topolab(&["validate", "--in", &file], dir.path());
    assert_eq!(code(&out), 0);
    let normalized: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(normalized["opens"].as_array().unwrap().len(), 8);

    let out = topolab(&["poly", "--in", &file], dir.path());
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), r#"["1","3","3","1"]"#);

    let out = topolab(&["poly", "--in", &file, "--format", "text"], dir.path());
    assert_eq!(stdout(&out).trim(), "1 3 3 1");
}

#[test]
fn check_reports_the_documented_properties() {
    let dir = tempfile::tempdir().unwrap();
    // partition topology of type (1,2) on five points
    let out = topolab(
        &["construct", "--partition", "1,2", "--out", "t.json"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);

    let out = topolab(
        &[
            "check",
            "--in",
            "t.json",
            "--props",
            "unimodal,log-concave,newton,real-rooted",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["unimodal"], true);
    assert_eq!(doc["log-concave"], false);
    assert_eq!(doc["newton"], false);
    assert_eq!(doc["real-rooted"], false);
}

#[test]
fn construct_output_feeds_validate() {
    let dir = tempfile::tempdir().unwrap();
    for (key, n, param) in [
        ("tau1-P1", 5, None),
        ("nm1-singletons", 6, Some("2")),
        ("nm2-h", 6, None),
        ("counterexample", 7, None),
    ] {
        let mut args = vec!["construct", "--family", key, "--n"];
        let n_s = n.to_string();
        args.push(&n_s);
        if let Some(p) = param {
            args.extend(["--l", p]);
        }
        args.extend(["--out", "fam.json"]);
        let out = topolab(&args, dir.path());
        assert_eq!(code(&out), 0, "{key}: {}", String::from_utf8_lossy(&out.stderr));
        let report: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(report["card_match"], true, "{key}");

        let out = topolab(&["validate", "--in", "fam.json"], dir.path());
        assert_eq!(code(&out), 0, "constructed {key} must validate");
    }
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    // unparseable file: 65
    let garbage = write(dir.path(), "garbage.json", "not json at all");
    let out = topolab(&["poly", "--in", &garbage], dir.path());
    assert_eq!(code(&out), 65);

    // missing file: 65
    let out = topolab(&["poly", "--in", "nope.json"], dir.path());
    assert_eq!(code(&out), 65);

    // invalid topology surfaces as domain outcome: 1
    let open_missing = write(dir.path(), "bad.json", r#"{"n":3,"opens":[0,1,2,7]}"#);
    let out = topolab(&["validate", "--in", &open_missing], dir.path());
    assert_eq!(code(&out), 1);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["valid"], false);

    // usage errors: 64
    let out = topolab(&["construct"], dir.path());
    assert_eq!(code(&out), 64);
    let out = topolab(&["enumerate", "--n", "3", "--threads", "0"], dir.path());
    assert_eq!(code(&out), 64);
    let out = topolab(&["verify", "--n-max", "3"], dir.path());
    assert_eq!(code(&out), 64);
    let out = topolab(&["no-such-subcommand"], dir.path());
    assert_eq!(code(&out), 64);

    // domain errors: 1
    let out = topolab(
        &["construct", "--family", "no-such-family", "--n", "5"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
    let out = topolab(&["enumerate", "--n", "9"], dir.path());
    assert_eq!(code(&out), 1);
    let out = topolab(
        &["enumerate", "--n", "5", "--strategy", "closure"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
}

#[test]
fn enumerate_jsonl_stats_and_gzip() {
    let dir = tempfile::tempdir().unwrap();
    let out = topolab(
        &[
            "enumerate",
            "--n",
            "3",
            "--strategy",
            "both",
            "--stats",
            "stats.json",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 29);
    for line in &lines {
        let doc: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["n"], 3);
    }
    let stats: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("stats.json")).unwrap())
            .unwrap();
    assert_eq!(stats["total"], 29);
    assert_eq!(stats["by_cardinality"]["2"], 1);
    assert_eq!(stats["by_cardinality"]["8"], 1);

    // gzip output round-trips
    let out = topolab(
        &["enumerate", "--n", "3", "--out", "all.jsonl.gz"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let file = std::fs::File::open(dir.path().join("all.jsonl.gz")).unwrap();
    let mut text = String::new();
    flate2::read::GzDecoder::new(file)
        .read_to_string(&mut text)
        .unwrap();
    assert_eq!(text.lines().count(), 29);

    // filters compose
    let out = topolab(
        &["enumerate", "--n", "4", "--t0", "--threads", "2"],
        dir.path(),
    );
    assert_eq!(stdout(&out).lines().count(), 219);
    let out = topolab(&["enumerate", "--n", "4", "--iso"], dir.path());
    assert_eq!(stdout(&out).lines().count(), 33);
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    let out = topolab(
        &["verify", "--theorem", "cotopology-partition", "--n-max", "4"],
        dir.path(),
    );
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(reports[0]["verdict"], "verified");
    assert_eq!(reports[0]["checked_count"], 389);

    // the genuine refutation at n = 4 drives exit code 2
    let out = topolab(
        &[
            "verify",
            "--theorem",
            "unimodal-above-6x2n4",
            "--n-max",
            "4",
            "--json",
            "report.json",
        ],
        dir.path(),
    );
    assert_eq!(code(&out), 2);
    let reports: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(reports[0]["verdict"], "refuted");
    assert!(!reports[0]["witnesses"].as_array().unwrap().is_empty());

    let out = topolab(
        &["verify", "--theorem", "no-such-theorem", "--n-max", "3"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);

    // n_max beyond the enumeration limit is a domain error
    let out = topolab(
        &["verify", "--theorem", "small-tau-gap", "--n-max", "8"],
        dir.path(),
    );
    assert_eq!(code(&out), 1);
}
