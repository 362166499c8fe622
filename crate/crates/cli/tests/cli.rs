//! End-to-end tests against the compiled binary: exit codes, report shape,
//! stream separation, and byte-for-byte determinism of repeated invocations.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn upsilon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal termination")
}

/// Parses stdout as a run report, asserting it is pure JSON.
fn report(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8");
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is one JSON report: {e}\n{text}"))
}

fn scratch_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("upsilon-cli-e2e-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir.join(name)
}

#[test]
fn identical_invocations_yield_byte_identical_reports() {
    // A randomized path: the probabilistic rank certificate must replay
    // exactly from the seed.
    let args = ["obstruct", "g2", "--trials", "20", "--seed", "7"];
    let first = upsilon(&args);
    let second = upsilon(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "reports must match byte-for-byte");
    assert!(!first.stdout.is_empty());

    // A combinatorial path, for the same property without randomness.
    let args = ["catalog", "numerology", "--family", "sl6"];
    let first = upsilon(&args);
    let second = upsilon(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn changing_the_seed_changes_the_certificate_but_not_the_verdict() {
    let a = report(&upsilon(&["obstruct", "g2", "--seed", "7"]));
    let b = report(&upsilon(&["obstruct", "g2", "--seed", "8"]));
    assert_eq!(a["verdicts"][0]["verdict"], "obstructed");
    assert_eq!(b["verdicts"][0]["verdict"], "obstructed");
    assert_eq!(a["seed"], 7);
    assert_eq!(b["seed"], 8);
    assert_ne!(
        a["verdicts"][0]["certificates"], b["verdicts"][0]["certificates"],
        "different seeds should draw different specializations"
    );
}

#[test]
fn obstruct_g2_example_is_obstructed_with_strong_bound() {
    let out = upsilon(&["obstruct", "g2", "--trials", "20", "--seed", "7"]);
    assert_eq!(exit_code(&out), 0);
    let r = report(&out);
    let verdict = &r["verdicts"][0];
    assert_eq!(verdict["map_shape"], serde_json::json!([14, 14]));
    assert_eq!(verdict["claimed_max_rank"], 13);
    let cert = &verdict["certificates"][0]["rank"];
    assert_eq!(cert["trials"], 20);
    // The error bound is a rational in string form, 2^(-b) with b >= 300.
    let bound = cert["error_bound_log2"].as_str().expect("bound is a string");
    let b: i64 = bound.parse().expect("integral log bound");
    assert!(b <= -300, "bound 2^({b}) is weaker than 2^(-300)");
}

#[test]
fn obstruct_sl6_certifies_the_rank_deficit() {
    let out = upsilon(&["obstruct", "sl6"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["map_shape"], serde_json::json!([20, 35]));
    assert_eq!(verdict["claimed_max_rank"], 19);
    assert_eq!(verdict["verdict"], "obstructed");
}

#[test]
fn obstruct_so_odd_and_adjoint_are_deterministic_certificates() {
    for n in ["2", "3"] {
        let out = upsilon(&["obstruct", "so-odd", "--n", n]);
        assert_eq!(exit_code(&out), 0, "so-odd n={n}");
        let verdict = &report(&out)["verdicts"][0];
        assert_eq!(verdict["verdict"], "obstructed");
        assert!(
            verdict["certificates"][0].get("kernel_identity").is_some(),
            "kernel identity certificate expected"
        );
    }

    for family in ["sl", "so-odd", "g2"] {
        let out = upsilon(&["obstruct", "adjoint", "--family", family]);
        assert_eq!(exit_code(&out), 0, "adjoint {family}");
        assert_eq!(report(&out)["verdicts"][0]["verdict"], "obstructed");
    }

    // g2 is parameterless; --n is a usage error there.
    let out = upsilon(&["obstruct", "adjoint", "--family", "g2", "--n", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn catalog_small_modules_lists_the_sl6_row() {
    let out = upsilon(&["catalog", "small-modules", "--family", "sl6"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["algebra_dim"], 35);
    let mut dims: Vec<u64> = verdict["small_modules"]
        .as_array()
        .expect("module list")
        .iter()
        .map(|m| m["dim"].as_u64().expect("dimension"))
        .collect();
    dims.sort_unstable();
    dims.dedup();
    assert_eq!(dims, vec![6, 15, 20, 21]);
}

#[test]
fn catalog_numerology_handles_family_and_explicit_forms() {
    // Family form: g2 admits exactly the double of its standard module.
    let verdict = report(&upsilon(&["catalog", "numerology", "--family", "g2"]))["verdicts"][0]
        .clone();
    assert_eq!(verdict["decompositions"], serde_json::json!([[7, 7]]));

    // Explicit form with an empty part list: infeasible, still exit 0 —
    // the command answers a question rather than checking a claim.
    let out = upsilon(&["catalog", "numerology", "--dim", "248", "--dims"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["feasible"], false);
    assert_eq!(verdict["decompositions"], serde_json::json!([]));

    // Explicit nonempty part list.
    let verdict =
        report(&upsilon(&["catalog", "numerology", "--dim", "14", "--dims", "7"]))["verdicts"][0]
            .clone();
    assert_eq!(verdict["decompositions"], serde_json::json!([[7, 7]]));

    // Neither form is a usage error.
    assert_eq!(exit_code(&upsilon(&["catalog", "numerology"])), 2);
}

#[test]
fn prelie_builtins_round_trip_and_refute_honestly() {
    // The worked example: a genuine pre-Lie table passes the axiom check.
    let out = upsilon(&["prelie", "check", "--table", "aff1.json"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(report(&out)["verdicts"][0]["left_symmetric"], true);

    let out = upsilon(&["prelie", "roundtrip", "--table", "aff1"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["recovered_input"], true);
    assert_eq!(verdict["ideal"]["consistent"], true);

    let out = upsilon(&["prelie", "prop6", "--table", "zero2"]);
    assert_eq!(exit_code(&out), 0);

    // A table that is *not* pre-Lie: x*x = y, y*x = x. Left symmetry fails
    // on the mixed triples, so the binary must report refutation (exit 1).
    let path = scratch_path("not_prelie.json");
    std::fs::write(
        &path,
        r#"{"dim":2,"t":[[["0","1"],["0","0"]],[["1","0"],["0","0"]]]}"#,
    )
    .expect("write table");
    let out = upsilon(&["prelie", "check", "--table", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1, "refutation must exit 1");
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["left_symmetric"], false);
    assert_eq!(verdict["defect_count"], 2);

    // Unknown table names are usage errors, not refutations.
    let out = upsilon(&["prelie", "check", "--table", "no-such-table"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn dendriform_check_passes_at_the_default_window() {
    let out = upsilon(&["dendriform", "check"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["axiom_violations"], 0);
    assert_eq!(verdict["hopf_clean"], true);
    assert_eq!(verdict["recursion_identities"], true);
    assert_eq!(verdict["braces_vanish"], true);
    assert_eq!(verdict["braces_checked"], 12); // 2^2 + 2^3 argument tuples
}

#[test]
fn repbuild_dump_emits_labelled_matrices() {
    let out = upsilon(&["repbuild", "dump", "--family", "so5"]);
    assert_eq!(exit_code(&out), 0);
    let verdict = &report(&out)["verdicts"][0];
    assert_eq!(verdict["algebra_dim"], 10);
    assert_eq!(verdict["matrix_size"], 5);
    assert_eq!(verdict["labels"].as_array().expect("labels").len(), 10);
    assert_eq!(verdict["matrices"].as_array().expect("matrices").len(), 10);

    // No transcription for the even orthogonal series.
    assert_eq!(exit_code(&upsilon(&["repbuild", "dump", "--family", "so6"])), 2);
}

#[test]
fn verify_paper_subset_reports_and_validates_names() {
    let out = upsilon(&[
        "verify-paper",
        "--only",
        "decomposition-numerology,f4-scope",
    ]);
    assert_eq!(exit_code(&out), 0);
    let r = report(&out);
    let statuses: Vec<(&str, &str)> = r["verdicts"]
        .as_array()
        .expect("claim reports")
        .iter()
        .map(|v| {
            (
                v["name"].as_str().expect("name"),
                v["status"].as_str().expect("status"),
            )
        })
        .collect();
    assert_eq!(
        statuses,
        vec![
            ("decomposition-numerology", "upheld"),
            ("f4-scope", "out_of_scope"),
        ]
    );

    // Unknown claim names fail before anything runs.
    let out = upsilon(&["verify-paper", "--only", "no-such-claim"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).expect("stderr is UTF-8");
    assert!(stderr.contains("unknown claim"), "stderr names the problem: {stderr}");
}

#[test]
fn out_flag_redirects_the_identical_report() {
    let path = scratch_path("so_odd_report.json");
    let to_file = upsilon(&[
        "obstruct",
        "so-odd",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&to_file), 0);
    assert!(to_file.stdout.is_empty(), "--out leaves stdout empty");
    let from_file = std::fs::read(&path).expect("report file");

    let to_stdout = upsilon(&["obstruct", "so-odd", "--n", "2"]);
    assert_eq!(from_file, to_stdout.stdout, "same bytes either way");
}

#[test]
fn timings_flag_is_the_only_source_of_nondeterminism() {
    let plain = report(&upsilon(&["catalog", "small-modules", "--family", "g2"]));
    assert!(plain.get("wallTimeMs").is_none());

    let timed = report(&upsilon(&[
        "catalog",
        "small-modules",
        "--family",
        "g2",
        "--timings",
    ]));
    assert!(timed.get("wallTimeMs").is_some());
}

#[test]
fn reports_carry_version_command_and_echoed_inputs() {
    let r = report(&upsilon(&[
        "obstruct",
        "so-odd",
        "--n",
        "3",
        "--seed",
        "11",
        "--trials",
        "25",
    ]));
    assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(r["command"], "obstruct so-odd");
    assert_eq!(r["inputs"]["n"], 3);
    assert_eq!(r["inputs"]["seed"], 11);
    assert_eq!(r["inputs"]["trials"], 25);
    // The default prime is derived from the seed.
    assert!(r["inputs"]["prime"].as_u64().expect("prime") >= (1 << 31));
}

#[test]
fn bad_global_values_are_usage_errors() {
    // Composite modulus on a probabilistic path.
    let out = upsilon(&["obstruct", "g2", "--prime", "1000000"]);
    assert_eq!(exit_code(&out), 2);

    // Zero trials cannot certify anything.
    let out = upsilon(&["obstruct", "sl6", "--trials", "0"]);
    assert_eq!(exit_code(&out), 2);

    // Unknown flags are caught by the parser.
    let out = upsilon(&["--bogus"]);
    assert_eq!(exit_code(&out), 2);

    // Unknown families are rejected with a message.
    let out = upsilon(&["catalog", "small-modules", "--family", "h3"]);
    assert_eq!(exit_code(&out), 2);
}
