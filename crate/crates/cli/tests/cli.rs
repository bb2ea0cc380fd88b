//! End-to-end tests running the compiled binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn ztile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ztile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("report parses as JSON")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// `{0, k, 2k, …, (n−1)·k}` as a literal.
fn progression(n: i64, step: i64) -> String {
    let elems: Vec<String> = (0..n).map(|i| (i * step).to_string()).collect();
    format!("{{{}}}", elems.join(", "))
}

#[test]
fn verify_reports_all_three_routes() {
    let out = ztile(&["verify", "--a", "{0,2}", "--b", "{0,1}", "--modulus", "4"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["verdict"], "tiling");
    assert_eq!(doc["results"]["direct"], true);
    assert_eq!(doc["results"]["polynomial"], true);
    assert_eq!(doc["results"]["sands"]["implies_tiling"], true);
    assert_eq!(doc["results"]["sands"]["divisors_a"], serde_json::json!([2]));
    assert_eq!(doc["results"]["sands"]["divisors_b"], serde_json::json!([1]));

    let out = ztile(&["verify", "--a", "{0,1}", "--b", "{0,1}", "--modulus", "4"]);
    assert_eq!(code_of(&out), 1);
    assert_eq!(json_of(&out)["verdict"], "not-a-tiling");
}

#[test]
fn quiet_emits_only_the_verdict_line() {
    let out = ztile(&["--quiet", "verify", "--a", "{0,2}", "--b", "{0,1}", "--modulus", "4"]);
    assert_eq!(stdout_of(&out), "tiling\n");
    let out = ztile(&["--quiet", "conditions", "--a", "{0,1,2,4,5,6}"]);
    assert_eq!(stdout_of(&out), "t2-fails\n");
}

#[test]
fn malformed_literals_exit_two_with_a_diagnostic() {
    for bad in ["{0,0}", "{0, 2", "0 2}", "{}", "{1, zwei}"] {
        let out = ztile(&["verify", "--a", bad, "--b", "{0,1}", "--modulus", "4"]);
        assert_eq!(code_of(&out), 2, "literal {bad:?}");
        assert!(stderr_of(&out).starts_with("ztile: "), "literal {bad:?}");
        assert!(stdout_of(&out).is_empty(), "literal {bad:?}");
    }
}

#[test]
fn echoed_inputs_reparse_to_the_same_report() {
    // feed the canonical echo back in: byte-identical report
    let first = ztile(&["verify", "--a", "0 2", "--b", "1,0", "--modulus", "4"]);
    let doc = json_of(&first);
    let (a, b) = (doc["inputs"]["a"].as_str().unwrap(), doc["inputs"]["b"].as_str().unwrap());
    assert_eq!(a, "{0, 2}");
    let again = ztile(&["verify", "--a", a, "--b", b, "--modulus", "4"]);
    assert_eq!(stdout_of(&first), stdout_of(&again));
}

#[test]
fn conditions_report_support_and_witnesses() {
    let out = ztile(&["conditions", "--a", "{0,1,2,4,5,6}"]);
    assert_eq!(code_of(&out), 1);
    let doc = json_of(&out);
    assert_eq!(doc["results"]["support"], serde_json::json!([3, 8]));
    assert_eq!(doc["results"]["t1"]["holds"], true);
    assert_eq!(doc["results"]["t2"]["witnesses"], serde_json::json!([24]));

    let out = ztile(&["conditions", "--a", "{0}"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["results"]["support"], serde_json::json!([]));
    assert_eq!(doc["verdict"], "conditions-hold");

    let out = ztile(&["conditions", "--a", "{0,2}"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(json_of(&out)["results"]["support"], serde_json::json!([4]));
}

#[test]
fn identity_prints_exact_tables_and_sides() {
    let out = ztile(&["identity", "--a", "{0,1}", "--b", "{0,1}", "--modulus", "2"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["results"]["lhs"], "8");
    assert_eq!(doc["results"]["rhs"], "8");
    assert_eq!(doc["results"]["equal"], true);
    assert_eq!(doc["results"]["difference_spectrum_a"]["1"], 2);
    assert_eq!(doc["results"]["difference_spectrum_a"]["2"], 2);
    assert_eq!(doc["results"]["power_spectrum_a"]["1"], "4");
    assert_eq!(doc["results"]["power_spectrum_a"]["2"], "0");
    assert_eq!(doc["verdict"], "equal");
}

#[test]
fn constant_sweep_and_point_modes() {
    let tile = ["--a", "{0,2}", "--b", "{0,1}", "--modulus", "4", "--level", "4"];
    let out = ztile(&[&["constant"], &tile[..]].concat());
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["verdict"], "constant");
    // at level = modulus the constant is |A|
    assert_eq!(doc["results"]["value"], "2");
    assert_eq!(doc["results"]["values"].as_array().unwrap().len(), 2);

    let out = ztile(&[&["constant"], &tile[..], &["--point", "6"]].concat());
    assert_eq!(code_of(&out), 0);
    assert_eq!(json_of(&out)["verdict"], "2");

    // a point inside B is a precondition error
    let out = ztile(&[&["constant"], &tile[..], &["--point", "1"]].concat());
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("lies in the set"));

    // level must divide the modulus
    let out = ztile(&[
        "constant", "--a", "{0,2}", "--b", "{0,1}", "--modulus", "4", "--level", "3",
    ]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("does not divide"));
}

#[test]
fn search_finds_and_reports_complements_deterministically() {
    let out = ztile(&["search", "--a", "{0,2}", "--max-modulus", "8"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    let first = &doc["results"]["complements"][0];
    assert_eq!(first["modulus"], 4);
    assert_eq!(first["b"], "{0, 1}");

    let out = ztile(&["search", "--a", "{0,1,3}", "--max-modulus", "30"]);
    assert_eq!(code_of(&out), 1);
    assert_eq!(json_of(&out)["verdict"], "none");

    let out = ztile(&["--quiet", "search", "--a", "{0}", "--max-modulus", "1"]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(stdout_of(&out), "found 1\n");

    // worker count never changes the output
    let base = ["search", "--a", "{0,1,8,9}", "--max-modulus", "48", "--limit", "6"];
    let sequential = ztile(&base);
    let parallel = ztile(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(stdout_of(&sequential), stdout_of(&parallel));
    assert_eq!(code_of(&sequential), 0);
}

#[test]
fn theorem1_instances_and_preconditions() {
    let a = progression(30, 1);
    let b = progression(30, 30);
    let out = ztile(&["theorem1", "--a", &a, "--b", &b, "--primes", "2", "3", "5"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["results"]["hypotheses_hold"], true);
    assert_eq!(doc["results"]["conclusion_holds"], true);
    assert_eq!(doc["verdict"], "consistent");

    // swapped roles: hypotheses fail, vacuously consistent
    let out = ztile(&["theorem1", "--a", &b, "--b", &a, "--primes", "2", "3", "5"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["results"]["divides_p"], false);
    assert_eq!(doc["results"]["hypotheses_hold"], false);

    let out = ztile(&["theorem1", "--a", "{0,1}", "--b", "{0,2}", "--primes", "2", "3", "5"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("cardinality"));

    let out = ztile(&["theorem1", "--a", &a, "--b", &b, "--primes", "2", "3", "4"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("distinct primes"));
}

#[test]
fn corpus_streams_records_and_survives_read_back() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("corpus.jsonl");
    let path_str = path.to_str().unwrap();

    let out = ztile(&["corpus", "--max-modulus", "4", "--output", path_str]);
    assert_eq!(code_of(&out), 0);
    assert_eq!(json_of(&out)["verdict"], "written 11 records");

    let written = std::fs::read_to_string(&path).expect("corpus file");
    // file mode and stdout mode produce the same records
    let streamed = ztile(&["corpus", "--max-modulus", "4"]);
    assert_eq!(written, stdout_of(&streamed));

    let records: Vec<Value> = written
        .lines()
        .map(|line| serde_json::from_str(line).expect("record parses"))
        .collect();
    assert_eq!(records.len(), 11);
    // the enumeration is ascending by modulus, then by A, then by B
    assert_eq!(records[6]["a"], "{0, 1}");
    assert_eq!(records[6]["b"], "{0, 2}");
    assert_eq!(records[8]["a"], "{0, 2}");
    assert_eq!(records[8]["b"], "{0, 1}");
    // every record re-verifies as a tiling
    for record in &records {
        let (a, b) = (record["a"].as_str().unwrap(), record["b"].as_str().unwrap());
        let m = record["modulus"].as_u64().unwrap().to_string();
        let check = ztile(&["--quiet", "verify", "--a", a, "--b", b, "--modulus", &m]);
        assert_eq!(code_of(&check), 0, "record {record}");
    }

    // repeat runs and worker counts are byte-identical
    let again = ztile(&["corpus", "--max-modulus", "4"]);
    assert_eq!(stdout_of(&streamed), stdout_of(&again));
    let parallel = ztile(&["corpus", "--max-modulus", "4", "--jobs", "3"]);
    assert_eq!(stdout_of(&streamed), stdout_of(&parallel));

    let out = ztile(&["corpus", "--max-modulus", "2", "--output", "/nonexistent/x/y.jsonl"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("cannot create"));
}

#[test]
fn decompose_reports_invariants() {
    let out = ztile(&["decompose", "--a", "{0,1}", "--b", "{0,2}", "--modulus", "4", "--prime", "2"]);
    assert_eq!(code_of(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["verdict"], "all-invariants-hold");
    assert_eq!(doc["results"]["reduced_modulus"], 2);
    assert_eq!(doc["results"]["reduced_complement"], "{0, 1}");
    assert_eq!(doc["results"]["parts"], serde_json::json!(["{0}", "{1}"]));

    let out = ztile(&["decompose", "--a", "{0,1}", "--b", "{0,2}", "--modulus", "4", "--prime", "3"]);
    assert_eq!(code_of(&out), 2);

    let out = ztile(&["decompose", "--a", "{0,1}", "--b", "{0,1}", "--modulus", "4", "--prime", "2"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("not divisible"));
}

#[test]
fn file_inputs_match_inline_inputs() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("a.set");
    let mut file = std::fs::File::create(&path).expect("create");
    writeln!(file, "0, 2").expect("write");
    drop(file);

    let inline = ztile(&["conditions", "--a", "{0,2}"]);
    let from_file = ztile(&["conditions", "--a-file", path.to_str().unwrap()]);
    assert_eq!(stdout_of(&inline), stdout_of(&from_file));

    let out = ztile(&["conditions", "--a-file", "/nonexistent/a.set"]);
    assert_eq!(code_of(&out), 2);
    assert!(stderr_of(&out).contains("cannot read"));
}

#[test]
fn usage_errors_exit_two() {
    // missing required set argument
    let out = ztile(&["verify", "--b", "{0,1}", "--modulus", "4"]);
    assert_eq!(code_of(&out), 2);
    // both inline and file forms for the same operand
    let out = ztile(&["conditions", "--a", "{0}", "--a-file", "/tmp/x"]);
    assert_eq!(code_of(&out), 2);
    // zero modulus rejected at parse time
    let out = ztile(&["verify", "--a", "{0}", "--b", "{0}", "--modulus", "0"]);
    assert_eq!(code_of(&out), 2);
}
