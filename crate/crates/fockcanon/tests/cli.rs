use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fockcanon::cache::{cache_key, Cache};
use fockcanon::format::{matrix_doc, matrix_from_doc, to_json, MatrixDoc};
use fockcanon::CliError;
use fockcanon_core::{
    canonical_basis, Characteristic, Charge, ConventionFault, Error, FockContext, Multipartition,
};

fn fockcanon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockcanon"))
        .args(args)
        .env_remove("FOCKCANON_CACHE")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = fockcanon(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn ctx(e: u32, k: &[i64]) -> FockContext {
    FockContext::new(
        Characteristic::finite(e).unwrap(),
        Charge::new(k.to_vec()).unwrap(),
    )
}

#[test]
fn documented_examples() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "canon", "--e", "2", "--charge", "0", "--n", "2", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["rows"], serde_json::json!(["2", "1,1"]));
    assert_eq!(
        json["entries"][0]["poly"],
        serde_json::json!({"min_deg": 1, "coeffs": [1]})
    );
    assert_eq!(
        stdout(&["kleshchev", "--e", "2", "--charge", "0", "--n", "3"]),
        "2,1\n1,1,1\n"
    );
    assert_eq!(
        stdout(&["defect", "--e", "2", "--charge", "0", "--la", "2"]),
        "1\n"
    );
    assert_eq!(
        stdout(&["mullineux", "--e", "3", "--charge", "0", "--mu", "1,1"]),
        "2\n"
    );
}

#[test]
fn formats() {
    let csv = stdout(&[
        "canon", "--e", "2", "--charge", "0", "--n", "3", "--format", "csv",
    ]);
    assert_eq!(
        csv,
        "\"2,1\",\"2,1\",1\n3,\"1,1,1\",q\n\"1,1,1\",\"1,1,1\",1\n"
    );
    let dims = stdout(&[
        "dims", "--e", "3", "--charge", "0", "--n", "4", "--format", "csv",
    ]);
    assert_eq!(dims, "\"3,1\",3\n\"2,2\",1\n\"2,1,1\",3\n\"1,1,1,1\",1\n");
    let blocks = stdout(&["blocks", "--e", "3", "--charge", "0", "--n", "2"]);
    assert_eq!(
        blocks,
        "beta        defect  members\n{0:1, 1:1}  0       2\n{0:1, 2:1}  0       1,1\n"
    );
    let table = stdout(&["canon", "--e", "inf", "--charge", "0", "--n", "2"]);
    assert_eq!(
        table,
        "e=inf charge=0 n=2\n     2  1,1\n2    1  .\n1,1  .  1\n"
    );
    let m: serde_json::Value = serde_json::from_str(&stdout(&[
        "mullineux",
        "--e",
        "3",
        "--charge",
        "0,1",
        "--mu",
        "-|1",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(m["twisted_charge"], serde_json::json!([-1, 0]));
    assert_eq!(m["path"], serde_json::json!([0]));
    assert_eq!(
        stdout(&["defect", "--e", "2", "--charge", "-1,0", "--la", "-|1"]),
        "0\n"
    );
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| fockcanon(args).status.code();
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(
        code(&["canon", "--e", "1", "--charge", "0", "--n", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["canon", "--e", "x", "--charge", "0", "--n", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["canon", "--e", "2", "--charge", "", "--n", "2"]),
        Some(2)
    );
    assert_eq!(code(&["canon", "--e", "2", "--charge", "0"]), Some(2));
    assert_eq!(
        code(&["canon", "--e", "2", "--charge", "0", "--n", "2", "--format", "xml"]),
        Some(2)
    );
    assert_eq!(
        code(&["mullineux", "--e", "2", "--charge", "0", "--mu", "2"]),
        Some(2)
    );
    assert_eq!(
        code(&["mullineux", "--e", "2", "--charge", "0", "--mu", "1,2"]),
        Some(2)
    );
    assert_eq!(
        code(&["defect", "--e", "2", "--charge", "0", "--la", "1|1"]),
        Some(2)
    );
    assert_eq!(
        code(&["verify", "--e", "3", "--charge", "0,1", "--n", "3"]),
        Some(0)
    );

    let fault = CliError::from(Error::from(ConventionFault::NonMonic {
        mu: Multipartition::empty(1),
    }));
    assert_eq!(fault.exit_code(), 3);
    assert_eq!(
        CliError::from(Error::Consistency("x".into())).exit_code(),
        3
    );
    assert_eq!(CliError::Verification(2).exit_code(), 1);
}

#[test]
fn verify_formats() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "verify", "--e", "2", "--charge", "0", "--n", "3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["sizes"].as_array().unwrap().len(), 4);
    let table = stdout(&["verify", "--e", "2", "--charge", "0", "--n", "2"]);
    assert!(table.ends_with("all checks passed\n"));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("m.json");
    let args = [
        "canon", "--e", "3", "--charge", "0,1", "--n", "3", "--format", "json",
    ];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&with_out), "");
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&args));
    // only the final file remains; the temporary was renamed into place
    assert_eq!(fs::read_dir(path.parent().unwrap()).unwrap().count(), 1);
}

fn cache_files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    names
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "canon", "--e", "2", "--charge", "0,1", "--n", "3", "--format", "json",
    ];
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fockcanon"))
            .args(args)
            .env("FOCKCANON_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    let key = cache_key(&ctx(2, &[0, 1]), 3);
    assert_eq!(cache_files(dir.path()), vec![format!("{key}.json")]);
    assert!(key.chars().all(|c| c.is_ascii_hexdigit()));

    // A corrupt cache file is a miss and gets rewritten.
    fs::write(dir.path().join(format!("{key}.json")), "{ not json").unwrap();
    let second = run();
    assert_eq!(second.stdout, first.stdout);
    let stored = fs::read_to_string(dir.path().join(format!("{key}.json"))).unwrap();
    assert!(stored.contains("\"convention\""));
}

#[test]
fn cache_round_trip_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path());
    for (e, k, n) in [(2, &[0][..], 6), (3, &[0, 1], 4), (4, &[0], 5)] {
        let c = ctx(e, k);
        let d = canonical_basis(n, &c).unwrap();
        assert!(cache.load(&c, n).is_none());
        cache.store(&d).unwrap();
        let back = cache.load(&c, n).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.entries(), d.entries());
        // a different size or charge is a different key
        assert!(cache.load(&c, n + 1).is_none());
    }
    assert_ne!(
        cache_key(&ctx(2, &[0, 1]), 2),
        cache_key(&ctx(2, &[1, 0]), 2)
    );
}

#[test]
fn matrix_document_round_trip() {
    let d = canonical_basis(5, &ctx(2, &[0])).unwrap();
    let text = to_json(&matrix_doc(&d)).unwrap();
    let doc: MatrixDoc = serde_json::from_str(&text).unwrap();
    let back = matrix_from_doc(&doc).unwrap();
    assert_eq!(back, d);
    assert_eq!(to_json(&matrix_doc(&back)).unwrap(), text);

    let mut bad = doc.clone();
    bad.rows[0] = "1,2".into();
    assert!(matrix_from_doc(&bad).is_err());
    let mut bad = doc;
    bad.entries[0].row = 999;
    assert!(matrix_from_doc(&bad).is_err());
}
