use std::path::Path;
use std::process::{Command, Output};

use permrep::cli::{CachedConvention, CACHE_ENV};
use permrep::spectra::SpectrumReport;
use permrep::verify::VerificationReport;
use permrep::{Convention, Side, SkewMatrix};

fn permrep(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permrep"))
        .args(args)
        .env(CACHE_ENV, cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn auto_convention_bootstraps_then_reuses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("convention.json");
    let first = permrep(&cache, &["verify", "--suite", "gram", "--n", "3"]);
    assert_eq!(first.status.code(), Some(0));
    let err = String::from_utf8_lossy(&first.stderr);
    assert!(err.contains("pinned variantB"), "{err}");
    let cached: CachedConvention =
        serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(cached.convention, Convention::LeftToRight);
    assert_eq!(cached.ideal_side, Side::Left);

    let second = permrep(&cache, &["verify", "--suite", "gram", "--n", "3"]);
    assert_eq!(second.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&second.stderr).contains("cached at"));
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("convention.json");
    std::fs::write(
        &cache,
        "{\"convention\": \"variantA\", \"ideal_side\": \"left\", \"oracle_degree\": 3}",
    )
    .unwrap();
    let o = permrep(&cache, &["stats", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = permrep(&cache, &["verify", "--suite", "identities", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let cached: CachedConvention =
        serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    assert_eq!(cached.convention, Convention::LeftToRight);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let code = |args: &[&str]| permrep(&cache, args).status.code();
    assert_eq!(
        code(&["verify", "--suite", "identities", "--n", "4"]),
        Some(0)
    );
    assert_eq!(
        code(&[
            "--convention",
            "variantA",
            "verify",
            "--suite",
            "identities",
            "--n",
            "4"
        ]),
        Some(1)
    );
    assert_eq!(code(&["verify", "--suite", "nope", "--n", "4"]), Some(2));
    assert_eq!(code(&["verify", "--n", "1"]), Some(2));
    assert_eq!(code(&["verify", "--n", "8", "--cap", "7"]), Some(2));
    assert_eq!(code(&["stats", "--stat", "foo"]), Some(2));
    assert_eq!(code(&["stats", "--n", "3", "--n-range", "3..4"]), Some(2));
    assert_eq!(code(&["bench", "--stat", "exc", "--n", "3"]), Some(2));
    assert_eq!(code(&["--format", "yaml", "stats"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn complexity_report_at_five() {
    let dir = tempfile::tempdir().unwrap();
    let o = permrep(
        &dir.path().join("c.json"),
        &[
            "verify",
            "--suite",
            "complexity",
            "--n",
            "5",
            "--format",
            "json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let report: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.passed);
    let computed = |id: &str| {
        report
            .claims
            .iter()
            .find(|c| c.id == format!("complexity/n05/{id}"))
            .map(|c| c.computed.clone())
            .unwrap()
    };
    assert_eq!(computed("dim-maj"), "11");
    assert_eq!(computed("dim-des"), "11");
    assert_eq!(computed("dim-inv"), "11");
    assert_eq!(computed("dim-exc"), "17");
}

#[test]
fn verify_all_at_three_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let args = [
        "verify", "--suite", "all", "--n", "3", "--format", "json", "--seed", "7",
    ];
    let a = permrep(&cache, &args);
    let b = permrep(&cache, &args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let report: VerificationReport = serde_json::from_str(&stdout(&a)).unwrap();
    let mut ids: Vec<_> = report.claims.iter().map(|c| c.id.clone()).collect();
    let sorted = {
        let mut s = ids.clone();
        s.sort();
        s
    };
    assert_eq!(ids, sorted);
    ids.dedup();
    assert_eq!(ids.len(), report.claims.len());
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, stdout(&a));
}

#[test]
fn spectrum_and_bench_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let o = permrep(
        &cache,
        &["spectrum", "--stat", "inv", "--n", "4", "--format", "json"],
    );
    assert_eq!(o.status.code(), Some(0));
    let r: Vec<SpectrumReport> = serde_json::from_str(&stdout(&o)).unwrap();
    let table: Vec<(String, usize)> = r[0]
        .eigenvalues
        .iter()
        .map(|e| (permrep::fmt_ratio(&e.value), e.verified_multiplicity))
        .collect();
    assert_eq!(
        table,
        vec![("72/1".into(), 1), ("-20/1".into(), 3), ("-4/1".into(), 3)]
    );

    let o = permrep(
        &cache,
        &["bench", "--stat", "maj", "--n", "5", "--reps", "1"],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("kind,n,naive_ns,structured_ns,op_ratio"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!((row[0], row[1], row[4]), ("maj", "5", "24/5"));
}

#[test]
fn export_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let file = dir.path().join("h_inv.json");
    let o = permrep(
        &cache,
        &[
            "export",
            "--object",
            "h_inv",
            "--n",
            "5",
            "--format",
            "json",
            "--out",
            file.to_str().unwrap(),
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let m: SkewMatrix = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(
        m,
        permrep::skewrep::h_matrix(permrep::StatKind::Inv, 5).unwrap()
    );

    let o = permrep(
        &cache,
        &["export", "--object", "u_des_centered", "--n", "3"],
    );
    let e: permrep::GAElement = serde_json::from_str(&stdout(&o)).unwrap();
    let g = permrep::SymmetricGroup::new(3).unwrap();
    assert_eq!(e, g.from_stat(permrep::StatKind::Des, true));

    let o = permrep(
        &cache,
        &[
            "export", "--object", "p2_h_inv", "--n", "4", "--format", "csv",
        ],
    );
    let text = stdout(&o);
    assert!(text.starts_with("i,j,value\n1,2,1/2\n"), "{text}");
    assert_eq!(text.lines().count(), 7);
}
