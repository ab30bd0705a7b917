use std::io::Write as _;
use std::path::PathBuf;

use sumrate::cli::{self, EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK};

fn models(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "models", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sumrate").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn report_on_builtin_names() {
    let (code, out, _) = run(&["report", "--source", "s1", "--channel", "ch"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("H(U,V)=1.918"), "{out}");
    assert!(out.contains("upper=0.667"), "{out}");
    assert!(out.contains("verdict=INFEASIBLE_BY_TRIVIAL"), "{out}");
}

#[test]
fn report_from_files_matches_builtins() {
    let (code, from_files, _) = run(&[
        "report",
        "--source",
        &models("sparse.json"),
        "--channel",
        &models("averaging.json"),
    ]);
    assert_eq!(code, EXIT_OK);
    let (_, builtin, _) = run(&["report", "--source", "sparse", "--channel", "averaging"]);
    assert_eq!(from_files, builtin);
    assert!(builtin.contains("verdict=INFEASIBLE_BY_UPPER"));
}

#[test]
fn fail_on_infeasible_sets_exit_code() {
    let (code, _, _) = run(&["report", "--source", "s2", "--channel", "ch", "--fail-on-infeasible"]);
    assert_eq!(code, EXIT_INFEASIBLE);
    let (code, out, _) = run(&["report", "--source", "s3", "--channel", "ch", "--fail-on-infeasible"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verdict=INCONCLUSIVE"));
}

#[test]
fn report_formats_are_reproducible() {
    let args = ["report", "--source", "s3", "--channel", "ch", "--format", "json", "--seed", "7"];
    let (code, a, _) = run(&args);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["verdict"], "INCONCLUSIVE");
    assert!((v["source_entropy"].as_f64().unwrap() - 0.748).abs() < 1e-3);

    let (_, csv, _) = run(&["report", "--source", "s3", "--channel", "ch", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].split(',').count(), lines[1].split(',').count());
}

#[test]
fn spectrum_prints_lambda2() {
    let (code, out, _) = run(&["spectrum", "--source", "s2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lambda2=0.1111"), "{out}");
}

#[test]
fn verify_dpi_summary() {
    let (code, out, _) = run(&["verify", "dpi", "--seeds", "1000"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1000/1000 passed, min slack ≥ −1e-9"), "{out}");
}

#[test]
fn verify_other_suites() {
    for suite in ["theorem1", "iid", "decomposition", "appendix"] {
        let (code, out, _) = run(&["verify", suite, "--seeds", "6"]);
        assert_eq!(code, EXIT_OK, "{suite}: {out}");
        assert!(out.contains("passed"));
    }
}

#[test]
fn construct_table() {
    let (code, out, _) = run(&["construct", "--n-max", "4", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("n,gap"));
}

#[test]
fn errors_exit_with_one() {
    let (code, _, err) = run(&["report", "--source", "/no/such/file.json", "--channel", "ch"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.starts_with("error:"));

    let (code, _, _) = run(&["report", "--source", "s1"]);
    assert_eq!(code, EXIT_ERROR);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, "{{\"source\": {{\"p\": [[0.5, 0.5], [0.25, 0.25]]}}}}").unwrap();
    let (code, _, err) = run(&["spectrum", "--source", bad.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("sums to 1.5"), "{err}");

    let (code, _, _) = run(&["report", "--source", "s1", "--channel", "ch", "--grid", "0"]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("report"));
}
