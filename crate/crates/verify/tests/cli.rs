//! End-to-end behaviour of the `humbert-verify` binary.

use assert_cmd::Command;

fn bin() -> Command {
    Command::cargo_bin("humbert-verify").unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = bin().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

/// Value of `key=` in an `eval` output line.
fn field<'a>(line: &'a str, key: &str) -> &'a str {
    line.split_whitespace()
        .find_map(|w| w.strip_prefix(key).and_then(|w| w.strip_prefix('=')))
        .unwrap()
}

fn real_part(v: &str) -> f64 {
    // values print as `re±imi`; the sign of the imaginary part follows an
    // exponent digit
    let bytes = v.as_bytes();
    let cut = (1..bytes.len())
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1].is_ascii_digit())
        .unwrap_or(bytes.len());
    v[..cut].parse().unwrap()
}

#[test]
fn eval_at_origin() {
    let line = stdout_of(&["eval", "psi1", "3", "1.5", "2.5", "3", "--x", "0", "--y", "0"]);
    assert_eq!(real_part(field(&line, "value")), 1.0);
}

#[test]
fn eval_gauss_function() {
    let line = stdout_of(&["eval", "pfq", "--num", "1,1", "--den", "2", "--z", "0.5"]);
    let v = real_part(field(&line, "value"));
    assert!((v - 4f64.ln()).abs() < 1e-13, "{line}");
}

#[test]
fn eval_integral_matches_first_table_row() {
    let line = stdout_of(&[
        "eval", "psi1", "3", "1.5", "2.5", "3", "--x", "-10", "--y", "11", "--method", "integral",
    ]);
    assert_eq!(field(&line, "method"), "INTEGRAL");
    let v = real_part(field(&line, "value"));
    // leading term Γ(c)Γ(c')/(Γ(a)Γ(c-b)) (y/(1-x))^b y^{a-2b-c'} e^y
    let lead = 1.329_340_388_179_137 * 2.0 / (2.0 * 1.0) * 11f64.powf(-3.0) * 11f64.exp();
    assert!((v / lead - 1.06951).abs() < 5e-4, "{line}");
}

#[test]
fn table_output_is_deterministic() {
    let args = ["table", "--id", "2"];
    let first = stdout_of(&args);
    assert_eq!(first, stdout_of(&args));
    let mut lines = first.lines();
    assert!(lines.next().unwrap().starts_with("# humbert-verify "));
    assert_eq!(lines.next().unwrap(), "x,y,log_psi1,log_AE,ratio,method,abs_err_est");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.contains(",INTEGRAL,")));
}

#[test]
fn crosscheck_is_deterministic_and_empty_run_has_header_only() {
    let args = ["crosscheck", "--seed", "3", "--count", "10"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let empty = stdout_of(&["crosscheck", "--count", "0"]);
    assert_eq!(empty.lines().count(), 2);
}

#[test]
fn sweep_writes_fitted_slopes() {
    let out = stdout_of(&["sweep", "--target", "minus-n", "--orders", "1,2"]);
    let rows: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.ends_with(",minus-n")));
}

#[test]
fn output_file_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"rel_tol": 1e-12, "quad_max_level": 11}"#).unwrap();
    let out = dir.path().join("t.csv");
    bin()
        .args(["table", "--id", "1", "--x", "-100", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .assert()
        .success()
        .stdout("");
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 3);

    std::fs::write(&cfg, r#"{"unknown": 1}"#).unwrap();
    bin().args(["table", "--id", "1", "--config"]).arg(&cfg).assert().code(2);
}

#[test]
fn exit_codes() {
    // malformed literal and unknown target are usage errors
    bin().args(["eval", "pfq", "--num", "1,x", "--z", "0.5"]).assert().code(2);
    bin().args(["sweep", "--target", "nonsense"]).assert().code(2);
    bin().args(["table", "--id", "3"]).assert().code(2);
    // x on the cut and a denominator pole are domain errors
    bin()
        .args(["eval", "psi1", "3", "1.5", "2.5", "3", "--x", "2", "--y", "1"])
        .assert()
        .code(3);
    bin().args(["eval", "pfq", "--num", "1", "--den", "-2", "--z", "0.5"]).assert().code(3);
    // λ of order one is far outside the asymptotic regime, so the fitted
    // slope misses its target; rows are still written
    let out = bin()
        .args(["sweep", "--target", "large-lambda", "--scales", "0.5,1", "--orders", "3"])
        .assert()
        .code(1)
        .get_output()
        .stdout
        .clone();
    assert_eq!(String::from_utf8(out).unwrap().lines().count(), 4);
}
