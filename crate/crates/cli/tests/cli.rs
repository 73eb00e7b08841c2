use std::path::Path;
use std::process::{Command, Output};

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethygen"))
        .args(args)
        .env("PLETHYGEN_CACHE", cache)
        .env("RUST_LOG", "error")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_prints_the_reference_form() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["compute", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q / (1-q*z)"), "{}", stdout(&o));
}

#[test]
fn compute_json_round_trips_and_is_cached() {
    let dir = tempfile::tempdir().unwrap();
    let first = run(dir.path(), &["compute", "--mu", "2,1", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0));
    let a = plethygen::FactoredRational::from_json(&stdout(&first)).unwrap();
    let table = plethygen::golden::table_entry(&"2,1".parse().unwrap()).unwrap();
    assert!(a.equals(&table));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let cached = run(dir.path(), &["compute", "--mu", "2,1", "--json"]);
    let fresh = run(dir.path(), &["compute", "--mu", "2,1", "--json", "--no-cache"]);
    assert_eq!(stdout(&cached), stdout(&first));
    assert_eq!(stdout(&fresh), stdout(&first));
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["compute", "--mu", "2"]);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "{not json").unwrap();
    }
    let o = run(dir.path(), &["compute", "--mu", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("q / ((1-z^2)*(1-q^2*z))"));
}

#[test]
fn usage_and_resource_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["compute", "--mu", "1,2"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["compute", "--mu", "9"]).status.code(), Some(3));
    assert_eq!(run(dir.path(), &["verify", "km", "--n", "99"]).status.code(), Some(3));
    let o = run(dir.path(), &["coeff", "--mu", "2,1", "--h", "2", "--k", "3", "--method", "gauss"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn coefficients_by_every_method() {
    let dir = tempfile::tempdir().unwrap();
    for method in ["ssyt", "qehr", "gauss", "recur"] {
        let o = run(dir.path(), &["coeff", "--mu", "3", "--h", "6", "--k", "7", "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert_eq!(stdout(&o).trim(), "2", "{method}");
    }
    let o = run(dir.path(), &["coeff", "--mu", "3", "--h", "2", "--k", "7"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn verify_suites() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify", "table1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("11/11 cases pass"));

    let o = run(dir.path(), &["verify", "km", "--n", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "km");
    assert_eq!(v["cases"][0]["pass"], true);

    let o = run(dir.path(), &["verify", "recurrences", "--max", "8"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(dir.path(), &["verify", "denominator-conj", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FAIL (1)"));
}

#[test]
fn verify_output_is_deterministic_apart_from_timing() {
    let dir = tempfile::tempdir().unwrap();
    let strip = |o: Output| {
        stdout(&o)
            .lines()
            .filter(|l| !l.contains("cases pass"))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    let a = strip(run(dir.path(), &["--jobs", "1", "verify", "hstar", "--max", "5"]));
    let b = strip(run(dir.path(), &["verify", "hstar", "--max", "5"]));
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn gln_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gln", "plethysm", "--outer", "2", "--inner", "2", "--vars", "2"]);
    assert_eq!(stdout(&o).trim(), "s(2)[s(2)] = s(4) + s(2,2)");
    let o = run(dir.path(), &["gln", "plethysm", "--outer", "2", "--inner", "1,1", "--vars", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["expansion"][0]["lambda"], serde_json::json!([2, 2]));

    let o = run(dir.path(), &["gln", "kirillov", "--lam", "7,5", "--mu", "4", "--nu", "3", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4]"));
    assert!(stdout(&o).contains("empirical recurrence"));
}

#[test]
fn qehr_prints_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["qehr", "--mu", "1", "--json"]);
    let q = plethygen::FactoredRational::from_json(&stdout(&o)).unwrap();
    assert!(q.equals(&"1/((1-q*z)*(1-q^-1*z))".parse().unwrap()));
}
