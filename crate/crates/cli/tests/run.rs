use equiloc_cli::{run, Command, Format, JobSpec};
use equiloc_core::Rational;
use serde_json::Value;

fn hirzebruch(command: Command) -> JobSpec {
    JobSpec {
        command,
        model: Some("hirzebruch".into()),
        k: Some(1),
        sigma: Some(Rational::from_integer(1)),
        tau: Some(Rational::from_integer(3)),
        format: Format::Json,
        ..JobSpec::default()
    }
}

#[test]
fn sweep_rows_are_ordered_and_consistent() {
    let job = JobSpec { range: Some(1), ..hirzebruch(Command::Sweep) };
    let out = run(&job);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 8 * 7 / 2);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["index"], i);
    }
    let eq: Vec<(Value, Value)> = rows
        .iter()
        .filter(|r| r["status"] == "Equivalent")
        .map(|r| (r["b"].clone(), r["b2"].clone()))
        .collect();
    assert!(eq.contains(&(serde_json::json!([0, -1]), serde_json::json!([1, 1]))));
    assert_eq!(v["summary"]["errors"], 0);
}

#[test]
fn job_spec_round_trips_through_json() {
    let job = JobSpec { vector: Some(vec![1, 2]), vector2: Some(vec![2, 1]), ..hirzebruch(Command::Compare) };
    let text = serde_json::to_string(&job).unwrap();
    let back: JobSpec = serde_json::from_str(&text).unwrap();
    assert_eq!(back, job);
    assert_eq!(run(&back), run(&job));
}

#[test]
fn classify_reports_subtype() {
    let job = JobSpec { vector: Some(vec![3, 2]), ..hirzebruch(Command::Classify) };
    let out = run(&job);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["type"], 0);
    assert_eq!(v["subtype"], "Type0_alpha");
    let job = JobSpec { vector: Some(vec![1, 0]), ..hirzebruch(Command::Classify) };
    let v: Value = serde_json::from_str(&run(&job).stdout).unwrap();
    assert_eq!(v["type"], 1);
    assert_eq!(v["subtype"], "Type1_alpha");
}

#[test]
fn missing_and_conflicting_inputs() {
    let job = JobSpec { command: Command::SClass, vector: Some(vec![1, 0]), ..JobSpec::default() };
    assert_eq!(run(&job).code, 2);
    let job = JobSpec { vector: Some(vec![1, 0, 0]), ..hirzebruch(Command::SClass) };
    assert_eq!(run(&job).code, 2);
    let job = JobSpec { incommensurable: true, vector: Some(vec![1, 1]), vector2: Some(vec![1, 1]), ..hirzebruch(Command::Decide) };
    assert_eq!(run(&job).code, 2);
}

#[test]
fn orbit_sweep_agrees_with_permutations() {
    let job = JobSpec {
        command: Command::Sweep,
        spectrum: Some(vec![Rational::from_integer(1), Rational::from_integer(0), Rational::from_integer(0)]),
        range: Some(2),
        format: Format::Json,
        ..JobSpec::default()
    };
    let out = run(&job);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    for r in v["rows"].as_array().unwrap() {
        let mut a: Vec<i64> = serde_json::from_value(r["b"].clone()).unwrap();
        let mut b: Vec<i64> = serde_json::from_value(r["b2"].clone()).unwrap();
        a.sort();
        b.sort();
        let expected = if a == b { "Equivalent" } else { "NotEquivalent" };
        assert_eq!(r["status"], expected, "{r}");
    }
}
