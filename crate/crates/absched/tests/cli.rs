//! End-to-end tests of the command-line interface, driving the compiled
//! binary through files the way scripts and CI would.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn absched(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_absched"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const TWO_ONES: &str = r#"{
  "mode": "quadratic",
  "nA": 2,
  "nB": 2,
  "machines": [
    {"kA": 1, "kB": 1, "tA": 1, "tB": 1},
    {"kA": 1, "kB": 1, "tA": 1, "tB": 1}
  ]
}"#;

#[test]
fn solve_writes_expected_solution() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "inst.json", TWO_ONES);
    let out = absched(&["solve", &input]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["makespan"], 4);
    assert_eq!(doc["schedule"].as_array().unwrap().len(), 2);
    assert_eq!(doc["schedule"][0]["machine"], 0);
    assert_eq!(doc["schedule"][0]["batches"][0]["type"], "A");
    assert_eq!(doc["schedule"][0]["batches"][0]["count"], 1);
}

#[test]
fn solve_empty_instance_keeps_machine_entries() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "inst.json",
        r#"{"mode":"quadratic","nA":0,"nB":0,"machines":[
            {"kA":1,"kB":1,"tA":1,"tB":1},{"kA":2,"kB":2,"tA":2,"tB":2}]}"#,
    );
    let out = absched(&["solve", &input]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["makespan"], 0);
    let schedule = doc["schedule"].as_array().unwrap();
    assert_eq!(schedule.len(), 2);
    assert!(schedule
        .iter()
        .all(|entry| entry["batches"].as_array().unwrap().is_empty()));
}

#[test]
fn solve_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "inst.json", TWO_ONES);
    let first = absched(&["solve", &input]);
    let second = absched(&["solve", &input]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn malformed_json_exits_1() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "broken.json", "{not json");
    let out = absched(&["solve", &input]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_field_is_named_and_exits_1() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "typo.json",
        r#"{"mode":"quadratic","nA":1,"nB":1,"nC":1,"machines":[{"kA":1,"kB":1,"tA":1,"tB":1}]}"#,
    );
    let out = absched(&["solve", &input]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("nC"), "{}", stderr(&out));
}

#[test]
fn out_of_bounds_instance_exits_2() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "big.json",
        r#"{"mode":"quadratic","nA":1,"nB":1,"machines":[{"kA":10000000,"kB":1,"tA":1,"tB":1}]}"#,
    );
    let out = absched(&["solve", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("machines[0].kA"), "{}", stderr(&out));
}

#[test]
fn force_mode_overrides_with_warning() {
    let dir = TempDir::new().unwrap();
    let input = write(
        dir.path(),
        "inst.json",
        r#"{"mode":"quadratic","nA":2,"nB":3,"machines":[{"kA":1,"kB":2,"tA":1,"tB":1}]}"#,
    );
    let out = absched(&["solve", &input, "--force-mode", "linear"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["makespan"], 10);
}

#[test]
fn verify_round_trip_and_tampering() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "inst.json", TWO_ONES);
    let solution = dir.path().join("sol.json").to_str().unwrap().to_owned();
    let out = absched(&["solve", &input, "--output", &solution]);
    assert!(out.status.success());

    let ok = absched(&["verify", &input, &solution]);
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));

    // tampered makespan
    let text = std::fs::read_to_string(&solution).unwrap();
    let tampered = write(dir.path(), "bad_makespan.json", &text.replace("\"makespan\": 4", "\"makespan\": 3"));
    let out = absched(&["verify", &input, &tampered]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("MakespanMismatch"), "{}", stderr(&out));

    // tampered batch order: both batches on machine 0 become A-then-A
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut tampered_doc = doc.clone();
    tampered_doc["schedule"][0]["batches"][1]["type"] = "A".into();
    tampered_doc["schedule"][1]["batches"][1]["type"] = "B".into();
    let tampered = write(
        dir.path(),
        "bad_order.json",
        &serde_json::to_string(&tampered_doc).unwrap(),
    );
    let out = absched(&["verify", &input, &tampered]);
    assert_eq!(out.status.code(), Some(3));
    assert!(
        stderr(&out).contains("AlternationViolation"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn gen_is_byte_identical_for_fixed_seed() {
    let args = [
        "gen", "--machines", "2", "--na", "3", "--nb", "3", "--param-max", "5", "--seed", "7",
    ];
    let first = absched(&args);
    let second = absched(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn gen_param_max_one_pins_parameters() {
    let out = absched(&["gen", "--machines", "3", "--na", "1", "--nb", "1", "--param-max", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for machine in doc["machines"].as_array().unwrap() {
        for key in ["kA", "kB", "tA", "tB"] {
            assert_eq!(machine[key], 1);
        }
    }
}

#[test]
fn gen_rejects_oversized_job_count() {
    let out = absched(&["gen", "--machines", "2", "--na", "100000", "--nb", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_output_solves_and_verifies() {
    let dir = TempDir::new().unwrap();
    for seed in 0..6u64 {
        for mode in ["quadratic", "linear"] {
            let input = dir.path().join(format!("gen_{seed}_{mode}.json"));
            let input = input.to_str().unwrap();
            let out = absched(&[
                "gen", "--machines", "3", "--na", "9", "--nb", "7", "--param-max", "6", "--seed",
                &seed.to_string(), "--mode", mode, "--output", input,
            ]);
            assert!(out.status.success());
            let solution = dir.path().join(format!("sol_{seed}_{mode}.json"));
            let solution = solution.to_str().unwrap();
            let out = absched(&["solve", input, "--output", solution]);
            assert!(out.status.success());
            let out = absched(&["verify", input, solution]);
            assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        }
    }
}

#[test]
fn bench_emits_csv_shape() {
    let out = absched(&[
        "bench", "--sizes", "10,20,40", "--machines", "2", "--repeats", "3", "--seed", "1",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines[0], "n,p,mean_ms,stddev_ms");
    assert_eq!(lines.len(), 4);
    for (line, n) in lines[1..].iter().zip([10, 20, 40]) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        assert_eq!(fields[0], n.to_string());
        assert_eq!(fields[1], "2");
        fields[2].parse::<f64>().unwrap();
        fields[3].parse::<f64>().unwrap();
    }
}
