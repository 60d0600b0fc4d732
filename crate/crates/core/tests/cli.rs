use qhopf::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qhopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run_to_file(args: &[&str], name: &str) -> (i32, String) {
    let path = tmp(name);
    let mut argv = vec!["qhopf"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let code = run(argv);
    (code, std::fs::read_to_string(&path).unwrap_or_default())
}

#[test]
fn relation_suites_pass_at_asymmetric_parameters() {
    let (code, body) = run_to_file(
        &["verify", "--suite", "disc,s3,podles,su2,hopf", "--q", "0.6", "--p", "0.4", "--s", "0.8", "--d", "64"],
        "relations.json",
    );
    assert_eq!(code, EXIT_PASS, "{body}");
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["q"], 0.6);
    assert!(v["records"].as_array().unwrap().iter().all(|r| r["anchor"].as_str().is_some_and(|a| !a.is_empty())));
}

#[test]
fn index_table_as_csv() {
    let (code, body) = run_to_file(&["index", "--nmax", "5", "--d", "64", "--format", "csv"], "index.csv");
    assert_eq!(code, EXIT_PASS);
    let mut lines = body.lines();
    assert_eq!(lines.next(), Some("suite,check,status,value,expected,residual,anchor"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r.contains(",pass,")));
}

#[test]
fn symbolic_idempotents() {
    let (code, body) = run_to_file(&["verify", "--suite", "en-symbolic", "--nmax", "3", "--format", "csv"], "en.csv");
    assert_eq!(code, EXIT_PASS, "{body}");
    assert!(body.contains("Y^T X = 1, N=3"));
}

#[test]
fn convergence_failure_sets_exit_code() {
    let (code, body) = run_to_file(&["verify", "--suite", "convergence", "--nmax", "1", "--format", "csv"], "conv.csv");
    assert_eq!(code, EXIT_FAIL);
    assert!(body.contains(",warn,"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(["qhopf", "verify", "--suite", "disc,bogus"]), EXIT_USAGE);
    assert_eq!(run(["qhopf", "verify", "--p", "0"]), EXIT_USAGE);
    assert_eq!(run(["qhopf", "verify", "--s", "1.5"]), EXIT_USAGE);
    assert_eq!(run(["qhopf", "frobnicate"]), EXIT_USAGE);
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--suite", "hopf,confluence", "--seed", "11"];
    let (_, a) = run_to_file(&args, "det-a.json");
    let (_, b) = run_to_file(&args, "det-b.json");
    assert!(!a.is_empty());
    assert_eq!(a, b);
}
