use std::path::Path;
use std::process::{Command, Output};

fn superperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superperm"))
        .args(args)
        .output()
        .expect("run superperm")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn generate_n3_plain_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("n3.txt");
    let out = superperm(&["generate", "--n", "3", "--output", path_str(&file)]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), "123121321\n");
}

#[test]
fn generate_to_stdout_is_deterministic() {
    let a = superperm(&["generate", "--n", "5"]);
    let b = superperm(&["generate", "--n", "5"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.len(), 154);
}

#[test]
fn generate_stats_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("n4.txt");
    let out = superperm(&["generate", "--n", "4", "--output", path_str(&file), "--stats"]);
    assert_eq!(code(&out), 0);
    let sidecar = dir.path().join("n4.txt.stats.json");
    let stats: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(sidecar).unwrap()).unwrap();
    assert_eq!(stats["symbols_emitted"], "33");
    assert_eq!(stats["mirror_shift_count"], "5");
    assert_eq!(stats["intersection_histogram"]["1"], "1");
    assert_eq!(stats["intersection_histogram"]["2"], "4");
}

#[test]
fn generate_stats_to_stderr_without_output() {
    let out = superperm(&["generate", "--n", "4", "--stats"]);
    assert_eq!(code(&out), 0);
    let stats: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(stats["symbols_emitted"], "33");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&superperm(&["generate", "--n", "0"])), 2);
    assert_eq!(code(&superperm(&["generate"])), 2);
    assert_eq!(code(&superperm(&["generate", "--n", "62", "--format", "plain"])), 2);
    assert_eq!(code(&superperm(&["generate", "--n", "2", "--mode", "palindrome"])), 2);
    assert_eq!(code(&superperm(&["stats", "--n", "0"])), 2);
    assert_eq!(code(&superperm(&["bench", "--n", "3", "--reps", "0"])), 2);
    assert_eq!(code(&superperm(&["baseline", "--n", "10"])), 2);
    assert_eq!(code(&superperm(&["frobnicate"])), 2);
}

#[test]
fn round_trip_all_modes_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=10 {
        for format in ["plain", "csv"] {
            let modes: &[&str] = if n >= 3 { &["stream", "palindrome"] } else { &["stream"] };
            for mode in modes {
                let file = dir.path().join(format!("n{n}-{mode}.{format}"));
                let file = path_str(&file);
                let n_arg = n.to_string();
                let gen = superperm(&["generate", "--n", &n_arg, "--output", file, "--mode", mode, "--format", format]);
                assert_eq!(code(&gen), 0, "generate n={n} {mode} {format}");
                let ver = superperm(&["verify", "--n", &n_arg, "--input", file, "--format", format, "--check-palindrome"]);
                assert_eq!(code(&ver), 0, "verify n={n} {mode} {format}: {}", stdout(&ver));
            }
        }
    }
}

#[test]
fn verify_reports_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("n5.txt");
    assert_eq!(code(&superperm(&["generate", "--n", "5", "--output", path_str(&file)])), 0);

    let ok = superperm(&["verify", "--n", "5", "--input", path_str(&file), "--expect-length", "153"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("covered: 120 / 120"));

    let wrong_len = superperm(&["verify", "--n", "5", "--input", path_str(&file), "--expect-length", "152"]);
    assert_eq!(code(&wrong_len), 1);

    let text = std::fs::read_to_string(&file).unwrap();
    let truncated = dir.path().join("truncated.txt");
    std::fs::write(&truncated, format!("{}\n", &text[..text.len() - 2])).unwrap();
    let out = superperm(&["verify", "--n", "5", "--input", path_str(&truncated), "--json"]);
    assert_eq!(code(&out), 1);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["complete"], false);
    assert_eq!(report["length"], 152);

    let foreign = dir.path().join("foreign.txt");
    std::fs::write(&foreign, "1231x1321\n").unwrap();
    assert_eq!(code(&superperm(&["verify", "--n", "3", "--input", path_str(&foreign)])), 2);

    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&superperm(&["verify", "--n", "3", "--input", path_str(&missing)])), 2);
    assert_eq!(code(&superperm(&["verify", "--n", "13", "--input", path_str(&file)])), 2);
}

#[test]
fn verify_palindrome_check_on_baseline() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("base.txt");
    assert_eq!(code(&superperm(&["baseline", "--n", "5", "--output", path_str(&file)])), 0);
    assert_eq!(std::fs::read_to_string(&file).unwrap().trim_end().len(), 153);
    let out = superperm(&["verify", "--n", "5", "--input", path_str(&file), "--check-palindrome", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["complete"], true);
    assert_eq!(report["is_palindrome"], true);
    assert_eq!(code(&out), 0);

    // complete but not symmetric
    let lopsided = dir.path().join("lopsided.txt");
    std::fs::write(&lopsided, "1231213213\n").unwrap();
    let out = superperm(&["verify", "--n", "3", "--input", path_str(&lopsided)]);
    assert_eq!(code(&out), 0);
    let out = superperm(&["verify", "--n", "3", "--input", path_str(&lopsided), "--check-palindrome"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("palindrome: false"));
}

#[test]
fn stats_output() {
    let out = superperm(&["stats", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("length: 873"));
    assert!(text.contains("operations: 119"));

    let out = superperm(&["stats", "--n", "2", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["length_closed_form"], "3");

    let out = superperm(&["stats", "--n", "20", "--json"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["length_sum_factorials"], "2561327494111820313");
    assert_eq!(report["length_closed_form"], "2561327494111820313");
}

#[test]
fn bench_checks_emitted_count() {
    let out = superperm(&["bench", "--n", "9", "--reps", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("emitted: 409113 (expected 409113)"));
    let out = superperm(&["bench", "--n", "11", "--reps", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("emitted: 43954713 (expected 43954713)"));
    let out = superperm(&["bench", "--n", "1", "--reps", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("emitted: 1 "));
}

#[test]
fn verify_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_superperm"))
        .args(["verify", "--n", "3", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"123121321\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
}
