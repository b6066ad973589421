use std::io::Write;
use std::process::{Command, Output};

use pit_core::field::next_prime;

fn pit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

/// `x_0 x_1 - 1` as a width-2 ROABP over a field meeting the `(2Dnr^3)^2` bound.
fn xy_minus_one() -> String {
    "ROABP p=16411 width=2 depth=2 degree=2\n\
     L 0 0 0 0 1\n\
     L 0 0 1 1\n\
     L 1 0 0 0 1\n\
     L 1 1 0 -1\n"
        .to_string()
}

#[test]
fn whitebox_reports_zero() {
    let f = file("ROABP p=7 width=2 depth=3 degree=2\nL 0 0 1 1\nL 2 1 0 0 1\n");
    let o = pit(&[
        "roabp-test",
        f.path().to_str().unwrap(),
        "--mode",
        "whitebox",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ZERO"));
}

#[test]
fn every_mode_finds_the_nonzero_program() {
    let f = file(&xy_minus_one());
    for mode in ["blackbox", "whitebox", "brute", "sz"] {
        let o = pit(&["roabp-test", f.path().to_str().unwrap(), "--mode", mode]);
        assert_eq!(o.status.code(), Some(1), "{mode}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("NONZERO"), "{mode}");
    }
    let o = pit(&["roabp-test", f.path().to_str().unwrap()]);
    let line = stdout(&o);
    let w: Vec<u64> = line
        .split_whitespace()
        .find_map(|t| t.strip_prefix("witness="))
        .unwrap()
        .split(',')
        .map(|v| v.parse().unwrap())
        .collect();
    assert_ne!((w[0] * w[1]) % 16411, 1);
}

#[test]
fn small_field_names_the_bound() {
    let f = file("ROABP p=7 width=2 depth=2 degree=2\nL 0 0 0 1\n");
    let o = pit(&[
        "roabp-test",
        f.path().to_str().unwrap(),
        "--mode",
        "blackbox",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("(2Dnr^3)^2"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn parse_errors_exit_two() {
    let f = file("ROABP p=7 width=2 depth=2 degree=2\nL 5 0 0 1\n");
    let o = pit(&["roabp-test", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    let o = pit(&["roabp-test", "/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_only_example() {
    let o = pit(&[
        "hitting-set",
        "--p",
        "16411",
        "--r",
        "1",
        "--D",
        "1",
        "--n",
        "4",
        "--count-only",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "16\n");
}

#[test]
fn hitting_set_is_deterministic_and_pages_compose() {
    let base = [
        "hitting-set",
        "--p",
        "4099",
        "--r",
        "2",
        "--D",
        "2",
        "--n",
        "2",
    ];
    let run = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        let o = pit(&args);
        assert_eq!(o.status.code(), Some(0));
        stdout(&o)
    };
    let full = run(&["--limit", "90"]);
    assert_eq!(full, run(&["--limit", "90"]));
    assert_eq!(full.lines().count(), 90);
    let paged = [
        run(&["--limit", "40"]),
        run(&["--start", "40", "--limit", "40"]),
        run(&["--start", "80", "--limit", "10"]),
    ]
    .concat();
    assert_eq!(full, paged);
    assert!(full.lines().all(|l| l.split(',').count() == 2));
}

#[test]
fn gen_eval_depth_one_echoes_the_seed() {
    let o = pit(&[
        "gen-eval", "--p", "16411", "--r", "1", "--D", "1", "--n", "4", "--alpha", "123",
    ]);
    assert_eq!(stdout(&o), "123\n");
    let o = pit(&[
        "gen-eval", "--p", "16411", "--r", "1", "--D", "3", "--n", "4", "--alpha", "1,2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_the_witness() {
    let f = file(&xy_minus_one());
    let path = f.path().to_str().unwrap();
    let serial = pit(&["roabp-test", path, "--mode", "blackbox"]);
    let parallel = pit(&["--jobs", "4", "roabp-test", path, "--mode", "blackbox"]);
    assert_eq!(stdout(&serial), stdout(&parallel));
}

#[test]
fn smabp_is_reduced_then_tested() {
    // x_{0,1} x_{1,2} - x_{1,1} x_{0,2} over blocks of size 2
    let f = file(&format!(
        "SMABP p={} width=2 depth=2 degree=2\nL 0 0 0 1\nL 0 0 1 0 1\nL 1 0 0 0 1\nL 1 1 0 -1\n",
        1_000_003
    ));
    let o = pit(&["smabp-test", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let o = pit(&["smabp-test", f.path().to_str().unwrap(), "--mode", "brute"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn ncabp_commutator_prints_matrices() {
    // bound (2 (D+1)^5 n r^4)^2 for n = 2, r = 2, D = 2
    let p = next_prime((2u64 * 243 * 2 * 16).pow(2)).unwrap();
    let f = file(&format!(
        "NCABP p={p} nvars=2 width=2 depth=2\n\
         E 0 0 0 0 1 0\n\
         E 0 0 1 0 0 1\n\
         E 1 0 0 0 0 1\n\
         E 1 1 0 0 -1 0\n"
    ));
    let o = pit(&["ncabp-test", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("NONZERO points_tested="));
    assert_eq!(lines.len(), 3);
    for (i, l) in lines[1..].iter().enumerate() {
        let body = l.strip_prefix(&format!("X{i}=")).unwrap();
        assert_eq!(body.split(';').count(), 3);
    }
    let small = file("NCABP p=101 nvars=1 width=1 depth=1\nE 0 0 0 1\n");
    let o = pit(&["ncabp-test", small.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(2(D+1)^5nr^4)^2"));
}

#[test]
fn diag_modes_agree() {
    let square = "TERM\nFACTOR e=2\nG 0 0 1\nG 1 0 1\n";
    let p = next_prime((2u64 * 2 * 81).pow(2)).unwrap();
    let f = file(&format!("DIAG p={p} nvars=2\n{square}"));
    for mode in ["blackbox", "whitebox", "brute"] {
        let o = pit(&["diag-test", f.path().to_str().unwrap(), "--mode", mode]);
        assert_eq!(o.status.code(), Some(1), "{mode}: {}", stderr(&o));
    }
    let identity = format!(
        "DIAG p=16411 nvars=2\n{square}\
         TERM\nFACTOR e=1\nG 0 0 -1\nFACTOR e=1\nG 0 0 1\n\
         TERM\nFACTOR e=1\nG 0 0 -2\nFACTOR e=1\nG 1 0 1\n\
         TERM\nFACTOR e=1\nG 1 0 -1\nFACTOR e=1\nG 1 0 1\n"
    );
    let f = file(&identity);
    for mode in ["whitebox", "brute"] {
        let o = pit(&["diag-test", f.path().to_str().unwrap(), "--mode", mode]);
        assert_eq!(o.status.code(), Some(0), "{mode}: {}", stderr(&o));
    }
}
