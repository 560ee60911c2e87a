//! End-to-end tests against the compiled binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twystoff"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn solve_reports_outcome() {
    let out = run(&["solve", "4,2,2"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "N\n");

    let out = run(&["solve", "1,3,2"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "P\n");
}

#[test]
fn rules_flag_changes_the_game() {
    // Frozen keeps the interior zero, splitting the position into two
    // equal halves; standard play contracts it away.
    let frozen = run(&["solve", "--rules", "frozen", "3,0,3"]);
    assert_eq!(stdout(&frozen), "P\n");
    let standard = run(&["solve", "--rules", "standard", "3,0,3"]);
    assert_eq!(stdout(&standard), "N\n");
}

#[test]
fn grundy_of_a_pair() {
    let out = run(&["grundy", "1,1"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn options_are_sorted_and_complete() {
    let out = run(&["options", "4,2,2"]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        ["1,2,2", "2,2", "2,2,2", "3,1,2", "3,2,2", "4", "4,1,1", "4,2", "4,2,1"]
    );
}

#[test]
fn bad_position_is_a_usage_error() {
    let out = run(&["solve", "4,x"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("not a stack size"));
}

#[test]
fn verify_runs_finite_and_infinite_suites() {
    let out = run(&["verify", "--suite", "equal_triples", "--bound", "8"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).starts_with("suite equal_triples (bound 8): PASS"));

    let out = run(&["verify", "--suite", "outer_infinities", "--bound", "5"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).starts_with("suite outer_infinities (bound 5): PASS"));
}

#[test]
fn verify_rejects_unknown_suites() {
    let out = run(&["verify", "--suite", "no_such_suite", "--bound", "3"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn verify_list_names_every_suite() {
    let out = run(&["verify", "--suite", "list", "--bound", "0"]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    for name in ["equal_triples", "s_mod3", "a002251_column", "foreclosed_iff"] {
        assert!(text.lines().any(|l| l == name), "missing suite {name}");
    }
}

#[test]
fn infinite_covers_all_three_verdicts() {
    let out = run(&["infinite", "inf,inf,inf"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "P\n");

    let out = run(&["infinite", "2,2,inf"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "N move-to: 2,2,2\n");

    let out = run(&["infinite", "inf,inf,inf,inf,inf,inf,inf"]);
    assert_eq!(exit(&out), 3);
    assert!(stdout(&out).starts_with("UNDECIDED"));
}

#[test]
fn table_csv_has_header_and_cells() {
    let out = run(&["table", "--amax", "2", "--bmax", "2", "--format", "csv"]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,c,class"));
    assert_eq!(lines.next(), Some("0,1,2,non_palindrome"));
    assert!(text.contains("2,1,0,wythoff_pair"));
}

#[test]
fn table_csv_equals_the_library_rendering() {
    let out = run(&["table", "--amax", "6", "--bmax", "5", "--format", "csv"]);
    assert_eq!(exit(&out), 0);
    let solver = twystoff::Solver::new();
    let table = twystoff::build_f_table(&solver, 6, 5).expect("table builds");
    assert_eq!(stdout(&out), table.to_csv());
}

#[test]
fn solve_matches_the_library_on_a_random_sample() {
    let mut state = 0x5EED_5EED_u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        state >> 33
    };
    let solver = twystoff::Solver::new();
    for _ in 0..40 {
        let len = 1 + (next() % 4) as usize;
        let raw: Vec<u64> = (0..len).map(|_| next() % 7).collect();
        let text = raw.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let expected = solver
            .outcome_raw(&raw, twystoff::RuleSet::Standard)
            .expect("library solves");
        let out = run(&["solve", &text]);
        assert_eq!(exit(&out), 0, "solve {text} failed");
        assert_eq!(stdout(&out), format!("{expected}\n"), "solve {text} disagrees");
    }
}

#[test]
fn table_svg_is_svg() {
    let out = run(&["table", "--amax", "2", "--bmax", "2", "--format", "svg"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).starts_with("<svg"));
}

#[test]
fn table_out_writes_a_file() {
    let dir = tempfile::tempdir().expect("tmpdir");
    let path = dir.path().join("f.csv");
    let out = run(&[
        "table",
        "--amax",
        "1",
        "--bmax",
        "1",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit(&out), 0);
    let text = std::fs::read_to_string(&path).expect("file written");
    assert!(text.starts_with("a,b,c,class"));
}

#[test]
fn explore_conjecture2_pins_the_known_candidate() {
    let out = run(&["explore", "conjecture2", "--a", "1", "--bmax", "10", "--cmax", "12"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("candidate b0 = 3, c0 = 6"));
}

#[test]
fn explore_seven_stays_honest() {
    let out = run(&["explore", "seven", "--budget", "1"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("open problem"));
}

#[test]
fn cache_round_trips_through_the_global_flag() {
    let dir = tempfile::tempdir().expect("tmpdir");
    let memo = dir.path().join("m.memo");
    let memo_str = memo.to_str().unwrap();

    let out = run(&["--cache", memo_str, "solve", "4,2,2"]);
    assert_eq!(exit(&out), 0);
    assert!(memo.exists());

    let out = run(&["cache", "load", memo_str]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("loaded"));

    // A second run through the same cache must still answer correctly.
    let out = run(&["--cache", memo_str, "solve", "4,2,2"]);
    assert_eq!(stdout(&out), "N\n");
}

#[test]
fn corrupt_cache_is_a_runtime_error() {
    let dir = tempfile::tempdir().expect("tmpdir");
    let memo = dir.path().join("bad.memo");
    std::fs::write(&memo, "garbage\n").unwrap();
    let out = run(&["cache", "load", memo.to_str().unwrap()]);
    assert_eq!(exit(&out), 1);
    assert!(stderr(&out).contains("memo format error"));
}

fn play_with_script(position: &str, script: &str) -> Output {
    let mut child = bin()
        .args(["play", position])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn play");
    child
        .stdin
        .take()
        .expect("stdin")
        .write_all(script.as_bytes())
        .expect("write script");
    child.wait_with_output().expect("play exits")
}

#[test]
fn play_accepts_a_winning_pair_move() {
    let out = play_with_script("1,1", "P 0 1\n");
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("you took the last tile and win"));
}

#[test]
fn play_reprompts_on_illegal_moves() {
    let out = play_with_script("4,2,2", "L 9\nbogus\nL 1\nquit\n");
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("illegal move"));
    assert!(text.contains("you: L 1 -> 3,2,2"));
    // The engine answers from a losing position with its best try.
    assert!(text.contains("engine: "));
}
