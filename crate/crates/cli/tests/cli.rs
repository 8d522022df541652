//! Black-box tests of the `chromaloc` binary: output formats, the exact
//! moment-path agreement, determinism, and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromaloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn chrompoly_triangle() {
    assert_eq!(stdout(&["chrompoly", "--gen", "complete:3"]), "0 2 -3 1\n");
    assert_eq!(
        stdout(&["chrompoly", "--gen", "complete:3", "--format", "json"]),
        "[\"0\",\"2\",\"-3\",\"1\"]\n"
    );
}

#[test]
fn chrompoly_methods_agree() {
    let dc = stdout(&["chrompoly", "--gen", "petersen", "--method", "dc"]);
    let ex = stdout(&["chrompoly", "--gen", "petersen", "--method", "expansion"]);
    assert_eq!(dc, ex);
}

#[test]
fn moment_paths_byte_identical() {
    let newton = stdout(&["moments", "--gen", "petersen", "--kmax", "5", "--method", "newton"]);
    let hom = stdout(&["moments", "--gen", "petersen", "--kmax", "5", "--method", "hom"]);
    assert_eq!(newton, hom);
    assert_eq!(newton.lines().take(3).collect::<Vec<_>>(), ["15", "15", "15"]);
}

#[test]
fn hom_counts_edges_twice() {
    assert_eq!(stdout(&["hom", "gen:complete:2", "gen:petersen"]).trim(), "30");
}

#[test]
fn deterministic_reruns() {
    let args = [
        "converge",
        "--family",
        "random-regular:3,5,7",
        "--sizes",
        "14,16",
        "--kmax",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn balls_on_cycle() {
    let out = stdout(&["balls", "--gen", "cycle:8", "--radius", "1"]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("1/1 "));
}

#[test]
fn roots_svg_is_wellformed() {
    let svg = stdout(&["roots", "--gen", "cycle:6", "--format", "svg"]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.matches("<circle").count() >= 6);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["chrompoly"]).status.code(), Some(2));
    assert_eq!(run(&["chrompoly", "--gen", "nosuchfamily:3"]).status.code(), Some(2));
    // loop edge in an edge-list file
    let path = std::env::temp_dir().join("chromaloc-loop-edge.txt");
    std::fs::write(&path, "2 1\n0 0\n").unwrap();
    let out = run(&["chrompoly", "--edges", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loop"));
}

#[test]
fn budget_errors_exit_3() {
    // radius-3 balls in a 10x10 torus have 25 vertices, past the
    // canonicalization size cap
    let out = run(&["balls", "--gen", "torus:2,10", "--radius", "3"]);
    assert_eq!(out.status.code(), Some(3));
}
