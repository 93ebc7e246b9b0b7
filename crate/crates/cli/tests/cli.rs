//! Black-box tests of the `standop` binary: output contents, formats,
//! exit codes, determinism and the config file.

use std::process::{Command, Output};

fn standop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_standop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = standop(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    standop(args).status.code().unwrap()
}

#[test]
fn roots_g2_table() {
    let out = stdout(&["roots", "--algebra", "G2"]);
    assert!(out.contains("6 total"));
    assert!(out.contains("2a1+3a2"));
    assert!(out.contains("a1+2a2"));
}

#[test]
fn roots_single_row_and_error_path() {
    let out = stdout(&["roots", "--algebra", "A1"]);
    assert_eq!(
        out.lines()
            .filter(|l| l.trim_start().starts_with('1'))
            .count(),
        1
    );
    assert_eq!(exit_code(&["roots", "--algebra", "Z9"]), 2);
}

#[test]
fn grading_reports() {
    let out = stdout(&["grading", "--algebra", "G2", "--cross", "1,2"]);
    assert!(out.contains("depth 5"));
    let out = stdout(&["grading", "--algebra", "A4", "--cross", "1,4"]);
    assert!(out.contains("depth 2"));
    assert!(out.contains("g1 (dim 6)"));
    assert!(out.contains("g2 (dim 1)"));
    assert!(out.contains("dim 3"));
    assert_eq!(exit_code(&["grading", "--algebra", "A2", "--cross", ""]), 2);
}

#[test]
fn classify_hessian() {
    let out = stdout(&[
        "classify",
        "--algebra",
        "A1",
        "--cross",
        "1",
        "--weight",
        "-3",
    ]);
    assert!(out.contains("order-2 operator to (1)"));
}

#[test]
fn classify_dominant_all_rejected() {
    let out = stdout(&[
        "classify",
        "--algebra",
        "A2",
        "--cross",
        "1,2",
        "--weight",
        "1,1",
    ]);
    for line in out.lines().skip(1) {
        assert!(line.contains("k = "), "unexpected line: {line}");
        assert!(line.contains("<= 0"), "unexpected line: {line}");
    }
}

#[test]
fn classify_json_schema() {
    let out = stdout(&[
        "classify",
        "--algebra",
        "A1",
        "--cross",
        "1",
        "--weight",
        "-3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "standop.classify/1");
    assert_eq!(v["directions"][0]["exists"], true);
    assert_eq!(v["directions"][0]["order"], 2);
    assert_eq!(v["directions"][0]["target"], "(1)");
}

#[test]
fn hasse_dot_output() {
    let out = stdout(&[
        "hasse",
        "--algebra",
        "G2",
        "--cross",
        "1,2",
        "--weight",
        "0,0",
        "--format",
        "dot",
    ]);
    assert!(out.starts_with("digraph hasse {"));
    assert_eq!(out.matches("[label=\"(").count(), 12);
    assert!(out.contains("style=solid"));
    assert!(out.contains("style=dashed"));
    // a1 edges solid, everything else dashed
    for line in out.lines().filter(|l| l.contains("->")) {
        let solid = line.contains("style=solid");
        let is_a1 = line.contains("\"a1 ");
        assert_eq!(solid, is_a1, "{line}");
    }
}

#[test]
fn hasse_b2_chain() {
    let out = stdout(&[
        "hasse",
        "--algebra",
        "B2",
        "--cross",
        "1",
        "--weight",
        "0,0",
    ]);
    assert!(out.contains("4 vertices, 3 edges"));
    assert!(out.contains("levels [1, 1, 1, 1]"));
}

#[test]
fn hasse_bad_weight() {
    assert_eq!(
        exit_code(&[
            "hasse",
            "--algebra",
            "B2",
            "--cross",
            "1",
            "--weight",
            "x,y"
        ]),
        2
    );
    assert_eq!(
        exit_code(&["hasse", "--algebra", "B2", "--cross", "1", "--weight", "0"]),
        2
    );
}

#[test]
fn expand_formats() {
    assert_eq!(stdout(&["expand", "--order", "0"]).trim(), "s");
    let four = stdout(&["expand", "--order", "4"]);
    assert_eq!(
        four.trim(),
        "D^4 s + 3 D^2(G s) + 4 D(G Ds) + 3 G D^2 s + 9 G^2 s"
    );
    let latex = stdout(&["expand", "--order", "4", "--format", "latex"]);
    assert!(latex.starts_with("\\mathcal{D}_{4} s &= "));
    assert!(!latex.contains("G "));
    let json = stdout(&["expand", "--order", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], "standop.formula/1");
    assert_eq!(v["terms"].as_array().unwrap().len(), 5);
}

#[test]
fn expand_cap() {
    assert_eq!(exit_code(&["expand", "--order", "40"]), 2);
    assert_eq!(
        exit_code(&["expand", "--order", "9", "--order-cap", "8"]),
        2
    );
}

#[test]
fn casimir_queries() {
    let out = stdout(&[
        "casimir",
        "--algebra",
        "A1",
        "--cross",
        "1",
        "--weight",
        "-3",
        "--target",
        "-1",
        "--direction",
        "1",
    ]);
    assert!(out.contains("psi eigenvalue to (-1): -1"));
    assert!(out.contains("j=1: -1"));
    assert!(out.contains("j=2: 0"));
}

#[test]
fn deterministic_output() {
    let args = [
        "hasse",
        "--algebra",
        "G2",
        "--cross",
        "1",
        "--weight",
        "0,0",
        "--format",
        "json",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
}

#[test]
fn config_file_defaults_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("standop-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("standop.conf");
    std::fs::write(&path, "# defaults\nalgebra=G2\nformat=text\n").unwrap();
    let cfg = path.to_str().unwrap();

    let out = stdout(&["roots", "--config", cfg]);
    assert!(out.contains("positive roots of G2"));

    // explicit flag wins over the config value
    let out = stdout(&["roots", "--algebra", "A1", "--config", cfg]);
    assert!(out.contains("positive roots of A1"));

    std::fs::write(&path, "bogus line\n").unwrap();
    assert_eq!(exit_code(&["roots", "--config", cfg]), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn negative_scale_accepted() {
    let out = stdout(&[
        "classify",
        "--algebra",
        "A1",
        "--cross",
        "1",
        "--weight",
        "-3",
        "--scale",
        "-2",
    ]);
    assert!(out.contains("order-2 operator to (1)"));
    assert_eq!(
        exit_code(&[
            "classify",
            "--algebra",
            "A1",
            "--cross",
            "1",
            "--weight",
            "-3",
            "--scale",
            "0"
        ]),
        2
    );
}
