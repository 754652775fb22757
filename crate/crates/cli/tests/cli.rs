//! End-to-end tests of the `famalg` binary: command surface, report
//! determinism, exit codes, and re-ingestion of emitted bases.

use std::io::Write;
use std::process::{Command, Output};

fn famalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_famalg"))
        .args(args)
        .env_remove("FAMALG_WORKERS")
        .output()
        .expect("spawn famalg")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn poisson_of_generators() {
    let out = famalg(&["--preset", "sl2", "poisson", "e", "f"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "poisson(e, f) = h\n");
}

#[test]
fn star_product_and_order_flag() {
    let out = famalg(&["--preset", "sl2", "star", "e", "f"]);
    assert_eq!(stdout(&out), "star(e, f) = e*f + 1/2*t*h\n");
    let out = famalg(&["--preset", "sl2", "star", "e", "f", "--order", "1"]);
    assert_eq!(stdout(&out), "star(e, f) = 1/2*h\n");
    let out = famalg(&["--preset", "heisenberg3", "star", "p", "q"]);
    assert_eq!(stdout(&out), "star(p, q) = p*q + 1/2*t*z\n");
}

#[test]
fn nc_poisson_on_matrices() {
    // {M, M} = -2M
    let m = "[[1/2*h, f], [e, -1/2*h]]";
    let out = famalg(&["--preset", "sl2", "poisson", m, m]);
    assert_eq!(stdout(&out), "poisson([[1/2*h, f], [e, -1/2*h]], [[1/2*h, f], [e, -1/2*h]]) = [[-h, -2*f], [-2*e, h]]\n");
}

#[test]
fn check_reports_valid_presets() {
    let out = famalg(&["--preset", "affine2", "--rep", "adjoint", "check"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("algebra affine2: valid"));
    assert!(text.contains("representation adjoint: valid"));
}

#[test]
fn emitted_invariant_basis_reingests_as_invariants() {
    let out = famalg(&["--preset", "sl2", "invariants", "--degree", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dimension 2"), "got: {text}");

    // Re-ingest every emitted element and verify invariance exactly.
    use famalg_core::expr::parse_matrix;
    use famalg_core::family::Family;
    use famalg_core::lie::sl2;
    use famalg_core::rep::sl2_standard;
    let fam = Family::new(sl2(), sl2_standard());
    let mut seen = 0;
    for line in text.lines() {
        let Some((_, expr)) = line.trim_start().split_once("] ") else {
            continue;
        };
        let m = parse_matrix(fam.lie(), expr).expect("re-parse emitted element");
        assert!(fam.is_classical_invariant(&m), "emitted element not invariant: {expr}");
        seen += 1;
    }
    assert_eq!(seen, 2);
}

#[test]
fn suite_output_is_byte_identical_for_fixed_options() {
    let args = [
        "--preset", "sl2", "suite", "dP_zero", "--degree", "1", "--seed", "7", "--budget", "100",
    ];
    let a = famalg(&args);
    let b = famalg(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("suite dP_zero: PASS"));
}

#[test]
fn json_report_has_versioned_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = famalg(&[
        "--preset",
        "sl2",
        "--out",
        path.to_str().unwrap(),
        "suite",
        "pbw_center",
        "--degree",
        "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["command"], "suite");
    assert_eq!(json["result"]["kind"], "suites");
    assert_eq!(json["result"]["all_zero"], true);
    let report = &json["result"]["reports"][0];
    assert_eq!(report["suite"], "pbw_center");
    assert!(report["wall_ms"].is_u64());
    assert_eq!(report["seed"], 0);
}

#[test]
fn spec_file_with_explicit_brackets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("heis.toml");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(
        f,
        "[algebra]\nbasis = [\"p\", \"q\", \"z\"]\nbrackets = [[1, 2, 3, \"1\"]]\n\n[representation]\npreset = \"trivial\"\n"
    )
    .unwrap();
    let out = famalg(&[
        "--spec",
        path.to_str().unwrap(),
        "suite",
        "poisson_vanish_Ig",
        "--degree",
        "2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn invalid_spec_exits_with_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(
        &path,
        "[algebra]\nbasis = [\"x\", \"y\", \"z\"]\nbrackets = [[1, 2, 3, \"1\"], [2, 1, 3, \"1\"]]\n",
    )
    .unwrap();
    let out = famalg(&["--spec", path.to_str().unwrap(), "check"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("antisymmetry"), "got: {err}");
    assert!(err.contains("(i=1, j=2, k=3)"), "got: {err}");
}

#[test]
fn bad_inputs_exit_with_usage_error() {
    let out = famalg(&["--preset", "sl2", "suite", "no_such_suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));

    let out = famalg(&["--preset", "sl2", "poisson", "e +", "f"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parse error"));

    let out = famalg(&["--preset", "nope", "check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown algebra preset"));

    let out = famalg(&["--preset", "sl2", "suite", "dP_zero", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn workers_env_does_not_change_output() {
    let args = [
        "--preset", "sl2", "suite", "mu_square_zero", "--degree", "1", "--seed", "3", "--budget",
        "64",
    ];
    let serial = famalg(&args);
    let parallel = Command::new(env!("CARGO_BIN_EXE_famalg"))
        .args(args)
        .env("FAMALG_WORKERS", "4")
        .output()
        .expect("spawn famalg");
    assert!(serial.status.success());
    assert!(parallel.status.success());
    assert_eq!(stdout(&serial), stdout(&parallel));
}
