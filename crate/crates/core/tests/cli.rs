//! End-to-end checks of the command-line interface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braid-deform"))
}

#[test]
fn analyze_inline_json_text_report() {
    let out = bin()
        .args([
            "analyze",
            "--input",
            r#"{"n":3,"edges":[[0,1],[1,2]]}"#,
            "--k",
            "0",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("verdict: NotFree"), "{stdout}");
    assert!(stdout.contains("chi affine: t^3 - 5*t^2 + 7*t"), "{stdout}");
    assert!(
        stdout.contains("forbidden triple: Path witness=(0,1,2)"),
        "{stdout}"
    );
}

#[test]
fn analyze_json_output() {
    let out = bin()
        .args(["analyze", "--input", r#"{"n":3,"edges":[]}"#, "--json"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "FreePredicted");
    assert_eq!(report["cone_roots"], serde_json::json!([0, 1, 1, 2]));
    assert_eq!(report["a1a2_ordering"], serde_json::json!([0, 1, 2]));
}

#[test]
fn analyze_reads_text_format_files() {
    let dir = std::env::temp_dir();
    let path = dir.join("braid_deform_cli_test_digraph.txt");
    std::fs::write(&path, "# three-cycle\nn 3\n0 1\n1 2\n2 0\n").unwrap();
    let out = bin()
        .args(["analyze", "--input", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("forbidden triple: Cycle"), "{stdout}");
    assert!(stdout.contains("verdict: NotFree"), "{stdout}");
}

#[test]
fn analyze_rejects_bad_input_with_exit_2() {
    let out = bin()
        .args(["analyze", "--input", r#"{"n":2,"edges":[[0,0]]}"#])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn verify_lemma_exits_zero() {
    let out = bin()
        .args(["verify", "lemma", "--k-max", "1"])
        .env("BRAID_DEFORM_WORKERS", "2")
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("violations: 0"), "{stdout}");
}

#[test]
fn verify_prop_char_small() {
    let out = bin()
        .args(["verify", "prop-char", "--n", "3"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("64 digraphs"), "{stdout}");
}

#[test]
fn verify_ten_cases_exits_zero() {
    let out = bin().args(["verify", "ten-cases"]).output().unwrap();
    assert!(out.status.success(), "{out:?}");
}

#[test]
fn enumerate_streams_text_blocks() {
    let out = bin().args(["enumerate", "--n", "2"]).output().unwrap();
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let blocks: Vec<&str> = stdout.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    assert!(blocks[0].starts_with("n 2"));

    // On 2 vertices every digraph satisfies (A1)/(A2) and none is forbidden.
    let filtered = bin()
        .args(["enumerate", "--n", "2", "--filter", "a1a2"])
        .output()
        .unwrap();
    let filtered_stdout = String::from_utf8(filtered.stdout).unwrap();
    assert_eq!(filtered_stdout, stdout);

    let forbidden = bin()
        .args(["enumerate", "--n", "2", "--filter", "forbidden"])
        .output()
        .unwrap();
    assert!(String::from_utf8(forbidden.stdout).unwrap().is_empty());
}

#[test]
fn enumerate_rejects_large_n() {
    let out = bin().args(["enumerate", "--n", "6"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}
