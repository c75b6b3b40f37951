use std::io::Write;
use std::process::Command;

use tempfile::NamedTempFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_latpoly"))
}

fn json_file(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn stdout_of(out: std::process::Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn smooth2d_tally() {
    let out = bin()
        .args(["smooth2d", "--max-points", "12", "--tally"])
        .env("LATPOLY_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(
        stdout_of(out).trim(),
        "3:1 4:1 5:1 6:3 7:3 8:4 9:5 10:7 11:6 12:10"
    );
}

#[test]
fn gauss_image_and_fiber() {
    let f = json_file(r#"{"vertices": [[0,0],[1,0],[3,1],[0,2]]}"#);
    let path = f.path().to_str().unwrap();
    let out = bin()
        .args(["gauss", path, "--order", "2", "--image"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "x0^4*x1^5 x0^5*x1^5 x0^6*x1^5 x0^7*x1^5");
    let out = bin()
        .args(["gauss", path, "--order", "2", "--fiber"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "1 x0 x0^2");
}

#[test]
fn jet_degree_at_corner() {
    let f = json_file(r#"{"vertices": [[-1,-1],[1,-1],[-1,1],[1,1]]}"#);
    let out = bin()
        .args(["jet-degree", f.path().to_str().unwrap(), "--point", "1,1"])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "2");
}

#[test]
fn epsilon_bounds_square() {
    let f = json_file(r#"{"vertices": [[-1,-1],[1,-1],[-1,1],[1,1]]}"#);
    let out = bin()
        .args(["epsilon", f.path().to_str().unwrap(), "--n", "17"])
        .output()
        .unwrap();
    let text = stdout_of(out);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("lower 2 "));
    assert!(lines.next().unwrap().starts_with("upper 2 "));
}

#[test]
fn blowup_square_corner() {
    let f = json_file(r#"{"vertices": [[-1,-1],[1,-1],[-1,1],[1,1]]}"#);
    let out = bin()
        .args([
            "blowup",
            f.path().to_str().unwrap(),
            "--face-vertices",
            "0",
            "--k",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(
        stdout_of(out).trim(),
        r#"{"vertices":[[-1,0],[-1,1],[0,-1],[1,-1],[1,1]]}"#
    );
}

#[test]
fn cayley_sum_and_detection_roundtrip() {
    let f = json_file(r#"{"vertices": [[0],[1]]}"#);
    let g = json_file(r#"{"vertices": [[0],[2]]}"#);
    let out = bin()
        .args([
            "cayley-sum",
            f.path().to_str().unwrap(),
            g.path().to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let sum = stdout_of(out);
    let h = json_file(sum.trim());
    let out = bin()
        .args(["is-cayley", h.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "true");
}

#[test]
fn lattice_points_sorted() {
    let f = json_file(r#"{"vertices": [[0,0],[1,0],[3,1],[0,2]]}"#);
    let out = bin()
        .args(["lattice-points", f.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(
        stdout_of(out).trim(),
        "0,0\n0,1\n0,2\n1,0\n1,1\n2,1\n3,1"
    );
}

#[test]
fn normal_form_is_deterministic() {
    let f = json_file(r#"{"vertices": [[5,7],[6,7],[8,8],[5,9]]}"#);
    let g = json_file(r#"{"vertices": [[0,0],[1,0],[3,1],[0,2]]}"#);
    let a = stdout_of(
        bin()
            .args(["normal-form", f.path().to_str().unwrap()])
            .output()
            .unwrap(),
    );
    let b = stdout_of(
        bin()
            .args(["normal-form", g.path().to_str().unwrap()])
            .output()
            .unwrap(),
    );
    assert_eq!(a, b);
}

#[test]
fn load_3d_tally() {
    let f = json_file(
        r#"[{"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]},
            {"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]}]"#,
    );
    let out = bin()
        .args([
            "load-3d",
            f.path().to_str().unwrap(),
            "--tally-cayley",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout_of(out).trim(), "true:2");
}

#[test]
fn exit_codes() {
    // usage error: unknown subcommand
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // usage error: missing file
    let out = bin().args(["is-smooth", "/nonexistent.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // domain error: blow-up depth too large
    let f = json_file(r#"{"vertices": [[0,0],[1,0],[0,1],[1,1]]}"#);
    let out = bin()
        .args([
            "blowup",
            f.path().to_str().unwrap(),
            "--face-vertices",
            "0",
            "--k",
            "5",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn jets_matrix_output() {
    let f = json_file(r#"{"vertices": [[0,0],[1,0],[0,1]]}"#);
    let out = bin()
        .args([
            "jets",
            f.path().to_str().unwrap(),
            "--order",
            "1",
            "--point",
            "1,1",
        ])
        .output()
        .unwrap();
    // columns follow the sorted lattice point order (0,0),(0,1),(1,0)
    assert_eq!(stdout_of(out).trim(), "1 1 1\n0 0 1\n0 1 0");
}
