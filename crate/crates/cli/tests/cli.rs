use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_angle-defect"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

const TETRA: &str = r#"{
  "ambient_dim": 3,
  "vertices": [[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]],
  "simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
}"#;

/// The same tetrahedron turned a quarter turn about the z axis.
const TETRA_ROT: &str = r#"{
  "ambient_dim": 3,
  "vertices": [[-1, 1, 1], [1, 1, -1], [-1, -1, -1], [1, -1, 1]],
  "simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, text).unwrap();
    p
}

fn report(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn analyze_classical_on_tetrahedron() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "tetra.json", TETRA);
    let out = run(&["analyze", &t, "--phi", "classical"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = report(&out);
    assert_eq!(r["global"]["euler_characteristic"], 2);
    assert!(r["global"]["residual"].as_f64().unwrap().abs() < 1e-9);
    let rows = r["vertices"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let col: f64 = rows.iter().map(|v| v["classical_defect"].as_f64().unwrap()).sum();
    assert!((col - r["global"]["total_classical_defect"].as_f64().unwrap()).abs() < 1e-9);
    assert_eq!(rows[0]["ord"], 3);
    assert_eq!(rows[0]["link_f_vector"]["f0"], 3);
}

#[test]
fn analyze_psi_third_fails() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "tetra.json", TETRA);
    let out = run(&["analyze", &t, "--phi", "psi:0.3333333333"]);
    assert_eq!(code(&out), 1);
    let residual = report(&out)["global"]["residual"].as_f64().unwrap();
    assert!((residual + 2.0).abs() < 1e-8);
}

#[test]
fn analyze_writes_report_file() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "tetra.json", TETRA);
    let r = path(&dir, "report.json");
    let out = run(&["analyze", &t, "--phi", "standard", "--out", &r]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(r).unwrap()).unwrap();
    assert_eq!(v["function"], "standard");
}

#[test]
fn book_of_three_standard_passes() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "book3.json");
    assert_eq!(code(&run(&["generate", "flap", "--n", "3", "--out", &f])), 0);
    assert_eq!(code(&run(&["analyze", &f, "--phi", "standard"])), 0);
    // The classical defect does not satisfy Gauss–Bonnet off surfaces.
    assert_eq!(code(&run(&["analyze", &f, "--phi", "classical"])), 1);
}

#[test]
fn analyze_exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    assert_eq!(code(&run(&["analyze", &path(&dir, "missing.json")])), 2);
    let garbled = write(&dir, "garbled.json", "{\"ambient_dim\": 3,");
    assert_eq!(code(&run(&["analyze", &garbled])), 2);
    let quad = write(&dir, "quad.off", "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n");
    let out = run(&["analyze", &quad]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 7"));
    let degenerate = write(
        &dir,
        "flat.json",
        r#"{"ambient_dim": 2, "vertices": [[0,0],[1,0],[2,0]], "simplices": [[0,1,2]]}"#,
    );
    assert_eq!(code(&run(&["analyze", &degenerate])), 3);
}

#[test]
fn analyze_off_tetrahedron() {
    let dir = TempDir::new().unwrap();
    let off = write(
        &dir,
        "tetra.off",
        "OFF\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n",
    );
    let out = run(&["analyze", &off]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["global"]["f_vector"]["f1"], 6);
}

#[test]
fn generate_spiral_reports_achieved_omega() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "spiral.json");
    let out = run(&["generate", "spiral", "--omega", "2.5", "--turns", "3", "--out", &f]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let achieved: f64 = stdout
        .lines()
        .find_map(|l| l.strip_prefix("achieved_omega = "))
        .expect("achieved omega printed")
        .parse()
        .unwrap();
    assert!((achieved - 2.5).abs() < 1e-6);
    assert!(Path::new(&f).exists());
}

#[test]
fn generate_fan_and_zero_flap() {
    let dir = TempDir::new().unwrap();
    let fan = path(&dir, "fan.json");
    assert_eq!(code(&run(&["generate", "fan", "--n", "6", "--out", &fan])), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&fan).unwrap()).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);

    let out = run(&["generate", "flap", "--n", "0"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let simplices = v["simplices"].as_array().unwrap();
    assert_eq!(simplices.len(), 3);
    assert_eq!(simplices[2], serde_json::json!([0, 1]));
}

#[test]
fn generator_errors_exit_four() {
    assert_eq!(code(&run(&["generate", "fan", "--n", "1"])), 4);
    assert_eq!(code(&run(&["generate", "polygon", "--angles", "0.3,0.3"])), 4);
    assert_eq!(code(&run(&["generate", "mirror-flap", "--angles", "0.3"])), 4);
    assert_eq!(code(&run(&["generate", "spiral"])), 4);
}

#[test]
fn subdivide_face_centroid() {
    let dir = TempDir::new().unwrap();
    let t = write(&dir, "tetra.json", TETRA);
    let out_path = path(&dir, "split.json");
    let out = run(&["subdivide", &t, "--scheme", "face:0:centroid", "--out", &out_path]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("f = (5, 9, 6)"));
    let r = run(&["analyze", &out_path]);
    let rows = report(&r)["vertices"].as_array().unwrap().clone();
    assert!((rows[4]["angle_sum"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn isometric_exit_codes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "tetra.json", TETRA);
    let b = write(&dir, "tetra_rot.json", TETRA_ROT);
    let out = run(&["isometric", &a, "0", &b, "2"]);
    assert_eq!(code(&out), 0);
    let w: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(w["vertex_bijection"][0], serde_json::json!([0, 2]));

    let fan = path(&dir, "fan.json");
    run(&["generate", "fan", "--n", "5", "--out", &fan]);
    assert_eq!(code(&run(&["isometric", &a, "0", &fan, "0"])), 1);
    assert_eq!(code(&run(&["isometric", &a, "0", &b, "2", "--budget", "1"])), 5);
}

#[test]
fn axiom_check_mu_on_surfaces() {
    let dir = TempDir::new().unwrap();
    let corpus = path(&dir, "surfaces");
    assert_eq!(code(&run(&["corpus", "--set", "surfaces", "--out", &corpus])), 0);
    let report_path = path(&dir, "suite.json");
    let out = run(&["axiom-check", "mu", "--corpus", &corpus, "--out", &report_path]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(report_path).unwrap()).unwrap();
    let status = |axiom: &str| {
        v["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .find(|x| x["axiom"] == axiom)
            .unwrap()["status"]
            .clone()
    };
    assert_eq!(status("gauss_bonnet"), "pass");
    assert_eq!(status("subdivision"), "pass");
    assert_eq!(status("star_isometry"), "fail");
    assert_eq!(status("continuity"), "fail");
    assert!(String::from_utf8_lossy(&out.stderr).contains("witness"));
}

#[test]
fn axiom_check_classical_passes() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "tetra.json", TETRA);
    let corpus = dir.path().join("c");
    fs::create_dir(&corpus).unwrap();
    fs::rename(a, corpus.join("tetra.json")).unwrap();
    let out = run(&["axiom-check", "classical", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}
