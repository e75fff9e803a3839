//! End-to-end tests of the command-line surface: dispatch, exit codes,
//! output formats and report determinism.

use std::process::{Command, Output};

fn mocktheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mocktheta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn eval_phi_matches_golden() {
    let out = mocktheta(&[
        "eval", "phi", "family=A", "m=1", "s=1", "tau=1.1i", "z1=0.23", "z2=-0.41", "t=0",
        "--output", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let re = v["re"].as_f64().unwrap();
    let im = v["im"].as_f64().unwrap();
    assert!((re - 9.67872492683488739e-1).abs() < 1e-11);
    assert!((im - -3.35725065596147454e-2).abs() < 1e-11);
}

#[test]
fn eval_phi_antisymmetry_fixed_point() {
    let out = mocktheta(&[
        "eval", "phi", "family=A", "m=1", "s=0", "tau=1.2i", "z1=0.3", "z2=-0.3", "t=0", "--output",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["re"].as_f64().unwrap().abs() < 1e-12);
    assert!(v["im"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn eval_rejects_lower_half_plane_with_usage_exit() {
    let ok = mocktheta(&["eval", "theta", "j=1", "m=1", "tau=i", "z=0"]);
    assert!(ok.status.success());
    let bad = mocktheta(&["eval", "theta", "j=1", "m=1", "tau=-i", "z=0"]);
    assert_eq!(bad.status.code(), Some(2));
    let unknown = mocktheta(&["eval", "zeta", "tau=i"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn qexp_eta_pentagonal() {
    let out = mocktheta(&["qexp", "eta", "--order", "5", "--output", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "exponent,re,im");
    let expos: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(expos, vec!["1/24", "25/24", "49/24", "121/24", "169/24"]);
}

#[test]
fn qexp_theta_squares() {
    let out = mocktheta(&["qexp", "theta", "j=0", "m=1", "z=0", "--order", "3", "--output", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows[0].starts_with("0/1,1"));
    assert!(rows[1].starts_with("1/1,2"));
    assert!(rows[2].starts_with("4/1,2"));
}

#[test]
fn qexp_real_analytic_rejected() {
    let out = mocktheta(&["qexp", "phi_tilde"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn smatrix_shapes_and_constraints() {
    let out = mocktheta(&["smatrix", "n2", "-M", "3", "--m", "1", "--s", "0", "--output", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert_eq!(v["cols"].as_array().unwrap().len(), 3);
    // N=3 NS->NS at M=3, m=0 is symmetric
    let o3 = mocktheta(&["smatrix", "n3", "-M", "3", "--m", "0", "--output", "json"]);
    let v3: serde_json::Value = serde_json::from_str(&stdout(&o3)).unwrap();
    let e = v3["entries"].as_array().unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert!((e[i][j]["re"].as_f64().unwrap() - e[j][i]["re"].as_f64().unwrap()).abs() < 1e-12);
        }
    }
    // gcd violation is a usage error
    let bad = mocktheta(&["smatrix", "n2", "-M", "2", "--m", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn charnums_n3_central_charge() {
    let out = mocktheta(&["charnums", "n3", "-M", "3", "--m", "0", "--sector", "ns", "--output", "csv"]);
    assert!(out.status.success());
    for line in stdout(&out).lines().skip(1) {
        assert_eq!(line.split(',').nth(2).unwrap(), "-1");
    }
}

#[test]
fn verify_filter_passes_and_reports_deterministically() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("mocktheta-report-a.json");
    let p2 = dir.join("mocktheta-report-b.json");
    let a = mocktheta(&["verify", "--filter", "Thm1.12*", "--seed", "7", "--report-path", p1.to_str().unwrap()]);
    assert!(a.status.success());
    let b = mocktheta(&["verify", "--filter", "Thm1.12*", "--seed", "7", "--report-path", p2.to_str().unwrap()]);
    assert!(b.status.success());
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap(), "reports must be byte-identical");
    let parsed: serde_json::Value = serde_json::from_slice(&std::fs::read(&p1).unwrap()).unwrap();
    assert_eq!(parsed["seed"], 7);
    assert!(parsed["pass"].as_bool().unwrap());
}

#[test]
fn verify_loose_tail_tol_fails() {
    // deliberately violating the tolerance hierarchy must surface failures
    let p = std::env::temp_dir().join("mocktheta-report-loose.json");
    let out = mocktheta(&[
        "verify", "--filter", "Prop6.1.*", "--tail-tol", "1e-4", "--report-path", p.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_names_functions() {
    let out = mocktheta(&["list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("phi_tilde"));
    assert!(text.contains("Prop1.10"));
}
