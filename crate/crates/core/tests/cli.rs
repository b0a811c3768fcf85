use std::path::Path;
use std::process::{Command, Output};

use landau_delta::cli::main_with_args;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_landau-delta"));
    c.env("NO_COLOR", "1");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn field_csv_schema() {
    let o = run(&["field", "--grid", "3,3", "--extent", "-1,1,-1,1"]);
    assert!(o.status.success());
    let (header, rows) = csv(&stdout(&o));
    assert_eq!(header.join(","), "x,y,re_psi,im_psi,prob,jx,jy,curl");
    assert_eq!(rows.len(), 9);
    for r in &rows {
        assert_eq!(r.len(), 8);
        assert!(((r[2] * r[2] + r[3] * r[3]) - r[4]).abs() <= 1e-8 * r[4]);
        if r[1] == 0.0 {
            assert_eq!(r[5], 0.0);
        }
    }
    // y is the outer loop
    assert_eq!((rows[1][0], rows[1][1]), (0.0, -1.0));
    assert_eq!((rows[3][0], rows[3][1]), (-1.0, 0.0));
    let origin = &rows[4];
    assert!((origin[4] - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-9);
}

#[test]
fn field_json_keys_match_csv() {
    let o = run(&["field", "--grid", "2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rec = v[0].as_object().unwrap();
    let keys: Vec<&str> = rec.keys().map(String::as_str).collect();
    for k in ["x", "y", "re_psi", "im_psi", "prob", "jx", "jy", "curl"] {
        assert!(keys.contains(&k));
    }
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn field_to_file_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        assert!(run(&["field", "--grid", "15,11", "--out", p.to_str().unwrap()]).status.success());
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    assert_eq!(String::from_utf8(x).unwrap().lines().count(), 1 + 15 * 11);
}

#[test]
fn solve_log_report() {
    let o = run(&["solve", "--lambda", "12.566", "--cutoff", "1000", "--method", "log"]);
    let text = stdout(&o);
    let b: f64 = text
        .lines()
        .find(|l| l.starts_with("b "))
        .and_then(|l| l.split_whitespace().nth(1))
        .unwrap()
        .parse()
        .unwrap();
    assert!((b - 581.98).abs() < 0.1, "{b}");
}

#[test]
fn solve_json_round_trip() {
    let o = run(&["solve", "--method", "exact", "--cutoff", "1000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let again: serde_json::Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    for k in ["b", "energy", "binding", "c_norm", "method", "residual"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert!((v["b"].as_f64().unwrap() - 583.0586).abs() < 1e-3);
    assert_eq!(v["method"], "exact");
}

#[test]
fn validation_names_the_field() {
    let o = run(&["solve", "--lambda", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("lambda"));
    assert_eq!(run(&["solve", "--method", "newton"]).status.code(), Some(2));
    assert_eq!(run(&["--grid", "1,5", "field"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn compare_report() {
    let o = run(&["compare", "--e0", "1.0", "--field-kg", "1.0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["ratio_exact"].as_f64().unwrap() - 415.64).abs() < 0.01);
    assert_eq!(v["ratio_paper"].as_f64().unwrap(), 400.0);
    assert!((v["deviation_percent"].as_f64().unwrap() - 3.76).abs() < 0.01);
    let o = run(&["compare", "--e0", "0.1", "--field-kg", "50", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["ratio_paper"].as_f64().unwrap() - 17.8885).abs() < 1e-3);
    // r0 beyond a tenth of l0
    assert_eq!(run(&["compare", "--e0", "1", "--r0", "1e-8"]).status.code(), Some(2));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn vortices_nan_sentinel_and_warning() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", r#"[{"x": 0.0, "y": 0.0, "intensity": 1.0}]"#);
    let o = run(&["vortices", "--centers", &c, "--grid", "5,5", "--extent", "-1,1,-1,1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("x,y,jx,jy\n"));
    let center = text.lines().nth(1 + 12).unwrap();
    assert_eq!(center, "0.00000000e+00,0.00000000e+00,NaN,NaN");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning: 1 sample"));
}

#[test]
fn single_vortex_follows_field_pattern() {
    // a center at the origin points its current the same way as the ground
    // state; with the frozen intensity I(z)/(A a²) it matches exactly
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", r#"[{"x": 0.0, "y": 0.0, "intensity": 1.0}]"#);
    let (_, vort) = csv(&stdout(&run(&["vortices", "--centers", &c, "--grid", "9,9"])));
    let (_, field) = csv(&stdout(&run(&["field", "--grid", "9,9"])));
    let mut checked = 0;
    for (v, f) in vort.iter().zip(&field) {
        let (x, y) = (v[0], v[1]);
        let r2 = x * x + y * y;
        if r2 == 0.0 || checked == 5 {
            continue;
        }
        let frozen = r2 * (-r2 / 2.0f64).exp();
        assert!((v[2] * frozen - f[5]).abs() <= 1e-7 * f[5].abs().max(1e-12));
        assert!((v[3] * frozen - f[6]).abs() <= 1e-7 * f[6].abs().max(1e-12));
        checked += 1;
    }
    assert_eq!(checked, 5);
}

#[test]
fn symmetric_vortex_pair_cancels_at_midpoint() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(
        dir.path(),
        "c.json",
        r#"[{"x": -1.0, "y": 0.0, "intensity": 0.5}, {"x": 1.0, "y": 0.0, "intensity": 0.5}]"#,
    );
    let (_, rows) = csv(&stdout(&run(&["vortices", "--centers", &c, "--grid", "5,5", "--extent", "-2,2,-2,2"])));
    let mid = rows.iter().find(|r| r[0] == 0.0 && r[1] == 0.0).unwrap();
    assert!(mid[2].hypot(mid[3]) <= 1e-10 * 0.5);
}

#[test]
fn vortices_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "e.json", "[]");
    let junk = write(dir.path(), "j.json", "{not json");
    let extra = write(dir.path(), "x.json", r#"[{"x": 0, "y": 0, "intensity": 1, "q": 2}]"#);
    let neg = write(dir.path(), "n.json", r#"[{"x": 0, "y": 0, "intensity": -1}]"#);
    for p in [&empty, &junk, &extra, &neg] {
        assert_eq!(run(&["vortices", "--centers", p]).status.code(), Some(2), "{p}");
    }
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["vortices", "--centers", missing.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["solve", "--method", "exact", "--lambda", "1e-12", "--cutoff", "10"]).status.code(), Some(3));
    assert_eq!(run(&["field", "--grid", "3,3", "--out", "/nonexistent-dir/f.csv"]).status.code(), Some(4));
    assert_eq!(run(&["--config", "/nonexistent-dir/c.toml", "solve"]).status.code(), Some(4));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_default_and_fault() {
    let o = run(&["verify", "--verbose"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let checks: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS")).collect();
    assert!(checks.len() >= 12);
    assert!(checks.iter().all(|l| l.contains("(<=") || l.contains("(in [")));
    assert!(!text.contains('\x1b'));

    let o = run(&["verify", "--perturb-j0", "1.01"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let line = |name: &str| text.lines().find(|l| l.contains(name)).unwrap().to_owned();
    assert!(line("max |div j|").starts_with("PASS"));
    assert!(line("curl of current").starts_with("FAIL"));
}

#[test]
fn config_file_and_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "run.toml",
        "[solver]\ncutoff = 1000\nmethod = \"exact\"\n\n[grid]\nnx = 4\nny = 3\n",
    );
    let shown = stdout(&run(&["--config", &cfg, "--show-config"]));
    let parsed: toml::Value = toml::from_str(&shown).unwrap();
    assert_eq!(parsed["solver"]["cutoff"].as_integer(), Some(1000));
    assert_eq!(parsed["grid"]["nx"].as_integer(), Some(4));
    assert_eq!(parsed["physics"]["units"].as_str(), Some("natural"));

    let (_, rows) = csv(&stdout(&run(&["--config", &cfg, "field"])));
    assert_eq!(rows.len(), 12);
    let (_, rows) = csv(&stdout(&run(&["--config", &cfg, "--grid", "2,2", "field"])));
    assert_eq!(rows.len(), 4);

    let bad = write(dir.path(), "bad.toml", "[solver]\ncutof = 3\n");
    assert_eq!(run(&["--config", &bad, "solve"]).status.code(), Some(2));
}

#[test]
fn gaussian_units() {
    let o = run(&["--units", "gaussian", "--field-kg", "10", "solve", "--cutoff", "1000", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["units"], "gaussian");
    // ħω at 10 kG is 0.1158 meV
    let ratio = v["binding"].as_f64().unwrap() / v["binding_hbar_omega"].as_f64().unwrap();
    assert!((ratio - 1.157_676e-4).abs() < 1e-8, "{ratio}");
}

#[test]
fn in_process_entry_point() {
    assert_eq!(main_with_args(["landau-delta", "solve", "--lambda", "0"]), 2);
    assert_eq!(main_with_args(["landau-delta", "--show-config"]), 0);
}
