use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcoulomb")).args(args).env_remove("DC_TOL").output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = run(args);
    (serde_json::from_slice(&o.stdout).unwrap(), o.status.code().unwrap())
}

fn rows(args: &[&str]) -> Vec<Vec<f64>> {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,g11_re,g11_im,g12_re,g12_im,g21_re,g21_im,g22_re,g22_im"));
    lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect()
}

fn re(v: &Value) -> f64 {
    v["re"].as_f64().unwrap()
}

#[test]
fn function_values() {
    let (v, code) = json(&["fn", "--name", "whittaker-k", "--beta", "0", "--m", "0.5", "--z", "1"]);
    assert_eq!(code, 0);
    assert!((re(&v["result"]) - 0.6065306597).abs() < 1e-9);
    let (v, code) = json(&["fn", "--name", "trig-j", "--beta", "0", "--m", "0.5", "--z", "3.14159265", "--verify"]);
    assert_eq!(code, 0);
    assert!((re(&v["result"]) - 2.0).abs() < 1e-9);
    assert_eq!(v["verification"]["passed"], true);
    assert!(v["result"]["err_est"].as_f64().unwrap() < 1e-8);
}

#[test]
fn domain_errors_exit_2() {
    let (v, code) = json(&["fn", "--name", "gamma", "--z", "-2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["tag"], "PoleAt");
    let (v, code) = json(&["classify", "--omega", "1", "--lambda", "0", "--mu", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["tag"], "OffQuadric");
    // G at a point of 𝓔⁺ on the side that needs N⁺
    let (v, code) = json(&["kernel", "--omega-im", "1.7320508075688772", "--lambda-im", "-2", "--mu", "1", "--k", "1", "--side", "plus"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["tag"], "ExceptionalPoint");
}

#[test]
fn classify_examples() {
    let cases = [(["--omega", "1", "--lambda", "0"], "A"), (["--omega", "0", "--lambda", "0"], "D"), (["--omega", "0", "--lambda", "0.5"], "E")];
    for (a, region) in cases {
        let mut args = vec!["classify"];
        args.extend(a);
        let (v, code) = json(&args);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["region"], region);
        assert_eq!(v["schema"], "dcoulomb.report/1");
    }
    let (v, _) = json(&["classify", "--omega", "1", "--lambda", "0"]);
    assert_eq!(v["result"]["self_adjointness"]["essentially_self_adjoint"], true);
    let (v, _) = json(&["classify", "--omega", "0", "--lambda", "0"]);
    assert_eq!(v["result"]["self_adjointness"]["homogeneous"], "Circle");
}

#[test]
fn kernel_grid_symmetry_and_oracle() {
    let g = rows(&["kernel", "--omega", "5", "--lambda", "4", "--k-re", "0.5", "--k-im", "1", "--nx", "5"]);
    assert_eq!(g.len(), 25);
    // the diagonal carries the jump of the kernel and is skipped
    for a in g.iter().filter(|a| a[0] != a[1]) {
        let b = g.iter().find(|b| b[0] == a[1] && b[1] == a[0]).unwrap();
        // G(x, y) = G(y, x)ᵀ: g12 ↔ g21
        let (ta, tb) = ([a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9]], [b[2], b[3], b[6], b[7], b[4], b[5], b[8], b[9]]);
        let scale = ta.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (u, v) in ta.iter().zip(tb) {
            assert!((u - v).abs() <= 1e-12 * scale, "{a:?} {b:?}");
        }
    }
    let o = run(&["kernel", "--omega", "0", "--lambda", "0.7", "--mu-im", "0.7", "--k-re", "0.6", "--k-im", "-0.8", "--nx", "6", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(rep["verification"]["residuals"]["elementary_kernel"].as_f64().unwrap() < 1e-8);
}

#[test]
fn kernel_scaling_across_runs() {
    // G(k; 2x, 2y) = G(2k; x, y)
    let a = rows(&["kernel", "--omega", "5", "--lambda", "4", "--k-re", "0.5", "--k-im", "1", "--x-min", "0.2", "--x-max", "20", "--nx", "4"]);
    let b = rows(&["kernel", "--omega", "5", "--lambda", "4", "--k-re", "1", "--k-im", "2", "--x-min", "0.1", "--x-max", "10", "--nx", "4"]);
    for (u, v) in a.iter().zip(&b) {
        let scale = v[2..].iter().fold(0.0f64, |m, t| m.max(t.abs()));
        for (p, q) in u[2..].iter().zip(&v[2..]) {
            assert!((p - q).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn eigenvalues_on_a_circle() {
    let mut seen = 0;
    for j in 0..16 {
        let t = 2.0 * std::f64::consts::PI * j as f64 / 16.0;
        let (kr, ki) = (format!("{}", 0.7 * t.cos()), format!("{}", 0.7 * t.sin()));
        let (v, code) = json(&["eigs", "--omega", "0.3", "--lambda", "0.22360679774997896", "--mu", "0.2", "--kappa-re", &kr, "--kappa-im", &ki, "--window", "1e6", "--verify"]);
        assert_eq!(code, 0);
        let ks: Vec<f64> = v["result"]["eigenvalues"].as_array().unwrap().iter().map(|e| {
            assert!(e["residual"].as_f64().unwrap() <= 1e-6);
            re(&e["k"]).hypot(e["k"]["im"].as_f64().unwrap())
        }).collect();
        for r in &ks {
            assert!((r - ks[0]).abs() <= 1e-10 * ks[0]);
        }
        seen += ks.len();
    }
    assert!(seen > 0);
    // c₊ = 0: no eigenvalues
    let (v, code) = json(&["eigs", "--lambda-im", "-0.3", "--mu", "0.3", "--kappa", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["eigenvalues"].as_array().unwrap().len(), 0);
}

#[test]
fn channels_scatter_density() {
    let (v, _) = json(&["channels", "--dim", "3", "--ell", "1"]);
    assert_eq!(v["result"]["omegas"], serde_json::json!([1.0, -1.0]));
    for eps in ["plus", "minus"] {
        let (v, code) = json(&["scatter", "--omega", "5", "--lambda", "4", "--mu", "3", "--eps", eps, "--verify"]);
        assert_eq!(code, 0);
        assert!((v["result"]["modulus"].as_f64().unwrap() - 1.0).abs() < 1e-10);
    }
    let o = run(&["density", "--omega", "0.6", "--lambda", "0.3", "--k", "-1", "--nx", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let rep: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(rep["verification"]["passed"], true);
}

#[test]
fn deterministic_output() {
    let args = ["kernel", "--omega", "5", "--lambda", "4", "--k-re", "0.5", "--k-im", "1", "--nx", "6", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["classify", "--omega-re", "0.2", "--omega-im", "0.3", "--lambda-re", "0.1", "--lambda-im", "-0.2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_failure_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_dcoulomb"))
        .args(["scatter", "--omega", "5", "--lambda", "4", "--mu", "3", "--eps", "plus", "--verify"])
        .env("DC_TOL", "1e-300")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verification"]["passed"], false);
    let o = Command::new(env!("CARGO_BIN_EXE_dcoulomb")).args(["channels", "--dim", "3", "--ell", "1"]).env("DC_TOL", "abc").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
