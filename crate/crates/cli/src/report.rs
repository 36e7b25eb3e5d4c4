use crate::args::Format;
use dcoulomb::{Complex64, Error, KernelGrid};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write as _;

pub const SCHEMA: &str = "dcoulomb.report/1";

pub fn cplx(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

/// Named residuals against one tolerance.
#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub tolerance: f64,
    pub residuals: Vec<(String, f64)>,
    pub passed: bool,
}

impl Verification {
    pub fn new(tolerance: f64) -> Self {
        Verification { tolerance, residuals: Vec::new(), passed: true }
    }

    pub fn check(&mut self, name: &str, r: f64) {
        if r.is_nan() || r > self.tolerance {
            self.passed = false;
        }
        self.residuals.push((name.to_string(), r));
    }

    pub fn max_residual(&self) -> Option<f64> {
        self.residuals.iter().map(|r| r.1).reduce(f64::max)
    }

    fn to_json(&self) -> Value {
        let rs: serde_json::Map<String, Value> = self.residuals.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({ "tolerance": self.tolerance, "passed": self.passed, "residuals": rs })
    }
}

pub struct Report {
    command: String,
    params: Value,
    tol: f64,
    result: Value,
    pub verification: Option<Verification>,
}

impl Report {
    pub fn new(command: impl Into<String>, params: Value, tol: f64, verification: Option<Verification>) -> Self {
        Report { command: command.into(), params, tol, result: Value::Null, verification }
    }

    pub fn with_result(mut self, result: Value) -> Self {
        self.result = result;
        self
    }

    fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "parameters": self.params,
            "result": self.result,
            "tolerance": { "verify": self.tol },
            "verification": self.verification.as_ref().map(Verification::to_json),
        })
    }
}

pub enum Payload {
    Json,
    Grid(KernelGrid, Format),
}

pub struct Output {
    report: Report,
    payload: Payload,
    pub verification: Option<Verification>,
}

impl Output {
    pub fn json(report: Report) -> Self {
        let verification = report.verification.clone();
        Output { report, payload: Payload::Json, verification }
    }

    pub fn grid(report: Report, g: KernelGrid, format: Format) -> Self {
        let report = report.with_result(json!({ "rows": g.values.len(), "columns": CSV_HEADER }));
        let verification = report.verification.clone();
        Output { report, payload: Payload::Grid(g, format), verification }
    }

    pub fn render(&self) -> String {
        match &self.payload {
            Payload::Json => pretty(&self.report.to_json()),
            Payload::Grid(g, Format::Json) => {
                let mut r = self.report.to_json();
                let values: Vec<Value> = g
                    .values
                    .iter()
                    .map(|m| json!([[cplx(m.0[0][0]), cplx(m.0[0][1])], [cplx(m.0[1][0]), cplx(m.0[1][1])]]))
                    .collect();
                r["result"] = json!({ "xs": g.xs, "ys": g.ys, "values": values });
                pretty(&r)
            }
            Payload::Grid(g, Format::Csv) => csv(g),
        }
    }

    /// CSV goes to the target and the report (for `--verify`) to stderr.
    pub fn write(&self, path: Option<&str>) -> std::io::Result<()> {
        let body = self.render();
        match path {
            Some(p) => std::fs::write(p, body.as_bytes())?,
            None => std::io::stdout().lock().write_all(body.as_bytes())?,
        }
        if let (Payload::Grid(_, Format::Csv), Some(_)) = (&self.payload, &self.verification) {
            std::io::stderr().lock().write_all(pretty(&self.report.to_json()).as_bytes())?;
        }
        Ok(())
    }
}

pub const CSV_HEADER: &str = "x,y,g11_re,g11_im,g12_re,g12_im,g21_re,g21_im,g22_re,g22_im";

fn csv(g: &KernelGrid) -> String {
    let mut s = String::with_capacity(64 + g.values.len() * 200);
    s.push_str(CSV_HEADER);
    s.push('\n');
    for (i, x) in g.xs.iter().enumerate() {
        for (j, y) in g.ys.iter().enumerate() {
            let m = g.get(i, j);
            write!(s, "{},{}", num(*x), num(*y)).unwrap();
            for r in 0..2 {
                for col in 0..2 {
                    write!(s, ",{},{}", num(m.0[r][col].re), num(m.0[r][col].im)).unwrap();
                }
            }
            s.push('\n');
        }
    }
    s
}

/// Shortest round-trip decimal (at most 17 significant digits).
fn num(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).unwrap()
    } else {
        "nan".into()
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// Machine-readable error object on stdout.
pub fn emit_error(command: &str, e: &Error) {
    let v = json!({
        "schema": SCHEMA,
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "error": { "tag": e.tag(), "message": e.to_string() },
    });
    print!("{}", pretty(&v));
}
