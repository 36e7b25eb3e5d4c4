//! `dcoulomb`: JSON/CSV front end to the library.
//!
//! Exit codes: 0 success, 2 domain or usage error, 3 a `--verify` residual
//! above tolerance.

mod args;
mod report;

use args::{Cli, Command, FnName, GridArgs, PointArgs, SideArg};
use clap::Parser;
use dcoulomb::complexfn::{digamma, gamma, reg_1f1, reg_2f1, rgamma};
use dcoulomb::mixedbc::{self, eigenvalues, eigenvalues_mu0, matching_residual, mu0_equation_residual, MixedBoundaryData, Window};
use dcoulomb::resolvent::{boundary_grid, elementary_kernel, kernel_grid, spectral_density};
use dcoulomb::scattering::{scattering_value, u_kernel};
use dcoulomb::spectra::{channel_omegas, classify, phase_region};
use dcoulomb::whittaker::{mellin_j_side, trig_h, trig_j, trig_j_side, whittaker_i, whittaker_i_alt, whittaker_k, whittaker_k_combination};
use dcoulomb::{c, Complex64, EnergyContext, Error, KernelGrid, ManifoldPoint, Mat2, Result, Sign, WhittakerParams};
use report::{cplx, Output, Report, Verification};
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::process::ExitCode;

const DEFAULT_TOL: f64 = 1e-8;

fn tolerance() -> std::result::Result<f64, String> {
    match std::env::var("DC_TOL") {
        Ok(s) => s.trim().parse::<f64>().ok().filter(|t| *t > 0.0).ok_or_else(|| format!("DC_TOL must be a positive number, got {s:?}")),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = match tolerance() {
        Ok(t) => t,
        Err(msg) => {
            report::emit_error(&cli.command.name(), &Error::DomainError(msg));
            return ExitCode::from(2);
        }
    };
    match run(&cli.command, tol) {
        Ok(out) => {
            let failed = out.verification.as_ref().is_some_and(|v| !v.passed);
            if let Err(e) = out.write(cli.out.as_deref()) {
                eprintln!("dcoulomb: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if failed { 3 } else { 0 })
        }
        Err(e) => {
            report::emit_error(&cli.command.name(), &e);
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command, tol: f64) -> Result<Output> {
    match cmd {
        Command::Fn(a) => cmd_fn(a, tol),
        Command::Kernel { point, k_re, k_im, side, grid, format, verify } => {
            let p = point.point()?;
            let k = c(*k_re, *k_im);
            let (xs, ys) = grid.nodes()?;
            let g = if k_im.abs() > 0.0 {
                kernel_grid(&p, &EnergyContext::new(k), &xs, &ys)?
            } else {
                let s = side.ok_or_else(|| Error::DomainError("real k needs --side plus|minus".into()))?;
                boundary_grid(&p, *k_re, s.sign(), &xs, &ys)?
            };
            let v = if *verify { Some(verify_kernel(&p, k, side.map(SideArg::sign), &g, tol)?) } else { None };
            let params = json!({ "point": point.echo(&p), "k": cplx(k), "side": side.map(|s| s.name()), "grid": grid.echo() });
            Ok(Output::grid(Report::new(cmd.name(), params, tol, v), g, *format))
        }
        Command::Classify { point, verify } => {
            let p = point.point()?;
            let r = classify(&p)?;
            let v = if *verify {
                let mut v = Verification::new(tol);
                v.check("quadric_membership", p.membership_residual());
                if p.omega.im == 0.0 && p.lambda.im == 0.0 {
                    let same = r.region == Some(phase_region(p.omega.re, p.lambda.re));
                    v.check("region_consistency", if same { 0.0 } else { 1.0 });
                }
                Some(v)
            } else {
                None
            };
            let result = serde_json::to_value(&r).map_err(|e| Error::DomainError(e.to_string()))?;
            Ok(Output::json(Report::new(cmd.name(), json!({ "point": point.echo(&p) }), tol, v).with_result(result)))
        }
        Command::Eigs { point, kappa_re, kappa_im, nu_re, nu_im, window, verify } => cmd_eigs(point, *kappa_re, *kappa_im, *nu_re, *nu_im, *window, *verify, tol),
        Command::Channels { dim, ell, verify } => {
            let ws = channel_omegas(*dim, *ell)?;
            let v = if *verify {
                let mut v = Verification::new(tol);
                let want = match dim {
                    1 => 0.0,
                    2 => (*ell as f64 - 0.5).abs(),
                    d => *ell as f64 + (*d as f64 - 3.0) / 2.0,
                };
                v.check("channel_map", ws.iter().map(|w| (w.abs() - want).abs()).fold(0.0, f64::max));
                Some(v)
            } else {
                None
            };
            Ok(Output::json(Report::new(cmd.name(), json!({ "dim": dim, "ell": ell }), tol, v).with_result(json!({ "omegas": ws }))))
        }
        Command::Scatter { point, eps, verify } => {
            let p = point.point()?;
            let a = scattering_value(&p, eps.sign());
            let result = match a.value() {
                Some(z) => json!({ "tag": a.tag(), "value": cplx(z), "modulus": z.norm() }),
                None => json!({ "tag": a.tag(), "value": Value::Null, "modulus": Value::Null }),
            };
            let v = if *verify {
                let mut v = Verification::new(tol);
                if let Some(z) = a.value() {
                    if p.is_real() {
                        v.check("unit_modulus", (z.norm() - 1.0).abs());
                    }
                    // clutching: 𝓤⁺ = amplitude · 𝓤⁻ at any x
                    let k = eps.sign().f();
                    for x in [0.7, 2.0] {
                        let up = u_kernel(&p, Sign::Plus, k, x)?;
                        let dn = u_kernel(&p, Sign::Minus, k, x)?;
                        v.check(&format!("clutching_x{x}"), (up - dn * z).norm() / up.norm());
                    }
                }
                Some(v)
            } else {
                None
            };
            let params = json!({ "point": point.echo(&p), "eps": eps.name() });
            Ok(Output::json(Report::new(cmd.name(), params, tol, v).with_result(result)))
        }
        Command::Density { point, k, grid, format, verify } => {
            let p = point.point()?;
            let (xs, ys) = grid.nodes()?;
            let mut values = Vec::with_capacity(xs.len() * ys.len());
            for &x in &xs {
                for &y in &ys {
                    values.push(spectral_density(&p, *k, x, y)?);
                }
            }
            let g = KernelGrid { xs: xs.clone(), ys: ys.clone(), values };
            let v = if *verify {
                let mut v = Verification::new(tol);
                let up = boundary_grid(&p, *k, Sign::Plus, &xs, &ys)?;
                let dn = boundary_grid(&p, *k, Sign::Minus, &xs, &ys)?;
                let mut worst = 0.0f64;
                for (i, pi) in g.values.iter().enumerate() {
                    let jump = (up.values[i] - dn.values[i]).scale(1.0 / c(0.0, 2.0 * PI));
                    // the jump is a difference of two kernels; measure against their size
                    let scale = pi.norm_max().max(1e-12 * up.values[i].norm_max());
                    worst = worst.max((jump - *pi).norm_max() / scale);
                }
                v.check("boundary_jump", worst);
                Some(v)
            } else {
                None
            };
            let params = json!({ "point": point.echo(&p), "k": k, "grid": grid.echo() });
            Ok(Output::grid(Report::new(cmd.name(), params, tol, v), g, *format))
        }
    }
}

fn cmd_fn(a: &args::FnArgs, tol: f64) -> Result<Output> {
    let z = c(a.z_re, a.z_im);
    let wp = WhittakerParams::new(c(a.beta_re, a.beta_im), c(a.m_re, a.m_im));
    let (pa, pb, pc) = (c(a.a_re, a.a_im), c(a.b_re, a.b_im), c(a.c_re, a.c_im));
    let sign = a.sign.map(SideArg::sign).unwrap_or(Sign::Plus);
    // primary value and, for --verify, an independent route to the same number
    let (value, alt): (Complex64, Option<Result<Complex64>>) = match a.name {
        FnName::Gamma => {
            let g = gamma(z)?;
            (g, a.verify.then(|| Ok(1.0 / rgamma(z))))
        }
        FnName::Digamma => {
            let d = digamma(z)?;
            // ψ(z+1) = ψ(z) + 1/z
            (d, a.verify.then(|| Ok(digamma(z + 1.0)? - 1.0 / z)))
        }
        FnName::OneF1 => {
            let f = reg_1f1(pa, pc, z)?;
            (f, a.verify.then(|| Ok(z.exp() * reg_1f1(pc - pa, pc, -z)?)))
        }
        FnName::TwoF1 => {
            let f = reg_2f1(pa, pb, pc, z)?;
            (f, a.verify.then(|| Ok((1.0 - z).powc(pc - pa - pb) * reg_2f1(pc - pa, pc - pb, pc, z)?)))
        }
        FnName::WhittakerI => (whittaker_i(wp, z)?, a.verify.then(|| whittaker_i_alt(wp, z))),
        FnName::WhittakerK => (whittaker_k(wp, z)?, a.verify.then(|| whittaker_k_combination(wp, z))),
        FnName::TrigJ => {
            let s = if z.im >= 0.0 { Sign::Minus } else { Sign::Plus };
            (trig_j(wp, z)?, a.verify.then(|| trig_j_side(wp, z, s)))
        }
        FnName::TrigH => {
            let h = trig_h(wp, z, sign)?;
            // 𝓙 = e^{−πβ}(𝓗⁺/Γ(½+m+iβ) + 𝓗⁻/Γ(½+m−iβ)) checks the pair
            let check = || -> Result<Complex64> {
                let ii = c(0.0, 1.0);
                let other = trig_h(wp, z, sign.flip())?;
                let j = trig_j(wp, z)?;
                let (r_self, r_other) = match sign {
                    Sign::Plus => (rgamma(0.5 + wp.m + ii * wp.beta), rgamma(0.5 + wp.m - ii * wp.beta)),
                    Sign::Minus => (rgamma(0.5 + wp.m - ii * wp.beta), rgamma(0.5 + wp.m + ii * wp.beta)),
                };
                if r_self.norm() == 0.0 {
                    return Err(Error::IndeterminateConnection);
                }
                Ok((j * (PI * wp.beta).exp() - other * r_other) / r_self)
            };
            (h, a.verify.then(check))
        }
        FnName::MellinJ => {
            let v = a.v;
            let up = mellin_j_side(wp, v, a.s, Sign::Plus)?;
            (up, a.verify.then(|| mellin_j_side(wp, v, a.s, Sign::Minus)))
        }
    };
    let ver = match alt {
        Some(r) => {
            let mut v = Verification::new(tol);
            let b = r?;
            v.check("independent_route", (value - b).norm() / value.norm().max(b.norm()).max(1e-300));
            Some(v)
        }
        None => None,
    };
    let params = json!({
        "name": a.name.as_str(),
        "z": cplx(z),
        "beta": cplx(wp.beta),
        "m": cplx(wp.m),
        "a": cplx(pa),
        "b": cplx(pb),
        "c": cplx(pc),
        "v": a.v,
        "s": a.s,
        "sign": a.sign.map(|s| s.name()),
    });
    let err = ver.as_ref().and_then(|v| v.max_residual());
    let result = json!({ "re": value.re, "im": value.im, "err_est": err });
    Ok(Output::json(Report::new("fn", params, tol, ver).with_result(result)))
}

fn verify_kernel(p: &ManifoldPoint, k: Complex64, side: Option<Sign>, g: &KernelGrid, tol: f64) -> Result<Verification> {
    let mut v = Verification::new(tol);
    let kernel = |x: f64, y: f64| -> Result<Mat2> {
        if k.im != 0.0 {
            dcoulomb::resolvent::green_kernel(p, &EnergyContext::new(k), x, y)
        } else {
            dcoulomb::resolvent::green_boundary(p, k.re, side.unwrap_or(Sign::Plus), x, y)
        }
    };
    // G(x, y)ᵀ = G(y, x)
    let mut worst = 0.0f64;
    for (i, &x) in g.xs.iter().enumerate() {
        for (j, &y) in g.ys.iter().enumerate() {
            if x == y {
                continue;
            }
            let a = g.get(i, j);
            worst = worst.max((a.t() - kernel(y, x)?).norm_max() / a.norm_max().max(1e-300));
        }
    }
    v.check("transpose_symmetry", worst);
    // the ω = 0 closed form when it applies
    if p.omega.norm() == 0.0 && !p.is_zero_fiber() && k.im != 0.0 {
        let fam = if k.im > 0.0 { Sign::Minus } else { Sign::Plus };
        let matches_family = (p.mu - fam.f() * c(0.0, 1.0) * p.lambda).norm() < 1e-12;
        if matches_family {
            let ctx = EnergyContext::new(k);
            let mut w = 0.0f64;
            for (i, &x) in g.xs.iter().enumerate() {
                for (j, &y) in g.ys.iter().enumerate() {
                    let e = elementary_kernel(p.lambda, fam, &ctx, x, y)?;
                    w = w.max((g.get(i, j) - e).norm_max() / e.norm_max().max(1e-300));
                }
            }
            v.check("elementary_kernel", w);
        }
    }
    Ok(v)
}

#[allow(clippy::too_many_arguments)]
fn cmd_eigs(point: &PointArgs, kappa_re: Option<f64>, kappa_im: f64, nu_re: Option<f64>, nu_im: f64, window: f64, verify: bool, tol: f64) -> Result<Output> {
    let p = point.point()?;
    let win = Window::square(window);
    let mut list = Vec::new();
    let mut worst = 0.0f64;
    let (geometry, extra) = if p.mu.norm() == 0.0 {
        let nu = c(nu_re.ok_or_else(|| Error::DomainError("μ = 0 needs --nu-re/--nu-im".into()))?, nu_im);
        if p.is_zero_fiber() {
            return Err(Error::DomainError("eigs on the zero fiber is not supported".into()));
        }
        let branch = if (p.omega - p.lambda).norm() <= (p.omega + p.lambda).norm() { Sign::Plus } else { Sign::Minus };
        for (k, s) in eigenvalues_mu0(branch, p.lambda, nu)? {
            if !win.contains(k) {
                continue;
            }
            let r = mu0_equation_residual(p.lambda, nu, k, s)?;
            worst = worst.max(r);
            list.push(json!({ "k": cplx(k), "sign": sign_name(s), "residual": r }));
        }
        ("Single", json!({ "nu": cplx(nu) }))
    } else {
        let kappa = c(kappa_re.ok_or_else(|| Error::DomainError("μ ≠ 0 needs --kappa-re/--kappa-im".into()))?, kappa_im);
        let data = MixedBoundaryData::new(p, kappa)?;
        let set = eigenvalues(&data, &win)?;
        for (k, s) in &set.eigenvalues {
            let r = matching_residual(&data, *k, *s)?;
            worst = worst.max(r);
            list.push(json!({ "k": cplx(*k), "sign": sign_name(*s), "residual": r }));
        }
        let cs: Vec<Value> = [Sign::Plus, Sign::Minus]
            .iter()
            .map(|&s| match mixedbc::c_coeff(&p, s) {
                Ok(cv) => match cv.value() {
                    Some(z) => cplx(z),
                    None => json!(format!("{cv:?}")),
                },
                Err(e) => json!(e.tag()),
            })
            .collect();
        let geom = match set.geometry {
            mixedbc::Geometry::Circle => "Circle",
            mixedbc::Geometry::HalfLineDiscrete => "HalfLineDiscrete",
            mixedbc::Geometry::Spiral => "Spiral",
        };
        (geom, json!({ "kappa": cplx(kappa), "c_plus": cs[0], "c_minus": cs[1], "finite": set.finite }))
    };
    let v = if verify {
        let mut v = Verification::new(tol);
        v.check("max_matching_residual", worst);
        Some(v)
    } else {
        None
    };
    let params = json!({ "point": point.echo(&p), "window": window, "data": extra });
    let result = json!({ "geometry": geometry, "eigenvalues": list });
    Ok(Output::json(Report::new("eigs", params, tol, v).with_result(result)))
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

impl GridArgs {
    fn nodes(&self) -> Result<(Vec<f64>, Vec<f64>)> {
        let axis = |lo: f64, hi: f64, n: usize| -> Result<Vec<f64>> {
            if !(lo > 0.0 && hi > lo && n >= 1) {
                return Err(Error::DomainError("grid needs 0 < min < max and n ≥ 1".into()));
            }
            if n == 1 {
                return Ok(vec![lo]);
            }
            Ok((0..n).map(|j| lo * (hi / lo).powf(j as f64 / (n - 1) as f64)).collect())
        };
        Ok((axis(self.x_min, self.x_max, self.nx)?, axis(self.y_min.unwrap_or(self.x_min), self.y_max.unwrap_or(self.x_max), self.ny.unwrap_or(self.nx))?))
    }

    fn echo(&self) -> Value {
        json!({
            "x_min": self.x_min, "x_max": self.x_max, "nx": self.nx,
            "y_min": self.y_min.unwrap_or(self.x_min), "y_max": self.y_max.unwrap_or(self.x_max), "ny": self.ny.unwrap_or(self.nx),
            "spacing": "log",
        })
    }
}

impl PointArgs {
    fn point(&self) -> Result<ManifoldPoint> {
        let w = c(self.omega_re, self.omega_im);
        let l = c(self.lambda_re, self.lambda_im);
        if let Some(r) = &self.ray {
            let im = self.ray_im.clone().unwrap_or_else(|| vec![0.0, 0.0]);
            if w.norm() != 0.0 || l.norm() != 0.0 || self.mu_re.unwrap_or(0.0) != 0.0 || self.mu_im != 0.0 {
                return Err(Error::DomainError("--ray selects the zero fiber; ω, λ, μ must be 0".into()));
            }
            return ManifoldPoint::zero_fiber(c(r[0], im[0]), c(r[1], im[1]));
        }
        let mu = match self.mu_re {
            Some(re) => c(re, self.mu_im),
            None if self.mu_im != 0.0 => c(0.0, self.mu_im),
            None => (w * w - l * l).sqrt(),
        };
        if w.norm() == 0.0 && l.norm() == 0.0 && mu.norm() == 0.0 {
            // the origin is blown up; without a ray take [1:0]
            return ManifoldPoint::zero_fiber(c(1.0, 0.0), c(0.0, 0.0));
        }
        ManifoldPoint::from_triple(w, l, mu)
    }

    fn echo(&self, p: &ManifoldPoint) -> Value {
        json!({
            "omega": cplx(p.omega),
            "lambda": cplx(p.lambda),
            "mu": cplx(p.mu),
            "ray": [cplx(p.ray.a), cplx(p.ray.b)],
            "zero_fiber": p.is_zero_fiber(),
        })
    }
}
