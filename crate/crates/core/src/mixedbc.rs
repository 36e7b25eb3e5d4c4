//! Eigenvalues of the non-homogeneous realizations `D^f_{ω,λ}` with
//! `|Re μ| < ½`, where the boundary function is
//! `f = (ω−λ, −μ)x^μ + κ(ω−λ, μ)x^{−μ}` for `μ ≠ 0`,
//! `f = (1,0) ∓ 2λ(ln(e^{2γ}x) + ν)(0,1)` (resp. the swapped form) for
//! `μ = 0, ω = ±λ`, and `f = (1, κ)` on `ω = λ = 0`.
//!
//! `k` is an eigenvalue iff `κ(∓2ik)^{2μ} = c_{p,±}` with `(k, ±)`
//! admissible. The solutions are `k = ±(i/2)e^w` with
//! `w ∈ (1/2μ)Ln(c_{p,±}/κ)` and `|Im w| < π/2` (`≤` where real
//! eigenvalues are admissible).

use crate::complexfn::{digamma, rgamma};
use crate::manifold::ManifoldPoint;
use crate::solutions::{ode_oracle, zeta, EnergyContext, Spinor};
use crate::{c, Complex64, Error, Result, Sign};
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, PI};

const BAND_TOL: f64 = 1e-12;

/// `c_{p,±}` in `ℂ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CValue {
    Zero,
    Infinite,
    Finite(Complex64),
}

impl CValue {
    pub fn value(self) -> Option<Complex64> {
        match self {
            CValue::Finite(v) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedBoundaryData {
    pub p: ManifoldPoint,
    pub kappa: Complex64,
}

impl MixedBoundaryData {
    pub fn new(p: ManifoldPoint, kappa: Complex64) -> Result<Self> {
        if !(p.mu.re.abs() < 0.5) {
            return Err(Error::domain("mixed boundary conditions need |Re μ| < ½"));
        }
        if p.mu == c(0.0, 0.0) {
            return Err(Error::domain("μ = 0 is parametrized by ν; use eigenvalues_mu0"));
        }
        if kappa == c(0.0, 0.0) || !kappa.is_finite() {
            return Err(Error::domain("κ must be finite and nonzero"));
        }
        Ok(MixedBoundaryData { p, kappa })
    }

    /// `f(x)`.
    pub fn boundary_function(&self, x: f64) -> Spinor {
        let (w, l, mu) = (self.p.omega, self.p.lambda, self.p.mu);
        let xp = c(x, 0.0).powc(mu);
        Spinor::new(w - l, -mu) * xp + Spinor::new(w - l, mu) * (self.kappa / xp)
    }
}

/// Axis-aligned window `[re_min, re_max] × [im_min, im_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn square(r: f64) -> Self {
        Window { re_min: -r, re_max: r, im_min: -r, im_max: r }
    }

    pub fn contains(&self, k: Complex64) -> bool {
        k.re >= self.re_min && k.re <= self.re_max && k.im >= self.im_min && k.im <= self.im_max
    }

    fn radii(&self) -> (f64, f64) {
        let cx = 0.0f64.clamp(self.re_min, self.re_max);
        let cy = 0.0f64.clamp(self.im_min, self.im_max);
        let rmin = cx.hypot(cy);
        let rmax = [self.re_min.abs(), self.re_max.abs()]
            .iter()
            .flat_map(|a| [self.im_min.abs(), self.im_max.abs()].map(|b| a.hypot(b)))
            .fold(0.0, f64::max);
        (rmin, rmax)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Geometry {
    Circle,
    HalfLineDiscrete,
    Spiral,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSet {
    pub eigenvalues: Vec<(Complex64, Sign)>,
    pub geometry: Geometry,
    /// The full set is finite (`μ ∉ iℝ`).
    pub finite: bool,
}

fn snap_zero(z: Complex64) -> bool {
    z.norm() <= 1e-300
}

/// `c_{p,±} = ω/(λ∓iμ) · Γ(2μ+1)/Γ(1−2μ) · Γ(1−μ∓iλ)/Γ(1+μ∓iλ)`.
pub fn c_coeff(p: &ManifoldPoint, sign: Sign) -> Result<CValue> {
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    if mu == c(0.0, 0.0) || !(mu.re.abs() < 0.5) {
        return Err(Error::domain("c_{p,±} needs μ ≠ 0 and |Re μ| < ½"));
    }
    let si = c(0.0, sign.f());
    // ω/(λ∓iμ) = (λ±iμ)/ω on the quadric; use the larger denominator
    let (dm, dp) = (l - si * mu, l + si * mu);
    let (pn, pd) = if dm.norm() >= w.norm() { (w, dm) } else { (dp, w) };
    // Γ(1−μ∓iλ)/Γ(1+μ∓iλ) = rg(1+μ∓iλ)/rg(1−μ∓iλ)
    let (rn, rd) = (rgamma(1.0 + mu - si * l), rgamma(1.0 - mu - si * l));
    let (num, den) = (pn * rn, pd * rd);
    // ω = 0 = λ∓iμ resolves to ∞
    if snap_zero(den) {
        return Ok(CValue::Infinite);
    }
    if snap_zero(num) {
        return Ok(CValue::Zero);
    }
    Ok(CValue::Finite(num / den * rgamma(1.0 - 2.0 * mu) / rgamma(1.0 + 2.0 * mu)))
}

/// Whether `(k, ±)` is admissible.
pub fn admissible(k: Complex64, sign: Sign, lambda: Complex64) -> bool {
    if k == c(0.0, 0.0) {
        return false;
    }
    if k.im == 0.0 {
        lambda.im.abs() > 0.5 && Sign::of(lambda.im) == sign && lambda.im != 0.0
    } else {
        Sign::of(k.im) == sign
    }
}

/// Eigenvalues of `D^f` inside `window`.
pub fn eigenvalues(data: &MixedBoundaryData, window: &Window) -> Result<EigenSet> {
    let p = &data.p;
    let mu = p.mu;
    let on_im_axis = mu.re.abs() <= BAND_TOL * mu.norm();
    let geometry = if mu.im.abs() <= BAND_TOL * mu.norm() {
        Geometry::Circle
    } else if on_im_axis {
        Geometry::HalfLineDiscrete
    } else {
        Geometry::Spiral
    };
    let closed = p.lambda.im.abs() > 0.5;
    let mut out = Vec::new();
    for s in [Sign::Plus, Sign::Minus] {
        let cv = match c_coeff(p, s)? {
            CValue::Finite(v) => v,
            _ => continue,
        };
        let base = (cv / data.kappa).ln() / (2.0 * mu);
        let step = c(0.0, PI) / mu;
        for n in lattice_range(base, step, window) {
            let w = base + step * n as f64;
            let over = w.im.abs() - FRAC_PI_2;
            let inside = over < -BAND_TOL || (closed && over.abs() <= BAND_TOL);
            if !inside {
                continue;
            }
            let mut k = c(0.0, 0.5 * s.f()) * w.exp();
            if over.abs() <= BAND_TOL {
                k = c(k.re, 0.0);
            }
            if window.contains(k) && admissible(k, s, p.lambda) {
                out.push((k, s));
            }
        }
    }
    Ok(EigenSet { eigenvalues: out, geometry, finite: !on_im_axis })
}

/// Lattice indices `n` with `w = base + n·step` possibly in the band and window.
fn lattice_range(base: Complex64, step: Complex64, window: &Window) -> std::ops::RangeInclusive<i64> {
    let clamp = |x: f64| x.clamp(-1e6, 1e6);
    if step.im.abs() > 1e-14 {
        let a = (-FRAC_PI_2 - 1e-9 - base.im) / step.im;
        let b = (FRAC_PI_2 + 1e-9 - base.im) / step.im;
        let (lo, hi) = (a.min(b), a.max(b));
        clamp(lo.ceil()) as i64..=clamp(hi.floor()) as i64
    } else {
        // |k| = ½e^{Re w} must fall in the window radii
        let (rmin, rmax) = window.radii();
        let lo_w = (2.0 * rmin.max(1e-300)).ln();
        let hi_w = (2.0 * rmax).ln();
        let a = (lo_w - base.re) / step.re;
        let b = (hi_w - base.re) / step.re;
        let (lo, hi) = (a.min(b), a.max(b));
        clamp(lo.floor()) as i64..=clamp(hi.ceil()) as i64
    }
}

/// The eigenvalue in `ℂ±` (or on `ℝ` when admissible) for `μ = 0`,
/// `ω = ±λ` (`branch`), solving `ln(∓2ik) + ψ(1∓iλ) ∓ i/(2λ) = ν` with the
/// principal logarithm.
/// The condition is the same on both branches; `branch` only records
/// which of `ω = ±λ` the data belongs to.
pub fn eigenvalues_mu0(_branch: Sign, lambda: Complex64, nu: Complex64) -> Result<Vec<(Complex64, Sign)>> {
    if lambda == c(0.0, 0.0) {
        return Err(Error::domain("λ ≠ 0 required"));
    }
    let mut out = Vec::new();
    for s in [Sign::Plus, Sign::Minus] {
        if let Some(k) = mu0_root(lambda, nu, s)? {
            out.push((k, s));
        }
    }
    Ok(out)
}

/// `ν − ψ(1∓iλ) ± i/(2λ)`, or `None` when `±iλ ∈ ℕ`.
fn mu0_rhs(lambda: Complex64, nu: Complex64, s: Sign) -> Option<Complex64> {
    let si = c(0.0, s.f());
    let t = si * lambda;
    let near_nat = t.im.abs() < 1e-12 && t.re > 0.5 && (t.re - t.re.round()).abs() < 1e-12;
    if near_nat {
        return None;
    }
    Some(nu - digamma(1.0 - t).ok()? + si / (2.0 * lambda))
}

fn mu0_root(lambda: Complex64, nu: Complex64, s: Sign) -> Result<Option<Complex64>> {
    let Some(r) = mu0_rhs(lambda, nu, s) else { return Ok(None) };
    let over = r.im.abs() - FRAC_PI_2;
    let real_ok = lambda.im.abs() > 0.5 && Sign::of(lambda.im) == s && lambda.im != 0.0;
    if over < -BAND_TOL || (real_ok && over.abs() <= BAND_TOL) {
        let mut k = c(0.0, 0.5 * s.f()) * r.exp();
        if over.abs() <= BAND_TOL {
            k = c(k.re, 0.0);
        }
        Ok(Some(k))
    } else {
        Ok(None)
    }
}

/// Residual of the defining `μ = 0` equation at `(k, ±)`.
pub fn mu0_equation_residual(lambda: Complex64, nu: Complex64, k: Complex64, s: Sign) -> Result<f64> {
    let si = c(0.0, s.f());
    let lhs = (-2.0 * si * k).ln() + digamma(1.0 - si * lambda)? - si / (2.0 * lambda);
    Ok((lhs - nu).norm())
}

/// On `ω = λ = 0` with `f = (1, κ)`: `k` is an eigenvalue iff `k ∉ ℝ` and
/// `κ = i sgn Im k`.
pub fn zero_fiber_eigen(kappa: Complex64, k: Complex64) -> bool {
    k.im != 0.0 && (kappa - c(0.0, k.im.signum())).norm() <= 1e-12
}

fn frobenius(p: &ManifoldPoint, m: Complex64, c0: [Complex64; 2], k: Complex64, x: f64) -> Spinor {
    let (w, l) = (p.omega, p.lambda);
    let mut cf = c0;
    let mut sum = c0;
    let mut xn = 1.0;
    for n in 1..400 {
        let nm = m + n as f64;
        let r = [k * cf[1], -k * cf[0]];
        let dt = nm * nm + (l - w) * (l + w);
        cf = [(nm * r[0] + (l - w) * r[1]) / dt, (nm * r[1] - (l + w) * r[0]) / dt];
        xn *= x;
        sum[0] += cf[0] * xn;
        sum[1] += cf[1] * xn;
        if (cf[0].norm() + cf[1].norm()) * xn < 1e-18 * (sum[0].norm() + sum[1].norm()) {
            break;
        }
    }
    Spinor::new(sum[0], sum[1]) * c(x, 0.0).powc(m)
}

/// The two Frobenius solutions `F_± ~ (ω−λ, ∓μ)x^{±μ}`.
fn frobenius_pair(p: &ManifoldPoint, k: Complex64, x: f64) -> (Spinor, Spinor) {
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    (frobenius(p, mu, [w - l, -mu], k, x), frobenius(p, -mu, [w - l, mu], k, x))
}

/// The mixing coefficient `κ` for which `ζ^±_p(k, ·)` lies in the domain:
/// `ζ = A F₊ + B F₋`, `κ = B/A`.
pub fn matching_kappa(p: &ManifoldPoint, k: Complex64, s: Sign) -> Result<Complex64> {
    let ctx = if k.im == 0.0 { EnergyContext { k, eps: Some(s) } } else { EnergyContext::new(k) };
    let x = 0.5 / k.norm();
    let z = zeta(p, s, &ctx, x)?;
    let (fp, fm) = frobenius_pair(p, k, x);
    let det = fp.up * fm.down - fp.down * fm.up;
    let a = (z.up * fm.down - z.down * fm.up) / det;
    let b = (fp.up * z.down - fp.down * z.up) / det;
    Ok(b / a)
}

/// `|κ_ζ − κ|/|κ|` at a reported eigenvalue.
pub fn matching_residual(data: &MixedBoundaryData, k: Complex64, s: Sign) -> Result<f64> {
    Ok((matching_kappa(&data.p, k, s)? - data.kappa).norm() / data.kappa.norm())
}

/// `∫_T^{2T} |u|²` for the solution with boundary data `f`, integrated
/// outward by RKF from the Frobenius data at `x₀ = 10⁻⁴`.
pub fn ode_tail(data: &MixedBoundaryData, k: Complex64, t: f64) -> Result<f64> {
    let p = &data.p;
    let x0 = 1e-4;
    let (fp, fm) = frobenius_pair(p, k, x0);
    let seed = fp + fm * data.kappa;
    let ctx = EnergyContext { k, eps: None };
    let n = 32;
    let h = t / n as f64;
    let mut u = ode_oracle(p, &ctx, x0, seed, t)?;
    let mut x = t;
    let mut acc = 0.0;
    let mut prev = u.norm().powi(2);
    for _ in 0..n {
        let nu = ode_oracle(p, &ctx, x, u, x + h)?;
        let cur = nu.norm().powi(2);
        acc += 0.5 * h * (prev + cur);
        prev = cur;
        u = nu;
        x += h;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    use crate::complexfn::gamma;

    fn tp(w: Complex64, l: Complex64, mu: Complex64) -> ManifoldPoint {
        ManifoldPoint::from_triple(w, l, mu).unwrap()
    }

    fn region_b() -> ManifoldPoint {
        ManifoldPoint::real(0.4, 0.2, 0.12f64.sqrt()).unwrap()
    }

    #[test]
    fn c_coefficient_values() {
        let p = region_b();
        let cp = c_coeff(&p, Sign::Plus).unwrap().value().unwrap();
        let cm = c_coeff(&p, Sign::Minus).unwrap().value().unwrap();
        assert!((cp - cm.conj()).norm() < 1e-14 * cp.norm());
        // direct Γ evaluation
        let (w, l, mu) = (p.omega, p.lambda, p.mu);
        let ii = c(0.0, 1.0);
        let want = w / (l - ii * mu) * gamma(2.0 * mu + 1.0).unwrap() / gamma(1.0 - 2.0 * mu).unwrap() * gamma(1.0 - mu - ii * l).unwrap()
            / gamma(1.0 + mu - ii * l).unwrap();
        assert!((cp - want).norm() < 1e-14 * want.norm());
        // frozen from an mpmath evaluation
        assert!((cp - c(0.12934745392467970, 0.44341347756430012)).norm() < 1e-13, "{cp}");
        // ω = 0 off λ ∓ iμ = 0
        let z = tp(c(0.0, 0.0), c(0.0, -0.3), c(0.3, 0.0));
        assert_eq!(c_coeff(&z, Sign::Plus).unwrap(), CValue::Zero);
        assert_eq!(c_coeff(&z, Sign::Minus).unwrap(), CValue::Infinite);
        assert!(c_coeff(&ManifoldPoint::real(5.0, 4.0, 3.0).unwrap(), Sign::Plus).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(admissible(c(1.0, 1.0), Sign::Plus, c(0.3, 0.0)));
        assert!(!admissible(c(2.0, 0.0), Sign::Plus, c(0.3, 0.0)));
        assert!(admissible(c(2.0, 0.0), Sign::Plus, c(0.0, 1.0)));
        assert!(!admissible(c(2.0, 0.0), Sign::Minus, c(0.0, 1.0)));
        assert!(!admissible(c(1.0, -1.0), Sign::Plus, c(0.3, 0.0)));
        assert!(!admissible(c(0.0, 0.0), Sign::Plus, c(0.0, 1.0)));
    }

    #[test]
    fn c_matches_zeta_asymptotics() {
        // κ(∓2ik)^{2μ} = c_{p,±} for the κ read off ζ^± at any k
        let (w, l) = (c(0.3, 0.1), c(0.2, -0.15));
        let pts = [region_b(), tp(w, l, (w * w - l * l).sqrt()), tp(c(0.3, 0.0), c(0.5, 0.0), c(0.0, 0.4))];
        for p in pts {
            for k in [c(0.7, 0.4), c(-0.3, -1.1)] {
                let s = Sign::of(k.im);
                let kap = matching_kappa(&p, k, s).unwrap();
                let lhs = kap * (c(0.0, -2.0 * s.f()) * k).powc(2.0 * p.mu);
                let want = c_coeff(&p, s).unwrap().value().unwrap();
                assert!((lhs - want).norm() < 1e-9 * want.norm(), "{p:?} {k}: {lhs} vs {want}");
            }
        }
    }

    #[test]
    fn circle_for_real_mu() {
        let p = ManifoldPoint::real(0.3, 0.1, 0.08f64.sqrt()).unwrap();
        let mut radii = Vec::new();
        for j in 0..12 {
            let kap = c(0.0, 2.0 * PI * j as f64 / 12.0).exp() * 0.7;
            let d = MixedBoundaryData::new(p, kap).unwrap();
            let set = eigenvalues(&d, &Window::square(1e6)).unwrap();
            assert_eq!(set.geometry, Geometry::Circle);
            for (k, s) in set.eigenvalues {
                assert!(matching_residual(&d, k, s).unwrap() < 1e-6);
                radii.push(k.norm());
            }
        }
        assert!(radii.len() >= 6);
        let cp = c_coeff(&p, Sign::Plus).unwrap().value().unwrap();
        let want = 0.5 * (cp.norm() / 0.7).powf(1.0 / (2.0 * p.mu.re));
        for r in &radii {
            assert!((r - radii[0]).abs() < 1e-10 * r);
        }
        assert!((radii[0] - want).abs() < 1e-10 * want);
    }

    #[test]
    fn spiral_slope() {
        let mu = c(0.2, 0.1);
        let l = c(0.3, 0.05);
        let p = tp((l * l + mu * mu).sqrt(), l, mu);
        assert!((p.mu - mu).norm() < 1e-15);
        let mut pts = Vec::new();
        for j in 0..16 {
            let kap = c(0.0, 2.0 * PI * j as f64 / 16.0).exp() * 0.4;
            let d = MixedBoundaryData::new(p, kap).unwrap();
            let set = eigenvalues(&d, &Window::square(1e8)).unwrap();
            assert_eq!(set.geometry, Geometry::Spiral);
            assert!(set.finite);
            for (k, s) in set.eigenvalues {
                assert!(matching_residual(&d, k, s).unwrap() < 1e-6);
                if s == Sign::Plus {
                    pts.push(k);
                }
            }
        }
        // unwrap arg k along the sweep and fit ln|k| against it
        pts.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
        let xs: Vec<f64> = pts.iter().map(|k| k.arg()).collect();
        let ys: Vec<f64> = pts.iter().map(|k| k.norm().ln()).collect();
        let n = xs.len() as f64;
        let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        let slope = sxy / sxx;
        assert!((slope - mu.im / mu.re).abs() < 1e-6, "{slope}");
    }

    #[test]
    fn half_line_for_imaginary_mu() {
        let p = tp(c(0.3, 0.0), c(0.5, 0.0), c(0.0, 0.4));
        let d = MixedBoundaryData::new(p, c(0.6, 0.2)).unwrap();
        let set = eigenvalues(&d, &Window::square(1e3)).unwrap();
        assert_eq!(set.geometry, Geometry::HalfLineDiscrete);
        assert!(!set.finite);
        let plus: Vec<_> = set.eigenvalues.iter().filter(|e| e.1 == Sign::Plus).collect();
        assert!(plus.len() > 5);
        // a ray, geometrically spaced by e^{π/|μ|}
        let mut r: Vec<f64> = plus.iter().map(|e| e.0.norm()).collect();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in r.windows(2) {
            assert!((w[1] / w[0] - (PI / 0.4f64).exp()).abs() < 1e-8 * w[1] / w[0]);
        }
        let a0 = plus[0].0.arg();
        assert!(plus.iter().all(|e| (e.0.arg() - a0).abs() < 1e-10));
        for &(k, s) in set.eigenvalues.iter().filter(|e| e.0.norm() > 1e-3 && e.0.norm() < 10.0) {
            assert!(matching_residual(&d, k, s).unwrap() < 1e-6, "{k}");
        }
    }

    #[test]
    fn zero_c_means_no_eigenvalues() {
        // p ∈ 𝓔₀⁺ with |Re μ| < ½: c_{p,+} = 0, so no κ ≠ 0 gives eigenvalues in ℂ₊
        let p = tp(c(0.0, 0.0), c(0.0, -0.3), c(0.3, 0.0));
        for kap in [c(1.0, 0.0), c(0.0, -2.0), c(0.3, 0.4)] {
            let set = eigenvalues(&MixedBoundaryData::new(p, kap).unwrap(), &Window::square(1e6)).unwrap();
            assert!(set.eigenvalues.iter().all(|e| e.0.im <= 0.0));
            assert!(set.eigenvalues.iter().all(|e| e.1 == Sign::Minus));
        }
    }

    #[test]
    fn real_eigenvalue_decays_polynomially() {
        // |Im λ| > ½; choose κ so that k₀ = 1.3 is an eigenvalue of sign sgn Im λ
        let l = c(0.1, 0.8);
        let mu = c(0.2, 0.05);
        let p = tp((l * l + mu * mu).sqrt(), l, mu);
        let s = Sign::Plus;
        let k0 = c(1.3, 0.0);
        let cv = c_coeff(&p, s).unwrap().value().unwrap();
        let kap = cv / (c(0.0, -2.0) * k0).powc(2.0 * mu);
        let d = MixedBoundaryData::new(p, kap).unwrap();
        let set = eigenvalues(&d, &Window::square(10.0)).unwrap();
        assert!(set.eigenvalues.iter().any(|e| (e.0 - k0).norm() < 1e-10 && e.0.im == 0.0), "{:?}", set.eigenvalues);
        assert!(matching_residual(&d, k0, s).unwrap() < 1e-6);
        let t1 = ode_tail(&d, k0, 20.0).unwrap();
        let t2 = ode_tail(&d, k0, 40.0).unwrap();
        let want = 2f64.powf(1.0 - 2.0 * l.im);
        assert!(((t2 / t1) / want - 1.0).abs() < 0.2, "{} vs {want}", t2 / t1);
    }

    #[test]
    fn complex_eigenvalues_decay() {
        let p = region_b();
        let d = MixedBoundaryData::new(p, c(0.5, 0.5)).unwrap();
        let set = eigenvalues(&d, &Window::square(1e6)).unwrap();
        assert!(!set.eigenvalues.is_empty());
        for &(k, _) in &set.eigenvalues {
            let g = k.im.abs();
            let (a, b) = (ode_tail(&d, k, 2.0 / g).unwrap(), ode_tail(&d, k, 4.0 / g).unwrap());
            assert!(b / a < (-1.0f64).exp(), "{k}: {}", b / a);
        }
        // a non-eigenvalue grows
        let k = c(0.4, 1.0);
        let (a, b) = (ode_tail(&d, k, 2.0).unwrap(), ode_tail(&d, k, 4.0).unwrap());
        assert!(b / a > 1.0);
    }

    #[test]
    fn mu_zero_case() {
        let l = c(0.3, 0.1);
        let ctxs = [c(0.4, 0.7), c(0.4, -0.7)];
        // ν read off ζ at small x reproduces the eigenvalue
        for k in ctxs {
            let s = Sign::of(k.im);
            let si = c(0.0, s.f());
            let nu = (-2.0 * si * k).ln() + digamma(1.0 - si * l).unwrap() - si / (2.0 * l);
            let ev = eigenvalues_mu0(Sign::Plus, l, nu).unwrap();
            let hit = ev.iter().find(|e| e.1 == s).unwrap();
            assert!((hit.0 - k).norm() < 1e-12);
            assert!(mu0_equation_residual(l, nu, hit.0, s).unwrap() < 1e-12);
            let p = tp(l, l, c(0.0, 0.0));
            let x = 1e-8;
            let z = zeta(&p, s, &EnergyContext::new(k), x).unwrap();
            let nu_z = -z.down / (2.0 * l * z.up) - x.ln() - 2.0 * EULER_GAMMA;
            assert!((nu_z - nu).norm() < 1e-5);
        }
        // ±iλ ∈ ℕ
        let ev = eigenvalues_mu0(Sign::Plus, c(0.0, -2.0), c(0.1, 0.0)).unwrap();
        assert!(ev.iter().all(|e| e.1 != Sign::Plus));
        // Im of the right side beyond π/2: none
        let nu = digamma(c(1.0, 0.0) - c(0.0, 1.0) * l).unwrap() - c(0.0, 1.0) / (2.0 * l) + c(0.0, 2.0);
        let ev = eigenvalues_mu0(Sign::Plus, l, nu).unwrap();
        assert!(ev.iter().all(|e| e.1 != Sign::Plus));
        assert!(eigenvalues_mu0(Sign::Plus, c(0.0, 0.0), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn zero_fiber_case() {
        assert!(zero_fiber_eigen(c(0.0, 1.0), c(1.0, 2.0)));
        assert!(!zero_fiber_eigen(c(0.0, 1.0), c(1.0, -2.0)));
        assert!(zero_fiber_eigen(c(0.0, -1.0), c(1.0, -2.0)));
        assert!(!zero_fiber_eigen(c(1.0, 0.0), c(1.0, 2.0)));
        assert!(!zero_fiber_eigen(c(0.0, 1.0), c(1.0, 0.0)));
    }

    #[test]
    fn boundary_function_shape() {
        let p = region_b();
        let d = MixedBoundaryData::new(p, c(0.5, 0.0)).unwrap();
        let f = d.boundary_function(1.0);
        assert!((f.up - (p.omega - p.lambda) * 1.5).norm() < 1e-15);
        assert!((f.down - p.mu * -0.5).norm() < 1e-15);
        assert!(MixedBoundaryData::new(p, c(0.0, 0.0)).is_err());
        assert!(MixedBoundaryData::new(ManifoldPoint::real(5.0, 4.0, 3.0).unwrap(), c(1.0, 0.0)).is_err());
    }
}
