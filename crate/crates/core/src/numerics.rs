//! Quadrature on the half-line, an embedded Runge–Kutta–Fehlberg integrator
//! for complex 2×2 linear systems, plain series sums and the Laplace-integral
//! oracle for 𝓚. The series and Laplace routines are deliberately naive:
//! they exist to check the production code in `complexfn` and `whittaker`.

use crate::complexfn::{gamma, rgamma};
use crate::{c, Error, Mat2, Result};
use num_complex::Complex64;
use std::sync::OnceLock;

/// Gauss–Legendre nodes and weights on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Shared 24-point rule.
    pub fn g24() -> &'static GaussLegendre {
        static R: OnceLock<GaussLegendre> = OnceLock::new();
        R.get_or_init(|| GaussLegendre::new(24))
    }

    /// Shared 12-point rule (error estimate companion).
    pub fn g12() -> &'static GaussLegendre {
        static R: OnceLock<GaussLegendre> = OnceLock::new();
        R.get_or_init(|| GaussLegendre::new(12))
    }

    /// Nodes and weights mapped to [a, b].
    pub fn on(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let h = 0.5 * (b - a);
        let m = 0.5 * (a + b);
        self.nodes.iter().zip(&self.weights).map(move |(x, w)| (m + h * x, h * w))
    }
}

/// Panels plus an optional exponential-map tail `x = X − L ln(1 − u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureScheme {
    pub edges: Vec<f64>,
    /// Decay length of the tail map; `None` means the integral stops at the last edge.
    pub tail_scale: Option<f64>,
    /// Target absolute-or-relative error.
    pub tol: f64,
    /// Maximum bisection depth per panel.
    pub max_depth: u32,
}

impl QuadratureScheme {
    /// Geometric panels from `x_min` to 1 (ratio 4), then unit panels
    /// growing geometrically (ratio 1.5) to `x_end`, then a tail of scale `tail`.
    pub fn graded(x_min: f64, x_end: f64, tail: Option<f64>, tol: f64) -> Self {
        let mut edges = vec![0.0];
        let mut x = x_min;
        while x < 1.0f64.min(x_end) {
            edges.push(x);
            x *= 4.0;
        }
        let mut w = 1.0f64.min(x_end);
        let mut last = *edges.last().unwrap();
        if last < w {
            edges.push(w);
            last = w;
        }
        while last < x_end {
            w *= 1.5;
            last = (last + w).min(x_end);
            edges.push(last);
        }
        QuadratureScheme {
            edges,
            tail_scale: tail,
            tol,
            max_depth: 40,
        }
    }

    /// Default half-line scheme: grading down to 1e−18, panels to 30, unit tail.
    pub fn halfline() -> Self {
        Self::graded(1e-18, 30.0, Some(1.0), 1e-12)
    }

    /// All (node, weight) pairs of the non-adaptive 24-point rule on the panels.
    pub fn nodes(&self) -> Vec<(f64, f64)> {
        let g = GaussLegendre::g24();
        self.edges.windows(2).flat_map(|e| g.on(e[0], e[1]).collect::<Vec<_>>()).collect()
    }
}

/// Quadrature result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
}

fn panel<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let mut s24 = c(0.0, 0.0);
    for (x, w) in GaussLegendre::g24().on(a, b) {
        s24 += f(x) * w;
    }
    let mut s12 = c(0.0, 0.0);
    for (x, w) in GaussLegendre::g12().on(a, b) {
        s12 += f(x) * w;
    }
    (s24, (s24 - s12).norm())
}

fn adaptive<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, tol: f64, depth: u32, out: &mut (Complex64, f64)) {
    let (v, e) = panel(f, a, b);
    if e <= tol || depth == 0 || (b - a) <= 1e-15 * b.abs().max(1e-300) {
        out.0 += v;
        out.1 += e;
        return;
    }
    let m = if a == 0.0 { 0.125 * b } else { 0.5 * (a + b) };
    adaptive(f, a, m, 0.5 * tol, depth - 1, out);
    adaptive(f, m, b, 0.5 * tol, depth - 1, out);
}

/// ∫₀^∞ f(x) dx over the scheme, with per-panel bisection until the
/// 24/12-point difference is below the panel share of the tolerance.
pub fn quad_halfline<F: Fn(f64) -> Complex64>(f: F, scheme: &QuadratureScheme) -> Result<QuadResult> {
    let mut acc = (c(0.0, 0.0), 0.0);
    // a rough magnitude so that the tolerance can be relative
    let mut scale = 0.0;
    for (x, w) in scheme.nodes() {
        scale += (f(x) * w).norm();
    }
    let target = scheme.tol * scale.max(1e-300);
    let npan = scheme.edges.len().saturating_sub(1) + scheme.tail_scale.is_some() as usize;
    let share = target / npan.max(1) as f64;
    for e in scheme.edges.windows(2) {
        adaptive(&f, e[0], e[1], share, scheme.max_depth, &mut acc);
    }
    if let Some(l) = scheme.tail_scale {
        let x0 = *scheme.edges.last().unwrap_or(&0.0);
        let g = |u: f64| {
            let one_m = 1.0 - u;
            if one_m <= 0.0 {
                return c(0.0, 0.0);
            }
            let x = x0 - l * one_m.ln();
            let v = f(x) * (l / one_m);
            if v.re.is_finite() && v.im.is_finite() {
                v
            } else {
                c(0.0, 0.0)
            }
        };
        adaptive(&g, 0.0, 1.0, share, scheme.max_depth, &mut acc);
    }
    let (value, error) = acc;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::ToleranceNotMet(f64::INFINITY));
    }
    if error > 10.0 * target.max(scheme.tol * value.norm()) {
        return Err(Error::ToleranceNotMet(error));
    }
    Ok(QuadResult { value, error })
}

// ---------------------------------------------------------------------------
// Runge–Kutta–Fehlberg 4(5)

type V2 = [Complex64; 2];

fn axpy(y: V2, h: f64, ks: &[(f64, V2)]) -> V2 {
    let mut r = y;
    for (a, k) in ks {
        r[0] += k[0] * (h * a);
        r[1] += k[1] * (h * a);
    }
    r
}

fn vnorm(v: V2) -> f64 {
    v[0].norm().max(v[1].norm())
}

/// Integrate `y′ = M(s) y` from `s0` to `s1` with local relative tolerance `tol`.
pub fn ode_rkf<F: Fn(f64) -> Mat2>(m: F, seed: V2, s0: f64, s1: f64, tol: f64) -> Result<V2> {
    if s0 == s1 {
        return Ok(seed);
    }
    let dir = (s1 - s0).signum();
    let span = (s1 - s0).abs();
    let mut s = s0;
    let mut y = seed;
    let mut h = dir * span.min(0.01 * span.max(1e-3)).max(1e-6 * span);
    let mut steps = 0usize;
    while (s1 - s) * dir > 0.0 {
        if (s + h - s1) * dir > 0.0 {
            h = s1 - s;
        }
        let f = |t: f64, v: V2| m(t).apply(v);
        let k1 = f(s, y);
        let k2 = f(s + h / 4.0, axpy(y, h, &[(0.25, k1)]));
        let k3 = f(s + 3.0 * h / 8.0, axpy(y, h, &[(3.0 / 32.0, k1), (9.0 / 32.0, k2)]));
        let k4 = f(
            s + 12.0 * h / 13.0,
            axpy(y, h, &[(1932.0 / 2197.0, k1), (-7200.0 / 2197.0, k2), (7296.0 / 2197.0, k3)]),
        );
        let k5 = f(
            s + h,
            axpy(y, h, &[(439.0 / 216.0, k1), (-8.0, k2), (3680.0 / 513.0, k3), (-845.0 / 4104.0, k4)]),
        );
        let k6 = f(
            s + h / 2.0,
            axpy(
                y,
                h,
                &[(-8.0 / 27.0, k1), (2.0, k2), (-3544.0 / 2565.0, k3), (1859.0 / 4104.0, k4), (-11.0 / 40.0, k5)],
            ),
        );
        let y5 = axpy(
            y,
            h,
            &[
                (16.0 / 135.0, k1),
                (6656.0 / 12825.0, k3),
                (28561.0 / 56430.0, k4),
                (-9.0 / 50.0, k5),
                (2.0 / 55.0, k6),
            ],
        );
        let y4 = axpy(y, h, &[(25.0 / 216.0, k1), (1408.0 / 2565.0, k3), (2197.0 / 4104.0, k4), (-0.2, k5)]);
        let err = vnorm([y5[0] - y4[0], y5[1] - y4[1]]);
        let scale = tol * vnorm(y).max(vnorm(y5)).max(1e-300);
        if !(err.is_finite()) {
            h *= 0.25;
        } else if err <= scale {
            s += h;
            y = y5;
            let fac = if err == 0.0 { 4.0 } else { (0.9 * (scale / err).powf(0.2)).clamp(0.2, 4.0) };
            h *= fac;
        } else {
            h *= (0.9 * (scale / err).powf(0.25)).clamp(0.1, 0.9);
        }
        steps += 1;
        if h.abs() < 1e-14 * s.abs().max(1e-12) || steps > 2_000_000 {
            return Err(Error::StepFailure(s));
        }
    }
    Ok(y)
}

// ---------------------------------------------------------------------------
// series oracles

/// A summed series and the number of terms used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub terms: usize,
}

fn sum_terms<F: FnMut(usize) -> Complex64>(mut ratio: F) -> Result<SeriesValue> {
    let (mut s, mut comp) = (c(1.0, 0.0), c(0.0, 0.0));
    let mut t = c(1.0, 0.0);
    for n in 0..10_000 {
        t *= ratio(n);
        let y = t - comp;
        let u = s + y;
        comp = (u - s) - y;
        s = u;
        if t.norm() <= 1e-17 * s.norm() || t == c(0.0, 0.0) {
            return Ok(SeriesValue { value: s, terms: n + 2 });
        }
    }
    Err(Error::ConvergenceFailure("oracle series"))
}

/// ₁F₁(a; c; z)/Γ(c) by plain compensated summation (`c ∉ −ℕ`).
pub fn series_1f1(a: Complex64, cc: Complex64, z: Complex64) -> Result<SeriesValue> {
    let r = sum_terms(|n| (a + n as f64) * z / ((cc + n as f64) * (n as f64 + 1.0)))?;
    Ok(SeriesValue { value: r.value / gamma(cc)?, terms: r.terms })
}

/// ₂F₁(a, b; c; z)/Γ(c) by plain compensated summation, `|z| ≤ 0.95`.
pub fn series_2f1(a: Complex64, b: Complex64, cc: Complex64, z: Complex64) -> Result<SeriesValue> {
    if z.norm() > 0.95 {
        return Err(Error::domain("series_2f1 needs |z| ≤ 0.95"));
    }
    let r = sum_terms(|n| (a + n as f64) * (b + n as f64) * z / ((cc + n as f64) * (n as f64 + 1.0)))?;
    Ok(SeriesValue { value: r.value / gamma(cc)?, terms: r.terms })
}

/// 𝓚_{β,m}(x) from the Laplace representation of Tricomi's function,
/// `U(a,b,x) = Γ(a)⁻¹ ∫₀^∞ e^{−xt} t^{a−1} (1+t)^{b−a−1} dt` with
/// `a = ½+m−β`, `b = 1+2m`, integrated in `t = e^v`.
pub fn laplace_k_oracle(beta: Complex64, m: Complex64, x: f64) -> Result<Complex64> {
    let a = 0.5 + m - beta;
    let b = 1.0 + 2.0 * m;
    if !(a.re > 0.0) || !(x > 0.0) {
        return Err(Error::domain("laplace_k_oracle needs Re(½+m−β) > 0 and x > 0"));
    }
    let e = b - a - 1.0;
    let f = |v: f64| {
        let t = v.exp();
        let ln1t = if v > 0.0 { v + (-v).exp().ln_1p() } else { t.ln_1p() };
        (a * v + e * ln1t - x * t).exp()
    };
    let v_lo = -(40.0 + a.norm().ln().max(0.0)) / a.re.min(1.0) - 10.0;
    let grow = (a.re + e.re.max(0.0)).max(1.0);
    let v_hi = ((45.0 + 2.0 * grow * (grow / x).max(1.0).ln()) / x).ln() + 1.0;
    let n = ((v_hi - v_lo) / 0.5).ceil() as usize;
    let h = (v_hi - v_lo) / n as f64;
    let g = GaussLegendre::g24();
    let mut s = c(0.0, 0.0);
    let mut comp = c(0.0, 0.0);
    for i in 0..n {
        let lo = v_lo + i as f64 * h;
        for (v, w) in g.on(lo, lo + h) {
            let y = f(v) * w - comp;
            let t = s + y;
            comp = (t - s) - y;
            s = t;
        }
    }
    let pre = (c(x, 0.0).ln() * (0.5 + m) - x / 2.0).exp() * rgamma(a);
    Ok(pre * s)
}

/// First-order Richardson step `2 v(ε/2) − v(ε)`.
pub fn richardson(v_eps: Complex64, v_half: Complex64) -> Complex64 {
    2.0 * v_half - v_eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn gauss_legendre_exact_for_polynomials() {
        let g = GaussLegendre::new(12);
        let s: f64 = g.on(0.0, 2.0).map(|(x, w)| w * x.powi(23)).sum();
        assert!((s - 2f64.powi(24) / 24.0).abs() < 1e-9);
        let total: f64 = GaussLegendre::g24().weights.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn halfline_battery() {
        let sch = QuadratureScheme::halfline();
        let r = quad_halfline(|x| c((-x).exp(), 0.0), &sch).unwrap();
        assert!((r.value - 1.0).norm() < 1e-12, "{:?}", r);
        let r = quad_halfline(|x| c((-x).exp() / x.sqrt(), 0.0), &sch).unwrap();
        assert!((r.value - PI.sqrt()).norm() < 1e-10, "{:?}", r);
        let r = quad_halfline(|x| (c(-1.0, 1.0) * x).exp(), &sch).unwrap();
        assert!((r.value - 1.0 / c(1.0, -1.0)).norm() < 1e-12, "{:?}", r);
    }

    #[test]
    fn error_estimate_is_conservative() {
        let sch = QuadratureScheme::graded(1e-18, 30.0, Some(1.0), 1e-6);
        type Integrand = Box<dyn Fn(f64) -> Complex64>;
        let cases: [(Integrand, Complex64); 3] = [
            (Box::new(|x: f64| c((-x).exp(), 0.0)), c(1.0, 0.0)),
            (Box::new(|x: f64| c((-x).exp() / x.sqrt(), 0.0)), c(PI.sqrt(), 0.0)),
            (Box::new(|x: f64| (c(-1.0, 1.0) * x).exp()), 1.0 / c(1.0, -1.0)),
        ];
        for (f, want) in cases {
            let r = quad_halfline(f, &sch).unwrap();
            assert!((r.value - want).norm() <= 3.0 * r.error.max(1e-15), "{:?}", r);
        }
    }

    fn free(k: f64) -> impl Fn(f64) -> Mat2 {
        move |_| Mat2::new(c(0., 0.), c(-k, 0.), c(k, 0.), c(0., 0.))
    }

    #[test]
    fn rkf_free_system() {
        let k = 1.3;
        let y = ode_rkf(free(k), [c(1., 0.), c(0., 0.)], 0.0, 5.0, 1e-12).unwrap();
        assert!((y[0] - (k * 5.0).cos()).norm() < 1e-10);
        assert!((y[1] - (k * 5.0).sin()).norm() < 1e-10);
    }

    #[test]
    fn rkf_constant_matrix_and_reversal() {
        let m = Mat2::new(c(-0.5, 0.2), c(1.0, 0.0), c(0.0, 0.0), c(-0.5, 0.2));
        // exp(tM) for a Jordan block: e^{λt}[[1, t],[0, 1]]
        let seed = [c(0.3, 0.1), c(1.0, -0.4)];
        let y = ode_rkf(|_| m, seed, 0.0, 2.0, 1e-12).unwrap();
        let lam = (c(-0.5, 0.2) * 2.0).exp();
        let want = [lam * (seed[0] + 2.0 * seed[1]), lam * seed[1]];
        assert!((y[0] - want[0]).norm() < 1e-10 && (y[1] - want[1]).norm() < 1e-10);
        let back = ode_rkf(|_| m, y, 2.0, 0.0, 1e-12).unwrap();
        assert!((back[0] - seed[0]).norm() < 1e-10 && (back[1] - seed[1]).norm() < 1e-10);
    }

    #[test]
    fn rkf_global_error_scaling() {
        let k = 2.0;
        let err = |tol: f64| {
            let y = ode_rkf(free(k), [c(1., 0.), c(0., 0.)], 0.0, 10.0, tol).unwrap();
            (y[0] - (k * 10.0).cos()).norm().max((y[1] - (k * 10.0).sin()).norm())
        };
        for tol in [1e-8, 1e-10, 1e-12] {
            let e = err(tol);
            assert!(e <= 10.0 * tol.powf(0.8), "tol {tol}: {e}");
        }
    }

    #[test]
    fn series_oracles() {
        let v = series_1f1(c(1., 0.), c(2., 0.), c(1., 0.)).unwrap();
        assert!((v.value - (std::f64::consts::E - 1.0)).norm() < 1e-14);
        let v = series_1f1(c(0.3, 0.2), c(3., 0.), c(0., 0.)).unwrap();
        assert!((v.value - 0.5).norm() < 1e-15);
        let t = |r: f64| series_2f1(c(0.5, 0.), c(1.5, 0.), c(2.5, 0.), c(r, 0.)).unwrap().terms;
        assert!(t(0.1) <= t(0.5) && t(0.5) <= t(0.9));
    }

    #[test]
    fn laplace_oracle_closed_form() {
        let v = laplace_k_oracle(c(0., 0.), c(0.5, 0.), 1.0).unwrap();
        assert!((v - (-0.5f64).exp()).norm() < 1e-12, "{v}");
        assert!(laplace_k_oracle(c(2., 0.), c(0.5, 0.), 1.0).is_err());
    }

    #[test]
    fn richardson_exact_on_linear() {
        let f = |e: f64| c(3.0 + 2.0 * e, -1.0 + 0.5 * e);
        assert_eq!(richardson(f(0.1), f(0.05)), c(3.0, -1.0));
        assert_eq!(richardson(c(2.0, 1.0), c(2.0, 1.0)), c(2.0, 1.0));
        let q = |e: f64| c(1.0 + e * e, 0.0);
        assert!((richardson(q(1e-3), q(5e-4)) - 1.0).norm() < 1e-6);
    }
}
