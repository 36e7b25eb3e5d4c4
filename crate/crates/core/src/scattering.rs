//! Mellin symbols `Ξ^±_p`, the diagonalizers `𝓤^±_p` and the full
//! scattering amplitude.
//!
//! The Mellin transform is `𝔐f(s) = ∫₀^∞ f(x) x^{−½−is} dx` with inverse
//! `(1/2π)∫ F(s) x^{−½+is} ds`. With this pair an operator with kernel
//! `b(xk)` acts as `𝔐⁻¹[𝔐b · 𝔐(Jg)]`, so both `𝓤^±` and `𝓤^{±T}` reduce
//! to one FFT multiply on a log-uniform grid symmetric under `x ↦ 1/x`.

use crate::complexfn::{gamma, reg_2f1_boundary};
use crate::manifold::{inv_n_scale, scattering_amplitude, Amplitude, ManifoldPoint};
use crate::numerics::GaussLegendre;
use crate::solutions::{removable, xi, EnergyContext, Spinor, MU_REG};
use crate::{c, Complex64, Error, Result, Sign};
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Relative spectral mass allowed in the top octave.
pub const ALIAS_TOL: f64 = 1e-6;
/// Symbols are only evaluated where the input spectrum exceeds this
/// fraction of its peak; elsewhere the product is taken as zero.
const SPECTRUM_FLOOR: f64 = 1e-12;

/// Samples on `x_j = x₀e^{jh}`, `j = 0..N−1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MellinGrid<T = Complex64> {
    pub x0: f64,
    pub h: f64,
    pub values: Vec<T>,
}

impl<T: Copy> MellinGrid<T> {
    /// The grid on `[1/x_max, x_max]` with `n` nodes (a power of two),
    /// sampled from `f`.
    pub fn sample<F: FnMut(f64) -> T>(n: usize, x_max: f64, mut f: F) -> Result<Self> {
        let (x0, h) = symmetric_grid(n, x_max)?;
        let values = (0..n).map(|j| f(x0 * (j as f64 * h).exp())).collect();
        Ok(MellinGrid { x0, h, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x0 * (j as f64 * self.h).exp()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.len()).map(|j| self.x(j)).collect()
    }

    pub fn map<U, F: FnMut(f64, T) -> U>(&self, mut f: F) -> MellinGrid<U> {
        MellinGrid { x0: self.x0, h: self.h, values: self.values.iter().enumerate().map(|(j, v)| f(self.x(j), *v)).collect() }
    }

    fn check(&self) -> Result<()> {
        let n = self.len();
        if !(self.h > 0.0) || !(self.x0 > 0.0) || n < 2 || !n.is_power_of_two() {
            return Err(Error::domain("Mellin grid needs h > 0, x₀ > 0 and a power-of-two size"));
        }
        Ok(())
    }

    fn check_symmetric(&self) -> Result<()> {
        self.check()?;
        let t_end = self.x0.ln() * 2.0 + (self.len() - 1) as f64 * self.h;
        if t_end.abs() > 1e-9 * self.h.max(1.0) {
            return Err(Error::domain("inversion J needs a grid symmetric under x ↦ 1/x"));
        }
        Ok(())
    }
}

impl MellinGrid<Complex64> {
    /// `(Jf)(x) = x⁻¹f(1/x)`.
    pub fn invert(&self) -> Result<Self> {
        self.check_symmetric()?;
        let n = self.len();
        Ok(MellinGrid { x0: self.x0, h: self.h, values: (0..n).map(|j| self.values[n - 1 - j] / self.x(j)).collect() })
    }

    /// `∫|f|²dx` by the trapezoid rule in `t = ln x`.
    pub fn norm_sqr(&self) -> f64 {
        (0..self.len()).map(|j| self.h * self.x(j) * self.values[j].norm_sqr()).sum()
    }
}

impl MellinGrid<Spinor> {
    pub fn component(&self, i: usize) -> MellinGrid<Complex64> {
        self.map(|_, v| v.arr()[i])
    }

    pub fn norm_sqr(&self) -> f64 {
        (0..self.len()).map(|j| self.h * self.x(j) * self.values[j].norm().powi(2)).sum()
    }
}

fn symmetric_grid(n: usize, x_max: f64) -> Result<(f64, f64)> {
    if n < 2 || !n.is_power_of_two() || !(x_max > 1.0) {
        return Err(Error::domain("Mellin grid needs a power-of-two size and x_max > 1"));
    }
    Ok((1.0 / x_max, 2.0 * x_max.ln() / (n - 1) as f64))
}

/// Sampled `𝔐f(s_m)` with `s_m = 2πm̂/(Nh)` in FFT order.
#[derive(Debug, Clone, PartialEq)]
pub struct MellinSpectrum {
    pub t0: f64,
    pub h: f64,
    pub values: Vec<Complex64>,
}

impl MellinSpectrum {
    pub fn s(&self, m: usize) -> f64 {
        let n = self.values.len();
        let mh = if m < n / 2 { m as f64 } else { m as f64 - n as f64 };
        2.0 * PI * mh / (n as f64 * self.h)
    }

    /// Fraction of `Σ|F|²` carried by `|s| ≥ s_max/2`.
    pub fn top_octave_mass(&self) -> f64 {
        let n = self.values.len();
        let total: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        if total == 0.0 {
            return 0.0;
        }
        let top: f64 = (0..n)
            .filter(|&m| {
                let mh = if m < n / 2 { m } else { n - m };
                mh >= n / 4
            })
            .map(|m| self.values[m].norm_sqr())
            .sum();
        top / total
    }
}

fn fft(data: &mut [Complex64], inverse: bool) {
    let mut planner = FftPlanner::<f64>::new();
    let plan = if inverse { planner.plan_fft_inverse(data.len()) } else { planner.plan_fft_forward(data.len()) };
    plan.process(data);
}

fn forward_raw(g: &MellinGrid<Complex64>) -> MellinSpectrum {
    let t0 = g.x0.ln();
    let mut buf: Vec<Complex64> = (0..g.len()).map(|j| g.values[j] * g.x(j).sqrt()).collect();
    fft(&mut buf, false);
    let mut sp = MellinSpectrum { t0, h: g.h, values: buf };
    for m in 0..sp.values.len() {
        let s = sp.s(m);
        sp.values[m] *= c(0.0, -s * t0).exp() * g.h;
    }
    sp
}

/// `𝔐g` on the grid's dual frequencies.
pub fn mellin_forward(g: &MellinGrid<Complex64>) -> Result<MellinSpectrum> {
    g.check()?;
    let sp = forward_raw(g);
    let mass = sp.top_octave_mass();
    if mass > ALIAS_TOL {
        return Err(Error::AliasWarning(mass));
    }
    Ok(sp)
}

/// Inverse of [`mellin_forward`].
pub fn mellin_inverse(sp: &MellinSpectrum) -> MellinGrid<Complex64> {
    let n = sp.values.len();
    let mut buf: Vec<Complex64> = (0..n).map(|m| sp.values[m] * c(0.0, sp.s(m) * sp.t0).exp()).collect();
    fft(&mut buf, true);
    let x0 = sp.t0.exp();
    let scale = 1.0 / (n as f64 * sp.h);
    let values = (0..n).map(|j| buf[j] * scale / (x0 * (j as f64 * sp.h).exp()).sqrt()).collect();
    MellinGrid { x0, h: sp.h, values }
}

// ---------------------------------------------------------------------------
// Mellin symbols

fn ipow(w: Complex64) -> Complex64 {
    (c(0.0, PI / 2.0) * w).exp()
}

/// Closed form of `∫ e^{−0x}x^{−½−is}𝓙_{β,m}(2x)dx` (the `2 + i0` choice).
fn mellin_j2(beta: Complex64, m: Complex64, s: Complex64) -> Result<Complex64> {
    let is = c(0.0, 1.0) * s;
    let a2 = m + 1.0 - is;
    let f = reg_2f1_boundary_c(m + 0.5 + c(0.0, 1.0) * beta, a2, 2.0 * m + 1.0)?;
    Ok((c(2f64.ln(), 0.0) * (m + 0.5)).exp() * ipow(-m - 1.0 + is) * gamma(a2)? * f)
}

fn reg_2f1_boundary_c(a: Complex64, b: Complex64, cc: Complex64) -> Result<Complex64> {
    reg_2f1_boundary(a, b, cc, 2.0, Sign::Plus)
}

/// `Ξ^±_p(ε, s)` for complex `s` near the real axis.
pub fn xi_mellin_complex(p: &ManifoldPoint, eps: Sign, family: Sign, s: Complex64) -> Result<[Complex64; 2]> {
    if !(p.mu.re > -0.5) {
        return Err(Error::domain("Ξ needs Re μ > −½"));
    }
    if p.mu.norm() < MU_REG {
        return xi_mellin_regularized(p, eps, family, s);
    }
    let d = inv_n_scale(p, family)?;
    let (e, f) = (eps.f(), family.f());
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let (a, b) = (p.ray.a, p.ray.b);
    let ii = c(0.0, 1.0);
    let is = ii * s;
    let pre = ipow(-f * e * mu - 1.5 - mu + is) * (c(2f64.ln(), 0.0) * (mu - 1.0)).exp() * gamma(0.5 + mu - is)? / mu;
    let f1 = reg_2f1_boundary_c(1.0 + mu + ii * e * l, 1.5 + mu - is, 2.0 * mu + 2.0)?;
    let f2 = reg_2f1_boundary_c(mu + ii * e * l, 0.5 + mu - is, 2.0 * mu)?;
    let t1 = 2.0 * e * w * (0.5 + mu - is) * f1 * d;
    let t2 = ii * f2 * d;
    Ok([pre * (-t1 * a + t2 * a), pre * (t1 * b + t2 * b)])
}

/// `Ξ^±_p(ε, s)` at real `s`.
pub fn xi_mellin(p: &ManifoldPoint, eps: Sign, family: Sign, s: f64) -> Result<[Complex64; 2]> {
    if !s.is_finite() {
        return Err(Error::domain("s must be finite"));
    }
    xi_mellin_complex(p, eps, family, c(s, 0.0))
}

/// `Ξ` assembled termwise from the 𝓙 form of `ξ` and the Mellin transform
/// of each 𝓙.
pub fn xi_mellin_from_j(p: &ManifoldPoint, eps: Sign, family: Sign, s: Complex64) -> Result<[Complex64; 2]> {
    let d = inv_n_scale(p, family)?;
    let (e, f) = (eps.f(), family.f());
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let (a, b) = (p.ray.a, p.ray.b);
    let pre = ipow(-f * e * mu) * d / (2.0 * mu);
    let jp = mellin_j2(e * l, mu + 0.5, s)?;
    let jm = mellin_j2(e * l, mu - 0.5, s)?;
    let t = e * w * jp;
    Ok([pre * (-a * t + a * jm), pre * (b * t + b * jm)])
}

fn xi_mellin_regularized(p: &ManifoldPoint, eps: Sign, family: Sign, s: Complex64) -> Result<[Complex64; 2]> {
    let d = inv_n_scale(p, family)?;
    let (e, f) = (eps.f(), family.f());
    let (l, mu) = (p.lambda, p.mu);
    let (a, b) = (p.ray.a, p.ray.b);
    let pre = ipow(-f * e * mu) * d * 0.5;
    let jp = mellin_j2(e * l, mu + 0.5, s)?;
    let q = removable(mu, |m| Ok((mellin_j2(e * l, m - 0.5, s)? + e * l * mellin_j2(e * l, m + 0.5, s)?) / m))?;
    Ok([pre * (b * e * jp + a * q), pre * (-a * e * jp + b * q)])
}

/// `∫ e^{−0x}x^{−½−is}f(x)dx` by damping with `e^{−εx}` at twelve Chebyshev
/// points `ε ∈ [0.04, 0.4]` and extrapolating the analytic dependence on `ε`
/// to zero. `v` is the oscillation frequency of `f` at infinity; `f` must
/// behave like `x^α`, `Re α > −½`, at the origin.
pub fn regularized_mellin_quadrature<F>(f: F, v: f64, s: &[f64]) -> Result<Vec<[Complex64; 2]>>
where
    F: Fn(f64) -> Result<[Complex64; 2]>,
{
    const N_EPS: usize = 12;
    let (e_lo, e_hi) = (0.04, 0.4);
    let eps: Vec<f64> = (0..N_EPS)
        .map(|j| {
            let u = ((2 * j + 1) as f64 * PI / (2 * N_EPS) as f64).cos();
            0.5 * (e_lo + e_hi) + 0.5 * (e_hi - e_lo) * u
        })
        .collect();
    let gl = GaussLegendre::new(16);
    let width = (1.0f64).min(2.0 / v.max(1e-3));
    let mut edges = vec![0.0];
    let mut x = 1e-10;
    while x < width {
        edges.push(x);
        x *= 2.0;
    }
    let x_end = 45.0 / e_lo;
    let mut x = width;
    while x < x_end {
        edges.push(x);
        x += width;
    }
    edges.push(x);
    let mut nodes = Vec::new();
    for w in edges.windows(2) {
        for (xn, wn) in gl.on(w[0], w[1]) {
            nodes.push((xn, wn, f(xn)?));
        }
    }
    let mut out = Vec::with_capacity(s.len());
    for &sv in s {
        let mut vals = vec![[c(0.0, 0.0); 2]; N_EPS];
        for &(xn, wn, fv) in &nodes {
            let base = (c(-0.5, -sv) * xn.ln()).exp() * wn;
            for (j, e) in eps.iter().enumerate() {
                let wt = base * (-e * xn).exp();
                vals[j][0] += wt * fv[0];
                vals[j][1] += wt * fv[1];
            }
        }
        let mut acc = [c(0.0, 0.0); 2];
        for i in 0..N_EPS {
            let mut li = 1.0;
            for j in 0..N_EPS {
                if i != j {
                    li *= (0.0 - eps[j]) / (eps[i] - eps[j]);
                }
            }
            acc[0] += vals[i][0] * li;
            acc[1] += vals[i][1] * li;
        }
        out.push(acc);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// diagonalizers

/// `𝓤^±_p(k, x) = e^{ε_kπλ/2}/√π · ξ^±_p(k, x)ᵀ` at real `k ≠ 0`.
pub fn u_kernel(p: &ManifoldPoint, family: Sign, k: f64, x: f64) -> Result<Spinor> {
    if k == 0.0 || !k.is_finite() {
        return Err(Error::domain("u_kernel needs real k ≠ 0"));
    }
    let v = xi(p, family, &EnergyContext::real(k), x)?;
    Ok(v * u_prefactor(p, Sign::of(k)))
}

fn u_prefactor(p: &ManifoldPoint, eps: Sign) -> Complex64 {
    (p.lambda * (0.5 * eps.f() * PI)).exp() / PI.sqrt()
}

/// `𝓤f(±|k|)` on the log grid of `|k|`.
#[derive(Debug, Clone, PartialEq)]
pub struct UTransform {
    /// Values at `k = +x_j`.
    pub plus: MellinGrid<Complex64>,
    /// Values at `k = −x_j`.
    pub minus: MellinGrid<Complex64>,
}

impl UTransform {
    pub fn norm_sqr(&self) -> f64 {
        self.plus.norm_sqr() + self.minus.norm_sqr()
    }

    /// `∫_a^b |𝓤f(k)|²dk` by the trapezoid rule on the nodes inside `[a, b]`.
    pub fn spectral_measure(&self, a: f64, b: f64) -> f64 {
        let side = |g: &MellinGrid<Complex64>, lo: f64, hi: f64| -> f64 {
            (0..g.len()).filter(|&j| g.x(j) >= lo && g.x(j) <= hi).map(|j| g.h * g.x(j) * g.values[j].norm_sqr()).sum()
        };
        let mut acc = 0.0;
        if b > 0.0 {
            acc += side(&self.plus, a.max(0.0), b);
        }
        if a < 0.0 {
            acc += side(&self.minus, (-b).max(0.0), -a);
        }
        acc
    }

    pub fn sub(&self, o: &UTransform) -> UTransform {
        let d = |a: &MellinGrid<Complex64>, b: &MellinGrid<Complex64>| a.map(|_, _| c(0.0, 0.0)).values.iter().enumerate().map(|(j, _)| a.values[j] - b.values[j]).collect::<Vec<_>>();
        UTransform {
            plus: MellinGrid { x0: self.plus.x0, h: self.plus.h, values: d(&self.plus, &o.plus) },
            minus: MellinGrid { x0: self.minus.x0, h: self.minus.h, values: d(&self.minus, &o.minus) },
        }
    }

    /// Multiply by the spectral variable `k`.
    pub fn times_k(&self) -> UTransform {
        UTransform { plus: self.plus.map(|k, v| v * k), minus: self.minus.map(|k, v| -v * k) }
    }
}

fn symbol_table(p: &ManifoldPoint, eps: Sign, family: Sign, sp: &MellinSpectrum, active: &[bool]) -> Result<Vec<[Complex64; 2]>> {
    let z = [c(0.0, 0.0); 2];
    (0..sp.values.len()).map(|m| if active[m] { xi_mellin(p, eps, family, sp.s(m)) } else { Ok(z) }).collect()
}

fn active_set(spectra: &[&MellinSpectrum]) -> Vec<bool> {
    let n = spectra[0].values.len();
    let peak = spectra.iter().flat_map(|sp| sp.values.iter()).fold(0.0f64, |a, v| a.max(v.norm()));
    (0..n).map(|m| spectra.iter().any(|sp| sp.values[m].norm() > SPECTRUM_FLOOR * peak)).collect()
}

/// `𝓤^±_p f` on both half-lines of `k`, through `𝔐⁻¹ Ξᵀ(ε, ·) 𝔐 J`.
pub fn apply_u(p: &ManifoldPoint, family: Sign, f: &MellinGrid<Spinor>) -> Result<UTransform> {
    f.check_symmetric()?;
    let g: Vec<MellinSpectrum> = (0..2).map(|i| mellin_forward(&f.component(i).invert()?)).collect::<Result<_>>()?;
    let active = active_set(&[&g[0], &g[1]]);
    let mut out = Vec::with_capacity(2);
    for eps in [Sign::Plus, Sign::Minus] {
        let tab = symbol_table(p, eps, family, &g[0], &active)?;
        let mut prod = g[0].clone();
        for (m, (v, t)) in prod.values.iter_mut().zip(&tab).enumerate() {
            *v = t[0] * g[0].values[m] + t[1] * g[1].values[m];
        }
        let pre = u_prefactor(p, eps);
        out.push(mellin_inverse(&prod).map(|_, v| v * pre));
    }
    let minus = out.pop().unwrap();
    let plus = out.pop().unwrap();
    Ok(UTransform { plus, minus })
}

/// `(𝓤^{±T}g)(x) = ∫_ℝ 𝓤^±_p(k, x) g(k) dk`.
pub fn apply_u_transpose(p: &ManifoldPoint, family: Sign, g: &UTransform) -> Result<MellinGrid<Spinor>> {
    let mut acc: Option<MellinGrid<Spinor>> = None;
    for (eps, part) in [(Sign::Plus, &g.plus), (Sign::Minus, &g.minus)] {
        let sp = mellin_forward(&part.invert()?)?;
        let active = active_set(&[&sp]);
        let tab = symbol_table(p, eps, family, &sp, &active)?;
        let pre = u_prefactor(p, eps);
        let comp = |i: usize| {
            let mut q = sp.clone();
            for (v, (t, s)) in q.values.iter_mut().zip(tab.iter().zip(&sp.values)) {
                *v = t[i] * s * pre;
            }
            mellin_inverse(&q)
        };
        let (u, d) = (comp(0), comp(1));
        let piece = MellinGrid { x0: u.x0, h: u.h, values: (0..u.len()).map(|j| Spinor::new(u.values[j], d.values[j])).collect() };
        acc = Some(match acc {
            None => piece,
            Some(a) => MellinGrid { x0: a.x0, h: a.h, values: a.values.iter().zip(&piece.values).map(|(x, y)| *x + *y).collect() },
        });
    }
    Ok(acc.unwrap())
}

/// `e^{−iεπμ}S_p`, tagged like `S_p`.
pub fn scattering_value(p: &ManifoldPoint, eps: Sign) -> Amplitude {
    scattering_amplitude(p).scale((c(0.0, -eps.f() * PI) * p.mu).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolvent::{spectral_density, spectral_density_swapped};
    use crate::whittaker::{trig_j, WhittakerParams};
    use crate::Mat2;

    fn p543() -> ManifoldPoint {
        ManifoldPoint::real(5.0, 4.0, 3.0).unwrap()
    }

    fn generic() -> ManifoldPoint {
        let (w, l) = (c(0.7, 0.2), c(0.3, -0.25));
        ManifoldPoint::from_triple(w, l, (w * w - l * l).sqrt()).unwrap()
    }

    fn rel2(a: [Complex64; 2], b: [Complex64; 2]) -> f64 {
        ((a[0] - b[0]).norm_sqr() + (a[1] - b[1]).norm_sqr()).sqrt() / (b[0].norm_sqr() + b[1].norm_sqr()).sqrt()
    }

    fn bump(x: f64) -> Spinor {
        let t = x.ln();
        let g = (-(t - 0.3).powi(2) / (2.0 * 0.25)).exp() / x.sqrt();
        let g2 = (-(t + 0.2).powi(2) / (2.0 * 0.25)).exp() / x.sqrt();
        Spinor::new(c(g, 0.0), c(0.5 * g2, 0.3 * g))
    }

    #[test]
    fn mellin_round_trip_and_alias() {
        let g = MellinGrid::sample(1024, 1e4, |x| c((-(x.ln()).powi(2)).exp() / x.sqrt(), 0.0)).unwrap();
        let sp = mellin_forward(&g).unwrap();
        let back = mellin_inverse(&sp);
        let err = g.values.iter().zip(&back.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err < 1e-12, "{err}");
        // a Gaussian in t has 𝔐 = √π e^{−s²/4}
        for m in [0usize, 3, 10, 1020] {
            let want = PI.sqrt() * (-sp.s(m).powi(2) / 4.0).exp();
            assert!((sp.values[m] - want).norm() < 1e-12, "{m}");
        }
        // a spike on one node is flagged
        let mut spike = g.clone();
        spike.values[500] += c(1.0, 0.0);
        assert!(matches!(mellin_forward(&spike), Err(Error::AliasWarning(_))));
        assert!(MellinGrid::sample(1000, 1e4, |_| c(0.0, 0.0)).is_err());
    }

    #[test]
    fn mellin_diagonalizes_dilations() {
        // 𝔐((x∂ₓ + ½)f)(s) = is 𝔐f(s)
        let sig = 0.4;
        let f = |x: f64| {
            let t = x.ln();
            (-(t * t) / (2.0 * sig * sig)).exp() / x.sqrt() * c(1.0, 0.5 * t)
        };
        let df = |x: f64| {
            // x f'(x) + f/2 in closed form
            let t = x.ln();
            let e = (-(t * t) / (2.0 * sig * sig)).exp() / x.sqrt();
            e * (c(0.0, 0.5) + c(1.0, 0.5 * t) * (-t / (sig * sig)))
        };
        let g = MellinGrid::sample(2048, 1e5, f).unwrap();
        let dg = MellinGrid::sample(2048, 1e5, df).unwrap();
        let (a, b) = (mellin_forward(&g).unwrap(), mellin_forward(&dg).unwrap());
        let peak = a.values.iter().fold(0.0f64, |m, v| m.max(v.norm()));
        for m in 0..a.values.len() {
            assert!((b.values[m] - c(0.0, a.s(m)) * a.values[m]).norm() < 1e-6 * peak);
        }
        // 𝔐(Jf)(s) = 𝔐f(−s)
        let j = mellin_forward(&g.invert().unwrap()).unwrap();
        let n = a.values.len();
        for m in 1..n {
            assert!((j.values[m] - a.values[n - m]).norm() < 1e-12 * peak);
        }
    }

    #[test]
    fn closed_form_matches_termwise_build() {
        for p in [p543(), generic(), ManifoldPoint::real(0.4, 0.2, 0.12f64.sqrt()).unwrap()] {
            for (eps, fam) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Minus)] {
                for s in [-3.0, 0.0, 0.5, 4.0] {
                    let a = xi_mellin(&p, eps, fam, s).unwrap();
                    let b = xi_mellin_from_j(&p, eps, fam, c(s, 0.0)).unwrap();
                    assert!(rel2(a, b) < 1e-11, "{p:?} {s}");
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_quadrature() {
        let ss = [-5.0, -1.0, 0.5, 5.0];
        for p in [p543(), generic()] {
            for (eps, fam) in [(Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus)] {
                let q = regularized_mellin_quadrature(|x| Ok(xi(&p, fam, &EnergyContext::real(eps.f()), x)?.arr()), 1.0, &ss).unwrap();
                for (s, qv) in ss.iter().zip(q) {
                    let cf = xi_mellin(&p, eps, fam, *s).unwrap();
                    assert!(rel2(cf, qv) < 1e-4, "{p:?} {eps:?} {s}: {}", rel2(cf, qv));
                }
            }
        }
    }

    #[test]
    fn mellin_j_quadrature_oracle() {
        let ss = [-5.0, 0.0, 2.5];
        for (beta, m) in [(0.0, 0.5), (1.0, 1.0)] {
            let pw = WhittakerParams::real(beta, m);
            let q = regularized_mellin_quadrature(|x| Ok([trig_j(pw, c(2.0 * x, 0.0))?, c(0.0, 0.0)]), 1.0, &ss).unwrap();
            for (s, qv) in ss.iter().zip(q) {
                let cf = mellin_j2(c(beta, 0.0), c(m, 0.0), c(*s, 0.0)).unwrap();
                assert!((cf - qv[0]).norm() < 1e-6 * cf.norm(), "{beta} {m} {s}");
            }
        }
    }

    #[test]
    fn small_mu_is_continuous() {
        let l = 0.3;
        let at = |mu: f64| {
            let p = ManifoldPoint::from_triple(c((l * l + mu * mu).sqrt(), 0.0), c(l, 0.0), c(mu, 0.0)).unwrap();
            xi_mellin(&p, Sign::Plus, Sign::Minus, 0.7).unwrap()
        };
        let (a, b) = (at(MU_REG * 0.999), at(MU_REG * 1.001));
        assert!(rel2(a, b) < 1e-3);
        let (a, b) = (at(1e-4), at(0.0));
        assert!(rel2(a, b) < 1e-3);
        let ctx = EnergyContext::real(1.0);
        let p = ManifoldPoint::from_triple(c(l, 0.0), c(l, 0.0), c(0.0, 0.0)).unwrap();
        let q = regularized_mellin_quadrature(|x| Ok(xi(&p, Sign::Minus, &ctx, x)?.arr()), 1.0, &[0.7]).unwrap();
        assert!(rel2(xi_mellin(&p, Sign::Plus, Sign::Minus, 0.7).unwrap(), q[0]) < 1e-4);
    }

    #[test]
    fn analytic_in_s() {
        let p = generic();
        let h = 1e-4;
        for s0 in [-2.0, 0.3, 3.0] {
            let f = |s: Complex64| xi_mellin_complex(&p, Sign::Plus, Sign::Minus, s).unwrap();
            let z = c(s0, 0.0);
            for i in 0..2 {
                let dx = (f(z + h)[i] - f(z - h)[i]) / (2.0 * h);
                let dy = (f(z + c(0.0, h))[i] - f(z - c(0.0, h))[i]) / (2.0 * h);
                // ∂_σ = i ∂_s
                assert!((dy - c(0.0, 1.0) * dx).norm() < 1e-6 * dx.norm().max(1.0), "{s0}");
            }
        }
    }

    #[test]
    fn growth_and_boundedness() {
        let nrm = |v: [Complex64; 2]| (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        // real λ: bounded
        let p = p543();
        let b: Vec<f64> = [10.0, 30.0, -10.0, -30.0].iter().map(|s| nrm(xi_mellin(&p, Sign::Plus, Sign::Minus, *s).unwrap())).collect();
        let b0 = nrm(xi_mellin(&p, Sign::Plus, Sign::Minus, 0.0).unwrap());
        assert!(b.iter().all(|v| *v < 10.0 * b0));
        // complex λ: proxy bounded, the symbol itself grows
        let (w, l) = (c(0.9, 0.3), c(0.2, 0.6));
        let q = ManifoldPoint::from_triple(w, l, (w * w - l * l).sqrt()).unwrap();
        let g = |s: f64| nrm(xi_mellin(&q, Sign::Plus, Sign::Minus, s).unwrap());
        let proxy = |s: f64| g(s) / (1.0 + s * s).powf(l.im.abs() / 2.0);
        let p10 = proxy(10.0).max(proxy(-10.0));
        for s in [30.0, -30.0, 60.0, -60.0, 100.0, -100.0] {
            assert!(proxy(s) < 5.0 * p10, "{s}");
        }
        let ratio = g(100.0).max(g(-100.0)) / g(10.0).max(g(-10.0));
        assert!(ratio > 2.0, "{ratio}");
    }

    #[test]
    fn kernel_identities() {
        for p in [p543(), generic()] {
            for k in [1.3, -0.7] {
                let eps = Sign::of(k);
                for x in [0.3, 2.0] {
                    let up = u_kernel(&p, Sign::Plus, k, x).unwrap();
                    let um = u_kernel(&p, Sign::Minus, k, x).unwrap();
                    let sv = scattering_value(&p, eps).value().unwrap();
                    assert!((up - um * sv).norm() < 1e-10 * up.norm());
                    let cj = u_kernel(&p.conj(), Sign::Plus, k, x).unwrap().conj();
                    assert!((cj - um).norm() < 1e-10 * um.norm());
                    for y in [0.5, 1.7] {
                        let ump = u_kernel(&p, Sign::Minus, k, y).unwrap();
                        let upp = u_kernel(&p, Sign::Plus, k, y).unwrap();
                        let pi = spectral_density(&p, k, x, y).unwrap();
                        let f1 = Mat2::outer(up.arr(), ump.arr());
                        let f2 = Mat2::outer(um.arr(), upp.arr());
                        assert!((f1 - pi).norm_max() < 1e-10 * pi.norm_max());
                        assert!((f1 - f2).norm_max() < 1e-8 * pi.norm_max());
                        assert!((f2 - spectral_density_swapped(&p, k, x, y).unwrap()).norm_max() < 1e-10 * pi.norm_max());
                    }
                }
            }
        }
    }

    #[test]
    fn scattering_values() {
        let p = p543();
        for e in [Sign::Plus, Sign::Minus] {
            assert!((scattering_value(&p, e).value().unwrap().norm() - 1.0).abs() < 1e-12);
        }
        // real μ: the two energies differ by the phase e^{2iπμ}
        let q = ManifoldPoint::real(0.4, 0.2, 0.12f64.sqrt()).unwrap();
        let (a, b) = (scattering_value(&q, Sign::Plus).value().unwrap(), scattering_value(&q, Sign::Minus).value().unwrap());
        assert!((b / a - (c(0.0, 2.0 * PI) * q.mu).exp()).norm() < 1e-12);
        // 𝓔⁻ ∖ 𝓔⁺
        let e = ManifoldPoint::from_triple(c(0.0, 0.0), c(0.0, 0.3), c(0.3, 0.0)).unwrap();
        let e = if scattering_value(&e, Sign::Plus) == Amplitude::Zero { e } else { e.conj() };
        assert_eq!(scattering_value(&e, Sign::Plus), Amplitude::Zero);
        assert_eq!(scattering_value(&e, Sign::Minus).tag(), "ZeroTag");
    }

    /// `D_p f` for the bump, fourth-order differences with step `1e−3 x`.
    fn apply_fd(p: &ManifoldPoint, x: f64) -> Spinor {
        let h = 1e-3 * x;
        let d = (bump(x - 2.0 * h) - bump(x + 2.0 * h) + (bump(x + h) - bump(x - h)) * 8.0) * (1.0 / (12.0 * h));
        let v = bump(x);
        Spinor::new(-(p.lambda + p.omega) / x * v.up - d.down, d.up - (p.lambda - p.omega) / x * v.down)
    }

    fn test_grid() -> MellinGrid<Spinor> {
        MellinGrid::sample(4096, 1e4, bump).unwrap()
    }

    #[test]
    fn parseval_intertwining_inverse() {
        let p = p543();
        let f = test_grid();
        let nf = f.norm_sqr();
        for fam in [Sign::Plus, Sign::Minus] {
            let u = apply_u(&p, fam, &f).unwrap();
            assert!((u.norm_sqr() - nf).abs() / nf < 1e-3, "{} vs {nf}", u.norm_sqr());
            // 𝓤 D f = k 𝓤 f
            let df = f.map(|x, _| apply_fd(&p, x));
            let udf = apply_u(&p, fam, &df).unwrap();
            let res = udf.sub(&u.times_k()).norm_sqr().sqrt() / nf.sqrt();
            assert!(res < 1e-3, "{res}");
            // (𝓤^±)^{−1} = 𝓤^{∓T}
            let back = apply_u_transpose(&p, fam.flip(), &u).unwrap();
            let err: f64 = back.values.iter().zip(&f.values).map(|(a, b)| (*a - *b).norm().powi(2)).zip(f.nodes()).map(|(e, x)| e * x * f.h).sum();
            assert!((err / nf).sqrt() < 1e-3, "{}", (err / nf).sqrt());
            let again = apply_u(&p, fam, &back).unwrap();
            assert!(again.sub(&u).norm_sqr().sqrt() / u.norm_sqr().sqrt() < 1e-3);
        }
    }

    #[test]
    fn spectral_projections() {
        let p = p543();
        let u = apply_u(&p, Sign::Minus, &test_grid()).unwrap();
        let nf = test_grid().norm_sqr();
        let kk = 1e4;
        let cuts = [-kk, -3.0, -1.0, -0.2, 0.0, 0.5, 2.0, 7.0, kk];
        let total: f64 = cuts.windows(2).map(|w| u.spectral_measure(w[0], w[1])).sum();
        assert!((total - nf).abs() / nf < 1e-3);
        let mut prev = 0.0;
        for b in [0.1, 0.5, 1.0, 3.0, 10.0] {
            let m = u.spectral_measure(-b, b);
            assert!(m >= prev);
            prev = m;
        }
    }

    #[test]
    fn rejects_bad_input() {
        let p = p543();
        assert!(u_kernel(&p, Sign::Plus, 0.0, 1.0).is_err());
        assert!(xi_mellin(&p, Sign::Plus, Sign::Plus, f64::NAN).is_err());
        let lopsided = MellinGrid { x0: 0.5, h: 0.01, values: vec![Spinor::new(c(0.0, 0.0), c(0.0, 0.0)); 64] };
        assert!(apply_u(&p, Sign::Plus, &lopsided).is_err());
    }
}
