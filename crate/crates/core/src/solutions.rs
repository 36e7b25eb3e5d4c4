//! Solutions of `(D_{ω,λ} − k) f = 0` with
//! `D_{ω,λ} = [[−(λ+ω)/x, −∂ₓ], [∂ₓ, −(λ−ω)/x]]`.
//!
//! The minus family `ξ⁻, ζ⁻` is built from `𝓘_{−iλ, μ±½}(2ikx)` and
//! `𝓚_{−iλ, μ±½}(2ikx)`; the plus family by reflection
//! `ξ⁺_p(k,x) = conj ξ⁻_{p̄}(k̄,x)`. For real `k` the Whittaker values come
//! from the trigonometric functions 𝓙 and 𝓗^±.
//!
//! Near `μ = 0` the regularized forms are used. Their difference quotients
//! in `μ` are removable at zero; for `|μ| < 1e−3` they are sampled at
//! `μ = ±h, ±2h, ±3h` and interpolated.

use crate::complexfn::{gamma, rgamma};
use crate::manifold::{exceptional_component, inv_n_scale, scattering_amplitude, tau, Amplitude, ManifoldPoint};
use crate::numerics::ode_rkf;
use crate::whittaker::{k_asymptotic, trig_h, trig_j, whittaker_i, whittaker_k, WhittakerParams};
use crate::{c, Error, Mat2, Result, Sign};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

/// Below this `|μ|` the regularized forms are used.
pub const MU_REG: f64 = 0.05;
const MU_INTERP: f64 = 1e-3;
const MU_STEP: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spinor {
    pub up: Complex64,
    pub down: Complex64,
}

impl Spinor {
    pub fn new(up: Complex64, down: Complex64) -> Self {
        Spinor { up, down }
    }

    pub fn arr(&self) -> [Complex64; 2] {
        [self.up, self.down]
    }

    pub fn from_arr(v: [Complex64; 2]) -> Self {
        Spinor { up: v[0], down: v[1] }
    }

    pub fn conj(&self) -> Self {
        Spinor::new(self.up.conj(), self.down.conj())
    }

    pub fn norm(&self) -> f64 {
        self.up.norm().hypot(self.down.norm())
    }

    /// Bilinear (non-conjugating) product.
    pub fn dot(&self, o: &Spinor) -> Complex64 {
        self.up * o.up + self.down * o.down
    }

    pub fn is_finite(&self) -> bool {
        self.up.is_finite() && self.down.is_finite()
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, o: Spinor) -> Spinor {
        Spinor::new(self.up + o.up, self.down + o.down)
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, o: Spinor) -> Spinor {
        Spinor::new(self.up - o.up, self.down - o.down)
    }
}

impl Mul<Complex64> for Spinor {
    type Output = Spinor;
    fn mul(self, s: Complex64) -> Spinor {
        Spinor::new(self.up * s, self.down * s)
    }
}

impl Mul<f64> for Spinor {
    type Output = Spinor;
    fn mul(self, s: f64) -> Spinor {
        Spinor::new(self.up * s, self.down * s)
    }
}

/// `det [f g]`.
pub fn det(f: &Spinor, g: &Spinor) -> Complex64 {
    f.up * g.down - f.down * g.up
}

/// The spectral parameter with `ε_k = sgn Re k` (undefined on `iℝ`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyContext {
    pub k: Complex64,
    pub eps: Option<Sign>,
}

impl EnergyContext {
    pub fn new(k: Complex64) -> Self {
        let eps = if k.re > 0.0 {
            Some(Sign::Plus)
        } else if k.re < 0.0 {
            Some(Sign::Minus)
        } else {
            None
        };
        EnergyContext { k, eps }
    }

    pub fn real(k: f64) -> Self {
        Self::new(c(k, 0.0))
    }

    /// `ε_k`, or `BranchCut` for `k ∈ iℝ`.
    pub fn eps(&self) -> Result<Sign> {
        self.eps.ok_or(Error::BranchCut)
    }

    pub fn is_real(&self) -> bool {
        self.k.im == 0.0 && self.k.re != 0.0
    }

    fn conj(&self) -> Self {
        EnergyContext::new(self.k.conj())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Up,
    Down,
}

fn finite_x(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("x must be positive and finite"))
    }
}

// ---------------------------------------------------------------------------
// zero energy

/// `η↑ = x^μ (z, 1)`, `η↓ = x^μ (1, 1/z)`.
pub fn eta(p: &ManifoldPoint, direction: Direction, x: f64) -> Result<Spinor> {
    finite_x(x)?;
    let xm = c(x, 0.0).powc(p.mu);
    let (a, b) = (p.ray.a, p.ray.b);
    match direction {
        Direction::Up if b != c(0.0, 0.0) => Ok(Spinor::new(a / b, c(1.0, 0.0)) * xm),
        Direction::Down if a != c(0.0, 0.0) => Ok(Spinor::new(c(1.0, 0.0), b / a) * xm),
        _ => Err(Error::ChartPole),
    }
}

/// The logarithmic solutions at `μ = 0`: `ϑ↑` for `λ = ω`, `ϑ↓` for `λ = −ω`.
pub fn theta(omega: Complex64, direction: Direction, x: f64) -> Result<Spinor> {
    finite_x(x)?;
    let l = -x.ln() * 2.0 * omega;
    Ok(match direction {
        Direction::Up => Spinor::new(c(1.0, 0.0), l),
        Direction::Down => Spinor::new(l, c(1.0, 0.0)),
    })
}

// ---------------------------------------------------------------------------
// engines for the minus family

/// `(f(μ+δ) …)` sampled around zero and interpolated when `|μ|` is tiny.
pub(crate) fn removable<F: Fn(Complex64) -> Result<Complex64>>(mu: Complex64, f: F) -> Result<Complex64> {
    if mu.norm() >= MU_INTERP {
        return f(mu);
    }
    let h = MU_STEP;
    let nodes = [-3.0 * h, -2.0 * h, -h, h, 2.0 * h, 3.0 * h];
    let mut v = c(0.0, 0.0);
    for (i, ti) in nodes.iter().enumerate() {
        let mut w = c(1.0, 0.0);
        for (j, tj) in nodes.iter().enumerate() {
            if i != j {
                w *= (mu - tj) / (ti - tj);
            }
        }
        v += w * f(c(*ti, 0.0))?;
    }
    Ok(v)
}

type Whit<'a> = &'a dyn Fn(Complex64) -> Result<Complex64>;

/// `ξ⁻` from `I(m) = 𝓘_{−iλ,m}(w)`.
fn xi_engine(p: &ManifoldPoint, i_of: Whit) -> Result<Spinor> {
    if exceptional_component(p, Sign::Minus).is_some() {
        return Err(Error::ExceptionalPoint);
    }
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let ii = c(0.0, 1.0);
    let ip = i_of(mu + 0.5)?;
    if mu.norm() >= MU_REG {
        let g = gamma(1.0 + mu + ii * l).map_err(|_| Error::ExceptionalPoint)?;
        let pre = g / (2.0 * mu * (w - l + ii * mu));
        let im = i_of(mu - 0.5)?;
        let v = Spinor::new(w - l, mu) * (ii * w * ip) + Spinor::new(w - l, -mu) * im;
        return Ok(v * pre);
    }
    let d = inv_n_scale(p, Sign::Minus)?;
    let (a, b) = (p.ray.a, p.ray.b);
    let q = removable(mu, |m| Ok((i_of(m - 0.5)? - ii * l * i_of(m + 0.5)?) / m))?;
    let v = Spinor::new(-b, a) * (ii * ip) + Spinor::new(a, b) * q;
    Ok(v * (0.5 * d))
}

/// `ζ⁻` from `K(m) = 𝓚_{−iλ,m}(w)`.
fn zeta_engine(p: &ManifoldPoint, k_of: Whit) -> Result<Spinor> {
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let ii = c(0.0, 1.0);
    let scale = w.norm().max(l.norm()).max(mu.norm());
    let den = w - l - ii * mu;
    let kp = k_of(mu + 0.5)?;
    if mu.norm() >= MU_REG && den.norm() > 1e-6 * scale {
        let km = k_of(mu - 0.5)?;
        let d = mu * den;
        return Ok(Spinor::new(w - l, mu) * (w * kp / d) + Spinor::new(w - l, -mu) * ((l + ii * mu) * km / d));
    }
    // (ω+λ)(z+i)(z,1), written without z
    let v = Spinor::new(w - l - ii * mu, -mu + ii * (w + l));
    if v.norm() == 0.0 {
        return Ok(Spinor::new(ii, c(1.0, 0.0)) * kp);
    }
    let q = removable(mu, |m| Ok((k_of(m - 0.5)? - k_of(m + 0.5)?) / m))?;
    Ok(Spinor::new(ii, c(1.0, 0.0)) * kp - v * (0.5 * q))
}

fn hyperbolic_i(p: &ManifoldPoint, w: Complex64) -> impl Fn(Complex64) -> Result<Complex64> {
    let beta = -c(0.0, 1.0) * p.lambda;
    move |m| whittaker_i(WhittakerParams::new(beta, m), w)
}

fn hyperbolic_k(p: &ManifoldPoint, w: Complex64) -> impl Fn(Complex64) -> Result<Complex64> {
    let beta = -c(0.0, 1.0) * p.lambda;
    move |m| whittaker_k(WhittakerParams::new(beta, m), w)
}

/// `𝓚_{−iλ,m}(iεX) = e^{−iεπ/2(½+m)} 𝓗^{−ε}_{ελ,m}(X)`.
fn trig_k(p: &ManifoldPoint, eps: Sign, big_x: f64) -> impl Fn(Complex64) -> Result<Complex64> {
    let e = eps.f();
    let beta = e * p.lambda;
    move |m| {
        let ph = (c(0.0, -e * PI / 2.0) * (0.5 + m)).exp();
        Ok(ph * trig_h(WhittakerParams::new(beta, m), c(big_x, 0.0), eps.flip())?)
    }
}

fn w_minus(ctx: &EnergyContext, x: f64) -> Result<Complex64> {
    let w = c(0.0, 2.0 * x) * ctx.k;
    if w.im == 0.0 && w.re <= 0.0 {
        return Err(Error::BranchCut);
    }
    Ok(w)
}

fn xi_minus(p: &ManifoldPoint, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    let w = w_minus(ctx, x)?;
    xi_engine(p, &hyperbolic_i(p, w))
}

fn zeta_minus(p: &ManifoldPoint, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    if ctx.is_real() {
        let eps = ctx.eps()?;
        let big_x = 2.0 * ctx.k.re.abs() * x;
        return zeta_engine(p, &trig_k(p, eps, big_x));
    }
    let w = w_minus(ctx, x)?;
    zeta_engine(p, &hyperbolic_k(p, w))
}

// ---------------------------------------------------------------------------
// public families

/// `ξ^±_p(k, x)`.
pub fn xi(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    finite_x(x)?;
    if ctx.is_real() {
        return xi_trig(p, sign, ctx.eps()?, 2.0 * ctx.k.re.abs() * x);
    }
    match sign {
        Sign::Minus => xi_minus(p, ctx, x),
        Sign::Plus => Ok(xi_minus(&p.conj(), &ctx.conj(), x)?.conj()),
    }
}

/// `ζ^±_p(k, x)`.
pub fn zeta(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    finite_x(x)?;
    match sign {
        Sign::Minus => zeta_minus(p, ctx, x),
        Sign::Plus => Ok(zeta_minus(&p.conj(), &ctx.conj(), x)?.conj()),
    }
}

/// `ξ^±_p` at real `k` from 𝓙 at `X = 2|k|x`; the regularized variant
/// for `|μ| < 0.05`.
pub fn xi_trig(p: &ManifoldPoint, sign: Sign, eps: Sign, big_x: f64) -> Result<Spinor> {
    finite_x(big_x)?;
    let d = inv_n_scale(p, sign)?;
    let (s, e) = (sign.f(), eps.f());
    let (a, b, mu, l) = (p.ray.a, p.ray.b, p.mu, p.lambda);
    let ph = (c(0.0, -s * e * PI / 2.0) * mu).exp();
    let j = |m: Complex64| trig_j(WhittakerParams::new(e * l, m), c(big_x, 0.0));
    let jp = j(mu + 0.5)?;
    if mu.norm() >= MU_REG {
        let jm = j(mu - 0.5)?;
        let v = Spinor::new(-a, b) * (e * p.omega * jp) + Spinor::new(a, b) * jm;
        return Ok(v * (ph * d / (2.0 * mu)));
    }
    let q = removable(mu, |m| Ok((j(m - 0.5)? + e * l * j(m + 0.5)?) / m))?;
    let v = Spinor::new(b, -a) * (e * jp) + Spinor::new(a, b) * q;
    Ok(v * (ph * d * 0.5))
}

/// `ζ^±_p` at real `k` from the 𝓗 form written with `z`; needs `z ∉ {0, ∞}`.
pub fn zeta_trig(p: &ManifoldPoint, sign: Sign, eps: Sign, big_x: f64) -> Result<Spinor> {
    finite_x(big_x)?;
    let z = p.z().filter(|z| z.norm() > 0.0).ok_or(Error::ChartPole)?;
    let (s, e) = (sign.f(), eps.f());
    let ii = c(0.0, 1.0);
    let (mu, l) = (p.mu, p.lambda);
    let hs = if s * e > 0.0 { Sign::Plus } else { Sign::Minus };
    let h = |m: Complex64| trig_h(WhittakerParams::new(e * l, m), c(big_x, 0.0), hs);
    let ph = (c(0.0, s * e * PI / 2.0) * mu).exp() * 0.5;
    let t1 = Spinor::new(c(-1.0, 0.0), 1.0 / z) * (ii * s * e * (z + ii * s) * h(mu + 0.5)?);
    let t2 = Spinor::new(c(1.0, 0.0), 1.0 / z) * ((z - ii * s) * h(mu - 0.5)?);
    Ok((t1 + t2) * ph)
}

/// `ξ^±` from its convergent expansion at the origin,
/// `x^μ Σ cₙ xⁿ` with `c₀ = (1/N^±)(∓2ik)^μ/Γ(2μ+1)·(z,1)`.
pub fn xi_small_x_series(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64, terms: usize) -> Result<Spinor> {
    finite_x(x)?;
    let (w, l, mu, k) = (p.omega, p.lambda, p.mu, ctx.k);
    let d = inv_n_scale(p, sign)?;
    let base = c(0.0, -2.0 * sign.f()) * k;
    let lead = base.powc(mu) * rgamma(2.0 * mu + 1.0) * d;
    let mut cf = [p.ray.a * lead, p.ray.b * lead];
    let mut sum = cf;
    let mut xn = c(1.0, 0.0);
    for n in 1..terms {
        let nm = mu + n as f64;
        // [[μ+n, −(λ−ω)], [λ+ω, μ+n]] cₙ = (k c₂, −k c₁)ₙ₋₁
        let r = [k * cf[1], -k * cf[0]];
        let dt = nm * nm + (l - w) * (l + w);
        let next = [(nm * r[0] + (l - w) * r[1]) / dt, (nm * r[1] - (l + w) * r[0]) / dt];
        cf = next;
        xn *= x;
        sum[0] += cf[0] * xn;
        sum[1] += cf[1] * xn;
        if (cf[0].norm() + cf[1].norm()) * xn.norm() < 1e-18 * (sum[0].norm() + sum[1].norm()) {
            break;
        }
    }
    let xm = c(x, 0.0).powc(mu);
    Ok(Spinor::new(sum[0] * xm, sum[1] * xm))
}

/// `ζ^±` with each 𝓚 replaced by its optimally truncated large-argument
/// series; accurate when `|kx|` is large.
pub fn zeta_large_x_series(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    finite_x(x)?;
    let (q, cx) = match sign {
        Sign::Minus => (*p, *ctx),
        Sign::Plus => (p.conj(), ctx.conj()),
    };
    let w = c(0.0, 2.0 * x) * cx.k;
    let beta = -c(0.0, 1.0) * q.lambda;
    let kk = move |m: Complex64| k_asymptotic(WhittakerParams::new(beta, m), w);
    let v = zeta_engine(&q, &kk)?;
    Ok(match sign {
        Sign::Minus => v,
        Sign::Plus => v.conj(),
    })
}

// ---------------------------------------------------------------------------
// bisolution, operator, ODE

fn family_for(p: &ManifoldPoint, k: Complex64) -> Sign {
    let preferred = if k.im > 0.0 { Sign::Plus } else { Sign::Minus };
    if exceptional_component(p, preferred).is_some() {
        preferred.flip()
    } else {
        preferred
    }
}

/// The canonical bisolution `ξ(x)ζ(y)ᵀ − ζ(x)ξ(y)ᵀ`, equal to `[[0,1],[−1,0]]`
/// on the diagonal. At `k = 0` the closed form in `(x/y)^μ` is used.
pub fn bisolution(p: &ManifoldPoint, ctx: &EnergyContext, x: f64, y: f64) -> Result<Mat2> {
    finite_x(x)?;
    finite_y(y)?;
    if ctx.k == c(0.0, 0.0) {
        return bisolution_zero(p, x, y);
    }
    let s = family_for(p, ctx.k);
    bisolution_with(p, s, ctx, x, y)
}

fn finite_y(y: f64) -> Result<()> {
    finite_x(y)
}

/// The canonical bisolution from a chosen family.
pub fn bisolution_with(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64, y: f64) -> Result<Mat2> {
    let (xx, zx) = (xi(p, sign, ctx, x)?, zeta(p, sign, ctx, x)?);
    let (xy, zy) = (xi(p, sign, ctx, y)?, zeta(p, sign, ctx, y)?);
    Ok(Mat2::outer(xx.arr(), zy.arr()) - Mat2::outer(zx.arr(), xy.arr()))
}

fn bisolution_zero(p: &ManifoldPoint, x: f64, y: f64) -> Result<Mat2> {
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let r = x / y;
    let plus = c(r, 0.0).powc(mu) + c(1.0 / r, 0.0).powc(mu);
    // ((x/y)^μ − (y/x)^μ)/μ, → 2 ln(x/y) at μ = 0
    let diff = if mu.norm() < 1e-8 {
        c(2.0 * r.ln(), 0.0)
    } else {
        (c(r, 0.0).powc(mu) - c(1.0 / r, 0.0).powc(mu)) / mu
    };
    Ok(Mat2::new((w - l) * diff, plus, -plus, -(w + l) * diff).scale(c(0.5, 0.0)))
}

/// `M(x)` with `f′ = M f` equivalent to `(D_{ω,λ} − k) f = 0`.
pub fn system_matrix(omega: Complex64, lambda: Complex64, k: Complex64, x: Complex64) -> Mat2 {
    let z = c(0.0, 0.0);
    Mat2::new(z, (lambda - omega) / x + k, -((lambda + omega) / x + k), z)
}

/// `(D_{ω,λ} − k) f` at `x` by fourth-order central differences,
/// step `max(1e−6, 1e−6 x)`.
pub fn apply_operator_fd<F: Fn(f64) -> Result<Spinor>>(
    omega: Complex64,
    lambda: Complex64,
    k: Complex64,
    f: F,
    x: f64,
) -> Result<Spinor> {
    let h = (1e-6 * x).max(1e-6);
    let d = (f(x - 2.0 * h)? - f(x + 2.0 * h)? + (f(x + h)? - f(x - h)?) * 8.0) * (1.0 / (12.0 * h));
    let v = f(x)?;
    Ok(Spinor::new(
        -(lambda + omega) / x * v.up - d.down - k * v.up,
        d.up - (lambda - omega) / x * v.down - k * v.down,
    ))
}

/// Independent solution of `(D − k)f = 0` by adaptive RKF from a seed.
pub fn ode_oracle(p: &ManifoldPoint, ctx: &EnergyContext, seed_x: f64, seed: Spinor, x: f64) -> Result<Spinor> {
    finite_x(seed_x)?;
    finite_x(x)?;
    let (w, l, k) = (p.omega, p.lambda, ctx.k);
    let v = ode_rkf(|s| system_matrix(w, l, k, c(s, 0.0)), seed.arr(), seed_x, x, 1e-11)?;
    Ok(Spinor::from_arr(v))
}

/// `ζ^±_p(e^{2πi}k, x)` by continuing along `t = kx e^{iθ}` in `segments` pieces.
pub fn zeta_monodromy_numeric(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64, segments: usize) -> Result<Spinor> {
    let mut v = zeta(p, sign, ctx, x)?.arr();
    let (w, l) = (p.omega, p.lambda);
    let t0 = ctx.k * x;
    // dF/dθ = i t M̃(t) F with t = t₀e^{iθ} and M̃ the system at k = 1
    let m = |th: f64| {
        let t = t0 * c(0.0, th).exp();
        system_matrix(w, l, c(1.0, 0.0), t).scale(c(0.0, 1.0) * t)
    };
    let step = 2.0 * PI / segments as f64;
    for j in 0..segments {
        v = ode_rkf(m, v, j as f64 * step, (j + 1) as f64 * step, 1e-12)?;
    }
    Ok(Spinor::from_arr(v))
}

/// The closed-form right side of the monodromy relation,
/// `e^{−2πiμ}ζ − 4πiω/(Γ(1+μ∓iλ)Γ(1−μ∓iλ)) ξ`.
pub fn zeta_monodromy_formula(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    let s = sign.f();
    let ii = c(0.0, 1.0);
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let g = rgamma(1.0 + mu - ii * s * l) * rgamma(1.0 - mu - ii * s * l);
    let z = zeta(p, sign, ctx, x)? * (-2.0 * PI * ii * mu).exp();
    if w == c(0.0, 0.0) || g == c(0.0, 0.0) {
        return Ok(z);
    }
    Ok(z - xi(p, sign, ctx, x)? * (4.0 * PI * ii * w * g))
}

/// `ζ^±` from `ξ_p` and `ξ_{τp}`; needs `sin 2πμ ≠ 0`.
pub fn zeta_from_xi_pair(p: &ManifoldPoint, sign: Sign, ctx: &EnergyContext, x: f64) -> Result<Spinor> {
    let s = sign.f();
    let ii = c(0.0, 1.0);
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let sn = crate::complexfn::sinpi(2.0 * mu);
    if sn.norm() < 1e-8 {
        return Err(Error::IndeterminateConnection);
    }
    let g = rgamma(1.0 + mu - ii * s * l) * rgamma(1.0 - mu - ii * s * l);
    let d = xi(p, sign, ctx, x)? - xi(&tau(p), sign, ctx, x)?;
    Ok(d * (-2.0 * PI * w * g / sn))
}

/// Residuals of the connection identities between the two families, in the
/// order `ξ⁺ = e^{−iεπμ}Sξ⁻`, the `ξ⁺` and `ξ⁻` expansions in `ζ^±`, and both
/// `ζ^±` expansions; each relative to the largest term.
pub fn connection_residuals(p: &ManifoldPoint, ctx: &EnergyContext, x: f64) -> Result<[f64; 5]> {
    let e = ctx.eps()?.f();
    let ii = c(0.0, 1.0);
    let (l, mu) = (p.lambda, p.mu);
    let s = match scattering_amplitude(p) {
        Amplitude::Value(v) => v,
        _ => return Err(Error::ExceptionalPoint),
    };
    let xp = xi(p, Sign::Plus, ctx, x)?;
    let xm = xi(p, Sign::Minus, ctx, x)?;
    let zp = zeta(p, Sign::Plus, ctx, x)?;
    let zm = zeta(p, Sign::Minus, ctx, x)?;
    let ph = (-ii * e * PI * mu).exp();
    let el = (e * PI * l).exp();
    let rel = |lhs: Spinor, a: Spinor, b: Spinor| (lhs - a - b).norm() / lhs.norm().max(a.norm()).max(b.norm());
    let zero = Spinor::new(c(0.0, 0.0), c(0.0, 0.0));
    let r1 = rel(xp, xm * (ph * s), zero);
    let f = 1.0 / (el * 2.0 * ii);
    let r2 = rel(xp, zm * f, zp * (-f * ph * s));
    let r3 = rel(xm, zm * (f / ph / s), zp * (-f));
    let r4 = rel(zp, xm * (-2.0 * ii * el), zm * (1.0 / ph / s));
    let r5 = rel(zm, xp * (2.0 * ii * el), zp * (ph * s));
    Ok([r1, r2, r3, r4, r5])
}
