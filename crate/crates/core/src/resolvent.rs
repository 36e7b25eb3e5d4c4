//! Green's kernels of `D_p − k`, their boundary values on the real axis,
//! the zero-energy kernel, the spectral density, and quadrature application
//! of the resolvent.
//!
//! `G_p(k;x,y) = −𝟙(y>x) ξ(x)ζ(y)ᵀ − 𝟙(x≥y) ζ(x)ξ(y)ᵀ` with the family
//! `sgn Im k`. The elementary ω = 0 kernels are written with the scalar
//! one-sided kernels `e^{ik(x−y)}(x/y)^α`.

use crate::complexfn::gamma;
use crate::manifold::{exceptional_component, n_factor, ManifoldPoint};
use crate::numerics::{quad_halfline, GaussLegendre, QuadratureScheme};
use crate::solutions::{xi, zeta, EnergyContext, Spinor};
use crate::{c, Error, Mat2, Projective, Result, Sign};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Kernel values on a tensor grid, row-major in `(xs, ys)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: Vec<Mat2>,
}

impl KernelGrid {
    pub fn get(&self, i: usize, j: usize) -> Mat2 {
        self.values[i * self.ys.len() + j]
    }

    fn check_nodes(v: &[f64]) -> Result<()> {
        let ok = v.first().is_none_or(|&x| x > 0.0) && v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|x| x.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::domain("grid nodes must be positive, finite and ascending"))
        }
    }
}

/// A function on the half-line sampled at the 24-point Gauss–Legendre nodes
/// of a panel partition; values between nodes come from the panel interpolant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    pub nodes: Vec<f64>,
    pub values: Vec<Spinor>,
    pub weights: Vec<f64>,
    edges: Vec<f64>,
}

const ORDER: usize = 24;

impl SampledFunction {
    /// Samples `f` on the panels `edges` (ascending, first edge ≥ 0).
    pub fn sample<F: Fn(f64) -> Spinor>(edges: &[f64], f: F) -> Result<Self> {
        if edges.len() < 2 || edges[0] < 0.0 || edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("panel edges must be ascending and non-negative"));
        }
        let g = GaussLegendre::g24();
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for e in edges.windows(2) {
            for (x, w) in g.on(e[0], e[1]) {
                nodes.push(x);
                weights.push(w);
            }
        }
        let values = nodes.iter().map(|&x| f(x)).collect();
        Ok(SampledFunction { nodes, values, weights, edges: edges.to_vec() })
    }

    /// Same nodes, new values.
    pub fn with_values(&self, values: Vec<Spinor>) -> Result<Self> {
        if values.len() != self.nodes.len() {
            return Err(Error::domain("value count does not match the nodes"));
        }
        Ok(SampledFunction { values, ..self.clone() })
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    /// `(∫ |f|²)^{½}` by the panel rule.
    pub fn l2_norm(&self) -> f64 {
        self.values.iter().zip(&self.weights).map(|(v, w)| w * v.norm().powi(2)).sum::<f64>().sqrt()
    }

    /// `∫ fᵀg` (bilinear).
    pub fn bilinear(&self, g: &SampledFunction) -> Complex64 {
        self.values.iter().zip(&g.values).zip(&self.weights).map(|((a, b), w)| a.dot(b) * *w).sum()
    }

    /// Panel index of `x`, or `None` beyond the last edge.
    fn panel_of(&self, x: f64) -> Option<usize> {
        if x < self.edges[0] || x > *self.edges.last().unwrap() {
            return None;
        }
        let i = self.edges.partition_point(|&e| e <= x);
        Some(i.saturating_sub(1).min(self.edges.len() - 2))
    }

    /// Interpolated value at `x`; zero outside the panels.
    pub fn eval(&self, x: f64) -> Spinor {
        match self.panel_of(x) {
            None => Spinor::new(c(0.0, 0.0), c(0.0, 0.0)),
            Some(p) => {
                let sl = &self.values[p * ORDER..(p + 1) * ORDER];
                let up: Vec<Complex64> = sl.iter().map(|v| v.up).collect();
                let dn: Vec<Complex64> = sl.iter().map(|v| v.down).collect();
                let nd = &self.nodes[p * ORDER..(p + 1) * ORDER];
                Spinor::new(barycentric(nd, &up, x), barycentric(nd, &dn, x))
            }
        }
    }
}

fn bary_weights(nodes: &[f64]) -> Vec<f64> {
    let scale = 0.5 * (nodes[nodes.len() - 1] - nodes[0]).max(f64::MIN_POSITIVE);
    (0..nodes.len())
        .map(|j| {
            let mut p = 1.0;
            for (k, xk) in nodes.iter().enumerate() {
                if k != j {
                    p *= (nodes[j] - xk) / scale;
                }
            }
            1.0 / p
        })
        .collect()
}

fn barycentric(nodes: &[f64], vals: &[Complex64], x: f64) -> Complex64 {
    let w = bary_weights(nodes);
    let mut num = c(0.0, 0.0);
    let mut den = 0.0;
    for ((xj, fj), wj) in nodes.iter().zip(vals).zip(&w) {
        let d = x - xj;
        if d == 0.0 {
            return *fj;
        }
        num += fj * (wj / d);
        den += wj / d;
    }
    num / den
}

/// `∫_{a}^{x} h` for the interpolant of `h` on one panel's nodes.
fn partial_panel(nodes: &[f64], vals: &[Complex64], a: f64, x: f64) -> Complex64 {
    if x <= a {
        return c(0.0, 0.0);
    }
    GaussLegendre::g24().on(a, x).map(|(t, w)| barycentric(nodes, vals, t) * w).sum()
}

// ---------------------------------------------------------------------------
// kernels

fn family_of(p: &ManifoldPoint, k: Complex64) -> Result<Sign> {
    if k.im == 0.0 {
        return Err(Error::SpectrumHit);
    }
    let s = Sign::of(k.im);
    if exceptional_component(p, s).is_some() {
        return Err(Error::SpectrumHit);
    }
    Ok(s)
}

fn assemble(xx: Spinor, zx: Spinor, xy: Spinor, zy: Spinor, x: f64, y: f64) -> Mat2 {
    if y > x {
        -Mat2::outer(xx.arr(), zy.arr())
    } else {
        -Mat2::outer(zx.arr(), xy.arr())
    }
}

fn kernel_with(p: &ManifoldPoint, s: Sign, ctx: &EnergyContext, x: f64, y: f64) -> Result<Mat2> {
    if y > x {
        Ok(-Mat2::outer(xi(p, s, ctx, x)?.arr(), zeta(p, s, ctx, y)?.arr()))
    } else {
        Ok(-Mat2::outer(zeta(p, s, ctx, x)?.arr(), xi(p, s, ctx, y)?.arr()))
    }
}

/// `G_p(k; x, y)` for non-real `k`; the family is `sgn Im k`.
pub fn green_kernel(p: &ManifoldPoint, ctx: &EnergyContext, x: f64, y: f64) -> Result<Mat2> {
    let s = family_of(p, ctx.k)?;
    kernel_with(p, s, ctx, x, y)
}

/// `G_p(k ± i0; x, y)` for real `k ≠ 0` from the real-axis solutions.
pub fn green_boundary(p: &ManifoldPoint, k: f64, side: Sign, x: f64, y: f64) -> Result<Mat2> {
    if k == 0.0 || !k.is_finite() {
        return Err(Error::domain("green_boundary needs real k ≠ 0"));
    }
    if exceptional_component(p, side).is_some() {
        return Err(Error::ExceptionalPoint);
    }
    kernel_with(p, side, &EnergyContext::real(k), x, y)
}

/// `G_p(0; x, y)` for `Re μ > 0`: `½(x/y)^μ[[z,−1],[1,−1/z]]` for `y > x`
/// and `½(y/x)^μ[[z,1],[−1,−1/z]]` otherwise.
pub fn green_zero(p: &ManifoldPoint, x: f64, y: f64) -> Result<Mat2> {
    if !(p.mu.re > 0.0) {
        return Err(Error::domain("green_zero needs Re μ > 0"));
    }
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::domain("x and y must be positive"));
    }
    let z = p.z().filter(|z| z.norm() > 0.0).ok_or(Error::ChartPole)?;
    let (one, h) = (c(1.0, 0.0), 0.5);
    Ok(if y > x {
        Mat2::new(z, -one, one, -1.0 / z).scale(h * c(x / y, 0.0).powc(p.mu))
    } else {
        Mat2::new(z, one, -one, -1.0 / z).scale(h * c(y / x, 0.0).powc(p.mu))
    })
}

/// `Π_p(k; x, y) = e^{ε_kπλ}/π · ξ⁺(x)ξ⁻(y)ᵀ` at real `k ≠ 0`.
pub fn spectral_density(p: &ManifoldPoint, k: f64, x: f64, y: f64) -> Result<Mat2> {
    let (ctx, pre) = density_prefactor(p, k)?;
    Ok(Mat2::outer(xi(p, Sign::Plus, &ctx, x)?.arr(), xi(p, Sign::Minus, &ctx, y)?.arr()).scale(pre))
}

/// The same density from the swapped product `ξ⁻(x)ξ⁺(y)ᵀ`.
pub fn spectral_density_swapped(p: &ManifoldPoint, k: f64, x: f64, y: f64) -> Result<Mat2> {
    let (ctx, pre) = density_prefactor(p, k)?;
    Ok(Mat2::outer(xi(p, Sign::Minus, &ctx, x)?.arr(), xi(p, Sign::Plus, &ctx, y)?.arr()).scale(pre))
}

fn density_prefactor(p: &ManifoldPoint, k: f64) -> Result<(EnergyContext, Complex64)> {
    if k == 0.0 || !k.is_finite() {
        return Err(Error::domain("spectral_density needs real k ≠ 0"));
    }
    if exceptional_component(p, Sign::Plus).is_some() || exceptional_component(p, Sign::Minus).is_some() {
        return Err(Error::ExceptionalPoint);
    }
    let ctx = EnergyContext::real(k);
    let e = ctx.eps()?.f();
    Ok((ctx, (e * PI * p.lambda).exp() / PI))
}

/// `Π⁰_p(x, y) = (4xy)^μ/(πΓ(2μ+1)²N⁺N⁻)·[[z²,z],[z,1]]`, the coefficient of
/// `e^{ε_kπλ}|k|^{2μ}` in `Π_p(k)` as `k → 0`.
pub fn spectral_density_zero(p: &ManifoldPoint, x: f64, y: f64) -> Result<Mat2> {
    let np = n_factor(p, Sign::Plus);
    let nm = n_factor(p, Sign::Minus);
    if np.num == c(0.0, 0.0) || nm.num == c(0.0, 0.0) {
        return Err(Error::ExceptionalPoint);
    }
    let g = gamma(2.0 * p.mu + 1.0)?;
    // [[z²,z],[z,1]]/(N⁺N⁻) = [[a²,ab],[ab,b²]]/(num⁺ num⁻)
    let (a, b) = (p.ray.a, p.ray.b);
    let pre = c(4.0 * x * y, 0.0).powc(p.mu) / (PI * g * g * np.num * nm.num);
    Ok(Mat2::new(a * a, a * b, a * b, b * b).scale(pre))
}

/// The ω = 0 kernels in closed form. `Plus` is `D_λ⁺` (`Im k < 0`,
/// `Re(iλ) > −½`), `Minus` is `D_λ⁻` (`Im k > 0`, `Re(−iλ) > −½`).
pub fn elementary_kernel(lambda: Complex64, family: Sign, ctx: &EnergyContext, x: f64, y: f64) -> Result<Mat2> {
    let (k, ii) = (ctx.k, c(0.0, 1.0));
    let s = family.f();
    if !(s * k.im < 0.0) {
        return Err(Error::domain("elementary_kernel: Im k must have sign opposite to the family"));
    }
    if !((s * ii * lambda).re > -0.5) {
        return Err(Error::domain("elementary_kernel: Re(±iλ) must exceed −½"));
    }
    let r = x / y;
    let pp = (Mat2::identity() + Mat2::sigma2()).scale(c(0.5, 0.0));
    let pm = (Mat2::identity() - Mat2::sigma2()).scale(c(0.5, 0.0));
    let up = (ii * k * (x - y)).exp() * c(r, 0.0).powc(ii * lambda);
    let dn = (-ii * k * (x - y)).exp() * c(r, 0.0).powc(-ii * lambda);
    Ok(match (family, y > x) {
        (Sign::Plus, true) => pp.scale(-ii * up),
        (Sign::Plus, false) => pm.scale(-ii * dn),
        (Sign::Minus, true) => pm.scale(ii * dn),
        (Sign::Minus, false) => pp.scale(ii * up),
    })
}

/// Elements `x^n` times the eigenfunction of `D_λ^±` at `k ∈ ℂ_±`:
/// `W(x^{iλ+n}e^{ikx}, 0)ᵀ` for `Plus`, `W(0, x^{−iλ+n}e^{−ikx})ᵀ` for `Minus`,
/// with `W = [[1,i],[i,1]]/√2`. The first `n+1` of them span `Ker (D_λ^± − k)^{n+1}`.
pub fn jordan_chain(lambda: Complex64, family: Sign, k: Complex64, n: u32, x: f64) -> Result<Spinor> {
    let ii = c(0.0, 1.0);
    let s = family.f();
    if !(s * k.im > 0.0) {
        return Err(Error::domain("jordan_chain needs k in the half-plane of the family"));
    }
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let v = (c(x.ln(), 0.0) * (s * ii * lambda + n as f64) + s * ii * k * x).exp() * r2;
    Ok(match family {
        Sign::Plus => Spinor::new(v, ii * v),
        Sign::Minus => Spinor::new(ii * v, v),
    })
}

/// `∫₀^∞ f_nᵀ f_m dx` for two chain elements.
pub fn jordan_pairing(lambda: Complex64, family: Sign, k: Complex64, n: u32, m: u32) -> Result<Complex64> {
    jordan_chain(lambda, family, k, 0, 1.0)?;
    let scale = 1.0 / k.im.abs();
    let scheme = QuadratureScheme::graded(1e-12, 40.0 * scale, Some(scale), 1e-12);
    let r = quad_halfline(
        |x| match (jordan_chain(lambda, family, k, n, x), jordan_chain(lambda, family, k, m, x)) {
            (Ok(a), Ok(b)) => a.dot(&b),
            _ => c(f64::NAN, 0.0),
        },
        &scheme,
    )?;
    Ok(r.value)
}

// ---------------------------------------------------------------------------
// grids and application

fn par_map<T: Send, F: Fn(f64) -> T + Sync>(xs: &[f64], f: F) -> Vec<T> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(xs.len().max(1));
    if threads <= 1 || xs.len() < 16 {
        return xs.iter().map(|&x| f(x)).collect();
    }
    let chunk = xs.len().div_ceil(threads);
    std::thread::scope(|sc| {
        let hs: Vec<_> = xs.chunks(chunk).map(|ch| sc.spawn(|| ch.iter().map(|&x| f(x)).collect::<Vec<T>>())).collect();
        hs.into_iter().flat_map(|h| h.join().expect("grid worker panicked")).collect()
    })
}

fn solutions_at(p: &ManifoldPoint, s: Sign, ctx: &EnergyContext, xs: &[f64]) -> Result<Vec<(Spinor, Spinor)>> {
    par_map(xs, |x| Ok((xi(p, s, ctx, x)?, zeta(p, s, ctx, x)?))).into_iter().collect()
}

/// `G_p(k)` on `xs × ys`, each solution evaluated once per node.
pub fn kernel_grid(p: &ManifoldPoint, ctx: &EnergyContext, xs: &[f64], ys: &[f64]) -> Result<KernelGrid> {
    let s = family_of(p, ctx.k)?;
    grid_with(p, s, ctx, xs, ys)
}

/// `G_p(k ± i0)` on `xs × ys`.
pub fn boundary_grid(p: &ManifoldPoint, k: f64, side: Sign, xs: &[f64], ys: &[f64]) -> Result<KernelGrid> {
    if exceptional_component(p, side).is_some() {
        return Err(Error::ExceptionalPoint);
    }
    if k == 0.0 || !k.is_finite() {
        return Err(Error::domain("boundary_grid needs real k ≠ 0"));
    }
    grid_with(p, side, &EnergyContext::real(k), xs, ys)
}

fn grid_with(p: &ManifoldPoint, s: Sign, ctx: &EnergyContext, xs: &[f64], ys: &[f64]) -> Result<KernelGrid> {
    KernelGrid::check_nodes(xs)?;
    KernelGrid::check_nodes(ys)?;
    let sx = solutions_at(p, s, ctx, xs)?;
    let sy = solutions_at(p, s, ctx, ys)?;
    let mut values = Vec::with_capacity(xs.len() * ys.len());
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            values.push(assemble(sx[i].0, sx[i].1, sy[j].0, sy[j].1, x, y));
        }
    }
    Ok(KernelGrid { xs: xs.to_vec(), ys: ys.to_vec(), values })
}

/// Panel edges for resolvent quadrature: geometric from `1e−4`, ending at
/// `40/|Im k|` (or `40/|k|` on the real axis).
pub fn resolvent_edges(ctx: &EnergyContext) -> Vec<f64> {
    let im = ctx.k.im.abs();
    let end = 40.0 / if im > 0.0 { im } else { ctx.k.norm() };
    QuadratureScheme::graded(1e-4, end, None, 1e-10).edges
}

/// The resolvent applied to sampled data; see [`apply_resolvent`].
pub struct ResolventApplication {
    p: ManifoldPoint,
    s: Sign,
    ctx: EnergyContext,
    f: SampledFunction,
    /// `ξ(y)·f(y)` and `ζ(y)·f(y)` at the nodes.
    hx: Vec<Complex64>,
    hz: Vec<Complex64>,
    /// `∫₀^{e_p} ξ·f` and `∫_{e_p}^∞ ζ·f` at each edge.
    cum_x: Vec<Complex64>,
    cum_z: Vec<Complex64>,
}

impl ResolventApplication {
    pub fn new(p: &ManifoldPoint, ctx: &EnergyContext, f: &SampledFunction) -> Result<Self> {
        let s = family_of(p, ctx.k)?;
        let sol = solutions_at(p, s, ctx, &f.nodes)?;
        let hx: Vec<Complex64> = sol.iter().zip(&f.values).map(|((x, _), v)| x.dot(v)).collect();
        let hz: Vec<Complex64> = sol.iter().zip(&f.values).map(|((_, z), v)| z.dot(v)).collect();
        let np = f.edges.len() - 1;
        let mut cum_x = vec![c(0.0, 0.0); np + 1];
        let mut cum_z = vec![c(0.0, 0.0); np + 1];
        for q in 0..np {
            let r = q * ORDER..(q + 1) * ORDER;
            let ix: Complex64 = hx[r.clone()].iter().zip(&f.weights[r.clone()]).map(|(h, w)| h * w).sum();
            cum_x[q + 1] = cum_x[q] + ix;
        }
        for q in (0..np).rev() {
            let r = q * ORDER..(q + 1) * ORDER;
            let iz: Complex64 = hz[r.clone()].iter().zip(&f.weights[r.clone()]).map(|(h, w)| h * w).sum();
            cum_z[q] = cum_z[q + 1] + iz;
        }
        Ok(ResolventApplication { p: *p, s, ctx: *ctx, f: f.clone(), hx, hz, cum_x, cum_z })
    }

    /// `(G f)(x) = −ξ(x)∫_x^∞ ζ·f − ζ(x)∫₀^x ξ·f`.
    pub fn at(&self, x: f64) -> Result<Spinor> {
        let (a, b) = self.split_integrals(x);
        let xv = xi(&self.p, self.s, &self.ctx, x)?;
        let zv = zeta(&self.p, self.s, &self.ctx, x)?;
        Ok((xv * a + zv * b) * -1.0)
    }

    fn split_integrals(&self, x: f64) -> (Complex64, Complex64) {
        let e = &self.f.edges;
        match self.f.panel_of(x) {
            None if x < e[0] => (self.cum_z[0], c(0.0, 0.0)),
            None => (c(0.0, 0.0), *self.cum_x.last().unwrap()),
            Some(q) => {
                let r = q * ORDER..(q + 1) * ORDER;
                let nd = &self.f.nodes[r.clone()];
                let left_x = partial_panel(nd, &self.hx[r.clone()], e[q], x);
                let left_z = partial_panel(nd, &self.hz[r], e[q], x);
                let panel_z = self.cum_z[q] - self.cum_z[q + 1];
                (self.cum_z[q + 1] + panel_z - left_z, self.cum_x[q] + left_x)
            }
        }
    }

    /// The result on the nodes of `f`.
    pub fn on_nodes(&self) -> Result<SampledFunction> {
        let v: Result<Vec<Spinor>> = par_map(&self.f.nodes, |x| self.at(x)).into_iter().collect();
        self.f.with_values(v?)
    }
}

/// `g = G_p(k) f` on the nodes of `f`.
pub fn apply_resolvent(p: &ManifoldPoint, ctx: &EnergyContext, f: &SampledFunction) -> Result<SampledFunction> {
    ResolventApplication::new(p, ctx, f)?.on_nodes()
}

/// `∬_{[x₀,R]²} |G_p(k) − G_q(k)|²` (Frobenius) by the panel rule.
pub fn hs_difference(p: &ManifoldPoint, q: &ManifoldPoint, ctx: &EnergyContext, x0: f64, r: f64) -> Result<f64> {
    let mut edges = vec![x0];
    let mut e = x0;
    while e < r {
        e = (e * 2.0).min(e + 0.5).min(r);
        edges.push(e);
    }
    let nodes: Vec<(f64, f64)> = edges.windows(2).flat_map(|w| GaussLegendre::g12().on(w[0], w[1]).collect::<Vec<_>>()).collect();
    let xs: Vec<f64> = nodes.iter().map(|n| n.0).collect();
    let gp = kernel_grid(p, ctx, &xs, &xs)?;
    let gq = kernel_grid(q, ctx, &xs, &xs)?;
    let mut sum = 0.0;
    for (i, (_, wi)) in nodes.iter().enumerate() {
        for (j, (_, wj)) in nodes.iter().enumerate() {
            sum += wi * wj * (gp.get(i, j) - gq.get(i, j)).norm_fro().powi(2);
        }
    }
    Ok(sum)
}

/// The points and signs in `σⱼ G_p(k) σⱼ = ±G_{p′}(±k)`, `j = 1, 2, 3`.
pub fn pauli_partner(p: &ManifoldPoint, j: u8) -> Result<(ManifoldPoint, Sign)> {
    let (w, l, mu, a, b) = (p.omega, p.lambda, p.mu, p.ray.a, p.ray.b);
    let (ow, ol, ray, s) = match j {
        1 => (w, -l, Projective::new(b, a), Sign::Minus),
        2 => (-w, l, Projective::new(-b, a), Sign::Plus),
        3 => (-w, -l, Projective::new(-a, b), Sign::Minus),
        _ => return Err(Error::domain("Pauli index must be 1, 2 or 3")),
    };
    Ok((ManifoldPoint { omega: ow, lambda: ol, mu, ray: ray.ok_or(Error::ZeroRay)? }, s))
}

/// Residuals of the three Pauli symmetries at one `(k, x, y)`, relative
/// to `|G|`.
pub fn pauli_residuals(p: &ManifoldPoint, ctx: &EnergyContext, x: f64, y: f64) -> Result<[f64; 3]> {
    let g = green_kernel(p, ctx, x, y)?;
    let sig = [Mat2::sigma1(), Mat2::sigma2(), Mat2::sigma3()];
    let mut out = [0.0; 3];
    for j in 1..=3u8 {
        let (q, s) = pauli_partner(p, j)?;
        let k2 = EnergyContext::new(ctx.k * s.f());
        let h = green_kernel(&q, &k2, x, y)?.scale(c(s.f(), 0.0));
        let sj = sig[(j - 1) as usize];
        out[(j - 1) as usize] = (sj * g * sj - h).norm_max() / g.norm_max();
    }
    Ok(out)
}

/// `max_s |G_p(k; sx, sy) − G_p(sk; x, y)|/|G|` over `s ∈ {½, 2}`.
pub fn scaling_residual(p: &ManifoldPoint, ctx: &EnergyContext, x: f64, y: f64) -> Result<f64> {
    let mut worst = 0.0f64;
    for s in [0.5, 2.0] {
        let a = green_kernel(p, ctx, s * x, s * y)?;
        let b = green_kernel(p, &EnergyContext::new(ctx.k * s), x, y)?;
        worst = worst.max((a - b).norm_max() / b.norm_max());
    }
    Ok(worst)
}
