//! The parameter manifold 𝓜: triples `(ω, λ, μ)` on the null quadric
//! `ω² = λ² + μ²` together with a projective ray `[a:b]` annihilated by
//! `[[ω+λ, μ], [μ, ω−λ]]`. Over the origin the ray is free (zero fiber 𝓩).
//!
//! Exceptional sets `𝓔^± = {N^± = 0}` with `N^± = (z ± i)/Γ(1 + μ ∓ iλ)`.

use crate::complexfn::{gamma, rgamma};
use crate::{c, Error, Projective, Result, Sign};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Relative tolerance for quadric membership.
pub const QUADRIC_TOL: f64 = 1e-10;
/// Tolerance for integer detection in `μ ∓ iλ`.
pub const INTEGER_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ManifoldPoint {
    pub omega: Complex64,
    pub lambda: Complex64,
    pub mu: Complex64,
    pub ray: Projective,
}

fn zero() -> Complex64 {
    c(0.0, 0.0)
}

impl ManifoldPoint {
    /// The point over a nonzero triple; the ray is the kernel of
    /// `[[ω+λ, μ], [μ, ω−λ]]`.
    pub fn from_triple(omega: Complex64, lambda: Complex64, mu: Complex64) -> Result<Self> {
        let scale = omega.norm().max(lambda.norm()).max(mu.norm());
        if scale == 0.0 {
            return Err(Error::ZeroTriple);
        }
        if !scale.is_finite() {
            return Err(Error::domain("non-finite triple"));
        }
        let res = (omega * omega - lambda * lambda - mu * mu).norm() / (scale * scale);
        if res > QUADRIC_TOL {
            return Err(Error::OffQuadric(res));
        }
        let up = (-mu, omega + lambda);
        let down = (omega - lambda, -mu);
        let n_up = up.0.norm().max(up.1.norm());
        let n_down = down.0.norm().max(down.1.norm());
        let (a, b) = if n_up >= n_down { up } else { down };
        let ray = Projective::new(a, b).ok_or(Error::ZeroTriple)?;
        Ok(ManifoldPoint { omega, lambda, mu, ray })
    }

    pub fn real(omega: f64, lambda: f64, mu: f64) -> Result<Self> {
        Self::from_triple(c(omega, 0.0), c(lambda, 0.0), c(mu, 0.0))
    }

    /// A point of the zero fiber.
    pub fn zero_fiber(a: Complex64, b: Complex64) -> Result<Self> {
        let ray = Projective::new(a, b).ok_or(Error::ZeroRay)?;
        Ok(ManifoldPoint {
            omega: zero(),
            lambda: zero(),
            mu: zero(),
            ray,
        })
    }

    pub fn is_zero_fiber(&self) -> bool {
        self.omega == zero() && self.lambda == zero() && self.mu == zero()
    }

    /// `z = a/b`, `None` on `{b = 0}`.
    pub fn z(&self) -> Option<Complex64> {
        self.ray.z()
    }

    /// `p̄`.
    pub fn conj(&self) -> Self {
        ManifoldPoint {
            omega: self.omega.conj(),
            lambda: self.lambda.conj(),
            mu: self.mu.conj(),
            ray: self.ray.conj(),
        }
    }

    /// Largest residual of the defining equations, relative to the data.
    pub fn membership_residual(&self) -> f64 {
        let (w, l, m) = (self.omega, self.lambda, self.mu);
        let s = w.norm().max(l.norm()).max(m.norm());
        if s == 0.0 {
            return 0.0;
        }
        let q = (w * w - l * l - m * m).norm() / (s * s);
        let (a, b) = (self.ray.a, self.ray.b);
        let r1 = ((w + l) * a + m * b).norm() / s;
        let r2 = (m * a + (w - l) * b).norm() / s;
        q.max(r1).max(r2)
    }

    pub fn is_real(&self) -> bool {
        self.omega.im == 0.0 && self.lambda.im == 0.0 && self.mu.im == 0.0 && self.ray.im_bbar_a().abs() <= 1e-12
    }
}

/// `p ↦ (ω, λ, −μ, [−a:b])`.
pub fn tau(p: &ManifoldPoint) -> ManifoldPoint {
    ManifoldPoint {
        omega: p.omega,
        lambda: p.lambda,
        mu: -p.mu,
        ray: Projective { a: -p.ray.a, b: p.ray.b },
    }
}

pub fn point_from_triple(omega: Complex64, lambda: Complex64, mu: Complex64) -> Result<ManifoldPoint> {
    ManifoldPoint::from_triple(omega, lambda, mu)
}

pub fn point_zero_fiber(a: Complex64, b: Complex64) -> Result<ManifoldPoint> {
    ManifoldPoint::zero_fiber(a, b)
}

/// `N^±` as a projective value `num/den`: `num = (a ± ib)/Γ(1+μ∓iλ)`, `den = b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NFactor {
    pub num: Complex64,
    pub den: Complex64,
}

impl NFactor {
    /// The finite value, `None` on `{b = 0}` away from 𝓔.
    pub fn value(&self) -> Option<Complex64> {
        (self.den != zero()).then(|| self.num / self.den)
    }
}

/// `1 + μ ∓ iλ`.
pub(crate) fn gamma_arg(p: &ManifoldPoint, sign: Sign) -> Complex64 {
    1.0 + p.mu - c(0.0, sign.f()) * p.lambda
}

pub fn n_factor(p: &ManifoldPoint, sign: Sign) -> NFactor {
    let s = sign.f();
    let (a, b) = (p.ray.a, p.ray.b);
    let mut num = (a + c(0.0, s) * b) * rgamma(gamma_arg(p, sign));
    if exceptional_component(p, sign).is_some() {
        num = zero();
    }
    NFactor { num, den: b }
}

/// `d = Γ(1+μ∓iλ)/(a ± ib)`, so that `(1/N^±)(z, 1) = d·(a, b)`; finite off 𝓔^±.
pub fn inv_n_scale(p: &ManifoldPoint, sign: Sign) -> Result<Complex64> {
    if exceptional_component(p, sign).is_some() {
        return Err(Error::ExceptionalPoint);
    }
    let s = sign.f();
    let g = gamma(gamma_arg(p, sign)).map_err(|_| Error::ExceptionalPoint)?;
    Ok(g / (p.ray.a + c(0.0, s) * p.ray.b))
}

fn nonpositive_int(w: Complex64) -> Option<u32> {
    let n = w.re.round();
    (n <= 0.0 && (w - c(n, 0.0)).norm() <= INTEGER_TOL).then(|| (-n) as u32)
}

/// Component index of `p` in `𝓔^±`, or `None`.
pub fn exceptional_component(p: &ManifoldPoint, sign: Sign) -> Option<u32> {
    let s = sign.f();
    let on_e0 = {
        let r = (p.ray.a + c(0.0, s) * p.ray.b).norm();
        r <= INTEGER_TOL
    };
    if on_e0 {
        return Some(0);
    }
    if p.is_zero_fiber() {
        return None;
    }
    nonpositive_int(p.mu - c(0.0, s) * p.lambda)
}

/// A value in `ℂ ∪ {0, ∞, indeterminate}` with the degenerate cases tagged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Amplitude {
    Value(Complex64),
    Zero,
    Infinite,
    Indeterminate,
}

impl Amplitude {
    pub fn value(&self) -> Option<Complex64> {
        match self {
            Amplitude::Value(v) => Some(*v),
            Amplitude::Zero => Some(zero()),
            _ => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Amplitude::Value(_) => "Value",
            Amplitude::Zero => "ZeroTag",
            Amplitude::Infinite => "InfTag",
            Amplitude::Indeterminate => "IndeterminateTag",
        }
    }

    /// Multiply a finite value by a nonzero scalar.
    pub fn scale(self, f: Complex64) -> Amplitude {
        match self {
            Amplitude::Value(v) => Amplitude::Value(v * f),
            o => o,
        }
    }

    pub fn inv(self) -> Amplitude {
        match self {
            Amplitude::Value(v) => Amplitude::Value(1.0 / v),
            Amplitude::Zero => Amplitude::Infinite,
            Amplitude::Infinite => Amplitude::Zero,
            Amplitude::Indeterminate => Amplitude::Indeterminate,
        }
    }
}

/// `S_p = N⁻/N⁺`.
pub fn scattering_amplitude(p: &ManifoldPoint) -> Amplitude {
    let ep = exceptional_component(p, Sign::Plus).is_some();
    let em = exceptional_component(p, Sign::Minus).is_some();
    match (ep, em) {
        (true, true) => Amplitude::Indeterminate,
        (true, false) => Amplitude::Infinite,
        (false, true) => Amplitude::Zero,
        (false, false) => {
            let (a, b) = (p.ray.a, p.ray.b);
            let num = (a - c(0.0, 1.0) * b) * rgamma(gamma_arg(p, Sign::Minus));
            let den = (a + c(0.0, 1.0) * b) * rgamma(gamma_arg(p, Sign::Plus));
            Amplitude::Value(num / den)
        }
    }
}

/// `Re μ > −½`.
pub fn in_upper_manifold(p: &ManifoldPoint) -> bool {
    p.mu.re > -0.5
}

/// The points of `𝓔⁺ ∩ 𝓔⁻` over `(n, m) ≠ (0, 0)`:
/// `μ + iλ = −n`, `μ − iλ = −m`, `ω = ±√(nm)`.
pub fn exceptional_intersection(n: u32, m: u32) -> Vec<ManifoldPoint> {
    let (nf, mf) = (n as f64, m as f64);
    let lambda = c(0.0, -(mf - nf) / 2.0);
    let mu = c(-(mf + nf) / 2.0, 0.0);
    let w = (nf * mf).sqrt();
    let omegas: Vec<f64> = if w == 0.0 { vec![0.0] } else { vec![w, -w] };
    omegas
        .into_iter()
        .filter_map(|o| ManifoldPoint::from_triple(c(o, 0.0), lambda, mu).ok())
        .collect()
}
