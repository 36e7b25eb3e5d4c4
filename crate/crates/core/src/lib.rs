//! Numerical toolkit for the holomorphic family of one-dimensional
//! Dirac–Coulomb Hamiltonians
//!
//! ```text
//! D_{ω,λ} = [ -(λ+ω)/x   -∂x      ]
//!           [  ∂x       -(λ-ω)/x  ]
//! ```
//!
//! on the half-line, parametrized by points `p = (ω, λ, μ, [a:b])` of the
//! blown-up quadric `ω² = λ² + μ²`.
//!
//! Layout, bottom-up:
//!
//! * [`complexfn`] – Γ, 1/Γ, ψ, regularized ₁F₁ and ₂F₁ (with boundary values on the cut)
//! * [`numerics`] – quadrature, RKF45, plain series, Laplace-integral oracle, Richardson
//! * [`whittaker`] – 𝓘, 𝓚, 𝓙, 𝓗±, recurrences, Mellin transform of 𝓙
//! * [`manifold`] – points of the parameter manifold, `N±`, `S_p`, exceptional sets, τ
//! * [`solutions`] – η, θ, ξ±, ζ±, the canonical bisolution, an ODE oracle
//! * [`resolvent`] – Green's kernels, boundary values, spectral density, ω = 0 kernels
//! * [`spectra`] – phase regions, point spectra, numerical range, dissipativity, channels
//! * [`mixedbc`] – eigenvalues of realizations with mixed boundary conditions
//! * [`scattering`] – Mellin symbols, diagonalizers, log-grid Mellin transform

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod complexfn;
pub mod manifold;
pub mod mixedbc;
pub mod numerics;
pub mod resolvent;
pub mod scattering;
pub mod solutions;
pub mod spectra;
pub mod whittaker;

mod error;
mod types;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use types::{c, Mat2, Projective, Sign, Tolerances, EPS_SNAP};

pub use manifold::ManifoldPoint;
pub use resolvent::{KernelGrid, SampledFunction};
pub use scattering::MellinGrid;
pub use solutions::{EnergyContext, Spinor};
pub use spectra::SpectrumReport;
pub use whittaker::WhittakerParams;

/// Complex scalar used throughout.
pub type CScalar = Complex64;
