//! Fixtures shared by the benchmarks.

use dcoulomb::scattering::MellinGrid;
use dcoulomb::{c, Complex64, ManifoldPoint, Result, Spinor, WhittakerParams};

/// The real point (5, 4, 3).
pub fn p543() -> ManifoldPoint {
    ManifoldPoint::real(5.0, 4.0, 3.0).expect("on the quadric")
}

/// A point with complex λ and the principal μ.
pub fn complex_point() -> ManifoldPoint {
    let (w, l) = (c(0.7, 0.2), c(0.3, -0.25));
    ManifoldPoint::from_triple(w, l, (w * w - l * l).sqrt()).expect("on the quadric")
}

/// Whittaker parameters across the regimes the evaluators switch between.
pub fn whittaker_params() -> Vec<(WhittakerParams, Complex64)> {
    vec![
        (WhittakerParams::real(0.0, 0.5), c(1.0, 0.0)),
        (WhittakerParams::new(c(0.3, -1.2), c(0.7, 0.1)), c(4.0, 0.5)),
        (WhittakerParams::new(c(-2.0, 0.5), c(1.3, 0.0)), c(0.05, 0.0)),
        (WhittakerParams::new(c(1.0, 2.0), c(0.2, -0.3)), c(30.0, -2.0)),
    ]
}

/// `n` log-spaced nodes in `[lo, hi]`.
pub fn log_nodes(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| lo * (hi / lo).powf(j as f64 / (n - 1).max(1) as f64)).collect()
}

/// A Gaussian bump in `ln x` on the default 4096-node Mellin grid.
pub fn bump_grid() -> Result<MellinGrid<Spinor>> {
    MellinGrid::sample(4096, 1e4, |x| {
        let t = x.ln();
        let g = (-(t - 0.3).powi(2) / 0.5).exp() / x.sqrt();
        Spinor::new(c(g, 0.0), c(0.0, 0.5 * g))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert!(p543().membership_residual() < 1e-14);
        assert!(complex_point().membership_residual() < 1e-14);
        let xs = log_nodes(0.1, 10.0, 5);
        assert!((xs[4] - 10.0).abs() < 1e-12 && (xs[2] - 1.0).abs() < 1e-12);
        assert_eq!(bump_grid().unwrap().len(), 4096);
    }
}
