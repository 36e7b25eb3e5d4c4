//! Discrete classifications: phase regions of real `(ω, λ)`, self-adjointness
//! and homogeneous extensions, point spectra of `D^min`, `D^max` and `D_p`,
//! domain gaps, numerical ranges, dissipativity, and the radial channels of
//! the `d`-dimensional operator.
//!
//! All sets are symbolic tags. Equalities (`ω² − λ² = ¼`, `Re μ = ½`,
//! `|Im ω| = |Im λ|`, …) are detected with tolerance [`EQ_TOL`] and the
//! boundary case goes with the closed condition.

use crate::manifold::{exceptional_component, in_upper_manifold, ManifoldPoint};
use crate::{Complex64, Error, Result, Sign};
use serde::{Deserialize, Serialize};

pub const EQ_TOL: f64 = 1e-12;

fn is_zero(x: f64) -> bool {
    x.abs() <= EQ_TOL
}

fn is_real(z: Complex64) -> bool {
    is_zero(z.im)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Region {
    A,
    B,
    C,
    D,
    E,
}

/// Point spectrum of one realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PointSet {
    Empty,
    UpperHalf,
    LowerHalf,
    NonRealPlane,
    PuncturedPlane,
}

impl PointSet {
    pub fn contains(self, k: Complex64) -> bool {
        match self {
            PointSet::Empty => false,
            PointSet::UpperHalf => k.im > 0.0,
            PointSet::LowerHalf => k.im < 0.0,
            PointSet::NonRealPlane => k.im != 0.0,
            PointSet::PuncturedPlane => k != Complex64::new(0.0, 0.0),
        }
    }

    fn half(s: Sign) -> PointSet {
        match s {
            Sign::Plus => PointSet::UpperHalf,
            Sign::Minus => PointSet::LowerHalf,
        }
    }
}

/// `σ(D_p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DpSpectrum {
    RealLine,
    RealLineUnionUpperHalf,
    RealLineUnionLowerHalf,
}

impl DpSpectrum {
    pub fn contains(self, k: Complex64) -> bool {
        match self {
            DpSpectrum::RealLine => k.im == 0.0,
            DpSpectrum::RealLineUnionUpperHalf => k.im >= 0.0,
            DpSpectrum::RealLineUnionLowerHalf => k.im <= 0.0,
        }
    }
}

/// Homogeneous self-adjoint realizations of `D_{ω,λ}` for real `ω, λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum HomogeneousExtensions {
    /// `D^min` is self-adjoint and equals `D_{ω,λ,μ}`.
    Minimal { mu: f64 },
    /// `D_{ω,λ,±μ}`.
    Two { mu: f64 },
    /// `D_{ω,λ,0}`.
    One,
    /// `D_{[a:b]}` for every `[a:b] ∈ ℝP¹`.
    Circle,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelfAdjointness {
    pub essentially_self_adjoint: bool,
    pub deficiency: (u32, u32),
    pub homogeneous: HomogeneousExtensions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumericalRangeTag {
    RealLine,
    OpenLowerHalf,
    OpenUpperHalf,
    OpenLowerHalfPlusZero,
    OpenUpperHalfPlusZero,
    FullPlane,
    RealLineUnionLowerHalf,
    RealLineUnionUpperHalf,
    SameAsMinimal,
}

impl NumericalRangeTag {
    /// Whether the set lies in the closed upper half-plane.
    pub fn in_closed_upper(self) -> bool {
        matches!(self, Self::RealLine | Self::OpenUpperHalf | Self::OpenUpperHalfPlusZero | Self::RealLineUnionUpperHalf)
    }

    pub fn in_closed_lower(self) -> bool {
        matches!(self, Self::RealLine | Self::OpenLowerHalf | Self::OpenLowerHalfPlusZero | Self::RealLineUnionLowerHalf)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dissipativity {
    pub dissipative: bool,
    pub maximal: bool,
}

/// Everything the classifiers know about one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Only for real `(ω, λ)`.
    pub region: Option<Region>,
    pub essential: String,
    pub point_max: PointSet,
    pub point_min: PointSet,
    pub point_dp: PointSet,
    pub spectrum_dp: DpSpectrum,
    pub domain_gap: u32,
    /// Only for real `(ω, λ)`.
    pub self_adjointness: Option<SelfAdjointness>,
    pub numerical_range_min: NumericalRangeTag,
    pub numerical_range_dp: NumericalRangeTag,
    pub dissipative_plus: Dissipativity,
    pub dissipative_minus: Dissipativity,
}

pub fn phase_region(omega: f64, lambda: f64) -> Region {
    let d = omega * omega - lambda * lambda;
    if d >= 0.25 - EQ_TOL {
        Region::A
    } else if is_zero(omega) && is_zero(lambda) {
        Region::D
    } else if is_zero(omega.abs() - lambda.abs()) {
        Region::C
    } else if d > 0.0 {
        Region::B
    } else {
        Region::E
    }
}

pub fn self_adjointness(omega: f64, lambda: f64) -> SelfAdjointness {
    let d = omega * omega - lambda * lambda;
    let (esa, homogeneous) = match phase_region(omega, lambda) {
        Region::A => (true, HomogeneousExtensions::Minimal { mu: d.sqrt() }),
        Region::B => (false, HomogeneousExtensions::Two { mu: d.sqrt() }),
        Region::C => (false, HomogeneousExtensions::One),
        Region::D => (false, HomogeneousExtensions::Circle),
        Region::E => (false, HomogeneousExtensions::None),
    };
    SelfAdjointness { essentially_self_adjoint: esa, deficiency: if esa { (0, 0) } else { (1, 1) }, homogeneous }
}

fn check_upper(p: &ManifoldPoint) -> Result<()> {
    if in_upper_manifold(p) {
        Ok(())
    } else {
        Err(Error::domain("needs Re μ > −½"))
    }
}

fn exceptional_sign(p: &ManifoldPoint) -> Option<Sign> {
    [Sign::Plus, Sign::Minus].into_iter().find(|&s| exceptional_component(p, s).is_some())
}

/// `(σ_p(D^max), σ_p(D^min))`.
pub fn minmax_point_spectrum(p: &ManifoldPoint) -> Result<(PointSet, PointSet)> {
    check_upper(p)?;
    Ok(if p.mu.re >= 0.5 - EQ_TOL {
        match exceptional_sign(p) {
            Some(s) => (PointSet::half(s), PointSet::half(s)),
            None => (PointSet::Empty, PointSet::Empty),
        }
    } else if p.lambda.im.abs() <= 0.5 + EQ_TOL {
        (PointSet::NonRealPlane, PointSet::Empty)
    } else {
        (PointSet::PuncturedPlane, PointSet::Empty)
    })
}

/// `(σ(D_p), σ_p(D_p))`.
pub fn dp_spectrum(p: &ManifoldPoint) -> Result<(DpSpectrum, PointSet)> {
    check_upper(p)?;
    Ok(match exceptional_sign(p) {
        Some(Sign::Plus) => (DpSpectrum::RealLineUnionUpperHalf, PointSet::UpperHalf),
        Some(Sign::Minus) => (DpSpectrum::RealLineUnionLowerHalf, PointSet::LowerHalf),
        None => (DpSpectrum::RealLine, PointSet::Empty),
    })
}

/// `dim Dom(D^max)/Dom(D^min)`.
pub fn domain_gap(p: &ManifoldPoint) -> u32 {
    if p.mu.re.abs() < 0.5 - EQ_TOL {
        2
    } else {
        0
    }
}

pub fn numerical_range_min(omega: Complex64, lambda: Complex64) -> NumericalRangeTag {
    let (iw, il) = (omega.im.abs(), lambda.im.abs());
    let lower = lambda.im > 0.0;
    if is_real(omega) && is_real(lambda) {
        NumericalRangeTag::RealLine
    } else if is_zero(iw - il) {
        if lower {
            NumericalRangeTag::OpenLowerHalfPlusZero
        } else {
            NumericalRangeTag::OpenUpperHalfPlusZero
        }
    } else if iw < il {
        if lower {
            NumericalRangeTag::OpenLowerHalf
        } else {
            NumericalRangeTag::OpenUpperHalf
        }
    } else {
        NumericalRangeTag::FullPlane
    }
}

/// The case number (1–4) and the tag; case 4 returns [`NumericalRangeTag::SameAsMinimal`].
pub fn numerical_range_dp_case(p: &ManifoldPoint) -> Result<(u8, NumericalRangeTag)> {
    check_upper(p)?;
    let iba = p.ray.im_bbar_a();
    let real_ray = is_zero(iba);
    Ok(if is_real(p.omega) && is_real(p.lambda) && !real_ray {
        (1, if iba > 0.0 { NumericalRangeTag::RealLineUnionLowerHalf } else { NumericalRangeTag::RealLineUnionUpperHalf })
    } else if is_zero(p.mu.re) && !real_ray && iba * p.lambda.im < 0.0 && !is_zero(p.lambda.im) {
        (2, NumericalRangeTag::FullPlane)
    } else if p.mu.re < -EQ_TOL && !real_ray {
        (3, NumericalRangeTag::FullPlane)
    } else {
        (4, NumericalRangeTag::SameAsMinimal)
    })
}

/// `Num(D_p)` with case 4 resolved to `Num(D^min)`.
pub fn numerical_range_dp(p: &ManifoldPoint) -> Result<NumericalRangeTag> {
    Ok(match numerical_range_dp_case(p)? {
        (4, _) => numerical_range_min(p.omega, p.lambda),
        (_, t) => t,
    })
}

/// Whether `±D_p` is dissipative (and then maximally so).
pub fn dissipative(p: &ManifoldPoint, sign: Sign) -> Result<Dissipativity> {
    check_upper(p)?;
    let s = sign.f();
    let iba = p.ray.im_bbar_a();
    let (w, l, mu) = (p.omega, p.lambda, p.mu);
    let d = if is_real(w) && is_real(l) {
        -s * iba >= -EQ_TOL
    } else if s * l.im < 0.0 && !is_zero(l.im) && w.im.abs() <= l.im.abs() + EQ_TOL {
        if is_zero(mu.re) {
            s * iba <= EQ_TOL
        } else if mu.re > 0.0 {
            true
        } else {
            is_zero(iba)
        }
    } else {
        false
    };
    Ok(Dissipativity { dissipative: d, maximal: d })
}

pub fn classify(p: &ManifoldPoint) -> Result<SpectrumReport> {
    let (point_max, point_min) = minmax_point_spectrum(p)?;
    let (spectrum_dp, point_dp) = dp_spectrum(p)?;
    let real = is_real(p.omega) && is_real(p.lambda);
    Ok(SpectrumReport {
        region: real.then(|| phase_region(p.omega.re, p.lambda.re)),
        essential: "ℝ".into(),
        point_max,
        point_min,
        point_dp,
        spectrum_dp,
        domain_gap: domain_gap(p),
        self_adjointness: real.then(|| self_adjointness(p.omega.re, p.lambda.re)),
        numerical_range_min: numerical_range_min(p.omega, p.lambda),
        numerical_range_dp: numerical_range_dp(p)?,
        dissipative_plus: dissipative(p, Sign::Plus)?,
        dissipative_minus: dissipative(p, Sign::Minus)?,
    })
}

/// Radial channels of the `d`-dimensional operator: `±(ℓ + (d−3)/2)`,
/// and `{0}` in dimension one. Both signs are returned; which one belongs
/// to which Clifford representation is not fixed here.
pub fn channel_omegas(d: u32, ell: i64) -> Result<Vec<f64>> {
    let w = match d {
        0 => return Err(Error::domain("dimension must be at least 1")),
        1 if ell == 0 || ell == 1 => return Ok(vec![0.0]),
        1 => return Err(Error::domain("ℓ ∈ {0, 1} in dimension 1")),
        2 => (ell as f64 - 0.5).abs(),
        _ if ell >= 1 => ell as f64 + (d as f64 - 3.0) / 2.0,
        _ => return Err(Error::domain("ℓ ≥ 1 in dimension d ≥ 3")),
    };
    Ok(vec![w, -w])
}

/// Self-adjointness in the lowest angular-momentum sector of dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionSummary {
    pub essentially_self_adjoint: bool,
    pub homogeneous_extensions: bool,
    /// Number of continuous families of homogeneous extensions through λ.
    pub families: u8,
}

pub fn homogeneous_sa_summary(d: u32, lambda: f64) -> Result<DimensionSummary> {
    let l2 = lambda * lambda;
    Ok(match d {
        0 => return Err(Error::domain("dimension must be at least 1")),
        1 => {
            let h = is_zero(lambda);
            DimensionSummary { essentially_self_adjoint: false, homogeneous_extensions: h, families: h as u8 }
        }
        2 => {
            let h = lambda.abs() <= 1.0 + EQ_TOL;
            let second = h && !is_zero(lambda);
            DimensionSummary { essentially_self_adjoint: is_zero(lambda), homogeneous_extensions: h, families: h as u8 + second as u8 }
        }
        _ => {
            let df = d as f64;
            let esa = l2 <= df * (df - 2.0) / 4.0 + EQ_TOL;
            let h = l2 <= (df - 1.0).powi(2) / 4.0 + EQ_TOL;
            DimensionSummary { essentially_self_adjoint: esa, homogeneous_extensions: h, families: h as u8 + (h && !esa) as u8 }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::solutions::{ode_oracle, EnergyContext, Spinor};
    use proptest::prelude::*;

    fn tp(w: Complex64, l: Complex64, mu: Complex64) -> ManifoldPoint {
        ManifoldPoint::from_triple(w, l, mu).unwrap()
    }

    #[test]
    fn regions() {
        assert_eq!(phase_region(1.0, 0.0), Region::A);
        assert_eq!(phase_region(0.5, 0.0), Region::A);
        assert_eq!(phase_region(0.4, 0.2), Region::B);
        assert_eq!(phase_region(0.3, -0.3), Region::C);
        assert_eq!(phase_region(0.0, 0.0), Region::D);
        assert_eq!(phase_region(0.0, 0.5), Region::E);
        assert_eq!(phase_region(-2.0, 2.1), Region::E);
    }

    #[test]
    fn self_adjoint_cases() {
        let a = self_adjointness(1.0, 0.0);
        assert!(a.essentially_self_adjoint);
        assert_eq!(a.homogeneous, HomogeneousExtensions::Minimal { mu: 1.0 });
        let b = self_adjointness(0.4, 0.2);
        assert_eq!(b.deficiency, (1, 1));
        match b.homogeneous {
            HomogeneousExtensions::Two { mu } => assert!((mu - 0.12f64.sqrt()).abs() < 1e-15),
            h => panic!("{h:?}"),
        }
        assert_eq!(self_adjointness(0.0, 0.5).homogeneous, HomogeneousExtensions::None);
        assert_eq!(self_adjointness(0.7, 0.7).homogeneous, HomogeneousExtensions::One);
        assert_eq!(self_adjointness(0.0, 0.0).homogeneous, HomogeneousExtensions::Circle);
    }

    #[test]
    fn point_spectra() {
        let p = ManifoldPoint::real(5.0, 4.0, 3.0).unwrap();
        assert_eq!(minmax_point_spectrum(&p).unwrap(), (PointSet::Empty, PointSet::Empty));
        let q = ManifoldPoint::real(0.3, 0.2, 0.05f64.sqrt()).unwrap();
        assert_eq!(minmax_point_spectrum(&q).unwrap(), (PointSet::NonRealPlane, PointSet::Empty));
        let (w, l) = (c(0.0, 0.7), c(0.0, 0.8));
        let r = tp(w, l, (w * w - l * l).sqrt());
        assert!(r.mu.re < 0.5);
        assert_eq!(minmax_point_spectrum(&r).unwrap(), (PointSet::PuncturedPlane, PointSet::Empty));
        // μ − iλ = 0 with Re μ = 1.2: 𝓔₀⁺
        let e = tp(c(0.0, 0.0), c(0.0, -1.2), c(1.2, 0.0));
        assert_eq!(minmax_point_spectrum(&e).unwrap(), (PointSet::UpperHalf, PointSet::UpperHalf));
        let bad = ManifoldPoint::real(0.3, 0.0, -0.3).unwrap();
        assert!(bad.mu.re > -0.5);
        let worse = tp(c(0.0, 0.0), c(0.0, 0.7), c(-0.7, 0.0));
        assert!(matches!(minmax_point_spectrum(&worse), Err(Error::DomainError(_))));
    }

    #[test]
    fn dp_spectra() {
        let p = ManifoldPoint::real(5.0, 4.0, 3.0).unwrap();
        assert_eq!(dp_spectrum(&p).unwrap(), (DpSpectrum::RealLine, PointSet::Empty));
        let e = tp(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
        assert_eq!(dp_spectrum(&e).unwrap(), (DpSpectrum::RealLineUnionUpperHalf, PointSet::UpperHalf));
        let z = ManifoldPoint::zero_fiber(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(dp_spectrum(&z).unwrap(), (DpSpectrum::RealLine, PointSet::Empty));
        let zm = ManifoldPoint::zero_fiber(c(0.0, 1.0), c(1.0, 0.0)).unwrap();
        assert_eq!(dp_spectrum(&zm).unwrap().1, PointSet::LowerHalf);
        assert!(DpSpectrum::RealLineUnionUpperHalf.contains(c(1.0, 2.0)));
        assert!(!DpSpectrum::RealLine.contains(c(1.0, 2.0)));
    }

    #[test]
    fn domain_gaps() {
        assert_eq!(domain_gap(&ManifoldPoint::real(5.0, 4.0, 3.0).unwrap()), 0);
        assert_eq!(domain_gap(&ManifoldPoint::real(0.4, 0.2, 0.12f64.sqrt()).unwrap()), 2);
        assert_eq!(domain_gap(&ManifoldPoint::real(0.5, 0.0, 0.5).unwrap()), 0);
        assert_eq!(domain_gap(&ManifoldPoint::zero_fiber(c(1.0, 0.0), c(2.0, 0.0)).unwrap()), 2);
    }

    #[test]
    fn numerical_ranges() {
        assert_eq!(numerical_range_min(c(1.0, 0.0), c(2.0, 0.0)), NumericalRangeTag::RealLine);
        assert_eq!(numerical_range_min(c(0.0, 0.0), c(0.0, 1.0)), NumericalRangeTag::OpenLowerHalf);
        assert_eq!(numerical_range_min(c(0.0, 2.0), c(0.0, 1.0)), NumericalRangeTag::FullPlane);
        assert_eq!(numerical_range_min(c(1.0, -1.0), c(0.0, 1.0)), NumericalRangeTag::OpenLowerHalfPlusZero);
        assert_eq!(numerical_range_min(c(0.0, 0.5), c(0.0, -1.0)), NumericalRangeTag::OpenUpperHalf);

        // real (ω, λ), ray [i:1]
        let z = ManifoldPoint::zero_fiber(c(0.0, 1.0), c(1.0, 0.0)).unwrap();
        assert_eq!(numerical_range_dp_case(&z).unwrap(), (1, NumericalRangeTag::RealLineUnionLowerHalf));
        let im = tp(c(0.3, 0.0), c(0.5, 0.0), c(0.0, 0.4));
        assert_eq!(numerical_range_dp_case(&im).unwrap().0, 1);
        // Re μ < 0 with a non-real ray
        let (wm, lm) = (c(0.2, 0.3), c(0.1, -0.2));
        let q = tp(wm, lm, -(wm * wm - lm * lm).sqrt());
        assert!(q.mu.re < 0.0 && q.ray.im_bbar_a().abs() > 1e-6);
        assert_eq!(numerical_range_dp_case(&q).unwrap(), (3, NumericalRangeTag::FullPlane));
        // real data, real ray
        let r = ManifoldPoint::real(5.0, 4.0, 3.0).unwrap();
        assert_eq!(numerical_range_dp_case(&r).unwrap().1, NumericalRangeTag::SameAsMinimal);
        assert_eq!(numerical_range_dp(&r).unwrap(), NumericalRangeTag::RealLine);
    }

    #[test]
    fn numerical_range_case_two() {
        // Re μ = 0 with Im λ ≠ 0: the two signs of μ give opposite Im(b̄a)
        let (nu, ell) = (0.3, 0.5);
        let l = c(0.2, ell);
        let mu = c(0.0, nu);
        let w = (l * l + mu * mu).sqrt();
        let p = tp(w, l, mu);
        assert!(p.mu.re.abs() < 1e-15);
        let (case, tag) = numerical_range_dp_case(&p).unwrap();
        let iba = p.ray.im_bbar_a();
        if iba * l.im < 0.0 {
            assert_eq!((case, tag), (2, NumericalRangeTag::FullPlane));
        } else {
            assert_eq!(case, 4);
        }
        let q = tp(w, l, -mu);
        assert_ne!(p.ray.im_bbar_a().signum(), q.ray.im_bbar_a().signum());
        let cases = [numerical_range_dp_case(&p).unwrap().0, numerical_range_dp_case(&q).unwrap().0];
        assert!(cases.contains(&2) && cases.contains(&4));
    }

    #[test]
    fn dissipativity() {
        let z = ManifoldPoint::zero_fiber(c(0.0, 1.0), c(1.0, 0.0)).unwrap();
        assert!(!dissipative(&z, Sign::Plus).unwrap().dissipative);
        assert!(dissipative(&z, Sign::Minus).unwrap().dissipative);
        let (w, l) = (c(0.3, -0.2), c(0.1, -0.5));
        let p = tp(w, l, (w * w - l * l).sqrt());
        assert!(p.mu.re > 0.0);
        let d = dissipative(&p, Sign::Plus).unwrap();
        assert!(d.dissipative && d.maximal);
        assert!(!dissipative(&p, Sign::Minus).unwrap().dissipative);
        let (wm, lm) = (c(0.2, 0.3), c(0.1, -0.2));
        let q = tp(wm, lm, -(wm * wm - lm * lm).sqrt());
        assert!(!dissipative(&q, Sign::Plus).unwrap().dissipative && !dissipative(&q, Sign::Minus).unwrap().dissipative);
    }

    #[test]
    fn channels() {
        assert_eq!(channel_omegas(3, 1).unwrap(), vec![1.0, -1.0]);
        assert_eq!(channel_omegas(2, 1).unwrap(), vec![0.5, -0.5]);
        assert_eq!(channel_omegas(5, 1).unwrap(), vec![2.0, -2.0]);
        assert_eq!(channel_omegas(1, 0).unwrap(), vec![0.0]);
        assert!(channel_omegas(3, 0).is_err());
        assert!(channel_omegas(1, 2).is_err());
    }

    #[test]
    fn dimension_bullets() {
        let s = homogeneous_sa_summary(3, 0.8).unwrap();
        assert!(s.essentially_self_adjoint && s.homogeneous_extensions);
        let s = homogeneous_sa_summary(3, 0.9).unwrap();
        assert!(!s.essentially_self_adjoint && s.homogeneous_extensions && s.families == 2);
        assert!(!homogeneous_sa_summary(1, 0.5).unwrap().homogeneous_extensions);
        assert!(homogeneous_sa_summary(2, 0.9).unwrap().homogeneous_extensions);
        assert!(!homogeneous_sa_summary(2, 0.3).unwrap().essentially_self_adjoint);
        // d ≥ 3 and d = 1 agree with the one-dimensional classifier on the lowest channel
        for d in [1u32, 3, 4, 5, 7] {
            let w = channel_omegas(d, if d == 1 { 0 } else { 1 }).unwrap()[0];
            for l in [0.0, 0.3, 0.8, 0.9, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0] {
                let s = homogeneous_sa_summary(d, l).unwrap();
                let sa = self_adjointness(w, l);
                assert_eq!(s.essentially_self_adjoint, sa.essentially_self_adjoint, "{d} {l}");
                assert_eq!(s.homogeneous_extensions, sa.homogeneous != HomogeneousExtensions::None, "{d} {l}");
            }
        }
    }

    /// Solution in the domain of `D_p` near 0, continued to `x`.
    fn domain_solution(p: &ManifoldPoint, k: Complex64, x: f64) -> f64 {
        let x0 = 1e-6;
        let seed = Spinor::new(p.ray.a, p.ray.b) * c(x0, 0.0).powc(p.mu);
        ode_oracle(p, &EnergyContext::new(k), x0, seed, x).unwrap().norm()
    }

    #[test]
    fn point_spectrum_matches_decay() {
        let k = c(0.3, 1.0);
        let pts = [
            tp(c(0.0, 0.0), c(0.0, -1.2), c(1.2, 0.0)),
            ManifoldPoint::real(5.0, 4.0, 3.0).unwrap(),
            tp(c(0.8, 0.0), c(0.0, -0.6), c(1.0, 0.0)),
        ];
        for p in pts {
            let (_, pd) = dp_spectrum(&p).unwrap();
            let ratio = domain_solution(&p, k, 8.0) / domain_solution(&p, k, 4.0);
            assert_eq!(pd.contains(k), ratio < 1.0, "{p:?} {ratio}");
        }
    }

    proptest! {
        #[test]
        fn prop_dissipative_iff_range_in_upper(wr in -1.0f64..1.0, wi in -1.0f64..1.0, lr in -1.0f64..1.0, li in -1.0f64..1.0, flip in proptest::bool::ANY) {
            let (w, l) = (c(wr, wi), c(lr, li));
            let mu0 = (w * w - l * l).sqrt();
            let p = tp(w, l, if flip { -mu0 } else { mu0 });
            prop_assume!(p.mu.re > -0.5);
            let tag = numerical_range_dp(&p).unwrap();
            prop_assert_eq!(dissipative(&p, Sign::Plus).unwrap().dissipative, tag.in_closed_upper());
            prop_assert_eq!(dissipative(&p, Sign::Minus).unwrap().dissipative, tag.in_closed_lower());
        }

        #[test]
        fn prop_case_four_is_minimal(w in -2.0f64..2.0, l in -2.0f64..2.0) {
            let mu = c(w * w - l * l, 0.0).sqrt();
            let p = tp(c(w, 0.0), c(l, 0.0), mu);
            prop_assume!(mu.norm() > 1e-6);
            let (case, _) = numerical_range_dp_case(&p).unwrap();
            if case == 4 {
                prop_assert_eq!(numerical_range_dp(&p).unwrap(), numerical_range_min(p.omega, p.lambda));
            }
            // region A has no point spectrum
            if phase_region(w, l) == Region::A {
                prop_assert_eq!(minmax_point_spectrum(&p).unwrap(), (PointSet::Empty, PointSet::Empty));
                prop_assert_eq!(dp_spectrum(&p).unwrap().1, PointSet::Empty);
            }
            prop_assert_eq!(domain_gap(&p) == 2, p.mu.re.abs() < 0.5);
        }
    }
}
