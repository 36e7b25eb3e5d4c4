use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// Tolerance for snapping a value onto a nonpositive integer.
pub const EPS_SNAP: f64 = 1e-14;

/// Shorthand constructor.
#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A sign choice (`±` in formulas).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    #[inline]
    pub fn f(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

/// Tolerances threaded through operations that need one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub function: f64,
    pub quadrature: f64,
    pub ode: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            function: 1e-10,
            quadrature: 1e-8,
            ode: 1e-11,
        }
    }
}

impl Tolerances {
    /// Same tolerance for all three channels.
    pub fn uniform(t: f64) -> Self {
        Tolerances {
            function: t,
            quadrature: t,
            ode: t,
        }
    }
}

/// Projective pair `[a:b]`, stored with `max(|a|,|b|) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Projective {
    pub a: Complex64,
    pub b: Complex64,
}

impl Projective {
    pub fn new(a: Complex64, b: Complex64) -> Option<Self> {
        let s = a.norm().max(b.norm());
        if !(s > 0.0) || !s.is_finite() {
            return None;
        }
        Some(Projective { a: a / s, b: b / s })
    }

    /// `z = a/b`; `None` at `b = 0`.
    pub fn z(&self) -> Option<Complex64> {
        if self.b == Complex64::new(0.0, 0.0) {
            None
        } else {
            Some(self.a / self.b)
        }
    }

    pub fn same_ray(&self, o: &Projective) -> bool {
        (self.a * o.b - self.b * o.a).norm() <= 1e-12
    }

    pub fn conj(&self) -> Projective {
        Projective {
            a: self.a.conj(),
            b: self.b.conj(),
        }
    }

    /// `Im(b̄ a)`, the quantity that decides reality of the ray.
    pub fn im_bbar_a(&self) -> f64 {
        (self.b.conj() * self.a).im
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[Complex64::new(0.0, 0.0); 2]; 2]);

    pub fn new(a: Complex64, b: Complex64, cc: Complex64, d: Complex64) -> Self {
        Mat2([[a, b], [cc, d]])
    }

    pub fn identity() -> Self {
        let o = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        Mat2([[o, z], [z, o]])
    }

    /// Outer product `u vᵀ` (no conjugation).
    pub fn outer(u: [Complex64; 2], v: [Complex64; 2]) -> Self {
        Mat2([[u[0] * v[0], u[0] * v[1]], [u[1] * v[0], u[1] * v[1]]])
    }

    pub fn t(&self) -> Self {
        let m = self.0;
        Mat2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    pub fn conj(&self) -> Self {
        let m = self.0;
        Mat2([
            [m[0][0].conj(), m[0][1].conj()],
            [m[1][0].conj(), m[1][1].conj()],
        ])
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let m = self.0;
        Mat2([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn det(&self) -> Complex64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Max-abs entry norm.
    pub fn norm_max(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0_f64, |acc, z| acc.max(z.norm()))
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn sigma1() -> Self {
        Mat2::new(c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.))
    }
    pub fn sigma2() -> Self {
        Mat2::new(c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.))
    }
    pub fn sigma3() -> Self {
        Mat2::new(c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.))
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, o: Mat2) -> Mat2 {
        let (a, b) = (self.0, o.0);
        Mat2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, o: Mat2) -> Mat2 {
        self + o.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        let (a, b) = (self.0, o.0);
        let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(r)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
