//! Laplace-type transforms of the confluent functions against closed
//! ₂F₁ forms, and transformation invariants of the hypergeometric family.

use dcoulomb::complexfn::{gamma, reg_1f1, reg_2f1, tricomi_u};
use dcoulomb::numerics::{quad_halfline, QuadratureScheme};
use dcoulomb::{c, Complex64};
use proptest::prelude::*;

fn laplace<F: Fn(f64) -> Complex64>(b: Complex64, z: f64, f: F) -> Complex64 {
    let scheme = QuadratureScheme::graded(1e-14, 60.0 / z, Some(1.0 / z), 1e-12);
    quad_halfline(|x| c(x, 0.0).powc(b - 1.0) * (-z * x).exp() * f(x), &scheme).unwrap().value
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

#[test]
fn confluent_transform() {
    let cases = [
        (c(0.3, 0.0), c(1.5, 0.0), c(1.2, 0.0), 2.0, c(0.5, 0.0)),
        (c(-0.7, 0.4), c(0.8, 0.0), c(2.1, -0.3), 1.5, c(-0.6, 0.9)),
        (c(1.0, 1.0), c(2.5, 0.5), c(0.5, 0.0), 3.0, c(1.4, -2.0)),
        (c(0.2, -0.5), c(1.0, 0.0), c(-0.5, 0.2), 1.0, c(0.0, 3.0)),
        (c(2.0, 0.0), c(0.6, 0.1), c(1.0, 1.0), 2.5, c(-2.0, 0.5)),
    ];
    for (a, b, cc, z, w) in cases {
        let lhs = laplace(b, z, |x| reg_1f1(a, cc, w * x).unwrap());
        let rhs = c(z, 0.0).powc(-b) * gamma(b).unwrap() * reg_2f1(a, b, cc, w / z).unwrap();
        assert!(close(lhs, rhs, 1e-6), "{a} {b} {cc} {z} {w}: {lhs} vs {rhs}");
    }
}

#[test]
fn tricomi_transform() {
    let cases = [
        (c(0.5, 0.0), c(1.5, 0.0), c(0.7, 0.0), 1.0, c(2.0, 0.0)),
        (c(1.2, 0.3), c(1.0, 0.0), c(0.4, 0.0), 2.0, c(1.0, 1.0)),
        (c(-0.4, 0.2), c(2.0, 0.0), c(1.5, -0.5), 1.5, c(3.0, -1.0)),
        (c(0.8, -0.6), c(1.4, 0.2), c(0.9, 0.3), 0.8, c(0.5, 0.2)),
        (c(2.0, 0.5), c(2.5, 0.0), c(1.2, 0.0), 3.0, c(1.0, -2.0)),
    ];
    for (a, b, cc, z, w) in cases {
        let lhs = laplace(b, z, |x| tricomi_u(a, cc, w * x).unwrap());
        let rhs = c(z, 0.0).powc(-b)
            * gamma(b).unwrap()
            * gamma(1.0 + b - cc).unwrap()
            * reg_2f1(a, b, a + b + 1.0 - cc, 1.0 - w / z).unwrap();
        assert!(close(lhs, rhs, 1e-6), "{a} {b} {cc} {z} {w}: {lhs} vs {rhs}");
    }
}

fn cplx(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(x, y)| c(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kummer_transformation(a in cplx(3.0), cc in cplx(3.0), z in cplx(4.0)) {
        let l = reg_1f1(a, cc, z).unwrap();
        let r = z.exp() * reg_1f1(cc - a, cc, -z).unwrap();
        prop_assert!((l - r).norm() <= 1e-9 * (1.0 + l.norm()), "{l} {r}");
    }

    #[test]
    fn gauss_symmetry_and_euler(a in cplx(2.0), b in cplx(2.0), cc in cplx(2.0), r in 0.0..0.8f64, t in -3.1..3.1f64) {
        let z = c(r * t.cos(), r * t.sin());
        let f = reg_2f1(a, b, cc, z).unwrap();
        prop_assert!((f - reg_2f1(b, a, cc, z).unwrap()).norm() <= 1e-12 * (1.0 + f.norm()));
        let e = (1.0 - z).powc(cc - a - b) * reg_2f1(cc - a, cc - b, cc, z).unwrap();
        prop_assert!((f - e).norm() <= 1e-9 * (1.0 + f.norm()), "{f} {e}");
    }

    #[test]
    fn pfaff_transformation(a in cplx(2.0), b in cplx(2.0), cc in cplx(2.0), x in -0.9..0.45f64) {
        let z = c(x, 0.0);
        let f = reg_2f1(a, b, cc, z).unwrap();
        let p = (1.0 - z).powc(-a) * reg_2f1(a, cc - b, cc, z / (z - 1.0)).unwrap();
        prop_assert!((f - p).norm() <= 1e-9 * (1.0 + f.norm()), "{f} {p}");
    }
}
