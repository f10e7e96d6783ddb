use num_complex::Complex64;
use proptest::prelude::*;
use qspline::quat::{chi, cpow};
use qspline::special::{hurwitz_zeta_complex, hurwitz_zeta_quat};
use qspline::{AxialElement, Axis, ChiSign, ComplexQuaternion, QuaternionicOrder, RealQuaternion};

fn real_q() -> impl Strategy<Value = RealQuaternion> {
    (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
        .prop_map(|(a, b, c, d)| RealQuaternion::new(a, [b, c, d]))
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

fn complex_q() -> impl Strategy<Value = ComplexQuaternion> {
    (complex(), complex(), complex(), complex())
        .prop_map(|(a, b, c, d)| ComplexQuaternion::new(a, b, c, d))
}

fn axis() -> impl Strategy<Value = Axis> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_filter("nonzero", |(a, b, c)| a * a + b * b + c * c > 1e-3)
        .prop_map(|(a, b, c)| Axis::new([a, b, c]).unwrap())
}

fn order() -> impl Strategy<Value = QuaternionicOrder> {
    (1.2..7.0f64, axis(), 0.0..1.5f64).prop_map(|(a, mu, b)| {
        let m = mu.components();
        QuaternionicOrder::new(RealQuaternion::new(a, [b * m[0], b * m[1], b * m[2]])).unwrap()
    })
}

proptest! {
    #[test]
    fn real_product_associative(p in real_q(), q in real_q(), r in real_q()) {
        prop_assert!(((p * q) * r - p * (q * r)).norm() < 1e-12);
    }

    #[test]
    fn real_norm_multiplicative(p in real_q(), q in real_q()) {
        prop_assert!(((p * q).norm() - p.norm() * q.norm()).abs() < 1e-12);
        let n = p * p.conj();
        prop_assert!((n.a - p.norm_sqr()).abs() < 1e-12 && n.vector_norm() < 1e-12);
    }

    #[test]
    fn complex_inverse(q in complex_q()) {
        prop_assume!(q.quadratic_form().norm() > 1e-3);
        let r = q.inverse().unwrap();
        prop_assert!((q * r - ComplexQuaternion::ONE).norm() < 1e-9 * (1.0 + q.norm() * r.norm()));
        prop_assert!((r * q - ComplexQuaternion::ONE).norm() < 1e-9 * (1.0 + q.norm() * r.norm()));
    }

    #[test]
    fn star_is_an_involutive_anti_automorphism(p in complex_q(), q in complex_q()) {
        prop_assert!((p.star().star() - p).norm() < 1e-15);
        prop_assert!(((p * q).star() - q.star() * p.star()).norm() < 1e-12);
        let n = (p * p.star()).scalar_part();
        prop_assert!((n.re - p.norm_sqr()).abs() < 1e-12 && n.im.abs() < 1e-12);
    }

    #[test]
    fn chi_projectors(mu in axis()) {
        let p = chi(ChiSign::Plus, mu);
        let m = chi(ChiSign::Minus, mu);
        prop_assert!((p * p - p).norm() < 1e-14);
        prop_assert!((m * m - m).norm() < 1e-14);
        prop_assert!((p * m).norm() < 1e-14 && (m * p).norm() < 1e-14);
        prop_assert!((p + m - ComplexQuaternion::ONE).norm() < 1e-15);
    }

    #[test]
    fn axial_product_matches_embedding(mu in axis(), a in complex(), b in complex(), c in complex(), d in complex()) {
        let x = AxialElement::new(mu, a, b);
        let y = AxialElement::new(mu, c, d);
        let full = x.to_complex_quaternion() * y.to_complex_quaternion();
        prop_assert!(((x * y).to_complex_quaternion() - full).norm() < 1e-13);
    }

    #[test]
    fn exp_lambda_q_inverse(q in real_q(), lambda in complex()) {
        let e = ComplexQuaternion::exp_scaled(lambda, &q);
        let f = ComplexQuaternion::exp_scaled(-lambda, &q);
        prop_assert!((e * f - ComplexQuaternion::ONE).norm() < 1e-12 * (1.0 + e.norm() * f.norm()));
    }

    #[test]
    fn exp_modulus_bounds(q in real_q(), z in complex()) {
        let e = q.exp();
        prop_assert!((e.norm() - q.a.exp()).abs() < 1e-12 * q.a.exp());
        prop_assert!(e.norm() <= q.norm().exp() * (1.0 + 1e-12));
        let zq = ComplexQuaternion::from(q).scale(z);
        prop_assert!(ComplexQuaternion::exp_scaled(z, &q).norm() <= (2f64.sqrt() * zq.norm()).exp() * (1.0 + 1e-12));
    }

    #[test]
    fn negative_base_power(q in order(), t in 0.01..20.0f64) {
        let lhs = q.pow_of(Complex64::new(-t, 0.0)).unwrap();
        let rhs = q.exp_scaled(Complex64::new(0.0, std::f64::consts::PI)) * q.pow_of(Complex64::new(t, 0.0)).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0));
    }

    #[test]
    fn power_chi_coordinates(q in order(), z in complex()) {
        prop_assume!(z.norm() > 1e-2);
        let (p, m) = q.pow_of(z).unwrap().chi();
        let w = q.w();
        let scale = p.norm().max(m.norm()).max(1.0);
        prop_assert!((p - cpow(z, w.conj()).unwrap()).norm() < 1e-12 * scale);
        prop_assert!((m - cpow(z, w).unwrap()).norm() < 1e-12 * scale);
    }

    #[test]
    fn power_derivative(q in order(), re in 0.3..3.0f64, im in -2.0..2.0f64) {
        let z = Complex64::new(re, im);
        let h = 1e-6;
        let fd = (q.pow_of(z + h).unwrap() - q.pow_of(z - h).unwrap()) * (0.5 / h);
        let exact = q.as_axial() * q.shifted(-1.0).pow_of(z).unwrap();
        prop_assert!((fd - exact).norm() < 1e-6 * exact.norm().max(1.0));
    }

    #[test]
    fn hurwitz_diagonal(q in order(), a in 0.05..3.0f64) {
        let z = hurwitz_zeta_quat(&q, a).unwrap();
        let (p, m) = z.chi();
        prop_assert!((p - hurwitz_zeta_complex(q.w().conj(), a).unwrap()).norm() < 1e-10 * p.norm().max(1.0));
        prop_assert!((m - hurwitz_zeta_complex(q.w(), a).unwrap()).norm() < 1e-10 * m.norm().max(1.0));
    }

    #[test]
    fn gamma_is_real_quaternion(q in order()) {
        let g = qspline::special::gamma_axial(&q).unwrap();
        prop_assert!(g.imag_residual() < 1e-12 * g.norm());
    }
}
