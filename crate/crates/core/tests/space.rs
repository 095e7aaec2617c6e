use proptest::prelude::*;
use zetashift_core::kernels::RationalPolynomial;
use zetashift_core::space::{
    encode_base, enumerate_base, frechet_distance, mergelyan_fit, CompactPatch, Exhaustion,
    PatchShape, Polynomial, StripDomain,
};
use zetashift_core::Complex64;

fn exhaustion() -> Exhaustion<f64> {
    Exhaustion::new(StripDomain::classical(), 0.1).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Polynomial<f64>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 1..5)
        .prop_map(|c| Polynomial::monomial(c.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn frechet_is_a_metric(f in poly_strategy(), g in poly_strategy(), h in poly_strategy()) {
        let ex = exhaustion();
        let depth = 12;
        let slack = 2.0 * 0.5f64.powi(depth as i32);
        let fg = frechet_distance(&f, &g, &ex, depth).unwrap();
        let gf = frechet_distance(&g, &f, &ex, depth).unwrap();
        let fh = frechet_distance(&f, &h, &ex, depth).unwrap();
        let hg = frechet_distance(&h, &g, &ex, depth).unwrap();
        prop_assert_eq!(fg.value, gf.value);
        prop_assert!(fg.value <= fh.value + hg.value + slack);
        prop_assert!(fg.value >= 0.0 && fg.value <= 1.0);
    }
}

#[test]
fn fit_residual_decreases_with_degree() {
    let patch = CompactPatch::in_critical_strip(PatchShape::disc(Complex64::new(0.75, 0.0), 0.2), 0.02).unwrap();
    let samples: Vec<_> = patch.grid_points().iter().map(|&s| (s, (s * s).exp() / (s + 2.0))).collect();
    let mut last = f64::INFINITY;
    for degree in 0..=8 {
        let fit = mergelyan_fit(&samples, degree).unwrap();
        assert!(fit.residual <= last * (1.0 + 1e-9), "degree {degree}: {} > {last}", fit.residual);
        last = fit.residual;
    }
    assert!(last < 1e-6);
}

#[test]
fn fit_reproduces_polynomials() {
    let patch = CompactPatch::in_critical_strip(PatchShape::rectangle(0.6, 0.9, -1.0, 1.0), 0.05).unwrap();
    let p = Polynomial::monomial(vec![Complex64::new(1.0, -1.0), Complex64::new(0.5, 0.0), Complex64::new(0.0, 2.0)]);
    let samples: Vec<_> = patch.grid_points().iter().map(|&s| (s, p.eval(s))).collect();
    let fit = mergelyan_fit(&samples, 2).unwrap();
    assert!(fit.residual < 1e-12);
    for (a, b) in fit.polynomial.to_monomial().iter().zip(p.coeffs()) {
        assert!((a - b).norm() < 1e-10);
    }
}

#[test]
fn base_round_trip() {
    for m in 1..=10_000u64 {
        let b = enumerate_base(m);
        assert_eq!(encode_base(b.n, &b.poly), Some(m), "m = {m}");
    }
}

#[test]
fn base_reaches_small_elements() {
    let x = RationalPolynomial::x();
    let m = encode_base(2, &x).unwrap();
    let b = enumerate_base(m);
    assert_eq!((b.n, b.poly), (2, x));
    assert_eq!(enumerate_base(1).poly, RationalPolynomial::zero());
    assert_eq!(enumerate_base(1).n, 1);
}
