use zetashift_core::kernels::{
    euler_maclaurin, hurwitz_zeta, log_zeta_tracked, riemann_zeta, zeta_alternating, HurwitzParams,
};
use zetashift_core::{Complex64, Error, Precision};

/// Sum of `n^{-p}` for `n <= cutoff`, smallest terms first, plus the midpoint
/// of the integral bracket `[int_{N+1}^inf, int_N^inf] x^{-p} dx` for the tail.
/// Returns (estimate, half-width of the bracket).
fn partial_sum_oracle(p: i32, cutoff: u64) -> (f64, f64) {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for n in (1..=cutoff).rev() {
        let y = (n as f64).powi(-p) - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    let q = (p - 1) as f64;
    let n = cutoff as f64;
    let upper = n.powf(-q) / q;
    let lower = (n + 1.0).powf(-q) / q;
    (sum + 0.5 * (upper + lower), 0.5 * (upper - lower))
}

fn prec() -> Precision {
    Precision::default()
}

fn strip_grid() -> Vec<Complex64> {
    let mut pts = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            pts.push(Complex64::new(0.55 + 0.1 * i as f64, 25.0 * j as f64));
        }
    }
    pts
}

#[test]
fn zeta_two_against_partial_sums() {
    let (oracle, half_width) = partial_sum_oracle(2, 2_000_000);
    assert!(half_width < 1e-12);
    let z = riemann_zeta(Complex64::new(2.0, 0.0), &prec()).unwrap();
    assert!((z.re - oracle).abs() < 1e-12, "{} vs {}", z.re, oracle);
    assert_eq!(z.im, 0.0);
    assert!((z.re - 1.644_934_066_848_226_4).abs() < 1e-15);

    let params = HurwitzParams::new(1.0).unwrap();
    let h = hurwitz_zeta(Complex64::new(2.0, 0.0), params, &prec()).unwrap();
    assert!((h.re - 1.644_934_066_848_226_4).abs() < 1e-15);
}

#[test]
fn zeta_three_against_partial_sums() {
    let (oracle, half_width) = partial_sum_oracle(3, 200_000);
    assert!(half_width < 1e-12);
    let z = riemann_zeta(Complex64::new(3.0, 0.0), &prec()).unwrap();
    assert!((z.re - oracle).abs() < 1e-12);
    assert!((z.re - 1.202_056_903_159_594_3).abs() < 1e-15);
}

#[test]
fn dual_method_at_three_quarters() {
    let s = Complex64::new(0.75, 0.0);
    let em = riemann_zeta(s, &prec()).unwrap();
    let alt = zeta_alternating(s).unwrap();
    assert!((em - alt).norm() <= 1e-9);
    // zeta(3/4) = -3.44128538694522...
    assert!((em.re + 3.441_285_386_945_223).abs() < 1e-12);
}

#[test]
fn dual_method_on_strip_grid() {
    for s in strip_grid() {
        let em = riemann_zeta(s, &prec()).unwrap();
        let alt = zeta_alternating(s).unwrap();
        assert!((em - alt).norm() <= 1e-9, "s = {s}: {em} vs {alt}");
    }
}

#[test]
fn half_parameter_identity_on_strip_grid() {
    let half = HurwitzParams::new(0.5).unwrap();
    for s in strip_grid().into_iter().chain([Complex64::new(0.75, 10.0)]) {
        let h = hurwitz_zeta(s, half, &prec()).unwrap();
        let two_s = Complex64::new(2.0, 0.0).powc(s);
        let expected = (two_s - 1.0) * riemann_zeta(s, &prec()).unwrap();
        assert!((h - expected).norm() <= 1e-9 * expected.norm(), "s = {s}");
    }
}

#[test]
fn hurwitz_recurrence() {
    for alpha in [0.1, 0.25, 0.5, 0.75, 0.9, 1.0] {
        for s in strip_grid() {
            let lhs = hurwitz_zeta(s, HurwitzParams::new(alpha).unwrap(), &prec()).unwrap();
            let shifted = euler_maclaurin(s, alpha + 1.0, &prec()).unwrap().value;
            let power = Complex64::new(alpha, 0.0).powc(-s);
            assert!((lhs - shifted - power).norm() <= 1e-10, "alpha {alpha}, s {s}");
        }
    }
}

#[test]
fn conjugate_symmetry_both_kernels() {
    for s in strip_grid() {
        let a = riemann_zeta(s, &prec()).unwrap();
        let b = riemann_zeta(s.conj(), &prec()).unwrap();
        assert!((a.conj() - b).norm() <= 1e-12);
        let a = zeta_alternating(s).unwrap();
        let b = zeta_alternating(s.conj()).unwrap();
        assert!((a.conj() - b).norm() <= 1e-12);
        let params = HurwitzParams::new(0.3).unwrap();
        let a = hurwitz_zeta(s, params, &prec()).unwrap();
        let b = hurwitz_zeta(s.conj(), params, &prec()).unwrap();
        assert!((a.conj() - b).norm() <= 1e-12);
    }
}

#[test]
fn first_nontrivial_zero_is_tiny() {
    let rho = Complex64::new(0.5, 14.134_725_141_734_693);
    assert!(riemann_zeta(rho, &prec()).unwrap().norm() < 1e-9);
}

#[test]
fn log_zeta_at_two() {
    let l = log_zeta_tracked(Complex64::new(2.0, 0.0), &prec()).unwrap();
    let (oracle, _) = partial_sum_oracle(2, 2_000_000);
    assert!((l.re - oracle.ln()).abs() < 1e-12);
    assert!((l.re - 0.497_700_3).abs() < 1e-7);
    assert_eq!(l.im, 0.0);
}

#[test]
fn log_zeta_round_trip() {
    let s = Complex64::new(0.8, 5.0);
    let l = log_zeta_tracked(s, &prec()).unwrap();
    let z = riemann_zeta(s, &prec()).unwrap();
    assert!((l.exp() - z).norm() <= 1e-9 * z.norm());
}

#[test]
fn log_zeta_near_first_zero() {
    // Locate the smallest |zeta| on a coarse scan around the first zero's
    // ordinate, then track log zeta there.
    let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
    for i in 0..=10 {
        for j in 0..=40 {
            let s = Complex64::new(0.51 + 0.01 * i as f64, 14.0 + 0.01 * j as f64);
            let m = riemann_zeta(s, &prec()).unwrap().norm();
            if m < best.0 {
                best = (m, s);
            }
        }
    }
    assert!(best.0 < 0.05, "coarse scan missed the zero: {best:?}");
    for s in [best.1, Complex64::new(0.6, 14.13)] {
        match log_zeta_tracked(s, &prec()) {
            Ok(l) => {
                let z = riemann_zeta(s, &prec()).unwrap();
                assert!((l.exp() - z).norm() <= 1e-9 * z.norm());
            }
            Err(e) => assert!(matches!(e, Error::ZeroProximity { .. }), "{e}"),
        }
    }
}

#[test]
fn log_zeta_directly_on_a_zero_errors() {
    let rho = Complex64::new(0.5 + 1e-9, 14.134_725_141_734_693);
    let err = log_zeta_tracked(rho, &prec()).unwrap_err();
    assert!(matches!(err, Error::ZeroProximity { .. }));
}
