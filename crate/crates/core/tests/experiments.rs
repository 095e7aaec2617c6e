use zetashift_core::experiments::{
    density_comparison, gdelta_scan, gdelta_scan_pairs, joint_sweep, plant_base, self_recurrence,
    verify_hit, JointSpec,
};
use zetashift_core::kernels::{EvalPrecision, HurwitzParams};
use zetashift_core::orbit::{
    continuous_sweep, hit_density, search_best_shift, Component, ShiftSpec, Subject,
};
use zetashift_core::space::{CompactPatch, PatchShape, TargetFunction};
use zetashift_core::Complex64;

fn prec() -> EvalPrecision<f64> {
    EvalPrecision::default()
}

fn disc(c: f64, r: f64, step: f64) -> CompactPatch<f64> {
    CompactPatch::in_critical_strip(PatchShape::disc(Complex64::new(c, 0.0), r), step).unwrap()
}

#[test]
fn self_recurrence_basics() {
    let patch = disc(0.75, 0.05, 0.025);
    let r = self_recurrence(Subject::Riemann, patch, 0.05, 30.0, 0.05, &[0.5, 0.37], &prec(), 2).unwrap();
    assert!(r.profile.samples[0].error().unwrap() <= 2e-10);
    assert!(r.discrete_runs[0].subsampled);
    assert!(!r.discrete_runs[1].subsampled);
    assert!(r.best_self_shifts.len() <= 10);
    assert!(r.best_self_shifts.iter().all(|m| m.tau >= 1.0));
    assert!(r.best_self_shifts.windows(2).all(|w| w[0].error <= w[1].error));

    // For h = k step, discrete hits are continuous hits at the same indices.
    let k = 10;
    let cont_hits: Vec<bool> = r.profile.samples.iter().map(|s| s.error().is_some_and(|e| e < 0.05)).collect();
    for (n, s) in r.discrete_runs[0].profile.samples.iter().enumerate() {
        assert_eq!(s.error().is_some_and(|e| e < 0.05), cont_hits[n * k]);
    }

    let huge = r.profile.max_error().unwrap() * 2.0;
    assert_eq!(hit_density(&r.profile, huge).unwrap().hit_fraction, 1.0);
    let twice = self_recurrence(Subject::Riemann, r.patch.clone(), 0.1, 30.0, 0.05, &[0.5], &prec(), 1).unwrap();
    assert!(twice.continuous_density.hit_count >= r.continuous_density.hit_count);
}

#[test]
fn density_comparison_planted() {
    let patch = disc(0.75, 0.05, 0.025);
    let target = TargetFunction::ZetaShift { tau: 12.5 };
    let r = density_comparison(Subject::Riemann, target.clone(), patch.clone(), 1e-3, 20.0, 0.05, &[0.5, 0.37], &prec(), 1).unwrap();
    assert!(r.entries[0].subsampled);
    assert!(!r.entries[1].subsampled);
    assert!(r.entries[0].discrete.hit_fraction > 0.0);
    assert_eq!(r.entries[0].n_max, 40);
    assert_eq!(r.entries[1].n_max, 54);

    let big = r.profile.max_error().unwrap() * 2.0;
    let all = density_comparison(Subject::Riemann, target, patch, big, 20.0, 0.05, &[0.5], &prec(), 1).unwrap();
    assert_eq!(all.entries[0].continuous.hit_fraction, 1.0);
    assert_eq!(all.entries[0].discrete.hit_fraction, 1.0);
}

#[test]
fn log_subject_runs() {
    let patch = disc(0.75, 0.05, 0.05);
    let r = density_comparison(Subject::LogRiemann, TargetFunction::LogZetaShift { tau: 5.0 }, patch, 1e-3, 10.0, 0.25, &[1.0], &prec(), 1).unwrap();
    assert!(r.entries[0].discrete.hit_count >= 1);
}

#[test]
fn gdelta_planted_certificate() {
    let (n, t0, n0) = (3u64, 1.7, 5u64);
    let grid = 0.05;
    let planted = plant_base(n, t0, n0, 8, grid, &prec()).unwrap();
    assert!(planted.rational_residual < 1.0 / 6.0, "{planted:?}");
    let result = gdelta_scan_pairs(t0, &[(n, planted.poly.clone())], 20, grid, &prec(), 1).unwrap();
    let entry = &result.entries[0];
    assert_eq!(entry.first_hit_n, Some(n0), "{entry:?}");
    let again = verify_hit(entry, t0, grid, &prec()).unwrap().unwrap();
    assert!(again < 1.0 / 3.0);
    assert_eq!(entry.m, planted.m);
}

#[test]
fn gdelta_scan_is_thread_independent() {
    let a = gdelta_scan(1.7, 6, 3, 0.1, &prec(), 1).unwrap();
    let b = gdelta_scan(1.7, 6, 3, 0.1, &prec(), 4).unwrap();
    assert_eq!(a, b);
    for e in &a.entries {
        if let Some(err) = e.best_error {
            assert!(err >= 0.0);
        }
    }
}

#[test]
fn joint_degenerate_equals_single() {
    let patch = disc(0.7, 0.05, 0.025);
    let target = TargetFunction::ZetaShift { tau: 3.0 };
    let spec = ShiftSpec::continuous(10.0, 0.1).unwrap();
    let single = continuous_sweep(Subject::Riemann, target.clone(), patch.clone(), spec, &prec(), 1).unwrap();
    let c = Component::new(Subject::Riemann, target, patch);
    let joint = joint_sweep(&JointSpec::new(vec![c.clone()]).unwrap(), 10.0, 0.1, &prec(), 1).unwrap();
    assert_eq!(joint.samples, single.samples);
    let twin = joint_sweep(&JointSpec::new(vec![c.clone(), c]).unwrap(), 10.0, 0.1, &prec(), 1).unwrap();
    assert_eq!(twin.samples, single.samples);
}

#[test]
fn joint_planted_minimum() {
    let patch = disc(0.75, 0.05, 0.025);
    let comps: Vec<_> = [0.3, 0.7]
        .iter()
        .map(|&a| {
            let params = HurwitzParams::new(a).unwrap();
            Component::new(Subject::Hurwitz(params), TargetFunction::HurwitzShift { params, tau: 5.0 }, patch.clone())
        })
        .collect();
    let profile = joint_sweep(&JointSpec::new(comps).unwrap(), 10.0, 0.01, &prec(), 2).unwrap();
    let best = search_best_shift(&profile, false).unwrap();
    assert_eq!(best.coarse.tau, 5.0);
    assert!(best.coarse.error <= 1e-6);
}

#[test]
fn joint_rejects_bad_rates() {
    let c = Component::new(Subject::Riemann, TargetFunction::ZetaShift { tau: 0.0 }, disc(0.75, 0.0, 0.1));
    assert!(JointSpec::<f64>::new(vec![]).is_err());
    assert!(JointSpec::new(vec![c.with_rate(0.0)]).is_err());
}
