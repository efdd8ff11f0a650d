//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). Every tolerance is pinned here.

mod common;

use agm3::{
    agm_mean, appell_f1, elliptic_k, extended_mean, f1_pde_residual, f1_reduce, integral_u_form,
    landen_descend, moduli_from_triple, next_moduli, next_moduli_via_angles, step, AppellF1Params,
    EllipticModulus, ModuliPair, QuadratureConfig, RatioPair, SeriesBudget, Triple, DEFAULT_TOL,
};
use common::{random_series_safe_triple, random_triple, rel_diff, rng, ulps_between};
use rand::Rng;

const GOLDEN_MEAN: f64 = 0.7250921711406717;

fn pass(number: usize, what: &str) {
    println!("criterion {number:2}: PASS - {what}");
}

#[test]
fn criterion_01_golden_mean() {
    let t = Triple::new(1.0, 0.5, 0.2).unwrap();
    let result = extended_mean(t, DEFAULT_TOL).unwrap();
    assert!(result.converged);
    assert!(
        rel_diff(result.mean, GOLDEN_MEAN) <= 1e-13,
        "mean {} differs from {GOLDEN_MEAN}",
        result.mean
    );
    assert!(
        result.iterations <= 10,
        "took {} iterations",
        result.iterations
    );
    pass(
        1,
        "M(1.0, 0.5, 0.2) = 0.7250921711406717 within 1e-13 in <= 10 iterations",
    );
}

#[test]
fn criterion_02_integral_agreement() {
    let t = Triple::new(1.0, 0.5, 0.2).unwrap();
    let result = extended_mean(t, DEFAULT_TOL).unwrap();
    let moduli = moduli_from_triple(t).unwrap();
    let integral = integral_u_form(moduli, QuadratureConfig::default()).unwrap();
    let ratio = t.a() / result.mean;
    assert!(
        rel_diff(ratio, integral) <= 1e-10,
        "a0/M = {ratio} vs integral {integral}"
    );
    pass(2, "a0/M matches the (kappa, lambda) integral within 1e-10");
}

#[test]
fn criterion_03_reduction_to_classic_mean() {
    let mut rng = rng(0x03);
    for _ in 0..100 {
        let a = rng.gen_range(0.1..10.0);
        let b = a * rng.gen_range(0.01..0.999);
        let extended = extended_mean(Triple::new(a, b, 0.0).unwrap(), DEFAULT_TOL)
            .unwrap()
            .mean;
        let classic = agm_mean(a, b, DEFAULT_TOL).unwrap();
        assert!(
            ulps_between(extended, classic) <= 4,
            "({a}, {b}): {extended} vs {classic}"
        );
    }
    pass(
        3,
        "M(a, b, 0) equals the classic mean within 4 ulp on 100 random pairs",
    );
}

#[test]
fn criterion_04_four_route_equality() {
    let mut rng = rng(0x04);
    let params = AppellF1Params::new(0.5, 0.5, 0.5, 1.0).unwrap();
    let cfg = QuadratureConfig::default();
    for _ in 0..100 {
        let t = random_series_safe_triple(&mut rng);
        let moduli = moduli_from_triple(t).unwrap();
        let values = [
            t.a() / extended_mean(t, DEFAULT_TOL).unwrap().mean,
            integral_u_form(moduli, cfg).unwrap(),
            agm3::integral_theta_form(t, cfg).unwrap(),
            appell_f1(
                params,
                moduli.kappa(),
                moduli.lambda(),
                SeriesBudget::double_series(),
            )
            .unwrap(),
            f1_reduce(
                params,
                moduli.kappa(),
                moduli.lambda(),
                SeriesBudget::default(),
            )
            .unwrap(),
        ];
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                assert!(
                    rel_diff(values[i], values[j]) <= 1e-9,
                    "routes {i} and {j} disagree for {t:?}: {} vs {}",
                    values[i],
                    values[j]
                );
            }
        }
    }
    pass(
        4,
        "all five routes to a0/M agree pairwise within 1e-9 on 100 random triples",
    );
}

#[test]
fn criterion_05_per_step_moduli_identities() {
    let mut rng = rng(0x05);
    let mut triples = vec![Triple::new(1.0, 0.5, 0.2).unwrap()];
    triples.extend((0..100).map(|_| random_triple(&mut rng)));
    for t in triples {
        let result = extended_mean(t, DEFAULT_TOL).unwrap();
        for step in &result.trace {
            let (rel, abs) = step.identity_residuals();
            assert!(
                rel <= 1e-13,
                "(1-k)(1-l) vs (b/a)^2 residual {rel} at step {} of {t:?}",
                step.index
            );
            assert!(
                abs <= 1e-13,
                "k*l vs (c/a)^2 residual {abs} at step {} of {t:?}",
                step.index
            );
        }
    }
    pass(
        5,
        "every trace step satisfies both moduli product identities at 1e-13",
    );
}

#[test]
fn criterion_06_two_route_moduli_update() {
    let mut checked = 0;
    for i in 1..=20 {
        for j in 1..=20 {
            let kappa = 0.95 * i as f64 / 20.0;
            let lambda = 0.95 * j as f64 / 20.0;
            // the angle parametrization exists only where a source triple
            // does, i.e. lambda < kappa and kappa + lambda <= 1
            if lambda >= kappa || kappa + lambda > 1.0 {
                continue;
            }
            let m = ModuliPair::new(kappa, lambda).unwrap();
            let via_angles = next_moduli_via_angles(m).unwrap();
            let angles = m.to_angles();
            let xi = (angles.alpha() - angles.eps()).cos();
            let eta = (angles.alpha() + angles.eps()).cos();
            let via_ratios = next_moduli(RatioPair::new(xi, eta).unwrap()).unwrap();
            assert!(
                (via_angles.kappa() - via_ratios.kappa()).abs() <= 1e-11,
                "kappa' routes disagree at ({kappa}, {lambda})"
            );
            assert!(
                (via_angles.lambda() - via_ratios.lambda()).abs() <= 1e-11,
                "lambda' routes disagree at ({kappa}, {lambda})"
            );
            checked += 1;
        }
    }
    assert!(checked >= 100, "only {checked} grid points were admissible");
    pass(
        6,
        "ratio-form and angle-form moduli updates agree within 1e-11 on the grid",
    );
}

#[test]
fn criterion_07_landen_identity() {
    for i in 1..=19 {
        let k0 = EllipticModulus::new(0.05 * i as f64).unwrap();
        let (k1, _) = landen_descend(k0);
        let lhs = elliptic_k(k0);
        let rhs = (1.0 + k1.k()) * elliptic_k(k1);
        assert!(
            (lhs - rhs).abs() <= 1e-12 * lhs,
            "K({}) = {lhs} vs (1 + k1) K(k1) = {rhs}",
            k0.k()
        );
    }
    pass(
        7,
        "K(k0) = (1 + k1) K(k1) within 1e-12 for k0 in {0.05, ..., 0.95}",
    );
}

#[test]
fn criterion_08_diagonal_closed_form() {
    let params = AppellF1Params::new(0.5, 0.5, 0.5, 1.0).unwrap();
    for i in 1..=9 {
        let x = i as f64 / 10.0;
        let value = appell_f1(params, x, x, SeriesBudget::double_series()).unwrap();
        assert!(
            (value * (1.0 - x).sqrt() - 1.0).abs() <= 1e-10,
            "F1 diagonal at {x}: {value}"
        );
    }
    let value = appell_f1(params, 0.19, 0.19, SeriesBudget::double_series()).unwrap();
    assert!(
        (value - 10.0 / 9.0).abs() <= 1e-10,
        "F1(0.19, 0.19) = {value}"
    );
    pass(
        8,
        "F1 diagonal matches 1/sqrt(1 - x) within 1e-10, and 10/9 at x = 0.19",
    );
}

#[test]
fn criterion_09_reduction_at_general_parameters() {
    let parameter_sets = [
        AppellF1Params::new(0.5, 0.5, 0.5, 1.0).unwrap(),
        AppellF1Params::new(0.3, 0.4, 0.6, 1.0).unwrap(),
        AppellF1Params::new(1.2, 0.7, 0.9, 1.6).unwrap(),
    ];
    for params in parameter_sets {
        for i in 1..=10 {
            for j in 1..=10 {
                let x = 0.9 * i as f64 / 10.0;
                let y = 0.9 * j as f64 / 10.0;
                let direct = appell_f1(params, x, y, SeriesBudget::double_series()).unwrap();
                let reduced = f1_reduce(params, x, y, SeriesBudget::default()).unwrap();
                assert!(
                    rel_diff(direct, reduced) <= 1e-10,
                    "{params:?} at ({x}, {y}): {direct} vs {reduced}"
                );
            }
        }
    }
    pass(
        9,
        "single-series reduction matches the double series within 1e-10 on 3 x 100 points",
    );
}

#[test]
fn criterion_10_pde_residuals() {
    let mut rng = rng(0x0a);
    let parameter_sets = [
        AppellF1Params::new(0.5, 0.5, 0.5, 1.0).unwrap(),
        AppellF1Params::new(0.3, 0.4, 0.6, 1.0).unwrap(),
    ];
    for params in parameter_sets {
        for _ in 0..20 {
            let x = rng.gen_range(0.1..0.7);
            let y = rng.gen_range(0.1..0.7);
            let (r1, r2) =
                f1_pde_residual(params, x, y, 1e-4, SeriesBudget::double_series()).unwrap();
            assert!(
                r1 <= 1e-4 && r2 <= 1e-4,
                "{params:?} at ({x}, {y}): residuals {r1}, {r2}"
            );
        }
    }
    pass(
        10,
        "both differential-equation residuals stay below 1e-4 at 2 x 20 points",
    );
}

/// Straight transcription of the reference iteration program: ten steps
/// from (1.0, 0.5, 0.2), every intermediate in binary64.
fn transcribed_trace() -> Vec<[f64; 3]> {
    let (mut a0, mut b0, mut c0) = (1.0_f64, 0.5_f64, 0.2_f64);
    let mut rows = vec![[a0, b0, c0]];
    for _ in 0..10 {
        let x = (b0 + c0) / a0;
        let y = (b0 - c0) / a0;
        let dum1 = 1.0 - x * y;
        let dum2 = ((1.0 - x * x) * (1.0 - y * y)).sqrt();
        let k0 = (dum1 + dum2) / 2.0;
        let l0 = (dum1 - dum2) / 2.0;
        let dum1 = 1.0 - x * y;
        let dum2 = (1.0 + x) * (1.0 + y);
        let k1 = (dum1 / dum2) * (dum1 / dum2);
        let dum1 = (x - y) * (x - y);
        let dum2 = 2.0 * (1.0 + x) * (1.0 + y) * (x + y);
        let l1 = dum1 / dum2;
        let dum1 = (1.0 - l0).sqrt() + (1.0 - k0).sqrt();
        let dum2 = 2.0 * (1.0 - l1).sqrt();
        let a1 = a0 * dum1 / dum2;
        let b1 = a1 * ((1.0 - k1) * (1.0 - l1)).sqrt();
        let c1 = a1 * (k1 * l1).sqrt();
        (a0, b0, c0) = (a1, b1, c1);
        rows.push([a0, b0, c0]);
    }
    rows
}

#[test]
fn criterion_11_reference_trace_parity() {
    let reference = transcribed_trace();
    assert_eq!(reference[10][0], GOLDEN_MEAN);
    assert_eq!(reference[10][1], GOLDEN_MEAN);
    assert_eq!(reference[10][2], 0.0);

    // the library trace must reproduce the transcription step for step
    let mut current = Triple::new(1.0, 0.5, 0.2).unwrap();
    for (n, expected) in reference.iter().enumerate() {
        for (value, reference_value, field) in [
            (current.a(), expected[0], "a"),
            (current.b(), expected[1], "b"),
            (current.c(), expected[2], "c"),
        ] {
            assert!(
                ulps_between(value, reference_value) <= 1,
                "step {n}, field {field}: {value} vs {reference_value}"
            );
        }
        if n < 10 {
            current = step(current).unwrap();
        }
    }

    // and the recorded trace of extended_mean is the same prefix
    let result = extended_mean(Triple::new(1.0, 0.5, 0.2).unwrap(), DEFAULT_TOL).unwrap();
    for step in &result.trace {
        let expected = reference[step.index];
        assert!(ulps_between(step.triple.a(), expected[0]) <= 1);
        assert!(ulps_between(step.triple.b(), expected[1]) <= 1);
        assert!(ulps_between(step.triple.c(), expected[2]) <= 1);
    }
    pass(
        11,
        "ten transcribed iteration steps match the library within 1 ulp per field",
    );
}

#[test]
fn criterion_12_homogeneity() {
    let mut rng = rng(0x0c);
    let scales = [2.0_f64.powi(-10), 1.0, 2.0_f64.powi(10)];
    for _ in 0..50 {
        let t = random_triple(&mut rng);
        let base = extended_mean(t, DEFAULT_TOL).unwrap().mean;
        for s in scales {
            let scaled = Triple::new(s * t.a(), s * t.b(), s * t.c()).unwrap();
            let mean = extended_mean(scaled, DEFAULT_TOL).unwrap().mean;
            assert!(
                ulps_between(mean, s * base) <= 4,
                "scale {s} of {t:?}: {mean} vs {}",
                s * base
            );
        }
    }
    pass(
        12,
        "M(s a, s b, s c) = s M(a, b, c) within 4 ulp for s in {2^-10, 1, 2^10}",
    );
}
