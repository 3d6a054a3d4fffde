use std::f64::consts::PI;

use epqm::energy_poly::{
    eval_hypergeometric, eval_recursion, generating_check, recurrence_coefficients, weight,
    ContinuousDualHahnParams, EnergyPolynomial, MeixnerPollaczekParams,
};
use epqm::scattering::{phase_distance_mod_pi, reduce_mod_pi};
use epqm::special::{c64, log_gamma_complex, pochhammer_real, recip_gamma, sin_pi};
use epqm::spectra::{bound_states, resonances, SystemCatalogEntry};
use proptest::prelude::*;

fn mp() -> impl Strategy<Value = EnergyPolynomial> {
    (0.1..4.0f64, 0.2..(PI - 0.2)).prop_map(|(mu, th)| MeixnerPollaczekParams::new(mu, th).unwrap().into())
}

fn cdh() -> impl Strategy<Value = EnergyPolynomial> {
    (0.1..2.5f64, 0.1..2.5f64, 0.1..2.5f64)
        .prop_map(|(m, a, b)| ContinuousDualHahnParams::real(m, a, b).unwrap().into())
}

fn any_poly() -> impl Strategy<Value = EnergyPolynomial> {
    prop_oneof![mp(), cdh()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_matches_series(p in any_poly(), y in 0.05..4.0f64, n in 0usize..16) {
        let r = eval_recursion(&p, y, n).unwrap()[n];
        let h = eval_hypergeometric(&p, y, n).unwrap();
        prop_assert!((r - h).abs() <= 1e-9 * h.abs().max(1.0), "{r} vs {h}");
    }

    #[test]
    fn three_term_recurrence_holds(p in any_poly(), y in 0.05..4.0f64, n in 1usize..25) {
        let v = eval_recursion(&p, y, n + 1).unwrap();
        let (a, b) = recurrence_coefficients(&p, n).unwrap();
        let (_, b_prev) = recurrence_coefficients(&p, n - 1).unwrap();
        let w = match p {
            EnergyPolynomial::MeixnerPollaczek(ref q) => y * q.theta().sin(),
            EnergyPolynomial::ContinuousDualHahn(_) => y * y,
        };
        let lhs = w * v[n];
        let rhs = a * v[n] + b_prev * v[n - 1] + b * v[n + 1];
        prop_assert!((lhs - rhs).abs() <= 1e-9 * (a.abs() + b.abs() + b_prev.abs()) * v[n - 1..=n + 1].iter().fold(1.0, |m, x| x.abs().max(m)));
    }

    #[test]
    fn generating_function_agrees(p in any_poly(), y in 0.05..3.0f64, t in -0.6..0.6f64) {
        prop_assert!(generating_check(&p, y, t, 120).unwrap().difference() <= 1e-8);
    }

    #[test]
    fn weight_is_positive(p in any_poly(), y in 0.01..5.0f64) {
        let w = weight(&p, y).unwrap();
        prop_assert!(w > 0.0 && w.is_finite());
    }

    #[test]
    fn mp_parity(mu in 0.1..3.0f64, y in 0.05..3.0f64, n in 0usize..12) {
        // P_n(−y; θ) = (−1)^n P_n(y; π − θ)
        let th = 1.1;
        let a = eval_recursion(&MeixnerPollaczekParams::new(mu, th).unwrap().into(), -y, n).unwrap()[n];
        let b = eval_recursion(&MeixnerPollaczekParams::new(mu, PI - th).unwrap().into(), y, n).unwrap()[n];
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((a - sign * b).abs() <= 1e-10 * a.abs().max(1.0));
    }

    #[test]
    fn gamma_reflection(x in -3.7..3.7f64, im in -2.0..2.0f64) {
        let z = c64(x, im);
        let prod = recip_gamma(z) * recip_gamma(1.0 - z);
        let want = (c64(PI, 0.0) * z).sin() / PI;
        prop_assert!((prod - want).norm() <= 1e-12 * want.norm().max(1.0));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.1..20.0f64, im in -10.0..10.0f64) {
        let z = c64(x, im);
        let d = log_gamma_complex(z + 1.0).unwrap() - log_gamma_complex(z).unwrap() - z.ln();
        prop_assert!(d.re.abs() <= 1e-11);
        prop_assert!(reduce_mod_pi(d.im).abs() <= 1e-11 || (reduce_mod_pi(d.im) - PI).abs() <= 1e-11);
    }

    #[test]
    fn pochhammer_product(x in -5.0..5.0f64, n in 0usize..8, m in 0usize..8) {
        let lhs = pochhammer_real(x, n + m);
        let rhs = pochhammer_real(x, n) * pochhammer_real(x + n as f64, m);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0));
        prop_assert_eq!(sin_pi(n as f64), 0.0);
    }

    #[test]
    fn phase_distance_is_a_metric_mod_pi(a in -20.0..20.0f64, b in -20.0..20.0f64, j in -5i32..5) {
        let d = phase_distance_mod_pi(a, b);
        prop_assert!((0.0..=PI / 2.0 + 1e-15).contains(&d));
        prop_assert!((d - phase_distance_mod_pi(b, a)).abs() <= 1e-12);
        prop_assert!((d - phase_distance_mod_pi(a + j as f64 * PI, b)).abs() <= 1e-12);
    }

    #[test]
    fn coulomb_levels_scale_with_charge(z in 0.1..5.0f64, l in 0u32..4) {
        let one = bound_states(&SystemCatalogEntry::coulomb(1.0, l).unwrap(), 6).unwrap().bound;
        let many = bound_states(&SystemCatalogEntry::coulomb(z, l).unwrap(), 6).unwrap().bound;
        for (a, b) in one.iter().zip(&many) {
            prop_assert!((a * z * z - b).abs() <= 1e-14 * b.abs());
        }
    }

    #[test]
    fn morse_count_follows_b(alpha in 0.3..3.0f64, beta in 0.3..3.0f64, v0 in 0.5..40.0f64) {
        let b = 0.5 - beta * (2.0 * v0).sqrt() / alpha;
        prop_assume!(b < -1e-6 && (b - b.round()).abs() > 1e-6);
        let sys = SystemCatalogEntry::morse(alpha, beta, v0).unwrap();
        let levels = bound_states(&sys, 1000).unwrap().bound;
        prop_assert_eq!(levels.len(), (-b).floor() as usize + 1);
        prop_assert!(levels.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(levels.iter().all(|&e| e < 0.0));
    }

    #[test]
    fn resonances_lie_below_real_axis(alpha in 0.2..4.0f64, beta in 0.2..8.0f64) {
        let s = resonances(alpha, beta, 20).unwrap();
        prop_assert!(s.resonances.iter().all(|e| e.im < 0.0));
        prop_assert_eq!(s.bound.len(), 1);
        prop_assert!((s.bound[0] + 0.5 * (alpha * alpha / beta).powi(2)).abs() <= 1e-12 * s.bound[0].abs());
    }
}
