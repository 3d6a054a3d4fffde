use epqm::basis::{bound_coefficients, BoundStateOptions};
use epqm::classical::lambda_matrix;
use epqm::energy_poly::{ContinuousDualHahnParams, EnergyPolynomial, MeixnerPollaczekParams};
use epqm::hamiltonian::{
    perturbed_spectrum, perturbed_spectrum_dense, tridiagonal_from_recursion, Perturbation, PerturbationSpec,
};
use epqm::numerics::{
    dense_symmetric_eigenvalues, sturm_count, tridiagonal_eigenvalues, Grid, SquareMatrix, TridiagonalMatrix,
};
use epqm::spectra::{bound_states, SystemCatalogEntry};
use proptest::collection::vec;
use proptest::prelude::*;

fn tridiagonal() -> impl Strategy<Value = TridiagonalMatrix> {
    (2usize..30).prop_flat_map(|n| {
        (vec(-5.0..5.0f64, n), vec(-3.0..3.0f64, n - 1))
            .prop_map(|(d, e)| TridiagonalMatrix::new(d, e).unwrap())
    })
}

fn operator() -> impl Strategy<Value = EnergyPolynomial> {
    prop_oneof![
        (0.2..3.0f64, 0.3..2.8f64).prop_map(|(m, t)| MeixnerPollaczekParams::new(m, t).unwrap().into()),
        (0.1..2.0f64, 0.1..2.0f64, 0.1..2.0f64)
            .prop_map(|(m, a, b)| ContinuousDualHahnParams::real(m, a, b).unwrap().into()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tridiagonal_eigenvalues_match_dense(t in tridiagonal()) {
        let a = tridiagonal_eigenvalues(&t);
        let b = dense_symmetric_eigenvalues(&t.to_dense()).unwrap();
        prop_assert_eq!(a.len(), t.len());
        prop_assert!(a.windows(2).all(|w| w[0] <= w[1]));
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-10 * x.abs().max(1.0));
        }
        prop_assert!((a.iter().sum::<f64>() - t.trace()).abs() <= 1e-9 * t.len() as f64);
    }

    #[test]
    fn sturm_count_brackets_each_eigenvalue(t in tridiagonal()) {
        let ev = tridiagonal_eigenvalues(&t);
        let below = ev[0] - 1.0;
        let above = ev[ev.len() - 1] + 1.0;
        prop_assert_eq!(sturm_count(&t, below), 0);
        prop_assert_eq!(sturm_count(&t, above), t.len());
    }

    #[test]
    fn short_range_paths_agree(
        p in operator(),
        eta in -2.0..2.0f64,
        alpha in vec(-1.0..1.0f64, 1..6),
        beta in vec(-1.0..1.0f64, 0..5),
    ) {
        let op = tridiagonal_from_recursion(p);
        let pert = PerturbationSpec { eta, kind: Perturbation::ShortRange { alpha, beta } };
        let a = perturbed_spectrum(&op, &pert, 24).unwrap();
        let b = perturbed_spectrum_dense(&op, &pert, 24).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
    }

    #[test]
    fn block_shift_is_bounded_by_norm(p in operator(), eta in -1.0..1.0f64, seed in vec(-1.0..1.0f64, 16)) {
        let op = tridiagonal_from_recursion(p);
        let w = SquareMatrix::from_fn(4, |i, j| seed[4 * i.min(j) + i.max(j)]);
        let norm = w.norm();
        let pert = PerturbationSpec { eta, kind: Perturbation::Block(w) };
        let base = tridiagonal_eigenvalues(&op.truncate(20).unwrap());
        let moved = perturbed_spectrum(&op, &pert, 20).unwrap();
        for (x, y) in base.iter().zip(&moved) {
            prop_assert!((x - y).abs() <= eta.abs() * norm + 1e-9 * x.abs().max(1.0));
        }
    }

    #[test]
    fn lambda_matrix_is_symmetric(nu in 0.0..4.0f64, size in 1usize..12) {
        let m = lambda_matrix(nu, size).unwrap().to_dense();
        prop_assert!(m.max_asymmetry() <= 1e-13 * m.max_abs().max(1.0));
    }

    #[test]
    fn morse_coefficients_are_unit_vectors(alpha in 0.5..2.0f64, beta in 0.5..2.0f64, v0 in 1.0..20.0f64) {
        let sys = SystemCatalogEntry::morse(alpha, beta, v0).unwrap();
        let count = bound_states(&sys, 6).unwrap().bound.len();
        let cs: Vec<Vec<f64>> = (0..count)
            .map(|m| bound_coefficients(&sys, m, &BoundStateOptions::default()).unwrap())
            .collect();
        for i in 0..count {
            for j in 0..=i {
                let dot: f64 = cs[i].iter().zip(&cs[j]).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() <= 1e-10, "({i},{j}) {dot}");
            }
        }
    }

    #[test]
    fn linspace_is_uniform(lo in -10.0..10.0f64, width in 0.1..20.0f64, n in 2usize..200) {
        let g = Grid::linspace(lo, lo + width, n).unwrap();
        let p = g.points();
        prop_assert_eq!(p.len(), n);
        prop_assert_eq!(p[0], lo);
        prop_assert!((p[n - 1] - lo - width).abs() <= 1e-12 * (lo.abs() + width));
        let h = width / (n - 1) as f64;
        prop_assert!(p.windows(2).all(|w| ((w[1] - w[0]) - h).abs() <= 1e-9 * h));
    }
}
