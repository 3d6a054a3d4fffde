use super::params::ExtendedJacobiParams;

/// Which extended Jacobi recursion to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendedKind {
    Q,
    H,
}

/// Jacobi recursion coefficients (A_n, B_n, C_n) for
/// y P_n = A_n P_n + B_{n-1} P_{n-1} + C_n P_{n+1}.
pub fn jacobi_abc(mu: f64, nu: f64, n: usize) -> (f64, f64, f64) {
    let nf = n as f64;
    let s = mu + nu;
    let a = if n == 0 {
        (nu - mu) / (s + 2.0)
    } else {
        (nu * nu - mu * mu) / ((2.0 * nf + s) * (2.0 * nf + s + 2.0))
    };
    let b = 2.0 * (nf + mu + 1.0) * (nf + nu + 1.0) / ((2.0 * nf + s + 2.0) * (2.0 * nf + s + 3.0));
    let c = if n == 0 {
        2.0 / (s + 2.0)
    } else {
        2.0 * (nf + 1.0) * (nf + s + 1.0) / ((2.0 * nf + s + 1.0) * (2.0 * nf + s + 2.0))
    };
    (a, b, c)
}

fn d(p: &ExtendedJacobiParams, n: usize) -> f64 {
    n as f64 + 0.5 * (p.mu + p.nu + 1.0)
}

fn f(p: &ExtendedJacobiParams, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let nf = n as f64;
    nf * (nf + p.mu) / (2.0 * nf + p.mu + p.nu)
}

fn g(p: &ExtendedJacobiParams, n: usize) -> f64 {
    let h = d(p, n) + 0.5;
    p.lambda + h * h
}

/// Values Q_0..Q_{n_max} or H_0..H_{n_max} at y.
pub fn extended_jacobi(
    kind: ExtendedKind,
    params: &ExtendedJacobiParams,
    y: f64,
    n_max: usize,
) -> Vec<f64> {
    let (mu, nu) = (params.mu, params.nu);
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    for n in 0..n_max {
        let (an, _, cn) = jacobi_abc(mu, nu, n);
        let lower = if n == 0 {
            0.0
        } else {
            jacobi_abc(mu, nu, n - 1).1 * out[n - 1]
        };
        let next = match kind {
            ExtendedKind::Q => {
                let dn = d(params, n);
                ((y - params.lambda * dn * dn - an) * out[n] - lower) / cn
            }
            ExtendedKind::H => {
                let gn = g(params, n);
                let g_prev = if n == 0 { 0.0 } else { g(params, n - 1) };
                ((y + f(params, n) - gn * an) * out[n] - g_prev * lower) / (gn * cn)
            }
        };
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_at_origin() {
        let (a, b, c) = jacobi_abc(0.0, 0.0, 0);
        assert_eq!(a, 0.0);
        assert!((b - 1.0 / 3.0).abs() < 1e-15);
        assert!((c - 1.0).abs() < 1e-15);
        for n in 0..6 {
            assert_eq!(jacobi_abc(0.7, 0.7, n).0, 0.0);
        }
    }

    #[test]
    fn limiting_forms_match_generic() {
        let (mu, nu) = (0.3, 1.1);
        let s = mu + nu;
        let (a, _, c) = jacobi_abc(mu, nu, 0);
        assert!((a - (nu * nu - mu * mu) / (s * (s + 2.0))).abs() < 1e-15);
        assert!((c - 2.0 * (s + 1.0) / ((s + 1.0) * (s + 2.0))).abs() < 1e-15);
    }

    #[test]
    fn q_seeds_and_one_step() {
        let free = ExtendedJacobiParams::new(0.0, 0.0, 0.0).unwrap();
        let q = extended_jacobi(ExtendedKind::Q, &free, 0.37, 1);
        assert_eq!(q[0], 1.0);
        assert!((q[1] - 0.37).abs() < 1e-15);
        let p = ExtendedJacobiParams::new(0.0, 0.0, 1.0).unwrap();
        let q = extended_jacobi(ExtendedKind::Q, &p, 0.0, 2);
        assert!((q[1] + 0.25).abs() < 1e-15);
        assert!((q[2] - 11.0 / 32.0).abs() < 1e-15);
    }

    #[test]
    fn lambda_zero_q_is_legendre() {
        let p = ExtendedJacobiParams::new(0.0, 0.0, 0.0).unwrap();
        let y = 0.3;
        let q = extended_jacobi(ExtendedKind::Q, &p, y, 3);
        assert!((q[2] - 0.5 * (3.0 * y * y - 1.0)).abs() < 1e-15);
        assert!((q[3] - 0.5 * (5.0 * y * y * y - 3.0 * y)).abs() < 1e-15);
    }

    #[test]
    fn h_recursion_residual() {
        let p = ExtendedJacobiParams::new(0.4, 1.3, 0.8).unwrap();
        let y = -0.2;
        let h = extended_jacobi(ExtendedKind::H, &p, y, 10);
        assert_eq!(h[0], 1.0);
        for n in 1..10 {
            let (an, _, cn) = jacobi_abc(p.mu, p.nu, n);
            let bp = jacobi_abc(p.mu, p.nu, n - 1).1;
            let lhs = (y + f(&p, n)) * h[n];
            let rhs = g(&p, n) * an * h[n] + g(&p, n - 1) * bp * h[n - 1] + g(&p, n) * cn * h[n + 1];
            assert!((lhs - rhs).abs() < 1e-12 * (1.0 + lhs.abs()));
        }
    }
}
