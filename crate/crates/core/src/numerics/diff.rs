/// Second derivative by the 9-point central stencil (error O(h⁸)).
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    const C: [f64; 5] = [
        -205.0 / 72.0,
        8.0 / 5.0,
        -1.0 / 5.0,
        8.0 / 315.0,
        -1.0 / 560.0,
    ];
    let mut acc = C[0] * f(x);
    for (k, c) in C.iter().enumerate().skip(1) {
        let d = k as f64 * h;
        acc += c * (f(x + d) + f(x - d));
    }
    acc / (h * h)
}

/// First derivative by the 9-point central stencil (error O(h⁸)).
pub fn first_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    const C: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
    let mut acc = 0.0;
    for (k, c) in C.iter().enumerate() {
        let d = (k + 1) as f64 * h;
        acc += c * (f(x + d) - f(x - d));
    }
    acc / h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_quadratics() {
        for x in [-3.0, 0.0, 0.7, 12.5] {
            let d = second_derivative(|t| t * t, x, 0.1);
            assert!((d - 2.0).abs() < 1e-10, "{d}");
        }
    }

    #[test]
    fn sine_at_origin() {
        assert_eq!(second_derivative(f64::sin, 0.0, 0.05), 0.0);
    }

    #[test]
    fn exponential_at_origin() {
        let d = second_derivative(f64::exp, 0.0, 0.05);
        assert!((d - 1.0).abs() < 1e-10);
        // Richardson check: halving h leaves the value unchanged to the stencil order.
        let d2 = second_derivative(f64::exp, 0.0, 0.025);
        assert!((d - d2).abs() < 1e-10);
    }

    #[test]
    fn eighth_order_convergence() {
        let f = |t: f64| (1.3 * t).sin() * t.exp();
        let exact = |t: f64| {
            let (s, c) = (1.3 * t).sin_cos();
            t.exp() * ((1.0 - 1.69) * s + 2.6 * c)
        };
        let x = 0.4;
        let e1 = (second_derivative(f, x, 0.4) - exact(x)).abs();
        let e2 = (second_derivative(f, x, 0.2) - exact(x)).abs();
        assert!(e1 / e2 >= 64.0, "ratio {}", e1 / e2);
    }

    #[test]
    fn first_derivative_of_cubic() {
        let d = first_derivative(|t| t * t * t, 2.0, 0.1);
        assert!((d - 12.0).abs() < 1e-11);
    }
}
