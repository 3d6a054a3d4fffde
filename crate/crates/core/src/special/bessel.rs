/// Bessel function of the first kind J_n(x) for integer order and x >= 0.
///
/// Ascending series for small arguments, Miller's downward recurrence
/// normalised by J_0 + 2 Σ J_{2k} = 1 otherwise.
pub fn bessel_j(order: usize, x: f64) -> f64 {
    assert!(x >= 0.0, "bessel_j requires x >= 0");
    if x == 0.0 {
        return if order == 0 { 1.0 } else { 0.0 };
    }
    if x <= 4.0 {
        return series(order, x);
    }
    miller(order, x)
}

fn series(order: usize, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = -half * half;
    let mut lead = 1.0;
    for k in 1..=order {
        lead *= half / k as f64;
    }
    let mut term = lead;
    let mut sum = lead;
    for k in 1..200 {
        term *= q / (k as f64 * (k + order) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

fn miller(order: usize, x: f64) -> f64 {
    let top = order.max(x as usize);
    let mut start = top + 20 + (40.0 * top as f64).sqrt() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut next = 0.0;
    let mut cur = 1e-300;
    let mut norm = 0.0;
    let mut wanted = 0.0;
    for k in (1..=start).rev() {
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        // `cur` now holds the value at index k-1.
        if k - 1 == order {
            wanted = cur;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            norm *= 1e-250;
            wanted *= 1e-250;
        }
    }
    norm += cur;
    wanted / norm
}
