//! Numerical quadrature helpers: composite Simpson and adaptive Simpson.

/// Composite Simpson rule on `q + 1` uniform points over `[a, b]`.
///
/// `q` must be even and >= 2; it is rounded up to the next even integer
/// otherwise.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, q: usize) -> f64 {
    let q = if q < 2 {
        2
    } else if q % 2 == 1 {
        q + 1
    } else {
        q
    };
    let h = (b - a) / q as f64;
    let mut acc = f(a) + f(b);
    for j in 1..q {
        let x = a + h * j as f64;
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(x);
    }
    acc * h / 3.0
}

/// Adaptive Simpson integration with absolute tolerance `tol`.
///
/// Uses the classic recursion with the 1/15 error estimate. `max_depth`
/// bounds the recursion; on hitting it the current estimate is accepted.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_rec(f, a, b, fa, fm, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let err = left + right - whole;
    if depth == 0 || err.abs() <= 15.0 * tol {
        left + right + err / 15.0
    } else {
        adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Adaptive Simpson over a domain split at the given interior knots.
///
/// Laplace kernels have a derivative kink at their centers; splitting the
/// domain there keeps the error estimate honest.
pub fn adaptive_simpson_split<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    knots: &[f64],
    tol: f64,
) -> f64 {
    let mut pts: Vec<f64> = std::iter::once(a)
        .chain(knots.iter().copied().filter(|&k| k > a && k < b))
        .chain(std::iter::once(b))
        .collect();
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    pts.dedup();
    let n = (pts.len() - 1) as f64;
    pts.windows(2)
        .map(|w| adaptive_simpson(f, w[0], w[1], tol / n))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_is_exact_on_cubics() {
        let v = simpson(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 8);
        // exact: x^4/4 - x^2 + x on [-1,3] = (81/4-9+3) - (1/4-1-1) = 16
        assert!((v - 16.0).abs() < 1e-12);
    }

    #[test]
    fn adaptive_matches_known_integral() {
        let v = adaptive_simpson(&|x: f64| (-x * x).exp(), -8.0, 8.0, 1e-12);
        assert!((v - std::f64::consts::PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn split_handles_kinks() {
        // integral of e^{-|x|} over [-5,5] = 2(1-e^{-5})
        let v = adaptive_simpson_split(&|x: f64| (-x.abs()).exp(), -5.0, 5.0, &[0.0], 1e-12);
        assert!((v - 2.0 * (1.0 - (-5.0f64).exp())).abs() < 1e-10);
    }
}
