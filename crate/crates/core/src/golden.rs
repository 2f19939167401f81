//! Derivative-free one-dimensional maximization.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Result of a one-dimensional maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`, stopping when
/// the bracket is narrower than `tol`. The endpoints are evaluated too, so a
/// monotone function returns its better endpoint.
pub fn golden_section_max<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Maximum
where
    F: FnMut(f64) -> f64,
{
    debug_assert!(lo <= hi);
    let f_lo = f(lo);
    let f_hi = f(hi);
    let mut evaluations = 2;
    let (mut best_x, mut best_v) = if f_hi > f_lo { (hi, f_hi) } else { (lo, f_lo) };

    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    evaluations += 2;
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
        evaluations += 1;
    }
    for (x, v) in [(c, fc), (d, fd)] {
        if v > best_v {
            best_x = x;
            best_v = v;
        }
    }
    Maximum { x: best_x, value: best_v, evaluations }
}

/// Evaluates `f` on `n` evenly spaced points of `[lo, hi]`, then refines the
/// `starts` best local maxima of the grid with golden-section search over the
/// neighbouring grid cells. Non-finite values (`-inf` marks infeasible points)
/// never become local maxima.
pub fn multistart_max<F>(f: F, lo: f64, hi: f64, n: usize, starts: usize, tol: f64) -> Option<Maximum>
where
    F: Fn(f64) -> f64,
{
    assert!(n >= 3);
    let step = (hi - lo) / (n - 1) as f64;
    let xs: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    let vs: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut evaluations = n;

    let mut peaks: Vec<usize> = (0..n)
        .filter(|&i| vs[i].is_finite())
        .filter(|&i| {
            let left = if i > 0 { vs[i - 1] } else { f64::NEG_INFINITY };
            let right = if i + 1 < n { vs[i + 1] } else { f64::NEG_INFINITY };
            vs[i] >= left && vs[i] >= right
        })
        .collect();
    if peaks.is_empty() {
        return None;
    }
    peaks.sort_by(|&a, &b| vs[b].total_cmp(&vs[a]).then(a.cmp(&b)));
    peaks.truncate(starts);

    let mut best = Maximum { x: xs[peaks[0]], value: vs[peaks[0]], evaluations: 0 };
    for &i in &peaks {
        let a = xs[i.saturating_sub(1)];
        let b = xs[(i + 1).min(n - 1)];
        let m = golden_section_max(&f, a, b, tol);
        evaluations += m.evaluations;
        if m.value > best.value {
            best = m;
        }
    }
    best.evaluations = evaluations;
    Some(best)
}
