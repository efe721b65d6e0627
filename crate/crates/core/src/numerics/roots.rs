use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 200;

/// Brent's method on a sign-changing bracket.
///
/// Stops when `f` is exactly zero or the bracket is narrower than
/// `tol * |x|` (plus a few ulps). The returned abscissa always lies inside
/// `[lo, hi]`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::invalid("bracket", format!("need finite lo < hi, got [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid("tol", format!("must be positive, got {tol}")));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if !(fa.signum() != fb.signum()) || fa.is_nan() || fb.is_nan() {
        return Err(Error::InvalidBracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..MAX_ITERATIONS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let margin = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol * b.abs() + f64::MIN_POSITIVE;
        let m = 0.5 * (c - b);
        if m.abs() <= margin || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= margin && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation, or secant when only two points are distinct.
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (margin * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > margin { d } else { margin.copysign(m) };
        fb = f(b);
    }
    Err(Error::RootNonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

/// Plain bisection; slow but with no interpolation steps. Used as a cross-check.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let fa = f(a);
    let fb = f(b);
    if fa.signum() == fb.signum() {
        return Err(Error::InvalidBracket {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    let lo_negative = fa < 0.0;
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (a + b);
        if (b - a) <= tol * mid.abs() || mid == a || mid == b {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    Err(Error::RootNonConvergence {
        iterations: MAX_ITERATIONS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const WIEN: f64 = 2.821439372122078893;

    #[test]
    fn linear_root() {
        assert!((find_root(|x| x - 2.0, 0.0, 5.0, 1e-14).unwrap() - 2.0).abs() < 1e-13);
    }

    #[test]
    fn wien_root() {
        let f = |x: f64| 3.0 * (1.0 - (-x).exp()) - x;
        let brent = find_root(f, 1.0, 5.0, 1e-13).unwrap();
        let slow = bisect(f, 1.0, 5.0, 1e-14).unwrap();
        assert!((brent - WIEN).abs() < 1e-11);
        assert!((slow - WIEN).abs() < 1e-11);
    }

    #[test]
    fn log_ten() {
        let x = find_root(|x: f64| x.exp() - 10.0, 2.0, 3.0, 1e-14).unwrap();
        assert!((x - 10f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let err = find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-10).unwrap_err();
        assert!(matches!(err, Error::InvalidBracket { .. }));
        assert!(find_root(|x| x, 1.0, 0.0, 1e-10).is_err());
    }

    #[test]
    fn bracket_independence() {
        let f = |x: f64| x.exp() - 10.0;
        let a = find_root(f, 0.0, 3.0, 1e-12).unwrap();
        let b = find_root(f, 2.2, 40.0, 1e-12).unwrap();
        assert!((a - b).abs() <= 1e-12 * a);
    }

    #[test]
    fn stays_inside_bracket() {
        let x = find_root(|x: f64| (x - 1e-3).tanh(), 0.0, 100.0, 1e-12).unwrap();
        assert!((0.0..=100.0).contains(&x));
        assert!((x - 1e-3).abs() < 1e-12);
    }
}
