//! Real-analytic Zwegers-type corrections.
//!
//! `gauss_e` is the odd sigmoid E(x) = 2 int_0^x e^{-pi u^2} du = erf(sqrt(pi) x).
//! `r_a` is the modified Zwegers series R_{j;m+1}(tau, v) over the residue
//! class n = -j mod 2(m+1):
//!
//! ```text
//! R_{j;m+1}(tau,v) = sum_n ( sgn(n + 1/2 + j - 2(m+1))
//!                          - E((n + 2(m+1) Im v / Im tau) sqrt(Im tau/(m+1))) )
//!                    e^{-pi i n^2 tau / (2(m+1)) - 2 pi i n v}
//! ```
//!
//! `r_b` is its osp-side analogue over n in Z+1/2, n = j+1/2 mod 2m+1, with
//! an extra (-1)^{n-(j+1/2)} weight and sgn(n) in place of the shifted sign
//! (n is never 0, so sgn is total). Both are real analytic, not holomorphic.
//!
//! `a_tilde_a` / `a_tilde_b` combine R with its literally-composed S-image
//! into the holomorphic-in-v coefficient functions of the difference
//! function G.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{EvalError, EvalResult};
use crate::point::{Truncation, C64};

const I: C64 = Complex64::new(0.0, 1.0);

/// Double-factorial series for erf, no cancellation:
/// erf(t) = (2 t e^{-t^2}/sqrt(pi)) sum_{n>=0} (2 t^2)^n / (2n+1)!!.
fn erf_series(t: f64) -> f64 {
    let t2 = t * t;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0u32;
    loop {
        n += 1;
        term *= 2.0 * t2 / (2.0 * n as f64 + 1.0);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    2.0 * t * (-t2).exp() / PI.sqrt() * sum
}

/// erfc(t) for t >= 0 with full *relative* precision: the Zwegers tail
/// multiplies sgn - E by exponentially large factors, so absolute precision
/// of 1 - erf is not enough there.
///
/// Series complement below t = 1 (erfc > 0.15, no harmful cancellation),
/// bottom-up continued fraction
/// erfc(t) = e^{-t^2}/sqrt(pi) / (t + (1/2)/(t + 1/(t + (3/2)/(t + ...)))) above.
fn erfc_pos(t: f64) -> f64 {
    if t < 1.0 {
        1.0 - erf_series(t)
    } else if t < 26.5 {
        let mut f = 0.0;
        for k in (1..=200u32).rev() {
            f = (k as f64 / 2.0) / (t + f);
        }
        (-t * t).exp() / PI.sqrt() / (t + f)
    } else {
        0.0
    }
}

fn erf(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 1.0 {
        erf_series(x)
    } else {
        (1.0 - erfc_pos(ax)) * x.signum()
    }
}

/// E(x) = 2 int_0^x e^{-pi u^2} du; odd, E(+-inf) = +-1, |error| <= 1e-13.
pub fn gauss_e(x: f64) -> f64 {
    erf(PI.sqrt() * x)
}

/// sgn(s) - E(x) when sgn(s) and x have the same sign: equals
/// -sgn(s) * erfc(sqrt(pi)|x|), computed without cancellation.
fn sgn_minus_e_matched(s: f64, x: f64) -> f64 {
    s * erfc_pos(PI.sqrt() * x.abs())
}

/// Real coordinates (a, b, y) of v relative to tau: v = a tau - b, y = Im tau.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealCoords {
    pub a: f64,
    pub b: f64,
    pub y: f64,
}

/// Solve v = a tau - b for real a, b.
pub fn real_coords(tau: C64, v: C64) -> EvalResult<RealCoords> {
    if tau.im <= 0.0 {
        return Err(EvalError::UpperHalfPlane);
    }
    let y = tau.im;
    let a = v.im / y;
    let b = a * tau.re - v.re;
    Ok(RealCoords { a, b, y })
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Shared engine for the two Zwegers series.
///
/// Sums terms (sign_factor(k)) * (sgn(s_arg) - E(e_arg)) * e^{-pi i n^2 tau/P - 2 pi i n v}
/// over n = n0 + P k, with P the period and the sign/smoothing arguments
/// supplied per family. Once sgn(s_arg) and the E argument agree in sign,
/// |sgn - E| <= e^{-pi E_arg^2} and the term obeys the Gaussian bound
/// exp(-(pi y / P)(n + P a)^2 - c_fam pi y a^2); the direction stops after
/// five consecutive bounded terms below tolerance.
struct ZwegersSeries {
    period: f64,
    half_degree: f64, // m+1 on the A side, m+1/2 on the B side
}

impl ZwegersSeries {
    fn sum(
        &self,
        tau: C64,
        v: C64,
        tr: &Truncation,
        n_of_k: impl Fn(i64) -> f64,
        sign_of_k: impl Fn(i64) -> f64,
        sgn_arg: impl Fn(f64) -> f64,
    ) -> EvalResult<C64> {
        if tau.im <= 0.0 {
            return Err(EvalError::UpperHalfPlane);
        }
        let rc = real_coords(tau, v)?;
        let (a, y) = (rc.a, rc.y);
        let p = self.period;
        let scale = (y / self.half_degree).sqrt();
        // The Gaussian bound peaks where n + P a = 0; start there so large
        // Im v (for example tau-shifted arguments) cannot strand the walk
        // in a quiet region short of the bulk.
        let center = ((-p * a - n_of_k(0)) / p).round() as i64;
        let mut total = C64::new(0.0, 0.0);
        let mut count = 0usize;
        for dir in [1i64, -1] {
            let mut k = if dir == 1 { center } else { center - 1 };
            let mut calm = 0usize;
            while calm < 5 {
                let n = n_of_k(k);
                let s = sgn(sgn_arg(n));
                let e_arg = (n + p * a) * scale;
                let matched = s * e_arg > 0.0;
                let smooth = if matched {
                    sgn_minus_e_matched(s, e_arg)
                } else {
                    s - gauss_e(e_arg)
                };
                let phase = -PI * I * n * n * tau / p - 2.0 * PI * I * n * v;
                // The exponential grows like e^{pi n^2 y / P} while the sgn-E
                // factor underflows; multiply in log space so the tail never
                // produces inf * 0.
                if smooth != 0.0 {
                    let log_mag = smooth.abs().ln() + phase.re;
                    if log_mag > -745.0 {
                        let term = C64::from_polar(log_mag.exp(), phase.im);
                        total += sign_of_k(k) * smooth.signum() * term;
                    }
                }
                count += 1;
                if count > tr.max_terms {
                    return Err(EvalError::NonConvergent { max_terms: tr.max_terms });
                }
                // |sgn - E| <= e^{-pi e_arg^2} once the two signs agree; combined
                // with the exponential factor this gives the Gaussian bound
                // exp(-(pi y/P)(n+Pa)^2 - pi y P a^2) on both sides.
                let bound = if matched {
                    let w = n + p * a;
                    (-(PI * y / p) * w * w - PI * y * p * a * a).exp()
                } else {
                    f64::INFINITY
                };
                if 2.0 * bound < tr.tail_tol {
                    calm += 1;
                } else {
                    calm = 0;
                }
                k += dir;
            }
        }
        Ok(total)
    }
}

/// Modified Zwegers function R_{j;m+1}(tau, v) for the sl(2|1) side.
pub fn r_a(j: i64, m: i64, tau: C64, v: C64, tr: &Truncation) -> EvalResult<C64> {
    if m < 0 {
        return Err(EvalError::IndexOutOfRange(format!("r_a requires m >= 0, got {m}")));
    }
    let nn = m + 1;
    let series = ZwegersSeries { period: 2.0 * nn as f64, half_degree: nn as f64 };
    // n = -j + 2(m+1)k; sgn argument n + 1/2 + j - 2(m+1) never vanishes.
    series.sum(
        tau,
        v,
        tr,
        |k| (-j + 2 * nn * k) as f64,
        |_| 1.0,
        |n| n + 0.5 + j as f64 - 2.0 * nn as f64,
    )
}

/// Zwegers-type function R^{[B]}_{j+1/2, m+1/2}(tau, v) for the osp(3|2) side.
pub fn r_b(j: i64, m: i64, tau: C64, v: C64, tr: &Truncation) -> EvalResult<C64> {
    if m < 0 {
        return Err(EvalError::IndexOutOfRange(format!("r_b requires m >= 0, got {m}")));
    }
    let p = 2 * m + 1;
    let series = ZwegersSeries { period: p as f64, half_degree: m as f64 + 0.5 };
    // n = (j + 1/2) + (2m+1) k in Z + 1/2; weight (-1)^{n - (j+1/2)} = (-1)^k.
    series.sum(
        tau,
        v,
        tr,
        |k| j as f64 + 0.5 + (p * k) as f64,
        |k| if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 },
        |n| n,
    )
}

/// Principal square root of -i tau; Re(-i tau) = Im tau > 0 on X, so the
/// branch is unambiguous.
pub fn sqrt_minus_i_tau(tau: C64) -> C64 {
    (-I * tau).sqrt()
}

/// a~_j(tau,v) = R_{j;m+1}(tau,v)
///   + i/sqrt(2(m+1)) (-i tau)^{-1/2} e^{2 pi i (m+1) v^2/tau}
///     sum_{k=-s}^{-s+2m+1} e^{-pi i j k/(m+1)} R_{k;m+1}(-1/tau, v/tau).
///
/// Holomorphic in v; the S-image of R is evaluated by literal composition.
pub fn a_tilde_a(j: i64, m: i64, s: i64, tau: C64, v: C64, tr: &Truncation) -> EvalResult<C64> {
    if j < -s || j > -s + 2 * m + 1 {
        return Err(EvalError::IndexOutOfRange(format!(
            "a~ index j = {j} outside [{}, {}]",
            -s,
            -s + 2 * m + 1
        )));
    }
    let nn = (m + 1) as f64;
    let stau = -1.0 / tau;
    let sv = v / tau;
    let mut sum = C64::new(0.0, 0.0);
    for k in -s..=(-s + 2 * m + 1) {
        let phase = (-PI * I * (j * k) as f64 / nn).exp();
        sum += phase * r_a(k, m, stau, sv, tr)?;
    }
    let pref = I / (2.0 * nn).sqrt() / sqrt_minus_i_tau(tau) * (2.0 * PI * I * nn * v * v / tau).exp();
    Ok(r_a(j, m, tau, v, tr)? + pref * sum)
}

/// Osp-side analogue:
/// a~_j = R^B_{j+1/2} + i/sqrt(2m+1) (-i tau)^{-1/2} e^{2 pi i (m+1/2) v^2/tau}
///        sum_{k=0}^{2m} e^{-2 pi i (j+1/2)(k+1/2)/(2m+1)} R^B_{k+1/2}(-1/tau, v/tau).
pub fn a_tilde_b(j: i64, m: i64, tau: C64, v: C64, tr: &Truncation) -> EvalResult<C64> {
    if j < 0 || j > 2 * m {
        return Err(EvalError::IndexOutOfRange(format!("a~ index j = {j} outside [0, {}]", 2 * m)));
    }
    let p = (2 * m + 1) as f64;
    let stau = -1.0 / tau;
    let sv = v / tau;
    let mut sum = C64::new(0.0, 0.0);
    for k in 0..=(2 * m) {
        let phase = (-2.0 * PI * I * ((j as f64 + 0.5) * (k as f64 + 0.5)) / p).exp();
        sum += phase * r_b(k, m, stau, sv, tr)?;
    }
    let pref = I / p.sqrt() / sqrt_minus_i_tau(tau) * (2.0 * PI * I * (m as f64 + 0.5) * v * v / tau).exp();
    Ok(r_b(j, m, tau, v, tr)? + pref * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TR: Truncation = Truncation { tail_tol: 1e-14, max_terms: 10_000, pole_guard: 1e-6 };

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    /// Adaptive Simpson quadrature of 2 e^{-pi u^2} on [0, x].
    fn e_quadrature(x: f64) -> f64 {
        fn f(u: f64) -> f64 {
            2.0 * (-PI * u * u).exp()
        }
        fn simpson(a: f64, b: f64) -> f64 {
            (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
        }
        fn adapt(a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
            let m = 0.5 * (a + b);
            let l = simpson(a, m);
            let r = simpson(m, b);
            if depth > 40 || (l + r - whole).abs() < 15.0 * tol {
                l + r + (l + r - whole) / 15.0
            } else {
                adapt(a, m, l, tol / 2.0, depth + 1) + adapt(m, b, r, tol / 2.0, depth + 1)
            }
        }
        adapt(0.0, x, simpson(0.0, x), 1e-16, 0)
    }

    #[test]
    fn e_at_zero_odd_and_limits() {
        assert_eq!(gauss_e(0.0), 0.0);
        for x in [0.1, 0.7, 1.3, 2.4, 5.0] {
            assert!((gauss_e(-x) + gauss_e(x)).abs() < 1e-16);
        }
        assert!((gauss_e(40.0) - 1.0).abs() < 1e-16);
    }

    #[test]
    fn e_matches_quadrature() {
        for x in [0.05, 0.3, 0.77, 1.0, 1.5, 2.0, 2.5, 3.0, 4.2] {
            let q = e_quadrature(x);
            assert!((gauss_e(x) - q).abs() < 1e-13, "x={x}: {} vs {}", gauss_e(x), q);
        }
    }

    #[test]
    fn real_coords_reconstruct() {
        let tau = c(0.3, 1.1);
        let v = c(0.2, -0.4);
        let rc = real_coords(tau, v).unwrap();
        let back = tau * rc.a - c(rc.b, 0.0);
        assert!((back - v).norm() < 1e-15);
        // Eq identities: 2iy = tau - conj(tau), 2iy a = v - conj(v)
        assert!((2.0 * I * rc.y - (tau - tau.conj())).norm() < 1e-15);
        assert!((2.0 * I * rc.y * rc.a - (v - v.conj())).norm() < 1e-15);
        let rc0 = real_coords(tau, c(0.0, 0.0)).unwrap();
        assert_eq!((rc0.a, rc0.b), (0.0, 0.0));
        let rct = real_coords(c(0.0, 1.0), c(0.0, 1.0)).unwrap();
        assert!((rct.a - 1.0).abs() < 1e-15 && rct.b.abs() < 1e-15);
    }

    #[test]
    fn r_a_periodic_in_v() {
        // Lemma: R(tau, v+1) = R(tau, v); also v+1/2 gives (-1)^j.
        let tau = c(0.2, 1.3);
        let v = c(0.11, 0.21);
        for (j, m) in [(0i64, 0i64), (1, 1), (2, 1), (-1, 2)] {
            let base = r_a(j, m, tau, v, &TR).unwrap();
            let one = r_a(j, m, tau, v + c(1.0, 0.0), &TR).unwrap();
            assert!((one - base).norm() < 1e-11, "j={j} m={m}");
            let half = r_a(j, m, tau, v + c(0.5, 0.0), &TR).unwrap();
            let sign = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            assert!((half - sign * base).norm() < 1e-11, "half-shift j={j} m={m}");
        }
    }

    #[test]
    fn r_a_negation_law() {
        // R_{j;m+1}(tau, v) = -R_{2m+2-j;m+1}(tau, -v)
        let tau = c(-0.15, 1.05);
        let v = c(0.23, -0.08);
        for (j, m) in [(0i64, 1i64), (1, 1), (3, 2)] {
            let l = r_a(j, m, tau, v, &TR).unwrap();
            let r = r_a(2 * m + 2 - j, m, tau, -v, &TR).unwrap();
            assert!((l + r).norm() < 1e-11, "j={j} m={m}");
        }
    }

    #[test]
    fn r_b_v_shift_antiperiod() {
        // R^B(tau, v+1) = -R^B(tau, v)
        let tau = c(0.12, 1.22);
        let v = c(0.09, 0.14);
        for (j, m) in [(0i64, 0i64), (0, 1), (1, 1), (2, 2)] {
            let l = r_b(j, m, tau, v + c(1.0, 0.0), &TR).unwrap();
            let r = r_b(j, m, tau, v, &TR).unwrap();
            assert!((l + r).norm() < 1e-11, "j={j} m={m}");
        }
    }

    #[test]
    fn r_b_reflection() {
        // R^B_{2m-j+1/2}(tau, v) = R^B_{j+1/2}(tau, -v)
        let tau = c(0.0, 1.5);
        let v = c(0.15, 0.0);
        for (j, m) in [(0i64, 1i64), (1, 1), (2, 2)] {
            let l = r_b(2 * m - j, m, tau, v, &TR).unwrap();
            let r = r_b(j, m, tau, -v, &TR).unwrap();
            assert!((l - r).norm() < 1e-11, "j={j} m={m}");
        }
    }

    #[test]
    fn r_is_real_analytic_in_all_four_directions() {
        // finite-difference gradients stabilize under step halving
        let tau = c(0.21, 1.19);
        let v = c(0.13, 0.08);
        let dirs: [Box<dyn Fn(f64) -> (C64, C64)>; 4] = [
            Box::new(move |h| (tau + c(h, 0.0), v)),
            Box::new(move |h| (tau + c(0.0, h), v)),
            Box::new(move |h| (tau, v + c(h, 0.0))),
            Box::new(move |h| (tau, v + c(0.0, h))),
        ];
        for f in [r_a as fn(i64, i64, C64, C64, &Truncation) -> EvalResult<C64>, r_b] {
            for d in &dirs {
                let grad = |h: f64| {
                    let (tp, vp) = d(h);
                    let (tm, vm) = d(-h);
                    (f(1, 1, tp, vp, &TR).unwrap() - f(1, 1, tm, vm, &TR).unwrap()) / (2.0 * h)
                };
                let g1 = grad(1e-4);
                let g2 = grad(5e-5);
                assert!(
                    (g1 - g2).norm() <= 1e-3 * g1.norm().max(1e-6),
                    "gradient unstable: {g1} vs {g2}"
                );
            }
        }
    }

    #[test]
    fn a_tilde_index_ranges() {
        let tau = c(0.0, 1.2);
        let v = c(0.1, 0.0);
        assert!(a_tilde_a(2, 1, 0, tau, v, &TR).is_ok());
        assert!(a_tilde_a(4, 1, 0, tau, v, &TR).is_err());
        assert!(a_tilde_a(-1, 1, 0, tau, v, &TR).is_err());
        assert!(a_tilde_b(3, 1, tau, v, &TR).is_err());
        assert!(a_tilde_b(0, 1, tau, v, &TR).is_ok());
    }
}
