//! Rank-one theta series: the degree-m classical thetas Theta_{j,m}, their
//! alternate (-1)^n analogues Theta^-_{j,m}, Jacobi's four theta functions
//! vartheta_ab, and the Dedekind eta product.
//!
//! Conventions:
//!
//! - `Theta_{j,m}(tau,z,t) = e^{2 pi i m t} sum_n e^{2 pi i m z (n + j/2m)} q^{m(n+j/2m)^2}`
//! - `Theta^-_{j,m}` carries an extra `(-1)^n`; the degree m may be any
//!   positive quarter-integer and j any half-integer.
//! - `vartheta_ab(tau,z) = sum_n exp(pi i (n+a/2)^2 tau + 2 pi i (n+a/2)(z+b/2))`,
//!   a,b in {0,1}. With this normalization vartheta_11 is odd in z; the
//!   convention is pinned by the superdenominator transformation tests.
//! - `eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n)`.
//!
//! All series are truncated by the Gaussian tail rule of `Truncation`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{EvalError, EvalResult};
use crate::halfint::{HalfInt, QuarterInt};
use crate::point::{Truncation, C64};

const I: C64 = Complex64::new(0.0, 1.0);

/// Bilateral sum with a Gaussian tail: walks outward from `center` in both
/// directions and stops a direction after `quiet` consecutive terms whose
/// magnitude bound (doubled, as the geometric safety factor) drops below
/// `tail_tol`.
pub(crate) fn bilateral_sum(
    center: i64,
    tr: &Truncation,
    quiet: usize,
    mut term: impl FnMut(i64) -> (C64, f64),
) -> EvalResult<C64> {
    let mut total = C64::new(0.0, 0.0);
    let mut count = 0usize;
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { center } else { center - 1 };
        let mut calm = 0usize;
        while calm < quiet {
            let (t, bound) = term(n);
            total += t;
            count += 1;
            if count > tr.max_terms {
                return Err(EvalError::NonConvergent { max_terms: tr.max_terms });
            }
            if 2.0 * bound < tr.tail_tol {
                calm += 1;
            } else {
                calm = 0;
            }
            n += dir;
        }
    }
    Ok(total)
}

fn require_upper(tau: C64) -> EvalResult<()> {
    if tau.im <= 0.0 {
        return Err(EvalError::UpperHalfPlane);
    }
    Ok(())
}

/// Core theta series of degree m (> 0) with characteristic x = j/2m and an
/// optional (-1)^n weight.
fn theta_series(minus: bool, x: f64, m: f64, tau: C64, z: C64, t: C64, tr: &Truncation) -> EvalResult<C64> {
    require_upper(tau)?;
    let y = tau.im;
    // |term| = exp(-2 pi m (y w^2 + Im z w)), w = n + x: peak at w = -Im z/(2y)
    let center = (-x - z.im / (2.0 * y)).round() as i64;
    let sum = bilateral_sum(center, tr, 3, |n| {
        let w = n as f64 + x;
        let phase = 2.0 * PI * I * m * (z * w + tau * w * w);
        let mut v = phase.exp();
        if minus && n.rem_euclid(2) == 1 {
            v = -v;
        }
        // |term| = exp(-2 pi m (y w^2 + Im z * w))
        let bound = (-2.0 * PI * m * (y * w * w + z.im * w)).exp();
        (v, bound)
    })?;
    Ok((2.0 * PI * I * m * t).exp() * sum)
}

/// Classical theta function Theta_{j,m} of positive integer degree m,
/// j integral mod 2m.
pub fn theta_jm(j: HalfInt, m: i64, tau: C64, z: C64, t: C64, tr: &Truncation) -> EvalResult<C64> {
    if m <= 0 {
        return Err(EvalError::IndexOutOfRange(format!("theta degree m = {m} must be positive")));
    }
    theta_jm_deg(j, QuarterInt::from_int(m), tau, z, t, tr)
}

/// Theta_{j,m} with an arbitrary positive quarter-integer degree. The
/// appendix transformation formulas mix integral and fractional degrees,
/// so the series is exposed at this generality.
pub fn theta_jm_deg(j: HalfInt, m: QuarterInt, tau: C64, z: C64, t: C64, tr: &Truncation) -> EvalResult<C64> {
    if !m.is_positive() {
        return Err(EvalError::IndexOutOfRange(format!("theta degree m = {m} must be positive")));
    }
    let md = m.to_f64();
    // x = j / 2m, exact in f64 for the index sizes in play
    let x = j.twice() as f64 / (4.0 * md);
    theta_series(false, x, md, tau, z, t, tr)
}

/// Alternate theta Theta^-_{j,m} with the (-1)^n weight; m is a positive
/// quarter-integer, j a half-integer. Theta^-_{j+2ma,m} = (-1)^a Theta^-_{j,m}.
pub fn theta_minus_jm(j: HalfInt, m: QuarterInt, tau: C64, z: C64, t: C64, tr: &Truncation) -> EvalResult<C64> {
    if !m.is_positive() {
        return Err(EvalError::IndexOutOfRange(format!("theta degree m = {m} must be positive")));
    }
    let md = m.to_f64();
    let x = j.twice() as f64 / (4.0 * md);
    theta_series(true, x, md, tau, z, t, tr)
}

/// Jacobi theta vartheta_ab with a, b in {0, 1}.
pub fn jacobi_theta_ab(a: u8, b: u8, tau: C64, z: C64, tr: &Truncation) -> EvalResult<C64> {
    if a > 1 || b > 1 {
        return Err(EvalError::IndexOutOfRange(format!("vartheta characteristics ({a},{b}) not in {{0,1}}")));
    }
    require_upper(tau)?;
    let y = tau.im;
    let ha = a as f64 / 2.0;
    let w0 = z + C64::new(b as f64 / 2.0, 0.0);
    let center = (-ha - z.im / y).round() as i64;
    let sum = bilateral_sum(center, tr, 3, |n| {
        let w = n as f64 + ha;
        let phase = PI * I * (tau * w * w) + 2.0 * PI * I * w * w0;
        let v = phase.exp();
        let bound = (-PI * (y * w * w + 2.0 * z.im * w)).exp();
        (v, bound)
    })?;
    Ok(sum)
}

/// Dedekind eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n).
pub fn dedekind_eta(tau: C64, tr: &Truncation) -> EvalResult<C64> {
    require_upper(tau)?;
    let q = (2.0 * PI * I * tau).exp();
    let mut prod = C64::new(1.0, 0.0);
    let mut qn = C64::new(1.0, 0.0);
    let mut n = 0usize;
    loop {
        n += 1;
        if n > tr.max_terms {
            return Err(EvalError::NonConvergent { max_terms: tr.max_terms });
        }
        qn *= q;
        prod *= C64::new(1.0, 0.0) - qn;
        if qn.norm() < tr.tail_tol {
            break;
        }
    }
    Ok((2.0 * PI * I * tau / 24.0).exp() * prod)
}

/// Zero locus offset of vartheta_ab as a point of C mod (Z + tau Z):
/// vartheta_ab(tau, z) = 0 exactly at z in offset + Z + tau Z.
pub fn vartheta_zero_offset(a: u8, b: u8, tau: C64) -> C64 {
    // vartheta_11 vanishes on the lattice itself; shifting a or b by one
    // moves the zeros by half a period in the respective direction.
    let re = if b == 1 { 0.0 } else { 0.5 };
    let along_tau = if a == 1 { 0.0 } else { 0.5 };
    C64::new(re, 0.0) + tau * along_tau
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Truncation;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    const TR: Truncation = Truncation { tail_tol: 1e-14, max_terms: 10_000, pole_guard: 1e-6 };

    #[test]
    fn reflection_in_z() {
        // Theta_{j,m}(tau,-z) = Theta_{-j,m}(tau,z)
        let tau = c(0.1, 1.2);
        let z = c(0.3, -0.2);
        let l = theta_jm(HalfInt::from_int(1), 1, tau, -z, c(0.0, 0.0), &TR).unwrap();
        let r = theta_jm(HalfInt::from_int(-1), 1, tau, z, c(0.0, 0.0), &TR).unwrap();
        assert!((l - r).norm() < 1e-13);
    }

    #[test]
    fn index_period_2m() {
        let tau = c(-0.2, 0.9);
        let z = c(0.12, 0.05);
        let t = c(0.02, 0.0);
        for m in 1..4 {
            let l = theta_jm(HalfInt::from_int(2 * m), m, tau, z, t, &TR).unwrap();
            let r = theta_jm(HalfInt::ZERO, m, tau, z, t, &TR).unwrap();
            assert!((l - r).norm() < 1e-13, "m = {m}");
        }
    }

    #[test]
    fn z_shift_sign_law() {
        // Theta_{j,m}(tau, z+b) = (-1)^{bj} Theta_{j,m}(tau,z), b integer
        let tau = c(0.3, 1.4);
        let z = c(0.07, 0.11);
        for j in -2i64..=3 {
            for b in [-2i64, 1, 2] {
                let l = theta_jm(HalfInt::from_int(j), 2, tau, z + c(b as f64, 0.0), c(0.0, 0.0), &TR).unwrap();
                let r = theta_jm(HalfInt::from_int(j), 2, tau, z, c(0.0, 0.0), &TR).unwrap()
                    * if (b * j).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                assert!((l - r).norm() < 1e-12 * r.norm().max(1.0));
            }
        }
    }

    #[test]
    fn theta_minus_index_shift() {
        // Theta^-_{j+2ma,m} = (-1)^a Theta^-_{j,m}
        let tau = c(0.2, 1.0);
        let z = c(0.1, -0.03);
        let m = QuarterInt::int_plus_half(1); // degree 3/2
        for a in [-1i64, 1, 2] {
            let j = HalfInt::HALF;
            let shifted = j + HalfInt::from_twice(2 * 3 * a); // 2m*a = 3a
            let l = theta_minus_jm(shifted, m, tau, z, c(0.0, 0.0), &TR).unwrap();
            let r = theta_minus_jm(j, m, tau, z, c(0.0, 0.0), &TR).unwrap()
                * if a.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            assert!((l - r).norm() < 1e-12);
        }
    }

    #[test]
    fn theta_minus_real_on_imaginary_axis() {
        // term-wise conjugation symmetry at purely imaginary tau, real z
        let v = theta_minus_jm(
            HalfInt::HALF,
            QuarterInt::from_times4(2), // m = 1/2
            c(0.0, 2.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            &TR,
        )
        .unwrap();
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn vartheta_11_odd_and_vanishing() {
        let tau = c(0.11, 0.93);
        let z = c(0.21, -0.04);
        let a = jacobi_theta_ab(1, 1, tau, z, &TR).unwrap();
        let b = jacobi_theta_ab(1, 1, tau, -z, &TR).unwrap();
        assert!((a + b).norm() < 1e-13);
        let zero = jacobi_theta_ab(1, 1, tau, c(0.0, 0.0), &TR).unwrap();
        assert!(zero.norm() < 1e-14);
    }

    #[test]
    fn vartheta_10_half_period() {
        // vartheta_{10}(tau, z+1) = -vartheta_{10}(tau, z)
        let tau = c(-0.3, 1.7);
        let z = c(0.4, 0.2);
        let l = jacobi_theta_ab(1, 0, tau, z + c(1.0, 0.0), &TR).unwrap();
        let r = jacobi_theta_ab(1, 0, tau, z, &TR).unwrap();
        assert!((l + r).norm() < 1e-13);
    }

    #[test]
    fn vartheta_zero_offsets() {
        let tau = c(0.17, 1.21);
        for (a, b) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
            let z0 = vartheta_zero_offset(a, b, tau);
            let v = jacobi_theta_ab(a, b, tau, z0, &TR).unwrap();
            assert!(v.norm() < 1e-12, "vartheta_{a}{b} at its declared zero: {v}");
        }
    }

    #[test]
    fn eta_t_shift_phase() {
        // eta(tau+1) = e^{pi i/12} eta(tau)
        let tau = c(0.4, 1.3);
        let l = dedekind_eta(tau + c(1.0, 0.0), &TR).unwrap();
        let r = dedekind_eta(tau, &TR).unwrap() * (PI * I / 12.0).exp();
        assert!((l - r).norm() < 1e-14);
        assert!(dedekind_eta(tau, &TR).unwrap().norm() > 0.0);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(theta_jm(HalfInt::ZERO, 0, c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), &TR).is_err());
        assert!(dedekind_eta(c(0.0, -1.0), &TR).is_err());
        assert!(jacobi_theta_ab(2, 0, c(0.0, 1.0), c(0.0, 0.0), &TR).is_err());
    }
}
