//! Supercharacter numerators for the two rank-2 families and their
//! real-analytic modifications.
//!
//! Family A (sl(2|1)^, atypical integrable weight labelled by m >= s >= 0):
//!
//! ```text
//! Phi1(tau,z1,z2) = sum_j e^{2 pi i (m+1) j (z1+z2)} e^{-2 pi i s z1}
//!                         q^{j^2 (m+1) - j s} / (1 - e^{2 pi i z1} q^j)
//! Phi  = e^{2 pi i (m+1) t} (Phi1(tau,z1,z2) - Phi1(tau,-z2,-z1))
//! ```
//!
//! Family B (osp(3|2)^, weight m Lambda_0):
//!
//! ```text
//! Phi1(tau,z1,z2,t) = e^{2 pi i (m+1/2) t} sum_j (-1)^j
//!     e^{pi i j (2m+1)(z1+z2) + pi i z1} q^{(m+1/2) j^2 + j/2} / (1 - e^{2 pi i z1} q^j)
//! Phi  = Phi1(tau,z1,z2,t) - Phi1(tau,z2,z1,t)
//! ```
//!
//! Both have simple poles in z1 on Z + tau Z with closed-form residues.
//! `phi_add` is the Zwegers correction term, `phi_tilde` the modification
//! that transforms like a Jacobi form, and `g_direct` / `g_via_sum` are the
//! two independent routes to the holomorphic difference G = phi - phi|_S.
//!
//! Both families share the bilinear form (z|z) = 2 z1 z2 in their
//! coordinates, so the SL2 action reads
//! `F|_A(tau,z,t) = (c tau + d)^{-1} F((a tau+b)/(c tau+d), z/(c tau+d), t - c z1 z2/(c tau+d))`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{EvalError, EvalResult};
use crate::halfint::{HalfInt, QuarterInt};
use crate::point::{check_pole_distance, ModularPoint, Truncation, UVPoint, C64};
use crate::theta::{theta_jm, theta_minus_jm};
use crate::zwegers::{a_tilde_a, a_tilde_b, r_a, r_b};

const I: C64 = Complex64::new(0.0, 1.0);

fn e2pii(w: C64) -> C64 {
    (2.0 * PI * I * w).exp()
}

/// The two affine superalgebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// sl(2|1)^; numerators Phi^{[m;s]}.
    A,
    /// osp(3|2)^; numerators Phi^{[B;m]}.
    B,
}

/// Algebra selector plus the denominator of the admissible level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyParams {
    pub family: Family,
    pub m: i64,
    /// Family A only; 0 for family B.
    pub s: i64,
    /// Denominator M of the principal admissible level.
    pub big_m: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl FamilyParams {
    /// Family A with gcd(M, 2m+2) = 1 required when m > 0, and 0 <= s <= m.
    pub fn new_a(m: i64, s: i64, big_m: i64) -> EvalResult<Self> {
        if m < 0 || s < 0 || s > m {
            return Err(EvalError::ConstraintViolation(format!(
                "family A requires 0 <= s <= m, got m={m}, s={s}"
            )));
        }
        if big_m < 1 {
            return Err(EvalError::ConstraintViolation(format!("M = {big_m} must be >= 1")));
        }
        if m > 0 && gcd(big_m, 2 * m + 2) != 1 {
            return Err(EvalError::ConstraintViolation(format!(
                "gcd(M, 2m+2) = gcd({big_m}, {}) != 1",
                2 * m + 2
            )));
        }
        Ok(FamilyParams { family: Family::A, m, s, big_m })
    }

    /// Family B with gcd(M, 4m+2) = 1 (forces M odd).
    pub fn new_b(m: i64, big_m: i64) -> EvalResult<Self> {
        if m < 0 {
            return Err(EvalError::ConstraintViolation(format!("family B requires m >= 0, got {m}")));
        }
        if big_m < 1 {
            return Err(EvalError::ConstraintViolation(format!("M = {big_m} must be >= 1")));
        }
        if gcd(big_m, 4 * m + 2) != 1 {
            return Err(EvalError::ConstraintViolation(format!(
                "gcd(M, 4m+2) = gcd({big_m}, {}) != 1",
                4 * m + 2
            )));
        }
        Ok(FamilyParams { family: Family::B, m, s: 0, big_m })
    }

    /// t-degree of Phi: m+1 for A, m+1/2 for B.
    pub fn index(&self) -> f64 {
        match self.family {
            Family::A => (self.m + 1) as f64,
            Family::B => self.m as f64 + 0.5,
        }
    }
}

/// An element of SL2(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SL2Element {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SL2Element {
    pub const S: SL2Element = SL2Element { a: 0, b: -1, c: 1, d: 0 };
    pub const T: SL2Element = SL2Element { a: 1, b: 1, c: 0, d: 1 };
    pub const IDENTITY: SL2Element = SL2Element { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> EvalResult<Self> {
        if a * d - b * c != 1 {
            return Err(EvalError::ConstraintViolation(format!(
                "det [[{a},{b}],[{c},{d}]] != 1"
            )));
        }
        Ok(SL2Element { a, b, c, d })
    }
}

/// First factor Phi1 of the numerator. Family A ignores the t coordinate
/// (the t prefactor enters through `phi`); family B carries e^{2 pi i (m+1/2) t}.
pub fn phi1(fp: &FamilyParams, p: &ModularPoint, tr: &Truncation) -> EvalResult<C64> {
    phi1_at(fp, p.tau, p.z1, p.z2, p.t, tr)
}

fn phi1_at(fp: &FamilyParams, tau: C64, z1: C64, z2: C64, t: C64, tr: &Truncation) -> EvalResult<C64> {
    if tau.im <= 0.0 {
        return Err(EvalError::UpperHalfPlane);
    }
    check_pole_distance(z1, tau, C64::new(0.0, 0.0), tr.pole_guard)?;
    let m = fp.m as f64;
    // Walk outward from the magnitude peak of the Gaussian numerator; for
    // tau-shifted arguments the bulk sits far from j = 0.
    let y = tau.im;
    let (a2, a1) = match fp.family {
        Family::A => ((m + 1.0) * y, (m + 1.0) * (z1 + z2).im - fp.s as f64 * y),
        Family::B => ((m + 0.5) * y, (2.0 * m + 1.0) * (z1 + z2).im / 2.0 + y / 2.0),
    };
    let center = (-a1 / (2.0 * a2)).round() as i64;
    let mut total = C64::new(0.0, 0.0);
    let mut count = 0usize;
    for dir in [1i64, -1] {
        let mut j: i64 = if dir == 1 { center } else { center - 1 };
        let mut calm = 0usize;
        while calm < 3 {
            let jf = j as f64;
            // Full numerator exponent assembled before exponentiating: the
            // geometric and Gaussian parts cancel in the far tail, and
            // splitting them overflows f64 for shifted arguments.
            let (num_exp, sign) = match fp.family {
                Family::A => (
                    2.0 * PI * I
                        * ((m + 1.0) * jf * (z1 + z2) - fp.s as f64 * z1
                            + tau * ((m + 1.0) * jf * jf - fp.s as f64 * jf)),
                    1.0,
                ),
                Family::B => (
                    PI * I * (jf * (2.0 * m + 1.0) * (z1 + z2) + z1)
                        + 2.0 * PI * I * tau * ((m + 0.5) * jf * jf + 0.5 * jf),
                    if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 },
                ),
            };
            // denominator 1 - e^B with B = 2 pi i (z1 + j tau); for growing
            // e^B divide through by -e^B to keep everything representable
            let b = 2.0 * PI * I * (z1 + jf * tau);
            let term = if b.re <= 0.0 {
                sign * num_exp.exp() / (C64::new(1.0, 0.0) - b.exp())
            } else {
                -sign * (num_exp - b).exp() / (C64::new(1.0, 0.0) - (-b).exp())
            };
            total += term;
            count += 1;
            if count > tr.max_terms {
                return Err(EvalError::NonConvergent { max_terms: tr.max_terms });
            }
            if 2.0 * term.norm() < tr.tail_tol {
                calm += 1;
            } else {
                calm = 0;
            }
            j += dir;
        }
    }
    match fp.family {
        Family::A => Ok(total),
        Family::B => Ok(e2pii((m + 0.5) * t) * total),
    }
}

/// The full numerator Phi (odd combination of two Phi1 evaluations).
pub fn phi(fp: &FamilyParams, p: &ModularPoint, tr: &Truncation) -> EvalResult<C64> {
    match fp.family {
        Family::A => {
            let first = phi1_at(fp, p.tau, p.z1, p.z2, p.t, tr)?;
            let second = phi1_at(fp, p.tau, -p.z2, -p.z1, p.t, tr)?;
            Ok(e2pii((fp.m as f64 + 1.0) * p.t) * (first - second))
        }
        Family::B => {
            let first = phi1_at(fp, p.tau, p.z1, p.z2, p.t, tr)?;
            let second = phi1_at(fp, p.tau, p.z2, p.z1, p.t, tr)?;
            Ok(first - second)
        }
    }
}

/// Zwegers correction term Phi_add in (z1, z2) coordinates:
///
/// - A: (1/2) e^{2 pi i (m+1) t} sum_{j=-s}^{-s+2m+1} R_{j;m+1}(tau,(z1-z2)/2)
///        (Theta_{j,m+1} - Theta_{-j,m+1})(tau, z1+z2)
/// - B: (1/2) e^{2 pi i (m+1/2) t} sum_{j=0}^{2m} R^B_{j+1/2,m+1/2}(tau,(z1-z2)/2)
///        (Theta^-_{j+1/2} + Theta^-_{-(j+1/2)})(tau, z1+z2)
pub fn phi_add(fp: &FamilyParams, p: &ModularPoint, tr: &Truncation) -> EvalResult<C64> {
    let v = (p.z1 - p.z2) / 2.0;
    let w = p.z1 + p.z2;
    let zero = C64::new(0.0, 0.0);
    let mut sum = C64::new(0.0, 0.0);
    match fp.family {
        Family::A => {
            let m = fp.m;
            for j in -fp.s..=(-fp.s + 2 * m + 1) {
                let tdiff = theta_jm(HalfInt::from_int(j), m + 1, p.tau, w, zero, tr)?
                    - theta_jm(HalfInt::from_int(-j), m + 1, p.tau, w, zero, tr)?;
                if tdiff.norm() == 0.0 && j == 0 {
                    continue;
                }
                sum += r_a(j, m, p.tau, v, tr)? * tdiff;
            }
            Ok(0.5 * e2pii((m as f64 + 1.0) * p.t) * sum)
        }
        Family::B => {
            let m = fp.m;
            let deg = QuarterInt::int_plus_half(m);
            for j in 0..=(2 * m) {
                let jj = HalfInt::from_twice(2 * j + 1); // j + 1/2
                let tsum = theta_minus_jm(jj, deg, p.tau, w, zero, tr)?
                    + theta_minus_jm(-jj, deg, p.tau, w, zero, tr)?;
                if tsum.norm() > 0.0 {
                    sum += r_b(j, m, p.tau, v, tr)? * tsum;
                }
            }
            Ok(0.5 * e2pii((m as f64 + 0.5) * p.t) * sum)
        }
    }
}

/// Modification Phi~ = Phi + Phi_add; transforms like a Jacobi form.
pub fn phi_tilde(fp: &FamilyParams, p: &ModularPoint, tr: &Truncation) -> EvalResult<C64> {
    Ok(phi(fp, p, tr)? + phi_add(fp, p, tr)?)
}

/// Weight-one slash action with index form (z|z) = 2 z1 z2:
/// F|_A(p) = (c tau + d)^{-1} F((a tau+b)/(c tau+d), z/(c tau+d), t - c z1 z2 /(c tau+d)).
pub fn apply_sl2<F>(g: &SL2Element, f: F, p: &ModularPoint) -> EvalResult<C64>
where
    F: Fn(&ModularPoint) -> EvalResult<C64>,
{
    let (a, b, c, d) = (g.a as f64, g.b as f64, g.c as f64, g.d as f64);
    let den = c * p.tau + d;
    let image = ModularPoint::new(
        (a * p.tau + b) / den,
        p.z1 / den,
        p.z2 / den,
        p.t - c * p.z1 * p.z2 / den,
    )?;
    Ok(f(&image)? / den)
}

/// Phi composed with S, by literal composition (used for both the
/// meromorphic Phi and the real-analytic Phi~).
pub fn slash_s<F>(f: F, p: &ModularPoint) -> EvalResult<C64>
where
    F: Fn(&ModularPoint) -> EvalResult<C64>,
{
    apply_sl2(&SL2Element::S, f, p)
}

/// (u, v) coordinates of the family: A has z1 = v-u, z2 = -v-u;
/// B has z1 = u+v, z2 = u-v.
pub fn uv_map(fp: &FamilyParams, p: &ModularPoint) -> UVPoint {
    let (u, v) = match fp.family {
        Family::A => (-(p.z1 + p.z2) / 2.0, (p.z1 - p.z2) / 2.0),
        Family::B => ((p.z1 + p.z2) / 2.0, (p.z1 - p.z2) / 2.0),
    };
    UVPoint { tau: p.tau, u, v, t: p.t }
}

/// Inverse of `uv_map`.
pub fn uv_unmap(fp: &FamilyParams, up: &UVPoint) -> ModularPoint {
    let (z1, z2) = match fp.family {
        Family::A => (up.v - up.u, -up.v - up.u),
        Family::B => (up.u + up.v, up.u - up.v),
    };
    ModularPoint { tau: up.tau, z1, z2, t: up.t }
}

/// G = phi - phi|_S evaluated directly from two Phi evaluations.
pub fn g_direct(fp: &FamilyParams, up: &UVPoint, tr: &Truncation) -> EvalResult<C64> {
    let p = uv_unmap(fp, up);
    let direct = phi(fp, &p, tr)?;
    let slashed = slash_s(|q| phi(fp, q, tr), &p)?;
    Ok(direct - slashed)
}

/// G through the closed-form coefficient expansion:
///
/// - A: (1/2) e^{2 pi i (m+1) t} sum_j a~_j(tau,v)(Theta_{j,m+1}-Theta_{-j,m+1})(tau,2u)
/// - B: (1/2) e^{2 pi i (m+1/2) t} sum_j a~_{2m-j}(tau,v)(Theta^-_{j+1/2}+Theta^-_{-(j+1/2)})(tau,2u)
pub fn g_via_sum(fp: &FamilyParams, up: &UVPoint, tr: &Truncation) -> EvalResult<C64> {
    let zero = C64::new(0.0, 0.0);
    let mut sum = C64::new(0.0, 0.0);
    match fp.family {
        Family::A => {
            let m = fp.m;
            for j in -fp.s..=(-fp.s + 2 * m + 1) {
                let tdiff = theta_jm(HalfInt::from_int(j), m + 1, up.tau, 2.0 * up.u, zero, tr)?
                    - theta_jm(HalfInt::from_int(-j), m + 1, up.tau, 2.0 * up.u, zero, tr)?;
                if tdiff.norm() > 0.0 {
                    sum += a_tilde_a(j, m, fp.s, up.tau, up.v, tr)? * tdiff;
                }
            }
            Ok(0.5 * e2pii((m as f64 + 1.0) * up.t) * sum)
        }
        Family::B => {
            let m = fp.m;
            let deg = QuarterInt::int_plus_half(m);
            for j in 0..=(2 * m) {
                let jj = HalfInt::from_twice(2 * j + 1);
                let tsum = theta_minus_jm(jj, deg, up.tau, 2.0 * up.u, zero, tr)?
                    + theta_minus_jm(-jj, deg, up.tau, 2.0 * up.u, zero, tr)?;
                if tsum.norm() > 0.0 {
                    sum += a_tilde_b(2 * m - j, m, up.tau, up.v, tr)? * tsum;
                }
            }
            Ok(0.5 * e2pii((m as f64 + 0.5) * up.t) * sum)
        }
    }
}

/// Closed-form residue of Phi1 in z1 at z1 = n + j tau:
/// A: -(1/2 pi i) e^{-2 pi i j (m+1) z2};  B: (-1)^{(j+1)(n+1)}/(2 pi i) e^{-pi i j (2m+1) z2}.
pub fn residue_at_pole(fp: &FamilyParams, n: i64, j: i64, tau: C64, z2: C64) -> EvalResult<C64> {
    if tau.im <= 0.0 {
        return Err(EvalError::UpperHalfPlane);
    }
    let two_pi_i = 2.0 * PI * I;
    match fp.family {
        Family::A => Ok(-e2pii(-(j as f64) * (fp.m as f64 + 1.0) * z2) / two_pi_i),
        Family::B => {
            let sign = if ((j + 1) * (n + 1)).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            Ok(sign * (PI * I * (-(j as f64)) * (2.0 * fp.m as f64 + 1.0) * z2).exp() / two_pi_i)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Truncation;

    const TR: Truncation = Truncation { tail_tol: 1e-14, max_terms: 20_000, pole_guard: 1e-6 };

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pt(tau: C64, z1: C64, z2: C64, t: C64) -> ModularPoint {
        ModularPoint::new(tau, z1, z2, t).unwrap()
    }

    #[test]
    fn family_params_constraints() {
        assert!(FamilyParams::new_a(1, 0, 3).is_ok());
        assert!(FamilyParams::new_a(1, 2, 3).is_err());
        assert!(FamilyParams::new_a(1, 0, 2).is_err()); // gcd(2,4) != 1
        assert!(FamilyParams::new_a(0, 0, 4).is_ok()); // m=0: no gcd constraint
        assert!(FamilyParams::new_b(1, 5).is_ok());
        assert!(FamilyParams::new_b(1, 2).is_err()); // M must be odd
        assert!(FamilyParams::new_b(1, 3).is_err()); // gcd(3, 6) = 3
    }

    #[test]
    fn phi_antisymmetry_fixed_points() {
        let t = c(0.07, 0.0);
        let tau = c(0.2, 1.1);
        let fa = FamilyParams::new_a(1, 0, 1).unwrap();
        let z = c(0.31, 0.12);
        let va = phi(&fa, &pt(tau, z, -z, t), &TR).unwrap();
        assert!(va.norm() < 1e-12, "A fixed point: {va}");
        let fb = FamilyParams::new_b(1, 1).unwrap();
        let vb = phi(&fb, &pt(tau, z, z, t), &TR).unwrap();
        assert!(vb.norm() < 1e-12, "B fixed point: {vb}");
    }

    #[test]
    fn phi_a_periodicity_and_elliptic() {
        // Lemma-level laws: Phi(tau+1) = Phi; Phi(z+ints) = Phi;
        // Phi(z1+j tau, z2+j tau) = q^{-j^2(m+1)} e^{-2 pi i j(m+1)(z1+z2)} Phi.
        let fa = FamilyParams::new_a(2, 1, 1).unwrap();
        let tau = c(-0.13, 0.97);
        let p = pt(tau, c(0.21, 0.05), c(-0.37, 0.11), c(0.03, 0.0));
        let base = phi(&fa, &p, &TR).unwrap();
        let tshift = phi(&fa, &pt(tau + c(1.0, 0.0), p.z1, p.z2, p.t), &TR).unwrap();
        assert!((tshift - base).norm() < 1e-10 * base.norm());
        let zshift = phi(&fa, &pt(tau, p.z1 + c(2.0, 0.0), p.z2 - c(1.0, 0.0), p.t), &TR).unwrap();
        assert!((zshift - base).norm() < 1e-10 * base.norm());
        let j = 1.0;
        let ell = phi(&fa, &pt(tau, p.z1 + j * tau, p.z2 + j * tau, p.t), &TR).unwrap();
        let factor = e2pii(-j * j * 3.0 * tau - j * 3.0 * (p.z1 + p.z2));
        assert!((ell - factor * base).norm() < 1e-9 * ell.norm().max(base.norm()));
    }

    #[test]
    fn phi_b_laws() {
        // Lemma-level: Phi(-z1,-z2) = -Phi; Phi(z1+a, z2+b) = (-1)^a Phi for a = b mod 2;
        // Phi(z1+j tau, z2+j tau) = (-1)^j e^{-pi i j(2m+1)(z1+z2)} q^{-j^2(m+1/2)} Phi.
        let fb = FamilyParams::new_b(1, 1).unwrap();
        let tau = c(0.31, 1.23);
        let p = pt(tau, c(0.17, -0.06), c(-0.29, 0.14), c(0.01, 0.0));
        let base = phi(&fb, &p, &TR).unwrap();
        let negated = phi(&fb, &pt(tau, -p.z1, -p.z2, p.t), &TR).unwrap();
        assert!((negated + base).norm() < 1e-10 * base.norm());
        let shifted = phi(&fb, &pt(tau, p.z1 + c(1.0, 0.0), p.z2 + c(3.0, 0.0), p.t), &TR).unwrap();
        assert!((shifted + base).norm() < 1e-10 * base.norm());
        let j = 1.0;
        let ell = phi(&fb, &pt(tau, p.z1 + j * tau, p.z2 + j * tau, p.t), &TR).unwrap();
        let factor = -(PI * I * (-j) * 3.0 * (p.z1 + p.z2)).exp() * e2pii(-j * j * 1.5 * tau);
        assert!((ell - factor * base).norm() < 1e-9 * ell.norm().max(base.norm()));
    }

    #[test]
    fn phi_add_b_m0_vanishes() {
        let fb = FamilyParams::new_b(0, 1).unwrap();
        let tau = c(0.11, 1.41);
        for k in 0..5 {
            let z1 = c(0.1 + 0.03 * k as f64, 0.05);
            let z2 = c(-0.22, 0.08 - 0.02 * k as f64);
            let v = phi_add(&fb, &pt(tau, z1, z2, c(0.0, 0.0)), &TR).unwrap();
            assert!(v.norm() < 1e-12, "Phi_add^[B;0] = {v}");
        }
    }

    #[test]
    fn sl2_identity_is_noop() {
        let fa = FamilyParams::new_a(1, 1, 1).unwrap();
        let p = pt(c(0.2, 1.2), c(0.11, 0.04), c(-0.31, 0.09), c(0.0, 0.0));
        let direct = phi(&fa, &p, &TR).unwrap();
        let via = apply_sl2(&SL2Element::IDENTITY, |q| phi(&fa, q, &TR), &p).unwrap();
        assert!((direct - via).norm() < 1e-13);
        assert!(SL2Element::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn uv_round_trip() {
        for fp in [FamilyParams::new_a(1, 0, 1).unwrap(), FamilyParams::new_b(1, 1).unwrap()] {
            let p = pt(c(0.3, 1.5), c(0.21, -0.13), c(-0.08, 0.27), c(0.05, 0.01));
            let back = uv_unmap(&fp, &uv_map(&fp, &p));
            assert!((back.z1 - p.z1).norm() < 1e-15 && (back.z2 - p.z2).norm() < 1e-15);
        }
        // A: z1 = z2 = 0.4 gives u = -0.4, v = 0
        let fa = FamilyParams::new_a(0, 0, 1).unwrap();
        let up = uv_map(&fa, &pt(c(0.0, 1.0), c(0.4, 0.0), c(0.4, 0.0), c(0.0, 0.0)));
        assert!((up.u - c(-0.4, 0.0)).norm() < 1e-15 && up.v.norm() < 1e-15);
        // B: z1 = z2 gives v = 0
        let fb = FamilyParams::new_b(0, 1).unwrap();
        let upb = uv_map(&fb, &pt(c(0.0, 1.0), c(0.4, 0.0), c(0.4, 0.0), c(0.0, 0.0)));
        assert!(upb.v.norm() < 1e-15);
    }

    #[test]
    fn g_routes_agree_family_a() {
        let tau = c(0.12, 1.07);
        for (m, s) in [(0i64, 0i64), (1, 0), (1, 1), (2, 1)] {
            let fp = FamilyParams::new_a(m, s, 1).unwrap();
            let up = UVPoint::new(tau, c(0.13, 0.21), c(0.23, -0.11), c(0.02, 0.0)).unwrap();
            let d = g_direct(&fp, &up, &TR).unwrap();
            let v = g_via_sum(&fp, &up, &TR).unwrap();
            let denom = d.norm().max(v.norm()).max(1.0);
            assert!((d - v).norm() / denom < 1e-11, "A m={m} s={s}: {d} vs {v}");
        }
    }

    #[test]
    fn g_routes_agree_family_b() {
        let tau = c(-0.21, 1.19);
        for m in [0i64, 1, 2] {
            let fp = FamilyParams::new_b(m, 1).unwrap();
            let up = UVPoint::new(tau, c(0.17, 0.08), c(0.06, -0.19), c(0.01, 0.0)).unwrap();
            let d = g_direct(&fp, &up, &TR).unwrap();
            let v = g_via_sum(&fp, &up, &TR).unwrap();
            let denom = d.norm().max(v.norm()).max(1.0);
            assert!((d - v).norm() / denom < 1e-11, "B m={m}: {d} vs {v}");
        }
    }

    #[test]
    fn pole_guard_rejects() {
        let fa = FamilyParams::new_a(1, 0, 1).unwrap();
        let tau = c(0.2, 1.2);
        let p = pt(tau, tau + c(1.0, 1e-9), c(0.3, 0.1), c(0.0, 0.0));
        assert!(matches!(phi1(&fa, &p, &TR), Err(EvalError::PoleProximity { .. })));
    }
}
