//! Formal q-expansions at fixed elliptic variables.
//!
//! For the holomorphic objects (eta, the rank-one thetas, Jacobi's
//! vartheta_ab, and Phi_1 in its geometric regime Im z1 > 0) the q-grading
//! is exact: every coefficient carries its rational exponent, and the
//! coefficients come from formally truncated summation, never from
//! numerical differentiation. Real-analytic objects have no q-expansion
//! and are rejected upstream with `NotExpandable`.

use num_complex::Complex64;
use num_rational::Rational64;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{EvalError, EvalResult};
use crate::halfint::{HalfInt, QuarterInt};
use crate::numerators::{Family, FamilyParams};
use crate::point::C64;

const I: C64 = Complex64::new(0.0, 1.0);
type Q = Rational64;

/// A truncated q-expansion: ascending exact exponents with complex
/// coefficients (exactly +-1 patterns degrade gracefully to floats).
#[derive(Debug, Clone, PartialEq)]
pub struct QExpansion {
    pub terms: Vec<(Q, C64)>,
}

impl QExpansion {
    /// Numerical evaluation at nome q = e^{2 pi i tau}; a direct consistency
    /// hook against the analytic evaluators.
    pub fn eval(&self, tau: C64) -> C64 {
        self.terms
            .iter()
            .map(|(e, c)| c * (2.0 * PI * I * tau * (*e.numer() as f64 / *e.denom() as f64)).exp())
            .sum()
    }
}

fn collect(map: BTreeMap<Q, C64>, order: usize) -> QExpansion {
    QExpansion {
        terms: map
            .into_iter()
            .filter(|(_, c)| c.norm() > 0.0)
            .take(order)
            .collect(),
    }
}

/// eta = q^{1/24} prod (1 - q^n): pentagonal-number expansion,
/// exponents 1/24 + k(3k+-1)/2 with signs (-1)^k.
pub fn qexp_eta(order: usize) -> QExpansion {
    let mut map = BTreeMap::new();
    let base = Q::new(1, 24);
    let mut k = 0i64;
    loop {
        for pent in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            map.entry(base + Q::from_integer(pent)).or_insert(C64::new(sign, 0.0));
        }
        // enough candidates below the order-th exponent
        if map.len() > order + 2 && k > order as i64 {
            break;
        }
        k += 1;
        if k > 4 * order as i64 + 8 {
            break;
        }
    }
    collect(map, order)
}

/// Theta_{j,m} (or the alternate variant) at fixed z: exponents
/// (2mn + j)^2 / (4m), coefficients (+-1)^n e^{2 pi i m z (n + j/2m)}.
pub fn qexp_theta(
    j: HalfInt,
    m: QuarterInt,
    minus: bool,
    z: C64,
    order: usize,
) -> EvalResult<QExpansion> {
    if !m.is_positive() {
        return Err(EvalError::IndexOutOfRange(format!("degree m = {m} must be positive")));
    }
    // m = m4/4 and j = j2/2 give x = j/(2m) = j2/m4 and the exact exponent
    // m (n + x)^2 = (m4 n + j2)^2 / (4 m4)
    let m4 = m.times4();
    let j2 = j.twice();
    let mut map: BTreeMap<Q, C64> = BTreeMap::new();
    let lim = 2 * order as i64 + 2 * m4.abs() + j2.abs() + 8;
    for n in -lim..=lim {
        let num = m4 * n + j2;
        let expo = Q::new(num * num, 4 * m4);
        let x = j2 as f64 / m4 as f64;
        let coeff = (2.0 * PI * I * m.to_f64() * z * (n as f64 + x)).exp()
            * if minus && n.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
        *map.entry(expo).or_insert(C64::new(0.0, 0.0)) += coeff;
    }
    Ok(collect(map, order))
}

/// vartheta_ab at fixed z: exponents (n + a/2)^2 / 2.
pub fn qexp_vartheta(a: u8, b: u8, z: C64, order: usize) -> EvalResult<QExpansion> {
    if a > 1 || b > 1 {
        return Err(EvalError::IndexOutOfRange(format!("characteristics ({a},{b})")));
    }
    let mut map: BTreeMap<Q, C64> = BTreeMap::new();
    let lim = 2 * order as i64 + 8;
    for n in -lim..=lim {
        let num = 2 * n + a as i64;
        let expo = Q::new(num * num, 8);
        let w = n as f64 + a as f64 / 2.0;
        let coeff = (2.0 * PI * I * w * (z + C64::new(b as f64 / 2.0, 0.0))).exp();
        *map.entry(expo).or_insert(C64::new(0.0, 0.0)) += coeff;
    }
    Ok(collect(map, order))
}

/// Phi_1 at fixed (z1, z2) with Im z1 > 0, through the geometric expansion
/// of the denominators (the j >= 0 terms expand in positive powers, the
/// j < 0 terms in negative ones, as in the admissible decomposition proofs).
pub fn qexp_phi1(fp: &FamilyParams, z1: C64, z2: C64, order: usize) -> EvalResult<QExpansion> {
    if z1.im <= 0.0 {
        return Err(EvalError::NotExpandable(
            "Phi_1 q-expansion requires Im z1 > 0 for the geometric expansion".into(),
        ));
    }
    let mut map: BTreeMap<Q, C64> = BTreeMap::new();
    // exponent cap: grow until we安 have enough distinct exponents
    let mut cap = Q::from_integer(order as i64 + 2);
    loop {
        map.clear();
        let capf = *cap.numer() as f64 / *cap.denom() as f64;
        let jmax = (2.0 + (capf / fp.index().max(0.5)).sqrt() + fp.s.unsigned_abs() as f64) as i64 + 2;
        for j in -jmax..=jmax {
            let (qj, phase_j, sign_j): (Q, C64, f64) = match fp.family {
                Family::A => (
                    Q::from_integer((fp.m + 1) * j * j - fp.s * j),
                    (2.0 * PI * I * ((fp.m + 1) as f64 * j as f64 * (z1 + z2) - fp.s as f64 * z1)).exp(),
                    1.0,
                ),
                Family::B => (
                    Q::new((2 * fp.m + 1) * j * j + j, 2),
                    (PI * I * (j as f64 * (2 * fp.m + 1) as f64 * (z1 + z2) + z1)).exp(),
                    if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 },
                ),
            };
            if j >= 0 {
                // 1/(1 - e^{2 pi i z1} q^j) = sum_{r >= 0} e^{2 pi i r z1} q^{jr}
                let mut r = 0i64;
                loop {
                    let expo = qj + Q::from_integer(j * r);
                    if expo > cap {
                        if j > 0 || r > 4 * order as i64 + 8 {
                            break;
                        }
                    }
                    if expo <= cap {
                        let coeff = sign_j * phase_j * (2.0 * PI * I * r as f64 * z1).exp();
                        *map.entry(expo).or_insert(C64::new(0.0, 0.0)) += coeff;
                    }
                    if j == 0 && (2.0 * PI * I * r as f64 * z1).exp().norm() < 1e-18 {
                        break;
                    }
                    r += 1;
                    if j == 0 && r > 100_000 {
                        break;
                    }
                }
            } else {
                // = -sum_{r >= 1} e^{-2 pi i r z1} q^{-jr}
                let mut r = 1i64;
                loop {
                    let expo = qj + Q::from_integer(-j * r);
                    if expo > cap {
                        break;
                    }
                    let coeff = -sign_j * phase_j * (-2.0 * PI * I * r as f64 * z1).exp();
                    *map.entry(expo).or_insert(C64::new(0.0, 0.0)) += coeff;
                    r += 1;
                }
            }
        }
        let distinct = map.iter().filter(|(_, c)| c.norm() > 1e-18).count();
        if distinct >= order || cap > Q::from_integer(64 + order as i64) {
            break;
        }
        cap = cap + Q::from_integer(4);
    }
    Ok(collect(map, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerators::phi1;
    use crate::point::{ModularPoint, Truncation};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn eta_pentagonal_pattern() {
        let x = qexp_eta(5);
        let expos: Vec<Q> = x.terms.iter().map(|t| t.0).collect();
        assert_eq!(
            expos,
            vec![Q::new(1, 24), Q::new(25, 24), Q::new(49, 24), Q::new(121, 24), Q::new(169, 24)]
        );
        let signs: Vec<f64> = x.terms.iter().map(|t| t.1.re).collect();
        assert_eq!(signs, vec![1.0, -1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn theta_squares() {
        // Theta_{0,1} at z = 0: 1 + 2q + 2q^4 + 2q^9 ...
        let x = qexp_theta(HalfInt::ZERO, QuarterInt::from_int(1), false, c(0.0, 0.0), 4).unwrap();
        let expos: Vec<Q> = x.terms.iter().map(|t| t.0).collect();
        assert_eq!(expos, vec![Q::new(0, 1), Q::new(1, 1), Q::new(4, 1), Q::new(9, 1)]);
        assert!((x.terms[0].1 - c(1.0, 0.0)).norm() < 1e-15);
        for t in &x.terms[1..] {
            assert!((t.1 - c(2.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn expansions_evaluate_to_the_functions() {
        let tau = c(0.1, 1.3);
        let tr = Truncation::default();
        // eta
        let eta_series = qexp_eta(40).eval(tau);
        let eta_direct = crate::theta::dedekind_eta(tau, &tr).unwrap();
        assert!((eta_series - eta_direct).norm() < 1e-12);
        // vartheta
        let z = c(0.21, 0.05);
        let v = qexp_vartheta(1, 0, z, 30).unwrap().eval(tau);
        let vd = crate::theta::jacobi_theta_ab(1, 0, tau, z, &tr).unwrap();
        assert!((v - vd).norm() < 1e-12);
        // phi1, family A, Im z1 > 0
        let fp = FamilyParams::new_a(1, 1, 1).unwrap();
        let (z1, z2) = (c(0.2, 0.3), c(-0.11, 0.02));
        let p = qexp_phi1(&fp, z1, z2, 60).unwrap().eval(tau);
        let pd = phi1(&fp, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr).unwrap();
        assert!((p - pd).norm() < 1e-9, "{p} vs {pd}");
        // family B too
        let fb = FamilyParams::new_b(1, 1).unwrap();
        let pb = qexp_phi1(&fb, z1, z2, 60).unwrap().eval(tau);
        let pbd = phi1(&fb, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr).unwrap();
        assert!((pb - pbd).norm() < 1e-9, "{pb} vs {pbd}");
    }

    #[test]
    fn phi1_requires_upper_z1() {
        let fp = FamilyParams::new_a(1, 0, 1).unwrap();
        assert!(matches!(
            qexp_phi1(&fp, c(0.3, -0.1), c(0.0, 0.0), 5),
            Err(EvalError::NotExpandable(_))
        ));
    }
}
