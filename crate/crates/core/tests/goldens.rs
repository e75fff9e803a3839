//! Frozen golden values, each computed first by an independent brute-force
//! oracle (direct high-cutoff summation, adaptive quadrature, lattice
//! enumeration) and then required of the library to 1e-11 relative.
//!
//! The oracle implementations below share no code with the library's
//! evaluators; they use fixed cutoffs instead of tail bounds.

use num_complex::Complex64 as C64;
use num_rational::Rational64;
use std::f64::consts::PI;

use mocktheta_core::characters::{
    psi, reduction_character, reduction_denominator, CharacterIndex, Reduction, SectorLabel,
};
use mocktheta_core::halfint::{HalfInt, QuarterInt};
use mocktheta_core::lattice::{
    lattice_theta, mock_theta_general, IsotropicSet, Lattice, LatticeWeight, VariantSign,
};
use mocktheta_core::numerators::{g_direct, g_via_sum, phi, phi1, phi_add, FamilyParams};
use mocktheta_core::point::{ModularPoint, Truncation, UVPoint};
use mocktheta_core::theta::{dedekind_eta, jacobi_theta_ab, theta_jm, theta_minus_jm};
use mocktheta_core::verifier::contour_residue;
use mocktheta_core::zwegers::{a_tilde_a, a_tilde_b, gauss_e, r_a, r_b};

const I: C64 = C64::new(0.0, 1.0);

fn tr() -> Truncation {
    Truncation::default()
}

fn e(w: C64) -> C64 {
    w.exp()
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn assert_close(label: &str, value: C64, frozen: C64, rel: f64) {
    let denom = frozen.norm().max(1e-30);
    assert!(
        (value - frozen).norm() / denom <= rel,
        "{label}: {value} vs frozen {frozen} (rel {:.3e})",
        (value - frozen).norm() / denom
    );
}

// ---------------------------------------------------------------- oracles

fn erf_series(t: f64) -> f64 {
    let t2 = t * t;
    let (mut term, mut sum, mut n) = (1.0, 1.0, 0u32);
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

fn erfc_cf(t: f64) -> f64 {
    if t >= 26.5 {
        return 0.0;
    }
    let mut f = 0.0;
    for k in (1..=300u32).rev() {
        f = (k as f64 / 2.0) / (t + f);
    }
    (-t * t).exp() / PI.sqrt() / (t + f)
}

fn erf_oracle(t: f64) -> f64 {
    let a = t.abs();
    if a < 1.0 {
        erf_series(t)
    } else {
        (1.0 - erfc_cf(a)) * t.signum()
    }
}

fn sgn_minus_e_oracle(sg: f64, x: f64) -> f64 {
    if sg * x > 0.0 {
        let t = PI.sqrt() * x.abs();
        if t < 1.0 {
            sg * (1.0 - erf_series(t))
        } else {
            sg * erfc_cf(t)
        }
    } else {
        sg - erf_oracle(PI.sqrt() * x)
    }
}

/// Adaptive Simpson for E(x) = 2 int_0^x e^{-pi u^2} du.
fn gauss_e_quadrature(x: f64) -> f64 {
    fn f(u: f64) -> f64 {
        2.0 * (-PI * u * u).exp()
    }
    fn simpson(a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn adapt(a: f64, b: f64, whole: f64, tol: f64, d: u32) -> f64 {
        let m = 0.5 * (a + b);
        let l = simpson(a, m);
        let r = simpson(m, b);
        if d > 46 || (l + r - whole).abs() < 15.0 * tol {
            l + r + (l + r - whole) / 15.0
        } else {
            adapt(a, m, l, tol / 2.0, d + 1) + adapt(m, b, r, tol / 2.0, d + 1)
        }
    }
    adapt(0.0, x, simpson(0.0, x), 1e-16, 0)
}

/// Direct |n| <= 60 theta sum.
fn theta_oracle(j: f64, m: f64, minus: bool, tau: C64, z: C64, t: C64) -> C64 {
    let x = j / (2.0 * m);
    let mut acc = c(0.0, 0.0);
    for n in -60i64..=60 {
        let w = n as f64 + x;
        let sgn = if minus && n.rem_euclid(2) == 1 { -1.0 } else { 1.0 };
        acc += sgn * e(2.0 * PI * I * m * (z * w + tau * w * w));
    }
    e(2.0 * PI * I * m * t) * acc
}

/// Direct |n| <= 80 modified Zwegers sum, A side.
fn r_a_oracle(j: i64, m: i64, tau: C64, v: C64) -> C64 {
    let nn = (m + 1) as f64;
    let p = 2.0 * nn;
    let y = tau.im;
    let a = v.im / y;
    let mut s = c(0.0, 0.0);
    for k in -200i64..=200 {
        let n = -j as f64 + p * k as f64;
        if n.abs() > 80.0 {
            continue;
        }
        let sg = if n + 0.5 + j as f64 - p > 0.0 { 1.0 } else { -1.0 };
        let sm = sgn_minus_e_oracle(sg, (n + p * a) * (y / nn).sqrt());
        if sm != 0.0 {
            let ph = -PI * I * n * n * tau / p - 2.0 * PI * I * n * v;
            let lm = sm.abs().ln() + ph.re;
            if lm > -745.0 {
                s += sm.signum() * C64::from_polar(lm.exp(), ph.im);
            }
        }
    }
    s
}

/// Direct |n| <= 80 sum, B side.
fn r_b_oracle(j: i64, m: i64, tau: C64, v: C64) -> C64 {
    let p = (2 * m + 1) as f64;
    let hd = m as f64 + 0.5;
    let y = tau.im;
    let a = v.im / y;
    let mut s = c(0.0, 0.0);
    for k in -200i64..=200 {
        let n = j as f64 + 0.5 + p * k as f64;
        if n.abs() > 80.0 {
            continue;
        }
        let sg = if n > 0.0 { 1.0 } else { -1.0 };
        let sm = sgn_minus_e_oracle(sg, (n + p * a) * (y / hd).sqrt());
        let w = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        if sm != 0.0 {
            let ph = -PI * I * n * n * tau / p - 2.0 * PI * I * n * v;
            let lm = sm.abs().ln() + ph.re;
            if lm > -745.0 {
                s += w * sm.signum() * C64::from_polar(lm.exp(), ph.im);
            }
        }
    }
    s
}

/// Direct |j| <= 60 sum over the Eq-style family-A numerator factor.
fn phi_a_oracle(m: i64, sv: i64, tau: C64, z1: C64, z2: C64) -> C64 {
    let n = (m + 1) as f64;
    let one = c(1.0, 0.0);
    let phi1d = |w1: C64, w2: C64| -> C64 {
        let mut acc = c(0.0, 0.0);
        for j in -60i64..=60 {
            let jf = j as f64;
            let wn = 2.0 * PI * I * (n * jf * (w1 + w2) - sv as f64 * w1 + tau * (n * jf * jf - sv as f64 * jf));
            let wd = 2.0 * PI * I * (w1 + jf * tau);
            acc += if wd.re <= 0.0 {
                if wn.re > -745.0 { e(wn) / (one - e(wd)) } else { c(0.0, 0.0) }
            } else {
                let ws = wn - wd;
                if ws.re > -745.0 { -e(ws) / (one - e(-wd)) } else { c(0.0, 0.0) }
            };
        }
        acc
    };
    phi1d(z1, z2) - phi1d(-z2, -z1)
}

// ---------------------------------------------------------------- goldens

const THETA_1_2: C64 = C64::new(3.46466468215342493e-1, 4.05587076186660567e-1);
const THETA_MINUS_32_32: C64 = C64::new(-6.96229061481221795e-2, 5.05840013540654956e-2);
const VARTHETA00_I: C64 = C64::new(1.08643481121330820e0, 0.0);
const ETA_I_ABS: f64 = 7.68225422326056617e-1;
const LATTICE2: C64 = C64::new(3.35339444234323825e-1, 0.0);
const GAUSS_E_1: f64 = 9.87811117815197037e-1;
const R_A_GOLDEN: C64 = C64::new(-7.40418258315337641e-2, -2.27872711364133201e-1);
const R_B_GOLDEN: C64 = C64::new(2.77222650964282336e-1, -1.41249646586627614e-1);
const A_TILDE_A_GOLDEN: C64 = C64::new(-9.99999999999999889e-1, -8.69699314799913664e-2);
const A_TILDE_B_GOLDEN: C64 = C64::new(6.91963480246443385e-1, 2.26516637088690048e-1);
const PHI1_GEOM_GOLDEN: C64 = C64::new(9.65506085036609840e-1, 4.06789119920021647e-1);
const PHI_A_11_GOLDEN: C64 = C64::new(9.67872492683488739e-1, -3.35725065596147454e-2);
const PHI_ADD_A_GOLDEN: C64 = C64::new(0.0, -5.45311343857150521e-2);
const PSI_A_GOLDEN: C64 = C64::new(5.62418618910867321e-5, -2.78706786524199215e-5);
const N2_CHAR_GOLDEN: C64 = C64::new(7.30800146152403407e-1, 0.0);

#[test]
fn theta_golden() {
    let (tau, z, t) = (c(0.1, 1.2), c(0.25, -0.1), c(0.0, 0.0));
    assert_close("oracle drift", theta_oracle(1.0, 2.0, false, tau, z, t), THETA_1_2, 1e-13);
    let lib = theta_jm(HalfInt::from_int(1), 2, tau, z, t, &tr()).unwrap();
    assert_close("theta_jm", lib, THETA_1_2, 1e-11);
    // two independent evaluation paths: 3x tighter tolerance changes nothing
    let tight = Truncation { tail_tol: 1e-16, max_terms: 100_000, pole_guard: 1e-6 };
    let lib2 = theta_jm(HalfInt::from_int(1), 2, tau, z, t, &tight).unwrap();
    assert!((lib - lib2).norm() < 10.0 * 1e-14);
}

#[test]
fn theta_minus_golden() {
    let (tau, z, t) = (c(0.2, 1.0), c(0.1, 0.0), c(0.05, 0.0));
    assert_close("oracle drift", theta_oracle(1.5, 1.5, true, tau, z, t), THETA_MINUS_32_32, 1e-13);
    let lib = theta_minus_jm(HalfInt::from_twice(3), QuarterInt::from_times4(6), tau, z, t, &tr()).unwrap();
    assert_close("theta_minus_jm", lib, THETA_MINUS_32_32, 1e-11);
}

#[test]
fn vartheta_golden() {
    assert_close("oracle drift", theta_oracle(0.0, 0.5, false, c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)), VARTHETA00_I, 1e-13);
    let lib = jacobi_theta_ab(0, 0, c(0.0, 1.0), c(0.0, 0.0), &tr()).unwrap();
    assert_close("vartheta_00(i,0)", lib, VARTHETA00_I, 1e-11);
}

#[test]
fn eta_golden() {
    let lib = dedekind_eta(c(0.0, 1.0), &tr()).unwrap();
    assert!((lib.norm() - ETA_I_ABS).abs() <= 1e-11 * ETA_I_ABS);
}

#[test]
fn lattice_theta_golden() {
    let q = Rational64::new;
    let lat = Lattice::from_gram(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]]).unwrap();
    let lam = LatticeWeight::new(q(1, 1), vec![q(1, 2), q(0, 1)], &lat).unwrap();
    let lib = lattice_theta(&lam, &lat, c(0.0, 1.0), &[c(0.1, 0.0), c(0.2, 0.0)], c(0.0, 0.0), &tr()).unwrap();
    assert_close("rank-2 lattice theta", lib, LATTICE2, 1e-11);
}

#[test]
fn gauss_e_golden() {
    assert!((gauss_e_quadrature(1.0) - GAUSS_E_1).abs() < 1e-14);
    assert!((gauss_e(1.0) - GAUSS_E_1).abs() <= 1e-13);
}

#[test]
fn r_a_golden() {
    let (tau, v) = (c(0.0, 1.3), c(0.2, 0.1));
    assert_close("oracle drift", r_a_oracle(1, 1, tau, v), R_A_GOLDEN, 1e-13);
    assert_close("r_a", r_a(1, 1, tau, v, &tr()).unwrap(), R_A_GOLDEN, 1e-11);
}

#[test]
fn r_b_golden() {
    let (tau, v) = (c(0.0, 1.5), c(0.15, 0.0));
    assert_close("oracle drift", r_b_oracle(0, 1, tau, v), R_B_GOLDEN, 1e-13);
    assert_close("r_b", r_b(0, 1, tau, v, &tr()).unwrap(), R_B_GOLDEN, 1e-11);
}

#[test]
fn a_tilde_goldens() {
    let (taua, va) = (c(0.0, 1.2), c(0.1, 0.0));
    let lib_a = a_tilde_a(0, 1, 0, taua, va, &tr()).unwrap();
    assert_close("a_tilde_a", lib_a, A_TILDE_A_GOLDEN, 1e-11);
    let (taub, vb) = (c(0.0, 1.4), c(0.2, 0.0));
    let lib_b = a_tilde_b(0, 1, taub, vb, &tr()).unwrap();
    assert_close("a_tilde_b", lib_b, A_TILDE_B_GOLDEN, 1e-11);
}

#[test]
fn phi1_geometric_golden() {
    // double-geometric expansion (valid for Im z1 > 0), cutoff 200
    let (tau, z1, z2) = (c(0.0, 1.1), c(0.2, 0.15), c(0.05, -0.1));
    let mut acc = c(0.0, 0.0);
    for j in -200i64..=200 {
        let jf = j as f64;
        for r in 0..=400i64 {
            let rf = r as f64;
            let (ph, qp, sg);
            if j >= 0 {
                ph = 2.0 * jf * (z1 + z2) + rf * z1;
                qp = 2.0 * jf * jf + jf * rf;
                sg = 1.0;
            } else {
                if r == 0 {
                    continue;
                }
                ph = 2.0 * jf * (z1 + z2) - rf * z1;
                qp = 2.0 * jf * jf - jf * rf;
                sg = -1.0;
            }
            let w = 2.0 * PI * I * (ph + tau * qp);
            if w.re > -745.0 {
                acc += sg * e(w);
            }
        }
    }
    assert_close("oracle drift", acc, PHI1_GEOM_GOLDEN, 1e-12);
    let fp = FamilyParams::new_a(1, 0, 1).unwrap();
    let lib = phi1(&fp, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr()).unwrap();
    assert_close("phi1 vs geometric", lib, PHI1_GEOM_GOLDEN, 1e-11);
}

#[test]
fn phi_golden() {
    let (tau, z1, z2) = (c(0.0, 1.1), c(0.23, 0.0), c(-0.41, 0.0));
    assert_close("oracle drift", phi_a_oracle(1, 1, tau, z1, z2), PHI_A_11_GOLDEN, 1e-13);
    let fp = FamilyParams::new_a(1, 1, 1).unwrap();
    let lib = phi(&fp, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr()).unwrap();
    assert_close("phi", lib, PHI_A_11_GOLDEN, 1e-11);
}

#[test]
fn phi_add_golden() {
    let (tau, z1, z2) = (c(0.0, 1.3), c(0.2, 0.0), c(0.05, 0.0));
    let mut oracle = c(0.0, 0.0);
    for j in 0..=3i64 {
        let td = theta_oracle(j as f64, 2.0, false, tau, z1 + z2, c(0.0, 0.0))
            - theta_oracle(-j as f64, 2.0, false, tau, z1 + z2, c(0.0, 0.0));
        oracle += r_a_oracle(j, 1, tau, (z1 - z2) / 2.0) * td;
    }
    oracle *= 0.5;
    assert_close("oracle drift", oracle, PHI_ADD_A_GOLDEN, 1e-13);
    let fp = FamilyParams::new_a(1, 0, 1).unwrap();
    let lib = phi_add(&fp, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr()).unwrap();
    assert_close("phi_add", lib, PHI_ADD_A_GOLDEN, 1e-11);
}

#[test]
fn psi_golden() {
    let fp = FamilyParams::new_a(1, 0, 3).unwrap();
    let p = ModularPoint { tau: c(0.0, 1.2), z1: c(0.18, 0.0), z2: c(-0.31, 0.0), t: c(0.02, 0.0) };
    let lib = psi(&fp, HalfInt::ZERO, HalfInt::from_int(1), HalfInt::from_int(2), &p, &tr(), false).unwrap();
    assert_close("psi", lib, PSI_A_GOLDEN, 1e-11);
}

#[test]
fn n2_character_golden() {
    let fp = FamilyParams::new_a(1, 0, 3).unwrap();
    let ns = SectorLabel::new(HalfInt::HALF, HalfInt::HALF).unwrap();
    let idx = CharacterIndex::new(HalfInt::HALF, HalfInt::HALF);
    let lib =
        reduction_character(Reduction::N2, &fp, &ns, &idx, c(0.0, 1.2), c(0.17, 0.0), &tr(), false).unwrap();
    assert_close("N=2 character", lib, N2_CHAR_GOLDEN, 1e-11);
    // wiring: character times denominator = Psi(tau, -z, z, 0)
    let den = reduction_denominator(Reduction::N2, &ns, c(0.0, 1.2), c(0.17, 0.0), &tr()).unwrap();
    let raw = psi(
        &fp,
        HalfInt::HALF,
        HalfInt::HALF,
        HalfInt::HALF,
        &ModularPoint { tau: c(0.0, 1.2), z1: c(-0.17, 0.0), z2: c(0.17, 0.0), t: c(0.0, 0.0) },
        &tr(),
        false,
    )
    .unwrap();
    assert_close("Eq 3.9 wiring", lib * den, raw, 1e-12);
}

#[test]
fn mock_theta_matches_phi1_at_five_points() {
    // sl(2|1) data: ambient (alpha1, alpha2), gram [[0,1],[1,0]], M = Z theta,
    // T = {alpha1}, lambda = s alpha1, degree m+1, z-vector (-z2, -z1).
    let q = Rational64::new;
    let amb = vec![vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(0, 1)]];
    let mlat = Lattice::new(amb, vec![vec![q(1, 1), q(1, 1)]]).unwrap();
    for (m, s) in [(1i64, 0i64), (2, 1)] {
        let lam = LatticeWeight::new(q(m + 1, 1), vec![q(s, 1), q(0, 1)], &mlat).unwrap();
        let tset = IsotropicSet::new(vec![vec![q(1, 1), q(0, 1)]], &mlat, &lam.lambda_bar).unwrap();
        let fp = FamilyParams::new_a(m, s, 1).unwrap();
        for k in 0..5 {
            let tau = c(0.1 * k as f64 - 0.2, 1.0 + 0.1 * k as f64);
            let z1 = c(0.23 + 0.02 * k as f64, 0.11);
            let z2 = c(-0.31, 0.05 - 0.01 * k as f64);
            let t = c(0.02, 0.01);
            let mock = mock_theta_general(&lam, &mlat, &tset, VariantSign::Minus, tau, &[-z2, -z1], t, &tr()).unwrap();
            let f = phi1(&fp, &ModularPoint { tau, z1, z2, t }, &tr()).unwrap()
                * e(2.0 * PI * I * (m as f64 + 1.0) * t);
            assert_close("mock theta vs phi1", mock, f, 1e-10);
        }
    }
    // scaling t -> t + a multiplies by e^{2 pi i n a}
    let lam = LatticeWeight::new(q(2, 1), vec![q(0, 1), q(0, 1)], &mlat).unwrap();
    let tset = IsotropicSet::new(vec![vec![q(1, 1), q(0, 1)]], &mlat, &lam.lambda_bar).unwrap();
    let tau = c(0.1, 1.1);
    let zv = [c(0.15, 0.02), c(-0.12, 0.06)];
    let base = mock_theta_general(&lam, &mlat, &tset, VariantSign::Minus, tau, &zv, c(0.0, 0.0), &tr()).unwrap();
    let sh = mock_theta_general(&lam, &mlat, &tset, VariantSign::Minus, tau, &zv, c(0.3, 0.0), &tr()).unwrap();
    assert_close("t scaling", sh, e(2.0 * PI * I * 2.0 * c(0.3, 0.0)) * base, 1e-12);
}

#[test]
fn residues_match_contour_oracle() {
    let fa = FamilyParams::new_a(1, 1, 1).unwrap();
    let fb = FamilyParams::new_b(1, 1).unwrap();
    let tau = c(0.13, 1.21);
    let z2 = c(-0.27, 0.09);
    for fp in [fa, fb] {
        for n in -1..=1i64 {
            for j in -1..=1i64 {
                let center = c(n as f64, 0.0) + tau * j as f64;
                let numeric = contour_residue(
                    |z1| phi1(&fp, &ModularPoint { tau, z1, z2, t: c(0.0, 0.0) }, &tr()),
                    center,
                )
                .unwrap();
                let closed =
                    mocktheta_core::numerators::residue_at_pole(&fp, n, j, tau, z2).unwrap();
                assert_close("residue", numeric, closed, 1e-8);
            }
        }
    }
}

#[test]
fn g_equivalence_spot() {
    // B-side m = 0: single-term route equals the direct route
    let fp = FamilyParams::new_b(0, 1).unwrap();
    let up = UVPoint { tau: c(0.21, 1.33), u: c(0.19, 0.03), v: c(-0.08, 0.12), t: c(0.01, 0.0) };
    let d = g_direct(&fp, &up, &tr()).unwrap();
    let v = g_via_sum(&fp, &up, &tr()).unwrap();
    assert!((d - v).norm() <= 1e-11 * d.norm().max(1.0));
}

#[test]
fn sl2_composition_squares_to_reflection() {
    // S^2 = -1 acts by z -> -z on theta-based functions
    use mocktheta_core::numerators::{apply_sl2, SL2Element};
    let fp = FamilyParams::new_a(1, 0, 1).unwrap();
    for k in 0..5 {
        let p = ModularPoint {
            tau: c(0.05 * k as f64, 1.1 + 0.1 * k as f64),
            z1: c(0.21, 0.04),
            z2: c(-0.33, 0.08),
            t: c(0.0, 0.0),
        };
        let f = |q: &ModularPoint| phi(&fp, q, &tr());
        let ss = apply_sl2(&SL2Element::S, |q| apply_sl2(&SL2Element::S, f, q), &p).unwrap();
        // S^2 = -1 in SL2 has slash weight (0*tau - 1)^{-1} = -1
        let refl = phi(&fp, &ModularPoint { tau: p.tau, z1: -p.z1, z2: -p.z2, t: p.t }, &tr()).unwrap();
        assert_close("S^2 reflection", ss, -refl, 1e-9);
    }
}
