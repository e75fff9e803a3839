//! Registry entries for the appendix: lattice theta functions, their
//! SL2(Z)-invariant variant family and the elliptic transformation laws.

use num_complex::Complex64;
use num_rational::Rational64;
use std::f64::consts::PI;

use super::{case, CheckKind, IdentityCase};
use crate::lattice::{lattice_theta, lattice_theta_variant, Lattice, LatticeWeight, VariantSign};
use crate::point::C64;

const I: C64 = Complex64::new(0.0, 1.0);
type Q = Rational64;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn qf(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

fn rank1() -> Lattice {
    Lattice::from_gram(vec![vec![q(2, 1)]]).unwrap()
}

fn rank2() -> Lattice {
    Lattice::from_gram(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]]).unwrap()
}

/// (z|z) for a z-vector in basis coordinates.
fn zz(lat: &Lattice, z: &[C64]) -> C64 {
    let g = lat.gram();
    let mut acc = C64::new(0.0, 0.0);
    for i in 0..z.len() {
        for j in 0..z.len() {
            acc += qf(g[i][j]) * z[i] * z[j];
        }
    }
    acc
}

pub fn cases() -> Vec<IdentityCase> {
    let mut v: Vec<IdentityCase> = Vec::new();

    v.push(
        case(
            "PropA.2.a",
            "Proposition A.2(a): Theta_lambda(-1/tau, z/tau, t-(z|z)/(2 tau)) = (-i tau)^{l/2} |L*/kL|^{-1/2} sum_mu e^{-2 pi i(lambda|mu)/k} Theta_mu",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                let zero = C64::new(0.0, 0.0);
                // rank 1, (alpha|alpha) = 2, degrees k = m <= 4
                let l1 = rank1();
                for m in 1..=4i64 {
                    let k = q(m, 1);
                    let lam = LatticeWeight::new(k, vec![q(1, 2)], &l1)?;
                    let z = [p.z1 / 2.0];
                    let point = p.tau;
                    let lhs = lattice_theta(
                        &lam,
                        &l1,
                        -1.0 / point,
                        &[z[0] / point],
                        -zz(&l1, &z) / (2.0 * point),
                        tr,
                    )?;
                    let reps = l1.dual_coset_reps(k)?;
                    let order = reps.len() as f64;
                    let mut sum = C64::new(0.0, 0.0);
                    for mu in &reps {
                        let pairing = qf(l1.pair(&lam.lambda_bar, mu) / k);
                        let w = LatticeWeight::new(k, mu.clone(), &l1)?;
                        sum += (-2.0 * PI * I * pairing).exp()
                            * lattice_theta(&w, &l1, point, &z, zero, tr)?;
                    }
                    let rhs = (-I * point).sqrt() / order.sqrt() * sum;
                    out.push((lhs, rhs));
                }
                // rank 2, gram diag(2,2), k = 1
                let l2 = rank2();
                let k = q(1, 1);
                let lam = LatticeWeight::new(k, vec![q(1, 2), q(0, 1)], &l2)?;
                let z = [p.z1 / 2.0, p.z2 / 2.0];
                let lhs = lattice_theta(
                    &lam,
                    &l2,
                    -1.0 / p.tau,
                    &[z[0] / p.tau, z[1] / p.tau],
                    -zz(&l2, &z) / (2.0 * p.tau),
                    tr,
                )?;
                let reps = l2.dual_coset_reps(k)?;
                let mut sum = C64::new(0.0, 0.0);
                for mu in &reps {
                    let pairing = qf(l2.pair(&lam.lambda_bar, mu) / k);
                    let w = LatticeWeight::new(k, mu.clone(), &l2)?;
                    sum += (-2.0 * PI * I * pairing).exp() * lattice_theta(&w, &l2, p.tau, &z, zero, tr)?;
                }
                let rhs = (-I * p.tau) / (reps.len() as f64).sqrt() * sum;
                out.push((lhs, rhs));
                Ok(out)
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "PropA.2.b",
            "Proposition A.2(b): the T-transform; pure phase on even lattices, the (-1)^{k(alpha|alpha)}-weighted sum in general",
            CheckKind::Equality,
            1e-12,
            |p, tr| {
                let mut out = Vec::new();
                let zero = C64::new(0.0, 0.0);
                let one = C64::new(1.0, 0.0);
                let l1 = rank1();
                // even case: integral degree
                for m in [1i64, 3] {
                    let k = q(m, 1);
                    let lam = LatticeWeight::new(k, vec![q(3, 2)], &l1)?;
                    let z = [p.z1 / 2.0];
                    let lhs = lattice_theta(&lam, &l1, p.tau + one, &z, p.t, tr)?;
                    let phase = (PI * I * qf(l1.pair(&lam.lambda_bar, &lam.lambda_bar) / k)).exp();
                    out.push((lhs, phase * lattice_theta(&lam, &l1, p.tau, &z, p.t, tr)?));
                }
                // odd case k = 3/2: RHS picks up the alternate theta
                let k = q(3, 2);
                let lam = LatticeWeight::new_unchecked(k, vec![q(1, 2)]);
                let z = [p.z1 / 2.0];
                let lhs = lattice_theta(&lam, &l1, p.tau + one, &z, p.t, tr)?;
                let phase = (PI * I * qf(l1.pair(&lam.lambda_bar, &lam.lambda_bar) / k)).exp();
                let rhs = phase
                    * lattice_theta_variant(VariantSign::Minus, None, &lam, &l1, p.tau, &z, p.t, tr)?;
                out.push((lhs, rhs));
                let _ = zero;
                Ok(out)
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "PropA.3.a",
            "Proposition A.3(a): the S-transforms of Theta^-, Theta^{+,gamma0}, Theta^{-,gamma0}",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                let zero = C64::new(0.0, 0.0);
                let l1 = rank1();
                let k = q(3, 2);
                let g0 = vec![q(1, 4)];
                let lam = LatticeWeight::new_unchecked(k, vec![q(1, 2)]);
                let z = [p.z1 / 2.0];
                let sz = [z[0] / p.tau];
                let st = -zz(&l1, &z) / (2.0 * p.tau);
                let reps = l1.dual_coset_reps(k)?;
                let order = (reps.len() as f64).sqrt();
                let pref = (-I * p.tau).sqrt() / order;
                // (i) Theta^- -> Theta^{+,gamma0}: the even-sublattice transform
                // pairs the shifted classes symmetrically because (lambda|beta0)
                // is integral, so the plus family appears on the right (the
                // print's minus superscript contradicts its own rank-one
                // instance, Proposition 4.3(2))
                let lhs1 = lattice_theta_variant(VariantSign::Minus, None, &lam, &l1, -1.0 / p.tau, &sz, st, tr)?;
                let mut s1 = C64::new(0.0, 0.0);
                for mu in &reps {
                    let shifted: Vec<Q> = mu.iter().zip(&g0).map(|(a, b)| *a + *b).collect();
                    let pairing = qf(l1.pair(&lam.lambda_bar, &shifted) / k);
                    let w = LatticeWeight::new_unchecked(k, mu.clone());
                    s1 += (-2.0 * PI * I * pairing).exp()
                        * lattice_theta_variant(VariantSign::Plus, Some(&g0), &w, &l1, p.tau, &z, zero, tr)?;
                }
                out.push((lhs1, pref * s1));
                // (ii) Theta^{+,gamma0} -> Theta^-
                let lhs2 =
                    lattice_theta_variant(VariantSign::Plus, Some(&g0), &lam, &l1, -1.0 / p.tau, &sz, st, tr)?;
                let lamg: Vec<Q> = lam.lambda_bar.iter().zip(&g0).map(|(a, b)| *a + *b).collect();
                let mut s2 = C64::new(0.0, 0.0);
                for mu in &reps {
                    let pairing = qf(l1.pair(&lamg, mu) / k);
                    let w = LatticeWeight::new_unchecked(k, mu.clone());
                    s2 += (-2.0 * PI * I * pairing).exp()
                        * lattice_theta_variant(VariantSign::Minus, None, &w, &l1, p.tau, &z, zero, tr)?;
                }
                out.push((lhs2, pref * s2));
                // (iii) Theta^{-,gamma0} -> Theta^{-,gamma0}
                let lhs3 =
                    lattice_theta_variant(VariantSign::Minus, Some(&g0), &lam, &l1, -1.0 / p.tau, &sz, st, tr)?;
                let mut s3 = C64::new(0.0, 0.0);
                for mu in &reps {
                    let shifted: Vec<Q> = mu.iter().zip(&g0).map(|(a, b)| *a + *b).collect();
                    let pairing = qf(l1.pair(&lamg, &shifted) / k);
                    let w = LatticeWeight::new_unchecked(k, mu.clone());
                    s3 += (-2.0 * PI * I * pairing).exp()
                        * lattice_theta_variant(VariantSign::Minus, Some(&g0), &w, &l1, p.tau, &z, zero, tr)?;
                }
                out.push((lhs3, pref * s3));
                Ok(out)
            },
        )
        .points(5)
        .build(),
    );

    v.push(
        case(
            "PropA.3.b",
            "Proposition A.3(b): T-transforms; Theta^+- swap, Theta^{+-,gamma0} keep their sign",
            CheckKind::Equality,
            1e-12,
            |p, tr| {
                let mut out = Vec::new();
                let one = C64::new(1.0, 0.0);
                let l1 = rank1();
                let k = q(3, 2);
                let g0 = vec![q(1, 4)];
                let lam = LatticeWeight::new_unchecked(k, vec![q(1, 2)]);
                let z = [p.z1 / 2.0];
                let phase = (PI * I * qf(l1.pair(&lam.lambda_bar, &lam.lambda_bar) / k)).exp();
                for sign in [VariantSign::Plus, VariantSign::Minus] {
                    let flip = match sign {
                        VariantSign::Plus => VariantSign::Minus,
                        VariantSign::Minus => VariantSign::Plus,
                    };
                    let lhs = lattice_theta_variant(sign, None, &lam, &l1, p.tau + one, &z, p.t, tr)?;
                    let rhs = phase * lattice_theta_variant(flip, None, &lam, &l1, p.tau, &z, p.t, tr)?;
                    out.push((lhs, rhs));
                }
                let lamg: Vec<Q> = lam.lambda_bar.iter().zip(&g0).map(|(a, b)| *a + *b).collect();
                let phase_g = (PI * I * qf(l1.pair(&lamg, &lamg) / k)).exp();
                for sign in [VariantSign::Plus, VariantSign::Minus] {
                    let lhs = lattice_theta_variant(sign, Some(&g0), &lam, &l1, p.tau + one, &z, p.t, tr)?;
                    let rhs = phase_g * lattice_theta_variant(sign, Some(&g0), &lam, &l1, p.tau, &z, p.t, tr)?;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "PropA.4",
            "Proposition A.4: elliptic laws; z+beta leaves Theta^+- fixed and scales the gamma0 family by (-1)^{k(beta|beta)}; z + tau beta shifts the weight by k beta (sign preserved)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                let l1 = rank1();
                let k = q(3, 2);
                let g0 = vec![q(1, 4)];
                let lam = LatticeWeight::new_unchecked(k, vec![q(1, 2)]);
                let z = [p.z1 / 2.0];
                let zshift = [z[0] + C64::new(1.0, 0.0)]; // beta = alpha
                let ztau = [z[0] + p.tau];
                // k(beta|beta) = 3 odd
                for sign in [VariantSign::Plus, VariantSign::Minus] {
                    let base = lattice_theta_variant(sign, None, &lam, &l1, p.tau, &z, p.t, tr)?;
                    out.push((
                        lattice_theta_variant(sign, None, &lam, &l1, p.tau, &zshift, p.t, tr)?,
                        base,
                    ));
                    let baseg = lattice_theta_variant(sign, Some(&g0), &lam, &l1, p.tau, &z, p.t, tr)?;
                    out.push((
                        lattice_theta_variant(sign, Some(&g0), &lam, &l1, p.tau, &zshift, p.t, tr)?,
                        -baseg,
                    ));
                    // z -> z + tau beta: e^{-2 pi i k(beta|z)} q^{-k(beta|beta)/2} Theta^{sign}_{lambda + k beta}
                    let lam_shift = LatticeWeight::new_unchecked(k, vec![lam.lambda_bar[0] + k]);
                    let kb_z = 2.0 * qf(k) * z[0]; // k (beta|z), (alpha|alpha) = 2
                    let pref = (-2.0 * PI * I * kb_z - PI * I * p.tau * qf(k) * 2.0).exp();
                    out.push((
                        lattice_theta_variant(sign, None, &lam, &l1, p.tau, &ztau, p.t, tr)?,
                        pref * lattice_theta_variant(sign, None, &lam_shift, &l1, p.tau, &z, p.t, tr)?,
                    ));
                    out.push((
                        lattice_theta_variant(sign, Some(&g0), &lam, &l1, p.tau, &ztau, p.t, tr)?,
                        pref * lattice_theta_variant(sign, Some(&g0), &lam_shift, &l1, p.tau, &z, p.t, tr)?,
                    ));
                }
                Ok(out)
            },
        )
        .points(5)
        .y_range(0.8, 1.3)
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "PropA.4.variants",
            "Proposition A.4 tau-shift superscript: exactly one of the printed sign flip and the derived sign preservation holds",
            CheckKind::Variants,
            1e-6,
            |p, tr| {
                let l1 = rank1();
                let k = q(3, 2);
                let lam = LatticeWeight::new_unchecked(k, vec![q(1, 2)]);
                let z = [p.z1 / 2.0];
                let ztau = [z[0] + p.tau];
                let lam_shift = LatticeWeight::new_unchecked(k, vec![lam.lambda_bar[0] + k]);
                let pref = (-2.0 * PI * I * 2.0 * qf(k) * z[0] - PI * I * p.tau * qf(k) * 2.0).exp();
                let lhs = lattice_theta_variant(VariantSign::Minus, None, &lam, &l1, p.tau, &ztau, p.t, tr)?;
                let same = pref * lattice_theta_variant(VariantSign::Minus, None, &lam_shift, &l1, p.tau, &z, p.t, tr)?;
                let flip = pref * lattice_theta_variant(VariantSign::Plus, None, &lam_shift, &l1, p.tau, &z, p.t, tr)?;
                let ds = (lhs - same).norm() / lhs.norm().max(1.0);
                let df = (lhs - flip).norm() / lhs.norm().max(1.0);
                let exactly_one = (ds < 1e-6) ^ (df < 1e-6);
                Ok(vec![(C64::new(exactly_one as u8 as f64, 0.0), C64::new(1.0, 0.0))])
            },
        )
        .points(4)
        .y_range(0.8, 1.2)
        .build(),
    );

    v
}
