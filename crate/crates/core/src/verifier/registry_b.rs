//! Registry entries for the osp(3|2) side: Phi^{[B;m]}, the alternate
//! thetas, R^{[B]}, the B-side a~ functions, G^{[B;m]} and Phi~^{[B;m]}.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{case, contour_residue, dir_derivative, wirtinger, CheckKind, IdentityCase};
use crate::halfint::{HalfInt, QuarterInt};
use crate::numerators::{
    g_direct, g_via_sum, phi, phi1, phi_add, phi_tilde, residue_at_pole, slash_s, FamilyParams,
};
use crate::point::{ModularPoint, Truncation, UVPoint, C64};
use crate::theta::{theta_jm_deg, theta_minus_jm};
use crate::zwegers::{a_tilde_b, r_b, real_coords, sqrt_minus_i_tau};

const I: C64 = Complex64::new(0.0, 1.0);

fn e2(w: C64) -> C64 {
    (2.0 * PI * I * w).exp()
}

fn mp(tau: C64, z1: C64, z2: C64, t: C64) -> ModularPoint {
    ModularPoint { tau, z1, z2, t }
}

fn fam(m: i64) -> FamilyParams {
    FamilyParams::new_b(m, 1).expect("valid family-B parameters")
}

const MB: [i64; 3] = [0, 1, 2];

/// (Theta^-_{j+1/2} + Theta^-_{-(j+1/2)})(tau, w) at degree m + 1/2.
fn theta_minus_pair(j: i64, m: i64, tau: C64, w: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    let zero = C64::new(0.0, 0.0);
    let deg = QuarterInt::int_plus_half(m);
    let jj = HalfInt::from_twice(2 * j + 1);
    Ok(theta_minus_jm(jj, deg, tau, w, zero, tr)? + theta_minus_jm(-jj, deg, tau, w, zero, tr)?)
}

fn phi_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi(fp, &mp(tau, u + v, u - v, t), tr)
}

fn phi1_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi1(fp, &mp(tau, u + v, u - v, t), tr)
}

fn phi_add_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi_add(fp, &mp(tau, u + v, u - v, t), tr)
}

fn phi_tilde_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi_tilde(fp, &mp(tau, u + v, u - v, t), tr)
}

fn phi_add_uv_slash_s(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    Ok(phi_add_uv(fp, -1.0 / tau, u / tau, v / tau, t - (u * u - v * v) / tau, tr)? / tau)
}

pub fn cases() -> Vec<IdentityCase> {
    let mut v: Vec<IdentityCase> = Vec::new();

    v.push(
        case(
            "Lem4.1",
            "Lemma 4.1: Phi^B - Phi^B|_S (and the Phi1 version) are holomorphic in X",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let f = |z1: C64| -> crate::error::EvalResult<C64> {
                        let q = mp(p.tau, z1, p.z2, p.t);
                        Ok(phi(&fp, &q, tr)? - slash_s(|r| phi(&fp, r, tr), &q)?)
                    };
                    out.push((wirtinger(f, p.z1, 1e-6)?, C64::new(0.0, 0.0)));
                }
                Ok(out)
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "Lem4.1.residues",
            "Section 4 residue display: Res_{z1 = n + j tau} Phi1^B = (-1)^{(j+1)(n+1)}/(2 pi i) e^{-pi i j(2m+1) z2}",
            CheckKind::Residue,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    for n in -1..=1 {
                        for j in -1..=1 {
                            let center = C64::new(n as f64, 0.0) + p.tau * j as f64;
                            let num = contour_residue(|z1| phi1(&fp, &mp(p.tau, z1, p.z2, p.t), tr), center)?;
                            out.push((num, residue_at_pole(&fp, n, j, p.tau, p.z2)?));
                        }
                    }
                }
                Ok(out)
            },
        )
        .points(2)
        .build(),
    );

    v.push(
        case(
            "Lem4.2.1",
            "Lemma 4.2(1): Phi^B(-z1, -z2) = -Phi^B(z1, z2)",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        Ok((
                            phi(&fp, &mp(p.tau, -p.z1, -p.z2, p.t), tr)?,
                            -phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.2.2",
            "Lemma 4.2(2): Phi^B(z1+a, z2+b) = (-1)^a Phi^B for a = b mod 2",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let base = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for (a, b) in [(1.0, 3.0), (2.0, 0.0), (1.0, -1.0)] {
                        let sh = phi(&fp, &mp(p.tau, p.z1 + C64::new(a, 0.0), p.z2 + C64::new(b, 0.0), p.t), tr)?;
                        let sgn = if (a as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        out.push((sh, sgn * base));
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.2.3",
            "Lemma 4.2(3): Phi^B(z1+j tau, z2+j tau) = (-1)^j e^{-pi i j(2m+1)(z1+z2)} q^{-j^2(m+1/2)} Phi^B",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let base = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for j in [1.0f64, -1.0] {
                        let lhs = phi(&fp, &mp(p.tau, p.z1 + j * p.tau, p.z2 + j * p.tau, p.t), tr)?;
                        let sgn = if (j as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        let rhs = sgn
                            * (PI * I * (-j) * (2 * m + 1) as f64 * (p.z1 + p.z2)).exp()
                            * e2(-j * j * (m as f64 + 0.5) * p.tau)
                            * base;
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    // ---- Proposition 4.3: alternate theta transformation laws ----

    v.push(
        case(
            "Prop4.3.1",
            "Proposition 4.3(1): S-transform of Theta^-_{j,m} with the odd-k sum, half-integral j",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for m4 in [2i64, 6, 10] {
                    // degree m = m4/4 in {1/2, 3/2, 5/2}
                    let m = QuarterInt::from_times4(m4);
                    let md = m.to_f64();
                    for j2 in [1i64, 3] {
                        let j = HalfInt::from_twice(j2);
                        let lhs = theta_minus_jm(j, m, -1.0 / p.tau, p.z1 / p.tau, zero, tr)?;
                        let mut sum = C64::new(0.0, 0.0);
                        let kmax = (4.0 * md) as i64 - 1;
                        let mut k = 1i64;
                        while k <= kmax {
                            sum += (-PI * I * (j.to_f64() * k as f64) / (2.0 * md)).exp()
                                * theta_minus_jm(HalfInt::from_twice(k), m, p.tau, p.z1, zero, tr)?;
                            k += 2;
                        }
                        let rhs = (-I * p.tau / (2.0 * md)).sqrt()
                            * (PI * I * md * p.z1 * p.z1 / (2.0 * p.tau)).exp()
                            * sum;
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Prop4.3.2",
            "Proposition 4.3(2): for integral j the same law holds with plain Theta_{k/2,m} on the right",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for m4 in [2i64, 6] {
                    let m = QuarterInt::from_times4(m4);
                    let md = m.to_f64();
                    for j in [0i64, 1] {
                        let lhs = theta_minus_jm(HalfInt::from_int(j), m, -1.0 / p.tau, p.z1 / p.tau, zero, tr)?;
                        let mut sum = C64::new(0.0, 0.0);
                        let kmax = (4.0 * md) as i64 - 1;
                        let mut k = 1i64;
                        while k <= kmax {
                            sum += (-PI * I * (j * k) as f64 / (2.0 * md)).exp()
                                * theta_jm_deg(HalfInt::from_twice(k), m, p.tau, p.z1, zero, tr)?;
                            k += 2;
                        }
                        let rhs = (-I * p.tau / (2.0 * md)).sqrt()
                            * (PI * I * md * p.z1 * p.z1 / (2.0 * p.tau)).exp()
                            * sum;
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Prop4.3.3",
            "Proposition 4.3(3): the symmetrized law for Theta^-_j + Theta^-_{-j}",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for m4 in [2i64, 6, 10] {
                    let m = QuarterInt::from_times4(m4);
                    let md = m.to_f64();
                    let j = HalfInt::from_twice(1);
                    let lhs = theta_minus_jm(j, m, -1.0 / p.tau, p.z1 / p.tau, zero, tr)?
                        + theta_minus_jm(-j, m, -1.0 / p.tau, p.z1 / p.tau, zero, tr)?;
                    let mut sum = C64::new(0.0, 0.0);
                    let kmax = (4.0 * md) as i64 - 1;
                    let mut k = 1i64;
                    while k <= kmax {
                        let pair = theta_minus_jm(HalfInt::from_twice(k), m, p.tau, p.z1, zero, tr)?
                            + theta_minus_jm(HalfInt::from_twice(-k), m, p.tau, p.z1, zero, tr)?;
                        sum += (-PI * I * (j.to_f64() * k as f64) / (2.0 * md)).exp() * pair;
                        k += 2;
                    }
                    let rhs = (-I * p.tau / (2.0 * md)).sqrt()
                        * (PI * I * md * p.z1 * p.z1 / (2.0 * p.tau)).exp()
                        * sum;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Prop4.3.4",
            "Proposition 4.3(4): Theta^-_{+-(j+1/2), m+1/2}(tau+1) = e^{pi i (j+1/2)^2/(2m+1)} Theta^-",
            CheckKind::Equality,
            1e-12,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for m in MB {
                    let deg = QuarterInt::int_plus_half(m);
                    for j in [0i64, 1] {
                        for sign in [1i64, -1] {
                            let jj = HalfInt::from_twice(sign * (2 * j + 1));
                            let lhs = theta_minus_jm(jj, deg, p.tau + one, p.z1, zero, tr)?;
                            let ph = (PI * I * ((2 * j + 1) * (2 * j + 1)) as f64
                                / (4.0 * (2 * m + 1) as f64))
                                .exp();
                            let rhs = ph * theta_minus_jm(jj, deg, p.tau, p.z1, zero, tr)?;
                            out.push((lhs, rhs));
                        }
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    // ---- Lemma 4.4 / 4.5: shift decompositions and G^B ----

    v.push(
        case(
            "Lem4.4.1",
            "Lemma 4.4(1): phi1^B(u+a, v+b) = (-1)^{a+b} phi1^B, likewise phi^B",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let b1 = phi1_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    let bf = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(1.0, 0.0), (1.0, 1.0), (0.0, -1.0)] {
                        let sgn = if ((a + b) as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        out.push((
                            phi1_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            sgn * b1,
                        ));
                        out.push((
                            phi_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            sgn * bf,
                        ));
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.4.2",
            "Lemma 4.4(2): phi1^B + e^{2 pi i(m+1/2)(2v-tau)} phi1^B(u, v-tau) = alternate theta sum",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let h = m as f64 + 0.5;
                    let zero = C64::new(0.0, 0.0);
                    let lhs = phi1_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        + e2(h * (2.0 * p.v - p.tau)) * phi1_uv(&fp, p.tau, p.u, p.v - p.tau, p.t, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=(2 * m) {
                        let d = k as f64 + 0.5;
                        rhs += e2(d * p.v - p.tau * d * d / (2.0 * (2 * m + 1) as f64))
                            * theta_minus_jm(
                                HalfInt::from_twice(2 * k + 1),
                                QuarterInt::int_plus_half(m),
                                p.tau,
                                2.0 * p.u,
                                zero,
                                tr,
                            )?;
                    }
                    out.push((lhs, e2(h * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .t_scale(0.05)
        .y_range(0.8, 1.1)
        .build(),
    );

    v.push(
        case(
            "Lem4.4.3",
            "Lemma 4.4(3): the phi^B version with the symmetrized alternate thetas",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let h = m as f64 + 0.5;
                    let lhs = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        + e2(h * (2.0 * p.v - p.tau)) * phi_uv(&fp, p.tau, p.u, p.v - p.tau, p.t, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=(2 * m) {
                        let d = k as f64 + 0.5;
                        rhs += e2(d * p.v - p.tau * d * d / (2.0 * (2 * m + 1) as f64))
                            * theta_minus_pair(k, m, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, e2(h * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .y_range(0.8, 1.1)
        .build(),
    );

    v.push(
        case(
            "Lem4.5.1",
            "Lemma 4.5(1): G^B is holomorphic",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let fv = |v: C64| g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v, t: p.t }, tr);
                    let fu = |u: C64| g_direct(&fp, &UVPoint { tau: p.tau, u, v: p.v, t: p.t }, tr);
                    out.push((wirtinger(fv, p.v, 1e-6)?, C64::new(0.0, 0.0)));
                    out.push((wirtinger(fu, p.u, 1e-6)?, C64::new(0.0, 0.0)));
                }
                Ok(out)
            },
        )
        .points(3)
        .build(),
    );

    v.push(
        case(
            "Lem4.5.2",
            "Lemma 4.5(2): G^B + e^{pi i(2m+1)(2v-tau)} G^B(u, v-tau) equals the Lemma 4.4(3) theta sum",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let h = m as f64 + 0.5;
                    let lhs = g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t }, tr)?
                        + e2(h * (2.0 * p.v - p.tau))
                            * g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v - p.tau, t: p.t }, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=(2 * m) {
                        let d = k as f64 + 0.5;
                        rhs += e2(d * p.v - p.tau * d * d / (2.0 * (2 * m + 1) as f64))
                            * theta_minus_pair(k, m, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, e2(h * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .y_range(0.8, 1.1)
        .build(),
    );

    v.push(
        case(
            "Lem4.5.3",
            "Lemma 4.5(3): the v+1 jump of G^B as a double odd-index phase sum",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                let one = C64::new(1.0, 0.0);
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let h = m as f64 + 0.5;
                    let pp = (2 * m + 1) as f64;
                    let lhs = g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v + one, t: p.t }, tr)?
                        + g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t }, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=(2 * m) {
                        let outer = (PI * I * pp / p.tau
                            * (p.v + C64::new((k as f64 + 0.5) / pp, 0.0)).powi(2))
                        .exp();
                        let mut inner = C64::new(0.0, 0.0);
                        let mut j = 1i64;
                        while j <= 4 * m + 1 {
                            let pair = theta_minus_jm(
                                HalfInt::from_twice(j),
                                QuarterInt::int_plus_half(m),
                                p.tau,
                                2.0 * p.u,
                                C64::new(0.0, 0.0),
                                tr,
                            )? + theta_minus_jm(
                                HalfInt::from_twice(-j),
                                QuarterInt::int_plus_half(m),
                                p.tau,
                                2.0 * p.u,
                                C64::new(0.0, 0.0),
                                tr,
                            )?;
                            inner += (-PI * I * j as f64 * (k as f64 + 0.5) / pp).exp() * pair;
                            j += 2;
                        }
                        rhs += outer * inner;
                    }
                    rhs *= I / pp.sqrt() / sqrt_minus_i_tau(p.tau) * e2(h * p.t);
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    // ---- Lemma 4.7 / 4.8: R^B laws ----

    v.push(
        case(
            "Lem4.7.1",
            "Lemma 4.7(1): R^B(tau, v+1) = -R^B(tau, v)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (0, 1), (1, 1), (2, 2)] {
                    out.push((r_b(j, m, p.tau, p.v + one, tr)?, -r_b(j, m, p.tau, p.v, tr)?));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.7.2",
            "Lemma 4.7(2): R^B(tau, v-tau) = -e^{pi i(2m+1)(tau-2v)} R^B(tau, v) + 2 e^{-pi i tau (j+1/2)^2/(2m+1) + 2 pi i tau (j+1/2)} e^{-2 pi i (j+1/2) v}",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (0, 1), (1, 1)] {
                    let pp = (2 * m + 1) as f64;
                    let d = j as f64 + 0.5;
                    let lhs = r_b(j, m, p.tau, p.v - p.tau, tr)?;
                    let rhs = -(PI * I * pp * (p.tau - 2.0 * p.v)).exp() * r_b(j, m, p.tau, p.v, tr)?
                        + 2.0 * (-PI * I * p.tau * d * d / pp + 2.0 * PI * I * p.tau * d).exp()
                            * (-2.0 * PI * I * d * p.v).exp();
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .y_range(0.8, 1.1)
        .z_half(0.2)
        .build(),
    );

    v.push(
        case(
            "Lem4.7.3",
            "Lemma 4.7(3): R^B_{2m-j+1/2}(tau, v) = R^B_{j+1/2}(tau, -v)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1), (2, 2)] {
                    out.push((r_b(2 * m - j, m, p.tau, p.v, tr)?, r_b(j, m, p.tau, -p.v, tr)?));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.7.4",
            "Lemma 4.7(4): R^B(tau+1, v) = e^{-pi i (j+1/2)^2/(2m+1)} R^B(tau, v)",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (1, 1), (2, 2)] {
                    let d = j as f64 + 0.5;
                    let ph = (-PI * I * d * d / (2 * m + 1) as f64).exp();
                    out.push((r_b(j, m, p.tau + one, p.v, tr)?, ph * r_b(j, m, p.tau, p.v, tr)?));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.8.1",
            "Lemma 4.8(1): R^B(-1/tau, (v-tau)/tau) = -R^B(-1/tau, v/tau)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1)] {
                    let stau = -1.0 / p.tau;
                    out.push((
                        r_b(j, m, stau, (p.v - p.tau) / p.tau, tr)?,
                        -r_b(j, m, stau, p.v / p.tau, tr)?,
                    ));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem4.8.2",
            "Lemma 4.8(2): the (v+1)/tau shift law of the S-composed R^B",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1)] {
                    let pp = (2 * m + 1) as f64;
                    let d = j as f64 + 0.5;
                    let stau = -1.0 / p.tau;
                    let lhs = r_b(j, m, stau, (p.v + 1.0) / p.tau, tr)?;
                    let rhs = -(-PI * I * pp * (2.0 * p.v + 1.0) / p.tau).exp()
                        * r_b(j, m, stau, p.v / p.tau, tr)?
                        + 2.0
                            * (PI * I * d * d / (pp * p.tau) - 2.0 * PI * I * d / p.tau).exp()
                            * (-2.0 * PI * I * d * p.v / p.tau).exp();
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .z_half(0.2)
        .build(),
    );

    // ---- Lemma 4.9: differential laws ----

    v.push(
        case(
            "Lem4.9.1",
            "Lemma 4.9(1), derived prefactor: (d/da + tau d/db) R^B = -2 sqrt(2(2m+1)y) e^{-2 pi (2m+1) a^2 y} Theta^-_{j+1/2}(-conj tau, -2 conj v); the print drops the 2",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (1, 1)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| r_b(j, m, p.tau, a * p.tau - C64::new(b, 0.0), tr),
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let pp = (2 * m + 1) as f64;
                    let rhs = -2.0 * (2.0 * pp * rc.y).sqrt()
                        * (-2.0 * PI * pp * rc.a * rc.a * rc.y).exp()
                        * theta_minus_jm(
                            HalfInt::from_twice(2 * j + 1),
                            QuarterInt::int_plus_half(m),
                            -p.tau.conj(),
                            -2.0 * p.v.conj(),
                            zero,
                            tr,
                        )?;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Lem4.9.2",
            "Lemma 4.9(2): the composed derivative against Theta^-(1/conj tau, -2 conj v/conj tau)",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| {
                            let v = a * p.tau - C64::new(b, 0.0);
                            r_b(j, m, -1.0 / p.tau, v / p.tau, tr)
                        },
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let pp = (2 * m + 1) as f64;
                    let rhs = -2.0 * (p.tau / p.tau.norm())
                        * (2.0 * pp * rc.y).sqrt()
                        * (-2.0 * PI * pp * rc.b * rc.b * rc.y / p.tau.norm_sqr()).exp()
                        * theta_minus_jm(
                            HalfInt::from_twice(2 * j + 1),
                            QuarterInt::int_plus_half(m),
                            1.0 / p.tau.conj(),
                            -2.0 * p.v.conj() / p.tau.conj(),
                            zero,
                            tr,
                        )?;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Lem4.9.3",
            "Lemma 4.9(3): the composed derivative as a finite alternate-theta sum",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| {
                            let v = a * p.tau - C64::new(b, 0.0);
                            r_b(j, m, -1.0 / p.tau, v / p.tau, tr)
                        },
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let pp = (2 * m + 1) as f64;
                    let tb = p.tau.conj();
                    let vb = p.v.conj();
                    let expo = PI * pp / (2.0 * rc.y * p.tau)
                        * (tb * p.v * p.v - 2.0 * p.tau * p.v * vb + p.tau * vb * vb);
                    let mut sum = C64::new(0.0, 0.0);
                    for k in 0..=(2 * m) {
                        sum += (-2.0 * PI * I * (j as f64 + 0.5) * (k as f64 + 0.5) / pp).exp()
                            * theta_minus_jm(
                                HalfInt::from_twice(2 * k + 1),
                                QuarterInt::int_plus_half(m),
                                -tb,
                                2.0 * vb,
                                zero,
                                tr,
                            )?;
                    }
                    let rhs = -2.0 * I * sqrt_minus_i_tau(p.tau) * (2.0 * rc.y).sqrt() * expo.exp() * sum;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    // ---- Lemma 4.10: B-side a~ laws ----

    v.push(
        case(
            "Lem4.10.1",
            "Lemma 4.10(1): a~_j holomorphic in v",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (2, 1)] {
                    let f = |v: C64| a_tilde_b(j, m, p.tau, v, tr);
                    out.push((wirtinger(f, p.v, 1e-6)?, C64::new(0.0, 0.0)));
                }
                Ok(out)
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "Lem4.10.2",
            "Lemma 4.10(2): a~_j + e^{pi i(2m+1)(2v-tau)} a~_j(v-tau) = 2 e^{-pi i tau (2m-j+1/2)^2/(2m+1)} e^{2 pi i(2m-j+1/2)v}",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let pp = (2 * m + 1) as f64;
                    for j in 0..=(2 * m) {
                        let d = (2 * m - j) as f64 + 0.5;
                        let lhs = a_tilde_b(j, m, p.tau, p.v, tr)?
                            + (PI * I * pp * (2.0 * p.v - p.tau)).exp()
                                * a_tilde_b(j, m, p.tau, p.v - p.tau, tr)?;
                        let rhs = 2.0 * (-PI * I * p.tau * d * d / pp).exp() * (2.0 * PI * I * d * p.v).exp();
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .y_range(0.8, 1.1)
        .z_half(0.2)
        .build(),
    );

    v.push(
        case(
            "Lem4.10.2.variants",
            "Lemma 4.10(2) misprint check: the shift factor needs (2m+1); exactly one of the printed e^{pi i(2v-tau)} and corrected e^{pi i(2m+1)(2v-tau)} holds at m = 1",
            CheckKind::Variants,
            1e-6,
            |p, tr| {
                let (j, m) = (0i64, 1i64);
                let pp = (2 * m + 1) as f64;
                let d = (2 * m - j) as f64 + 0.5;
                let rhs = 2.0 * (-PI * I * p.tau * d * d / pp).exp() * (2.0 * PI * I * d * p.v).exp();
                let corrected = a_tilde_b(j, m, p.tau, p.v, tr)?
                    + (PI * I * pp * (2.0 * p.v - p.tau)).exp() * a_tilde_b(j, m, p.tau, p.v - p.tau, tr)?;
                let printed = a_tilde_b(j, m, p.tau, p.v, tr)?
                    + (PI * I * (2.0 * p.v - p.tau)).exp() * a_tilde_b(j, m, p.tau, p.v - p.tau, tr)?;
                let dc = (corrected - rhs).norm() / rhs.norm().max(1.0);
                let dp = (printed - rhs).norm() / rhs.norm().max(1.0);
                let exactly_one = (dc < 1e-6) ^ (dp < 1e-6);
                Ok(vec![(C64::new(exactly_one as u8 as f64, 0.0), C64::new(1.0, 0.0))])
            },
        )
        .points(4)
        .y_range(0.8, 1.0)
        .z_half(0.15)
        .build(),
    );

    v.push(
        case(
            "Lem4.10.3",
            "Lemma 4.10(3): a~_j(v) + a~_j(v+1) equals the Gaussian phase sum with index 2m-j",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let pp = (2 * m + 1) as f64;
                    for j in 0..=(2 * m) {
                        let lhs = a_tilde_b(j, m, p.tau, p.v, tr)? + a_tilde_b(j, m, p.tau, p.v + one, tr)?;
                        let mut rhs = C64::new(0.0, 0.0);
                        for k in 0..=(2 * m) {
                            rhs += (-2.0 * PI * I * ((2 * m - j) as f64 + 0.5) * (k as f64 + 0.5) / pp).exp()
                                * (PI * I * pp / p.tau
                                    * (p.v + C64::new((k as f64 + 0.5) / pp, 0.0)).powi(2))
                                .exp();
                        }
                        rhs *= 2.0 * I / pp.sqrt() / sqrt_minus_i_tau(p.tau);
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Prop4.11",
            "Proposition 4.11: G^B = (1/2) e^{2 pi i(m+1/2)t} sum_j a~_{2m-j}(Theta^-_{j+1/2} + Theta^-_{-(j+1/2)})(tau, 2u)",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        let up = UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t };
                        Ok((g_direct(&fp, &up, tr)?, g_via_sum(&fp, &up, tr)?))
                    })
                    .collect()
            },
        )
        .t_scale(0.05)
        .points(10)
        .build(),
    );

    // ---- Lemma 4.12, Theorem 4.13 / 4.14, Remark 4.15 ----

    v.push(
        case(
            "Lem4.12.1",
            "Lemma 4.12(1): phi_add - phi_add|_S = -G^B and phi_add(tau+1) = phi_add",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for m in [1i64, 2] {
                    let fp = fam(m);
                    let lhs = phi_add_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        - phi_add_uv_slash_s(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    let rhs = -g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t }, tr)?;
                    out.push((lhs, rhs));
                    out.push((
                        phi_add_uv(&fp, p.tau + one, p.u, p.v, p.t, tr)?,
                        phi_add_uv(&fp, p.tau, p.u, p.v, p.t, tr)?,
                    ));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Lem4.12.2",
            "Lemma 4.12(2): phi_add(u+a, v+b) = (-1)^{a+b} phi_add",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for m in [1i64, 2] {
                    let fp = fam(m);
                    let base = phi_add_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(1.0, 0.0), (1.0, 1.0)] {
                        let sgn = if ((a + b) as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        out.push((
                            phi_add_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            sgn * base,
                        ));
                    }
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Lem4.12.3",
            "Lemma 4.12(3): phi_add is odd in v and even in u",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for m in [1i64, 2] {
                    let fp = fam(m);
                    let base = phi_add_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    out.push((phi_add_uv(&fp, p.tau, p.u, -p.v, p.t, tr)?, -base));
                    out.push((phi_add_uv(&fp, p.tau, -p.u, p.v, p.t, tr)?, base));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Thm4.13.1",
            "Theorem 4.13(1): phi~^B(-1/tau, u/tau, v/tau, t+(v^2-u^2)/tau) = tau phi~^B(tau, u, v, t)",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        let lhs = phi_tilde_uv(
                            &fp,
                            -1.0 / p.tau,
                            p.u / p.tau,
                            p.v / p.tau,
                            p.t + (p.v * p.v - p.u * p.u) / p.tau,
                            tr,
                        )?;
                        Ok((lhs, p.tau * phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?))
                    })
                    .collect()
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Thm4.13.2",
            "Theorem 4.13(2): phi~^B(tau+1) = phi~^B",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        Ok((
                            phi_tilde_uv(&fp, p.tau + one, p.u, p.v, p.t, tr)?,
                            phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Thm4.13.3",
            "Theorem 4.13(3): integer and tau-lattice shifts of phi~^B",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let base = phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(1.0f64, 0.0f64), (1.0, 1.0)] {
                        let sgn = if ((a + b) as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        out.push((
                            phi_tilde_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            sgn * base,
                        ));
                        let lhs = phi_tilde_uv(&fp, p.tau, p.u + a * p.tau, p.v + b * p.tau, p.t, tr)?;
                        let rhs = sgn
                            * e2((2 * m + 1) as f64 * (b * p.v - a * p.u)
                                + (m as f64 + 0.5) * (b * b - a * a) * p.tau)
                            * base;
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .points(6)
        .y_range(0.8, 1.2)
        .build(),
    );

    v.push(
        case(
            "Thm4.13.4",
            "Theorem 4.13(4): phi~^B odd in v and even in u",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let base = phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    out.push((phi_tilde_uv(&fp, p.tau, p.u, -p.v, p.t, tr)?, -base));
                    out.push((phi_tilde_uv(&fp, p.tau, -p.u, p.v, p.t, tr)?, base));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Thm4.14.1",
            "Theorem 4.14(1): Phi~^B(-1/tau, z/tau, t - z1 z2/tau) = tau Phi~^B(tau, z, t)",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        let lhs = phi_tilde(
                            &fp,
                            &mp(-1.0 / p.tau, p.z1 / p.tau, p.z2 / p.tau, p.t - p.z1 * p.z2 / p.tau),
                            tr,
                        )?;
                        Ok((lhs, p.tau * phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?))
                    })
                    .collect()
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Thm4.14.2",
            "Theorem 4.14(2): Phi~^B(tau+1) = Phi~^B",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                MB.iter()
                    .map(|&m| {
                        let fp = fam(m);
                        Ok((
                            phi_tilde(&fp, &mp(p.tau + one, p.z1, p.z2, p.t), tr)?,
                            phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Thm4.14.3",
            "Theorem 4.14(3): integer shifts (a+b even) and tau-lattice shifts of Phi~^B",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for m in [0i64, 1] {
                    let fp = fam(m);
                    let base = phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for (a, b) in [(1.0f64, 1.0f64), (2.0, 0.0), (1.0, -1.0)] {
                        let sgn = if (a as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                        out.push((
                            phi_tilde(&fp, &mp(p.tau, p.z1 + C64::new(a, 0.0), p.z2 + C64::new(b, 0.0), p.t), tr)?,
                            sgn * base,
                        ));
                        let lhs = phi_tilde(&fp, &mp(p.tau, p.z1 + a * p.tau, p.z2 + b * p.tau, p.t), tr)?;
                        let rhs = sgn
                            * e2(-(m as f64 + 0.5) * (a * p.z2 + b * p.z1) - (m as f64 + 0.5) * a * b * p.tau)
                            * base;
                        out.push((lhs, rhs));
                    }
                }
                Ok(out)
            },
        )
        .points(6)
        .y_range(0.8, 1.2)
        .build(),
    );

    v.push(
        case(
            "Thm4.14.4",
            "Theorem 4.14(4): Phi~^B(z2, z1) = -Phi~^B(z1, z2) and Phi~^B(-z1, -z2) = -Phi~^B(z1, z2)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for m in MB {
                    let fp = fam(m);
                    let base = phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    out.push((phi_tilde(&fp, &mp(p.tau, p.z2, p.z1, p.t), tr)?, -base));
                    out.push((phi_tilde(&fp, &mp(p.tau, -p.z1, -p.z2, p.t), tr)?, -base));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Rem4.15",
            "Remark 4.15: Phi_add^{[B;0]} = 0, so Phi~^{[B;0]} = Phi^{[B;0]}",
            CheckKind::Equality,
            1e-12,
            |p, tr| {
                let fp = fam(0);
                let v = phi_add(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                Ok(vec![(v, C64::new(0.0, 0.0))])
            },
        )
        .points(10)
        .t_scale(0.05)
        .build(),
    );

    v
}
