//! Registry entries for the sl(2|1) side: the numerators Phi^{[m;s]}, the
//! Zwegers functions R_{j;m+1}, the coefficient functions a~_j, the
//! difference function G and the modification Phi~.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{case, contour_residue, dir_derivative, wirtinger, CheckKind, IdentityCase, SamplePoint};
use crate::halfint::HalfInt;
use crate::numerators::{
    g_direct, g_via_sum, phi, phi1, phi_tilde, residue_at_pole, slash_s, FamilyParams,
};
use crate::point::{ModularPoint, Truncation, UVPoint, C64};
use crate::theta::theta_jm;
use crate::zwegers::{a_tilde_a, r_a, real_coords, sqrt_minus_i_tau};

const I: C64 = Complex64::new(0.0, 1.0);

fn e2(w: C64) -> C64 {
    (2.0 * PI * I * w).exp()
}

fn mp(tau: C64, z1: C64, z2: C64, t: C64) -> ModularPoint {
    ModularPoint { tau, z1, z2, t }
}

/// The (m, s) pairs exercised throughout this section.
const MS: [(i64, i64); 4] = [(0, 0), (1, 0), (1, 1), (2, 1)];

fn fam(m: i64, s: i64) -> FamilyParams {
    FamilyParams::new_a(m, s, 1).expect("valid family-A parameters")
}

/// Theta_{j,m+1} - Theta_{-j,m+1} at (tau, w), t = 0.
fn theta_diff(j: i64, n: i64, tau: C64, w: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    let zero = C64::new(0.0, 0.0);
    Ok(theta_jm(HalfInt::from_int(j), n, tau, w, zero, tr)?
        - theta_jm(HalfInt::from_int(-j), n, tau, w, zero, tr)?)
}

fn phi_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi(fp, &mp(tau, v - u, -v - u, t), tr)
}

fn phi_uv_slash_s(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    // phi|_S(tau,u,v,t) = tau^{-1} phi(-1/tau, u/tau, v/tau, t - (u^2-v^2)/tau)
    Ok(phi_uv(fp, -1.0 / tau, u / tau, v / tau, t - (u * u - v * v) / tau, tr)? / tau)
}

fn phi_tilde_uv(fp: &FamilyParams, tau: C64, u: C64, v: C64, t: C64, tr: &Truncation) -> crate::error::EvalResult<C64> {
    phi_tilde(fp, &mp(tau, v - u, -v - u, t), tr)
}

pub fn cases() -> Vec<IdentityCase> {
    let mut v: Vec<IdentityCase> = Vec::new();

    v.push(
        case(
            "Lem1.1.0",
            "Lemma 1.1(0): Phi - Phi|_S is holomorphic in X",
            CheckKind::Holomorphy,
            1e-6,
            |p: &SamplePoint, tr: &Truncation| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1), (2, 1)] {
                    let fp = fam(m, s);
                    let f = |z1: C64| -> crate::error::EvalResult<C64> {
                        let q = mp(p.tau, z1, p.z2, p.t);
                        Ok(phi(&fp, &q, tr)? - slash_s(|r| phi(&fp, r, tr), &q)?)
                    };
                    out.push((wirtinger(f, p.z1, 1e-6)?, C64::new(0.0, 0.0)));
                    // probe near (but outside the guard of) z1 = 0
                    out.push((wirtinger(f, C64::new(0.021, 0.013), 1e-6)?, C64::new(0.0, 0.0)));
                }
                Ok(out)
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "Lem1.1.0.residues",
            "proof of Lemma 1.1(0): Res_{z1 = n + j tau} Phi1 = -(1/2 pi i) e^{-2 pi i j (m+1) z2}",
            CheckKind::Residue,
            1e-8,
            |p: &SamplePoint, tr: &Truncation| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 1i64), (2, 1)] {
                    let fp = fam(m, s);
                    for n in -1..=1 {
                        for j in -1..=1 {
                            let center = C64::new(n as f64, 0.0) + p.tau * j as f64;
                            let num = contour_residue(
                                |z1| phi1(&fp, &mp(p.tau, z1, p.z2, p.t), tr),
                                center,
                            )?;
                            let closed = residue_at_pole(&fp, n, j, p.tau, p.z2)?;
                            out.push((num, closed));
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
            "Lem1.1.1",
            "Lemma 1.1(1): Phi(tau+1) = Phi(tau)",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        Ok((
                            phi(&fp, &mp(p.tau + one, p.z1, p.z2, p.t), tr)?,
                            phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Lem1.1.2",
            "Lemma 1.1(2): Phi(z1+a, z2+b) = Phi for integer a, b",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let base = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for (a, b) in [(2.0, -1.0), (1.0, 1.0)] {
                        let sh = phi(
                            &fp,
                            &mp(p.tau, p.z1 + C64::new(a, 0.0), p.z2 + C64::new(b, 0.0), p.t),
                            tr,
                        )?;
                        out.push((sh, base));
                    }
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.1.3",
            "Lemma 1.1(3): Phi - e^{2 pi i (m+1) z1} Phi(.., z2+tau, ..) = theta decomposition",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let n = m + 1;
                    let lhs = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?
                        - e2(n as f64 * p.z1) * phi(&fp, &mp(p.tau, p.z1, p.z2 + p.tau, p.t), tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=m {
                        let d = (k - s) as f64;
                        rhs += (PI * I * d * (p.z1 - p.z2)).exp()
                            * e2(-p.tau * d * d / (4.0 * n as f64))
                            * theta_diff(k - s, n, p.tau, p.z1 + p.z2, tr)?;
                    }
                    out.push((lhs, e2(n as f64 * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Lem1.1.4",
            "Lemma 1.1(4): Phi - e^{-2 pi i (m+1) z2} Phi(.., z1-tau, ..) = same theta sum",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let n = m + 1;
                    let lhs = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?
                        - e2(-(n as f64) * p.z2) * phi(&fp, &mp(p.tau, p.z1 - p.tau, p.z2, p.t), tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in 0..=m {
                        let d = (k - s) as f64;
                        rhs += (PI * I * d * (p.z1 - p.z2)).exp()
                            * e2(-p.tau * d * d / (4.0 * n as f64))
                            * theta_diff(k - s, n, p.tau, p.z1 + p.z2, tr)?;
                    }
                    out.push((lhs, e2(n as f64 * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Lem1.1.5",
            "Lemma 1.1(5): Phi(z1+j tau, z2+j tau) = q^{-j^2(m+1)} e^{-2 pi i j(m+1)(z1+z2)} Phi",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1), (2, 1)] {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let base = phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for j in [1.0f64, -1.0] {
                        let lhs =
                            phi(&fp, &mp(p.tau, p.z1 + j * p.tau, p.z2 + j * p.tau, p.t), tr)?;
                        let rhs = e2(-j * j * n * p.tau - j * n * (p.z1 + p.z2)) * base;
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
            "Lem1.1.6",
            "Lemma 1.1(6): Phi(tau, -z2, -z1, t) = -Phi(tau, z1, z2, t)",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        Ok((
                            phi(&fp, &mp(p.tau, -p.z2, -p.z1, p.t), tr)?,
                            -phi(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    // ---- Lemma 1.2: (u, v) coordinate laws ----

    v.push(
        case(
            "Lem1.2.0",
            "Lemma 1.2(0): phi - phi|_S holomorphic in u and v",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let fp = fam(1, 1);
                let g_of_v = |v: C64| -> crate::error::EvalResult<C64> {
                    Ok(phi_uv(&fp, p.tau, p.u, v, p.t, tr)? - phi_uv_slash_s(&fp, p.tau, p.u, v, p.t, tr)?)
                };
                let g_of_u = |u: C64| -> crate::error::EvalResult<C64> {
                    Ok(phi_uv(&fp, p.tau, u, p.v, p.t, tr)? - phi_uv_slash_s(&fp, p.tau, u, p.v, p.t, tr)?)
                };
                Ok(vec![
                    (wirtinger(g_of_v, p.v, 1e-6)?, C64::new(0.0, 0.0)),
                    (wirtinger(g_of_u, p.u, 1e-6)?, C64::new(0.0, 0.0)),
                ])
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "Lem1.2.1",
            "Lemma 1.2(1): phi(tau+1) = phi",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        Ok((
                            phi_uv(&fp, p.tau + one, p.u, p.v, p.t, tr)?,
                            phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.2.2",
            "Lemma 1.2(2): phi(u+a, v+b) = phi for a, b half-integers with a+b integral",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (2, 1)] {
                    let fp = fam(m, s);
                    let base = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(0.5, 0.5), (1.0, 0.0), (-0.5, 1.5)] {
                        out.push((
                            phi_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            base,
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
            "Lem1.2.3",
            "Lemma 1.2(3): phi - e^{2 pi i(m+1)(v-u)} phi(u-tau/2, v-tau/2) = -theta sum",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let lhs = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        - e2(n * (p.v - p.u))
                            * phi_uv(&fp, p.tau, p.u - p.tau / 2.0, p.v - p.tau / 2.0, p.t, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for j in 0..=m {
                        let d = (j - s) as f64;
                        rhs += e2(d * p.v - p.tau * d * d / (4.0 * n))
                            * theta_diff(j - s, m + 1, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, -e2(n * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Lem1.2.4",
            "Lemma 1.2(4): phi - e^{2 pi i(m+1)(u+v)} phi(u+tau/2, v-tau/2) = same theta sum",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let lhs = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        - e2(n * (p.u + p.v))
                            * phi_uv(&fp, p.tau, p.u + p.tau / 2.0, p.v - p.tau / 2.0, p.t, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for j in 0..=m {
                        let d = (j - s) as f64;
                        rhs += e2(d * p.v - p.tau * d * d / (4.0 * n))
                            * theta_diff(j - s, m + 1, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, -e2(n * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.2.5",
            "Lemma 1.2(5): phi(u-tau, v) = e^{4 pi i (m+1) u} q^{-(m+1)} phi(u, v)",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        let n = (m + 1) as f64;
                        Ok((
                            phi_uv(&fp, p.tau, p.u - p.tau, p.v, p.t, tr)?,
                            e2(2.0 * n * p.u - n * p.tau) * phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.2.6",
            "Lemma 1.2(6): phi(-u, v) = -phi(u, v)",
            CheckKind::Equality,
            1e-11,
            |p, tr| {
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        Ok((
                            phi_uv(&fp, p.tau, -p.u, p.v, p.t, tr)?,
                            -phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?,
                        ))
                    })
                    .collect()
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.3",
            "Lemma 1.3: phi - e^{2 pi i(m+1)(2v-tau)} phi(u, v-tau) = -sum over 2m+2 thetas",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in MS {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let lhs = phi_uv(&fp, p.tau, p.u, p.v, p.t, tr)?
                        - e2(n * (2.0 * p.v - p.tau)) * phi_uv(&fp, p.tau, p.u, p.v - p.tau, p.t, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for j in 0..=(2 * m + 1) {
                        let d = (j - s) as f64;
                        rhs += e2(d * p.v - p.tau * d * d / (4.0 * n))
                            * theta_diff(j - s, m + 1, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, -e2(n * p.t) * rhs));
                }
                Ok(out)
            },
        )
        .y_range(0.8, 1.1)
        .build(),
    );

    // ---- Lemma 1.4: properties of G ----

    v.push(
        case(
            "Lem1.4.1",
            "Lemma 1.4(1): G is holomorphic in v",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let f = |v: C64| {
                        g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v, t: p.t }, tr)
                    };
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
            "Lem1.4.2",
            "Lemma 1.4(2): G - e^{2 pi i(m+1)(2v-tau)} G(u, v-tau) = -shifted theta sum",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let up = UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t };
                    let dn = UVPoint { tau: p.tau, u: p.u, v: p.v - p.tau, t: p.t };
                    let lhs = g_direct(&fp, &up, tr)?
                        - e2(n * (2.0 * p.v - p.tau)) * g_direct(&fp, &dn, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for j in -s..=(-s + 2 * m + 1) {
                        let d = j as f64;
                        rhs += e2(d * p.v - p.tau * d * d / (4.0 * n))
                            * theta_diff(j, m + 1, p.tau, 2.0 * p.u, tr)?;
                    }
                    out.push((lhs, -e2(n * p.t) * rhs));
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
            "Lem1.4.3",
            "Lemma 1.4(3): the v+1 jump of G is the double phase sum",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let one = C64::new(1.0, 0.0);
                    let lhs = g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v + one, t: p.t }, tr)?
                        - g_direct(&fp, &UVPoint { tau: p.tau, u: p.u, v: p.v, t: p.t }, tr)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for j in -s..=(-s + 2 * m + 1) {
                        for k in -s..=(-s + 2 * m + 1) {
                            rhs += (-PI * I * (j * k) as f64 / n).exp()
                                * e2(n / p.tau * (p.v + C64::new(k as f64 / (2.0 * n), 0.0)).powi(2))
                                * theta_diff(j, m + 1, p.tau, 2.0 * p.u, tr)?;
                        }
                    }
                    rhs *= I * e2(n * p.t) / (2.0 * n).sqrt() / sqrt_minus_i_tau(p.tau);
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    // ---- Lemma 1.5: the conditions pinning a_j = (1/2) a~_j ----

    v.push(
        case(
            "Lem1.5.i",
            "Lemma 1.5(i): a_j = a~_j/2 is holomorphic in v",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let (m, s) = (1i64, 0i64);
                let mut out = Vec::new();
                for j in -s..=(-s + 2 * m + 1) {
                    let f = |v: C64| Ok(a_tilde_a(j, m, s, p.tau, v, tr)? / 2.0);
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
            "Lem1.5.ii",
            "Lemma 1.5(ii): a_j - e^{2 pi i(m+1)(2v-tau)} a_j(v-tau) = -e^{2 pi i j v} e^{-pi i tau j^2/(2m+2)}",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let (m, s) = (1i64, 0i64);
                let n = (m + 1) as f64;
                let mut out = Vec::new();
                for j in -s..=(-s + 2 * m + 1) {
                    let a = |v: C64| Ok(a_tilde_a(j, m, s, p.tau, v, tr)? / 2.0);
                    let lhs: C64 = a(p.v)? - e2(n * (2.0 * p.v - p.tau)) * a(p.v - p.tau)?;
                    let rhs = -e2((j as f64) * p.v) * (-PI * I * p.tau * (j * j) as f64 / (2.0 * n)).exp();
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
            "Lem1.5.iii",
            "Lemma 1.5(iii): the v+1 jump of a_j",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let (m, s) = (1i64, 0i64);
                let n = (m + 1) as f64;
                let one = C64::new(1.0, 0.0);
                let mut out = Vec::new();
                for j in -s..=(-s + 2 * m + 1) {
                    let a = |v: C64| Ok(a_tilde_a(j, m, s, p.tau, v, tr)? / 2.0);
                    let lhs: C64 = a(p.v + one)? - a(p.v)?;
                    let mut rhs = C64::new(0.0, 0.0);
                    for k in -s..=(-s + 2 * m + 1) {
                        rhs += (-PI * I * (j * k) as f64 / n).exp()
                            * e2(n / p.tau * (p.v + C64::new(k as f64 / (2.0 * n), 0.0)).powi(2));
                    }
                    rhs *= I / (2.0 * n).sqrt() / sqrt_minus_i_tau(p.tau);
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .build(),
    );

    // ---- Lemma 1.6: R laws ----

    v.push(
        case(
            "Lem1.6.1",
            "Lemma 1.6(1): R(tau, v+1/2) = (-1)^j R(tau, v), so R(tau, v+1) = R(tau, v)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (1, 1), (2, 1), (3, 2)] {
                    let base = r_a(j, m, p.tau, p.v, tr)?;
                    let half = r_a(j, m, p.tau, p.v + C64::new(0.5, 0.0), tr)?;
                    let sgn = if j.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                    out.push((half, sgn * base));
                    out.push((r_a(j, m, p.tau, p.v + C64::new(1.0, 0.0), tr)?, base));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.6.2",
            "Lemma 1.6(2): R_j(tau, v) = -R_{2m+2-j}(tau, -v)",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 1i64), (1, 1), (3, 2), (-1, 2)] {
                    out.push((
                        r_a(j, m, p.tau, p.v, tr)?,
                        -r_a(2 * m + 2 - j, m, p.tau, -p.v, tr)?,
                    ));
                }
                Ok(out)
            },
        )
        .build(),
    );

    v.push(
        case(
            "Lem1.6.3",
            "Lemma 1.6(3), minus variant: R_j - e^{2 pi i(m+1)(2v-tau)} R_j(v-tau) = -2 e^{-pi i tau j^2/(2m+2)} e^{2 pi i j v}",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (1, 1), (2, 1), (3, 2)] {
                    let n = (m + 1) as f64;
                    let lhs = r_a(j, m, p.tau, p.v, tr)?
                        - e2(n * (2.0 * p.v - p.tau)) * r_a(j, m, p.tau, p.v - p.tau, tr)?;
                    let rhs =
                        -2.0 * (-PI * I * p.tau * (j * j) as f64 / (2.0 * n)).exp() * e2((j as f64) * p.v);
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
            "Lem1.6.3.variants",
            "Lemma 1.6(3) exponent-sign ambiguity: exactly one of the printed (+) and derived (-) variants holds",
            CheckKind::Variants,
            1e-6,
            |p, tr| {
                let (j, m) = (1i64, 1i64);
                let n = (m + 1) as f64;
                let lhs = r_a(j, m, p.tau, p.v, tr)?
                    - e2(n * (2.0 * p.v - p.tau)) * r_a(j, m, p.tau, p.v - p.tau, tr)?;
                let minus = -2.0 * (-PI * I * p.tau * (j * j) as f64 / (2.0 * n)).exp() * e2((j as f64) * p.v);
                let plus = -2.0 * (PI * I * p.tau * (j * j) as f64 / (2.0 * n)).exp() * e2((j as f64) * p.v);
                let dm = (lhs - minus).norm() / lhs.norm().max(1.0);
                let dp = (lhs - plus).norm() / lhs.norm().max(1.0);
                // pass iff exactly one variant matches: report (indicator, 1)
                let exactly_one = (dm < 1e-6) ^ (dp < 1e-6);
                Ok(vec![(C64::new(exactly_one as u8 as f64, 0.0), C64::new(1.0, 0.0))])
            },
        )
        .points(4)
        .y_range(0.8, 1.0)
        .z_half(0.15)
        .build(),
    );

    // ---- Lemma 1.7 / 1.8: differential laws ----

    v.push(
        case(
            "Lem1.7.1",
            "Lemma 1.7(1): (d/da + tau d/db) R = -4 sqrt((m+1)y) e^{-4 pi (m+1) a^2 y} Theta_{j,m+1}(-conj tau, 2 conj v)",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(0i64, 0i64), (1, 1), (2, 2)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| r_a(j, m, p.tau, a * p.tau - C64::new(b, 0.0), tr),
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let n = (m + 1) as f64;
                    let rhs = -4.0
                        * (n * rc.y).sqrt()
                        * (-4.0 * PI * n * rc.a * rc.a * rc.y).exp()
                        * theta_jm(HalfInt::from_int(j), m + 1, -p.tau.conj(), 2.0 * p.v.conj(), zero, tr)?;
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
            "Lem1.7.2",
            "Lemma 1.7(2): same derivative of R(-1/tau, v/tau) against Theta(1/conj tau, 2 conj v/conj tau)",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(1i64, 1i64), (0, 1)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| {
                            let v = a * p.tau - C64::new(b, 0.0);
                            r_a(j, m, -1.0 / p.tau, v / p.tau, tr)
                        },
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let n = (m + 1) as f64;
                    let rhs = -4.0 * (p.tau / p.tau.norm())
                        * (n * rc.y).sqrt()
                        * (-4.0 * PI * n * rc.b * rc.b * rc.y / p.tau.norm_sqr()).exp()
                        * theta_jm(
                            HalfInt::from_int(j),
                            m + 1,
                            1.0 / p.tau.conj(),
                            2.0 * p.v.conj() / p.tau.conj(),
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
            "Lem1.8",
            "Lemma 1.8: the S-side differential law as a finite theta sum",
            CheckKind::Derivative,
            1e-5,
            |p, tr| {
                let zero = C64::new(0.0, 0.0);
                let mut out = Vec::new();
                for (j, m) in [(1i64, 1i64), (2, 1)] {
                    let rc = real_coords(p.tau, p.v)?;
                    let lhs = dir_derivative(
                        |a, b| {
                            let v = a * p.tau - C64::new(b, 0.0);
                            r_a(j, m, -1.0 / p.tau, v / p.tau, tr)
                        },
                        rc.a,
                        rc.b,
                        p.tau,
                    )?;
                    let n = (m + 1) as f64;
                    let tb = p.tau.conj();
                    let vb = p.v.conj();
                    let expo = PI * n / (rc.y * p.tau) * (tb * p.v * p.v - 2.0 * p.tau * p.v * vb + p.tau * vb * vb);
                    let mut sum = C64::new(0.0, 0.0);
                    for k in 0..(2 * m + 2) {
                        sum += (-PI * I * (j * k) as f64 / n).exp()
                            * theta_jm(HalfInt::from_int(k), m + 1, -tb, -2.0 * vb, zero, tr)?;
                    }
                    let rhs = -4.0 * I * sqrt_minus_i_tau(p.tau) * (rc.y / 2.0).sqrt() * expo.exp() * sum;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    // ---- Lemma 1.9: a~ laws ----

    v.push(
        case(
            "Lem1.9.1",
            "Lemma 1.9(1): a~_j holomorphic in v",
            CheckKind::Holomorphy,
            1e-6,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    for j in [-s, -s + 2 * m + 1] {
                        let f = |v: C64| a_tilde_a(j, m, s, p.tau, v, tr);
                        out.push((wirtinger(f, p.v, 1e-6)?, C64::new(0.0, 0.0)));
                    }
                }
                Ok(out)
            },
        )
        .points(4)
        .build(),
    );

    v.push(
        case(
            "Lem1.9.2",
            "Lemma 1.9(2): a~_j - e^{2 pi i(m+1)(2v-tau)} a~_j(v-tau) = -2 e^{-pi i tau j^2/(2m+2)} e^{2 pi i j v}",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let n = (m + 1) as f64;
                    for j in -s..=(-s + 2 * m + 1) {
                        let lhs = a_tilde_a(j, m, s, p.tau, p.v, tr)?
                            - e2(n * (2.0 * p.v - p.tau)) * a_tilde_a(j, m, s, p.tau, p.v - p.tau, tr)?;
                        let rhs = -2.0
                            * (-PI * I * p.tau * (j * j) as f64 / (2.0 * n)).exp()
                            * e2((j as f64) * p.v);
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
            "Lem1.9.3",
            "Lemma 1.9(3): a~_j(v+1) - a~_j(v) equals the Gaussian phase sum",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                let one = C64::new(1.0, 0.0);
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let n = (m + 1) as f64;
                    for j in -s..=(-s + 2 * m + 1) {
                        let lhs = a_tilde_a(j, m, s, p.tau, p.v + one, tr)?
                            - a_tilde_a(j, m, s, p.tau, p.v, tr)?;
                        let mut rhs = C64::new(0.0, 0.0);
                        for k in -s..=(-s + 2 * m + 1) {
                            rhs += (-PI * I * (j * k) as f64 / n).exp()
                                * e2(n / p.tau * (p.v + C64::new(k as f64 / (2.0 * n), 0.0)).powi(2));
                        }
                        rhs *= 2.0 * I / (2.0 * n).sqrt() / sqrt_minus_i_tau(p.tau);
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
            "Prop1.10",
            "Proposition 1.10: G = (1/2) e^{2 pi i(m+1)t} sum_j a~_j (Theta_j - Theta_{-j})(tau, 2u)",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
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

    // ---- Theorem 1.11 / 1.12: modular and elliptic laws of the modification ----

    v.push(
        case(
            "Thm1.11.1",
            "Theorem 1.11(1): phi~|_S = phi~ and phi~(tau+1) = phi~",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                let one = C64::new(1.0, 0.0);
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let base = phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    let slashed = phi_tilde_uv(
                        &fp,
                        -1.0 / p.tau,
                        p.u / p.tau,
                        p.v / p.tau,
                        p.t - (p.u * p.u - p.v * p.v) / p.tau,
                        tr,
                    )? / p.tau;
                    out.push((slashed, base));
                    out.push((phi_tilde_uv(&fp, p.tau + one, p.u, p.v, p.t, tr)?, base));
                }
                Ok(out)
            },
        )
        .points(6)
        .build(),
    );

    v.push(
        case(
            "Thm1.11.2",
            "Theorem 1.11(2): phi~(u+a, v+b) = phi~ for half-integers with a+b integral",
            CheckKind::Equality,
            1e-9,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (2, 1)] {
                    let fp = fam(m, s);
                    let base = phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(0.5, 0.5), (1.0, 0.0)] {
                        out.push((
                            phi_tilde_uv(&fp, p.tau, p.u + C64::new(a, 0.0), p.v + C64::new(b, 0.0), p.t, tr)?,
                            base,
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
            "Thm1.11.3",
            "Theorem 1.11(3): phi~(u+a tau, v+b tau) = q^{(m+1)(b^2-a^2)} e^{4 pi i(m+1)(bv-au)} phi~",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let base = phi_tilde_uv(&fp, p.tau, p.u, p.v, p.t, tr)?;
                    for (a, b) in [(1.0f64, 0.0f64), (0.5, 0.5)] {
                        let lhs = phi_tilde_uv(&fp, p.tau, p.u + a * p.tau, p.v + b * p.tau, p.t, tr)?;
                        let rhs = e2(n * (b * b - a * a) * p.tau + 2.0 * n * (b * p.v - a * p.u)) * base;
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
            "Thm1.12.1",
            "Theorem 1.12(1): Phi~(-1/tau, z/tau, t) = tau e^{2 pi i(m+1) z1 z2/tau} Phi~(tau, z, t)",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
                        let n = (m + 1) as f64;
                        let lhs = phi_tilde(&fp, &mp(-1.0 / p.tau, p.z1 / p.tau, p.z2 / p.tau, p.t), tr)?;
                        let rhs = p.tau
                            * e2(n * p.z1 * p.z2 / p.tau)
                            * phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                        Ok((lhs, rhs))
                    })
                    .collect()
            },
        )
        .t_scale(0.05)
        .build(),
    );

    v.push(
        case(
            "Thm1.12.2",
            "Theorem 1.12(2): Phi~(tau+1) = Phi~",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let one = C64::new(1.0, 0.0);
                MS.iter()
                    .map(|&(m, s)| {
                        let fp = fam(m, s);
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
            "Thm1.12.3",
            "Theorem 1.12(3): Phi~(z1+a, z2+b) = Phi~ for integers",
            CheckKind::Equality,
            1e-10,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let base = phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    out.push((
                        phi_tilde(&fp, &mp(p.tau, p.z1 + C64::new(1.0, 0.0), p.z2 - C64::new(2.0, 0.0), p.t), tr)?,
                        base,
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
            "Thm1.12.4",
            "Theorem 1.12(4): Phi~(z1+a tau, z2+b tau) = q^{-(m+1)ab} e^{-2 pi i(m+1)(b z1 + a z2)} Phi~",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for (m, s) in [(1i64, 0i64), (1, 1)] {
                    let fp = fam(m, s);
                    let n = (m + 1) as f64;
                    let base = phi_tilde(&fp, &mp(p.tau, p.z1, p.z2, p.t), tr)?;
                    for (a, b) in [(1.0f64, 0.0f64), (1.0, 1.0)] {
                        let lhs = phi_tilde(&fp, &mp(p.tau, p.z1 + a * p.tau, p.z2 + b * p.tau, p.t), tr)?;
                        let rhs = e2(-n * a * b * p.tau - n * (b * p.z1 + a * p.z2)) * base;
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
            "Rem1.13",
            "Remark 1.13: Phi~(tau/M, z/M, t) = (M/tau) Phi~(-M/tau, z/tau, t - z1 z2/(tau M))",
            CheckKind::Equality,
            1e-8,
            |p, tr| {
                let mut out = Vec::new();
                for mm in [1i64, 3] {
                    let fp = fam(1, 0);
                    let mf = mm as f64;
                    let lhs = phi_tilde(&fp, &mp(p.tau / mf, p.z1 / mf, p.z2 / mf, p.t), tr)?;
                    let rhs = mf / p.tau
                        * phi_tilde(
                            &fp,
                            &mp(-mf / p.tau, p.z1 / p.tau, p.z2 / p.tau, p.t - p.z1 * p.z2 / (p.tau * mf)),
                            tr,
                        )?;
                    out.push((lhs, rhs));
                }
                Ok(out)
            },
        )
        .points(4)
        .t_scale(0.05)
        .y_range(1.2, 2.0)
        .build(),
    );

    v
}
