//! Lattice theta series and the general mock theta function.
//!
//! A `Lattice` is a rank-l free subgroup of an ambient inner-product space;
//! the ambient form may be indefinite (the isotropic directions of the mock
//! theta denominators live outside the lattice span) but its restriction to
//! the lattice must be positive definite. All lattice data is exact
//! rational; only the final series evaluation goes through f64.
//!
//! For a weight of degree k with k L in L*:
//!
//! ```text
//! Theta_lambda(tau,z,t) = e^{2 pi i k t} sum_{gamma in lambda/k + L}
//!                             q^{k (gamma|gamma)/2} e^{2 pi i k (gamma|z)}
//! ```
//!
//! The variant family splits L into the even sublattice L0 = {alpha :
//! k(alpha|alpha) even} and an odd coset representative beta0:
//!
//! ```text
//! Theta^{+-}_lambda          = Theta_{lambda, L0} +- Theta_{lambda + k beta0, L0}
//! Theta^{+-, gamma0}_lambda  = Theta_{lambda + gamma0, L0} +- Theta_{lambda + gamma0 + k beta0, L0}
//! ```
//!
//! and the general mock theta of an isotropic set T is
//!
//! ```text
//! Theta^{+-}_{lambda,T}(tau,z,t) = e^{2 pi i k t} sum_{gamma in lambda/k + M}
//!     eps_{+-}(gamma) q^{k(gamma|gamma)/2} e^{2 pi i k (gamma|z)}
//!     / prod_{beta in T} (1 +- q^{-(gamma|beta)} e^{-2 pi i beta(z)})
//! ```
//!
//! with eps_-(gamma) = (-1)^{k(alpha|alpha)} on the lattice part alpha.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::f64::consts::PI;

use crate::error::{EvalError, EvalResult};
use crate::point::{Truncation, C64};

const I: C64 = Complex64::new(0.0, 1.0);
type Q = Rational64;

fn qf(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

fn dot_gram(gram: &[Vec<Q>], x: &[Q], y: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += *xi * gram[i][j] * *yj;
        }
    }
    acc
}

/// Exact positive-definiteness via leading principal minors.
fn is_positive_definite(g: &[Vec<Q>]) -> bool {
    let n = g.len();
    let mut a: Vec<Vec<Q>> = g.to_vec();
    for k in 0..n {
        if a[k][k] <= Q::zero() {
            return false;
        }
        for i in (k + 1)..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
        }
    }
    true
}

/// Rational Gauss-Jordan inverse; `None` when singular.
fn invert(g: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = g.len();
    let mut a: Vec<Vec<Q>> = g.to_vec();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let acj = a[col][j];
                    let icj = inv[col][j];
                    a[r][j] -= f * acj;
                    inv[r][j] -= f * icj;
                }
            }
        }
    }
    Some(inv)
}

/// A positive-definite lattice inside an ambient bilinear space.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    ambient_gram: Vec<Vec<Q>>,
    basis: Vec<Vec<Q>>,
}

impl Lattice {
    /// Lattice Z^l with the given gram matrix of basis pairings
    /// (ambient space = the lattice span itself).
    pub fn from_gram(gram: Vec<Vec<Q>>) -> EvalResult<Self> {
        let n = gram.len();
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        Lattice::new(gram, basis)
    }

    /// Basis vectors given in ambient coordinates; the restriction of the
    /// ambient form to the basis must be positive definite.
    pub fn new(ambient_gram: Vec<Vec<Q>>, basis: Vec<Vec<Q>>) -> EvalResult<Self> {
        let d = ambient_gram.len();
        if ambient_gram.iter().any(|r| r.len() != d) {
            return Err(EvalError::InvalidLattice);
        }
        for i in 0..d {
            for j in 0..d {
                if ambient_gram[i][j] != ambient_gram[j][i] {
                    return Err(EvalError::InvalidLattice);
                }
            }
        }
        if basis.is_empty() || basis.iter().any(|b| b.len() != d) {
            return Err(EvalError::InvalidLattice);
        }
        let lat = Lattice { ambient_gram, basis };
        if !is_positive_definite(&lat.gram()) {
            return Err(EvalError::InvalidLattice);
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_gram.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    /// Ambient pairing (x|y).
    pub fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        dot_gram(&self.ambient_gram, x, y)
    }

    /// Gram matrix of basis pairings.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let l = self.rank();
        (0..l)
            .map(|i| (0..l).map(|j| self.pair(&self.basis[i], &self.basis[j])).collect())
            .collect()
    }

    /// Checks k L subset L*, i.e. k (b_i | b_j) integral.
    pub fn scaled_is_integral(&self, k: Q) -> bool {
        self.gram().iter().flatten().all(|g| (k * *g).is_integer())
    }

    /// Even sublattice {alpha : k (alpha|alpha) in 2Z} together with an odd
    /// representative beta0 (in ambient coordinates), or `InvalidVariant`
    /// when the lattice is entirely even.
    pub fn even_sublattice(&self, k: Q) -> EvalResult<(Lattice, Vec<Q>)> {
        if !self.scaled_is_integral(k) {
            return Err(EvalError::ConstraintViolation(format!(
                "kL not contained in L* for k = {k}"
            )));
        }
        let g = self.gram();
        let parity: Vec<i64> = (0..self.rank())
            .map(|i| (k * g[i][i]).to_integer().rem_euclid(2))
            .collect();
        let Some(first_odd) = parity.iter().position(|&p| p == 1) else {
            return Err(EvalError::InvalidVariant);
        };
        // Double the odd generator, absorb it into the other odd ones.
        let mut new_basis = Vec::with_capacity(self.rank());
        for (i, b) in self.basis.iter().enumerate() {
            if i == first_odd {
                new_basis.push(b.iter().map(|x| *x * Q::from_integer(2)).collect());
            } else if parity[i] == 1 {
                new_basis.push(
                    b.iter().zip(&self.basis[first_odd]).map(|(x, y)| *x + *y).collect(),
                );
            } else {
                new_basis.push(b.clone());
            }
        }
        let beta0 = self.basis[first_odd].clone();
        Ok((Lattice::new(self.ambient_gram.clone(), new_basis)?, beta0))
    }

    /// Representatives of L*/kL in ambient coordinates; the group order is
    /// |det(k gram)| in dual coordinates.
    pub fn dual_coset_reps(&self, k: Q) -> EvalResult<Vec<Vec<Q>>> {
        if !self.scaled_is_integral(k) {
            return Err(EvalError::ConstraintViolation(format!(
                "kL not contained in L* for k = {k}"
            )));
        }
        let l = self.rank();
        let g = self.gram();
        let ginv = invert(&g).ok_or(EvalError::InvalidLattice)?;
        // kG as an integer matrix: columns of kL in dual-basis coordinates.
        let kg: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| (k * g[i][j]).to_integer()).collect())
            .collect();
        let det = int_det(&kg).abs();
        if det == 0 {
            return Err(EvalError::InvalidLattice);
        }
        let kg_q: Vec<Vec<Q>> = kg
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let kg_inv = invert(&kg_q).ok_or(EvalError::InvalidLattice)?;
        // Walk the box [0, det)^l in dual coordinates, dedupe mod kL.
        let mut reps_dual: Vec<Vec<i64>> = Vec::new();
        let mut idx = vec![0i64; l];
        'outer: loop {
            let cand = idx.clone();
            let is_new = reps_dual.iter().all(|r| {
                // difference in dual coords; in kL iff kg_inv * diff integral
                let diff: Vec<Q> = r.iter().zip(&cand).map(|(a, b)| Q::from_integer(a - b)).collect();
                !(0..l).all(|i| {
                    (0..l).map(|j| kg_inv[i][j] * diff[j]).sum::<Q>().is_integer()
                })
            });
            if is_new {
                reps_dual.push(cand);
                if reps_dual.len() as i64 == det {
                    break;
                }
            }
            // advance the box counter
            for i in 0..l {
                idx[i] += 1;
                if idx[i] < det {
                    continue 'outer;
                }
                idx[i] = 0;
            }
            break;
        }
        if reps_dual.len() as i64 != det {
            return Err(EvalError::ConstraintViolation(format!(
                "found {} dual cosets, expected {det}",
                reps_dual.len()
            )));
        }
        // dual basis vector i = sum_j (G^-1)_{ij} basis_j (ambient coords)
        let d = self.ambient_dim();
        let mut out = Vec::with_capacity(reps_dual.len());
        for rep in reps_dual {
            let mut v = vec![Q::zero(); d];
            for (i, &xi) in rep.iter().enumerate() {
                for j in 0..l {
                    let coef = Q::from_integer(xi) * ginv[i][j];
                    for (vd, bd) in v.iter_mut().zip(&self.basis[j]) {
                        *vd += coef * *bd;
                    }
                }
            }
            out.push(v);
        }
        Ok(out)
    }
}

fn int_det(m: &[Vec<i64>]) -> i64 {
    let q: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    qdet(&q).to_integer()
}

fn qdet(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Q::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if p != col {
            a.swap(col, p);
            det = -det;
        }
        det *= a[col][col];
        for r in (col + 1)..n {
            let f = a[r][col] / a[col][col];
            for j in col..n {
                let acj = a[col][j];
                a[r][j] -= f * acj;
            }
        }
    }
    det
}

/// Weight of degree k > 0 with lambda_bar in L* (ambient coordinates).
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeWeight {
    pub degree: Q,
    pub lambda_bar: Vec<Q>,
}

impl LatticeWeight {
    pub fn new(degree: Q, lambda_bar: Vec<Q>, lattice: &Lattice) -> EvalResult<Self> {
        if degree <= Q::zero() {
            return Err(EvalError::ConstraintViolation(format!("degree k = {degree} must be positive")));
        }
        if !lattice.scaled_is_integral(degree) {
            return Err(EvalError::ConstraintViolation(format!(
                "kL not contained in L* for k = {degree}"
            )));
        }
        if lambda_bar.len() != lattice.ambient_dim() {
            return Err(EvalError::ConstraintViolation("lambda_bar dimension mismatch".into()));
        }
        for b in lattice.basis() {
            if !lattice.pair(&lambda_bar, b).is_integer() {
                return Err(EvalError::ConstraintViolation(format!(
                    "lambda_bar not in L*: (lambda|basis) = {}",
                    lattice.pair(&lambda_bar, b)
                )));
            }
        }
        Ok(LatticeWeight { degree, lambda_bar })
    }

    /// Construction without the L* membership check, for the shifted weights
    /// lambda + gamma0 of the variant family (gamma0 lies in L0* only).
    pub fn new_unchecked(degree: Q, lambda_bar: Vec<Q>) -> Self {
        LatticeWeight { degree, lambda_bar }
    }
}

/// Pairwise orthogonal isotropic vectors, orthogonal to the weight.
#[derive(Debug, Clone, PartialEq)]
pub struct IsotropicSet {
    pub elements: Vec<Vec<Q>>,
}

impl IsotropicSet {
    pub fn new(elements: Vec<Vec<Q>>, lattice: &Lattice, lambda_bar: &[Q]) -> EvalResult<Self> {
        for (i, b) in elements.iter().enumerate() {
            if !lattice.pair(b, b).is_zero() {
                return Err(EvalError::ConstraintViolation(format!("T[{i}] is not isotropic")));
            }
            if !lattice.pair(b, lambda_bar).is_zero() {
                return Err(EvalError::ConstraintViolation(format!("T[{i}] not orthogonal to lambda")));
            }
            for (j, c) in elements.iter().enumerate().skip(i + 1) {
                if !lattice.pair(b, c).is_zero() {
                    return Err(EvalError::ConstraintViolation(format!("T[{i}], T[{j}] not orthogonal")));
                }
            }
        }
        Ok(IsotropicSet { elements })
    }

    pub fn empty() -> Self {
        IsotropicSet { elements: Vec::new() }
    }
}

/// Enumerate all integer points n with ||n - center||_G <= radius, where G
/// is positive definite with Cholesky factor R (upper triangular, G = R^T R).
fn enumerate_ball(chol: &[Vec<f64>], center: &[f64], radius: f64, cap: usize) -> EvalResult<Vec<Vec<i64>>> {
    let l = chol.len();
    let mut out = Vec::new();
    let mut n = vec![0i64; l];
    // Depth-first from the last coordinate; remaining[i] is the budget left
    // after fixing coordinates i+1..l.
    fn rec(
        chol: &[Vec<f64>],
        center: &[f64],
        i: isize,
        n: &mut Vec<i64>,
        partial: &mut Vec<f64>, // partial[j] = sum_{t>i} R[j][t] (n[t]-center[t])
        budget: f64,
        out: &mut Vec<Vec<i64>>,
        cap: usize,
    ) -> EvalResult<()> {
        if i < 0 {
            out.push(n.clone());
            if out.len() > cap {
                return Err(EvalError::NonConvergent { max_terms: cap });
            }
            return Ok(());
        }
        let iu = i as usize;
        let rii = chol[iu][iu];
        // ||.||^2 contribution of coordinate i: (R[i][i](n_i - c_i) + partial[i])^2
        let c = center[iu] - partial[iu] / rii;
        let w = budget.sqrt() / rii;
        let lo = (c - w).ceil() as i64;
        let hi = (c + w).floor() as i64;
        for v in lo..=hi {
            n[iu] = v;
            let contrib = rii * (v as f64 - center[iu]) + partial[iu];
            let rem = budget - contrib * contrib;
            if rem < 0.0 {
                continue;
            }
            let mut new_partial = partial.clone();
            for j in 0..iu {
                new_partial[j] += chol[j][iu] * (v as f64 - center[iu]);
            }
            rec(chol, center, i - 1, n, &mut new_partial, rem, out, cap)?;
        }
        Ok(())
    }
    let mut partial = vec![0.0; l];
    rec(chol, center, l as isize - 1, &mut n, &mut partial, radius * radius, &mut out, cap)?;
    Ok(out)
}

/// Upper-triangular Cholesky factor of a positive definite f64 matrix.
fn cholesky_upper(g: &[Vec<f64>]) -> EvalResult<Vec<Vec<f64>>> {
    let n = g.len();
    let mut r = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i..n {
            let mut s = g[i][j];
            for k in 0..i {
                s -= r[k][i] * r[k][j];
            }
            if i == j {
                if s <= 0.0 {
                    return Err(EvalError::InvalidLattice);
                }
                r[i][j] = s.sqrt();
            } else {
                r[i][j] = s / r[i][i];
            }
        }
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantSign {
    Plus,
    Minus,
}

struct ThetaTermCtx<'a> {
    lattice: &'a Lattice,
    k: f64,
    lam_over_k: Vec<Q>,
    tau: C64,
    z: &'a [C64],
    kgram_int: Vec<Vec<i64>>, // k * gram, exact integers (for the parity weight)
}

/// Core evaluator shared by `lattice_theta` and `mock_theta_general`.
///
/// `weight_minus` turns on the (-1)^{k(alpha|alpha)} translation sign;
/// `t_set`/`den_sign` install the mock denominator factors.
fn theta_sum(
    ctx: &ThetaTermCtx,
    weight_minus: bool,
    t_set: &IsotropicSet,
    den_sign: f64,
    tr: &Truncation,
) -> EvalResult<C64> {
    let lat = ctx.lattice;
    let l = lat.rank();
    let gram_f: Vec<Vec<f64>> = lat.gram().iter().map(|r| r.iter().map(|&x| qf(x)).collect()).collect();
    let chol = cholesky_upper(&gram_f)?;
    let lam_f: Vec<f64> = ctx.lam_over_k.iter().map(|&x| qf(x)).collect();
    let _ = lam_f;

    // gamma = c + B n with c = lambda/k: (gamma|gamma) = n^T G n + 2 b.n + c0
    let b: Vec<f64> = (0..l).map(|i| qf(lat.pair(&ctx.lam_over_k, &lat.basis()[i]))).collect();
    let c0 = qf(lat.pair(&ctx.lam_over_k, &ctx.lam_over_k));
    // center n0 = -G^{-1} b
    let ginv = invert(&lat.gram()).ok_or(EvalError::InvalidLattice)?;
    let ginv_f: Vec<Vec<f64>> = ginv.iter().map(|r| r.iter().map(|&x| qf(x)).collect()).collect();
    let center: Vec<f64> = (0..l)
        .map(|i| -(0..l).map(|j| ginv_f[i][j] * b[j]).sum::<f64>())
        .collect();
    let min_norm = c0 - (0..l).map(|i| center[i] * b[i]).map(|x| -x).sum::<f64>(); // c0 + b.center
    // linear z-term: Im k(gamma|z) = k [Im(c|z) + sum n_i Im(b_i|z)]
    let pair_cz = |x: &[Q]| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for (i, xi) in x.iter().enumerate() {
            for (j, zj) in ctx.z.iter().enumerate() {
                acc += qf(xi * lat.ambient_gram[i][j]) * zj;
            }
        }
        acc
    };
    let w: Vec<f64> = (0..l)
        .map(|i| {
            let bi: Vec<Q> = lat.basis()[i].clone();
            pair_cz(&bi).im
        })
        .collect();
    let wnorm = {
        let mut s = 0.0;
        for i in 0..l {
            for j in 0..l {
                s += w[i] * ginv_f[i][j] * w[j];
            }
        }
        s.sqrt()
    };
    let y = ctx.tau.im;
    let k = ctx.k;
    // |term| <= exp(-pi k y rho^2 + 2 pi k wnorm rho + C): solve for rho at
    // tolerance tail_tol * pole_guard (the mock denominators are bounded
    // below by the guard).
    let tol = (tr.tail_tol * tr.pole_guard.min(1.0)).max(1e-300);
    let lin_at_center: f64 = (0..l).map(|i| center[i] * w[i]).sum();
    let cc = -PI * k * y * min_norm + 2.0 * PI * k * (pair_cz(&ctx.lam_over_k).im.abs() + lin_at_center.abs());
    // -pi k y rho^2 + 2 pi k wnorm rho + cc = ln(tol)
    let aq = PI * k * y;
    let bq = 2.0 * PI * k * wnorm;
    let cq = cc - tol.ln();
    let radius = ((bq + (bq * bq + 4.0 * aq * cq.max(0.0)).sqrt()) / (2.0 * aq)).max(1.0) + 2.0;

    let points = enumerate_ball(&chol, &center, radius, tr.max_terms)?;
    let mut total = C64::new(0.0, 0.0);
    for n in &points {
        // exact rational gamma in ambient coordinates
        let mut gamma: Vec<Q> = ctx.lam_over_k.clone();
        for (i, &ni) in n.iter().enumerate() {
            for (gd, bd) in gamma.iter_mut().zip(&lat.basis()[i]) {
                *gd += Q::from_integer(ni) * *bd;
            }
        }
        let gg = qf(lat.pair(&gamma, &gamma));
        let gz = pair_cz(&gamma);
        let mut term = (PI * I * k * (ctx.tau * gg + 2.0 * gz)).exp();
        if weight_minus {
            // (-1)^{k (alpha|alpha)} on the lattice part alpha = B n
            let mut kaa: i64 = 0;
            for i in 0..l {
                for j in 0..l {
                    kaa += n[i] * ctx.kgram_int[i][j] * n[j];
                }
            }
            if kaa.rem_euclid(2) == 1 {
                term = -term;
            }
        }
        for beta in &t_set.elements {
            let gb = qf(lat.pair(&gamma, beta));
            let bz = pair_cz(beta);
            let factor = C64::new(1.0, 0.0)
                + den_sign * (-2.0 * PI * I * (ctx.tau * gb + bz)).exp();
            if factor.norm() < tr.pole_guard {
                return Err(EvalError::PoleProximity { dist: factor.norm(), guard: tr.pole_guard });
            }
            term /= factor;
        }
        total += term;
    }
    Ok(total)
}

fn build_ctx<'a>(
    lam: &LatticeWeight,
    lattice: &'a Lattice,
    tau: C64,
    z: &'a [C64],
) -> EvalResult<ThetaTermCtx<'a>> {
    if tau.im <= 0.0 {
        return Err(EvalError::UpperHalfPlane);
    }
    if z.len() != lattice.ambient_dim() {
        return Err(EvalError::ConstraintViolation("z dimension mismatch".into()));
    }
    if !lattice.scaled_is_integral(lam.degree) {
        return Err(EvalError::ConstraintViolation("kL not contained in L*".into()));
    }
    let k = lam.degree;
    let lam_over_k: Vec<Q> = lam.lambda_bar.iter().map(|&x| x / k).collect();
    let g = lattice.gram();
    let l = lattice.rank();
    let kgram_int: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| (k * g[i][j]).to_integer()).collect())
        .collect();
    Ok(ThetaTermCtx { lattice, k: qf(k), lam_over_k, tau, z, kgram_int })
}

/// Jacobi form Theta_lambda of degree k on the lattice L.
pub fn lattice_theta(
    lam: &LatticeWeight,
    lattice: &Lattice,
    tau: C64,
    z: &[C64],
    t: C64,
    tr: &Truncation,
) -> EvalResult<C64> {
    let ctx = build_ctx(lam, lattice, tau, z)?;
    let sum = theta_sum(&ctx, false, &IsotropicSet::empty(), 1.0, tr)?;
    Ok((2.0 * PI * I * ctx.k * t).exp() * sum)
}

/// The SL2(Z)-closed variant family Theta^{+-}_lambda and
/// Theta^{+-,gamma0}_lambda over the even sublattice.
pub fn lattice_theta_variant(
    sign: VariantSign,
    gamma0: Option<&[Q]>,
    lam: &LatticeWeight,
    lattice: &Lattice,
    tau: C64,
    z: &[C64],
    t: C64,
    tr: &Truncation,
) -> EvalResult<C64> {
    if sign == VariantSign::Plus && gamma0.is_none() {
        // Theta^+ = Theta_{lambda, L}
        return lattice_theta(lam, lattice, tau, z, t, tr);
    }
    let (even, beta0) = lattice.even_sublattice(lam.degree)?;
    if let Some(g0) = gamma0 {
        // gamma0 must pair integrally with L0 but not with all of L
        let in_dual_even = even.basis().iter().all(|b| lattice.pair(g0, b).is_integer());
        let in_dual_full = lattice.basis().iter().all(|b| lattice.pair(g0, b).is_integer());
        if !in_dual_even || in_dual_full {
            return Err(EvalError::ConstraintViolation(
                "gamma0 must lie in L0* minus L*".into(),
            ));
        }
    }
    let shift: Vec<Q> = match gamma0 {
        Some(g0) => g0.to_vec(),
        None => vec![Q::zero(); lattice.ambient_dim()],
    };
    let base: Vec<Q> = lam
        .lambda_bar
        .iter()
        .zip(&shift)
        .map(|(a, b)| *a + *b)
        .collect();
    let shifted: Vec<Q> = base
        .iter()
        .zip(&beta0)
        .map(|(a, b)| *a + lam.degree * *b)
        .collect();
    let w1 = LatticeWeight::new_unchecked(lam.degree, base);
    let w2 = LatticeWeight::new_unchecked(lam.degree, shifted);
    let t1 = lattice_theta(&w1, &even, tau, z, t, tr)?;
    let t2 = lattice_theta(&w2, &even, tau, z, t, tr)?;
    Ok(match sign {
        VariantSign::Plus => t1 + t2,
        VariantSign::Minus => t1 - t2,
    })
}

/// General mock theta function Theta^{+-}_{lambda,T} with isotropic set T.
pub fn mock_theta_general(
    lam: &LatticeWeight,
    lattice: &Lattice,
    t_set: &IsotropicSet,
    sign: VariantSign,
    tau: C64,
    z: &[C64],
    t: C64,
    tr: &Truncation,
) -> EvalResult<C64> {
    let ctx = build_ctx(lam, lattice, tau, z)?;
    let (weight_minus, den_sign) = match sign {
        VariantSign::Plus => (false, 1.0),
        VariantSign::Minus => (true, -1.0),
    };
    let sum = theta_sum(&ctx, weight_minus, t_set, den_sign, tr)?;
    Ok((2.0 * PI * I * ctx.k * t).exp() * sum)
}

/// Affine weight written as (level, lambda_bar, delta coefficient).
#[derive(Debug, Clone, PartialEq)]
pub struct AffineWeight {
    pub level: Q,
    pub lambda_bar: Vec<Q>,
    pub delta_coeff: Q,
}

/// Translation t_gamma(lambda) = lambda + lambda(K) gamma
/// - ((lambda|gamma) + (1/2) lambda(K)(gamma|gamma)) delta, exact.
pub fn translate_weight(gram: &[Vec<Q>], gamma: &[Q], lam: &AffineWeight) -> AffineWeight {
    let k = lam.level;
    let lambda_bar: Vec<Q> = lam
        .lambda_bar
        .iter()
        .zip(gamma)
        .map(|(l, g)| *l + k * *g)
        .collect();
    let lg = dot_gram(gram, &lam.lambda_bar, gamma);
    let gg = dot_gram(gram, gamma, gamma);
    AffineWeight {
        level: k,
        lambda_bar,
        delta_coeff: lam.delta_coeff - (lg + k * gg / Q::from_integer(2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::{HalfInt, QuarterInt};
    use crate::theta::{theta_jm, theta_minus_jm};

    const TR: Truncation = Truncation { tail_tol: 1e-14, max_terms: 100_000, pole_guard: 1e-6 };

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn rank1_a2() -> Lattice {
        Lattice::from_gram(vec![vec![q(2, 1)]]).unwrap()
    }

    #[test]
    fn rejects_indefinite_gram() {
        assert!(Lattice::from_gram(vec![vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(0, 1)]]).is_err());
        assert!(Lattice::from_gram(vec![vec![q(-2, 1)]]).is_err());
    }

    #[test]
    fn rank1_reproduces_theta_jm() {
        // z scalar relates to basis coords by z_vec = (z/2) alpha
        let lat = rank1_a2();
        let tau = c(0.1, 1.2);
        let t = c(0.03, 0.0);
        for (j, m) in [(0i64, 1i64), (1, 1), (1, 2), (3, 2), (2, 3)] {
            let z = c(0.25, -0.1);
            let lam = LatticeWeight::new(q(m, 1), vec![q(j, 2)], &lat).unwrap();
            let via_lattice = lattice_theta(&lam, &lat, tau, &[z / 2.0], t, &TR).unwrap();
            let direct = theta_jm(HalfInt::from_int(j), m, tau, z, t, &TR).unwrap();
            assert!(
                (via_lattice - direct).norm() < 1e-12 * direct.norm().max(1.0),
                "j={j} m={m}: {via_lattice} vs {direct}"
            );
        }
    }

    #[test]
    fn weight_translation_invariance() {
        // Theta_{lambda + k alpha + aK} = Theta_lambda for alpha in L
        let lat = rank1_a2();
        let tau = c(0.2, 0.9);
        let z = [c(0.11, 0.07)];
        let lam = LatticeWeight::new(q(2, 1), vec![q(1, 2)], &lat).unwrap();
        let shifted = LatticeWeight::new(q(2, 1), vec![q(1, 2) + q(2, 1) * q(3, 1)], &lat).unwrap();
        let a = lattice_theta(&lam, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        let b = lattice_theta(&shifted, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn rank2_zero_weight_splits() {
        // diag(2,2) factors into two rank-1 thetas
        let lat = Lattice::from_gram(vec![vec![q(2, 1), q(0, 1)], vec![q(0, 1), q(2, 1)]]).unwrap();
        let tau = c(0.0, 1.0);
        let z = [c(0.1, 0.0), c(0.2, 0.0)];
        let lam = LatticeWeight::new(q(1, 1), vec![q(1, 2), q(0, 1)], &lat).unwrap();
        let v = lattice_theta(&lam, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        let f1 = theta_jm(HalfInt::from_int(1), 1, tau, 2.0 * z[0], c(0.0, 0.0), &TR).unwrap();
        let f2 = theta_jm(HalfInt::from_int(0), 1, tau, 2.0 * z[1], c(0.0, 0.0), &TR).unwrap();
        assert!((v - f1 * f2).norm() < 1e-12 * v.norm().max(1.0));
    }

    #[test]
    fn variant_minus_matches_theta_minus() {
        // rank-1, degree k = m + 1/2: Theta^- over L0 reproduces Theta^-_{j,m}
        let lat = rank1_a2();
        let tau = c(0.2, 1.0);
        let t = c(0.05, 0.0);
        for m2 in [1i64, 3, 5] {
            // degree k = m2/2 with m2 odd: k(alpha|alpha) = m2 odd
            let k = q(m2, 2);
            for j2 in [1i64, 3] {
                let z = c(0.1, 0.04);
                let lam = LatticeWeight::new_unchecked(k, vec![q(j2, 4)]);
                let v = lattice_theta_variant(VariantSign::Minus, None, &lam, &lat, tau, &[z / 2.0], t, &TR)
                    .unwrap();
                let d = theta_minus_jm(
                    HalfInt::from_twice(j2),
                    QuarterInt::from_times4(2 * m2),
                    tau,
                    z,
                    t,
                    &TR,
                )
                .unwrap();
                assert!(
                    (v - d).norm() < 1e-12 * d.norm().max(1.0),
                    "m={m2}/2 j={j2}/2: {v} vs {d}"
                );
            }
        }
    }

    #[test]
    fn variant_plus_is_plain_theta() {
        let lat = rank1_a2();
        let tau = c(0.15, 1.15);
        let z = [c(0.21, 0.02)];
        let lam = LatticeWeight::new_unchecked(q(3, 2), vec![q(1, 2)]);
        let plus = lattice_theta_variant(VariantSign::Plus, None, &lam, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        let plain = lattice_theta(&lam, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        assert!((plus - plain).norm() < 1e-12 * plain.norm().max(1.0));
    }

    #[test]
    fn variant_requires_odd_vector() {
        let lat = rank1_a2();
        let lam = LatticeWeight::new_unchecked(q(1, 1), vec![q(1, 2)]);
        // k(alpha|alpha) = 2: everything even
        let r = lattice_theta_variant(
            VariantSign::Minus,
            None,
            &lam,
            &lat,
            c(0.0, 1.0),
            &[c(0.1, 0.0)],
            c(0.0, 0.0),
            &TR,
        );
        assert!(matches!(r, Err(EvalError::InvalidVariant)));
    }

    #[test]
    fn mock_theta_empty_t_is_lattice_theta() {
        let lat = rank1_a2();
        let tau = c(0.12, 1.31);
        let z = [c(0.17, -0.03)];
        let lam = LatticeWeight::new(q(2, 1), vec![q(3, 2)], &lat).unwrap();
        let a = mock_theta_general(&lam, &lat, &IsotropicSet::empty(), VariantSign::Plus, tau, &z, c(0.0, 0.0), &TR)
            .unwrap();
        let b = lattice_theta(&lam, &lat, tau, &z, c(0.0, 0.0), &TR).unwrap();
        assert!((a - b).norm() < 1e-12 * b.norm().max(1.0));
    }

    #[test]
    fn dual_cosets_rank1() {
        let lat = rank1_a2();
        // k = m: |L*/kL| = 2m
        for m in 1..4i64 {
            let reps = lat.dual_coset_reps(q(m, 1)).unwrap();
            assert_eq!(reps.len(), (2 * m) as usize);
        }
    }

    #[test]
    fn translate_group_law() {
        let gram = vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]];
        let lam = AffineWeight { level: q(3, 2), lambda_bar: vec![q(1, 3), q(-2, 5)], delta_coeff: q(7, 4) };
        let gamma = vec![q(2, 3), q(-1, 2)];
        let neg: Vec<Q> = gamma.iter().map(|x| -*x).collect();
        let round = translate_weight(&gram, &neg, &translate_weight(&gram, &gamma, &lam));
        assert_eq!(round, lam);
        let zero = vec![Q::zero(), Q::zero()];
        assert_eq!(translate_weight(&gram, &zero, &lam), lam);
        // level preserved
        assert_eq!(translate_weight(&gram, &gamma, &lam).level, lam.level);
    }
}
