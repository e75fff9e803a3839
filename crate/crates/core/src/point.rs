//! Evaluation points and the series truncation policy.

use num_complex::Complex64;

use crate::error::{EvalError, EvalResult};

pub type C64 = Complex64;

/// A point (tau, z1, z2, t) of the domain X = { Im tau > 0 }.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularPoint {
    pub tau: C64,
    pub z1: C64,
    pub z2: C64,
    pub t: C64,
}

impl ModularPoint {
    /// Rejects Im tau <= 0.
    pub fn new(tau: C64, z1: C64, z2: C64, t: C64) -> EvalResult<Self> {
        if tau.im <= 0.0 {
            return Err(EvalError::UpperHalfPlane);
        }
        Ok(ModularPoint { tau, z1, z2, t })
    }

    pub fn with_t(self, t: C64) -> Self {
        ModularPoint { t, ..self }
    }
}

/// The same point in the (tau, u, v, t) coordinates of one of the two
/// families; the linear (z1, z2) <-> (u, v) maps live in `numerators`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UVPoint {
    pub tau: C64,
    pub u: C64,
    pub v: C64,
    pub t: C64,
}

impl UVPoint {
    pub fn new(tau: C64, u: C64, v: C64, t: C64) -> EvalResult<Self> {
        if tau.im <= 0.0 {
            return Err(EvalError::UpperHalfPlane);
        }
        Ok(UVPoint { tau, u, v, t })
    }
}

/// Series cutoff policy.
///
/// Gaussian-type series stop at the first index where the explicit tail
/// bound times a geometric safety factor 2 stays below `tail_tol` (for a
/// few consecutive terms); `max_terms` converts runaway summation into
/// `NonConvergent`; `pole_guard` is the rejection radius around pole loci,
/// measured in lattice coordinates of the relevant argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncation {
    pub tail_tol: f64,
    pub max_terms: usize,
    pub pole_guard: f64,
}

impl Truncation {
    pub fn new(tail_tol: f64, max_terms: usize, pole_guard: f64) -> EvalResult<Self> {
        if !(tail_tol >= 1e-16) {
            return Err(EvalError::InvalidTruncation(format!(
                "tail_tol {tail_tol:e} < 1e-16"
            )));
        }
        if max_terms == 0 {
            return Err(EvalError::InvalidTruncation("max_terms = 0".into()));
        }
        if !(pole_guard > 0.0 && pole_guard < 0.1) {
            return Err(EvalError::InvalidTruncation(format!(
                "pole_guard {pole_guard:e} outside (0, 0.1)"
            )));
        }
        Ok(Truncation { tail_tol, max_terms, pole_guard })
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation { tail_tol: 1e-14, max_terms: 10_000, pole_guard: 1e-6 }
    }
}

/// Distance from w to the nearest point of the shifted lattice
/// off + Z + tau Z, measured in lattice coordinates (alpha, beta) where
/// w - off = alpha + beta tau.
pub fn lattice_distance(w: C64, tau: C64, off: C64) -> f64 {
    let d = w - off;
    let beta = d.im / tau.im;
    let alpha = d.re - beta * tau.re;
    let fa = alpha - alpha.round();
    let fb = beta - beta.round();
    (fa * fa + fb * fb).sqrt()
}

/// Guard check: error out when w is within `guard` of off + Z + tau Z.
pub fn check_pole_distance(w: C64, tau: C64, off: C64, guard: f64) -> EvalResult<()> {
    let dist = lattice_distance(w, tau, off);
    if dist < guard {
        return Err(EvalError::PoleProximity { dist, guard });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane() {
        let i = C64::new(0.0, 1.0);
        assert!(ModularPoint::new(-i, C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)).is_err());
        assert!(ModularPoint::new(C64::new(0.3, 0.0), i, i, i).is_err());
        assert!(ModularPoint::new(i, i, i, i).is_ok());
    }

    #[test]
    fn truncation_invariants() {
        assert!(Truncation::new(1e-17, 10, 1e-6).is_err());
        assert!(Truncation::new(1e-14, 10, 0.5).is_err());
        assert!(Truncation::new(1e-14, 0, 1e-6).is_err());
        assert!(Truncation::new(1e-12, 100, 1e-3).is_ok());
    }

    #[test]
    fn lattice_distance_at_pole_and_off_pole() {
        let tau = C64::new(0.3, 1.1);
        let w = C64::new(2.0, 0.0) + tau * 3.0;
        assert!(lattice_distance(w, tau, C64::new(0.0, 0.0)) < 1e-12);
        let w2 = w + C64::new(0.5, 0.0);
        assert!(lattice_distance(w2, tau, C64::new(0.0, 0.0)) > 0.4);
    }
}
