//! Property tests over randomly drawn parameters for the cheap structural
//! invariants: reflection and shift laws of the thetas, oddness of E,
//! coordinate round trips, and the translation group law.

use num_complex::Complex64 as C64;
use num_rational::Rational64;
use proptest::prelude::*;

use mocktheta_core::halfint::HalfInt;
use mocktheta_core::lattice::{translate_weight, AffineWeight};
use mocktheta_core::numerators::{uv_map, uv_unmap, FamilyParams};
use mocktheta_core::point::{ModularPoint, Truncation};
use mocktheta_core::theta::theta_jm;
use mocktheta_core::zwegers::{gauss_e, real_coords};

fn tr() -> Truncation {
    Truncation::default()
}

fn tau_strategy() -> impl Strategy<Value = C64> {
    (-0.5f64..0.5, 0.8f64..2.0).prop_map(|(re, im)| C64::new(re, im))
}

fn z_strategy() -> impl Strategy<Value = C64> {
    (-0.35f64..0.35, -0.35f64..0.35).prop_map(|(re, im)| C64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn theta_reflection(tau in tau_strategy(), z in z_strategy(), j in -4i64..5, m in 1i64..4) {
        let zero = C64::new(0.0, 0.0);
        let l = theta_jm(HalfInt::from_int(j), m, tau, -z, zero, &tr()).unwrap();
        let r = theta_jm(HalfInt::from_int(-j), m, tau, z, zero, &tr()).unwrap();
        prop_assert!((l - r).norm() <= 1e-12 * r.norm().max(1.0));
    }

    #[test]
    fn theta_integer_shift_sign(tau in tau_strategy(), z in z_strategy(), j in -3i64..4, b in -2i64..3) {
        let zero = C64::new(0.0, 0.0);
        let m = 2;
        let l = theta_jm(HalfInt::from_int(j), m, tau, z + C64::new(b as f64, 0.0), zero, &tr()).unwrap();
        let sign = if (b * j).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let r = sign * theta_jm(HalfInt::from_int(j), m, tau, z, zero, &tr()).unwrap();
        prop_assert!((l - r).norm() <= 1e-11 * r.norm().max(1.0));
    }

    #[test]
    fn gauss_e_is_odd_and_bounded(x in -6.0f64..6.0) {
        prop_assert!((gauss_e(-x) + gauss_e(x)).abs() < 1e-15);
        prop_assert!(gauss_e(x).abs() <= 1.0);
    }

    #[test]
    fn real_coords_round_trip(tau in tau_strategy(), v in z_strategy()) {
        let rc = real_coords(tau, v).unwrap();
        let back = tau * rc.a - C64::new(rc.b, 0.0);
        prop_assert!((back - v).norm() < 1e-14);
    }

    #[test]
    fn uv_round_trip(tau in tau_strategy(), z1 in z_strategy(), z2 in z_strategy()) {
        for fp in [FamilyParams::new_a(1, 0, 1).unwrap(), FamilyParams::new_b(1, 1).unwrap()] {
            let p = ModularPoint { tau, z1, z2, t: C64::new(0.0, 0.0) };
            let back = uv_unmap(&fp, &uv_map(&fp, &p));
            prop_assert!((back.z1 - z1).norm() < 1e-14 && (back.z2 - z2).norm() < 1e-14);
        }
    }

    #[test]
    fn translation_group_law(
        ln in -20i64..20, ld in 1i64..6, g1n in -10i64..10, g2n in -10i64..10, gd in 1i64..4,
    ) {
        let q = Rational64::new;
        let gram = vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 1)]];
        let lam = AffineWeight { level: q(ln, ld), lambda_bar: vec![q(g2n, gd), q(ln + 1, 3)], delta_coeff: q(5, 7) };
        let gamma = vec![q(g1n, gd), q(g2n, gd + 1)];
        let neg: Vec<Rational64> = gamma.iter().map(|x| -*x).collect();
        let round = translate_weight(&gram, &neg, &translate_weight(&gram, &gamma, &lam));
        prop_assert_eq!(round, lam.clone());
        // K (the level) is fixed by every translation
        prop_assert_eq!(translate_weight(&gram, &gamma, &lam).level, lam.level);
    }
}
