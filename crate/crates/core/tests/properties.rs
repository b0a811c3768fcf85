use std::f64::consts::PI;

use landau_delta::bound::{
    energy_sum, ground_state_eval, solve_b_exact, solve_b_log, transmutation_lambda,
};
use landau_delta::current::{current_paper, curl_closed, multi_center_current, VortexCenter, VortexConfig};
use landau_delta::landau::basis_u;
use landau_delta::params::{derive_scales, PhysicalParams};
use landau_delta::special::{digamma, trigamma};
use landau_delta::zero_field::{localization_ratio_exact, localization_ratio_paper};
use landau_delta::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_solution_satisfies_condition(lambda in 1.0f64..60.0, log_n in 0u32..8) {
        let n = 10u64.pow(log_n);
        let sol = solve_b_exact(lambda, n).unwrap();
        prop_assert!(sol.b > 0.0);
        prop_assert!(sol.residual().unwrap().abs() <= 1e-10);
        prop_assert!((sol.energy + sol.b - 0.5).abs() < 1e-12 * sol.b.max(1.0));
    }

    #[test]
    fn b_grows_with_coupling(lambda in 1.0f64..30.0, bump in 1.01f64..2.0, log_n in 1u32..7) {
        let n = 10u64.pow(log_n);
        prop_assert!(solve_b_exact(lambda * bump, n).unwrap().b > solve_b_exact(lambda, n).unwrap().b);
    }

    #[test]
    fn energy_sum_decreases(b in 1e-6f64..1e3, step in 1e-3f64..1.0, n in 1u64..100_000) {
        prop_assert!(energy_sum(b * (1.0 + step), n).unwrap() < energy_sum(b, n).unwrap());
    }

    #[test]
    fn transmutation_inverts_log_method(log_n in 2u32..9, b in 1e-3f64..1.0) {
        let n = 10u64.pow(log_n);
        let l = transmutation_lambda(n, b).unwrap();
        let back = solve_b_log(l, n).unwrap().b;
        prop_assert!(((back - b) / b).abs() <= 1e-12);
    }

    #[test]
    fn digamma_trigamma_recurrences(x in 1e-3f64..1e4) {
        prop_assert!((digamma(x + 1.0).unwrap() - digamma(x).unwrap() - 1.0 / x).abs() <= 1e-12 * (1.0 / x).max(1.0));
        let t = trigamma(x).unwrap() - trigamma(x + 1.0).unwrap();
        prop_assert!((t - 1.0 / (x * x)).abs() <= 1e-11 * (1.0 / (x * x)).max(1.0));
    }

    #[test]
    fn basis_is_translation_covariant(n in 0usize..40, y in -5.0f64..5.0, y0 in -5.0f64..5.0, shift in -3.0f64..3.0) {
        let a = basis_u(n, y, y0, 1.0).unwrap();
        let b = basis_u(n, y + shift, y0 + shift, 1.0).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-3));
    }

    #[test]
    fn ground_modulus_is_radial(r in 0.0f64..5.0, t1 in 0.0f64..6.3, t2 in 0.0f64..6.3) {
        let s = derive_scales(&PhysicalParams::natural(1.0).unwrap()).unwrap();
        let a = ground_state_eval(r * t1.cos(), r * t1.sin(), &s).norm();
        let b = ground_state_eval(r * t2.cos(), r * t2.sin(), &s).norm();
        prop_assert!((a - b).abs() <= 1e-14 * a.max(1e-300));
    }

    #[test]
    fn current_is_azimuthal(x in -4.0f64..4.0, y in -4.0f64..4.0) {
        let s = derive_scales(&PhysicalParams::gaussian(2.0, 1.0, 1.0).unwrap()).unwrap();
        let (x, y) = (x * s.a(), y * s.a());
        let j = current_paper(x, y, &s);
        prop_assert!((j.jx * x + j.jy * y).abs() <= 1e-12 * j.magnitude() * x.hypot(y));
    }

    #[test]
    fn curl_sign_structure(r in 0.0f64..5.0, t in 0.0f64..6.3) {
        let s = derive_scales(&PhysicalParams::natural(1.0).unwrap()).unwrap();
        let c = curl_closed(r * t.cos(), r * t.sin(), &s);
        if r < 2f64.sqrt() - 1e-9 {
            prop_assert!(c > 0.0);
        } else if r > 2f64.sqrt() + 1e-9 {
            prop_assert!(c < 0.0);
        }
    }

    #[test]
    fn silent_vortices(x in -3.0f64..3.0, y in -3.0f64..3.0) {
        let s = derive_scales(&PhysicalParams::natural(1.0).unwrap()).unwrap();
        let cfg = VortexConfig::new(
            vec![VortexCenter::new(4.0, 0.0, 0.0).unwrap(), VortexCenter::new(-4.0, 1.0, 0.0).unwrap()],
            &s,
        ).unwrap();
        prop_assert_eq!(multi_center_current(&cfg, Complex64::new(x, y)).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn localization_estimate_is_rescaled(e0 in 0.1f64..0.5, b in 1.0f64..50.0) {
        let k = localization_ratio_exact(1.0, 1.0).unwrap() / localization_ratio_paper(1.0, 1.0);
        let q = localization_ratio_exact(e0, b).unwrap() / localization_ratio_paper(e0, b);
        prop_assert!(((q - k) / k).abs() <= 1e-12);
        prop_assert!((q - 1.0).abs() <= 0.05);
    }
}

#[test]
fn log_form_converges_to_exact_at_large_cutoff() {
    // N |b_exact - b_log| / b_exact tends to (e^{4π/λ} + 1) / 2
    for lambda in [2.0 * PI, 4.0 * PI] {
        let limit = ((4.0 * PI / lambda).exp() + 1.0) / 2.0;
        let n = 1_000_000u64;
        let e = solve_b_exact(lambda, n).unwrap().b;
        let l = solve_b_log(lambda, n).unwrap().b;
        let scaled = (e - l).abs() / e * n as f64;
        assert!(((scaled - limit) / limit).abs() < 1e-3, "{lambda}: {scaled} vs {limit}");
    }
}
