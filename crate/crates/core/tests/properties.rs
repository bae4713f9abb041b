use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use starrad::caratheodory::log_deriv_bound;
use starrad::classes::{center, halo_radius, ALL_CLASSES};
use starrad::poly::{Polynomial, DEFAULT_TOL, SCAN_STEP};
use starrad::radius::{solve_radius, RadiusQuery};
use starrad::regions::{TargetRegion, NAMED_REGIONS};
use starrad::sampler::{sample_p, ClassMember, HerglotzSpec};

fn class_strategy() -> impl Strategy<Value = starrad::ClassId> {
    (0usize..3).prop_map(|i| ALL_CLASSES[i])
}

fn region_strategy() -> impl Strategy<Value = TargetRegion> {
    (0usize..NAMED_REGIONS.len()).prop_map(|i| NAMED_REGIONS[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // (x - a)(x - b)(x + 1) with 0 < a < b < 1
    #[test]
    fn root_is_smallest_and_brackets_sign_change(a in 0.01f64..0.5, gap in 0.01f64..0.49) {
        let b = a + gap;
        let p = Polynomial::new(vec![a * b, a * b - a - b, 1.0 - a - b, 1.0]);
        let root = p.smallest_positive_root(1.0, DEFAULT_TOL).unwrap();
        prop_assert!((root - a).abs() <= DEFAULT_TOL + 1e-15);
        prop_assert!(root >= a);
        prop_assert_eq!(p.smallest_positive_root(1.0, DEFAULT_TOL).unwrap(), root);
    }

    #[test]
    fn root_with_scan_step_separation(a in 0.02f64..0.9) {
        let b = a + 2.0 * SCAN_STEP;
        let p = Polynomial::new(vec![a * b, -(a + b), 1.0]);
        let root = p.smallest_positive_root(1.0, DEFAULT_TOL).unwrap();
        prop_assert!((root - a).abs() <= 2.0 * DEFAULT_TOL);
    }

    #[test]
    fn halfplane_membership(alpha in 0.0f64..1.0, re in -2.0f64..3.0, im in -3.0f64..3.0) {
        let w = Complex64::new(re, im);
        prop_assert_eq!(TargetRegion::HalfPlane(alpha).contains(w).unwrap(), re > alpha);
    }

    #[test]
    fn fitted_disks_lie_in_region(region in region_strategy(), t in 0.0f64..1.0, theta in 0.0f64..(2.0 * PI)) {
        let iv = region.center_interval();
        let a = iv.lo + (iv.hi - iv.lo) * (0.02 + 0.96 * t);
        let rho = region.max_disk_radius(a);
        prop_assume!(rho > 1e-6);
        let w = Complex64::new(a, 0.0) + Complex64::from_polar(rho * (1.0 - 1e-6), theta);
        prop_assert!(region.contains(w).unwrap(), "{region} a={a} rho={rho} w={w}");
        prop_assert!(region.disk_fits(a, rho * 0.999));
        prop_assert!(!region.disk_fits(a, rho * 1.001 + 1e-9));
    }

    #[test]
    fn caratheodory_samples_have_large_real_part(seed in any::<u64>(), r in 0.0f64..0.95, theta in 0.0f64..(2.0 * PI), half in any::<bool>()) {
        let alpha = if half { 0.5 } else { 0.0 };
        let spec = HerglotzSpec::random(&mut ChaCha8Rng::seed_from_u64(seed), alpha);
        let z = Complex64::from_polar(r, theta);
        prop_assert!(sample_p(&spec, z).re > alpha);
        prop_assert!(spec.log_derivative(z).norm() <= log_deriv_bound(alpha, r).unwrap() * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn member_quotient_stays_in_image_disk(class in class_strategy(), seed in any::<u64>(), r in 0.0f64..0.9, theta in 0.0f64..(2.0 * PI)) {
        let member = ClassMember::random(class, &mut ChaCha8Rng::seed_from_u64(seed));
        let w = member.sf(Complex64::from_polar(r, theta));
        prop_assert!((w - center(r)).norm() <= halo_radius(class, r) * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn halfplane_radius_decreases_in_alpha(class in class_strategy(), a in 0.0f64..0.9, d in 0.01f64..0.09) {
        let r = |x| solve_radius(&RadiusQuery::new(class, TargetRegion::HalfPlane(x)), DEFAULT_TOL).unwrap().radius;
        prop_assert!(r(a + d) < r(a));
    }

    #[test]
    fn solver_is_deterministic(class in class_strategy(), region in region_strategy()) {
        let q = RadiusQuery::new(class, region);
        prop_assert_eq!(solve_radius(&q, DEFAULT_TOL).unwrap(), solve_radius(&q, DEFAULT_TOL).unwrap());
    }
}

#[test]
fn minimum_of_real_part_is_on_negative_axis() {
    // Re s_f over |z| = r is smallest at z = -r for the extremal members
    for class in ALL_CLASSES {
        let m = ClassMember::extremal(class);
        for r in [0.05, 0.1, 0.2, 0.3] {
            let at_neg = m.sf(Complex64::new(-r, 0.0)).re;
            for j in 0..720 {
                let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / 720.0);
                assert!(m.sf(z).re >= at_neg - 1e-12, "{class} r={r} z={z}");
            }
        }
    }
}
