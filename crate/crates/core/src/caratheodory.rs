//! Growth bound for the log-derivative of Carathéodory functions and the
//! image of a centered disk under `w(z) = (z + 1)/(z + 2)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Closed disk `|w - center| <= radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0);
        Disk { center, radius }
    }

    pub fn contains(&self, w: Complex64) -> bool {
        (w - self.center).norm() <= self.radius
    }
}

/// Sharp bound on `|z p'(z) / p(z)|` for `|z| = r`, valid for every `p` with
/// `p(0) = 1` and `Re p > alpha` on the unit disk.
pub fn log_deriv_bound(alpha: f64, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!("order {alpha} not in [0, 1)")));
    }
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("radius {r} not in [0, 1)")));
    }
    Ok(2.0 * (1.0 - alpha) * r / ((1.0 - r) * (1.0 + (1.0 - 2.0 * alpha) * r)))
}

/// Image of `|z| <= r` under `(z + 1)/(z + 2)`.
///
/// The map sends the real diameter `[-r, r]` to `[(1-r)/(2-r), (1+r)/(2+r)]`,
/// which is a diameter of the image disk.
pub fn mobius_image_disk(r: f64) -> Disk {
    let d = 4.0 - r * r;
    Disk::new(Complex64::new((2.0 - r * r) / d, 0.0), r / d)
}

/// `(z + 1)/(z + 2)`.
pub fn mobius(z: Complex64) -> Complex64 {
    (z + 1.0) / (z + 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn bound_examples() {
        assert!((log_deriv_bound(0.0, 0.5).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((log_deriv_bound(0.5, 0.5).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(log_deriv_bound(0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn bound_domain() {
        assert!(matches!(log_deriv_bound(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(log_deriv_bound(1.0, 0.5), Err(Error::Domain(_))));
        assert!(matches!(log_deriv_bound(-0.1, 0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_monotone_on_grid() {
        for i in 0..50 {
            let alpha = i as f64 / 50.0;
            let mut prev = -1.0;
            for j in 0..200 {
                let r = j as f64 / 201.0;
                let b = log_deriv_bound(alpha, r).unwrap();
                assert!(b > prev);
                prev = b;
                if r > 0.0 && i > 0 {
                    assert!(b < log_deriv_bound((i - 1) as f64 / 50.0, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn bound_attained_by_kernel() {
        // p(z) = (1+z)/(1-z): z p'/p = 2z/(1-z^2).
        for &r in &[0.1, 0.25, 0.5, 0.9] {
            let z = Complex64::new(-r, 0.0);
            let val = (2.0 * z / (1.0 - z * z)).norm();
            assert!((val - 2.0 * r / (1.0 - r * r)).abs() < 1e-15);
            assert!((val - log_deriv_bound(0.0, r).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn disk_limits() {
        let d0 = mobius_image_disk(0.0);
        assert_eq!(d0.center.re, 0.5);
        assert_eq!(d0.radius, 0.0);
        let d1 = mobius_image_disk(1.0);
        assert!((d1.center.re - 1.0 / 3.0).abs() < 1e-15);
        assert!((d1.radius - 1.0 / 3.0).abs() < 1e-15);
    }

    /// Enclosing circle of the mapped boundary, from the real-axis extremes
    /// of the sampled image (the image is symmetric about the real axis).
    #[test]
    fn disk_matches_sampled_image() {
        let r = 0.5;
        let n = 10_000;
        let pts: Vec<Complex64> = (0..n)
            .map(|k| mobius(Complex64::from_polar(r, 2.0 * PI * k as f64 / n as f64)))
            .collect();
        let lo = pts.iter().map(|w| w.re).fold(f64::INFINITY, f64::min);
        let hi = pts.iter().map(|w| w.re).fold(f64::NEG_INFINITY, f64::max);
        let (c, rad) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
        assert!((c - 0.466_666_666_666_666_7).abs() < 1e-9);
        assert!((rad - 0.133_333_333_333_333_3).abs() < 1e-9);
        let disk = mobius_image_disk(r);
        assert!((disk.center.re - c).abs() < 1e-9);
        assert!((disk.radius - rad).abs() < 1e-9);
        // every mapped point lies on the circle
        for w in pts {
            assert!(((w - disk.center).norm() - disk.radius).abs() < 1e-12);
        }
    }
}
