//! Image disks of `z f'(z)/f(z)` over `|z| <= r` for the three classes, and
//! the real envelopes they induce.
//!
//! Every member of a class factors as a product or quotient of Carathéodory
//! functions times `z + z^2/2`, so `z f'/f` is a sum of Carathéodory
//! log-derivatives plus `2(z+1)/(z+2)`. The image disk is centered at
//! `(4 - 2r^2)/(4 - r^2)` for every class; only the radius differs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::regions::Side;

/// One of the three function classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassId {
    /// `Re(f/g) > 0` with `Re(g/(z + z^2/2)) > 0`.
    F1,
    /// `|f/g - 1| < 1` with `Re(g/(z + z^2/2)) > 0`.
    F2,
    /// `Re(f/(z + z^2/2)) > 0`.
    F3,
}

pub const ALL_CLASSES: [ClassId; 3] = [ClassId::F1, ClassId::F2, ClassId::F3];

impl ClassId {
    pub fn name(&self) -> &'static str {
        match self {
            ClassId::F1 => "f1",
            ClassId::F2 => "f2",
            ClassId::F3 => "f3",
        }
    }

    /// Orders of the Carathéodory factors in the factorization of a member.
    ///
    /// For F2 the order-1/2 factor sits in the denominator; its log-derivative
    /// enters with a minus sign, which the disk radius does not see.
    pub fn factor_orders(&self) -> &'static [f64] {
        match self {
            ClassId::F1 => &[0.0, 0.0],
            ClassId::F2 => &[0.5, 0.0],
            ClassId::F3 => &[0.0],
        }
    }

    /// Numerator and denominator of the envelope on the given side, as
    /// polynomials in `r`: the lower envelope for [`Side::Left`] and the upper
    /// one for [`Side::Right`].
    pub fn envelope_fraction(&self, side: Side) -> (Polynomial, Polynomial) {
        let p = |c: &[f64]| Polynomial::new(c.to_vec());
        // (2 - r)(1 - r^2) and (2 + r)(1 - r^2)
        let lower_den = p(&[2.0, -1.0, -2.0, 1.0]);
        let upper_den = p(&[2.0, 1.0, -2.0, -1.0]);
        match (self, side) {
            (ClassId::F1, Side::Left) => (p(&[2.0, -10.0, 2.0, 2.0]), lower_den),
            (ClassId::F2, Side::Left) => (p(&[2.0, -8.0, -1.0, 3.0]), lower_den),
            (ClassId::F3, Side::Left) => (p(&[2.0, -6.0, 0.0, 2.0]), lower_den),
            (ClassId::F1, Side::Right) => (p(&[2.0, 10.0, 2.0, -2.0]), upper_den),
            // no cancellation against (4 - r^2) here
            (ClassId::F2, Side::Right) => (
                p(&[4.0, 14.0, -2.0, -5.0, 1.0]),
                p(&[4.0, 0.0, -5.0, 0.0, 1.0]),
            ),
            (ClassId::F3, Side::Right) => (p(&[2.0, 6.0, 0.0, -2.0]), upper_den),
        }
    }

    /// Radius-only polynomial whose smallest positive zero is the radius of
    /// starlikeness (and univalence) of the class.
    pub fn univalence_polynomial(&self) -> Polynomial {
        let c: &[f64] = match self {
            ClassId::F1 => &[1.0, -5.0, 1.0, 1.0],
            ClassId::F2 => &[2.0, -8.0, -1.0, 3.0],
            ClassId::F3 => &[1.0, -3.0, 0.0, 1.0],
        };
        Polynomial::new(c.to_vec())
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(ClassId::F1),
            "f2" => Ok(ClassId::F2),
            "f3" => Ok(ClassId::F3),
            other => Err(Error::Domain(format!("unknown class '{other}'"))),
        }
    }
}

/// Center of the image disk, `(4 - 2r^2)/(4 - r^2)`.
pub fn center(r: f64) -> f64 {
    (4.0 - 2.0 * r * r) / (4.0 - r * r)
}

/// Radius of the image disk of `|z| <= r` under `z f'/f`.
pub fn halo_radius(class: ClassId, r: f64) -> f64 {
    let d = (1.0 - r * r) * (4.0 - r * r);
    let r2 = r * r;
    match class {
        ClassId::F1 => 6.0 * r * (3.0 - r2) / d,
        ClassId::F2 => r * (14.0 + 4.0 * r - 5.0 * r2 - r2 * r) / d,
        ClassId::F3 => 2.0 * r * (5.0 - 2.0 * r2) / d,
    }
}

/// Lower bound of `Re(z f'/f)` over `|z| <= r`.
pub fn lower_envelope(class: ClassId, r: f64) -> f64 {
    let (num, den) = class.envelope_fraction(Side::Left);
    num.eval(r) / den.eval(r)
}

/// `center + halo`, the largest real part reachable over `|z| <= r`.
pub fn upper_envelope(class: ClassId, r: f64) -> f64 {
    let (num, den) = class.envelope_fraction(Side::Right);
    num.eval(r) / den.eval(r)
}

/// Envelope on the side where a region with that threshold is touched first.
pub fn envelope(class: ClassId, side: Side, r: f64) -> f64 {
    match side {
        Side::Left => lower_envelope(class, r),
        Side::Right => upper_envelope(class, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caratheodory::{log_deriv_bound, mobius_image_disk};

    #[test]
    fn center_values() {
        assert_eq!(center(0.0), 1.0);
        assert!((center(0.2) - 0.989_899).abs() < 1e-6);
        assert!((center(0.1) - 0.997_494).abs() < 1e-6);
    }

    #[test]
    fn halo_values() {
        assert_eq!(halo_radius(ClassId::F1, 0.0), 0.0);
        // oracle: sum of Carathéodory bounds plus twice the Möbius radius
        let oracle = |r: f64, orders: &[f64]| {
            orders
                .iter()
                .map(|&a| log_deriv_bound(a, r).unwrap())
                .sum::<f64>()
                + 2.0 * mobius_image_disk(r).radius
        };
        let f1 = oracle(0.5, &[0.0, 0.0]);
        assert!((f1 - 2.933_333_333_333_333).abs() < 1e-12);
        assert!((halo_radius(ClassId::F1, 0.5) - f1).abs() < 1e-12);
        let f3 = oracle(0.5, &[0.0]);
        assert!((f3 - 1.6).abs() < 1e-12);
        assert!((halo_radius(ClassId::F3, 0.5) - f3).abs() < 1e-12);
    }

    #[test]
    fn envelope_values() {
        for c in ALL_CLASSES {
            assert_eq!(lower_envelope(c, 0.0), 1.0);
            assert_eq!(upper_envelope(c, 0.0), 1.0);
        }
        assert!(lower_envelope(ClassId::F1, 0.210756).abs() < 1e-5);
        assert!(lower_envelope(ClassId::F2, 0.248032).abs() < 1e-5);
        assert!(lower_envelope(ClassId::F3, 0.347296).abs() < 1e-5);
        assert!((upper_envelope(ClassId::F1, 0.0918) - 2f64.sqrt()).abs() < 1e-3);
        assert!((upper_envelope(ClassId::F3, 0.1645) - 2f64.sqrt()).abs() < 1e-3);
    }

    #[test]
    fn envelope_is_center_plus_minus_halo() {
        for c in ALL_CLASSES {
            for i in 0..200 {
                let r = 0.95 * i as f64 / 199.0;
                let lo = center(r) - halo_radius(c, r);
                let hi = center(r) + halo_radius(c, r);
                assert!((lower_envelope(c, r) - lo).abs() < 1e-12, "{c} r={r}");
                assert!((upper_envelope(c, r) - hi).abs() < 1e-12, "{c} r={r}");
            }
        }
    }

    #[test]
    fn univalence_polynomial_is_envelope_numerator() {
        for c in ALL_CLASSES {
            let (num, _) = c.envelope_fraction(Side::Left);
            let p = c.univalence_polynomial();
            let ratio = num.coeff(0) / p.coeff(0);
            assert_eq!(num, p.scaled(ratio));
        }
    }

    #[test]
    fn parse() {
        assert_eq!("f2".parse::<ClassId>().unwrap(), ClassId::F2);
        assert_eq!("F3".parse::<ClassId>().unwrap(), ClassId::F3);
        assert!("f4".parse::<ClassId>().is_err());
    }
}
