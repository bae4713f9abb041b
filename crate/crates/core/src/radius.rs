//! Sharp radius equations for every (class, region) pair and their solutions.
//!
//! The radius is where the envelope on the contact side reaches the region's
//! threshold, `num(R) / den(R) = tau`. Clearing the denominator gives the
//! polynomial `num - tau * den`, whose smallest positive root is `R`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::classes::{self, ClassId, ALL_CLASSES};
use crate::error::{Error, Result};
use crate::extremal::{eval_sf, ExtremalId};
use crate::poly::Polynomial;
use crate::regions::{Side, TargetRegion, NAMED_REGIONS};

/// Bound on `|equation(R)|` and on the sharpness certificate gap.
pub const CERTIFICATE_TOL: f64 = 1e-9;

/// Warning attached to the single bound-only table entry.
pub const NON_SHARP_WARNING: &str =
    "bound only: the extremal function does not attain the upper envelope for f2, \
     so this radius is a lower bound with no sharpness claim";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusQuery {
    pub class: ClassId,
    pub region: TargetRegion,
}

impl RadiusQuery {
    pub fn new(class: ClassId, region: TargetRegion) -> Self {
        RadiusQuery { class, region }
    }

    /// Whether the extremal function of the class attains the radius.
    pub fn is_sharp(&self) -> bool {
        !(self.class == ClassId::F2 && self.region == TargetRegion::Lemniscate)
    }

    fn validate(&self) -> Result<()> {
        if let TargetRegion::HalfPlane(alpha) = self.region {
            if !(0.0..1.0).contains(&alpha) {
                return Err(Error::Domain(format!(
                    "order alpha = {alpha} not in [0, 1)"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusResult {
    pub class: ClassId,
    pub region: TargetRegion,
    pub side: Side,
    pub tau: f64,
    pub radius: f64,
    pub equation: Polynomial,
    /// `|tau - envelope(radius)|`, computed from the rational envelope.
    pub residual: f64,
    /// Boundary contact point: `-R` for left thresholds, `+R` otherwise.
    pub contact: Complex64,
    pub sharp: bool,
    pub warning: Option<&'static str>,
}

impl RadiusResult {
    pub fn query(&self) -> RadiusQuery {
        RadiusQuery::new(self.class, self.region)
    }
}

/// Polynomial whose smallest root in `(0, 1)` is the queried radius.
pub fn radius_equation(q: &RadiusQuery) -> Result<Polynomial> {
    q.validate()?;
    let th = q.region.threshold();
    let (num, den) = q.class.envelope_fraction(th.side);
    Ok(num.sub_scaled(th.tau, &den))
}

/// Solves the radius equation and checks the extremal function at the contact.
pub fn solve_radius(q: &RadiusQuery, tol: f64) -> Result<RadiusResult> {
    let equation = radius_equation(q)?;
    let th = q.region.threshold();
    let radius = equation.smallest_positive_root(1.0, tol)?;
    let residual = (th.tau - classes::envelope(q.class, th.side, radius)).abs();
    let contact = match th.side {
        Side::Left => Complex64::new(-radius, 0.0),
        Side::Right => Complex64::new(radius, 0.0),
    };
    let sharp = q.is_sharp();
    Ok(RadiusResult {
        class: q.class,
        region: q.region,
        side: th.side,
        tau: th.tau,
        radius,
        equation,
        residual,
        contact,
        sharp,
        warning: (!sharp).then_some(NON_SHARP_WARNING),
    })
}

/// Queries in table order: per class, order 0, then the seven named regions.
pub fn table_queries() -> Vec<RadiusQuery> {
    ALL_CLASSES
        .iter()
        .flat_map(|&class| {
            std::iter::once(TargetRegion::HalfPlane(0.0))
                .chain(NAMED_REGIONS)
                .map(move |region| RadiusQuery::new(class, region))
        })
        .collect()
}

/// Every tabulated radius: 23 sharp entries and one bound.
pub fn radius_table(tol: f64) -> Vec<RadiusResult> {
    table_queries()
        .par_iter()
        .map(|q| solve_radius(q, tol).expect("every table equation has a root in (0, 1)"))
        .collect()
}

/// Value of the extremal quotient at the contact point, as compared against
/// the threshold: the real part on the left, the full value on the right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certificate {
    pub value: Complex64,
    /// `|Re value - tau|` on the left, `|value - tau|` on the right.
    pub gap: f64,
    /// Whether the open region contains `value`.
    pub inside: bool,
}

impl Certificate {
    pub fn holds(&self) -> bool {
        self.gap <= CERTIFICATE_TOL && !self.inside
    }
}

/// Evaluates the extremal quotient at the contact point of `result`.
pub fn sharpness_certificate(result: &RadiusResult) -> Result<Certificate> {
    let value = eval_sf(ExtremalId::for_class(result.class), result.contact)?;
    let gap = match result.side {
        Side::Left => (value.re - result.tau).abs(),
        Side::Right => (value - result.tau).norm(),
    };
    Ok(Certificate {
        value,
        gap,
        inside: result.region.contains(value)?,
    })
}

/// Checks on `n` radii in `[0, R)` that the image disk of every class member
/// sits inside the region by the disk-fit lemma. This is the containment half
/// of the argument; sharpness is [`sharpness_certificate`].
pub fn lemma_covers(result: &RadiusResult, n: usize) -> bool {
    (0..n).all(|i| {
        let r = result.radius * i as f64 / n as f64;
        result
            .region
            .disk_fits(classes::center(r), classes::halo_radius(result.class, r))
    })
}

/// Checks that the center of the image disk stays in the lemma's center
/// interval for `r` in `[0, R)`.
pub fn centers_in_interval(result: &RadiusResult, n: usize) -> bool {
    let interval = result.region.center_interval();
    (0..n).all(|i| interval.contains(classes::center(result.radius * i as f64 / n as f64)))
}
