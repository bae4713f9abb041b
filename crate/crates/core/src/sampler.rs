//! Monte-Carlo corroboration of the radii.
//!
//! Carathéodory functions of order `alpha` are drawn as
//! `alpha + (1 - alpha) * sum_k w_k (1 + e_k z)/(1 - e_k z)` with convex weights
//! `w_k` and unimodular kernel points `e_k`, i.e. Herglotz measures with finite
//! support. Class members are assembled from these factors and their
//! starlikeness quotients are tested against the target region.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{self, ClassId};
use crate::error::{Error, Result};
use crate::extremal::{eval_sf, ExtremalId};
use crate::regions::{Side, TargetRegion};

pub const DEFAULT_SAMPLES: usize = 500;
pub const DEFAULT_GRID: usize = 256;
pub const DEFAULT_MARGIN: f64 = 0.01;
pub const MAX_KERNELS: usize = 5;

/// Slack allowed on the image-disk bound.
pub const HALO_SLACK: f64 = 1e-9;

/// Finite Herglotz representation of a function in the Carathéodory class
/// of order `alpha`.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzSpec {
    weights: Vec<f64>,
    kernels: Vec<Complex64>,
    alpha: f64,
}

impl HerglotzSpec {
    pub fn new(weights: Vec<f64>, kernels: Vec<Complex64>, alpha: f64) -> Result<Self> {
        if weights.is_empty() || weights.len() != kernels.len() {
            return Err(Error::SpecMismatch(format!(
                "{} weights for {} kernels",
                weights.len(),
                kernels.len()
            )));
        }
        if weights.iter().any(|&w| w.is_nan() || w < 0.0)
            || (weights.iter().sum::<f64>() - 1.0).abs() > 1e-12
        {
            return Err(Error::SpecMismatch(
                "weights must be nonnegative and sum to 1".into(),
            ));
        }
        if kernels.iter().any(|k| (k.norm() - 1.0).abs() > 1e-12) {
            return Err(Error::SpecMismatch(
                "kernel points must be unimodular".into(),
            ));
        }
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Domain(format!("order {alpha} not in [0, 1)")));
        }
        Ok(HerglotzSpec {
            weights,
            kernels,
            alpha,
        })
    }

    /// Single kernel at `eta`.
    pub fn point_mass(eta: Complex64, alpha: f64) -> Result<Self> {
        Self::new(vec![1.0], vec![eta], alpha)
    }

    /// Between 1 and [`MAX_KERNELS`] kernels, flat simplex weights, kernel
    /// points uniform on the circle.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, alpha: f64) -> Self {
        let n = rng.random_range(1..=MAX_KERNELS);
        let raw: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
        let total: f64 = raw.iter().sum();
        let mut weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
        // absorb rounding so the weights sum to 1 exactly enough
        let drift = 1.0 - weights.iter().sum::<f64>();
        weights[0] += drift;
        let kernels = (0..n)
            .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI)))
            .collect();
        HerglotzSpec {
            weights,
            kernels,
            alpha,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kernels(&self) -> &[Complex64] {
        &self.kernels
    }

    /// `p(z)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let sum: Complex64 = self
            .weights
            .iter()
            .zip(&self.kernels)
            .map(|(&w, &e)| w * (1.0 + e * z) / (1.0 - e * z))
            .sum();
        self.alpha + (1.0 - self.alpha) * sum
    }

    /// `p'(z)`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let sum: Complex64 = self
            .weights
            .iter()
            .zip(&self.kernels)
            .map(|(&w, &e)| {
                let d = 1.0 - e * z;
                w * 2.0 * e / (d * d)
            })
            .sum();
        (1.0 - self.alpha) * sum
    }

    /// `z p'(z)/p(z)`.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        z * self.derivative(z) / self.eval(z)
    }
}

/// `p(z)` for the spec; `|z| < 1` is assumed.
pub fn sample_p(spec: &HerglotzSpec, z: Complex64) -> Complex64 {
    spec.eval(z)
}

/// A member of one of the classes, built from its Carathéodory factors.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    class: ClassId,
    specs: Vec<HerglotzSpec>,
}

/// Builds a member from factor specs, in the order of
/// [`ClassId::factor_orders`]: F1 takes two order-0 factors; F2 takes the
/// order-1/2 denominator factor then the order-0 numerator factor; F3 takes
/// one order-0 factor.
pub fn make_member(class: ClassId, specs: Vec<HerglotzSpec>) -> Result<ClassMember> {
    let orders = class.factor_orders();
    if specs.len() != orders.len() {
        return Err(Error::SpecMismatch(format!(
            "class {class} needs {} factor(s), got {}",
            orders.len(),
            specs.len()
        )));
    }
    for (s, &a) in specs.iter().zip(orders) {
        if s.alpha != a {
            return Err(Error::SpecMismatch(format!(
                "class {class} needs factor orders {orders:?}, got {}",
                s.alpha
            )));
        }
    }
    Ok(ClassMember { class, specs })
}

impl ClassMember {
    /// Random member with factor specs drawn by [`HerglotzSpec::random`].
    pub fn random<R: Rng + ?Sized>(class: ClassId, rng: &mut R) -> Self {
        let specs = class
            .factor_orders()
            .iter()
            .map(|&a| HerglotzSpec::random(rng, a))
            .collect();
        ClassMember { class, specs }
    }

    /// The member that reproduces the extremal function of the class.
    pub fn extremal(class: ClassId) -> Self {
        let one = Complex64::new(1.0, 0.0);
        let specs = match class {
            ClassId::F1 => vec![
                HerglotzSpec::point_mass(one, 0.0).unwrap(),
                HerglotzSpec::point_mass(one, 0.0).unwrap(),
            ],
            // 1/(1+z) = 1/2 + (1/2)(1-z)/(1+z), kernel at -1
            ClassId::F2 => vec![
                HerglotzSpec::point_mass(-one, 0.5).unwrap(),
                HerglotzSpec::point_mass(one, 0.0).unwrap(),
            ],
            ClassId::F3 => vec![HerglotzSpec::point_mass(one, 0.0).unwrap()],
        };
        ClassMember { class, specs }
    }

    pub fn class(&self) -> ClassId {
        self.class
    }

    pub fn specs(&self) -> &[HerglotzSpec] {
        &self.specs
    }

    /// `f(z)`.
    pub fn f(&self, z: Complex64) -> Complex64 {
        let base = z + z * z * 0.5;
        match self.class {
            ClassId::F1 => self.specs[0].eval(z) * self.specs[1].eval(z) * base,
            ClassId::F2 => self.specs[1].eval(z) / self.specs[0].eval(z) * base,
            ClassId::F3 => self.specs[0].eval(z) * base,
        }
    }

    /// `z f'(z)/f(z)` as a sum of factor log-derivatives.
    pub fn sf(&self, z: Complex64) -> Complex64 {
        let base = 2.0 * (z + 1.0) / (z + 2.0);
        match self.class {
            ClassId::F1 => self.specs[0].log_derivative(z) + self.specs[1].log_derivative(z) + base,
            ClassId::F2 => self.specs[1].log_derivative(z) - self.specs[0].log_derivative(z) + base,
            ClassId::F3 => self.specs[0].log_derivative(z) + base,
        }
    }
}

/// `z f'(z)/f(z)` with `f'` from a central difference of step `h`.
pub fn finite_difference_sf(member: &ClassMember, z: Complex64, h: f64) -> Complex64 {
    let d = (member.f(z + h) - member.f(z - h)) / (2.0 * h);
    z * d / member.f(z)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationQuery {
    pub class: ClassId,
    pub region: String,
    pub alpha: Option<f64>,
    pub radius: f64,
}

/// A grid point where the image of a sampled member left the region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub member: usize,
    pub grid_index: usize,
    pub z_re: f64,
    pub z_im: f64,
    pub w_re: f64,
    pub w_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub query: VerificationQuery,
    pub n_samples: usize,
    pub n_grid: usize,
    pub margin: f64,
    pub seed: u64,
    pub violations: Vec<Violation>,
    /// Largest `|s_f(z) - center| - halo` seen; at most [`HALO_SLACK`] when
    /// the disk bound holds.
    pub max_halo_excess: f64,
    /// The extremal quotient just past the contact point lies outside the
    /// closed region.
    pub extremal_outside: bool,
    pub extremal_point_re: f64,
    pub extremal_value_re: f64,
    pub extremal_value_im: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.max_halo_excess <= HALO_SLACK && self.extremal_outside
    }
}

/// Tests the radius `radius` for `(class, region)`.
///
/// Member 0 is the extremal function itself; members `1..n_samples` are
/// random, each seeded from `(seed, index)`. Every member is evaluated on
/// `n_grid` points of `|z| = (1 - margin) * radius`.
pub fn verify_radius(
    class: ClassId,
    region: TargetRegion,
    radius: f64,
    n_samples: usize,
    n_grid: usize,
    margin: f64,
    seed: u64,
) -> Result<VerificationReport> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Domain(format!("radius {radius} not in (0, 1)")));
    }
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::Domain(format!("margin {margin} not in (0, 1)")));
    }
    if n_samples < 1 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    if n_grid < 64 {
        return Err(Error::Domain(format!(
            "grid of {n_grid} points is below 64"
        )));
    }

    let r = (1.0 - margin) * radius;
    let center = classes::center(r);
    let halo = classes::halo_radius(class, r);
    let grid: Vec<Complex64> = (0..n_grid)
        .map(|j| Complex64::from_polar(r, 2.0 * PI * j as f64 / n_grid as f64))
        .collect();

    let per_member: Vec<(Vec<Violation>, f64)> = (0..n_samples)
        .into_par_iter()
        .map(|m| {
            let member = if m == 0 {
                ClassMember::extremal(class)
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(m as u64);
                ClassMember::random(class, &mut rng)
            };
            let mut violations = Vec::new();
            let mut excess = f64::NEG_INFINITY;
            for (j, &z) in grid.iter().enumerate() {
                let w = member.sf(z);
                excess = excess.max((w - center).norm() - halo);
                if !region.contains(w).unwrap_or(false) {
                    violations.push(Violation {
                        member: m,
                        grid_index: j,
                        z_re: z.re,
                        z_im: z.im,
                        w_re: w.re,
                        w_im: w.im,
                    });
                }
            }
            (violations, excess)
        })
        .collect();

    let max_halo_excess = per_member
        .iter()
        .map(|p| p.1)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut violations: Vec<Violation> = per_member.into_iter().flat_map(|p| p.0).collect();
    violations.sort_by_key(|v| (v.member, v.grid_index));

    let outward = match region.threshold().side {
        Side::Left => -radius,
        Side::Right => radius,
    } * (1.0 + margin);
    let value = eval_sf(ExtremalId::for_class(class), Complex64::new(outward, 0.0))?;
    let extremal_outside = !region.contains_closed(value).unwrap_or(false);

    Ok(VerificationReport {
        query: VerificationQuery {
            class,
            region: region.name().to_string(),
            alpha: match region {
                TargetRegion::HalfPlane(a) => Some(a),
                _ => None,
            },
            radius,
        },
        n_samples,
        n_grid,
        margin,
        seed,
        violations,
        max_halo_excess,
        extremal_outside,
        extremal_point_re: outward,
        extremal_value_re: value.re,
        extremal_value_im: value.im,
    })
}
