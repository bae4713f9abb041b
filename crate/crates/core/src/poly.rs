//! Real polynomials of low degree and smallest-positive-root isolation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Grid step of the sign-change scan that precedes bisection.
///
/// Every radius in the table is at least 0.038 and every root is simple,
/// so a root cannot hide between two grid points.
pub const SCAN_STEP: f64 = 1e-3;

/// Default bisection width.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Real polynomial, coefficients in ascending order (`coeffs[k]` multiplies `r^k`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial, trimming zero high-order coefficients.
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `r^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `self - scale * other`.
    pub fn sub_scaled(&self, scale: f64, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new(
            (0..n)
                .map(|k| self.coeff(k) - scale * other.coeff(k))
                .collect::<Vec<_>>(),
        )
    }

    pub fn scaled(&self, s: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect::<Vec<_>>())
    }

    /// Smallest root in the open interval `(0, hi)`.
    ///
    /// Scans `(0, hi)` at [`SCAN_STEP`] for the first sign change, then bisects
    /// until the bracket is narrower than `tol`. The returned value is the end
    /// of the final bracket on the far side of the sign change, so `self` has
    /// already changed sign (or vanished) there.
    pub fn smallest_positive_root(&self, hi: f64, tol: f64) -> Result<f64> {
        if !(hi > 0.0 && hi <= 1.0) {
            return Err(Error::Domain(format!("upper bound {hi} not in (0, 1]")));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Domain(format!("tolerance {tol} must be positive")));
        }
        let no_root = Error::NoRootInInterval { hi };

        let mut lo = 0.0;
        let mut f_lo = self.eval(lo);
        // A root at 0 is not positive; start the scan just past it.
        if f_lo == 0.0 {
            lo = tol.min(SCAN_STEP) * 0.5;
            f_lo = self.eval(lo);
            if f_lo == 0.0 {
                return Err(no_root);
            }
        }

        let steps = (hi / SCAN_STEP).ceil() as usize;
        let mut bracket = None;
        for i in 1..=steps {
            let x = (i as f64 * SCAN_STEP).min(hi);
            if x <= lo {
                continue;
            }
            let fx = self.eval(x);
            // `hi` itself is excluded from the open interval.
            if fx == 0.0 && x < hi {
                return Ok(x);
            }
            if fx.signum() != f_lo.signum() && fx != 0.0 {
                bracket = Some((lo, x));
                break;
            }
            lo = x;
            f_lo = fx;
        }
        let (mut a, mut b) = bracket.ok_or(no_root)?;

        let sign_a = self.eval(a).signum();
        while b - a >= tol {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            let fm = self.eval(mid);
            if fm == 0.0 {
                return Ok(mid);
            }
            if fm.signum() == sign_a {
                a = mid;
            } else {
                b = mid;
            }
        }
        Ok(b)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            let c = c.abs();
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} r")?,
                _ => write!(f, "{c} r^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}
