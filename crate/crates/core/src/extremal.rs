//! Closed forms of the extremal functions
//!
//! ```text
//! f1(z) = (1+z)^2 (z + z^2/2) / (1-z)^2
//! f2(z) = (1+z)^2 (z + z^2/2) / (1-z)
//! f3(z) = (1+z)   (z + z^2/2) / (1-z)
//! ```
//!
//! with their derivatives and starlikeness quotients `z f'(z)/f(z)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classes::ClassId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtremalId {
    E1,
    E2,
    E3,
}

impl ExtremalId {
    pub fn for_class(class: ClassId) -> Self {
        match class {
            ClassId::F1 => ExtremalId::E1,
            ClassId::F2 => ExtremalId::E2,
            ClassId::F3 => ExtremalId::E3,
        }
    }

    pub fn class(&self) -> ClassId {
        match self {
            ExtremalId::E1 => ClassId::F1,
            ExtremalId::E2 => ClassId::F2,
            ExtremalId::E3 => ClassId::F3,
        }
    }
}

fn pole(z: Complex64) -> Error {
    Error::Pole { re: z.re, im: z.im }
}

fn check_not_one(z: Complex64) -> Result<()> {
    if z == Complex64::new(1.0, 0.0) {
        Err(pole(z))
    } else {
        Ok(())
    }
}

/// Value of the extremal function.
pub fn eval_f(id: ExtremalId, z: Complex64) -> Result<Complex64> {
    check_not_one(z)?;
    let base = z + z * z * 0.5;
    let (p, m) = (1.0 + z, 1.0 - z);
    Ok(match id {
        ExtremalId::E1 => p * p * base / (m * m),
        ExtremalId::E2 => p * p * base / m,
        ExtremalId::E3 => p * base / m,
    })
}

/// Derivative of the extremal function.
pub fn eval_fprime(id: ExtremalId, z: Complex64) -> Result<Complex64> {
    check_not_one(z)?;
    let (p, m) = (1.0 + z, 1.0 - z);
    let (z2, z3) = (z * z, z * z * z);
    Ok(match id {
        ExtremalId::E1 => p * (1.0 + 5.0 * z + z2 - z3) / (m * m * m),
        ExtremalId::E2 => p * (2.0 + 8.0 * z - z2 - 3.0 * z3) / (2.0 * m * m),
        ExtremalId::E3 => (1.0 + 3.0 * z - z3) / (m * m),
    })
}

/// `z f'(z)/f(z)`, with the removable singularity at 0 filled in by 1.
pub fn eval_sf(id: ExtremalId, z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && (z.re == 1.0 || z.re == -1.0 || z.re == -2.0) {
        return Err(pole(z));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let (z2, z3) = (z * z, z * z * z);
    let den = (2.0 + z) * (1.0 - z2);
    Ok(match id {
        ExtremalId::E1 => 2.0 * (1.0 + 5.0 * z + z2 - z3) / den,
        ExtremalId::E2 => (2.0 + 8.0 * z - z2 - 3.0 * z3) / den,
        ExtremalId::E3 => 2.0 * (1.0 + 3.0 * z - z3) / den,
    })
}

/// Real-argument shortcut for [`eval_sf`].
pub fn eval_sf_real(id: ExtremalId, x: f64) -> Result<f64> {
    eval_sf(id, Complex64::new(x, 0.0)).map(|w| w.re)
}
