use thiserror::Error;

/// Errors raised by the radius machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The polynomial has no sign change on `(0, hi)`.
    #[error("no root of the radius equation in (0, {hi})")]
    NoRootInInterval { hi: f64 },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A closed-form function was evaluated at one of its poles.
    #[error("pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    /// The region has an exact inequality and no polyline boundary.
    #[error("region {0} has no boundary polyline (it uses an exact predicate)")]
    UnsupportedRegion(&'static str),

    /// The Herglotz specs do not match the factor structure of the class.
    #[error("spec mismatch: {0}")]
    SpecMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
