//! Radii of starlikeness for three classes of close-to-star functions
//! normalized by `z + z^2/2`, with respect to a family of target regions in
//! the right half-plane.

pub mod caratheodory;
pub mod classes;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod format;
pub mod plot;
pub mod poly;
pub mod radius;
pub mod regions;
pub mod report;
pub mod sampler;

pub use classes::ClassId;
pub use error::{Error, Result};
pub use radius::{radius_table, solve_radius, RadiusQuery, RadiusResult};
pub use regions::TargetRegion;
