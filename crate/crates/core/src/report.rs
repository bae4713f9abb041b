//! Serialized forms of radius results: JSON records, CSV rows, plain tables.
//!
//! All numbers are rounded to 12 significant digits so that output is stable
//! across platforms.

use serde::{Deserialize, Serialize};

use crate::format::{round12, sig12};
use crate::radius::RadiusResult;

/// CSV header. `c4` trails the schema; it is nonzero only for the quartic
/// bound-only equation.
pub const CSV_HEADER: [&str; 11] = [
    "class", "region", "tau", "radius", "sharp", "c3", "c2", "c1", "c0", "residual", "c4",
];

/// JSON form of a [`RadiusResult`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRecord {
    pub class: String,
    pub region: String,
    pub tau: f64,
    pub radius: f64,
    /// Ascending coefficients of the radius equation.
    pub coeffs: Vec<f64>,
    pub residual: f64,
    pub sharp: bool,
    pub contact_re: f64,
    pub contact_im: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl From<&RadiusResult> for RadiusRecord {
    fn from(r: &RadiusResult) -> Self {
        RadiusRecord {
            class: r.class.name().to_string(),
            region: r.region.name().to_string(),
            tau: round12(r.tau),
            radius: round12(r.radius),
            coeffs: r.equation.coeffs().iter().map(|&c| round12(c)).collect(),
            residual: round12(r.residual),
            sharp: r.sharp,
            contact_re: round12(r.contact.re),
            contact_im: round12(r.contact.im),
            warning: r.warning.map(str::to_string),
        }
    }
}

pub fn to_json(results: &[RadiusResult]) -> String {
    let records: Vec<RadiusRecord> = results.iter().map(RadiusRecord::from).collect();
    serde_json::to_string_pretty(&records).expect("records serialize") + "\n"
}

pub fn single_to_json(result: &RadiusResult) -> String {
    serde_json::to_string_pretty(&RadiusRecord::from(result)).expect("record serializes") + "\n"
}

pub fn to_csv(results: &[RadiusResult]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(CSV_HEADER).expect("write to memory");
    for r in results {
        let c = |k| sig12(r.equation.coeff(k));
        wtr.write_record([
            r.class.name().to_string(),
            r.region.name().to_string(),
            sig12(r.tau),
            sig12(r.radius),
            r.sharp.to_string(),
            c(3),
            c(2),
            c(1),
            c(0),
            sig12(r.residual),
            c(4),
        ])
        .expect("write to memory");
    }
    String::from_utf8(wtr.into_inner().expect("flush to memory")).expect("ascii")
}

fn coeff_list(r: &RadiusResult) -> String {
    let parts: Vec<String> = r
        .equation
        .coeffs()
        .iter()
        .map(|c| format!("{c:.6}"))
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Fixed-width table for terminals.
pub fn to_table(results: &[RadiusResult]) -> String {
    let mut out = format!(
        "{:<5} {:<11} {:>15} {:>15} {:<5}  {:<60} {:>10}\n",
        "class", "region", "tau", "radius", "sharp", "equation", "residual"
    );
    for r in results {
        out.push_str(&format!(
            "{:<5} {:<11} {:>15} {:>15} {:<5}  {:<60} {:>10.3e}\n",
            r.class.name(),
            r.region.name(),
            sig12(r.tau),
            sig12(r.radius),
            if r.sharp { "yes" } else { "bound" },
            coeff_list(r),
            r.residual,
        ));
    }
    for r in results.iter().filter(|r| r.warning.is_some()) {
        out.push_str(&format!(
            "warning: {} {}: {}\n",
            r.class.name(),
            r.region.name(),
            r.warning.unwrap_or_default()
        ));
    }
    out
}
