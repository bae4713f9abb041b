//! Target regions for starlikeness: membership, disk-fit lemmas, boundary
//! contact thresholds and boundary polylines.
//!
//! Lemniscate, parabola, exponential, lune and half-plane regions have exact
//! inequalities. The sine, cardioid and rational regions are images of the
//! unit disk with no convenient closed form, so their membership goes through
//! the winding number of a dense boundary polyline.

use std::f64::consts::{E, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex count of the cached polylines used for membership.
pub const MEMBERSHIP_POLYLINE_POINTS: usize = 4096;

/// Points within this distance of a membership polyline count as outside.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Smallest accepted polyline vertex count.
pub const MIN_POLYLINE_POINTS: usize = 64;

/// `k = sqrt(2) + 1` of the rational target function.
pub const RATIONAL_K: f64 = SQRT_2 + 1.0;

/// A subordination target, identified by the image of the unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "region", content = "alpha", rename_all = "lowercase")]
pub enum TargetRegion {
    /// `Re w > alpha`.
    HalfPlane(f64),
    /// `|w^2 - 1| < 1`.
    Lemniscate,
    /// `|w - 1| < Re w`.
    Parabola,
    /// `|log w| < 1`.
    Exponential,
    /// Image of the disk under `1 + sin z`.
    Sine,
    /// `|w^2 - 1| < 2|w|`.
    Lune,
    /// Image of the disk under `1 + (k z + z^2)/(k^2 - k z)`.
    Rational,
    /// Image of the disk under `1 + 4z/3 + 2z^2/3`.
    Cardioid,
}

/// The seven fixed regions, in table order.
pub const NAMED_REGIONS: [TargetRegion; 7] = [
    TargetRegion::Lemniscate,
    TargetRegion::Parabola,
    TargetRegion::Exponential,
    TargetRegion::Sine,
    TargetRegion::Lune,
    TargetRegion::Rational,
    TargetRegion::Cardioid,
];

/// Which envelope of `Re(z f'/f)` meets the region boundary first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Contact on the negative real axis: lower envelope reaches `tau`.
    Left,
    /// Contact on the positive real axis: upper envelope reaches `tau`.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Threshold {
    pub side: Side,
    pub tau: f64,
}

/// Interval of admissible disk centers for a disk-fit lemma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CenterInterval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl CenterInterval {
    const fn open(lo: f64, hi: f64) -> Self {
        CenterInterval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn contains(&self, a: f64) -> bool {
        let above = if self.lo_closed {
            a >= self.lo
        } else {
            a > self.lo
        };
        let below = if self.hi_closed {
            a <= self.hi
        } else {
            a < self.hi
        };
        above && below
    }
}

impl TargetRegion {
    /// Lowercase token used on the command line and in reports.
    pub fn name(&self) -> &'static str {
        match self {
            TargetRegion::HalfPlane(_) => "halfplane",
            TargetRegion::Lemniscate => "lemniscate",
            TargetRegion::Parabola => "parabola",
            TargetRegion::Exponential => "exponential",
            TargetRegion::Sine => "sine",
            TargetRegion::Lune => "lune",
            TargetRegion::Rational => "rational",
            TargetRegion::Cardioid => "cardioid",
        }
    }

    /// Boundary contact value and the side on which contact happens.
    pub fn threshold(&self) -> Threshold {
        let left = |tau| Threshold {
            side: Side::Left,
            tau,
        };
        match *self {
            TargetRegion::HalfPlane(alpha) => left(alpha),
            TargetRegion::Lemniscate => Threshold {
                side: Side::Right,
                tau: SQRT_2,
            },
            TargetRegion::Parabola => left(0.5),
            TargetRegion::Exponential => left(1.0 / E),
            TargetRegion::Sine => left(1.0 - 1f64.sin()),
            TargetRegion::Lune => left(SQRT_2 - 1.0),
            TargetRegion::Rational => left(2.0 * (SQRT_2 - 1.0)),
            TargetRegion::Cardioid => left(1.0 / 3.0),
        }
    }

    /// Open membership; boundary points are outside.
    pub fn contains(&self, w: Complex64) -> Result<bool> {
        Ok(match *self {
            TargetRegion::HalfPlane(alpha) => w.re > alpha,
            TargetRegion::Lemniscate => (w * w - 1.0).norm() < 1.0,
            TargetRegion::Parabola => (w - 1.0).norm() < w.re,
            TargetRegion::Exponential => exp_log_norm(w)?.is_some_and(|m| m < 1.0),
            TargetRegion::Lune => (w * w - 1.0).norm() < 2.0 * w.norm(),
            TargetRegion::Sine | TargetRegion::Rational | TargetRegion::Cardioid => {
                membership_index(*self).winding_inside(w, true)
            }
        })
    }

    /// Membership in the closure of the region.
    pub fn contains_closed(&self, w: Complex64) -> Result<bool> {
        Ok(match *self {
            TargetRegion::HalfPlane(alpha) => w.re >= alpha,
            TargetRegion::Lemniscate => (w * w - 1.0).norm() <= 1.0,
            TargetRegion::Parabola => (w - 1.0).norm() <= w.re,
            TargetRegion::Exponential => exp_log_norm(w)?.is_some_and(|m| m <= 1.0),
            TargetRegion::Lune => (w * w - 1.0).norm() <= 2.0 * w.norm(),
            TargetRegion::Sine | TargetRegion::Rational | TargetRegion::Cardioid => {
                membership_index(*self).winding_inside(w, false)
            }
        })
    }

    /// Centers for which the disk-fit lemma applies.
    pub fn center_interval(&self) -> CenterInterval {
        let s1 = 1f64.sin();
        match *self {
            TargetRegion::HalfPlane(alpha) => CenterInterval::open(alpha, f64::INFINITY),
            TargetRegion::Lemniscate => CenterInterval {
                lo: 2.0 * SQRT_2 / 3.0,
                hi: SQRT_2,
                lo_closed: true,
                hi_closed: false,
            },
            TargetRegion::Parabola => CenterInterval::open(0.5, 1.5),
            TargetRegion::Exponential => CenterInterval {
                lo: 1.0 / E,
                hi: (E + 1.0 / E) / 2.0,
                lo_closed: false,
                hi_closed: true,
            },
            TargetRegion::Sine => CenterInterval::open(-1.0 - s1, 1.0 + s1),
            TargetRegion::Lune => CenterInterval::open(SQRT_2 - 1.0, SQRT_2 + 1.0),
            TargetRegion::Rational => CenterInterval {
                lo: 2.0 * (SQRT_2 - 1.0),
                hi: SQRT_2,
                lo_closed: false,
                hi_closed: true,
            },
            TargetRegion::Cardioid => CenterInterval::open(1.0 / 3.0, 5.0 / 3.0),
        }
    }

    /// Radius of the largest disk centered at real `a` that the lemma places
    /// inside the region. Only meaningful for `a` in [`Self::center_interval`];
    /// may be negative outside it.
    pub fn max_disk_radius(&self, a: f64) -> f64 {
        match *self {
            TargetRegion::HalfPlane(alpha) => a - alpha,
            TargetRegion::Lemniscate => SQRT_2 - a,
            TargetRegion::Parabola => a - 0.5,
            TargetRegion::Exponential => a - 1.0 / E,
            TargetRegion::Sine => 1f64.sin() - (a - 1.0).abs(),
            TargetRegion::Lune => 1.0 - (SQRT_2 - a).abs(),
            TargetRegion::Rational => a - 2.0 * (SQRT_2 - 1.0),
            TargetRegion::Cardioid => a - 1.0 / 3.0,
        }
    }

    /// True iff the disk-fit lemma covers `|w - a| < rho`.
    pub fn disk_fits(&self, a: f64, rho: f64) -> bool {
        rho >= 0.0 && self.center_interval().contains(a) && rho < self.max_disk_radius(a)
    }

    /// The defining function of a polyline region, evaluated at `z`.
    pub fn map_point(&self, z: Complex64) -> Result<Complex64> {
        match self {
            TargetRegion::Sine => Ok(1.0 + z.sin()),
            TargetRegion::Cardioid => Ok(1.0 + z * (4.0 / 3.0) + z * z * (2.0 / 3.0)),
            TargetRegion::Rational => {
                let k = RATIONAL_K;
                Ok(1.0 + (z * k + z * z) / (k * k - z * k))
            }
            other => Err(Error::UnsupportedRegion(other.name())),
        }
    }

    /// Image of the unit circle, `n + 1` points for `t = 2 pi j / n`, closed.
    pub fn boundary_polyline(&self, n: usize) -> Result<BoundaryPolyline> {
        if n < MIN_POLYLINE_POINTS {
            return Err(Error::Domain(format!(
                "polyline needs at least {MIN_POLYLINE_POINTS} points, got {n}"
            )));
        }
        // reject exact-predicate regions before sampling
        self.map_point(Complex64::new(0.0, 0.0))?;
        let mut points = (0..n)
            .map(|j| {
                let t = 2.0 * PI * j as f64 / n as f64;
                self.map_point(Complex64::from_polar(1.0, t))
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(points[0]);
        Ok(BoundaryPolyline { points })
    }
}

impl fmt::Display for TargetRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetRegion::HalfPlane(alpha) => write!(f, "halfplane({alpha})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for TargetRegion {
    type Err = Error;

    /// Parses a named region; `halfplane` needs an order and is built directly.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemniscate" => Ok(TargetRegion::Lemniscate),
            "parabola" => Ok(TargetRegion::Parabola),
            "exponential" => Ok(TargetRegion::Exponential),
            "sine" => Ok(TargetRegion::Sine),
            "lune" => Ok(TargetRegion::Lune),
            "rational" => Ok(TargetRegion::Rational),
            "cardioid" => Ok(TargetRegion::Cardioid),
            "halfplane" => Err(Error::Domain("halfplane requires an order alpha".into())),
            other => Err(Error::Domain(format!("unknown region '{other}'"))),
        }
    }
}

/// `|log w|` on the principal branch, `None` off the right half-plane.
fn exp_log_norm(w: Complex64) -> Result<Option<f64>> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::Domain("log undefined at w = 0".into()));
    }
    if w.re <= 0.0 {
        return Ok(None);
    }
    Ok(Some(w.ln().norm()))
}

/// Closed loop of boundary points.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryPolyline {
    points: Vec<Complex64>,
}

impl BoundaryPolyline {
    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rows `(t, re, im)` with `t` the circle parameter of each vertex.
    pub fn to_csv(&self) -> std::result::Result<String, csv::Error> {
        let n = self.points.len() - 1;
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["t", "re", "im"])?;
        for (j, p) in self.points.iter().enumerate() {
            let t = 2.0 * PI * j as f64 / n as f64;
            wtr.write_record([
                crate::format::sig12(t),
                crate::format::sig12(p.re),
                crate::format::sig12(p.im),
            ])?;
        }
        let bytes = wtr.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is ascii"))
    }

    /// Winding number of the loop around `w`.
    pub fn winding_number(&self, w: Complex64) -> i32 {
        self.points
            .windows(2)
            .map(|e| edge_crossing(e[0], e[1], w))
            .sum()
    }

    /// Distance from `w` to the nearest edge.
    pub fn distance(&self, w: Complex64) -> f64 {
        self.points
            .windows(2)
            .map(|e| segment_distance(e[0], e[1], w))
            .fold(f64::INFINITY, f64::min)
    }
}

/// Signed crossing contribution of edge `a -> b` for a rightward ray from `w`.
fn edge_crossing(a: Complex64, b: Complex64, w: Complex64) -> i32 {
    let side = (b.re - a.re) * (w.im - a.im) - (w.re - a.re) * (b.im - a.im);
    if a.im <= w.im {
        if b.im > w.im && side > 0.0 {
            return 1;
        }
    } else if b.im <= w.im && side < 0.0 {
        return -1;
    }
    0
}

fn segment_distance(a: Complex64, b: Complex64, w: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    let t = if len2 > 0.0 {
        ((w - a).re * ab.re + (w - a).im * ab.im) / len2
    } else {
        0.0
    };
    (a + ab * t.clamp(0.0, 1.0) - w).norm()
}

/// Polyline with edges bucketed into horizontal slabs, so a membership query
/// only visits edges whose vertical extent reaches the query point.
struct SlabIndex {
    polyline: BoundaryPolyline,
    y_min: f64,
    y_max: f64,
    slab_height: f64,
    slabs: Vec<Vec<u32>>,
}

impl SlabIndex {
    fn new(polyline: BoundaryPolyline, n_slabs: usize) -> Self {
        let pts = polyline.points();
        let y_min = pts.iter().map(|p| p.im).fold(f64::INFINITY, f64::min) - BOUNDARY_BAND;
        let y_max = pts.iter().map(|p| p.im).fold(f64::NEG_INFINITY, f64::max) + BOUNDARY_BAND;
        let slab_height = (y_max - y_min) / n_slabs as f64;
        let mut slabs = vec![Vec::new(); n_slabs];
        let slab_of =
            |y: f64| (((y - y_min) / slab_height).floor().max(0.0) as usize).min(n_slabs - 1);
        for (i, e) in pts.windows(2).enumerate() {
            let lo = e[0].im.min(e[1].im) - BOUNDARY_BAND;
            let hi = e[0].im.max(e[1].im) + BOUNDARY_BAND;
            for slab in &mut slabs[slab_of(lo)..=slab_of(hi)] {
                slab.push(i as u32);
            }
        }
        SlabIndex {
            polyline,
            y_min,
            y_max,
            slab_height,
            slabs,
        }
    }

    /// Inside test; points within [`BOUNDARY_BAND`] of the loop are
    /// outside when `strict`, inside otherwise.
    fn winding_inside(&self, w: Complex64, strict: bool) -> bool {
        if !(w.im >= self.y_min && w.im <= self.y_max) || !w.re.is_finite() {
            return false;
        }
        let slab = (((w.im - self.y_min) / self.slab_height) as usize).min(self.slabs.len() - 1);
        let pts = self.polyline.points();
        let mut winding = 0;
        let mut near = false;
        for &i in &self.slabs[slab] {
            let (a, b) = (pts[i as usize], pts[i as usize + 1]);
            winding += edge_crossing(a, b, w);
            if !near && segment_distance(a, b, w) <= BOUNDARY_BAND {
                near = true;
            }
        }
        if near {
            !strict
        } else {
            winding != 0
        }
    }
}

fn membership_index(region: TargetRegion) -> &'static SlabIndex {
    static SINE: OnceLock<SlabIndex> = OnceLock::new();
    static RATIONAL: OnceLock<SlabIndex> = OnceLock::new();
    static CARDIOID: OnceLock<SlabIndex> = OnceLock::new();
    let cell = match region {
        TargetRegion::Sine => &SINE,
        TargetRegion::Rational => &RATIONAL,
        TargetRegion::Cardioid => &CARDIOID,
        _ => unreachable!("exact-predicate region {region} has no membership polyline"),
    };
    cell.get_or_init(|| {
        let poly = region
            .boundary_polyline(MEMBERSHIP_POLYLINE_POINTS)
            .expect("polyline region");
        SlabIndex::new(poly, 512)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn membership_examples() {
        assert!(TargetRegion::Lemniscate.contains(c(1.0, 0.0)).unwrap());
        assert!(!TargetRegion::Lemniscate.contains(c(SQRT_2, 0.0)).unwrap());
        assert!(!TargetRegion::Parabola.contains(c(0.5, 0.0)).unwrap());
        assert!(!TargetRegion::Sine
            .contains(c(1.0 - 1f64.sin(), 0.0))
            .unwrap());
        assert!(!TargetRegion::Cardioid.contains(c(1.0 / 3.0, 0.0)).unwrap());
        assert!(!TargetRegion::Rational
            .contains(c(2.0 * (SQRT_2 - 1.0), 0.0))
            .unwrap());
    }

    #[test]
    fn polyline_regions_contain_one() {
        for r in [
            TargetRegion::Sine,
            TargetRegion::Cardioid,
            TargetRegion::Rational,
        ] {
            assert!(r.contains(c(1.0, 0.0)).unwrap(), "{r}");
            let contact = r.map_point(c(-1.0, 0.0)).unwrap();
            assert!(!r.contains(contact).unwrap(), "{r}");
            assert!(r.contains_closed(contact).unwrap(), "{r}");
        }
    }

    #[test]
    fn exponential_log_domain() {
        let r = TargetRegion::Exponential;
        assert!(matches!(r.contains(c(0.0, 0.0)), Err(Error::Domain(_))));
        assert!(!r.contains(c(-1.0, 0.5)).unwrap());
        assert!(!r.contains(c(0.0, 0.5)).unwrap());
        assert!(r.contains(c(1.0, 0.0)).unwrap());
        assert!(!r.contains(c(1.0 / E - 1e-9, 0.0)).unwrap());
        assert!(r.contains(c(1.0 / E + 1e-9, 0.0)).unwrap());
        assert!(!r.contains(c(E, 0.0)).unwrap());
    }

    #[test]
    fn lune_real_section() {
        let r = TargetRegion::Lune;
        assert!(r.contains(c(1.0, 0.0)).unwrap());
        assert!(!r.contains(c(SQRT_2 - 1.0 - 1e-9, 0.0)).unwrap());
        assert!(!r.contains(c(SQRT_2 + 1.0 + 1e-9, 0.0)).unwrap());
    }

    #[test]
    fn disk_fit_examples() {
        assert!(TargetRegion::Lemniscate.disk_fits(1.0, 0.3));
        assert!(!TargetRegion::Parabola.disk_fits(1.0, 0.5));
        assert!(TargetRegion::Rational.disk_fits(1.0, 0.1));
        // center outside the lemma interval
        assert!(!TargetRegion::Lemniscate.disk_fits(0.5, 0.01));
        assert!(!TargetRegion::Cardioid.disk_fits(1.0, -0.1));
    }

    #[test]
    fn rational_disk_fit_sampled() {
        let r = TargetRegion::Rational;
        let rho = 0.1;
        for i in 0..1000 {
            let t = 2.0 * PI * i as f64 / 1000.0;
            let s = ((i * 7919) % 1000) as f64 / 1000.0;
            let w = c(1.0, 0.0) + Complex64::from_polar(rho * s.sqrt(), t);
            assert!(r.contains(w).unwrap());
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(
            TargetRegion::Parabola.threshold(),
            Threshold {
                side: Side::Left,
                tau: 0.5
            }
        );
        let l = TargetRegion::Lemniscate.threshold();
        assert_eq!(l.side, Side::Right);
        assert!((l.tau - SQRT_2).abs() < 1e-15);
        assert_eq!(
            TargetRegion::HalfPlane(0.0).threshold(),
            Threshold {
                side: Side::Left,
                tau: 0.0
            }
        );
    }

    #[test]
    fn thresholds_are_boundary_contacts() {
        for r in NAMED_REGIONS {
            let th = r.threshold();
            assert!(th.tau > 0.0 && th.tau < SQRT_2 + 1e-15);
            let step = if th.side == Side::Left { 1e-6 } else { -1e-6 };
            assert!(r.contains(c(th.tau + step, 0.0)).unwrap(), "{r}");
            assert!(!r.contains(c(th.tau - step, 0.0)).unwrap(), "{r}");
        }
    }

    #[test]
    fn polyline_preconditions() {
        assert!(matches!(
            TargetRegion::Cardioid.boundary_polyline(4),
            Err(Error::Domain(_))
        ));
        for r in [
            TargetRegion::Lemniscate,
            TargetRegion::Parabola,
            TargetRegion::Exponential,
            TargetRegion::Lune,
            TargetRegion::HalfPlane(0.2),
        ] {
            assert!(matches!(
                r.boundary_polyline(128),
                Err(Error::UnsupportedRegion(_))
            ));
        }
    }

    #[test]
    fn polyline_shape() {
        let card = TargetRegion::Cardioid.boundary_polyline(1024).unwrap();
        assert_eq!(card.len(), 1025);
        assert!((card.points()[0] - c(3.0, 0.0)).norm() < 1e-15);
        assert!((card.points()[512] - c(1.0 / 3.0, 0.0)).norm() < 1e-12);
        assert_eq!(card.points()[0], card.points()[1024]);
        let sine = TargetRegion::Sine.boundary_polyline(1024).unwrap();
        assert!((sine.points()[512].re - 0.158_529).abs() < 1e-6);
        assert!(sine.points()[512].im.abs() < 1e-12);
    }

    #[test]
    fn indexed_winding_agrees_with_brute_force() {
        for r in [
            TargetRegion::Sine,
            TargetRegion::Cardioid,
            TargetRegion::Rational,
        ] {
            let poly = r.boundary_polyline(MEMBERSHIP_POLYLINE_POINTS).unwrap();
            for i in 0..400 {
                let w = c(
                    -0.5 + 3.5 * ((i * 37) % 400) as f64 / 400.0,
                    -2.0 + 4.0 * i as f64 / 400.0,
                );
                let brute = poly.winding_number(w) != 0 && poly.distance(w) > BOUNDARY_BAND;
                assert_eq!(r.contains(w).unwrap(), brute, "{r} at {w}");
            }
        }
    }

    #[test]
    fn polyline_csv() {
        let csv = TargetRegion::Cardioid
            .boundary_polyline(64)
            .unwrap()
            .to_csv()
            .unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,re,im"));
        assert_eq!(lines.count(), 65);
    }

    #[test]
    fn parse_names() {
        for r in NAMED_REGIONS {
            assert_eq!(r.name().parse::<TargetRegion>().unwrap(), r);
        }
        assert!("halfplane".parse::<TargetRegion>().is_err());
        assert!("nephroid".parse::<TargetRegion>().is_err());
    }
}
