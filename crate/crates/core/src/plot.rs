//! SVG rendering of a target region, the image disk of `|z| <= r`, and the
//! image of `|z| = r` under the extremal quotient.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;

use crate::classes::{self, ClassId};
use crate::error::{Error, Result};
use crate::extremal::{eval_sf, ExtremalId};
use crate::regions::TargetRegion;

const SIZE: f64 = 800.0;
const PAD: f64 = 60.0;
const CURVE_POINTS: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlotRequest {
    pub class: Option<ClassId>,
    pub region: Option<TargetRegion>,
    pub r: Option<f64>,
}

/// A curve in the w-plane with its stroke style.
struct Curve {
    points: Vec<Complex64>,
    closed: bool,
    stroke: &'static str,
    label: String,
}

/// Boundary of a region as a polyline (open for the unbounded ones).
pub fn region_curve(region: TargetRegion, n: usize) -> Vec<Complex64> {
    let circle = |j: usize| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
    match region {
        TargetRegion::Sine | TargetRegion::Cardioid | TargetRegion::Rational => region
            .boundary_polyline(n)
            .expect("polyline region")
            .points()
            .to_vec(),
        TargetRegion::Lemniscate => (0..=n).map(|j| (1.0 + circle(j)).sqrt()).collect(),
        TargetRegion::Exponential => (0..=n).map(|j| circle(j).exp()).collect(),
        TargetRegion::Lune => (0..=n)
            .map(|j| {
                let z = circle(j);
                z + (1.0 + z * z).sqrt()
            })
            .collect(),
        // y^2 = 2x - 1
        TargetRegion::Parabola => (0..=n)
            .map(|j| {
                let y = -2.5 + 5.0 * j as f64 / n as f64;
                Complex64::new((1.0 + y * y) / 2.0, y)
            })
            .collect(),
        TargetRegion::HalfPlane(alpha) => {
            vec![Complex64::new(alpha, -2.0), Complex64::new(alpha, 2.0)]
        }
    }
}

fn is_closed(region: TargetRegion) -> bool {
    !matches!(region, TargetRegion::Parabola | TargetRegion::HalfPlane(_))
}

/// Renders the requested curves as an 800x800 SVG document.
pub fn render_svg(req: &PlotRequest) -> Result<String> {
    if let Some(r) = req.r {
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("plot radius {r} not in (0, 1)")));
        }
    }
    let mut curves = Vec::new();
    if let Some(region) = req.region {
        curves.push(Curve {
            points: region_curve(region, CURVE_POINTS),
            closed: is_closed(region),
            stroke: "#1f77b4",
            label: format!("{region} boundary"),
        });
    }
    if let (Some(class), Some(r)) = (req.class, req.r) {
        let c = classes::center(r);
        let rad = classes::halo_radius(class, r);
        curves.push(Curve {
            points: (0..=CURVE_POINTS)
                .map(|j| {
                    Complex64::new(c, 0.0)
                        + Complex64::from_polar(rad, 2.0 * PI * j as f64 / CURVE_POINTS as f64)
                })
                .collect(),
            closed: true,
            stroke: "#d62728",
            label: format!("image disk, {class}, r = {r}"),
        });
        let id = ExtremalId::for_class(class);
        let image = (0..=CURVE_POINTS)
            .map(|j| {
                eval_sf(
                    id,
                    Complex64::from_polar(r, 2.0 * PI * j as f64 / CURVE_POINTS as f64),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        curves.push(Curve {
            points: image,
            closed: true,
            stroke: "#2ca02c",
            label: format!("extremal s_f on |z| = {r}"),
        });
    }
    if curves.is_empty() {
        return Err(Error::Domain(
            "nothing to plot: give a region, or a class with r".into(),
        ));
    }

    // square window around everything drawn, always showing the origin's axes
    let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (0.0f64, 1.0f64, -0.5f64, 0.5f64);
    for p in curves.iter().flat_map(|c| &c.points) {
        lo_x = lo_x.min(p.re);
        hi_x = hi_x.max(p.re);
        lo_y = lo_y.min(p.im);
        hi_y = hi_y.max(p.im);
    }
    let span = (hi_x - lo_x).max(hi_y - lo_y) * 1.1;
    let (cx, cy) = ((lo_x + hi_x) / 2.0, (lo_y + hi_y) / 2.0);
    let scale = (SIZE - 2.0 * PAD) / span;
    let to_px = |w: Complex64| {
        (
            SIZE / 2.0 + (w.re - cx) * scale,
            SIZE / 2.0 - (w.im - cy) * scale,
        )
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(svg, r#"<rect width="800" height="800" fill="white"/>"#);

    // axes
    let (x0, _) = to_px(Complex64::new(0.0, 0.0));
    let (_, y0) = to_px(Complex64::new(0.0, 0.0));
    let _ = writeln!(
        svg,
        r##"<line x1="0" y1="{y0:.2}" x2="800" y2="{y0:.2}" stroke="#888" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{x0:.2}" y1="0" x2="{x0:.2}" y2="800" stroke="#888" stroke-width="1"/>"##
    );
    let step = tick_step(span);
    let first = ((cx - span / 2.0) / step).ceil() as i64;
    let last = ((cx + span / 2.0) / step).floor() as i64;
    for k in first..=last {
        let v = k as f64 * step;
        let (px, _) = to_px(Complex64::new(v, 0.0));
        let _ = writeln!(
            svg,
            r##"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="#888"/><text x="{px:.2}" y="{:.2}" font-size="12" text-anchor="middle">{}</text>"##,
            y0 - 4.0,
            y0 + 4.0,
            y0 + 18.0,
            tick_label(v)
        );
    }
    let first = ((cy - span / 2.0) / step).ceil() as i64;
    let last = ((cy + span / 2.0) / step).floor() as i64;
    for k in first..=last {
        let v = k as f64 * step;
        if k == 0 {
            continue;
        }
        let (_, py) = to_px(Complex64::new(0.0, v));
        let _ = writeln!(
            svg,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{:.2}" y2="{py:.2}" stroke="#888"/><text x="{:.2}" y="{:.2}" font-size="12">{}i</text>"##,
            x0 - 4.0,
            x0 + 4.0,
            x0 + 6.0,
            py + 4.0,
            tick_label(v)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="780" y="{:.2}" font-size="14" text-anchor="end">Re w</text>"#,
        y0 - 8.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="20" font-size="14">Im w</text>"#,
        x0 + 8.0
    );

    for (i, c) in curves.iter().enumerate() {
        let mut d = String::new();
        for (j, p) in c.points.iter().enumerate() {
            let (x, y) = to_px(*p);
            let _ = write!(d, "{}{x:.3},{y:.3} ", if j == 0 { "M" } else { "L" });
        }
        if c.closed {
            d.push('Z');
        }
        let _ = writeln!(
            svg,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="2"><title>{}</title></path>"#,
            d.trim_end(),
            c.stroke,
            c.label
        );
        let _ = writeln!(
            svg,
            r#"<text x="20" y="{}" font-size="14" fill="{}">{}</text>"#,
            780 - 20 * (curves.len() - 1 - i),
            c.stroke,
            c.label
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn tick_step(span: f64) -> f64 {
    let raw = span / 8.0;
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag)
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
