//! Deterministic SVG pictures of the polystable moduli disc.
//!
//! Degree is drawn as (the logarithm of) distance from the center: a point
//! with parameter degree `d` sits at radius `exp(d - rho)`, clipped to the
//! unit disc, so the boundary circle is the locus `d = rho` and the center
//! absorbs `d -> -infinity`. The angle is the `arg` coordinate times a full
//! turn. With theta_C = 0 every special point lands on the two horizontal
//! rays; that is a feature of the coordinates, not of the surface.

use std::fmt::Write as _;

use num::ToPrimitive;

use crate::moduli::ModuliReport;
use crate::picard::LineBundle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub background: String,
    pub boundary_color: String,
    pub chord_color: String,
    pub node_color: String,
    pub puncture_color: String,
    pub touch_color: String,
    pub center_color: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 640,
            height: 640,
            background: "#ffffff".to_string(),
            boundary_color: "#222222".to_string(),
            chord_color: "#999999".to_string(),
            node_color: "#c0392b".to_string(),
            puncture_color: "#2980b9".to_string(),
            touch_color: "#8e44ad".to_string(),
            center_color: "#222222".to_string(),
        }
    }
}

fn fmt2(v: f64) -> String {
    format!("{v:.2}")
}

/// Draw one report. Identical report and spec give byte-identical output.
///
/// Element order is fixed: background, boundary circle, one chord per
/// singular pair, one node cross per singular pair, one open circle per
/// puncture, one filled marker per boundary touch, and the center dot last.
pub fn render_svg(report: &ModuliReport, spec: &RenderSpec) -> String {
    let w = f64::from(spec.width);
    let h = f64::from(spec.height);
    let cx = w / 2.0;
    let cy = h / 2.0;
    let disc = 0.42 * w.min(h);
    let rho = report.rho;

    let place = |l: &LineBundle| -> (f64, f64) {
        let exponent = (report.surface.degree(l) - rho)
            .to_f64()
            .unwrap_or(f64::NEG_INFINITY);
        let r = exponent.exp().clamp(0.0, 1.0) * disc;
        let phi = l.arg().to_f64().unwrap_or(0.0) * std::f64::consts::TAU;
        (cx + r * phi.cos(), cy - r * phi.sin())
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    );
    let _ = writeln!(
        out,
        r#"  <rect width="{}" height="{}" fill="{}"/>"#,
        spec.width, spec.height, spec.background
    );
    let _ = writeln!(
        out,
        r#"  <circle class="boundary" cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
        fmt2(cx),
        fmt2(cy),
        fmt2(disc),
        spec.boundary_color
    );
    for pair in &report.singular_pairs {
        let (x1, y1) = place(&pair.node);
        let (x2, y2) = place(&pair.puncture);
        let _ = writeln!(
            out,
            r#"  <line class="chord" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1"/>"#,
            fmt2(x1),
            fmt2(y1),
            fmt2(x2),
            fmt2(y2),
            spec.chord_color
        );
    }
    for pair in &report.singular_pairs {
        let (x, y) = place(&pair.node);
        let _ = writeln!(
            out,
            r#"  <path class="node" d="M {} {} L {} {} M {} {} L {} {}" stroke="{}" stroke-width="1.5" fill="none"/>"#,
            fmt2(x - 3.5),
            fmt2(y - 3.5),
            fmt2(x + 3.5),
            fmt2(y + 3.5),
            fmt2(x - 3.5),
            fmt2(y + 3.5),
            fmt2(x + 3.5),
            fmt2(y - 3.5),
            spec.node_color
        );
    }
    for p in &report.punctures_u {
        let (x, y) = place(p);
        let _ = writeln!(
            out,
            r#"  <circle class="puncture" cx="{}" cy="{}" r="3" fill="{}" stroke="{}" stroke-width="1.2"/>"#,
            fmt2(x),
            fmt2(y),
            spec.background,
            spec.puncture_color
        );
    }
    for t in &report.boundary_touches {
        let (x, y) = place(t);
        let _ = writeln!(
            out,
            r#"  <circle class="touch" cx="{}" cy="{}" r="3.5" fill="{}"/>"#,
            fmt2(x),
            fmt2(y),
            spec.touch_color
        );
    }
    let _ = writeln!(
        out,
        r#"  <circle class="center" cx="{}" cy="{}" r="4" fill="{}"/>"#,
        fmt2(cx),
        fmt2(cy),
        spec.center_color
    );
    out.push_str("</svg>\n");
    out
}
