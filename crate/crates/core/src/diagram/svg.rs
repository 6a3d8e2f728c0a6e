//! Deterministic SVG output. Coordinates are printed with two decimals so
//! identical inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{Geometry, Mark, PlanarDiagram, VertexKind, MARGIN, ROW, SPACING};
use crate::word::{GenKind, GenWord};

const GAP: f64 = 0.6;

fn header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    );
    out.push_str("<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n");
}

fn footer(out: &mut String) {
    out.push_str("</g>\n</svg>\n");
}

fn line(out: &mut String, a: (f64, f64), b: (f64, f64)) {
    let _ = writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
}

fn toward(a: (f64, f64), c: (f64, f64), t: f64) -> (f64, f64) {
    (a.0 + (c.0 - a.0) * t, a.1 + (c.1 - a.1) * t)
}

/// Crossing or smoother glyph between the four corner ports.
fn glyph(out: &mut String, kind: VertexKind, center: (f64, f64), ports: &[(f64, f64)]) {
    match kind {
        VertexKind::Crossing { over_first } => {
            let (o, u) = if over_first { (0, 1) } else { (1, 0) };
            line(out, ports[o], ports[o + 2]);
            line(out, ports[u], toward(ports[u], center, GAP));
            line(out, ports[u + 2], toward(ports[u + 2], center, GAP));
        }
        VertexKind::Smoother => {
            let _ = writeln!(
                out,
                r#"<path d="M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}"/>"#,
                ports[1].0, ports[1].1, center.0, center.1, ports[0].0, ports[0].1
            );
            let _ = writeln!(
                out,
                r#"<path d="M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}"/>"#,
                ports[2].0, ports[2].1, center.0, center.1, ports[3].0, ports[3].1
            );
        }
        VertexKind::Bend => {}
    }
}

fn labels(out: &mut String, anchors: &[(f64, f64)], marks: Option<&BTreeMap<usize, Mark>>) {
    let Some(marks) = marks else { return };
    for (&e, m) in marks {
        let Some(&(x, y)) = anchors.get(e) else {
            continue;
        };
        let arrow = if m.forward { "+" } else { "-" };
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{y:.2}" fill="black" stroke="none" font-family="monospace" font-size="12">{}{arrow}</text>"#,
            escape(&m.label)
        );
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Places vertices on a circle when no drawing coordinates were recorded.
fn schematic(d: &PlanarDiagram) -> Geometry {
    let m = d.vertices.len().max(1);
    let radius = 40.0 + 15.0 * m as f64;
    let c = MARGIN + radius + 20.0;
    let mut centers = Vec::with_capacity(m);
    let mut ports = Vec::with_capacity(m);
    for (k, v) in d.vertices.iter().enumerate() {
        let theta = std::f64::consts::TAU * k as f64 / m as f64;
        let center = (c + radius * theta.cos(), c - radius * theta.sin());
        let p = match v.kind {
            VertexKind::Bend => vec![center, center],
            _ => (0..4)
                .map(|s| {
                    let a = std::f64::consts::FRAC_PI_4 * (2 * s + 1) as f64;
                    (center.0 + 12.0 * a.cos(), center.1 - 12.0 * a.sin())
                })
                .collect(),
        };
        centers.push(center);
        ports.push(p);
    }
    let paths = d
        .ends
        .iter()
        .map(|&[(tv, ts), (hv, hs)]| {
            let (a, b) = (ports[tv][ts], ports[hv][hs]);
            (format!("M {:.2} {:.2} L {:.2} {:.2}", a.0, a.1, b.0, b.1), ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0))
        })
        .collect();
    let loops_row = if d.extra_loops > 0 { 40.0 } else { 0.0 };
    Geometry { width: 2.0 * c, height: 2.0 * c + loops_row, centers, ports, paths }
}

/// Renders a closed diagram; marked edges carry their label and a `+`/`-`
/// for the mark direction.
pub fn render_diagram(d: &PlanarDiagram, marks: Option<&BTreeMap<usize, Mark>>) -> String {
    let owned;
    let g = match &d.geometry {
        Some(g) => g,
        None => {
            owned = schematic(d);
            &owned
        }
    };
    let mut out = String::new();
    header(&mut out, g.width, g.height);
    for (path, _) in &g.paths {
        let _ = writeln!(out, r#"<path d="{path}"/>"#);
    }
    for (k, v) in d.vertices.iter().enumerate() {
        glyph(&mut out, v.kind, g.centers[k], &g.ports[k]);
    }
    for i in 0..d.extra_loops {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="12.00"/>"#,
            MARGIN + 12.0 + 32.0 * i as f64,
            g.height - 20.0
        );
    }
    let anchors: Vec<(f64, f64)> = g.paths.iter().map(|(_, a)| *a).collect();
    labels(&mut out, &anchors, marks);
    footer(&mut out);
    out
}

/// Renders an open word as strands running top to bottom.
pub fn render_word(w: &GenWord) -> String {
    let n = w.strands();
    let x = |p: usize| MARGIN + p as f64 * SPACING;
    let half = ROW * 0.35;
    let top = MARGIN;
    let bottom = top + (w.len() as f64 + 1.0) * ROW;
    let mut out = String::new();
    header(&mut out, 2.0 * MARGIN + (n as f64 - 1.0) * SPACING, bottom + MARGIN);
    let mut last = vec![top; n];
    for (k, g) in w.letters().iter().enumerate() {
        let y = top + (k as f64 + 1.0) * ROW;
        if g.is_affine() {
            // x1 drawn as a marker on strand 1 passing behind the others.
            line(&mut out, (x(0), last[0]), (x(0), y));
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{y:.2}" r="4.00" stroke-dasharray="{}"/>"#,
                x(0),
                if g.kind == GenKind::X1 { "none" } else { "2,2" }
            );
            last[0] = y;
            continue;
        }
        let p = g.index - 1;
        for q in [p, p + 1] {
            line(&mut out, (x(q), last[q]), (x(q), y - half));
            last[q] = y + half;
        }
        let (xl, xr) = (x(p), x(p + 1));
        let ports = [(xr, y - half), (xl, y - half), (xl, y + half), (xr, y + half)];
        let kind = match g.kind {
            GenKind::Sigma => VertexKind::Crossing { over_first: true },
            GenKind::SigmaInv => VertexKind::Crossing { over_first: false },
            _ => VertexKind::Smoother,
        };
        glyph(&mut out, kind, ((xl + xr) / 2.0, y), &ports);
    }
    for (q, &y) in last.iter().enumerate() {
        line(&mut out, (x(q), y), (x(q), bottom));
    }
    footer(&mut out);
    out
}
