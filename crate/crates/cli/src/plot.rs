//! Root scatter plots (SVG 1.1) and root lists (CSV).

use std::fmt::Write;

use lpdelta::zeros::in_real_band;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Upper,
    Axis,
    Lower,
}

impl Location {
    pub fn of(z: Complex64, tau: f64) -> Self {
        if in_real_band(z, tau) {
            Location::Axis
        } else if z.im > 0.0 {
            Location::Upper
        } else {
            Location::Lower
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Location::Upper => "upper",
            Location::Axis => "axis",
            Location::Lower => "lower",
        }
    }
}

/// Rounds to the `1e-12` grid and turns `-0` into `0`.
pub fn snap(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 { 0.0 } else { r }
}

/// Plain decimal with at least one fractional digit: `0.0`, `-1.5`.
pub fn format_coord(x: f64) -> String {
    let s = format!("{x}");
    if s.contains(['.', 'e', 'N', 'i']) { s } else { s + ".0" }
}

/// Snapped roots ordered by real part ascending, then imaginary part
/// descending.
pub fn prepare(roots: &[Complex64]) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = roots.iter().map(|z| Complex64::new(snap(z.re), snap(z.im))).collect();
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
    out
}

pub fn csv(roots: &[Complex64]) -> String {
    let mut s = String::from("re,im\n");
    for z in prepare(roots) {
        let _ = writeln!(s, "{},{}", format_coord(z.re), format_coord(z.im));
    }
    s
}

const SIZE: f64 = 400.0;
const MARGIN: f64 = 20.0;

pub fn svg(roots: &[Complex64], tau: f64) -> String {
    let roots = prepare(roots);
    let extent = roots.iter().fold(1.0f64, |m, z| m.max(z.re.abs()).max(z.im.abs())) * 1.1;
    let scale = (SIZE - 2.0 * MARGIN) / (2.0 * extent);
    let x = |re: f64| MARGIN + (re + extent) * scale;
    let y = |im: f64| MARGIN + (extent - im) * scale;
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line class="axis-real" x1="{MARGIN}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1"/>"#,
        y(0.0),
        SIZE - MARGIN,
        y(0.0)
    );
    let _ = writeln!(
        s,
        r#"<line class="axis-imag" x1="{:.3}" y1="{MARGIN}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-width="0.5"/>"#,
        x(0.0),
        x(0.0),
        SIZE - MARGIN
    );
    for z in &roots {
        let (cx, cy) = (x(z.re), y(z.im));
        let loc = Location::of(*z, tau);
        let title = format!("<title>{} {}</title>", format_coord(z.re), format_coord(z.im));
        let _ = match loc {
            Location::Upper => writeln!(
                s,
                r##"<circle class="root upper" cx="{cx:.3}" cy="{cy:.3}" r="5" fill="#1f77b4">{title}</circle>"##
            ),
            Location::Axis => writeln!(
                s,
                r##"<rect class="root axis" x="{:.3}" y="{:.3}" width="9" height="9" fill="#2ca02c">{title}</rect>"##,
                cx - 4.5,
                cy - 4.5
            ),
            Location::Lower => writeln!(
                s,
                r##"<polygon class="root lower" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}" fill="#d62728">{title}</polygon>"##,
                cx,
                cy + 6.0,
                cx - 5.5,
                cy - 4.0,
                cx + 5.5,
                cy - 4.0
            ),
        };
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates() {
        assert_eq!(format_coord(snap(-1e-17)), "0.0");
        assert_eq!(format_coord(snap(1.0 + 1e-15)), "1.0");
        assert_eq!(format_coord(-2.5), "-2.5");
        assert_eq!(format_coord(snap(1e-7)), "0.0000001");
    }

    #[test]
    fn csv_order() {
        let roots = [Complex64::new(0.0, -1.0), Complex64::new(-0.0, 1.0), Complex64::new(-2.0, 0.0)];
        assert_eq!(csv(&roots), "re,im\n-2.0,0.0\n0.0,1.0\n0.0,-1.0\n");
    }

    #[test]
    fn markers_are_distinct() {
        let s = svg(&[Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, -1.0)], 1e-8);
        assert!(s.contains(r#"<circle class="root upper""#));
        assert!(s.contains(r#"<rect class="root axis""#));
        assert!(s.contains(r#"<polygon class="root lower""#));
    }
}
