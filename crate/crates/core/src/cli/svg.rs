use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::series::ObservationSeries;

pub const SVG_WIDTH: usize = 1000;
pub const PANEL_HEIGHT: usize = 200;
/// Dimensions beyond this are not drawn.
pub const MAX_PANELS: usize = 8;

const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 15.0;
const MARGIN_BOTTOM: f64 = 20.0;

/// Stacked line plots, one panel per dimension, with a green vertical line
/// at every change point.
pub fn render_svg(series: &ObservationSeries, change_points: &[usize]) -> String {
    let t = series.len();
    let panels = series.dim().min(MAX_PANELS);
    let height = PANEL_HEIGHT * panels;
    let plot_w = SVG_WIDTH as f64 - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = PANEL_HEIGHT as f64 - MARGIN_TOP - MARGIN_BOTTOM;
    let x_of = |i: f64| {
        let span = (t.max(2) - 1) as f64;
        MARGIN_LEFT + plot_w * i / span
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_WIDTH}" height="{height}" viewBox="0 0 {SVG_WIDTH} {height}">
<rect x="0" y="0" width="{SVG_WIDTH}" height="{height}" fill="white"/>"#
    );

    for p in 0..panels {
        let top = (p * PANEL_HEIGHT) as f64;
        let column: Vec<f64> = (0..t).map(|i| series.row(i)[p]).collect();
        let lo = column.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = column.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let y_of = |v: f64| {
            if hi > lo {
                top + MARGIN_TOP + plot_h * (hi - v) / (hi - lo)
            } else {
                top + MARGIN_TOP + plot_h / 2.0
            }
        };

        let _ = writeln!(svg, r#"<g class="panel" id="panel-{p}">"#);
        let _ = writeln!(
            svg,
            r##"<rect x="{MARGIN_LEFT}" y="{:.2}" width="{plot_w:.2}" height="{plot_h:.2}" fill="none" stroke="#999999"/>"##,
            top + MARGIN_TOP
        );
        let _ = writeln!(
            svg,
            r#"<text x="5" y="{:.2}" font-family="sans-serif" font-size="12">x{}</text>"#,
            top + MARGIN_TOP + plot_h / 2.0,
            p + 1
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="end">{hi:.3}</text>"#,
            MARGIN_LEFT - 4.0,
            top + MARGIN_TOP + 10.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="end">{lo:.3}</text>"#,
            MARGIN_LEFT - 4.0,
            top + MARGIN_TOP + plot_h
        );

        let mut pts = String::new();
        for (i, &v) in column.iter().enumerate() {
            if i > 0 {
                pts.push(' ');
            }
            let _ = write!(pts, "{:.2},{:.2}", x_of(i as f64), y_of(v));
        }
        let _ = writeln!(
            svg,
            r##"<polyline fill="none" stroke="#1f4e9a" stroke-width="1" points="{pts}"/>"##
        );

        // boundary drawn halfway between the last point before and the first after
        for &cp in change_points {
            let x = x_of(cp as f64 - 0.5);
            let _ = writeln!(
                svg,
                r#"<line class="changepoint" x1="{x:.2}" y1="{top:.2}" x2="{x:.2}" y2="{:.2}" stroke="green" stroke-width="2"/>"#,
                top + PANEL_HEIGHT as f64
            );
        }
        let _ = writeln!(svg, "</g>");
    }

    if series.dim() > MAX_PANELS {
        let _ = writeln!(
            svg,
            r#"<text class="notice" x="{:.2}" y="12" font-family="sans-serif" font-size="11" text-anchor="end">showing first {MAX_PANELS} of {} dimensions</text>"#,
            SVG_WIDTH as f64 - MARGIN_RIGHT,
            series.dim()
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_svg(
    series: &ObservationSeries,
    change_points: &[usize],
    path: impl AsRef<Path>,
) -> Result<()> {
    std::fs::write(path, render_svg(series, change_points))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const MARKER: &str = r#"<line class="changepoint""#;

    fn series(t: usize, d: usize) -> ObservationSeries {
        let v: Vec<f64> = (0..t * d).map(|i| ((i * 13) % 7) as f64).collect();
        ObservationSeries::new(v, d).unwrap()
    }

    #[test]
    fn one_marker_per_change_point_per_panel() {
        let svg = render_svg(&series(50, 3), &[20]);
        assert_eq!(svg.matches(MARKER).count(), 3);
        assert_eq!(svg.matches(r#"<g class="panel""#).count(), 3);
        assert!(svg.contains(r#"height="600""#));
        let svg = render_svg(&series(50, 3), &[10, 30]);
        assert_eq!(svg.matches(MARKER).count(), 6);
    }

    #[test]
    fn no_markers_without_change_points() {
        let svg = render_svg(&series(20, 1), &[]);
        assert_eq!(svg.matches(MARKER).count(), 0);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn four_channel_layout() {
        let svg = render_svg(&series(500, 4), &[100, 250]);
        assert_eq!(svg.matches(r#"<g class="panel""#).count(), 4);
        assert!(svg.contains(r#"width="1000" height="800""#));
    }

    #[test]
    fn caps_panels_with_notice() {
        let svg = render_svg(&series(30, 10), &[15]);
        assert_eq!(svg.matches(r#"<g class="panel""#).count(), MAX_PANELS);
        assert_eq!(svg.matches(MARKER).count(), MAX_PANELS);
        assert!(svg.contains("showing first 8 of 10 dimensions"));
    }

    #[test]
    fn constant_column_and_single_point() {
        let s = ObservationSeries::univariate(vec![1.0; 5]).unwrap();
        assert!(!render_svg(&s, &[2]).contains("NaN"));
        let s = ObservationSeries::univariate(vec![1.0]).unwrap();
        assert!(!render_svg(&s, &[]).contains("NaN"));
    }
}
