//! Static SVG figures: Gershgorin disks in blue, eigenvalues in red.
//!
//! Drawn directly as SVG 1.1 primitives with no plotting dependency and
//! no timestamps, so identical inputs produce byte-identical files.
//! Zero-radius disks (the `k + μ = 0` disk) are rendered at a small but
//! nonzero size to stay visible.

use num_complex::Complex64;

use crate::disks::GershgorinDisk;

#[derive(Clone, Copy, Debug)]
pub struct FigureOptions {
    pub width: f64,
    pub height: f64,
    /// Minimum rendered disk radius in pixels.
    pub min_disk_radius_px: f64,
    pub eigenvalue_radius_px: f64,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            width: 640.0,
            height: 640.0,
            min_disk_radius_px: 2.0,
            eigenvalue_radius_px: 2.5,
        }
    }
}

fn fmt(v: f64) -> String {
    format!("{:.3}", v)
}

/// Renders one figure: the disk family overlaid with eigenvalues, axes
/// through the origin. `description` lands in a `<desc>` element.
pub fn render_figure(
    disks: &[GershgorinDisk],
    eigenvalues: &[Complex64],
    description: &str,
    options: &FigureOptions,
) -> String {
    // Data bounding box (real axis horizontal, imaginary vertical).
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for d in disks {
        x_min = x_min.min(-d.radius);
        x_max = x_max.max(d.radius);
        y_min = y_min.min(d.center.im - d.radius);
        y_max = y_max.max(d.center.im + d.radius);
    }
    for l in eigenvalues {
        x_min = x_min.min(l.re);
        x_max = x_max.max(l.re);
        y_min = y_min.min(l.im);
        y_max = y_max.max(l.im);
    }
    if !x_min.is_finite() || x_min == x_max {
        x_min -= 1.0;
        x_max = x_min + 2.0;
    }
    if !y_min.is_finite() || y_min == y_max {
        y_min -= 1.0;
        y_max = y_min + 2.0;
    }
    let pad_x = 0.08 * (x_max - x_min);
    let pad_y = 0.08 * (y_max - y_min);
    x_min -= pad_x;
    x_max += pad_x;
    y_min -= pad_y;
    y_max += pad_y;

    let sx = options.width / (x_max - x_min);
    let sy = options.height / (y_max - y_min);
    let px = |x: f64| (x - x_min) * sx;
    let py = |y: f64| options.height - (y - y_min) * sy; // y grows upward

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 {} {}\">\n",
        fmt(options.width),
        fmt(options.height)
    ));
    svg.push_str(&format!("  <desc>{}</desc>\n", description));
    svg.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes through the origin, when visible.
    if x_min < 0.0 && x_max > 0.0 {
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
            fmt(px(0.0)),
            fmt(px(0.0)),
            fmt(options.height)
        ));
    }
    if y_min < 0.0 && y_max > 0.0 {
        svg.push_str(&format!(
            "  <line x1=\"0\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"1\"/>\n",
            fmt(py(0.0)),
            fmt(options.width),
            fmt(py(0.0))
        ));
    }

    // Disks: blue outlines, lightly filled. The scale is isotropic only
    // if width/height match the data aspect; radii use the x scale and
    // the y scale separately via an ellipse to stay faithful.
    for d in disks {
        let rx = (d.radius * sx).max(options.min_disk_radius_px);
        let ry = (d.radius * sy).max(options.min_disk_radius_px);
        svg.push_str(&format!(
            "  <ellipse cx=\"{}\" cy=\"{}\" rx=\"{}\" ry=\"{}\" \
             fill=\"#1f6fb4\" fill-opacity=\"0.10\" stroke=\"#1f6fb4\" stroke-width=\"1\"/>\n",
            fmt(px(d.center.re)),
            fmt(py(d.center.im)),
            fmt(rx),
            fmt(ry)
        ));
    }

    // Eigenvalues: red dots on top.
    for l in eigenvalues {
        svg.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#d62728\"/>\n",
            fmt(px(l.re)),
            fmt(py(l.im)),
            fmt(options.eigenvalue_radius_px)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
