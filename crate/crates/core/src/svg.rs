//! SVG output for diagrams.
//!
//! Geometry is y-up; documents are y-down, so every y coordinate is negated
//! here. Coordinates are written with six decimals and attributes in a
//! fixed order, so identical diagrams give identical bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::Frame;
use crate::error::GeometryError;
use crate::geometry::{layout, ColorRole, Diagram, Part, Point, Primitive, Tooltip};
use crate::state::DisplayOrder;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderTheme {
    pub cyan: String,
    pub red: String,
    pub blue: String,
    pub almond: String,
    pub purple: String,
    pub white: String,
    pub real_segment: String,
    pub imaginary_segment: String,
    pub outline: String,
    pub stroke_width: f64,
    pub double_line_gap: f64,
    pub font_size: f64,
    pub semicircle_opacity: f64,
}

impl Default for RenderTheme {
    fn default() -> Self {
        Self {
            cyan: "#24C2CB".into(),
            red: "#E35D5D".into(),
            blue: "#4C78C9".into(),
            almond: "#EFDECD".into(),
            purple: "#8E6BC0".into(),
            white: "#FFFFFF".into(),
            real_segment: "#000000".into(),
            imaginary_segment: "#8A8A8A".into(),
            outline: "#555555".into(),
            stroke_width: 1.5,
            double_line_gap: 3.0,
            font_size: 14.0,
            semicircle_opacity: 0.35,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThemeError {
    #[error("color {0:?} is not a 6-digit hex value like #A1B2C3")]
    BadColor(String),
    #[error("{0} must be a positive finite number")]
    NotPositive(&'static str),
}

impl RenderTheme {
    pub fn validate(&self) -> Result<(), ThemeError> {
        for c in [
            &self.cyan,
            &self.red,
            &self.blue,
            &self.almond,
            &self.purple,
            &self.white,
            &self.real_segment,
            &self.imaginary_segment,
            &self.outline,
        ] {
            let hex = c.strip_prefix('#').unwrap_or("");
            if hex.len() != 6 || !hex.chars().all(|ch| ch.is_ascii_hexdigit()) {
                return Err(ThemeError::BadColor(c.clone()));
            }
        }
        for (name, v) in [
            ("double_line_gap", self.double_line_gap),
            ("stroke_width", self.stroke_width),
            ("font_size", self.font_size),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ThemeError::NotPositive(name));
            }
        }
        Ok(())
    }

    pub fn color(&self, role: ColorRole) -> &str {
        match role {
            ColorRole::Cyan => &self.cyan,
            ColorRole::Red => &self.red,
            ColorRole::Blue => &self.blue,
            ColorRole::Almond => &self.almond,
            ColorRole::Purple => &self.purple,
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_owned()
    } else {
        s
    }
}

/// Document-space coordinates.
fn doc(p: Point) -> (String, String) {
    (num(p.0), num(-p.1))
}

fn points_attr(pts: &[Point]) -> String {
    pts.iter()
        .map(|&p| {
            let (x, y) = doc(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn basis_label(basis_index: usize, num_qubits: usize) -> String {
    format!("|{basis_index:0num_qubits$b}\u{27E9}")
}

fn tooltip_text(tooltip: &Tooltip, num_qubits: usize) -> String {
    match tooltip {
        Tooltip::Marginal {
            display_qubit,
            probabilities,
        } => {
            let which = if num_qubits == 1 {
                "qubit".to_owned()
            } else if *display_qubit == 0 {
                "first qubit".to_owned()
            } else {
                format!("qubit {display_qubit}")
            };
            format!(
                "P({which} = 0) = {:.2}\nP({which} = 1) = {:.2}",
                probabilities[0], probabilities[1]
            )
        }
        Tooltip::Joint {
            basis_indices,
            probabilities,
            ..
        } => format!(
            "P({}) = {:.2}\nP({}) = {:.2}",
            basis_label(basis_indices[0], num_qubits),
            probabilities[0],
            basis_label(basis_indices[1], num_qubits),
            probabilities[1]
        ),
    }
}

fn bounding_box(d: &Diagram) -> (f64, f64, f64, f64) {
    let mut b = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    let mut add = |p: Point| {
        b.0 = b.0.min(p.0);
        b.1 = b.1.min(p.1);
        b.2 = b.2.max(p.0);
        b.3 = b.3.max(p.1);
    };
    for prim in &d.primitives {
        match prim {
            Primitive::WhiteTriangle { vertices, .. }
            | Primitive::StateTriangle { vertices, .. } => {
                vertices.iter().copied().for_each(&mut add)
            }
            Primitive::Semicircle { center, radius, .. } => {
                add(Point(center.0 - radius, center.1 - radius));
                add(Point(center.0 + radius, center.1 + radius));
            }
            Primitive::AmplitudeSegment { endpoints, .. } => {
                endpoints.iter().copied().for_each(&mut add)
            }
            Primitive::ProbabilityLabel { anchor, .. } => add(*anchor),
        }
    }
    b
}

/// Renders a diagram as a standalone SVG document.
pub fn render(diagram: &Diagram, theme: &RenderTheme) -> String {
    let (min_x, min_y, max_x, max_y) = bounding_box(diagram);
    let (w, h) = (max_x - min_x, max_y - min_y);
    let margin = 0.05 * w.max(h).max(diagram.scale);
    // y-down: the top of the view is the largest geometric y.
    let view = [
        min_x - margin,
        -max_y - margin,
        w + 2.0 * margin,
        h + 2.0 * margin,
    ];

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"{}\" height=\"{}\">",
        num(view[0]),
        num(view[1]),
        num(view[2]),
        num(view[3]),
        num(view[2]),
        num(view[3])
    );
    let _ = writeln!(
        out,
        "<g class=\"venus\" data-qubits=\"{}\" stroke-linejoin=\"round\" stroke-linecap=\"round\">",
        diagram.num_qubits
    );
    for prim in &diagram.primitives {
        write_primitive(&mut out, prim, diagram, theme);
    }
    out.push_str("</g>\n</svg>\n");
    out
}

fn write_primitive(out: &mut String, prim: &Primitive, diagram: &Diagram, theme: &RenderTheme) {
    let sw = num(theme.stroke_width);
    match prim {
        Primitive::WhiteTriangle {
            vertices,
            level,
            tooltip,
        } => {
            let _ = writeln!(
                out,
                "<polygon class=\"white-triangle\" data-level=\"{level}\" points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{sw}\"><title>{}</title></polygon>",
                points_attr(vertices),
                theme.white,
                theme.outline,
                tooltip_text(tooltip, diagram.num_qubits)
            );
        }
        Primitive::StateTriangle {
            vertices,
            basis_index,
            color_role,
        } => {
            let _ = writeln!(
                out,
                "<polygon class=\"state-triangle\" data-basis=\"{basis_index}\" points=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{sw}\"/>",
                points_attr(vertices),
                theme.color(*color_role),
                theme.outline
            );
        }
        Primitive::Semicircle {
            center,
            radius,
            orientation,
            basis_index,
            probability,
            ..
        } => {
            // Diameter endpoints; the arc bulges toward the orientation normal.
            let (nx, ny) = (orientation.cos(), orientation.sin());
            let (tx, ty) = (ny, -nx);
            let start = Point(center.0 - radius * tx, center.1 - radius * ty);
            let end = Point(center.0 + radius * tx, center.1 + radius * ty);
            let (sx, sy) = doc(start);
            let (ex, ey) = doc(end);
            let r = num(*radius);
            let role = ColorRole::for_basis(diagram.num_qubits, *basis_index);
            let _ = writeln!(
                out,
                "<path class=\"semicircle\" data-basis=\"{basis_index}\" data-radius=\"{r}\" data-probability=\"{}\" d=\"M {sx} {sy} A {r} {r} 0 0 1 {ex} {ey} Z\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"{}\" stroke-width=\"{sw}\"><title>{}: {:.2}</title></path>",
                num(*probability),
                theme.color(role),
                num(theme.semicircle_opacity),
                theme.color(role),
                basis_label(*basis_index, diagram.num_qubits),
                probability
            );
        }
        Primitive::AmplitudeSegment {
            endpoints,
            part,
            negative,
            basis_index,
        } => {
            let (class, color) = match part {
                Part::Real => ("real", &theme.real_segment),
                Part::Imaginary => ("imaginary", &theme.imaginary_segment),
            };
            let line = |a: Point, b: Point| {
                let (x1, y1) = doc(a);
                let (x2, y2) = doc(b);
                format!("<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"{color}\" stroke-width=\"{sw}\"/>")
            };
            let [a, b] = *endpoints;
            if *negative {
                let (dx, dy) = (b.0 - a.0, b.1 - a.1);
                let len = dx.hypot(dy);
                let half = theme.double_line_gap / 2.0;
                let (ox, oy) = if len > 0.0 {
                    (-dy / len * half, dx / len * half)
                } else {
                    (0.0, half)
                };
                let shift = |p: Point, k: f64| Point(p.0 + k * ox, p.1 + k * oy);
                let _ = writeln!(
                    out,
                    "<g class=\"segment {class} negative\" data-basis=\"{basis_index}\">{}{}</g>",
                    line(shift(a, 1.0), shift(b, 1.0)),
                    line(shift(a, -1.0), shift(b, -1.0))
                );
            } else {
                let _ = writeln!(
                    out,
                    "<g class=\"segment {class}\" data-basis=\"{basis_index}\">{}</g>",
                    line(a, b)
                );
            }
        }
        Primitive::ProbabilityLabel {
            anchor,
            text,
            basis_index,
        } => {
            let (x, y) = doc(*anchor);
            let _ = writeln!(
                out,
                "<text class=\"label\" data-basis=\"{basis_index}\" x=\"{x}\" y=\"{y}\" font-size=\"{}\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
                num(theme.font_size),
                escape(text)
            );
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// File name of frame `step` in a strip.
pub fn frame_file_name(step: usize) -> String {
    format!("frame_{step:04}.svg")
}

/// Lays out and renders every frame, in step order.
pub fn render_frames(
    frames: &[Frame],
    theme: &RenderTheme,
    scale: f64,
    order: &DisplayOrder,
) -> Result<Vec<String>, GeometryError> {
    frames
        .iter()
        .map(|f| Ok(render(&layout(&f.state, scale, order)?, theme)))
        .collect()
}
