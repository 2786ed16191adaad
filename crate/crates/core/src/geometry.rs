//! VENUS diagram geometry.
//!
//! A state is drawn as a cascade of right triangles standing on a
//! hypotenuse of length `scale`. Each leg of a triangle carries the next
//! level: for one qubit the base legs are `|α|` and `|β|`, and each leg
//! becomes the hypotenuse of a coloured state triangle whose own legs are
//! the real and imaginary parts of that amplitude. Two qubits add a middle
//! level of white triangles whose hypotenuses are the square roots of the
//! marginals of the first displayed qubit.
//!
//! Every state triangle sits inside the semicircle drawn on its hypotenuse,
//! so the semicircle's area is `π/8 · scale² · |amp|²`, proportional to
//! the probability of that basis state.
//!
//! Coordinates are y-up with the base hypotenuse running from `(0, 0)` to
//! `(scale, 0)` and the base triangle opening upward. Children are erected
//! on the outer side of their parent leg. On every leg the first child leg
//! (the real part, or `|x0⟩` for the middle level) starts at the endpoint
//! shared with the parent hypotenuse; the second ends there.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::state::{Amplitude, Conditional, DisplayOrder, QuantumState};

pub const DEFAULT_SCALE: f64 = 320.0;
/// Lengths below this fraction of the base are treated as zero.
pub const COLLAPSE_EPSILON: f64 = 1e-6;
/// Components below `-SIGN_EPSILON` are drawn as negative.
pub const SIGN_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point(pub f64, pub f64);

impl Point {
    pub fn x(self) -> f64 {
        self.0
    }

    pub fn y(self) -> f64 {
        self.1
    }

    fn add(self, o: Point) -> Point {
        Point(self.0 + o.0, self.1 + o.1)
    }

    fn sub(self, o: Point) -> Point {
        Point(self.0 - o.0, self.1 - o.1)
    }

    fn scaled(self, k: f64) -> Point {
        Point(self.0 * k, self.1 * k)
    }

    fn norm(self) -> f64 {
        self.0.hypot(self.1)
    }

    pub fn distance(self, o: Point) -> f64 {
        self.sub(o).norm()
    }

    fn midpoint(self, o: Point) -> Point {
        self.add(o).scaled(0.5)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorRole {
    Cyan,
    Red,
    Blue,
    Almond,
    Purple,
}

impl ColorRole {
    pub fn for_basis(num_qubits: usize, basis_index: usize) -> ColorRole {
        match (num_qubits, basis_index) {
            (1, 0) => ColorRole::Cyan,
            (1, _) => ColorRole::Red,
            (_, 0) => ColorRole::Blue,
            (_, 1) => ColorRole::Red,
            (_, 2) => ColorRole::Almond,
            _ => ColorRole::Purple,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Real,
    Imaginary,
}

/// Hover payload of a white triangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Tooltip {
    /// Outcome probabilities of one displayed qubit, indexed by bit.
    Marginal {
        display_qubit: usize,
        probabilities: [f64; 2],
    },
    /// The two joint probabilities beneath a middle-level triangle, whose
    /// first displayed qubit is fixed to `first_bit`, together with the
    /// second qubit's distribution conditioned on it.
    Joint {
        first_bit: u8,
        basis_indices: [usize; 2],
        probabilities: [f64; 2],
        conditional: [Conditional; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Primitive {
    WhiteTriangle {
        vertices: [Point; 3],
        level: u8,
        tooltip: Tooltip,
    },
    StateTriangle {
        vertices: [Point; 3],
        basis_index: usize,
        color_role: ColorRole,
    },
    Semicircle {
        center: Point,
        radius: f64,
        /// Angle in radians of the normal pointing into the arc.
        orientation: f64,
        basis_index: usize,
        area_value: f64,
        probability: f64,
    },
    AmplitudeSegment {
        endpoints: [Point; 2],
        part: Part,
        negative: bool,
        basis_index: usize,
    },
    ProbabilityLabel {
        anchor: Point,
        text: String,
        basis_index: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagram {
    pub num_qubits: usize,
    pub scale: f64,
    pub order: DisplayOrder,
    pub primitives: Vec<Primitive>,
}

impl Diagram {
    pub fn semicircles(&self) -> impl Iterator<Item = &Primitive> {
        self.primitives
            .iter()
            .filter(|p| matches!(p, Primitive::Semicircle { .. }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Collapse {
    Keep,
    /// One leg vanishes; the other lies on the hypotenuse.
    Degenerate,
    Omit,
}

/// How a triangle with the given hypotenuse and legs (logical units) is drawn.
pub fn collapse_policy(hypotenuse: f64, legs: [f64; 2], scale: f64) -> Collapse {
    let tiny = |len: f64| len / scale < COLLAPSE_EPSILON;
    if tiny(hypotenuse) {
        Collapse::Omit
    } else if tiny(legs[0]) || tiny(legs[1]) {
        Collapse::Degenerate
    } else {
        Collapse::Keep
    }
}

/// Lays out a one- or two-qubit state.
pub fn layout(
    state: &QuantumState,
    scale: f64,
    order: &DisplayOrder,
) -> Result<Diagram, GeometryError> {
    match state.num_qubits() {
        1 => {
            order.check_for(1)?;
            layout_single(state, scale)
        }
        _ => layout_two(state, scale, order),
    }
}

pub fn layout_single(state: &QuantumState, scale: f64) -> Result<Diagram, GeometryError> {
    check_inputs(state, 1, scale)?;
    let amps = state.amplitudes();
    let probs = state.probabilities();
    let base = base_triangle(scale, amps[0].norm(), amps[1].norm());

    let mut primitives = vec![Primitive::WhiteTriangle {
        vertices: base.vertices(),
        level: 0,
        tooltip: Tooltip::Marginal {
            display_qubit: 0,
            probabilities: [probs[0], probs[1]],
        },
    }];
    let [left, right] = base.legs();
    for (index, leg) in [(0, left), (1, right)] {
        emit_state(&mut primitives, leg, amps[index], index, 1, scale);
    }

    Ok(Diagram {
        num_qubits: 1,
        scale,
        order: DisplayOrder::identity(1),
        primitives,
    })
}

pub fn layout_two(
    state: &QuantumState,
    scale: f64,
    order: &DisplayOrder,
) -> Result<Diagram, GeometryError> {
    check_inputs(state, 2, scale)?;
    let shown = state.reorder_qubits(order)?;
    let amps = shown.amplitudes();
    let probs = shown.probabilities();
    let marginals = [probs[0] + probs[1], probs[2] + probs[3]];
    let base = base_triangle(scale, marginals[0].sqrt(), marginals[1].sqrt());

    let mut primitives = vec![Primitive::WhiteTriangle {
        vertices: base.vertices(),
        level: 0,
        tooltip: Tooltip::Marginal {
            display_qubit: 0,
            probabilities: marginals,
        },
    }];

    for (first_bit, leg) in [(0u8, base.legs()[0]), (1u8, base.legs()[1])] {
        let i0 = 2 * first_bit as usize;
        let (l0, l1) = (scale * amps[i0].norm(), scale * amps[i0 + 1].norm());
        if collapse_policy(leg.length(), [l0, l1], scale) == Collapse::Omit {
            continue;
        }
        let mid = Triangle::erect(leg.outer, leg.apex, l0, l1, leg.normal);
        let conditional = [0u8, 1].map(|b| {
            shown
                .conditional_probability(0, first_bit, 1, b)
                .expect("two-qubit state, distinct qubits")
        });
        primitives.push(Primitive::WhiteTriangle {
            vertices: mid.vertices(),
            level: 1,
            tooltip: Tooltip::Joint {
                first_bit,
                basis_indices: [i0, i0 + 1],
                probabilities: [probs[i0], probs[i0 + 1]],
                conditional,
            },
        });
        let [a, b] = mid.legs();
        emit_state(&mut primitives, a, amps[i0], i0, 2, scale);
        emit_state(&mut primitives, b, amps[i0 + 1], i0 + 1, 2, scale);
    }

    Ok(Diagram {
        num_qubits: 2,
        scale,
        order: order.clone(),
        primitives,
    })
}

fn check_inputs(state: &QuantumState, qubits: usize, scale: f64) -> Result<(), GeometryError> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(GeometryError::BadScale(scale));
    }
    if state.num_qubits() != qubits {
        return Err(if qubits == 2 {
            crate::error::StateError::RequiresTwoQubits.into()
        } else {
            crate::error::StateError::RequiresOneQubit.into()
        });
    }
    if !state.is_normalized() {
        return Err(crate::error::StateError::NotNormalized {
            norm_sqr: state.norm_sqr(),
        }
        .into());
    }
    Ok(())
}

/// Emits the semicircle, state triangle, amplitude segments and label for
/// one basis state whose amplitude has modulus `leg.length() / scale`.
fn emit_state(
    out: &mut Vec<Primitive>,
    leg: Leg,
    amp: Amplitude,
    basis_index: usize,
    num_qubits: usize,
    scale: f64,
) {
    let (re_len, im_len) = (scale * amp.re.abs(), scale * amp.im.abs());
    if collapse_policy(leg.length(), [re_len, im_len], scale) == Collapse::Omit {
        return;
    }
    let tri = Triangle::erect(leg.outer, leg.apex, re_len, im_len, leg.normal);
    let center = tri.p.midpoint(tri.q);
    let radius = tri.p.distance(tri.q) / 2.0;
    let area_value = PI / 2.0 * radius * radius;
    let probability = area_value / (PI / 8.0 * scale * scale);
    out.push(Primitive::Semicircle {
        center,
        radius,
        orientation: tri.n.1.atan2(tri.n.0),
        basis_index,
        area_value,
        probability,
    });

    out.push(Primitive::StateTriangle {
        vertices: tri.vertices(),
        basis_index,
        color_role: ColorRole::for_basis(num_qubits, basis_index),
    });

    for (part, value, endpoints) in [
        (Part::Real, amp.re, [tri.p, tri.r]),
        (Part::Imaginary, amp.im, [tri.r, tri.q]),
    ] {
        if value.abs() < COLLAPSE_EPSILON {
            continue;
        }
        out.push(Primitive::AmplitudeSegment {
            endpoints,
            part,
            negative: value < -SIGN_EPSILON,
            basis_index,
        });
    }

    let label_offset = radius + 0.06 * scale;
    out.push(Primitive::ProbabilityLabel {
        anchor: center.add(tri.n.scaled(label_offset)),
        text: format!(
            "P{:0width$b}: {:.2}",
            basis_index,
            probability,
            width = num_qubits
        ),
        basis_index,
    });
}

fn base_triangle(scale: f64, left: f64, right: f64) -> Triangle {
    Triangle::erect(
        Point(0.0, 0.0),
        Point(scale, 0.0),
        scale * left,
        scale * right,
        Point(0.0, 1.0),
    )
}

/// Right triangle on hypotenuse `p → q` with its right-angle vertex `r`
/// on the side of unit normal `n`.
#[derive(Debug, Clone, Copy)]
struct Triangle {
    p: Point,
    q: Point,
    r: Point,
    n: Point,
}

/// A triangle leg seen as the hypotenuse of the next level.
#[derive(Debug, Clone, Copy)]
struct Leg {
    /// Endpoint shared with the parent hypotenuse.
    outer: Point,
    /// Parent's right-angle vertex.
    apex: Point,
    /// Unit normal pointing away from the parent's interior.
    normal: Point,
}

impl Leg {
    fn length(&self) -> f64 {
        self.outer.distance(self.apex)
    }
}

impl Triangle {
    /// Places the right-angle vertex by Thales: its foot on `p → q` lies
    /// `leg_p² / h` from `p`, at height `leg_p · leg_q / h`.
    fn erect(p: Point, q: Point, leg_p: f64, leg_q: f64, n: Point) -> Triangle {
        let h = p.distance(q);
        let r = if h == 0.0 {
            p
        } else {
            let t = q.sub(p).scaled(1.0 / h);
            p.add(t.scaled(leg_p * leg_p / h))
                .add(n.scaled(leg_p * leg_q / h))
        };
        Triangle { p, q, r, n }
    }

    fn vertices(&self) -> [Point; 3] {
        [self.p, self.q, self.r]
    }

    /// Legs `p–r` and `q–r` with their outward normals.
    fn legs(&self) -> [Leg; 2] {
        // Orientation of p → q → r; fixed by n even when r lies on p → q.
        let d = self.q.sub(self.p);
        let sigma = (d.0 * self.n.1 - d.1 * self.n.0).signum();
        let outward = |from: Point, to: Point| {
            let e = to.sub(from);
            let len = e.norm();
            if len == 0.0 {
                self.n
            } else {
                Point(e.1, -e.0).scaled(sigma / len)
            }
        };
        [
            Leg {
                outer: self.p,
                apex: self.r,
                normal: outward(self.r, self.p),
            },
            Leg {
                outer: self.q,
                apex: self.r,
                normal: outward(self.q, self.r),
            },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn st(parts: &[(f64, f64)]) -> QuantumState {
        QuantumState::new(parts.iter().map(|&(r, i)| Amplitude::new(r, i)).collect()).unwrap()
    }

    fn semicircle_probs(d: &Diagram) -> Vec<(usize, f64)> {
        d.semicircles()
            .map(|p| match p {
                Primitive::Semicircle {
                    basis_index,
                    probability,
                    ..
                } => (*basis_index, *probability),
                _ => unreachable!(),
            })
            .collect()
    }

    fn labels(d: &Diagram) -> Vec<String> {
        d.primitives
            .iter()
            .filter_map(|p| match p {
                Primitive::ProbabilityLabel { text, .. } => Some(text.clone()),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn basis_zero_single() {
        let d = layout_single(&st(&[(1.0, 0.0), (0.0, 0.0)]), 320.0).unwrap();
        let Primitive::WhiteTriangle { vertices, .. } = &d.primitives[0] else {
            panic!("base first")
        };
        assert!(vertices[2].distance(Point(320.0, 0.0)) < 1e-9);
        let semis = semicircle_probs(&d);
        assert_eq!(semis.len(), 1);
        assert_eq!(semis[0].0, 0);
        assert!((semis[0].1 - 1.0).abs() < 1e-12);
        let Primitive::Semicircle {
            area_value, radius, ..
        } = d.semicircles().next().unwrap()
        else {
            unreachable!()
        };
        assert!((area_value - PI / 8.0 * 320.0 * 320.0).abs() < 1e-6);
        assert!((radius - 160.0).abs() < 1e-12);
        assert_eq!(labels(&d), vec!["P0: 1.00"]);
    }

    #[test]
    fn equal_superposition_apex() {
        let d = layout_single(&st(&[(FRAC_1_SQRT_2, 0.0), (FRAC_1_SQRT_2, 0.0)]), 320.0).unwrap();
        let Primitive::WhiteTriangle { vertices, .. } = &d.primitives[0] else {
            panic!()
        };
        // Foot at u² of the base, height u·v.
        assert!(vertices[2].distance(Point(160.0, 160.0)) < 1e-9);
        for (_, p) in semicircle_probs(&d) {
            assert!((p - 0.5).abs() < 1e-12);
        }
        assert_eq!(labels(&d), vec!["P0: 0.50", "P1: 0.50"]);
    }

    #[test]
    fn area_ratio_follows_probability() {
        let p1: f64 = 0.31;
        let d = layout_single(&st(&[((1.0 - p1).sqrt(), 0.0), (0.0, p1.sqrt())]), 100.0).unwrap();
        let areas: Vec<f64> = d
            .semicircles()
            .map(|p| match p {
                Primitive::Semicircle { area_value, .. } => *area_value,
                _ => unreachable!(),
            })
            .collect();
        assert!((areas[1] / areas[0] - 0.31 / 0.69).abs() < 1e-12);
    }

    #[test]
    fn uniform_two_qubit() {
        let d = layout_two(&st(&[(0.5, 0.0); 4]), 320.0, &DisplayOrder::identity(2)).unwrap();
        let semis = semicircle_probs(&d);
        assert_eq!(
            semis.iter().map(|s| s.0).collect::<Vec<_>>(),
            vec![0, 1, 2, 3]
        );
        for (_, p) in semis {
            assert!((p - 0.25).abs() < 1e-12);
        }
        let imaginary = d.primitives.iter().any(|p| {
            matches!(
                p,
                Primitive::AmplitudeSegment {
                    part: Part::Imaginary,
                    ..
                }
            )
        });
        assert!(!imaginary);
        let Primitive::WhiteTriangle {
            vertices, tooltip, ..
        } = &d.primitives[0]
        else {
            panic!()
        };
        assert!((vertices[0].distance(vertices[2]) - 320.0 * FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((vertices[1].distance(vertices[2]) - 320.0 * FRAC_1_SQRT_2).abs() < 1e-9);
        assert_eq!(
            tooltip,
            &Tooltip::Marginal {
                display_qubit: 0,
                probabilities: [0.5, 0.5]
            }
        );
        assert_eq!(
            labels(&d),
            vec!["P00: 0.25", "P01: 0.25", "P10: 0.25", "P11: 0.25"]
        );
    }

    #[test]
    fn only_purple_after_diffuser() {
        let d = layout_two(
            &st(&[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]),
            320.0,
            &DisplayOrder::identity(2),
        )
        .unwrap();
        let semis = semicircle_probs(&d);
        assert_eq!(semis.len(), 1);
        assert_eq!(semis[0].0, 3);
        assert!((semis[0].1 - 1.0).abs() < 1e-12);
        let roles: Vec<ColorRole> = d
            .primitives
            .iter()
            .filter_map(|p| match p {
                Primitive::StateTriangle { color_role, .. } => Some(*color_role),
                _ => None,
            })
            .collect();
        assert_eq!(roles, vec![ColorRole::Purple]);
        let Primitive::WhiteTriangle { vertices, .. } = &d.primitives[0] else {
            panic!()
        };
        // m0 = 0: the apex coincides with the left end of the base.
        assert!(vertices[2].distance(Point(0.0, 0.0)) < 1e-9);
    }

    #[test]
    fn phase_flip_marks_double_line() {
        let d = layout_two(
            &st(&[(0.5, 0.0), (0.5, 0.0), (0.5, 0.0), (-0.5, 0.0)]),
            320.0,
            &DisplayOrder::identity(2),
        )
        .unwrap();
        let negatives: Vec<(usize, Part)> = d
            .primitives
            .iter()
            .filter_map(|p| match p {
                Primitive::AmplitudeSegment {
                    negative: true,
                    basis_index,
                    part,
                    ..
                } => Some((*basis_index, *part)),
                _ => None,
            })
            .collect();
        assert_eq!(negatives, vec![(3, Part::Real)]);
        for (_, p) in semicircle_probs(&d) {
            assert!((p - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_imaginary_segment_lies_on_diameter() {
        let d = layout_single(&st(&[(0.6, 0.0), (0.0, -0.8)]), 10.0).unwrap();
        let segs: Vec<(usize, Part, [Point; 2], bool)> = d
            .primitives
            .iter()
            .filter_map(|p| match p {
                Primitive::AmplitudeSegment {
                    endpoints,
                    part,
                    negative,
                    basis_index,
                } => Some((*basis_index, *part, *endpoints, *negative)),
                _ => None,
            })
            .collect();
        assert_eq!(segs.len(), 2);
        let semis: Vec<(Point, f64)> = d
            .semicircles()
            .map(|p| match p {
                Primitive::Semicircle { center, radius, .. } => (*center, *radius),
                _ => unreachable!(),
            })
            .collect();
        for ((idx, part, ends, neg), (center, radius)) in segs.iter().zip(&semis) {
            // A diameter passes through the center and has length 2r.
            assert!((ends[0].distance(ends[1]) - 2.0 * radius).abs() < 1e-9);
            assert!(ends[0].midpoint(ends[1]).distance(*center) < 1e-9);
            assert_eq!(
                *part,
                if *idx == 0 {
                    Part::Real
                } else {
                    Part::Imaginary
                }
            );
            assert_eq!(*neg, *idx == 1);
        }
    }

    #[test]
    fn collapse_policy_cases() {
        assert_eq!(collapse_policy(0.0, [0.0, 0.0], 320.0), Collapse::Omit);
        assert_eq!(collapse_policy(0.0, [0.0, 0.0], 1.0), Collapse::Omit);
        assert_eq!(collapse_policy(0.7, [0.7, 0.0], 1.0), Collapse::Degenerate);
        assert_eq!(collapse_policy(1.0, [0.6, 0.8], 1.0), Collapse::Keep);
        assert_eq!(
            collapse_policy(320.0 * 5e-7, [0.0, 0.0], 320.0),
            Collapse::Omit
        );
    }

    #[test]
    fn children_sit_outside_parent() {
        // Generic state: every state-triangle apex must be on the far side of
        // its parent leg from the parent's third vertex.
        let raw = [(0.3, 0.2), (-0.4, 0.1), (0.5, -0.3), (0.1, 0.0)];
        let s =
            QuantumState::renormalized(raw.iter().map(|&(r, i)| Amplitude::new(r, i)).collect())
                .unwrap()
                .0;
        let d = layout_two(&s, 1.0, &DisplayOrder::identity(2)).unwrap();
        let Primitive::WhiteTriangle { vertices: base, .. } = &d.primitives[0] else {
            panic!()
        };
        let side = |a: Point, b: Point, c: Point| {
            let (u, v) = (b.sub(a), c.sub(a));
            u.0 * v.1 - u.1 * v.0
        };
        for p in &d.primitives {
            if let Primitive::WhiteTriangle {
                vertices, level: 1, ..
            } = p
            {
                let [hp, hq, apex] = *vertices;
                let other = if hp.distance(base[0]) < 1e-12 {
                    base[1]
                } else {
                    base[0]
                };
                assert!(side(hp, hq, apex) * side(hp, hq, other) < 0.0);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let s = st(&[(1.0, 0.0), (0.0, 0.0)]);
        assert!(matches!(
            layout_single(&s, 0.0),
            Err(GeometryError::BadScale(_))
        ));
        assert!(matches!(
            layout_single(&s, f64::NAN),
            Err(GeometryError::BadScale(_))
        ));
        assert!(layout_two(&s, 1.0, &DisplayOrder::identity(2)).is_err());
        assert!(layout(&s, 1.0, &DisplayOrder::swapped()).is_err());
    }

    #[test]
    fn diagram_json_shape() {
        let d = layout_single(&st(&[(1.0, 0.0), (0.0, 0.0)]), 2.0).unwrap();
        let json = d.to_json();
        assert!(json.starts_with(r#"{"num_qubits":1,"scale":2.0,"order":[0],"primitives":[{"kind":"white_triangle","vertices":[[0.0,0.0],[2.0,0.0],"#));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["primitives"][0]["kind"], "white_triangle");
        assert_eq!(v["primitives"][0]["tooltip"]["type"], "marginal");
        assert_eq!(v["primitives"][1]["kind"], "semicircle");
        assert_eq!(v["primitives"][2]["kind"], "state_triangle");
        assert_eq!(v["primitives"][2]["color_role"], "cyan");
        let back: Diagram = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }
}
