//! Simulation and VENUS diagrams for one- and two-qubit pure states.
//!
//! - [`state`]: amplitudes, probabilities, marginals, qubit reordering.
//! - [`gate`] and [`circuit`]: gate unitaries and step-by-step execution.
//! - [`parse`]: the JSON circuit and state formats.
//! - [`geometry`]: the triangle/semicircle layout of a state.
//! - [`svg`]: deterministic SVG rendering of a layout.
//! - [`api`]: request handlers shared by the CLI, HTTP service and browser demo.

pub mod api;
pub mod circuit;
pub mod error;
pub mod gate;
pub mod geometry;
pub mod parse;
pub mod state;
pub mod svg;

pub use circuit::{Circuit, Frame};
pub use error::{GateError, GeometryError, RunError, StateError};
pub use gate::{apply_gate, gate_matrix, Gate, GateKind, Unitary};
pub use geometry::{layout, layout_single, layout_two, Diagram, Primitive};
pub use parse::{parse_circuit, parse_state, Diagnostic};
pub use state::{tensor_product, Amplitude, Conditional, DisplayOrder, QuantumState};
pub use svg::{render, render_frames, RenderTheme};
