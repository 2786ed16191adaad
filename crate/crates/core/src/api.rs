//! Request handling shared by the command line, the HTTP service and the
//! browser build. Everything here is a pure function of the request body.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::circuit::{Circuit, Frame};
use crate::gate::Gate;
use crate::geometry::{layout, Diagram, DEFAULT_SCALE};
use crate::parse::{circuit_from_value, pointer_token, state_from_value, Diagnostic};
use crate::state::{DisplayOrder, QuantumState};

pub const SCHEMA_VERSION: &str = "venus-api/1";

/// Successful answer to a geometry request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryResponse {
    pub schema_version: String,
    pub state: Vec<[f64; 2]>,
    pub probabilities: Vec<f64>,
    pub concurrence: Option<f64>,
    pub diagram: Diagram,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameView {
    pub step: usize,
    pub gate: Option<Value>,
    pub state: Vec<[f64; 2]>,
    pub probabilities: Vec<f64>,
    pub concurrence: Option<f64>,
    pub diagram: Diagram,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FramesResponse {
    pub schema_version: String,
    pub frames: Vec<FrameView>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Body of a rejected request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorResponse {
    pub schema_version: String,
    pub diagnostics: Vec<Diagnostic>,
}

impl ErrorResponse {
    fn new(diagnostics: Vec<Diagnostic>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_owned(),
            diagnostics,
        }
    }
}

/// Rendering options common to both request kinds.
#[derive(Debug, Clone, PartialEq)]
pub struct ViewOptions {
    pub scale: f64,
    pub order: Option<DisplayOrder>,
}

impl Default for ViewOptions {
    fn default() -> Self {
        Self {
            scale: DEFAULT_SCALE,
            order: None,
        }
    }
}

impl ViewOptions {
    fn order_for(&self, num_qubits: usize) -> Result<DisplayOrder, Diagnostic> {
        match &self.order {
            None => Ok(DisplayOrder::identity(num_qubits)),
            Some(o) if o.len() == num_qubits => Ok(o.clone()),
            Some(o) => Err(Diagnostic::error(
                "/order",
                format!(
                    "order {:?} does not match a {num_qubits}-qubit state",
                    o.as_slice()
                ),
            )),
        }
    }
}

fn amplitude_pairs(state: &QuantumState) -> Vec<[f64; 2]> {
    state.amplitudes().iter().map(|a| [a.re, a.im]).collect()
}

fn concurrence(state: &QuantumState) -> Option<f64> {
    state.concurrence().ok()
}

fn parse_body(body: &str) -> Result<serde_json::Map<String, Value>, ErrorResponse> {
    let value: Value =
        serde_json::from_str(body).map_err(|e| ErrorResponse::new(vec![Diagnostic::syntax(&e)]))?;
    match value {
        Value::Object(map) => Ok(map),
        _ => Err(ErrorResponse::new(vec![Diagnostic::error(
            "",
            "request body must be a JSON object",
        )])),
    }
}

fn view_options(
    body: &serde_json::Map<String, Value>,
    errors: &mut Vec<Diagnostic>,
) -> ViewOptions {
    let mut opts = ViewOptions::default();
    match body.get("scale") {
        None | Some(Value::Null) => {}
        Some(v) => match v.as_f64() {
            Some(s) if s > 0.0 && s.is_finite() => opts.scale = s,
            _ => errors.push(Diagnostic::error(
                "/scale",
                "scale must be a positive number",
            )),
        },
    }
    match body.get("order") {
        None | Some(Value::Null) => {}
        Some(v) => match serde_json::from_value::<DisplayOrder>(v.clone()) {
            Ok(o) => opts.order = Some(o),
            Err(_) => errors.push(Diagnostic::error(
                "/order",
                "order must be [0], [0,1] or [1,0]",
            )),
        },
    }
    opts
}

fn warn_unknown(
    body: &serde_json::Map<String, Value>,
    known: &[&str],
    warnings: &mut Vec<Diagnostic>,
) {
    for key in body.keys().filter(|k| !known.contains(&k.as_str())) {
        warnings.push(Diagnostic::warning(
            format!("/{}", pointer_token(key)),
            format!("unknown field \"{key}\" ignored"),
        ));
    }
}

/// `{"state": [[re, im], ...], "scale"?, "order"?, "renormalize"?}` → diagram.
pub fn state_geometry(body: &str) -> Result<GeometryResponse, ErrorResponse> {
    let body = parse_body(body)?;
    let mut errors = Vec::new();
    let mut warnings = Vec::new();
    warn_unknown(
        &body,
        &["state", "scale", "order", "renormalize"],
        &mut warnings,
    );
    let opts = view_options(&body, &mut errors);
    let renormalize = match body.get("renormalize") {
        None | Some(Value::Null) => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => {
            errors.push(Diagnostic::error(
                "/renormalize",
                "renormalize must be a boolean",
            ));
            false
        }
    };
    let state = match body.get("state") {
        None => {
            errors.push(Diagnostic::error("", "missing field \"state\""));
            None
        }
        Some(v) => match state_from_value(v, "/state", renormalize) {
            Ok(p) => {
                warnings.extend(p.warnings);
                Some(p.value)
            }
            Err(e) => {
                errors.extend(e);
                None
            }
        },
    };
    let order = state
        .as_ref()
        .and_then(|s| match opts.order_for(s.num_qubits()) {
            Ok(o) => Some(o),
            Err(e) => {
                errors.push(e);
                None
            }
        });
    if !errors.is_empty() {
        errors.extend(warnings);
        return Err(ErrorResponse::new(errors));
    }
    let (state, order) = (state.expect("checked"), order.expect("checked"));
    let diagram = layout(&state, opts.scale, &order)
        .map_err(|e| ErrorResponse::new(vec![Diagnostic::error("", e.to_string())]))?;
    Ok(GeometryResponse {
        schema_version: SCHEMA_VERSION.to_owned(),
        state: amplitude_pairs(&state),
        probabilities: state.probabilities(),
        concurrence: concurrence(&state),
        diagram,
        diagnostics: warnings,
    })
}

/// `{"circuit": {...}, "scale"?, "order"?}` (or a bare circuit document) →
/// one frame per gate prefix, each with its diagram.
pub fn circuit_frames(body: &str) -> Result<FramesResponse, ErrorResponse> {
    let body = parse_body(body)?;
    let mut errors = Vec::new();
    let mut warnings = Vec::new();

    let (circuit_value, circuit_ptr, opts) = if body.contains_key("circuit") {
        warn_unknown(&body, &["circuit", "scale", "order"], &mut warnings);
        let opts = view_options(&body, &mut errors);
        (body["circuit"].clone(), "/circuit", opts)
    } else {
        (Value::Object(body), "", ViewOptions::default())
    };

    let circuit = match circuit_from_value(&circuit_value, circuit_ptr) {
        Ok(p) => {
            warnings.extend(p.warnings);
            Some(p.value)
        }
        Err(e) => {
            errors.extend(e);
            None
        }
    };
    let order = circuit
        .as_ref()
        .and_then(|c| match opts.order_for(c.num_qubits()) {
            Ok(o) => Some(o),
            Err(e) => {
                errors.push(e);
                None
            }
        });
    if !errors.is_empty() {
        errors.extend(warnings);
        return Err(ErrorResponse::new(errors));
    }
    let (circuit, order) = (circuit.expect("checked"), order.expect("checked"));
    let frames =
        run_views(&circuit, opts.scale, &order).map_err(|d| ErrorResponse::new(vec![d]))?;
    Ok(FramesResponse {
        schema_version: SCHEMA_VERSION.to_owned(),
        frames,
        diagnostics: warnings,
    })
}

/// Runs `circuit` and lays out every frame.
pub fn run_views(
    circuit: &Circuit,
    scale: f64,
    order: &DisplayOrder,
) -> Result<Vec<FrameView>, Diagnostic> {
    let frames = circuit
        .run()
        .map_err(|e| Diagnostic::error(format!("/gates/{}", e.step - 1), e.to_string()))?;
    frames.iter().map(|f| frame_view(f, scale, order)).collect()
}

fn frame_view(frame: &Frame, scale: f64, order: &DisplayOrder) -> Result<FrameView, Diagnostic> {
    let diagram =
        layout(&frame.state, scale, order).map_err(|e| Diagnostic::error("", e.to_string()))?;
    Ok(FrameView {
        step: frame.step,
        gate: frame.gate.as_ref().map(gate_value),
        state: amplitude_pairs(&frame.state),
        probabilities: frame.state.probabilities(),
        concurrence: concurrence(&frame.state),
        diagram,
    })
}

fn gate_value(g: &Gate) -> Value {
    serde_json::to_value(g).expect("gate serializes")
}

/// `{"frames":[{"step":k,"gate":{...}|null,"probabilities":[...]}]}`
pub fn manifest(frames: &[Frame]) -> Value {
    let entries: Vec<Value> = frames
        .iter()
        .map(|f| {
            json!({
                "step": f.step,
                "gate": f.gate.as_ref().map(gate_value),
                "probabilities": f.state.probabilities(),
            })
        })
        .collect();
    json!({ "frames": entries })
}

/// Answer to the health probe.
pub fn health() -> Value {
    json!({
        "status": "ok",
        "version": env!("CARGO_PKG_VERSION"),
        "schema_version": SCHEMA_VERSION,
    })
}
