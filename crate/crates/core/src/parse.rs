//! JSON front-end for circuits and raw states.
//!
//! Circuit documents look like
//!
//! ```json
//! {"qubits": 2, "initial": [[1,0],[0,0],[0,0],[0,0]],
//!  "gates": [{"name": "h", "targets": [0]},
//!            {"name": "ry", "params": ["pi/2"], "targets": [1]},
//!            {"name": "cnot", "targets": [0, 1]}]}
//! ```
//!
//! Semantic problems are reported with a JSON pointer into the input;
//! syntax errors carry a line and column.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::circuit::Circuit;
use crate::gate::{Gate, GateKind};
use crate::state::{validate_normalization, Amplitude, QuantumState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Location {
    Text { line: usize, column: usize },
    Pointer { pointer: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub location: Location,
    pub message: String,
}

impl Diagnostic {
    pub fn error(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            location: Location::Pointer {
                pointer: pointer.into(),
            },
            message: message.into(),
        }
    }

    pub fn warning(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Warning,
            location: Location::Pointer {
                pointer: pointer.into(),
            },
            message: message.into(),
        }
    }

    pub(crate) fn syntax(err: &serde_json::Error) -> Self {
        Self {
            severity: Severity::Error,
            location: Location::Text {
                line: err.line(),
                column: err.column(),
            },
            message: format!("malformed JSON: {err}"),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match &self.location {
            Location::Text { line, column } => {
                write!(f, "{severity} at {line}:{column}: {}", self.message)
            }
            Location::Pointer { pointer } if pointer.is_empty() => {
                write!(f, "{severity}: {}", self.message)
            }
            Location::Pointer { pointer } => write!(f, "{severity} at {pointer}: {}", self.message),
        }
    }
}

/// A successfully parsed value plus any warnings raised on the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Parsed<T> {
    pub value: T,
    pub warnings: Vec<Diagnostic>,
}

pub fn parse_circuit(text: &str) -> Result<Parsed<Circuit>, Vec<Diagnostic>> {
    let value: Value = serde_json::from_str(text).map_err(|e| vec![Diagnostic::syntax(&e)])?;
    circuit_from_value(&value, "")
}

pub fn parse_state(text: &str, renormalize: bool) -> Result<Parsed<QuantumState>, Vec<Diagnostic>> {
    let value: Value = serde_json::from_str(text).map_err(|e| vec![Diagnostic::syntax(&e)])?;
    state_from_value(&value, "", renormalize)
}

/// Escapes one reference token per RFC 6901.
pub fn pointer_token(key: &str) -> String {
    key.replace('~', "~0").replace('/', "~1")
}

/// Reads a state (array of `[re, im]` pairs) located at `pointer`.
pub fn state_from_value(
    value: &Value,
    pointer: &str,
    renormalize: bool,
) -> Result<Parsed<QuantumState>, Vec<Diagnostic>> {
    let Some(items) = value.as_array() else {
        return Err(vec![Diagnostic::error(
            pointer,
            "state must be an array of [re, im] pairs",
        )]);
    };
    if items.len() != 2 && items.len() != 4 {
        return Err(vec![Diagnostic::error(
            pointer,
            format!("length must be 2 or 4, got {}", items.len()),
        )]);
    }
    let mut errors = Vec::new();
    let mut amps = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let here = format!("{pointer}/{i}");
        let pair = item.as_array().filter(|p| p.len() == 2);
        let parts = pair.map(|p| (p[0].as_f64(), p[1].as_f64()));
        match parts {
            Some((Some(re), Some(im))) if re.is_finite() && im.is_finite() => {
                amps.push(Amplitude::new(re, im))
            }
            _ => errors.push(Diagnostic::error(
                here,
                "amplitude must be a pair of finite numbers [re, im]",
            )),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    if validate_normalization(&amps) {
        let state =
            QuantumState::new(amps).map_err(|e| vec![Diagnostic::error(pointer, e.to_string())])?;
        return Ok(Parsed {
            value: state,
            warnings: Vec::new(),
        });
    }
    let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if !renormalize {
        return Err(vec![Diagnostic::error(
            pointer,
            format!("state is not normalized: sum of squared moduli is {norm_sqr}"),
        )]);
    }
    let (state, norm) = QuantumState::renormalized(amps)
        .map_err(|e| vec![Diagnostic::error(pointer, e.to_string())])?;
    Ok(Parsed {
        value: state,
        warnings: vec![Diagnostic::warning(
            pointer,
            format!("renormalized: original norm {norm}"),
        )],
    })
}

/// Reads a circuit document located at `pointer`.
pub fn circuit_from_value(
    value: &Value,
    pointer: &str,
) -> Result<Parsed<Circuit>, Vec<Diagnostic>> {
    let Some(obj) = value.as_object() else {
        return Err(vec![Diagnostic::error(
            pointer,
            "circuit must be a JSON object",
        )]);
    };
    let mut errors = Vec::new();
    let mut warnings = Vec::new();
    warn_unknown(obj, &["qubits", "initial", "gates"], pointer, &mut warnings);

    let qubits = match obj.get("qubits") {
        None => {
            errors.push(Diagnostic::error(pointer, "missing field \"qubits\""));
            None
        }
        Some(v) => match v.as_u64() {
            Some(n @ 1..=2) => Some(n as usize),
            _ => {
                errors.push(Diagnostic::error(
                    format!("{pointer}/qubits"),
                    "qubits must be 1 or 2",
                ));
                None
            }
        },
    };

    let initial = match obj.get("initial") {
        None | Some(Value::Null) => None,
        Some(v) => match state_from_value(v, &format!("{pointer}/initial"), false) {
            Ok(parsed) => {
                warnings.extend(parsed.warnings);
                if let Some(n) = qubits.filter(|&n| n != parsed.value.num_qubits()) {
                    errors.push(Diagnostic::error(
                        format!("{pointer}/initial"),
                        format!(
                            "initial state has {} qubit(s) but the circuit declares {n}",
                            parsed.value.num_qubits()
                        ),
                    ));
                }
                Some(parsed.value)
            }
            Err(e) => {
                errors.extend(e);
                None
            }
        },
    };

    let mut gates = Vec::new();
    match obj.get("gates") {
        None => errors.push(Diagnostic::error(pointer, "missing field \"gates\"")),
        Some(Value::Array(items)) => {
            for (i, item) in items.iter().enumerate() {
                let here = format!("{pointer}/gates/{i}");
                match gate_from_value(item, &here, qubits, &mut warnings) {
                    Ok(g) => gates.push(g),
                    Err(e) => errors.extend(e),
                }
            }
        }
        Some(_) => errors.push(Diagnostic::error(
            format!("{pointer}/gates"),
            "gates must be an array",
        )),
    }

    if !errors.is_empty() {
        return Err(errors);
    }
    let n = qubits.expect("checked above");
    let mut circuit = match initial {
        Some(state) => Circuit::with_initial_state(state),
        None => Circuit::new(n).expect("1 or 2 qubits"),
    };
    for (i, g) in gates.into_iter().enumerate() {
        circuit.push(g).map_err(|e| {
            vec![Diagnostic::error(
                format!("{pointer}/gates/{i}"),
                e.to_string(),
            )]
        })?;
    }
    Ok(Parsed {
        value: circuit,
        warnings,
    })
}

fn gate_from_value(
    value: &Value,
    pointer: &str,
    qubits: Option<usize>,
    warnings: &mut Vec<Diagnostic>,
) -> Result<Gate, Vec<Diagnostic>> {
    let Some(obj) = value.as_object() else {
        return Err(vec![Diagnostic::error(
            pointer,
            "gate must be a JSON object",
        )]);
    };
    warn_unknown(obj, &["name", "params", "targets"], pointer, warnings);
    let mut errors = Vec::new();

    let kind = match obj.get("name") {
        None => {
            errors.push(Diagnostic::error(pointer, "missing field \"name\""));
            None
        }
        Some(Value::String(s)) => match s.parse::<GateKind>() {
            Ok(k) => Some(k),
            Err(token) => {
                errors.push(Diagnostic::error(
                    format!("{pointer}/name"),
                    format!("unknown gate \"{token}\""),
                ));
                None
            }
        },
        Some(_) => {
            errors.push(Diagnostic::error(
                format!("{pointer}/name"),
                "gate name must be a string",
            ));
            None
        }
    };

    let params_ptr = format!("{pointer}/params");
    let mut params = Vec::new();
    match obj.get("params") {
        None | Some(Value::Null) => {}
        Some(Value::Array(items)) => {
            for (i, item) in items.iter().enumerate() {
                match parse_angle_value(item) {
                    Ok(a) => params.push(a),
                    Err(msg) => errors.push(Diagnostic::error(format!("{params_ptr}/{i}"), msg)),
                }
            }
        }
        Some(_) => errors.push(Diagnostic::error(&params_ptr, "params must be an array")),
    }

    let targets_ptr = format!("{pointer}/targets");
    let mut targets = Vec::new();
    match obj.get("targets") {
        None => errors.push(Diagnostic::error(pointer, "missing field \"targets\"")),
        Some(Value::Array(items)) => {
            for (i, item) in items.iter().enumerate() {
                match item.as_u64() {
                    Some(t) => {
                        if let Some(n) = qubits.filter(|&n| t >= n as u64) {
                            errors.push(Diagnostic::error(
                                format!("{targets_ptr}/{i}"),
                                format!("target {t} out of range for {n} qubit(s)"),
                            ));
                        }
                        targets.push(t as usize);
                    }
                    None => errors.push(Diagnostic::error(
                        format!("{targets_ptr}/{i}"),
                        "target must be a non-negative integer",
                    )),
                }
            }
        }
        Some(_) => errors.push(Diagnostic::error(&targets_ptr, "targets must be an array")),
    }

    if let Some(kind) = kind {
        let given = obj.get("params").and_then(Value::as_array).map(Vec::len);
        match given {
            Some(len) if len != kind.param_count() => errors.push(Diagnostic::error(
                &params_ptr,
                format!(
                    "gate \"{kind}\" takes {} parameter(s), got {len}",
                    kind.param_count()
                ),
            )),
            None if kind.param_count() > 0 => errors.push(Diagnostic::error(
                pointer,
                format!("gate \"{kind}\" takes {} parameter(s)", kind.param_count()),
            )),
            _ => {}
        }
        if obj.get("targets").is_some_and(Value::is_array) {
            if targets.len() != kind.qubit_count() {
                errors.push(Diagnostic::error(
                    &targets_ptr,
                    format!("gate \"{kind}\" acts on {} qubit(s)", kind.qubit_count()),
                ));
            } else if targets.len() == 2 && targets[0] == targets[1] {
                errors.push(Diagnostic::error(&targets_ptr, "targets must be distinct"));
            }
        }
    }

    if !errors.is_empty() {
        return Err(errors);
    }
    let kind = kind.expect("checked above");
    Gate::new(kind, params, targets).map_err(|e| vec![Diagnostic::error(pointer, e.to_string())])
}

fn warn_unknown(
    obj: &Map<String, Value>,
    known: &[&str],
    pointer: &str,
    warnings: &mut Vec<Diagnostic>,
) {
    for key in obj.keys().filter(|k| !known.contains(&k.as_str())) {
        warnings.push(Diagnostic::warning(
            format!("{pointer}/{}", pointer_token(key)),
            format!("unknown field \"{key}\" ignored"),
        ));
    }
}

fn parse_angle_value(value: &Value) -> Result<f64, String> {
    match value {
        Value::Number(n) => n
            .as_f64()
            .filter(|x| x.is_finite())
            .ok_or_else(|| "angle must be finite".to_owned()),
        Value::String(s) => parse_angle(s),
        _ => Err("angle must be a number or an expression such as \"pi/2\"".to_owned()),
    }
}

/// Evaluates an angle expression over numbers, `pi`, `*`, `/` and unary `-`,
/// e.g. `"pi/2"`, `"-2*pi/3"`, `"0.25"`.
pub fn parse_angle(text: &str) -> Result<f64, String> {
    #[derive(Debug, PartialEq)]
    enum Tok {
        Num(f64),
        Mul,
        Div,
        Neg,
    }

    let err = |msg: &str| format!("invalid angle \"{text}\": {msg}");
    let mut toks = Vec::new();
    let mut rest = text.trim_start();
    while let Some(c) = rest.chars().next() {
        match c {
            '*' => toks.push(Tok::Mul),
            '/' => toks.push(Tok::Div),
            '-' => toks.push(Tok::Neg),
            _ if rest
                .get(..2)
                .is_some_and(|head| head.eq_ignore_ascii_case("pi")) =>
            {
                toks.push(Tok::Num(PI));
                rest = &rest[2..];
                rest = rest.trim_start();
                continue;
            }
            _ if c.is_ascii_digit() || c == '.' => {
                let end = rest
                    .find(|ch: char| !(ch.is_ascii_digit() || ch == '.' || ch == 'e' || ch == 'E'))
                    .unwrap_or(rest.len());
                let num: f64 = rest[..end].parse().map_err(|_| err("bad number"))?;
                toks.push(Tok::Num(num));
                rest = rest[end..].trim_start();
                continue;
            }
            _ => return Err(err(&format!("unexpected character '{c}'"))),
        }
        rest = rest[c.len_utf8()..].trim_start();
    }

    let mut iter = toks.into_iter().peekable();
    let operand = |iter: &mut std::iter::Peekable<std::vec::IntoIter<Tok>>| -> Result<f64, String> {
        let mut sign = 1.0;
        while iter.next_if_eq(&Tok::Neg).is_some() {
            sign = -sign;
        }
        match iter.next() {
            Some(Tok::Num(x)) => Ok(sign * x),
            _ => Err(err("expected a number or pi")),
        }
    };
    let mut acc = operand(&mut iter)?;
    while let Some(op) = iter.next() {
        let rhs = operand(&mut iter)?;
        match op {
            Tok::Mul => acc *= rhs,
            Tok::Div => acc /= rhs,
            _ => return Err(err("expected '*' or '/'")),
        }
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(err("value is not finite"))
    }
}

/// Canonical JSON value for a circuit: lowercase names, `initial` only
/// when it differs from `|0…0⟩`.
pub fn circuit_to_value(circuit: &Circuit) -> Value {
    let mut obj = Map::new();
    obj.insert("qubits".into(), json!(circuit.num_qubits()));
    if !circuit.is_default_initial() {
        obj.insert("initial".into(), state_to_value(circuit.initial_state()));
    }
    let gates: Vec<Value> = circuit
        .gates()
        .iter()
        .map(|g| serde_json::to_value(g).expect("gate serializes"))
        .collect();
    obj.insert("gates".into(), Value::Array(gates));
    Value::Object(obj)
}

pub fn circuit_to_json(circuit: &Circuit) -> String {
    circuit_to_value(circuit).to_string()
}

pub fn state_to_value(state: &QuantumState) -> Value {
    Value::Array(
        state
            .amplitudes()
            .iter()
            .map(|a| json!([a.re, a.im]))
            .collect(),
    )
}
