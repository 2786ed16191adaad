//! Gate definitions and their action on a register.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::GateError;
use crate::state::{Amplitude, QuantumState};

/// Dense complex matrix used for gate unitaries.
pub type Unitary = DMatrix<Amplitude>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    T,
    Rx,
    Ry,
    Rz,
    Phase,
    Cnot,
    Cz,
    Swap,
}

impl GateKind {
    pub const ALL: [GateKind; 14] = [
        GateKind::I,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::H,
        GateKind::S,
        GateKind::T,
        GateKind::Rx,
        GateKind::Ry,
        GateKind::Rz,
        GateKind::Phase,
        GateKind::Cnot,
        GateKind::Cz,
        GateKind::Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::I => "i",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::H => "h",
            GateKind::S => "s",
            GateKind::T => "t",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
            GateKind::Phase => "phase",
            GateKind::Cnot => "cnot",
            GateKind::Cz => "cz",
            GateKind::Swap => "swap",
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            GateKind::Rx | GateKind::Ry | GateKind::Rz | GateKind::Phase => 1,
            _ => 0,
        }
    }

    pub fn qubit_count(self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Cz | GateKind::Swap => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = String;

    /// Case-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| s.to_owned())
    }
}

/// A gate applied to specific qubits. For CNOT the targets are `[control, target]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Gate {
    pub name: GateKind,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<f64>,
    pub targets: Vec<usize>,
}

impl Gate {
    pub fn new(name: GateKind, params: Vec<f64>, targets: Vec<usize>) -> Result<Self, GateError> {
        if params.len() != name.param_count() {
            return Err(GateError::Params {
                gate: name.name(),
                expected: name.param_count(),
                got: params.len(),
            });
        }
        if params.iter().any(|p| !p.is_finite()) {
            return Err(GateError::NonFiniteParam);
        }
        if targets.len() != name.qubit_count() {
            return Err(GateError::Targets {
                gate: name.name(),
                expected: name.qubit_count(),
                got: targets.len(),
            });
        }
        if targets.len() == 2 && targets[0] == targets[1] {
            return Err(GateError::DuplicateTargets);
        }
        Ok(Self {
            name,
            params,
            targets,
        })
    }

    pub fn single(name: GateKind, target: usize) -> Self {
        Self::new(name, vec![], vec![target]).expect("fixed single-qubit gate")
    }

    pub fn rotation(name: GateKind, angle: f64, target: usize) -> Self {
        Self::new(name, vec![angle], vec![target]).expect("rotation gate")
    }

    pub fn pair(name: GateKind, first: usize, second: usize) -> Result<Self, GateError> {
        Self::new(name, vec![], vec![first, second])
    }

    pub fn h(q: usize) -> Self {
        Self::single(GateKind::H, q)
    }

    pub fn x(q: usize) -> Self {
        Self::single(GateKind::X, q)
    }

    pub fn ry(theta: f64, q: usize) -> Self {
        Self::rotation(GateKind::Ry, theta, q)
    }

    pub fn rz(theta: f64, q: usize) -> Self {
        Self::rotation(GateKind::Rz, theta, q)
    }

    pub fn cz() -> Self {
        Self::pair(GateKind::Cz, 0, 1).expect("distinct targets")
    }

    pub(crate) fn check_register(&self, num_qubits: usize) -> Result<(), GateError> {
        if !(1..=2).contains(&num_qubits) {
            return Err(GateError::QubitCount(num_qubits));
        }
        if let Some(&target) = self.targets.iter().find(|&&t| t >= num_qubits) {
            return Err(GateError::TargetOutOfRange { target, num_qubits });
        }
        Ok(())
    }

    /// The gate's own 2×2 or 4×4 unitary, rows indexed by the target bits
    /// in `targets` order (first target most significant).
    pub fn local_matrix(&self) -> Unitary {
        let c = Amplitude::new;
        let o = c(0.0, 0.0);
        let l = c(1.0, 0.0);
        let angle = self.params.first().copied().unwrap_or(0.0);
        let (cos, sin) = ((angle / 2.0).cos(), (angle / 2.0).sin());
        let entries: Vec<Amplitude> = match self.name {
            GateKind::I => vec![l, o, o, l],
            GateKind::X => vec![o, l, l, o],
            GateKind::Y => vec![o, c(0.0, -1.0), c(0.0, 1.0), o],
            GateKind::Z => vec![l, o, o, -l],
            GateKind::H => {
                let h = c(FRAC_1_SQRT_2, 0.0);
                vec![h, h, h, -h]
            }
            GateKind::S => vec![l, o, o, c(0.0, 1.0)],
            GateKind::T => vec![l, o, o, Amplitude::from_polar(1.0, FRAC_PI_4)],
            GateKind::Rx => vec![c(cos, 0.0), c(0.0, -sin), c(0.0, -sin), c(cos, 0.0)],
            GateKind::Ry => vec![c(cos, 0.0), c(-sin, 0.0), c(sin, 0.0), c(cos, 0.0)],
            GateKind::Rz => vec![
                Amplitude::from_polar(1.0, -angle / 2.0),
                o,
                o,
                Amplitude::from_polar(1.0, angle / 2.0),
            ],
            GateKind::Phase => vec![l, o, o, Amplitude::from_polar(1.0, angle)],
            GateKind::Cnot => vec![
                l, o, o, o, //
                o, l, o, o, //
                o, o, o, l, //
                o, o, l, o,
            ],
            GateKind::Cz => vec![
                l, o, o, o, //
                o, l, o, o, //
                o, o, l, o, //
                o, o, o, -l,
            ],
            GateKind::Swap => vec![
                l, o, o, o, //
                o, o, l, o, //
                o, l, o, o, //
                o, o, o, l,
            ],
        };
        let dim = if entries.len() == 4 { 2 } else { 4 };
        Unitary::from_row_slice(dim, dim, &entries)
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let params: Vec<String> = self.params.iter().map(|p| format!("{p}")).collect();
            write!(f, "({})", params.join(", "))?;
        }
        let targets: Vec<String> = self.targets.iter().map(|t| format!("q{t}")).collect();
        write!(f, " {}", targets.join(", "))
    }
}

/// Full-register unitary of `gate`, lifted by Kronecker products with the identity.
pub fn gate_matrix(gate: &Gate, num_qubits: usize) -> Result<Unitary, GateError> {
    gate.check_register(num_qubits)?;
    let local = gate.local_matrix();
    let id = Unitary::identity(2, 2);
    Ok(match (num_qubits, gate.targets.as_slice()) {
        (1, _) => local,
        (2, [0]) => local.kronecker(&id),
        (2, [1]) => id.kronecker(&local),
        (2, [0, 1]) => local,
        (2, [1, 0]) => {
            let swap = Gate::pair(GateKind::Swap, 0, 1)?.local_matrix();
            &swap * local * &swap
        }
        _ => unreachable!("targets validated by check_register"),
    })
}

/// Applies `gate` to `state` by updating the affected amplitude groups in place.
pub fn apply_gate(state: &QuantumState, gate: &Gate) -> Result<QuantumState, GateError> {
    let n = state.num_qubits();
    gate.check_register(n)?;
    let local = gate.local_matrix();
    let mut amps = state.amplitudes().to_vec();
    let mask = |q: usize| 1usize << (n - 1 - q);

    match *gate.targets.as_slice() {
        [q] => {
            let bit = mask(q);
            for i in (0..amps.len()).filter(|i| i & bit == 0) {
                let j = i | bit;
                let (a0, a1) = (amps[i], amps[j]);
                amps[i] = local[(0, 0)] * a0 + local[(0, 1)] * a1;
                amps[j] = local[(1, 0)] * a0 + local[(1, 1)] * a1;
            }
        }
        [q0, q1] => {
            let (b0, b1) = (mask(q0), mask(q1));
            let slots = [0, b1, b0, b0 | b1];
            let old: Vec<Amplitude> = slots.iter().map(|&s| amps[s]).collect();
            for (row, &slot) in slots.iter().enumerate() {
                amps[slot] = (0..4).map(|col| local[(row, col)] * old[col]).sum();
            }
        }
        _ => unreachable!("arity validated at construction"),
    }
    Ok(QuantumState::from_evolved(amps))
}
