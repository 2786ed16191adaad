use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("length must be 2 or 4, got {0}")]
    BadLength(usize),
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("state is not normalized: sum of squared moduli is {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },
    #[error("cannot renormalize the zero vector")]
    ZeroVector,
    #[error("unsupported qubit count {0}; only 1 or 2 qubits are modeled")]
    QubitCount(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("qubit {0} out of range")]
    QubitOutOfRange(usize),
    #[error("bit must be 0 or 1, got {0}")]
    BadBit(u8),
    #[error("operation requires a two-qubit state")]
    RequiresTwoQubits,
    #[error("operation requires single-qubit states")]
    RequiresOneQubit,
    #[error("conditioning and target qubit are both {0}")]
    SameQubit(usize),
    #[error("display order {0:?} is not a permutation of the qubits")]
    BadOrder(Vec<usize>),
    #[error("display order has {order} entries but the state has {qubits} qubits")]
    OrderMismatch { order: usize, qubits: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GateError {
    #[error("gate {gate} takes {expected} parameter(s), got {got}")]
    Params {
        gate: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("gate {gate} acts on {expected} qubit(s), got {got} target(s)")]
    Targets {
        gate: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("target qubit {target} out of range for a {num_qubits}-qubit register")]
    TargetOutOfRange { target: usize, num_qubits: usize },
    #[error("targets must be distinct")]
    DuplicateTargets,
    #[error("angle parameter is not finite")]
    NonFiniteParam,
    #[error("unsupported qubit count {0}; only 1 or 2 qubits are modeled")]
    QubitCount(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("step {step}: {source}")]
pub struct RunError {
    pub step: usize,
    #[source]
    pub source: GateError,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    State(#[from] StateError),
    #[error("scale must be a positive finite number, got {0}")]
    BadScale(f64),
}
