//! Pure one- and two-qubit states.
//!
//! Basis indices are big-endian over qubit labels: qubit 0 is the most
//! significant bit, so index 1 is `|01⟩` (qubit 0 in `|0⟩`, qubit 1 in `|1⟩`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::StateError;

/// A single complex amplitude.
pub type Amplitude = Complex64;

/// Tolerance on `Σ|amp|² = 1` accepted for input states.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Marginals below this are treated as a zero-probability conditioning event.
pub const CONDITIONAL_EPSILON: f64 = 1e-12;

/// A normalized pure state over one or two qubits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuantumState {
    num_qubits: usize,
    amps: Vec<Amplitude>,
}

impl QuantumState {
    /// Builds a state from raw amplitudes, rejecting anything that is not
    /// of length 2 or 4, contains non-finite parts, or is off-norm.
    pub fn new(amps: Vec<Amplitude>) -> Result<Self, StateError> {
        let state = Self::new_unchecked_norm(amps)?;
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(StateError::NotNormalized { norm_sqr: norm });
        }
        Ok(state)
    }

    /// Divides by the vector norm. Returns the state and the original norm.
    pub fn renormalized(amps: Vec<Amplitude>) -> Result<(Self, f64), StateError> {
        let state = Self::new_unchecked_norm(amps)?;
        let norm = state.norm_sqr().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(StateError::ZeroVector);
        }
        let amps = state.amps.iter().map(|a| a / norm).collect();
        Ok((
            Self {
                num_qubits: state.num_qubits,
                amps,
            },
            norm,
        ))
    }

    fn new_unchecked_norm(amps: Vec<Amplitude>) -> Result<Self, StateError> {
        let num_qubits = match amps.len() {
            2 => 1,
            4 => 2,
            len => return Err(StateError::BadLength(len)),
        };
        if let Some(index) = amps
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(StateError::NonFinite { index });
        }
        Ok(Self { num_qubits, amps })
    }

    /// Wraps amplitudes produced by unitary evolution; only the length is checked.
    pub(crate) fn from_evolved(amps: Vec<Amplitude>) -> Self {
        debug_assert!(amps.len() == 2 || amps.len() == 4);
        let num_qubits = if amps.len() == 2 { 1 } else { 2 };
        Self { num_qubits, amps }
    }

    /// `|0…0⟩` on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Result<Self, StateError> {
        Self::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Result<Self, StateError> {
        if !(1..=2).contains(&num_qubits) {
            return Err(StateError::QubitCount(num_qubits));
        }
        let dim = 1 << num_qubits;
        if index >= dim {
            return Err(StateError::IndexOutOfRange { index, dim });
        }
        let mut amps = vec![Amplitude::new(0.0, 0.0); dim];
        amps[index] = Amplitude::new(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Result<Amplitude, StateError> {
        self.amps
            .get(index)
            .copied()
            .ok_or(StateError::IndexOutOfRange {
                index,
                dim: self.dim(),
            })
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Measurement probability of one basis state, `re² + im²`.
    pub fn probability(&self, basis_index: usize) -> Result<f64, StateError> {
        Ok(self.amplitude(basis_index)?.norm_sqr())
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn is_normalized(&self) -> bool {
        validate_normalization(&self.amps)
    }

    /// Probability that the qubit shown at `display_qubit` reads `bit`.
    pub fn marginal_probability(
        &self,
        display_qubit: usize,
        bit: u8,
        order: &DisplayOrder,
    ) -> Result<f64, StateError> {
        self.require_two_qubits()?;
        check_bit(bit)?;
        let physical = order.physical_qubit(display_qubit)?;
        Ok((0..self.dim())
            .filter(|&i| bit_of(i, physical, 2) == bit)
            .map(|i| self.amps[i].norm_sqr())
            .sum())
    }

    /// `P(target = target_bit | given = given_bit)` over physical qubits.
    pub fn conditional_probability(
        &self,
        given_qubit: usize,
        given_bit: u8,
        target_qubit: usize,
        target_bit: u8,
    ) -> Result<Conditional, StateError> {
        self.require_two_qubits()?;
        check_bit(given_bit)?;
        check_bit(target_bit)?;
        if given_qubit > 1 || target_qubit > 1 {
            return Err(StateError::QubitOutOfRange(given_qubit.max(target_qubit)));
        }
        if given_qubit == target_qubit {
            return Err(StateError::SameQubit(given_qubit));
        }
        let mut marginal = 0.0;
        let mut joint = 0.0;
        for (i, amp) in self.amps.iter().enumerate() {
            if bit_of(i, given_qubit, 2) != given_bit {
                continue;
            }
            let p = amp.norm_sqr();
            marginal += p;
            if bit_of(i, target_qubit, 2) == target_bit {
                joint += p;
            }
        }
        if marginal < CONDITIONAL_EPSILON {
            Ok(Conditional::Undefined)
        } else {
            Ok(Conditional::Defined(joint / marginal))
        }
    }

    /// Relabels qubits so that display position `k` holds physical qubit `order[k]`.
    pub fn reorder_qubits(&self, order: &DisplayOrder) -> Result<Self, StateError> {
        order.check_for(self.num_qubits)?;
        if order.is_identity() {
            return Ok(self.clone());
        }
        let n = self.num_qubits;
        let mut amps = vec![Amplitude::new(0.0, 0.0); self.dim()];
        for (display_index, slot) in amps.iter_mut().enumerate() {
            let mut physical_index = 0;
            for (display_qubit, &physical_qubit) in order.as_slice().iter().enumerate() {
                let bit = bit_of(display_index, display_qubit, n) as usize;
                physical_index |= bit << (n - 1 - physical_qubit);
            }
            *slot = self.amps[physical_index];
        }
        Ok(Self {
            num_qubits: n,
            amps,
        })
    }

    /// Pure-state concurrence `2|αδ − βγ|`.
    pub fn concurrence(&self) -> Result<f64, StateError> {
        self.require_two_qubits()?;
        let [a, b, c, d] = [self.amps[0], self.amps[1], self.amps[2], self.amps[3]];
        Ok((2.0 * (a * d - b * c).norm()).min(1.0))
    }

    fn require_two_qubits(&self) -> Result<(), StateError> {
        if self.num_qubits != 2 {
            return Err(StateError::RequiresTwoQubits);
        }
        Ok(())
    }
}

/// `a ⊗ b` with `a` as qubit 0.
pub fn tensor_product(a: &QuantumState, b: &QuantumState) -> Result<QuantumState, StateError> {
    if a.num_qubits != 1 || b.num_qubits != 1 {
        return Err(StateError::RequiresOneQubit);
    }
    let amps = a
        .amps
        .iter()
        .flat_map(|x| b.amps.iter().map(move |y| x * y))
        .collect();
    Ok(QuantumState::from_evolved(amps))
}

/// True iff `Σ|amp|²` lies within [`NORM_TOLERANCE`] of 1.
pub fn validate_normalization(amps: &[Amplitude]) -> bool {
    let total: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    (total - 1.0).abs() <= NORM_TOLERANCE
}

/// Bit of `qubit` in a big-endian basis index over `n` qubits.
pub(crate) fn bit_of(index: usize, qubit: usize, n: usize) -> u8 {
    ((index >> (n - 1 - qubit)) & 1) as u8
}

fn check_bit(bit: u8) -> Result<(), StateError> {
    if bit > 1 {
        return Err(StateError::BadBit(bit));
    }
    Ok(())
}

/// Result of a conditional probability query; undefined when the
/// conditioning event has (numerically) zero probability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conditional {
    Defined(f64),
    Undefined,
}

impl Conditional {
    pub fn value(self) -> Option<f64> {
        match self {
            Conditional::Defined(p) => Some(p),
            Conditional::Undefined => None,
        }
    }
}

/// Which physical qubit is shown at each display position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DisplayOrder(Vec<usize>);

impl DisplayOrder {
    pub fn new(permutation: Vec<usize>) -> Result<Self, StateError> {
        let n = permutation.len();
        if !(1..=2).contains(&n) {
            return Err(StateError::BadOrder(permutation));
        }
        let mut seen = [false; 2];
        for &q in &permutation {
            if q >= n || seen[q] {
                return Err(StateError::BadOrder(permutation));
            }
            seen[q] = true;
        }
        Ok(Self(permutation))
    }

    pub fn identity(num_qubits: usize) -> Self {
        Self((0..num_qubits).collect())
    }

    pub fn swapped() -> Self {
        Self(vec![1, 0])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &q)| i == q)
    }

    pub fn physical_qubit(&self, display_qubit: usize) -> Result<usize, StateError> {
        self.0
            .get(display_qubit)
            .copied()
            .ok_or(StateError::QubitOutOfRange(display_qubit))
    }

    pub(crate) fn check_for(&self, num_qubits: usize) -> Result<(), StateError> {
        if self.0.len() != num_qubits {
            return Err(StateError::OrderMismatch {
                order: self.0.len(),
                qubits: num_qubits,
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for DisplayOrder {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = Vec::<usize>::deserialize(de)?;
        DisplayOrder::new(raw).map_err(serde::de::Error::custom)
    }
}
