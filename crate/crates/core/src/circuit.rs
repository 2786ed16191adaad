//! Circuits and step-by-step execution.

use serde::Serialize;

use crate::error::{GateError, RunError};
use crate::gate::{apply_gate, Gate};
use crate::state::QuantumState;

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    initial_state: QuantumState,
    gates: Vec<Gate>,
}

impl Circuit {
    /// Empty circuit starting from `|0…0⟩`.
    pub fn new(num_qubits: usize) -> Result<Self, GateError> {
        let initial_state =
            QuantumState::zero(num_qubits).map_err(|_| GateError::QubitCount(num_qubits))?;
        Ok(Self {
            num_qubits,
            initial_state,
            gates: Vec::new(),
        })
    }

    pub fn with_initial_state(initial_state: QuantumState) -> Self {
        Self {
            num_qubits: initial_state.num_qubits(),
            initial_state,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<&mut Self, GateError> {
        gate.check_register(self.num_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(
        &mut self,
        gates: I,
    ) -> Result<&mut Self, GateError> {
        for g in gates {
            self.push(g)?;
        }
        Ok(self)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn initial_state(&self) -> &QuantumState {
        &self.initial_state
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn is_default_initial(&self) -> bool {
        self.initial_state == QuantumState::zero(self.num_qubits).expect("1 or 2 qubits")
    }

    /// Executes the circuit, returning one frame per prefix (`gates().len() + 1` frames).
    pub fn run(&self) -> Result<Vec<Frame>, RunError> {
        let mut frames = Vec::with_capacity(self.gates.len() + 1);
        frames.push(Frame {
            step: 0,
            gate: None,
            state: self.initial_state.clone(),
        });
        let mut state = self.initial_state.clone();
        for (i, gate) in self.gates.iter().enumerate() {
            state = apply_gate(&state, gate).map_err(|source| RunError {
                step: i + 1,
                source,
            })?;
            frames.push(Frame {
                step: i + 1,
                gate: Some(gate.clone()),
                state: state.clone(),
            });
        }
        Ok(frames)
    }

    /// State after every gate.
    pub fn final_state(&self) -> Result<QuantumState, RunError> {
        Ok(self.run()?.pop().expect("at least the initial frame").state)
    }
}

/// State after the first `step` gates; step 0 has no gate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Frame {
    pub step: usize,
    pub gate: Option<Gate>,
    pub state: QuantumState,
}

/// Building blocks for two-qubit Grover search.
pub mod grover {
    use super::*;

    pub fn hadamard_layer() -> Vec<Gate> {
        vec![Gate::h(0), Gate::h(1)]
    }

    /// Phase oracle marking `|11⟩`.
    pub fn oracle_eleven() -> Vec<Gate> {
        vec![Gate::cz()]
    }

    /// Inversion about the mean: H⊗H, X⊗X, CZ, X⊗X, H⊗H.
    pub fn diffuser() -> Vec<Gate> {
        let mut gates = hadamard_layer();
        gates.extend([Gate::x(0), Gate::x(1), Gate::cz(), Gate::x(0), Gate::x(1)]);
        gates.extend(hadamard_layer());
        gates
    }

    /// Oracle followed by the diffuser.
    pub fn iteration() -> Vec<Gate> {
        let mut gates = oracle_eleven();
        gates.extend(diffuser());
        gates
    }

    /// Initial Hadamard layer plus `iterations` Grover iterations searching for `|11⟩`.
    pub fn circuit(iterations: usize) -> Circuit {
        let mut c = Circuit::new(2).expect("two qubits");
        c.extend(hadamard_layer()).expect("valid");
        for _ in 0..iterations {
            c.extend(iteration()).expect("valid");
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_circuit_single_frame() {
        let frames = Circuit::new(1).unwrap().run().unwrap();
        assert_eq!(frames.len(), 1);
        assert_eq!(frames[0].state, QuantumState::zero(1).unwrap());
        assert!(frames[0].gate.is_none());
    }

    #[test]
    fn grover_one_iteration_finds_eleven() {
        let c = grover::circuit(1);
        assert_eq!(c.gates().len(), 12);
        let frames = c.run().unwrap();
        assert_eq!(frames.len(), 13);
        let p = frames.last().unwrap().state.probabilities();
        for (x, e) in p.iter().zip([0.0, 0.0, 0.0, 1.0]) {
            assert!((x - e).abs() < 1e-9);
        }
    }

    #[test]
    fn grover_two_iterations_uniform() {
        let p = grover::circuit(2).final_state().unwrap().probabilities();
        for x in p {
            assert!((x - 0.25).abs() < 1e-9);
        }
    }

    #[test]
    fn oracle_flips_exactly_one_sign() {
        let frames = grover::circuit(1).run().unwrap();
        let after_oracle = &frames[3].state;
        let negatives: Vec<usize> = after_oracle
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.re < 0.0)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(negatives, vec![3]);
    }

    #[test]
    fn push_rejects_out_of_range_target() {
        let mut c = Circuit::new(1).unwrap();
        assert!(c.push(Gate::h(1)).is_err());
        assert!(c.push(Gate::cz()).is_err());
        assert!(Circuit::new(3).is_err());
    }
}
