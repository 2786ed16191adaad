//! Test-only reference implementations: random inputs and a dense
//! textbook matrix model written without the library's kernels.

#![allow(dead_code)]

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

use rand::Rng;
use venus_core::{Amplitude, Gate, GateKind, QuantumState};

pub type Dense = Vec<Vec<Amplitude>>;

fn c(re: f64, im: f64) -> Amplitude {
    Amplitude::new(re, im)
}

/// Uniform-ish random normalized state; `sparse` zeroes amplitudes at random
/// so degenerate layouts get exercised too.
pub fn random_state<R: Rng>(rng: &mut R, num_qubits: usize, sparse: bool) -> QuantumState {
    let dim = 1 << num_qubits;
    loop {
        let mut amps: Vec<Amplitude> = (0..dim)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        if sparse {
            for a in amps.iter_mut() {
                match rng.gen_range(0..6) {
                    0 => *a = c(0.0, 0.0),
                    1 => a.im = 0.0,
                    2 => a.re = 0.0,
                    _ => {}
                }
            }
        }
        let norm = amps
            .iter()
            .map(|a| a.re * a.re + a.im * a.im)
            .sum::<f64>()
            .sqrt();
        if norm < 1e-3 {
            continue;
        }
        let amps = amps.into_iter().map(|a| a / norm).collect();
        return QuantumState::new(amps).expect("normalized by construction");
    }
}

/// Probability by squaring components directly.
pub fn brute_probability(a: Amplitude) -> f64 {
    a.re * a.re + a.im * a.im
}

fn textbook(kind: GateKind, params: &[f64]) -> Dense {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let t = params.first().copied().unwrap_or(0.0);
    let (ch, sh) = ((t / 2.0).cos(), (t / 2.0).sin());
    let h = c(FRAC_1_SQRT_2, 0.0);
    let e = |phi: f64| c(phi.cos(), phi.sin());
    match kind {
        GateKind::I => vec![vec![l, o], vec![o, l]],
        GateKind::X => vec![vec![o, l], vec![l, o]],
        GateKind::Y => vec![vec![o, c(0.0, -1.0)], vec![c(0.0, 1.0), o]],
        GateKind::Z => vec![vec![l, o], vec![o, -l]],
        GateKind::H => vec![vec![h, h], vec![h, -h]],
        GateKind::S => vec![vec![l, o], vec![o, c(0.0, 1.0)]],
        GateKind::T => vec![vec![l, o], vec![o, e(FRAC_PI_4)]],
        GateKind::Rx => vec![vec![c(ch, 0.0), c(0.0, -sh)], vec![c(0.0, -sh), c(ch, 0.0)]],
        GateKind::Ry => vec![vec![c(ch, 0.0), c(-sh, 0.0)], vec![c(sh, 0.0), c(ch, 0.0)]],
        GateKind::Rz => vec![vec![e(-t / 2.0), o], vec![o, e(t / 2.0)]],
        GateKind::Phase => vec![vec![l, o], vec![o, e(t)]],
        // Controlled and exchange gates as permutations / sign flips of the basis.
        GateKind::Cnot => permutation(&[0, 1, 3, 2]),
        GateKind::Swap => permutation(&[0, 2, 1, 3]),
        GateKind::Cz => {
            let mut m = permutation(&[0, 1, 2, 3]);
            m[3][3] = -l;
            m
        }
    }
}

fn permutation(image: &[usize]) -> Dense {
    let n = image.len();
    let mut m = vec![vec![c(0.0, 0.0); n]; n];
    for (col, &row) in image.iter().enumerate() {
        m[row][col] = c(1.0, 0.0);
    }
    m
}

fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Full-register matrix; qubit 0 is the leftmost tensor factor.
pub fn dense_gate(gate: &Gate, num_qubits: usize) -> Dense {
    let local = textbook(gate.name, &gate.params);
    let id = textbook(GateKind::I, &[]);
    match (num_qubits, gate.targets.as_slice()) {
        (1, _) => local,
        (2, [0]) => kron(&local, &id),
        (2, [1]) => kron(&id, &local),
        (2, [0, 1]) => local,
        (2, [1, 0]) => {
            let swap = |i: usize| ((i & 1) << 1) | (i >> 1);
            (0..4)
                .map(|i| (0..4).map(|j| local[swap(i)][swap(j)]).collect())
                .collect()
        }
        other => panic!("unsupported placement {other:?}"),
    }
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn matvec(m: &Dense, v: &[Amplitude]) -> Vec<Amplitude> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn identity(dim: usize) -> Dense {
    permutation(&(0..dim).collect::<Vec<_>>())
}

pub fn random_gate<R: Rng>(rng: &mut R, num_qubits: usize) -> Gate {
    loop {
        let kind = GateKind::ALL[rng.gen_range(0..GateKind::ALL.len())];
        if kind.qubit_count() > num_qubits {
            continue;
        }
        let params: Vec<f64> = (0..kind.param_count())
            .map(|_| rng.gen_range(-2.0 * PI..2.0 * PI))
            .collect();
        let targets = if kind.qubit_count() == 2 {
            if rng.gen_bool(0.5) {
                vec![0, 1]
            } else {
                vec![1, 0]
            }
        } else {
            vec![rng.gen_range(0..num_qubits)]
        };
        return Gate::new(kind, params, targets).expect("valid by construction");
    }
}
