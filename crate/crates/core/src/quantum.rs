//! Dense statevector checks of the graph-state facts the combinatorics relies on.
//!
//! Qubit `i` is bit `i` of the basis index. Everything here is exponential in
//! `n` and capped at [`MAX_QUBITS`].

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf4::{Pauli, PauliString};
use crate::graph::LabelledGraph;

pub const MAX_QUBITS: usize = 10;
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.n, other.n);
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.n == other.n
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// Equality up to a global phase, fixed by the first amplitude of `self`
    /// with non-negligible magnitude.
    pub fn eq_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        if self.n != other.n {
            return false;
        }
        let Some(i) = self.amps.iter().position(|a| a.norm() > 1e-6) else {
            return other.amps.iter().all(|b| b.norm() <= tol);
        };
        let phase = other.amps[i] / self.amps[i];
        if (phase.norm() - 1.0).abs() > tol {
            return false;
        }
        self.amps
            .iter()
            .zip(&other.amps)
            .all(|(a, b)| (a * phase - b).norm() <= tol)
    }

    fn apply_single(&mut self, q: usize, m: [[Complex64; 2]; 2]) {
        let bit = 1usize << q;
        for x in 0..self.amps.len() {
            if x & bit == 0 {
                let (a0, a1) = (self.amps[x], self.amps[x | bit]);
                self.amps[x] = m[0][0] * a0 + m[0][1] * a1;
                self.amps[x | bit] = m[1][0] * a0 + m[1][1] * a1;
            }
        }
    }

    pub fn apply_pauli(&self, p: &PauliString) -> Result<StateVector> {
        if p.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        let mut out = self.clone();
        for (q, &letter) in p.0.iter().enumerate() {
            if letter != Pauli::I {
                out.apply_single(q, pauli_matrix(letter));
            }
        }
        Ok(out)
    }
}

pub fn pauli_matrix(p: Pauli) -> [[Complex64; 2]; 2] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match p {
        Pauli::I => [[l, o], [o, l]],
        Pauli::X => [[o, l], [l, o]],
        Pauli::Y => [[o, -i], [i, o]],
        Pauli::Z => [[l, o], [o, -l]],
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_QUBITS {
        Err(Error::CapExceeded {
            what: "statevector qubit count",
            cap: MAX_QUBITS as u64,
        })
    } else {
        Ok(())
    }
}

fn masks(g: &LabelledGraph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect()
}

/// Number of edges with both endpoints in the support of `x`, mod 2.
fn inside_parity(adj: &[u64], x: u64) -> bool {
    let twice: u32 = adj
        .iter()
        .enumerate()
        .filter(|(v, _)| x >> v & 1 == 1)
        .map(|(_, m)| (m & x).count_ones())
        .sum();
    (twice / 2) % 2 == 1
}

/// `|G> = prod_{uv in E} CZ_uv |+>^n`, via the closed form
/// `<x|G> = 2^(-n/2) (-1)^{#edges inside x}`.
pub fn graph_state(g: &LabelledGraph) -> Result<StateVector> {
    check_size(g.n())?;
    let n = g.n();
    let adj = masks(g);
    let scale = 0.5f64.powf(n as f64 / 2.0);
    let amps = (0..1u64 << n)
        .map(|x| {
            let sign = if inside_parity(&adj, x) { -1.0 } else { 1.0 };
            Complex64::new(sign * scale, 0.0)
        })
        .collect();
    Ok(StateVector { n, amps })
}

/// `g_v = X_v prod_{u in N(v)} Z_u` for every vertex.
pub fn stabilizer_generators(g: &LabelledGraph) -> Vec<PauliString> {
    (0..g.n())
        .map(|v| {
            let mut p = vec![Pauli::I; g.n()];
            p[v] = Pauli::X;
            for u in g.neighbors(v) {
                p[u] = Pauli::Z;
            }
            PauliString(p)
        })
        .collect()
}

/// True iff every string in `generators` fixes `|G>` with eigenvalue +1.
pub fn check_stabilizer_with(g: &LabelledGraph, generators: &[PauliString]) -> Result<bool> {
    let state = graph_state(g)?;
    for p in generators {
        if !state.apply_pauli(p)?.approx_eq(&state, TOLERANCE) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn check_stabilizer(g: &LabelledGraph) -> Result<bool> {
    check_stabilizer_with(g, &stabilizer_generators(g))
}

/// `U_v |G>` with `U_v = exp(-i pi/4 X_v) prod_{u in N(v)} exp(i pi/4 Z_u)`.
pub fn apply_lc_unitary(g: &LabelledGraph, v: usize) -> Result<StateVector> {
    graph_state(g)?.apply_lc(g, v)
}

impl StateVector {
    /// Applies `U_v` with the neighbourhood of `v` taken from `g`.
    pub fn apply_lc(&self, g: &LabelledGraph, v: usize) -> Result<StateVector> {
        g.check_vertex(v)?;
        if g.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: g.n(),
            });
        }
        let mut state = self.clone();
        let o = Complex64::new(0.0, 0.0);
        let (c, s) = (FRAC_1_SQRT_2, FRAC_1_SQRT_2);
        let rz = [[Complex64::new(c, s), o], [o, Complex64::new(c, -s)]];
        for u in g.neighbors(v) {
            state.apply_single(u, rz);
        }
        let d = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let off = Complex64::new(0.0, -FRAC_1_SQRT_2);
        state.apply_single(v, [[d, off], [off, d]]);
        Ok(state)
    }
}

/// `<G|G'>` computed directly and through `2^(-n) sum_x (-1)^{#edges of G Δ G' inside x}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Overlap {
    pub direct: Complex64,
    pub via_symmetric_difference: f64,
}

impl Overlap {
    pub fn routes_agree(&self, tol: f64) -> bool {
        (self.direct - Complex64::new(self.via_symmetric_difference, 0.0)).norm() <= tol
    }
}

pub fn overlap(g1: &LabelledGraph, g2: &LabelledGraph) -> Result<Overlap> {
    if g1.n() != g2.n() {
        return Err(Error::LengthMismatch {
            expected: g1.n(),
            found: g2.n(),
        });
    }
    check_size(g1.n())?;
    let direct = graph_state(g1)?.inner(&graph_state(g2)?);
    let n = g1.n();
    let diff: Vec<u64> = masks(g1)
        .iter()
        .zip(masks(g2))
        .map(|(a, b)| a ^ b)
        .collect();
    let signed: i64 = (0..1u64 << n)
        .map(|x| if inside_parity(&diff, x) { -1 } else { 1 })
        .sum();
    Ok(Overlap {
        direct,
        via_symmetric_difference: signed as f64 / (1u64 << n) as f64,
    })
}
