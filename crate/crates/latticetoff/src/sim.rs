//! Exact unitary and statevector simulation over [`RingScalar`].
//!
//! This is the oracle every circuit claim in the library is checked
//! against: amplitudes never leave `ℤ[ω]/√2^k`, so equivalence checks are
//! bit-exact and measurement gadgets are verified by enumerating both
//! outcome branches instead of sampling.
//!
//! Basis convention (project-wide): qubit 0 is the most significant bit
//! of the basis index, so |q0 q1 … q_{n−1}⟩ has index Σ q_i · 2^{n−1−i}.

use thiserror::Error;

use crate::circuit::{Circuit, Gate};
use crate::ring::{RingScalar, UnitaryMatrix};

/// Practical qubit cap for building full 2^n × 2^n unitaries.
pub const MAX_UNITARY_QUBITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("circuit contains a measurement; build branches with run_with_measurement instead")]
    MeasurementInUnitary,
    #[error("circuit has {0} qubits, above the {MAX_UNITARY_QUBITS}-qubit unitary bound")]
    TooManyQubits(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ancilla set does not match the circuit/target split: {0}")]
    AncillaMismatch(String),
    #[error("measurement on qubit {0}, which is not an ancilla")]
    MeasureNonAncilla(usize),
    #[error("classical bit {0} referenced before any measurement wrote it")]
    BitBeforeMeasure(usize),
    #[error("state has {0} amplitudes, expected {1}")]
    BadStateLength(usize, usize),
}

/// Exact 2^n-amplitude state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    n_qubits: usize,
    amps: Vec<RingScalar>,
}

impl StateVector {
    /// |basis⟩ for a basis index under the project basis convention.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amps = vec![RingScalar::zero(); 1 << n_qubits];
        amps[index] = RingScalar::one();
        StateVector { n_qubits, amps }
    }

    pub fn from_amplitudes(n_qubits: usize, amps: Vec<RingScalar>) -> Result<Self, SimError> {
        if amps.len() != 1 << n_qubits {
            return Err(SimError::BadStateLength(amps.len(), 1 << n_qubits));
        }
        Ok(StateVector { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[RingScalar] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> RingScalar {
        self.amps[index]
    }

    /// Σ|amp|², exact (a real, non-negative ring element).
    pub fn squared_norm(&self) -> RingScalar {
        self.amps
            .iter()
            .fold(RingScalar::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(|a| a.is_zero())
    }

    fn bit_mask(&self, qubit: usize) -> usize {
        1 << (self.n_qubits - 1 - qubit)
    }

    /// Applies one unitary gate in place; measurements are rejected.
    pub fn apply(&mut self, gate: &Gate) -> Result<(), SimError> {
        let dim = self.amps.len();
        match gate {
            Gate::H(q) => {
                let mask = self.bit_mask(*q);
                let inv = RingScalar::sqrt2_pow(-1);
                for i in 0..dim {
                    if i & mask == 0 {
                        let lo = self.amps[i];
                        let hi = self.amps[i | mask];
                        self.amps[i] = (lo + hi) * inv;
                        self.amps[i | mask] = (lo - hi) * inv;
                    }
                }
            }
            Gate::X(q) => {
                let mask = self.bit_mask(*q);
                for i in 0..dim {
                    if i & mask == 0 {
                        self.amps.swap(i, i | mask);
                    }
                }
            }
            Gate::Z(q) => self.phase_if_set(*q, RingScalar::omega_pow(4)),
            Gate::S(q) => self.phase_if_set(*q, RingScalar::omega_pow(2)),
            Gate::Sdg(q) => self.phase_if_set(*q, RingScalar::omega_pow(6)),
            Gate::T(q) => self.phase_if_set(*q, RingScalar::omega_pow(1)),
            Gate::Tdg(q) => self.phase_if_set(*q, RingScalar::omega_pow(7)),
            Gate::Cz(a, b) => {
                let m = self.bit_mask(*a) | self.bit_mask(*b);
                let minus = RingScalar::omega_pow(4);
                for i in 0..dim {
                    if i & m == m {
                        self.amps[i] = self.amps[i] * minus;
                    }
                }
            }
            Gate::Swap(a, b) => {
                let ma = self.bit_mask(*a);
                let mb = self.bit_mask(*b);
                for i in 0..dim {
                    if i & ma != 0 && i & mb == 0 {
                        self.amps.swap(i, i ^ ma ^ mb);
                    }
                }
            }
            Gate::MultiCnot { control, targets } => {
                let cmask = self.bit_mask(*control);
                let tmask: usize = targets.iter().map(|t| self.bit_mask(*t)).sum();
                for i in 0..dim {
                    let j = i ^ tmask;
                    if i & cmask != 0 && i < j {
                        self.amps.swap(i, j);
                    }
                }
            }
            Gate::MeasureX { .. } | Gate::MeasureZ { .. } | Gate::Classical { .. } => {
                return Err(SimError::MeasurementInUnitary);
            }
        }
        Ok(())
    }

    fn phase_if_set(&mut self, qubit: usize, phase: RingScalar) {
        let mask = self.bit_mask(qubit);
        for i in 0..self.amps.len() {
            if i & mask != 0 {
                self.amps[i] = self.amps[i] * phase;
            }
        }
    }

    /// Projects onto qubit = outcome in the Z basis (unnormalized).
    fn project_z(&self, qubit: usize, outcome: bool) -> StateVector {
        let mask = self.bit_mask(qubit);
        let mut amps = self.amps.clone();
        for (i, a) in amps.iter_mut().enumerate() {
            if (i & mask != 0) != outcome {
                *a = RingScalar::zero();
            }
        }
        StateVector {
            n_qubits: self.n_qubits,
            amps,
        }
    }

    /// Projects onto |±⟩ of a qubit in the X basis (unnormalized):
    /// (I ± X_q)/2 applied to the state.
    fn project_x(&self, qubit: usize, outcome: bool) -> StateVector {
        let mask = self.bit_mask(qubit);
        let half = RingScalar::sqrt2_pow(-2);
        let sign = if outcome {
            RingScalar::omega_pow(4)
        } else {
            RingScalar::one()
        };
        let mut amps = vec![RingScalar::zero(); self.amps.len()];
        for (i, out) in amps.iter_mut().enumerate() {
            *out = (self.amps[i] + sign * self.amps[i ^ mask]) * half;
        }
        StateVector {
            n_qubits: self.n_qubits,
            amps,
        }
    }
}

/// The exact unitary of a measurement-free circuit, built column by
/// column by running each basis state through the gate list.
pub fn unitary_of(c: &Circuit) -> Result<UnitaryMatrix, SimError> {
    if c.has_measurement()
        || c.gates()
            .iter()
            .any(|g| matches!(g, Gate::Classical { .. }))
    {
        return Err(SimError::MeasurementInUnitary);
    }
    if c.n_qubits() > MAX_UNITARY_QUBITS {
        return Err(SimError::TooManyQubits(c.n_qubits()));
    }
    let dim = 1 << c.n_qubits();
    let mut m = UnitaryMatrix::zeros(dim);
    for col in 0..dim {
        let mut state = StateVector::basis(c.n_qubits(), col);
        for g in c.gates() {
            state.apply(g)?;
        }
        m.set_column(col, state.amplitudes());
    }
    Ok(m)
}

/// Runs a measurement-free circuit on an input state.
pub fn run(c: &Circuit, input: &StateVector) -> Result<StateVector, SimError> {
    if input.n_qubits() != c.n_qubits() {
        return Err(SimError::DimensionMismatch(input.n_qubits(), c.n_qubits()));
    }
    let mut state = input.clone();
    for g in c.gates() {
        state.apply(g)?;
    }
    Ok(state)
}

pub fn equal_exact(a: &UnitaryMatrix, b: &UnitaryMatrix) -> Result<bool, SimError> {
    if a.dim() != b.dim() {
        return Err(SimError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a == b)
}

/// Returns `k ∈ 0..8` with `a = ω^k · b` if such a phase exists.
/// Clifford+T circuits only ever differ by eighth roots of unity.
pub fn equal_up_to_global_phase(
    a: &UnitaryMatrix,
    b: &UnitaryMatrix,
) -> Result<Option<u8>, SimError> {
    if a.dim() != b.dim() {
        return Err(SimError::DimensionMismatch(a.dim(), b.dim()));
    }
    for k in 0..8 {
        if *a == b.scale(RingScalar::omega_pow(k)) {
            return Ok(Some(k as u8));
        }
    }
    Ok(None)
}

/// The outcome of one ancilla-clean equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AncillaZeroCheck {
    Equal,
    /// First failing data basis state, with the full output of the circuit
    /// and the expected output on that input.
    Counterexample {
        data_index: usize,
        got: StateVector,
        expected: StateVector,
    },
}

impl AncillaZeroCheck {
    pub fn is_equal(&self) -> bool {
        matches!(self, AncillaZeroCheck::Equal)
    }
}

/// Checks that the circuit acts as `target ⊗ |0…0⟩⟨0…0|` on the ancillae:
/// for every data basis state |x⟩, C·(|x⟩⊗|0⟩) must equal (T|x⟩)⊗|0⟩
/// exactly, with ancillae returned clean and no relative phase anywhere.
pub fn equal_on_ancilla_zero(
    c: &Circuit,
    target: &UnitaryMatrix,
    ancillae: &[usize],
) -> Result<AncillaZeroCheck, SimError> {
    let n = c.n_qubits();
    let data: Vec<usize> = (0..n).filter(|q| !ancillae.contains(q)).collect();
    if target.dim() != 1 << data.len() {
        return Err(SimError::AncillaMismatch(format!(
            "target is {}-dimensional but the circuit has {} data qubits",
            target.dim(),
            data.len()
        )));
    }
    if ancillae.iter().any(|a| *a >= n) {
        return Err(SimError::AncillaMismatch(
            "ancilla index out of range".into(),
        ));
    }
    for x in 0..1usize << data.len() {
        let input_index = scatter_data_bits(x, &data, n);
        let mut state = StateVector::basis(n, input_index);
        for g in c.gates() {
            state.apply(g)?;
        }
        // Expected: Σ_y target[y,x] |y⟩ ⊗ |0…0⟩
        let mut expected = vec![RingScalar::zero(); 1 << n];
        for y in 0..target.dim() {
            expected[scatter_data_bits(y, &data, n)] = target[(y, x)];
        }
        let expected = StateVector {
            n_qubits: n,
            amps: expected,
        };
        if state != expected {
            return Ok(AncillaZeroCheck::Counterexample {
                data_index: x,
                got: state,
                expected,
            });
        }
    }
    Ok(AncillaZeroCheck::Equal)
}

/// Places the bits of a data-subspace index onto the given qubits of an
/// n-qubit basis index (all other qubits 0). Data bit order follows the
/// qubit list, most significant first.
pub fn scatter_data_bits(x: usize, data_qubits: &[usize], n: usize) -> usize {
    let d = data_qubits.len();
    let mut idx = 0usize;
    for (pos, q) in data_qubits.iter().enumerate() {
        if x >> (d - 1 - pos) & 1 == 1 {
            idx |= 1 << (n - 1 - q);
        }
    }
    idx
}

/// One deterministic outcome branch of a circuit with measurements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasurementBranch {
    /// Measured bits in program order.
    pub outcomes: Vec<bool>,
    /// Unnormalized post-circuit state, classical corrections applied.
    pub state: StateVector,
}

impl MeasurementBranch {
    pub fn squared_norm(&self) -> RingScalar {
        self.state.squared_norm()
    }
}

/// Runs a circuit with measurements by exhaustively enumerating outcome
/// branches: no randomness, every branch exact. Zero-amplitude branches
/// are dropped. Measurements are only allowed on ancilla-role qubits.
pub fn run_with_measurement(
    c: &Circuit,
    input: &StateVector,
) -> Result<Vec<MeasurementBranch>, SimError> {
    if input.n_qubits() != c.n_qubits() {
        return Err(SimError::DimensionMismatch(input.n_qubits(), c.n_qubits()));
    }
    struct Pending {
        state: StateVector,
        outcomes: Vec<bool>,
        cbits: Vec<Option<bool>>,
    }
    let mut branches = vec![Pending {
        state: input.clone(),
        outcomes: Vec::new(),
        cbits: vec![None; c.n_cbits()],
    }];
    for g in c.gates() {
        match g {
            Gate::MeasureZ { qubit, cbit } | Gate::MeasureX { qubit, cbit } => {
                if !c.roles()[*qubit].is_ancilla() {
                    return Err(SimError::MeasureNonAncilla(*qubit));
                }
                let in_x_basis = matches!(g, Gate::MeasureX { .. });
                let mut next = Vec::new();
                for b in branches {
                    for outcome in [false, true] {
                        let projected = if in_x_basis {
                            b.state.project_x(*qubit, outcome)
                        } else {
                            b.state.project_z(*qubit, outcome)
                        };
                        if projected.is_zero() {
                            continue;
                        }
                        let mut outcomes = b.outcomes.clone();
                        outcomes.push(outcome);
                        let mut cbits = b.cbits.clone();
                        cbits[*cbit] = Some(outcome);
                        next.push(Pending {
                            state: projected,
                            outcomes,
                            cbits,
                        });
                    }
                }
                branches = next;
            }
            Gate::Classical { bit, gate } => {
                for b in &mut branches {
                    match b.cbits[*bit] {
                        None => return Err(SimError::BitBeforeMeasure(*bit)),
                        Some(true) => b.state.apply(gate)?,
                        Some(false) => {}
                    }
                }
            }
            unitary => {
                for b in &mut branches {
                    b.state.apply(unitary)?;
                }
            }
        }
    }
    Ok(branches
        .into_iter()
        .map(|b| MeasurementBranch {
            outcomes: b.outcomes,
            state: b.state,
        })
        .collect())
}

/// Reference CCX on (control, control, target), built straight from the
/// truth table so circuit checks have an independent oracle.
pub fn ccx_matrix() -> UnitaryMatrix {
    let mut m = UnitaryMatrix::zeros(8);
    for x in 0..8usize {
        let y = if x & 0b110 == 0b110 { x ^ 1 } else { x };
        m[(y, x)] = RingScalar::one();
    }
    m
}

/// Reference controlled-S: diag(1, 1, 1, i).
pub fn cs_matrix() -> UnitaryMatrix {
    let mut m = UnitaryMatrix::identity(4);
    m[(3, 3)] = RingScalar::i();
    m
}

/// Reference controlled-Z: diag(1, 1, 1, −1).
pub fn cz_matrix() -> UnitaryMatrix {
    let mut m = UnitaryMatrix::identity(4);
    m[(3, 3)] = -RingScalar::one();
    m
}

/// Lifts an operator onto the given wires of an n-qubit system
/// (identity elsewhere). Wire order = operator qubit order.
pub fn embed_on_wires(u: &UnitaryMatrix, wires: &[usize], n: usize) -> UnitaryMatrix {
    assert_eq!(u.dim(), 1 << wires.len());
    let dim = 1 << n;
    let mut out = UnitaryMatrix::zeros(dim);
    let d = wires.len();
    for col in 0..dim {
        // read the data bits of this basis state
        let mut x = 0usize;
        for (pos, q) in wires.iter().enumerate() {
            if col >> (n - 1 - q) & 1 == 1 {
                x |= 1 << (d - 1 - pos);
            }
        }
        let rest = col & !scatter_data_bits((1 << d) - 1, wires, n);
        for y in 0..u.dim() {
            let v = u[(y, x)];
            if !v.is_zero() {
                out[(rest | scatter_data_bits(y, wires, n), col)] = v;
            }
        }
    }
    out
}

/// Permutation matrix for "the content of wire v moves to wire `perm[v]`".
pub fn wire_permutation_matrix(perm: &[usize], n: usize) -> UnitaryMatrix {
    assert_eq!(perm.len(), n);
    let dim = 1 << n;
    let mut out = UnitaryMatrix::zeros(dim);
    for col in 0..dim {
        let mut row = 0usize;
        for (v, dest) in perm.iter().enumerate() {
            if col >> (n - 1 - v) & 1 == 1 {
                row |= 1 << (n - 1 - dest);
            }
        }
        out[(row, col)] = RingScalar::one();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::QubitRole;

    #[test]
    fn hadamard_unitary() {
        let u = unitary_of(&Circuit::new(1).h(0)).unwrap();
        let inv = RingScalar::sqrt2_pow(-1);
        let expected = UnitaryMatrix::from_rows(&[vec![inv, inv], vec![inv, -inv]]);
        assert_eq!(u, expected);
    }

    #[test]
    fn t_unitary_is_diag_one_omega() {
        let u = unitary_of(&Circuit::new(1).t(0)).unwrap();
        assert_eq!(u[(0, 0)], RingScalar::one());
        assert_eq!(u[(1, 1)], RingScalar::omega_pow(1));
        assert_eq!(u[(0, 1)], RingScalar::zero());
    }

    #[test]
    fn t_tdg_is_identity() {
        let u = unitary_of(&Circuit::new(1).t(0).tdg(0)).unwrap();
        assert!(u.is_identity());
    }

    #[test]
    fn all_gate_matrices_are_unitary() {
        let gates: Vec<(usize, Gate)> = vec![
            (1, Gate::H(0)),
            (1, Gate::X(0)),
            (1, Gate::Z(0)),
            (1, Gate::S(0)),
            (1, Gate::Sdg(0)),
            (1, Gate::T(0)),
            (1, Gate::Tdg(0)),
            (2, Gate::Cz(0, 1)),
            (2, Gate::Swap(0, 1)),
            (
                2,
                Gate::MultiCnot {
                    control: 0,
                    targets: vec![1],
                },
            ),
            (
                3,
                Gate::MultiCnot {
                    control: 0,
                    targets: vec![1, 2],
                },
            ),
        ];
        for (n, g) in gates {
            let mut c = Circuit::new(n);
            c.push(g.clone());
            let u = unitary_of(&c).unwrap();
            assert!(
                u.mat_mul(&u.mat_dagger()).unwrap().is_identity(),
                "gate {g:?} is not unitary"
            );
        }
    }

    #[test]
    fn multi_cnot_expands_to_cnot_product() {
        let fanout = unitary_of(&Circuit::new(3).mcx(0, &[1, 2])).unwrap();
        let pairwise = unitary_of(&Circuit::new(3).cnot(0, 1).cnot(0, 2)).unwrap();
        assert_eq!(fanout, pairwise);
    }

    #[test]
    fn composition_matches_matrix_product() {
        let c1 = Circuit::new(2).h(0).cnot(0, 1);
        let c2 = Circuit::new(2).t(1).cz(0, 1);
        let mut both = c1.clone();
        for g in c2.gates() {
            both.push(g.clone());
        }
        let u1 = unitary_of(&c1).unwrap();
        let u2 = unitary_of(&c2).unwrap();
        assert_eq!(unitary_of(&both).unwrap(), u2.mat_mul(&u1).unwrap());
    }

    #[test]
    fn global_phase_detection() {
        let id = UnitaryMatrix::identity(4);
        let phased = id.scale(RingScalar::omega_pow(3));
        assert_eq!(equal_up_to_global_phase(&phased, &id).unwrap(), Some(3));
        assert_eq!(equal_up_to_global_phase(&id, &id).unwrap(), Some(0));
        let x = unitary_of(&Circuit::new(2).x(0)).unwrap();
        assert_eq!(equal_up_to_global_phase(&x, &id).unwrap(), None);
    }

    #[test]
    fn dirty_ancilla_is_detected() {
        // X on an ancilla can never pass an ancilla-zero identity check.
        let c = Circuit::with_roles(vec![QubitRole::Generic(0), QubitRole::Ancilla(1)]).x(1);
        let check = equal_on_ancilla_zero(&c, &UnitaryMatrix::identity(2), &[1]).unwrap();
        assert!(!check.is_equal());
        match check {
            AncillaZeroCheck::Counterexample { data_index, .. } => assert_eq!(data_index, 0),
            _ => unreachable!(),
        }
    }

    #[test]
    fn measure_zero_state_gives_single_branch() {
        let mut c = Circuit::with_roles(vec![QubitRole::Ancilla(1)]);
        let b = c.alloc_cbit();
        let c = c.measure_z(0, b);
        let branches = run_with_measurement(&c, &StateVector::basis(1, 0)).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].outcomes, vec![false]);
        assert_eq!(branches[0].squared_norm(), RingScalar::one());
    }

    #[test]
    fn measure_plus_state_gives_two_half_branches() {
        let mut c = Circuit::with_roles(vec![QubitRole::Ancilla(1)]);
        let b = c.alloc_cbit();
        let c = c.h(0).measure_z(0, b);
        let branches = run_with_measurement(&c, &StateVector::basis(1, 0)).unwrap();
        assert_eq!(branches.len(), 2);
        let half = RingScalar::sqrt2_pow(-2);
        let total = branches
            .iter()
            .fold(RingScalar::zero(), |acc, br| acc + br.squared_norm());
        assert_eq!(branches[0].squared_norm(), half);
        assert_eq!(branches[1].squared_norm(), half);
        assert_eq!(total, RingScalar::one());
    }

    #[test]
    fn measure_x_projects_onto_plus_minus() {
        // |0⟩ measured in X: both outcomes, each of norm 1/2.
        let mut c = Circuit::with_roles(vec![QubitRole::Ancilla(1)]);
        let b = c.alloc_cbit();
        let c = c.measure_x(0, b);
        let branches = run_with_measurement(&c, &StateVector::basis(1, 0)).unwrap();
        assert_eq!(branches.len(), 2);
        let total = branches
            .iter()
            .fold(RingScalar::zero(), |acc, br| acc + br.squared_norm());
        assert_eq!(total, RingScalar::one());
    }

    #[test]
    fn measurement_on_data_qubit_is_rejected() {
        let mut c = Circuit::new(1);
        let b = c.alloc_cbit();
        let c = c.measure_z(0, b);
        let err = run_with_measurement(&c, &StateVector::basis(1, 0)).unwrap_err();
        assert_eq!(err, SimError::MeasureNonAncilla(0));
    }

    #[test]
    fn classical_control_before_measurement_is_rejected() {
        let mut c = Circuit::with_roles(vec![QubitRole::Generic(0), QubitRole::Generic(1)]);
        let b = c.alloc_cbit();
        let c = c.when(b, Gate::Cz(0, 1));
        let err = run_with_measurement(&c, &StateVector::basis(2, 0)).unwrap_err();
        assert_eq!(err, SimError::BitBeforeMeasure(0));
    }

    #[test]
    fn unitary_of_rejects_measurement() {
        let mut c = Circuit::with_roles(vec![QubitRole::Ancilla(1)]);
        let b = c.alloc_cbit();
        let c = c.measure_z(0, b);
        assert_eq!(unitary_of(&c).unwrap_err(), SimError::MeasurementInUnitary);
    }

    #[test]
    fn ccx_matrix_truth_table() {
        let ccx = ccx_matrix();
        assert!(ccx.mat_mul(&ccx.mat_dagger()).unwrap().is_identity());
        // |110⟩ ↔ |111⟩, all else fixed
        assert_eq!(ccx[(7, 6)], RingScalar::one());
        assert_eq!(ccx[(6, 7)], RingScalar::one());
        assert_eq!(ccx[(5, 5)], RingScalar::one());
        assert_eq!(ccx[(6, 6)], RingScalar::zero());
    }

    #[test]
    fn embed_and_permutation_helpers() {
        // X embedded on wire 1 of 3
        let x = unitary_of(&Circuit::new(1).x(0)).unwrap();
        let lifted = embed_on_wires(&x, &[1], 3);
        let direct = unitary_of(&Circuit::new(3).x(1)).unwrap();
        assert_eq!(lifted, direct);

        // swapping wires 0 and 2 equals the SWAP gate unitary
        let p = wire_permutation_matrix(&[2, 1, 0], 3);
        let sw = unitary_of(&Circuit::new(3).swap(0, 2)).unwrap();
        assert_eq!(p, sw);
    }

    #[test]
    fn embed_two_qubit_operator_matches_circuit() {
        let cx = unitary_of(&Circuit::new(2).cnot(0, 1)).unwrap();
        // control on wire 2, target on wire 0
        let lifted = embed_on_wires(&cx, &[2, 0], 3);
        let direct = unitary_of(&Circuit::new(3).cnot(2, 0)).unwrap();
        assert_eq!(lifted, direct);
    }
}
