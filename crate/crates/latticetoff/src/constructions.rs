//! Named builders for the circuit library: the T-depth-2 Toffoli and the
//! AND / controlled-S building blocks it is assembled from, plus the
//! reference decompositions it is measured against.
//!
//! Every construction carries its expected cost metrics and the
//! equivalence check that defines it; the test suite refuses the library
//! unless each circuit passes its exact-unitary check and reproduces its
//! frozen metrics. Where a construction has an H-free diagonal region,
//! the builder also exposes that core together with the wire
//! initialization needed to extract its phase polynomial.

use crate::circuit::{metrics, Circuit, Gate, Metrics, QubitRole};
use crate::phasepoly::AffineParity;

/// The H-free diagonal part of a construction, ready for phase-polynomial
/// extraction: `init[w]` is wire `w`'s starting value as an affine
/// functional of the `n_vars` input variables.
#[derive(Debug, Clone)]
pub struct DiagonalCore {
    pub circuit: Circuit,
    pub init: Vec<AffineParity>,
    pub n_vars: usize,
}

/// How a construction is verified against its reference behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceSpec {
    /// Exactly CCX on all three qubits, no ancillae.
    ExactToffoli,
    /// CCX on the data qubits with every ancilla returned to |0⟩.
    ToffoliOnCleanAncillae,
    /// Controlled-S on (c1, c2) with the ancilla returned to |0⟩.
    CsOnCleanAncilla,
    /// |x1,x2⟩⊗|0⟩⊗|0…0⟩ ↦ |x1,x2⟩⊗|x1·x2⟩⊗|0…0⟩ exactly.
    AndMap,
    /// CCX up to a relative phase confined to the c1=c2=1 block.
    RelativePhaseToffoli,
    /// Every corrected measurement branch proportional to CCX, with the
    /// squared proportionality constants summing to 1.
    ToffoliChannel,
}

/// A circuit from the library: gate list, optional diagonal core, and the
/// frozen cost metrics it must reproduce.
#[derive(Debug, Clone)]
pub struct NamedConstruction {
    pub name: &'static str,
    pub description: &'static str,
    pub circuit: Circuit,
    pub core: Option<DiagonalCore>,
    pub expected: Metrics,
    pub check: EquivalenceSpec,
}

impl NamedConstruction {
    pub fn computed_metrics(&self) -> Metrics {
        metrics(&self.circuit)
    }

    /// Runs this construction's defining equivalence check against the
    /// exact simulator.
    pub fn verify(&self) -> Result<(), String> {
        use crate::ring::RingScalar;
        use crate::sim;
        let fail = |msg: &str| Err(format!("{}: {msg}", self.name));
        match self.check {
            EquivalenceSpec::ExactToffoli => {
                let u = sim::unitary_of(&self.circuit).map_err(|e| e.to_string())?;
                if u != sim::ccx_matrix() {
                    return fail("not exactly CCX");
                }
            }
            EquivalenceSpec::ToffoliOnCleanAncillae | EquivalenceSpec::CsOnCleanAncilla => {
                let target = if self.check == EquivalenceSpec::CsOnCleanAncilla {
                    sim::cs_matrix()
                } else {
                    sim::ccx_matrix()
                };
                let chk =
                    sim::equal_on_ancilla_zero(&self.circuit, &target, &self.circuit.ancillae())
                        .map_err(|e| e.to_string())?;
                if !chk.is_equal() {
                    return fail("not the target unitary on zeroed ancillae");
                }
            }
            EquivalenceSpec::AndMap => {
                let n = self.circuit.n_qubits();
                for x1 in 0..2usize {
                    for x2 in 0..2usize {
                        let input = x1 << (n - 1) | x2 << (n - 2);
                        let out = sim::run(&self.circuit, &sim::StateVector::basis(n, input))
                            .map_err(|e| e.to_string())?;
                        let expected = sim::StateVector::basis(n, input | (x1 & x2) << (n - 3));
                        if out != expected {
                            return fail("does not compute the logical AND");
                        }
                    }
                }
            }
            EquivalenceSpec::RelativePhaseToffoli => {
                let u = sim::unitary_of(&self.circuit).map_err(|e| e.to_string())?;
                for i in 0..8usize {
                    for j in 0..8usize {
                        let expected = if i < 6 || j < 6 {
                            // identity outside the c1=c2=1 block
                            if i == j {
                                RingScalar::one()
                            } else {
                                RingScalar::zero()
                            }
                        } else if i == j {
                            RingScalar::zero()
                        } else {
                            // |110⟩ ↔ |111⟩ with a unimodular relative phase
                            if u[(i, j)].norm_sqr() != RingScalar::one() {
                                return fail("11-block entry is not a pure phase");
                            }
                            continue;
                        };
                        if u[(i, j)] != expected {
                            return fail("relative phase leaks outside the 11 block");
                        }
                    }
                }
            }
            EquivalenceSpec::ToffoliChannel => {
                let ccx = sim::ccx_matrix();
                let n = self.circuit.n_qubits();
                let mut lambdas: [Option<RingScalar>; 2] = [None, None];
                for x in 0..8usize {
                    let input = sim::StateVector::basis(n, x << (n - 3));
                    let branches = sim::run_with_measurement(&self.circuit, &input)
                        .map_err(|e| e.to_string())?;
                    for br in &branches {
                        let b = br.outcomes[0] as usize;
                        let y = (0..8).find(|y| !ccx[(*y, x)].is_zero()).unwrap();
                        let expect_idx = y << (n - 3) | b << (n - 4);
                        for (i, amp) in br.state.amplitudes().iter().enumerate() {
                            if i == expect_idx {
                                match lambdas[b] {
                                    None => lambdas[b] = Some(*amp),
                                    Some(l) if l == *amp => {}
                                    Some(_) => return fail("branch not proportional to CCX"),
                                }
                            } else if !amp.is_zero() {
                                return fail("branch has support outside the CCX image");
                            }
                        }
                    }
                }
                let total = lambdas
                    .iter()
                    .map(|l| l.ok_or_else(|| format!("{}: missing branch", self.name)))
                    .try_fold(RingScalar::zero(), |acc, l| {
                        Ok::<_, String>(acc + l?.norm_sqr())
                    })?;
                if total != RingScalar::one() {
                    return fail("branch weights do not sum to 1");
                }
            }
        }
        Ok(())
    }
}

/// Registry names, in presentation order.
pub const NAMES: [&str; 8] = [
    "paper-toffoli",
    "and",
    "cs",
    "rccx",
    "toffoli-7t",
    "selinger",
    "toffoli-2and",
    "toffoli-meas",
];

pub fn by_name(name: &str) -> Option<NamedConstruction> {
    match name {
        "paper-toffoli" => Some(paper_toffoli()),
        "and" => Some(and_tdepth1()),
        "cs" => Some(cs_gadget()),
        "rccx" => Some(margolus_rccx()),
        "toffoli-7t" => Some(standard_toffoli_7t()),
        "selinger" => Some(selinger_tdepth1_toffoli()),
        "toffoli-2and" => Some(toffoli_via_two_ands()),
        "toffoli-meas" => Some(toffoli_via_and_measurement()),
        _ => None,
    }
}

pub fn registry() -> Vec<NamedConstruction> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

fn toffoli_roles() -> Vec<QubitRole> {
    vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Target,
    ]
}

fn six_wire_roles() -> Vec<QubitRole> {
    vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Target,
        QubitRole::Ancilla(1),
        QubitRole::Ancilla(2),
        QubitRole::Ancilla(3),
    ]
}

/// Drops every gate the predicate matches, keeping order.
fn strip(c: &Circuit, drop: impl Fn(&Gate) -> bool) -> Circuit {
    Circuit::from_gates(
        c.roles().to_vec(),
        c.gates().iter().filter(|g| !drop(g)).cloned().collect(),
        c.n_cbits(),
    )
}

/// The T-depth-2, SWAP-free Toffoli over six wires (c1, c2, t, a1, a2, a3).
///
/// Structure: the fan-out CNOT ladder loads x1, x2 and x1⊕x2 onto the
/// ancillae, the target fan-out turns them into the y-offset parities,
/// one T-layer realizes the four-term AND polynomial, and a second
/// T-layer supplies the controlled-S terms: T(c1), T(a2), T†(a3) on the
/// wires then holding x1, x2 and x1⊕x2. Together the two layers
/// produce the full CCZ polynomial, so no S correction is needed and the
/// ancillae uncompute to |0⟩. Each wire interacts with at most three
/// others, which is what lets the whole block sit on a 3×2 grid patch.
pub fn paper_toffoli() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    const A1: usize = 3;
    const A2: usize = 4;
    const A3: usize = 5;
    let circuit = Circuit::with_roles(six_wire_roles())
        .h(T)
        .mcx(C1, &[A1, A3])
        .mcx(C2, &[A2, A3])
        .mcx(T, &[A1, A2, A3])
        .t(T)
        .tdg(A1)
        .tdg(A2)
        .t(A3)
        .mcx(T, &[A1, A2, A3])
        .h(T)
        .t(C1)
        .t(A2)
        .tdg(A3)
        .mcx(C2, &[A2, A3])
        .mcx(C1, &[A1, A3]);
    let core = strip(&circuit, |g| matches!(g, Gate::H(_)));
    NamedConstruction {
        name: "paper-toffoli",
        description: "T-depth-2 Toffoli, six multi-target CNOT steps, SWAP-free on a 3x2 grid",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(3, 6),
            n_vars: 3,
        }),
        expected: Metrics {
            depth_multi: 8,
            depth_serial: 16,
            t_count: 7,
            t_depth: 2,
            cnot_steps: 6,
            swap_count: 0,
            ancilla_count: 3,
        },
        check: EquivalenceSpec::ToffoliOnCleanAncillae,
    }
}

/// The T-depth-1 logical AND over six wires: writes x1·x2 onto the target
/// wire (which must start in |0⟩), total depth seven. The H and S on the
/// target run in parallel with the neighbouring uncompute CNOTs. The S
/// cancels the −i the four-term phase core leaves on the x1=x2=1 branch.
pub fn and_tdepth1() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    const A1: usize = 3;
    const A2: usize = 4;
    const A3: usize = 5;
    let circuit = Circuit::with_roles(six_wire_roles())
        .h(T)
        .mcx(C1, &[A1, A3])
        .mcx(C2, &[A2, A3])
        .mcx(T, &[A1, A2, A3])
        .t(T)
        .tdg(A1)
        .tdg(A2)
        .t(A3)
        .mcx(T, &[A1, A2, A3])
        .h(T)
        .mcx(C1, &[A1, A3])
        .s(T)
        .mcx(C2, &[A2, A3]);
    let core = strip(&circuit, |g| matches!(g, Gate::H(_) | Gate::S(_)));
    NamedConstruction {
        name: "and",
        description: "logical AND with three ancillae, T-depth 1, total depth 7",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(3, 6),
            n_vars: 3,
        }),
        expected: Metrics {
            depth_multi: 7,
            depth_serial: 15,
            t_count: 4,
            t_depth: 1,
            cnot_steps: 6,
            swap_count: 0,
            ancilla_count: 3,
        },
        check: EquivalenceSpec::AndMap,
    }
}

/// Controlled-S on (c1, c2) with one parity ancilla and T-depth 1:
/// compute x1⊕x2 onto the ancilla, apply T(c1), T(c2), T†(a), uncompute.
/// When a wire already holds the parity, the compute/uncompute CNOT pairs
/// can be dropped and only the T-layer remains.
pub fn cs_gadget() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const A: usize = 2;
    let circuit = Circuit::with_roles(vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Ancilla(1),
    ])
    .cnot(C1, A)
    .cnot(C2, A)
    .t(C1)
    .t(C2)
    .tdg(A)
    .cnot(C2, A)
    .cnot(C1, A);
    let core = circuit.clone();
    NamedConstruction {
        name: "cs",
        description: "controlled-S with one ancilla, T-depth 1",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(2, 3),
            n_vars: 2,
        }),
        expected: Metrics {
            depth_multi: 5,
            depth_serial: 5,
            t_count: 3,
            t_depth: 1,
            cnot_steps: 4,
            swap_count: 0,
            ancilla_count: 1,
        },
        check: EquivalenceSpec::CsOnCleanAncilla,
    }
}

/// The four-T relative-phase Toffoli (Margolus-style AND core on three
/// wires, no ancillae). Acts as CCX up to a phase confined to the
/// c1=c2=1 block; composing it with a controlled-S on (c1, c2) gives the
/// exact Toffoli.
pub fn margolus_rccx() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    let circuit = Circuit::with_roles(toffoli_roles())
        .h(T)
        .t(T)
        .cnot(C2, T)
        .tdg(T)
        .cnot(C1, T)
        .t(T)
        .cnot(C2, T)
        .tdg(T)
        .cnot(C1, T)
        .h(T);
    let core = strip(&circuit, |g| matches!(g, Gate::H(_)));
    NamedConstruction {
        name: "rccx",
        description: "relative-phase Toffoli, four T gates, four-term phase polynomial",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(3, 3),
            n_vars: 3,
        }),
        expected: Metrics {
            depth_multi: 10,
            depth_serial: 10,
            t_count: 4,
            t_depth: 4,
            cnot_steps: 4,
            swap_count: 0,
            ancilla_count: 0,
        },
        check: EquivalenceSpec::RelativePhaseToffoli,
    }
}

/// The textbook seven-T, six-CNOT, ancilla-free Toffoli. Its interaction
/// graph is the triangle on (c1, c2, t), which no square lattice
/// contains. This is the baseline that motivates SWAP-free alternatives.
pub fn standard_toffoli_7t() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    let circuit = Circuit::with_roles(toffoli_roles())
        .h(T)
        .cnot(C2, T)
        .tdg(T)
        .cnot(C1, T)
        .t(T)
        .cnot(C2, T)
        .tdg(T)
        .cnot(C1, T)
        .t(C2)
        .t(T)
        .h(T)
        .cnot(C1, C2)
        .t(C1)
        .tdg(C2)
        .cnot(C1, C2);
    let core = strip(&circuit, |g| matches!(g, Gate::H(_)));
    NamedConstruction {
        name: "toffoli-7t",
        description: "textbook Toffoli: 7 T gates, 6 CNOTs, no ancillae, triangle connectivity",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(3, 3),
            n_vars: 3,
        }),
        expected: Metrics {
            depth_multi: 11,
            depth_serial: 11,
            t_count: 7,
            t_depth: 4,
            cnot_steps: 6,
            swap_count: 0,
            ancilla_count: 0,
        },
        check: EquivalenceSpec::ExactToffoli,
    }
}

/// T-depth-1 Toffoli with four ancillae: a CNOT cascade places all seven
/// parities of (x1, x2, y) on their own wires, a single layer of seven
/// T/T† gates realizes the CCZ polynomial, and the cascade uncomputes.
/// Reusing the x1⊕x2⊕y wire to derive the two-term parities keeps the
/// CNOT count at eight but makes that ancilla interact with four other
/// wires, too dense for a square lattice tile.
pub fn selinger_tdepth1_toffoli() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    const A1: usize = 3; // x1⊕x2
    const A2: usize = 4; // x1⊕y
    const A3: usize = 5; // x2⊕y
    const A4: usize = 6; // x1⊕x2⊕y
    let circuit = Circuit::with_roles(vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Target,
        QubitRole::Ancilla(1),
        QubitRole::Ancilla(2),
        QubitRole::Ancilla(3),
        QubitRole::Ancilla(4),
    ])
    .h(T)
    .cnot(C1, A1)
    .cnot(C2, A1)
    .cnot(T, A4)
    .cnot(A1, A4)
    .cnot(C2, A2)
    .cnot(A4, A2)
    .cnot(C1, A3)
    .cnot(A4, A3)
    .t(C1)
    .t(C2)
    .t(T)
    .tdg(A1)
    .tdg(A2)
    .tdg(A3)
    .t(A4)
    .cnot(A4, A3)
    .cnot(C1, A3)
    .cnot(A4, A2)
    .cnot(C2, A2)
    .cnot(A1, A4)
    .cnot(T, A4)
    .cnot(C2, A1)
    .cnot(C1, A1)
    .h(T);
    let core = strip(&circuit, |g| matches!(g, Gate::H(_)));
    NamedConstruction {
        name: "selinger",
        description: "T-depth-1 Toffoli with four ancillae and degree-4 connectivity",
        circuit,
        core: Some(DiagonalCore {
            circuit: core,
            init: crate::phasepoly::vars_then_zeros(3, 7),
            n_vars: 3,
        }),
        expected: Metrics {
            depth_multi: 11,
            depth_serial: 11,
            t_count: 7,
            t_depth: 1,
            cnot_steps: 10,
            swap_count: 0,
            ancilla_count: 4,
        },
        check: EquivalenceSpec::ToffoliOnCleanAncillae,
    }
}

/// Map from the AND circuit's own wires onto a host where the AND output
/// lands on host wire `out` and the three internal ancillae on `anc`.
fn and_wire_map(out: usize, anc: [usize; 3]) -> Vec<usize> {
    vec![0, 1, out, anc[0], anc[1], anc[2]]
}

/// Exact Toffoli from two AND gates: compute x1·x2 onto a fresh ancilla,
/// CNOT it into the target, then run the inverse AND to clean up.
pub fn toffoli_via_two_ands() -> NamedConstruction {
    const T: usize = 2;
    const G: usize = 3; // the AND output
    let and = and_tdepth1().circuit;
    let map = and_wire_map(G, [4, 5, 6]);
    let circuit = Circuit::with_roles(vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Target,
        QubitRole::Ancilla(1),
        QubitRole::Ancilla(2),
        QubitRole::Ancilla(3),
        QubitRole::Ancilla(4),
    ])
    .append_mapped(&and, &map)
    .cnot(G, T)
    .append_mapped(&and.inverse().expect("AND has no measurements"), &map);
    NamedConstruction {
        name: "toffoli-2and",
        description: "Toffoli from an AND, a CNOT, and the inverse AND",
        circuit,
        core: None,
        expected: Metrics {
            depth_multi: 15,
            depth_serial: 31,
            t_count: 8,
            t_depth: 2,
            cnot_steps: 12,
            swap_count: 0,
            ancilla_count: 4,
        },
        check: EquivalenceSpec::ToffoliOnCleanAncillae,
    }
}

/// Toffoli from a single AND plus measurement-based uncomputation:
/// compute x1·x2 onto a fresh ancilla, CNOT it into the target, then
/// measure the ancilla in the X basis (here: H then a Z measurement) and
/// apply CZ(c1, c2) when the outcome is 1.
pub fn toffoli_via_and_measurement() -> NamedConstruction {
    const C1: usize = 0;
    const C2: usize = 1;
    const T: usize = 2;
    const G: usize = 3;
    let and = and_tdepth1().circuit;
    let map = and_wire_map(G, [4, 5, 6]);
    let mut circuit = Circuit::with_roles(vec![
        QubitRole::Control(1),
        QubitRole::Control(2),
        QubitRole::Target,
        QubitRole::Ancilla(1),
        QubitRole::Ancilla(2),
        QubitRole::Ancilla(3),
        QubitRole::Ancilla(4),
    ]);
    let outcome = circuit.alloc_cbit();
    let circuit = circuit
        .append_mapped(&and, &map)
        .cnot(G, T)
        .h(G)
        .measure_z(G, outcome)
        .when(outcome, Gate::Cz(C1, C2));
    NamedConstruction {
        name: "toffoli-meas",
        description: "Toffoli from one AND with measurement-based uncomputation",
        circuit,
        core: None,
        expected: Metrics {
            depth_multi: 11,
            depth_serial: 19,
            t_count: 4,
            t_depth: 1,
            cnot_steps: 7,
            swap_count: 0,
            ancilla_count: 4,
        },
        check: EquivalenceSpec::ToffoliChannel,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete_and_consistent() {
        let all = registry();
        assert_eq!(all.len(), NAMES.len());
        for (c, name) in all.iter().zip(NAMES) {
            assert_eq!(c.name, name);
        }
        assert!(by_name("nosuch").is_none());
    }

    #[test]
    fn paper_toffoli_has_the_headline_metrics() {
        let c = paper_toffoli();
        let m = c.computed_metrics();
        assert_eq!(m, c.expected);
        assert_eq!(m.t_count, 7);
        assert_eq!(m.t_depth, 2);
        assert_eq!(m.depth_multi, 8);
        assert_eq!(m.cnot_steps, 6);
        assert_eq!(m.ancilla_count, 3);
    }

    #[test]
    fn and_has_the_expected_metrics() {
        let c = and_tdepth1();
        let m = c.computed_metrics();
        assert_eq!(m, c.expected);
        assert_eq!((m.t_count, m.t_depth, m.depth_multi), (4, 1, 7));
    }

    #[test]
    fn every_expected_metrics_block_matches_computation() {
        for c in registry() {
            assert_eq!(
                c.computed_metrics(),
                c.expected,
                "metrics drift in {}",
                c.name
            );
        }
    }

    #[test]
    fn every_construction_passes_its_equivalence_check() {
        for c in registry() {
            c.verify().unwrap();
        }
    }

    #[test]
    fn paper_toffoli_interaction_edges() {
        let c = paper_toffoli().circuit;
        let g = crate::circuit::interaction_graph(&c);
        // (c1,a1) (c1,a3) (c2,a2) (c2,a3) (t,a1) (t,a2) (t,a3)
        let expected = [(0, 3), (0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
        assert_eq!(g.degree(2), 3); // t
        assert_eq!(g.degree(5), 3); // a3
    }

    #[test]
    fn rccx_relative_phase_is_minus_i_on_the_11_block() {
        let u = crate::sim::unitary_of(&margolus_rccx().circuit).unwrap();
        let minus_i = crate::ring::RingScalar::omega_pow(6);
        assert_eq!(u[(7, 6)], minus_i);
        assert_eq!(u[(6, 7)], minus_i);
        assert_eq!(u[(6, 6)], crate::ring::RingScalar::zero());
    }

    #[test]
    fn rccx_composed_with_cs_is_exactly_ccx() {
        let rccx = crate::sim::unitary_of(&margolus_rccx().circuit).unwrap();
        let cs_on_controls = crate::sim::embed_on_wires(&crate::sim::cs_matrix(), &[0, 1], 3);
        let prod = rccx.mat_mul(&cs_on_controls).unwrap();
        assert_eq!(prod, crate::sim::ccx_matrix());
        // the two factors commute, so the other order works as well
        let prod = cs_on_controls.mat_mul(&rccx).unwrap();
        assert_eq!(prod, crate::sim::ccx_matrix());
    }

    #[test]
    fn inverse_and_gives_the_dagger_unitary() {
        let and = and_tdepth1().circuit;
        let u = crate::sim::unitary_of(&and).unwrap();
        let inv = crate::sim::unitary_of(&and.inverse().unwrap()).unwrap();
        assert_eq!(inv, u.mat_dagger());
    }

    #[test]
    fn ancillae_are_only_ever_cnot_targets() {
        // On the grid layout the ancilla wires are always fan-out targets,
        // never controls; the data wires are always controls.
        let c = paper_toffoli().circuit;
        for g in c.gates() {
            if let Gate::MultiCnot { control, targets } = g {
                assert!(!c.roles()[*control].is_ancilla());
                for t in targets {
                    assert!(c.roles()[*t].is_ancilla());
                }
            }
        }
    }
}
