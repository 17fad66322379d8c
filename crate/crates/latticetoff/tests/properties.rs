//! Randomized invariants over small circuits: scheduling and inversion
//! never change a unitary, serial depth dominates the fan-out depth, the
//! interchange formats are faithful, and the router stays sound on
//! random placements. Seeded RNG, fully deterministic.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use latticetoff::arch::{route_greedy, CouplingGraph, Placement};
use latticetoff::circuit::{asap_schedule, metrics, Circuit, Gate};
use latticetoff::qasmio::{emit_json, emit_qasm, parse_json, parse_qasm};
use latticetoff::sim::{embed_on_wires, equal_exact, unitary_of, wire_permutation_matrix};

fn random_circuit(rng: &mut StdRng, n_qubits: usize, n_gates: usize) -> Circuit {
    let mut c = Circuit::new(n_qubits);
    for _ in 0..n_gates {
        let q = rng.gen_range(0..n_qubits);
        let gate = match rng.gen_range(0..10) {
            0 => Gate::H(q),
            1 => Gate::X(q),
            2 => Gate::Z(q),
            3 => Gate::S(q),
            4 => Gate::Sdg(q),
            5 => Gate::T(q),
            6 => Gate::Tdg(q),
            7 if n_qubits >= 2 => {
                let other = (q + 1 + rng.gen_range(0..n_qubits - 1)) % n_qubits;
                Gate::Cz(q, other)
            }
            8 if n_qubits >= 2 => {
                let other = (q + 1 + rng.gen_range(0..n_qubits - 1)) % n_qubits;
                Gate::Swap(q, other)
            }
            _ if n_qubits >= 2 => {
                let mut targets: Vec<usize> = (0..n_qubits).filter(|t| *t != q).collect();
                let keep = rng.gen_range(1..=targets.len().min(3));
                while targets.len() > keep {
                    let drop = rng.gen_range(0..targets.len());
                    targets.remove(drop);
                }
                targets.sort_unstable();
                Gate::MultiCnot {
                    control: q,
                    targets,
                }
            }
            _ => Gate::T(q),
        };
        c.push(gate);
    }
    c
}

#[test]
fn scheduling_preserves_unitaries_on_random_circuits() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..25);
        let c = random_circuit(&mut rng, n, len);
        let flat = asap_schedule(&c).flatten(c.roles().to_vec(), c.n_cbits());
        let u0 = unitary_of(&c).unwrap();
        let u1 = unitary_of(&flat).unwrap();
        assert!(equal_exact(&u0, &u1).unwrap());
    }
}

#[test]
fn inverse_circuit_gives_the_dagger_unitary() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..20);
        let c = random_circuit(&mut rng, n, len);
        let u = unitary_of(&c).unwrap();
        let inv = unitary_of(&c.inverse().unwrap()).unwrap();
        assert_eq!(inv, u.mat_dagger());
        assert!(u.mat_mul(&inv).unwrap().is_identity());
    }
}

#[test]
fn serial_depth_dominates_multi_depth() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let len = rng.gen_range(0..30);
        let c = random_circuit(&mut rng, n, len);
        let m = metrics(&c);
        assert!(m.depth_serial >= m.depth_multi);
        let fanout_free = c.gates().iter().all(|g| match g {
            Gate::MultiCnot { targets, .. } => targets.len() == 1,
            _ => true,
        });
        // the two depth views agree exactly when no CNOT fans out
        if fanout_free {
            assert_eq!(m.depth_serial, m.depth_multi);
        } else {
            assert!(m.depth_serial > m.depth_multi);
        }
        assert!(m.t_depth <= m.depth_multi);
        assert!(m.cnot_steps <= m.depth_multi);
    }
}

#[test]
fn interchange_formats_are_faithful_on_random_circuits() {
    let mut rng = StdRng::seed_from_u64(14);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let len = rng.gen_range(0..20);
        let c = random_circuit(&mut rng, n, len);
        let via_json = parse_json(&emit_json(&c)).unwrap();
        assert_eq!(via_json, c);
        let via_qasm = parse_qasm(&emit_qasm(&c).unwrap()).unwrap();
        assert_eq!(via_qasm.gates(), c.gates());
    }
}

#[test]
fn router_is_sound_on_random_placements() {
    let mut rng = StdRng::seed_from_u64(15);
    let g = CouplingGraph::grid(2, 2);
    for _ in 0..20 {
        let len = rng.gen_range(1..12);
        let c = random_circuit(&mut rng, 3, len);
        // random injective placement of 3 qubits on the 4 vertices
        let mut verts: Vec<usize> = (0..4).collect();
        for i in (1..verts.len()).rev() {
            let j = rng.gen_range(0..=i);
            verts.swap(i, j);
        }
        let p = Placement::new(verts[..3].to_vec(), &g).unwrap();
        let r = route_greedy(&c, &g, &p).unwrap();
        let u = unitary_of(&c).unwrap();
        let lifted = embed_on_wires(&u, p.as_slice(), 4);
        let perm = wire_permutation_matrix(&r.vertex_permutation, 4);
        let expected = perm.mat_mul(&lifted).unwrap();
        assert!(equal_exact(&unitary_of(&r.routed).unwrap(), &expected).unwrap());
    }
}
