//! Independent oracle for the reference phase polynomials: read the
//! diagonal of a core circuit off the exact simulator, recover monomial
//! coefficients by Möbius inversion over the subset lattice, convert to
//! the parity basis, and compare with both the frozen polynomials and
//! the syntactic extraction.
//!
//! Parity-basis representations mod 8 are not unique (4·(ℓ1 + ℓ2 + ℓ1⊕ℓ2)
//! vanishes identically), so the oracle asserts exact coefficient maps
//! only where the canonical solve lands on the frozen form, and
//! functional equality everywhere.

use std::collections::BTreeMap;

use latticetoff::constructions::{
    cs_gadget, margolus_rccx, paper_toffoli, selinger_tdepth1_toffoli, standard_toffoli_7t,
};
use latticetoff::phasepoly::{ccz_poly, cs_poly, extract, AffineParity, PhasePolynomial};
use latticetoff::ring::RingScalar;
use latticetoff::sim::{run, StateVector};
use latticetoff::Circuit;

/// Reads ω-exponents off the diagonal action of a wire-permuting phase
/// circuit: for every variable assignment the output must be a single
/// basis state with an eighth-root-of-unity amplitude.
fn read_phases(c: &Circuit, init: &[AffineParity], n_vars: usize) -> Vec<u8> {
    let n = c.n_qubits();
    let mut phases = Vec::with_capacity(1 << n_vars);
    for x in 0..1u32 << n_vars {
        let mut idx = 0usize;
        for (w, f) in init.iter().enumerate() {
            if f.eval(x) {
                idx |= 1 << (n - 1 - w);
            }
        }
        let out = run(c, &StateVector::basis(n, idx)).unwrap();
        let nonzero: Vec<(usize, RingScalar)> = out
            .amplitudes()
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| (i, *a))
            .collect();
        assert_eq!(nonzero.len(), 1, "not a permutation-phase circuit");
        let amp = nonzero[0].1;
        let k = (0..8)
            .find(|k| amp == RingScalar::omega_pow(*k))
            .expect("diagonal entry is an eighth root of unity");
        phases.push(k as u8);
    }
    phases
}

/// Möbius inversion to monomial coefficients, then conversion to the
/// parity basis via `Π_{i∈S} x_i = 2^{1−|S|}·Σ_{∅≠U⊆S} (−1)^{|U|−1}·χ_U`.
/// Returns `(global, parity-mask → coefficient)` or `None` when some
/// monomial coefficient is not divisible by the required power of two.
fn solve_parity_form(phases: &[u8], n_vars: usize) -> Option<(u8, BTreeMap<u32, u8>)> {
    let size = 1usize << n_vars;
    assert_eq!(phases.len(), size);
    let mut monomial = vec![0u8; size];
    for (s, slot) in monomial.iter_mut().enumerate() {
        let mut acc: i32 = 0;
        let mut t = s;
        loop {
            let sign = if (s.count_ones() - t.count_ones()) % 2 == 0 {
                1
            } else {
                -1
            };
            acc += sign * phases[t] as i32;
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
        *slot = acc.rem_euclid(8) as u8;
    }
    let global = monomial[0];
    let mut parity: BTreeMap<u32, u8> = BTreeMap::new();
    for (s, coeff) in monomial.iter().enumerate().skip(1) {
        let weight = s.count_ones();
        let divisor = 1u8 << (weight - 1);
        if !coeff.is_multiple_of(divisor) {
            return None;
        }
        let q = (coeff / divisor) as i32;
        if q == 0 {
            continue;
        }
        let mut u = s;
        loop {
            if u != 0 {
                let sign = if (u.count_ones() - 1) % 2 == 0 { 1 } else { -1 };
                let e = parity.entry(u as u32).or_insert(0);
                *e = (*e as i32 + sign * q).rem_euclid(8) as u8;
                if *e == 0 {
                    parity.remove(&(u as u32));
                }
            }
            if u == 0 {
                break;
            }
            u = (u - 1) & s;
        }
    }
    Some((global, parity))
}

fn as_map(p: &PhasePolynomial) -> (u8, BTreeMap<u32, u8>) {
    (
        p.global_phase(),
        p.terms().map(|(k, c)| (k.vars, c)).collect(),
    )
}

fn eval_solved(global: u8, map: &BTreeMap<u32, u8>, x: u32) -> u8 {
    let mut acc = global as u32;
    for (mask, c) in map {
        if (mask & x).count_ones() % 2 == 1 {
            acc += *c as u32;
        }
    }
    (acc % 8) as u8
}

#[test]
fn oracle_recovers_the_cs_polynomial() {
    // T(c1), T(c2), T†(a) with the ancilla preloaded with x1⊕x2
    let core = Circuit::new(3).t(0).t(1).tdg(2);
    let init = vec![
        AffineParity::var(0),
        AffineParity::var(1),
        AffineParity::parity(&[0, 1]),
    ];
    let phases = read_phases(&core, &init, 2);
    assert_eq!(phases, vec![0, 0, 0, 2]); // the CS diagonal: i on |11⟩
    let (global, solved) = solve_parity_form(&phases, 2).unwrap();
    assert_eq!((global, &solved), (0, &as_map(&cs_poly()).1));
    let (extracted, _) = extract(&core, &init, 2).unwrap();
    assert_eq!(as_map(&extracted), (global, solved));
}

#[test]
fn oracle_recovers_the_ccz_polynomial_from_the_headline_core() {
    let pt = paper_toffoli();
    let core = pt.core.unwrap();
    let phases = read_phases(&core.circuit, &core.init, 3);
    // CCZ diagonal: −1 exactly on |111⟩
    for (x, p) in phases.iter().enumerate() {
        assert_eq!(*p, if x == 7 { 4 } else { 0 });
    }
    let (global, solved) = solve_parity_form(&phases, 3).unwrap();
    assert_eq!(global, 0);
    assert_eq!(solved, as_map(&ccz_poly()).1);
}

#[test]
fn oracle_agrees_functionally_with_every_extracted_core() {
    for nc in [
        paper_toffoli(),
        margolus_rccx(),
        cs_gadget(),
        standard_toffoli_7t(),
        selinger_tdepth1_toffoli(),
    ] {
        let core = nc.core.expect("core present");
        let phases = read_phases(&core.circuit, &core.init, core.n_vars);
        let (global, solved) = solve_parity_form(&phases, core.n_vars).expect("solvable diagonal");
        let (extracted, _) = extract(&core.circuit, &core.init, core.n_vars).unwrap();
        for x in 0..1u32 << core.n_vars {
            assert_eq!(
                extracted.eval(x),
                eval_solved(global, &solved, x),
                "{}: functional drift at {x:b}",
                nc.name
            );
            assert_eq!(extracted.eval(x), phases[x as usize]);
        }
    }
}

#[test]
fn four_term_core_and_canonical_solve_differ_by_the_mod8_kernel() {
    // The relative-phase core stores four terms; the canonical solve
    // lands on a seven-term form. Their difference is the vanishing
    // combination 4·(x1 + x2 + x1⊕x2).
    let rc = margolus_rccx();
    let core = rc.core.unwrap();
    let (extracted, _) = extract(&core.circuit, &core.init, 3).unwrap();
    assert_eq!(extracted.term_count(), 4);
    let phases = read_phases(&core.circuit, &core.init, 3);
    let (global, solved) = solve_parity_form(&phases, 3).unwrap();
    assert_eq!(global, 0);
    assert_eq!(solved.len(), 7);
    let mut diff: BTreeMap<u32, i32> = BTreeMap::new();
    for (mask, c) in &solved {
        *diff.entry(*mask).or_insert(0) += *c as i32;
    }
    for (parity, c) in extracted.terms() {
        *diff.entry(parity.vars).or_insert(0) -= c as i32;
    }
    diff.retain(|_, v| v.rem_euclid(8) != 0);
    let kernel: BTreeMap<u32, i32> = [(0b001, 4), (0b010, 4), (0b011, 4)].into_iter().collect();
    assert_eq!(
        diff.into_iter()
            .map(|(k, v)| (k, v.rem_euclid(8)))
            .collect::<BTreeMap<_, _>>(),
        kernel
    );
}
