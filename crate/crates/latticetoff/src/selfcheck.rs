//! The library's own acceptance gate: twelve bit-exact checks covering
//! the headline Toffoli, its building blocks, the baselines, mapping and
//! I/O. `latticetoff selfcheck` runs them from the CLI; the `acceptance`
//! integration test runs them one per test. No check uses a numeric
//! tolerance except the 1e-12 float shadow on ring canonicalization.

use crate::arch::{
    check_executable, find_grid_embedding, is_executable, route_greedy, tile, CouplingGraph,
    Placement,
};
use crate::circuit::{asap_schedule, interaction_graph, metrics, Circuit, Gate};
use crate::constructions::{
    and_tdepth1, cs_gadget, margolus_rccx, paper_toffoli, registry, selinger_tdepth1_toffoli,
    standard_toffoli_7t, toffoli_via_and_measurement, toffoli_via_two_ands,
};
use crate::phasepoly::{ccz_poly, cs_poly, extract};
use crate::qasmio::{emit_json, emit_qasm, parse_json, parse_qasm};
use crate::ring::RingScalar;
use crate::sim::{
    ccx_matrix, cs_matrix, embed_on_wires, equal_exact, equal_on_ancilla_zero, run,
    run_with_measurement, unitary_of, wire_permutation_matrix, StateVector,
};

/// Outcome of one acceptance criterion.
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Criterion 1: the headline circuit is exactly CCX with clean ancillae, verified
/// both per-column and against the full 64×64 unitary.
pub fn headline_toffoli_exact() -> Result<(), String> {
    let pt = paper_toffoli();
    let chk =
        equal_on_ancilla_zero(&pt.circuit, &ccx_matrix(), &[3, 4, 5]).map_err(|e| e.to_string())?;
    ensure(
        chk.is_equal(),
        "paper toffoli is not CCX on zeroed ancillae",
    )?;
    // independent route: read the 8 relevant columns off the full unitary
    let u = unitary_of(&pt.circuit).map_err(|e| e.to_string())?;
    let ccx = ccx_matrix();
    for x in 0..8usize {
        let col = x << 3;
        for row in 0..64usize {
            let expected = if row & 0b111 == 0 {
                ccx[(row >> 3, x)]
            } else {
                RingScalar::zero()
            };
            ensure(
                u[(row, col)] == expected,
                format!("full unitary drifts at entry ({row},{col})"),
            )?;
        }
    }
    Ok(())
}

/// Criterion 2: headline metrics: 7 T, T-depth 2, depth 8, 6 CNOT steps, 3 ancillae.
pub fn headline_metrics() -> Result<(), String> {
    let m = metrics(&paper_toffoli().circuit);
    ensure(m.t_count == 7, format!("t_count {} != 7", m.t_count))?;
    ensure(m.t_depth == 2, format!("t_depth {} != 2", m.t_depth))?;
    ensure(m.depth_multi == 8, format!("depth {} != 8", m.depth_multi))?;
    ensure(
        m.cnot_steps == 6,
        format!("cnot steps {} != 6", m.cnot_steps),
    )?;
    ensure(
        m.ancilla_count == 3,
        format!("ancillae {} != 3", m.ancilla_count),
    )
}

/// Criterion 3: the AND gate: metrics 4/1/7, exact logical AND with clean
/// ancillae, and a −i phase on the (1,1) branch when the S is removed.
pub fn and_gate() -> Result<(), String> {
    let a = and_tdepth1();
    let m = metrics(&a.circuit);
    ensure(
        (m.t_count, m.t_depth, m.depth_multi) == (4, 1, 7),
        format!("AND metrics {:?}", (m.t_count, m.t_depth, m.depth_multi)),
    )?;
    for x1 in 0..2usize {
        for x2 in 0..2usize {
            let input = StateVector::basis(6, x1 << 5 | x2 << 4);
            let out = run(&a.circuit, &input).map_err(|e| e.to_string())?;
            let expected = StateVector::basis(6, x1 << 5 | x2 << 4 | (x1 & x2) << 3);
            ensure(out == expected, format!("AND wrong on x1={x1}, x2={x2}"))?;
        }
    }
    // superposition input: (|00⟩+|11⟩)/√2 ⊗ |0⟩⊗|000⟩ → (|000⟩+|111⟩)/√2 ⊗ |000⟩
    let inv = RingScalar::sqrt2_pow(-1);
    let mut amps = vec![RingScalar::zero(); 64];
    amps[0b000000] = inv;
    amps[0b110000] = inv;
    let input = StateVector::from_amplitudes(6, amps).map_err(|e| e.to_string())?;
    let out = run(&a.circuit, &input).map_err(|e| e.to_string())?;
    let mut amps = vec![RingScalar::zero(); 64];
    amps[0b000000] = inv;
    amps[0b111000] = inv;
    let expected = StateVector::from_amplitudes(6, amps).map_err(|e| e.to_string())?;
    ensure(out == expected, "AND wrong on the Bell-state input")?;
    // drop the S: the x1=x2=1 branch must carry exactly −i
    let unphased = Circuit::from_gates(
        a.circuit.roles().to_vec(),
        a.circuit
            .gates()
            .iter()
            .filter(|g| !matches!(g, Gate::S(_)))
            .cloned()
            .collect(),
        0,
    );
    let minus_i = RingScalar::omega_pow(6);
    for x1 in 0..2usize {
        for x2 in 0..2usize {
            let input = StateVector::basis(6, x1 << 5 | x2 << 4);
            let out = run(&unphased, &input).map_err(|e| e.to_string())?;
            let target = x1 << 5 | x2 << 4 | (x1 & x2) << 3;
            let phase = if x1 & x2 == 1 {
                minus_i
            } else {
                RingScalar::one()
            };
            for (i, amp) in out.amplitudes().iter().enumerate() {
                let expected = if i == target {
                    phase
                } else {
                    RingScalar::zero()
                };
                ensure(
                    *amp == expected,
                    format!("S-less AND phase wrong on x1={x1}, x2={x2}"),
                )?;
            }
        }
    }
    Ok(())
}

/// Criterion 4: the controlled-S gadget: exactly CS on a clean ancilla, T-depth 1.
pub fn cs_gadget_exact() -> Result<(), String> {
    let cs = cs_gadget();
    let chk = equal_on_ancilla_zero(&cs.circuit, &cs_matrix(), &[2]).map_err(|e| e.to_string())?;
    ensure(chk.is_equal(), "cs gadget is not CS on a zeroed ancilla")?;
    let m = metrics(&cs.circuit);
    ensure(m.t_depth == 1, format!("cs t_depth {} != 1", m.t_depth))?;
    ensure(
        m.ancilla_count == 1,
        format!("cs ancillae {} != 1", m.ancilla_count),
    )
}

/// Criterion 5: phase polynomials: four-term relative-phase core, seven-term CCZ,
/// three-term CS, the headline core extracting to CCZ, and the sum
/// identity rccx + cs = ccz.
pub fn phase_polynomials() -> Result<(), String> {
    let rc = margolus_rccx();
    let core = rc.core.as_ref().expect("rccx core");
    let (rccx_p, _) = extract(&core.circuit, &core.init, core.n_vars).map_err(|e| e.to_string())?;
    ensure(
        rccx_p.term_count() == 4,
        format!("rccx core terms {} != 4", rccx_p.term_count()),
    )?;
    ensure(ccz_poly().term_count() == 7, "ccz term count != 7")?;
    ensure(cs_poly().term_count() == 3, "cs term count != 3")?;
    let pt = paper_toffoli();
    let core = pt.core.as_ref().expect("paper core");
    let (paper_p, wires) =
        extract(&core.circuit, &core.init, core.n_vars).map_err(|e| e.to_string())?;
    ensure(
        paper_p.equal(&ccz_poly()).map_err(|e| e.to_string())?,
        "paper toffoli core polynomial != ccz",
    )?;
    ensure(
        wires.wires == core.init,
        "paper toffoli core does not restore its wires",
    )?;
    let summed = rccx_p
        .sum(&cs_poly().lifted(3))
        .map_err(|e| e.to_string())?;
    ensure(
        summed.equal(&ccz_poly()).map_err(|e| e.to_string())?,
        "rccx + cs != ccz coefficientwise",
    )?;
    // soundness: the diagonal oracle agrees with the extracted polynomials
    for nc in [
        margolus_rccx(),
        paper_toffoli(),
        cs_gadget(),
        selinger_tdepth1_toffoli(),
    ] {
        let core = nc.core.as_ref().unwrap();
        diagonal_oracle_agrees(&core.circuit, &core.init, core.n_vars)
            .map_err(|e| format!("{}: {e}", nc.name))?;
    }
    Ok(())
}

/// Exhaustive diagonal-unitary check: the circuit must act on every
/// input basis state as ω^{poly(x)} times the wire permutation given by
/// the extracted linear state.
fn diagonal_oracle_agrees(
    c: &Circuit,
    init: &[crate::phasepoly::AffineParity],
    n_vars: usize,
) -> Result<(), String> {
    let (poly, wires) = extract(c, init, n_vars).map_err(|e| e.to_string())?;
    let n = c.n_qubits();
    for x in 0..1u32 << n_vars {
        // input: each wire holds its initial affine value at assignment x
        let mut in_index = 0usize;
        for (w, f) in init.iter().enumerate() {
            if f.eval(x) {
                in_index |= 1 << (n - 1 - w);
            }
        }
        let out = run(c, &StateVector::basis(n, in_index)).map_err(|e| e.to_string())?;
        let out_bits = wires.eval(x);
        let mut out_index = 0usize;
        for w in 0..n {
            if out_bits >> w & 1 == 1 {
                out_index |= 1 << (n - 1 - w);
            }
        }
        let phase = RingScalar::omega_pow(poly.eval(x) as i64);
        for (i, amp) in out.amplitudes().iter().enumerate() {
            let expected = if i == out_index {
                phase
            } else {
                RingScalar::zero()
            };
            if *amp != expected {
                return Err(format!("diagonal semantics drift at assignment {x:b}"));
            }
        }
    }
    Ok(())
}

/// Criterion 6: headline connectivity: degree ≤ 3, embeds in a 3×2 grid,
/// executable there, zero SWAPs under routing.
pub fn paper_connectivity() -> Result<(), String> {
    let pt = paper_toffoli();
    let g = interaction_graph(&pt.circuit);
    ensure(
        g.max_degree() == 3,
        format!("max degree {} != 3", g.max_degree()),
    )?;
    let grid = CouplingGraph::grid(3, 2);
    let p = find_grid_embedding(&pt.circuit, &grid)
        .map_err(|e| e.to_string())?
        .ok_or("no 3x2 embedding found")?;
    ensure(
        is_executable(&pt.circuit, &grid, &p).map_err(|e| e.to_string())?,
        "embedding is not executable",
    )?;
    let r = route_greedy(&pt.circuit, &grid, &p).map_err(|e| e.to_string())?;
    ensure(
        r.swap_count == 0,
        format!("router inserted {} swaps", r.swap_count),
    )
}

/// Criterion 7: baseline contrast: the textbook Toffoli's triangle embeds in no
/// square grid, and every initial placement on line(3) or grid(3,2)
/// forces at least one SWAP.
pub fn baseline_contrast() -> Result<(), String> {
    let t7 = standard_toffoli_7t();
    for (w, h) in [(2, 2), (3, 2), (3, 3), (4, 4)] {
        let g = CouplingGraph::grid(w, h);
        ensure(
            find_grid_embedding(&t7.circuit, &g)
                .map_err(|e| e.to_string())?
                .is_none(),
            format!("unexpected embedding in grid({w},{h})"),
        )?;
    }
    for g in [CouplingGraph::line(3), CouplingGraph::grid(3, 2)] {
        let v = g.n_vertices();
        let mut placements = 0usize;
        for p0 in 0..v {
            for p1 in 0..v {
                for p2 in 0..v {
                    if p0 == p1 || p0 == p2 || p1 == p2 {
                        continue;
                    }
                    placements += 1;
                    let p = Placement::new(vec![p0, p1, p2], &g).map_err(|e| e.to_string())?;
                    let r = route_greedy(&t7.circuit, &g, &p).map_err(|e| e.to_string())?;
                    ensure(
                        r.swap_count >= 1,
                        format!("swap-free placement [{p0},{p1},{p2}] on {v} vertices"),
                    )?;
                }
            }
        }
        ensure(placements > 0, "no placements enumerated")?;
    }
    Ok(())
}

/// Criterion 8: composition recipes: two ANDs give an exact Toffoli; the
/// measurement recipe's corrected branches are proportional to CCX with
/// squared constants summing to one.
pub fn composition_recipes() -> Result<(), String> {
    let ta = toffoli_via_two_ands();
    let chk = equal_on_ancilla_zero(&ta.circuit, &ccx_matrix(), &[3, 4, 5, 6])
        .map_err(|e| e.to_string())?;
    ensure(
        chk.is_equal(),
        "two-AND toffoli is not CCX with clean ancillae",
    )?;
    ensure(metrics(&ta.circuit).t_count == 8, "two-AND t_count != 8")?;

    let tm = toffoli_via_and_measurement();
    ensure(
        metrics(&tm.circuit).t_count == 4,
        "measurement toffoli t_count != 4",
    )?;
    let ccx = ccx_matrix();
    let n = tm.circuit.n_qubits();
    // branch-operator extraction over the 8 data basis states
    let mut lambdas: [Option<RingScalar>; 2] = [None, None];
    for x in 0..8usize {
        let input = StateVector::basis(n, x << (n - 3));
        let branches = run_with_measurement(&tm.circuit, &input).map_err(|e| e.to_string())?;
        ensure(
            branches.len() == 2,
            format!("{} branches on input {x}", branches.len()),
        )?;
        for br in &branches {
            let b = br.outcomes[0] as usize;
            let y = (0..8).find(|y| !ccx[(*y, x)].is_zero()).unwrap();
            // expected support: |CCX x⟩ ⊗ |g=b, 000⟩
            let expect_idx = y << (n - 3) | b << (n - 4);
            for (i, amp) in br.state.amplitudes().iter().enumerate() {
                if i == expect_idx {
                    match lambdas[b] {
                        None => lambdas[b] = Some(*amp),
                        Some(l) => {
                            ensure(l == *amp, format!("branch {b} not proportional to CCX"))?
                        }
                    }
                } else {
                    ensure(
                        amp.is_zero(),
                        format!("branch {b} has stray amplitude at {i}"),
                    )?;
                }
            }
        }
    }
    let l0 = lambdas[0].ok_or("outcome-0 branch missing")?;
    let l1 = lambdas[1].ok_or("outcome-1 branch missing")?;
    ensure(
        l0 == RingScalar::sqrt2_pow(-1),
        "outcome-0 branch needs a correction",
    )?;
    ensure(
        l0.norm_sqr() + l1.norm_sqr() == RingScalar::one(),
        "branch weights do not sum to 1",
    )
}

/// Criterion 9: the T-depth-1 baseline: verifies exactly, four ancillae, and its
/// interaction graph needs degree > 3.
pub fn selinger_baseline() -> Result<(), String> {
    let sl = selinger_tdepth1_toffoli();
    let m = metrics(&sl.circuit);
    ensure(
        m.t_depth == 1,
        format!("selinger t_depth {} != 1", m.t_depth),
    )?;
    ensure(
        m.ancilla_count == 4,
        format!("selinger ancillae {} != 4", m.ancilla_count),
    )?;
    let chk = equal_on_ancilla_zero(&sl.circuit, &ccx_matrix(), &[3, 4, 5, 6])
        .map_err(|e| e.to_string())?;
    ensure(
        chk.is_equal(),
        "selinger baseline is not CCX with clean ancillae",
    )?;
    let deg = interaction_graph(&sl.circuit).max_degree();
    ensure(deg > 3, format!("selinger max degree {deg} not > 3"))
}

/// Criterion 10: tiling: four vertex-disjoint, individually executable copies of
/// the 3×2 block on a 6×4 grid.
pub fn tiling() -> Result<(), String> {
    let pt = paper_toffoli();
    let block = CouplingGraph::grid(3, 2);
    let base = find_grid_embedding(&pt.circuit, &block)
        .map_err(|e| e.to_string())?
        .ok_or("no base embedding")?;
    let host = CouplingGraph::grid(6, 4);
    let tiles = tile(&base, &block, &host).map_err(|e| e.to_string())?;
    ensure(tiles.len() == 4, format!("{} tiles != 4", tiles.len()))?;
    let mut seen = std::collections::BTreeSet::new();
    for (i, t) in tiles.iter().enumerate() {
        for v in t.as_slice() {
            ensure(seen.insert(*v), format!("tile {i} overlaps on vertex {v}"))?;
        }
        ensure(
            is_executable(&pt.circuit, &host, t).map_err(|e| e.to_string())?,
            format!("tile {i} not executable"),
        )?;
    }
    Ok(())
}

/// Criterion 11: QASM and JSON round-trips preserve exact semantics for every
/// registry construction (structural identity for the measurement one).
pub fn io_round_trips() -> Result<(), String> {
    for c in registry() {
        let qasm_back = parse_qasm(&emit_qasm(&c.circuit).map_err(|e| e.to_string())?)
            .map_err(|e| format!("{}: {e}", c.name))?;
        if c.circuit.has_measurement() {
            ensure(
                qasm_back.gates() == c.circuit.gates(),
                format!("{}: QASM gate drift", c.name),
            )?;
        } else {
            let u0 = unitary_of(&c.circuit).map_err(|e| e.to_string())?;
            let u1 = unitary_of(&qasm_back).map_err(|e| e.to_string())?;
            ensure(
                equal_exact(&u0, &u1).map_err(|e| e.to_string())?,
                format!("{}: QASM unitary drift", c.name),
            )?;
        }
        let json_back =
            parse_json(&emit_json(&c.circuit)).map_err(|e| format!("{}: {e}", c.name))?;
        ensure(
            json_back == c.circuit,
            format!("{}: JSON structural drift", c.name),
        )?;
    }
    Ok(())
}

/// Criterion 12: property sweeps: gate unitarity, layering preserves unitaries,
/// routing soundness up to the final permutation, and ring
/// canonicalization against its float shadow.
pub fn property_suites() -> Result<(), String> {
    // every gate kind is unitary
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
        let u = unitary_of(&c).map_err(|e| e.to_string())?;
        ensure(
            u.mat_mul(&u.mat_dagger())
                .map_err(|e| e.to_string())?
                .is_identity(),
            format!("gate {g:?} not unitary"),
        )?;
    }
    // ASAP layering is semantics-preserving on the whole library
    for c in registry() {
        if c.circuit.has_measurement() {
            continue;
        }
        let flat =
            asap_schedule(&c.circuit).flatten(c.circuit.roles().to_vec(), c.circuit.n_cbits());
        let u0 = unitary_of(&c.circuit).map_err(|e| e.to_string())?;
        let u1 = unitary_of(&flat).map_err(|e| e.to_string())?;
        ensure(
            equal_exact(&u0, &u1).map_err(|e| e.to_string())?,
            format!("{}: scheduling changed the unitary", c.name),
        )?;
    }
    // routing soundness on small cases
    let cases: Vec<(Circuit, CouplingGraph, Vec<usize>)> = vec![
        (
            standard_toffoli_7t().circuit,
            CouplingGraph::line(3),
            vec![0, 1, 2],
        ),
        (
            standard_toffoli_7t().circuit,
            CouplingGraph::grid(2, 2),
            vec![0, 3, 1],
        ),
        (
            Circuit::new(2).h(0).cnot(0, 1).t(1).cnot(1, 0),
            CouplingGraph::grid(2, 2),
            vec![0, 3],
        ),
        (
            paper_toffoli().circuit,
            CouplingGraph::grid(3, 2),
            vec![3, 5, 1, 0, 2, 4],
        ),
    ];
    for (c, g, p0) in cases {
        routing_sound(&c, &g, p0)?;
    }
    // canonicalization: idempotent, float shadow within 1e-12
    let samples = [-9i64, -4, -2, -1, 0, 1, 2, 3, 8];
    for &a in &samples {
        for &b in &samples {
            for (c, d, k) in [(0i64, 0i64, 4u32), (a, b, 3), (-a, 2 * b, 5)] {
                let s = RingScalar::from_coeffs(a, b, c, d, k);
                let (ca, cb, cc, cd, ck) = s.coeffs();
                ensure(
                    RingScalar::from_coeffs(ca, cb, cc, cd, ck) == s,
                    "normalize not idempotent",
                )?;
                let inv = std::f64::consts::FRAC_1_SQRT_2;
                let scale = 2f64.powi(-(k as i32)).sqrt();
                let raw_re = (a as f64 + (b as f64 - d as f64) * inv) * scale;
                let raw_im = (c as f64 + (b as f64 + d as f64) * inv) * scale;
                let (re, im) = s.to_complex();
                ensure(
                    (re - raw_re).abs() <= 1e-12 && (im - raw_im).abs() <= 1e-12,
                    format!("float shadow drift for ({a},{b},{c},{d})/sqrt2^{k}"),
                )?;
            }
        }
    }
    Ok(())
}

/// Routed circuit = (net content permutation) ∘ (original circuit lifted
/// onto its initial wires), exactly.
fn routing_sound(c: &Circuit, g: &CouplingGraph, p0: Vec<usize>) -> Result<(), String> {
    let p = Placement::new(p0, g).map_err(|e| e.to_string())?;
    let r = route_greedy(c, g, &p).map_err(|e| e.to_string())?;
    let identity = Placement::trivial(g.n_vertices(), g).map_err(|e| e.to_string())?;
    ensure(
        check_executable(&r.routed, g, &identity)
            .map_err(|e| e.to_string())?
            .is_ok(),
        "routed circuit not executable",
    )?;
    let u = unitary_of(c).map_err(|e| e.to_string())?;
    let lifted = embed_on_wires(&u, p.as_slice(), g.n_vertices());
    let perm = wire_permutation_matrix(&r.vertex_permutation, g.n_vertices());
    let expected = perm.mat_mul(&lifted).map_err(|e| e.to_string())?;
    let routed_u = unitary_of(&r.routed).map_err(|e| e.to_string())?;
    ensure(
        equal_exact(&routed_u, &expected).map_err(|e| e.to_string())?,
        "routing changed the circuit semantics",
    )?;
    // consistency: final placement = permutation applied to the initial one
    for q in 0..c.n_qubits() {
        let via_perm = r.vertex_permutation[p.vertex(q)];
        ensure(
            via_perm == r.final_placement.vertex(q),
            "final placement inconsistent with the permutation",
        )?;
    }
    Ok(())
}

/// Runs all twelve checks in order.
pub fn run_all() -> Vec<CheckResult> {
    type Check = (&'static str, fn() -> Result<(), String>);
    let checks: Vec<Check> = vec![
        (
            "headline toffoli exact on zeroed ancillae",
            headline_toffoli_exact,
        ),
        (
            "headline metrics 7T / T-depth 2 / depth 8 / 6 CNOT steps",
            headline_metrics,
        ),
        (
            "AND gate: metrics, exactness, S-correction witness",
            and_gate,
        ),
        ("controlled-S gadget exact, T-depth 1", cs_gadget_exact),
        (
            "phase polynomials: 4/7/3 terms, core = ccz, sum identity",
            phase_polynomials,
        ),
        (
            "headline connectivity: degree 3, 3x2 embedding, 0 swaps",
            paper_connectivity,
        ),
        (
            "baseline contrast: no embedding, swaps always needed",
            baseline_contrast,
        ),
        (
            "composition recipes: two ANDs and measurement channel",
            composition_recipes,
        ),
        (
            "T-depth-1 baseline: exact, 4 ancillae, degree > 3",
            selinger_baseline,
        ),
        ("tiling: 4 disjoint executable 3x2 tiles on 6x4", tiling),
        ("QASM and JSON round trips", io_round_trips),
        (
            "property sweeps: unitarity, layering, routing, ring shadow",
            property_suites,
        ),
    ];
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, f))| CheckResult {
            id: i + 1,
            name,
            outcome: f(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for r in run_all() {
            assert!(
                r.passed(),
                "criterion {} ({}) failed: {:?}",
                r.id,
                r.name,
                r.outcome
            );
        }
    }
}
