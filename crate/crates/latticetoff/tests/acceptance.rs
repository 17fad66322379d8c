//! Acceptance suite: one test per release criterion, all bit-exact.
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion pass lines.

use latticetoff::selfcheck;

fn criterion(id: usize, name: &str, outcome: Result<(), String>) {
    match &outcome {
        Ok(()) => println!("[PASS] criterion {id}: {name}"),
        Err(e) => println!("[FAIL] criterion {id}: {name}: {e}"),
    }
    outcome.unwrap_or_else(|e| panic!("criterion {id} ({name}) failed: {e}"));
}

#[test]
fn criterion_01_headline_toffoli_exact() {
    criterion(
        1,
        "headline circuit is exactly CCX with clean ancillae (64x64, bit-exact)",
        selfcheck::headline_toffoli_exact(),
    );
}

#[test]
fn criterion_02_headline_metrics() {
    criterion(
        2,
        "headline metrics: t_count 7, t_depth 2, depth 8, 6 CNOT steps, 3 ancillae",
        selfcheck::headline_metrics(),
    );
}

#[test]
fn criterion_03_and_gate() {
    criterion(
        3,
        "AND: t_count 4, t_depth 1, depth 7, exact with clean ancillae, -i witness without S",
        selfcheck::and_gate(),
    );
}

#[test]
fn criterion_04_cs_gadget() {
    criterion(
        4,
        "controlled-S gadget exactly CS on one clean ancilla, T-depth 1",
        selfcheck::cs_gadget_exact(),
    );
}

#[test]
fn criterion_05_phase_polynomials() {
    criterion(
        5,
        "phase polynomials: 4-term core, 7-term CCZ, 3-term CS, core = CCZ, sum identity",
        selfcheck::phase_polynomials(),
    );
}

#[test]
fn criterion_06_connectivity() {
    criterion(
        6,
        "connectivity: max degree 3, 3x2 grid embedding, executable, 0 SWAPs",
        selfcheck::paper_connectivity(),
    );
}

#[test]
fn criterion_07_baseline_contrast() {
    criterion(
        7,
        "baseline contrast: no grid embedding for the 7T Toffoli, >=1 SWAP for every placement",
        selfcheck::baseline_contrast(),
    );
}

#[test]
fn criterion_08_composition_recipes() {
    criterion(
        8,
        "composition recipes: two-AND Toffoli exact, measurement channel sums to 1",
        selfcheck::composition_recipes(),
    );
}

#[test]
fn criterion_09_selinger_baseline() {
    criterion(
        9,
        "T-depth-1 baseline: exact, t_depth 1, 4 ancillae, interaction degree > 3",
        selfcheck::selinger_baseline(),
    );
}

#[test]
fn criterion_10_tiling() {
    criterion(
        10,
        "tiling: 4 vertex-disjoint executable tiles on the 6x4 grid",
        selfcheck::tiling(),
    );
}

#[test]
fn criterion_11_io_round_trips() {
    criterion(
        11,
        "QASM and JSON round trips preserve exact semantics for the whole registry",
        selfcheck::io_round_trips(),
    );
}

#[test]
fn criterion_12_property_suites() {
    criterion(
        12,
        "properties: gate unitarity, layering- and routing-soundness, ring float shadow",
        selfcheck::property_suites(),
    );
}
