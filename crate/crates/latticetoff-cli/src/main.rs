//! `latticetoff`: build, inspect, verify and map the Clifford+T circuit
//! library from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::fs;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use latticetoff::arch::{
    find_grid_embedding, is_executable, render_grid, route_greedy, tile, CouplingGraph, Placement,
};
use latticetoff::circuit::{interaction_graph, metrics, Circuit};
use latticetoff::constructions::{by_name, NAMES};
use latticetoff::qasmio::{emit_json, emit_qasm, parse_auto};
use latticetoff::ring::{RingScalar, UnitaryMatrix};
use latticetoff::selfcheck;
use latticetoff::sim::{
    ccx_matrix, cs_matrix, equal_on_ancilla_zero, equal_up_to_global_phase, run,
    run_with_measurement, unitary_of, AncillaZeroCheck, StateVector,
};

#[derive(Parser)]
#[command(
    name = "latticetoff",
    version,
    about = "Clifford+T Toffoli toolkit for square-lattice hardware"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable JSON output where supported.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Qasm,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write a library circuit to a file or stdout.
    Build {
        /// Construction name, e.g. `paper-toffoli`.
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "qasm")]
        format: Format,
    },
    /// Report cost metrics of a library circuit or circuit file.
    Metrics {
        /// Construction name or path to a .qasm/.json circuit file.
        input: String,
    },
    /// Check a circuit against a reference, bit-exactly.
    Verify {
        /// Construction name or path to a circuit file.
        input: String,
        /// `toffoli`, `cs`, `and`, or a path to a unitary JSON file.
        #[arg(long, default_value = "toffoli")]
        against: String,
    },
    /// Find a SWAP-free placement on an architecture and draw it.
    Map {
        input: String,
        /// Architecture spec: `grid:WxH` or `line:N`.
        #[arg(long)]
        arch: String,
        /// Also tile the placement block across the host grid.
        #[arg(long)]
        tile: bool,
    },
    /// Route two circuits on an architecture and compare their costs.
    Compare {
        name_a: String,
        name_b: String,
        #[arg(long)]
        arch: String,
    },
    /// Run the built-in acceptance checks.
    Selfcheck,
}

fn color_enabled() -> bool {
    if std::env::var("LATTICETOFF_COLOR").as_deref() == Ok("0") {
        return false;
    }
    std::io::stdout().is_terminal()
}

fn paint(text: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

/// Usage-level failure (exit 2).
fn usage_err(msg: impl Into<String>) -> String {
    msg.into()
}

fn load_circuit(input: &str) -> Result<(String, Circuit), String> {
    if let Some(c) = by_name(input) {
        return Ok((c.name.to_string(), c.circuit));
    }
    let path = PathBuf::from(input);
    if path.exists() {
        let text = fs::read_to_string(&path).map_err(|e| format!("{input}: {e}"))?;
        let circuit = parse_auto(&text).map_err(|e| format!("{input}: {e}"))?;
        return Ok((input.to_string(), circuit));
    }
    Err(usage_err(format!(
        "`{input}` is neither a known construction nor a readable file.\nknown constructions: {}",
        NAMES.join(", ")
    )))
}

fn parse_arch(spec: &str) -> Result<CouplingGraph, String> {
    let (kind, dims) = spec
        .split_once(':')
        .ok_or_else(|| usage_err(format!("bad arch spec `{spec}` (try grid:3x2 or line:5)")))?;
    match kind {
        "grid" => {
            let (w, h) = dims
                .split_once('x')
                .ok_or_else(|| usage_err(format!("bad grid dims `{dims}`")))?;
            let w: usize = w
                .parse()
                .map_err(|_| usage_err(format!("bad width `{w}`")))?;
            let h: usize = h
                .parse()
                .map_err(|_| usage_err(format!("bad height `{h}`")))?;
            if w == 0 || h == 0 {
                return Err(usage_err("grid dimensions must be positive"));
            }
            Ok(CouplingGraph::grid(w, h))
        }
        "line" => {
            let n: usize = dims
                .parse()
                .map_err(|_| usage_err(format!("bad length `{dims}`")))?;
            if n == 0 {
                return Err(usage_err("line length must be positive"));
            }
            Ok(CouplingGraph::line(n))
        }
        other => Err(usage_err(format!("unknown architecture kind `{other}`"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build { name, out, format } => cmd_build(&name, out.as_deref(), format),
        Command::Metrics { input } => cmd_metrics(&input, cli.json),
        Command::Verify { input, against } => cmd_verify(&input, &against),
        Command::Map { input, arch, tile } => cmd_map(&input, &arch, tile),
        Command::Compare {
            name_a,
            name_b,
            arch,
        } => cmd_compare(&name_a, &name_b, &arch, cli.json),
        Command::Selfcheck => cmd_selfcheck(),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_build(
    name: &str,
    out: Option<&std::path::Path>,
    format: Format,
) -> Result<ExitCode, String> {
    let c = by_name(name).ok_or_else(|| {
        usage_err(format!(
            "unknown construction `{name}`
known constructions: {}",
            NAMES.join(", ")
        ))
    })?;
    let text = match format {
        Format::Qasm => emit_qasm(&c.circuit).map_err(|e| e.to_string())?,
        Format::Json => emit_json(&c.circuit),
    };
    match out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_metrics(input: &str, json: bool) -> Result<ExitCode, String> {
    let (name, circuit) = load_circuit(input)?;
    let m = metrics(&circuit);
    let degree = interaction_graph(&circuit).max_degree();
    if json {
        let doc = serde_json::json!({
            "name": name,
            "qubits": circuit.n_qubits(),
            "depth_multi": m.depth_multi,
            "depth_serial": m.depth_serial,
            "t_count": m.t_count,
            "t_depth": m.t_depth,
            "cnot_steps": m.cnot_steps,
            "swap_count": m.swap_count,
            "ancilla_count": m.ancilla_count,
            "max_interaction_degree": degree,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("{name}: {} qubits", circuit.n_qubits());
        println!("  depth (multi-target CNOT = 1 step) {:>4}", m.depth_multi);
        println!("  depth (serial CNOT view)           {:>4}", m.depth_serial);
        println!("  T count                            {:>4}", m.t_count);
        println!("  T depth                            {:>4}", m.t_depth);
        println!("  CNOT steps                         {:>4}", m.cnot_steps);
        println!("  SWAP count                         {:>4}", m.swap_count);
        println!(
            "  ancillae                           {:>4}",
            m.ancilla_count
        );
        println!("  max interaction degree             {:>4}", degree);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Deserialize)]
struct UnitaryFile {
    entries: Vec<Vec<[i64; 5]>>,
}

fn load_reference(spec: &str) -> Result<(String, UnitaryMatrix), String> {
    match spec {
        "toffoli" => Ok(("toffoli".into(), ccx_matrix())),
        "cs" => Ok(("cs".into(), cs_matrix())),
        path => {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let parsed: UnitaryFile =
                serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            let dim = parsed.entries.len();
            if dim == 0 || !dim.is_power_of_two() || parsed.entries.iter().any(|r| r.len() != dim) {
                return Err(format!(
                    "{path}: entries must form a square power-of-two matrix"
                ));
            }
            let rows: Vec<Vec<RingScalar>> = parsed
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|[a, b, c, d, k]| {
                            RingScalar::from_coeffs(*a, *b, *c, *d, u32::try_from(*k).unwrap_or(0))
                        })
                        .collect()
                })
                .collect();
            Ok((path.to_string(), UnitaryMatrix::from_rows(&rows)))
        }
    }
}

fn format_basis(index: usize, n: usize) -> String {
    format!("|{:0width$b}>", index, width = n)
}

fn cmd_verify(input: &str, against: &str) -> Result<ExitCode, String> {
    let (name, circuit) = load_circuit(input)?;
    let pass = |what: &str| {
        println!("{} {name}: {what}", paint("ok", "32"));
        Ok(ExitCode::SUCCESS)
    };
    let fail = |what: &str| {
        println!("{} {name}: {what}", paint("FAIL", "31"));
        Ok(ExitCode::from(1))
    };

    if against == "and" {
        return verify_and_map(&name, &circuit);
    }
    let (ref_name, reference) = load_reference(against)?;

    if circuit.has_measurement() {
        return verify_channel(&name, &circuit, &reference);
    }

    let ancillae = circuit.ancillae();
    if !ancillae.is_empty() {
        let chk =
            equal_on_ancilla_zero(&circuit, &reference, &ancillae).map_err(|e| e.to_string())?;
        return match chk {
            AncillaZeroCheck::Equal => {
                pass(&format!("equals `{ref_name}` exactly with clean ancillae"))
            }
            AncillaZeroCheck::Counterexample {
                data_index,
                got,
                expected,
            } => {
                let d = circuit.n_qubits() - ancillae.len();
                println!(
                    "counterexample: data input {} maps to\n  got      {}\n  expected {}",
                    format_basis(data_index, d),
                    describe_state(&got),
                    describe_state(&expected)
                );
                fail(&format!("differs from `{ref_name}` on ancilla-zero input"))
            }
        };
    }

    let u = unitary_of(&circuit).map_err(|e| e.to_string())?;
    if u.dim() != reference.dim() {
        return Err(format!(
            "dimension mismatch: circuit is {} but `{ref_name}` is {}",
            u.dim(),
            reference.dim()
        ));
    }
    if u == reference {
        return pass(&format!("equals `{ref_name}` exactly"));
    }
    if let Some(k) = equal_up_to_global_phase(&u, &reference).map_err(|e| e.to_string())? {
        println!("circuits agree only up to global phase w^{k}");
        return fail(&format!("equals `{ref_name}` up to global phase w^{k}"));
    }
    // first failing column, reported as a basis-state counterexample
    let n = circuit.n_qubits();
    for col in 0..u.dim() {
        if (0..u.dim()).any(|row| u[(row, col)] != reference[(row, col)]) {
            let got = StateVector::from_amplitudes(n, u.column(col)).map_err(|e| e.to_string())?;
            let expected = StateVector::from_amplitudes(n, reference.column(col))
                .map_err(|e| e.to_string())?;
            println!(
                "counterexample: input {} maps to\n  got      {}\n  expected {}",
                format_basis(col, n),
                describe_state(&got),
                describe_state(&expected)
            );
            break;
        }
    }
    fail(&format!("differs from `{ref_name}`"))
}

fn describe_state(s: &StateVector) -> String {
    let n = s.n_qubits();
    let parts: Vec<String> = s
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| {
            if a.is_one() {
                format_basis(i, n)
            } else {
                format!("({a})·{}", format_basis(i, n))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// AND semantics: |x1,x2,0,0…⟩ ↦ |x1,x2,x1·x2,0…⟩ on the labeled wires.
fn verify_and_map(name: &str, circuit: &Circuit) -> Result<ExitCode, String> {
    let n = circuit.n_qubits();
    if n < 3 {
        return Err("AND verification needs at least three qubits".into());
    }
    let c1 = circuit.qubit_index("c1").unwrap_or(0);
    let c2 = circuit.qubit_index("c2").unwrap_or(1);
    let t = circuit.qubit_index("t").unwrap_or(2);
    for x1 in 0..2usize {
        for x2 in 0..2usize {
            let mut idx = 0usize;
            idx |= x1 << (n - 1 - c1);
            idx |= x2 << (n - 1 - c2);
            let out = run(circuit, &StateVector::basis(n, idx)).map_err(|e| e.to_string())?;
            let expect = idx | ((x1 & x2) << (n - 1 - t));
            for (i, amp) in out.amplitudes().iter().enumerate() {
                let want = if i == expect {
                    RingScalar::one()
                } else {
                    RingScalar::zero()
                };
                if *amp != want {
                    println!(
                        "counterexample: x1={x1}, x2={x2}: got {}",
                        describe_state(&out)
                    );
                    println!("{} {name}: not an exact AND", paint("FAIL", "31"));
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    println!(
        "{} {name}: computes the exact logical AND",
        paint("ok", "32")
    );
    Ok(ExitCode::SUCCESS)
}

/// Channel check for measurement circuits: every corrected branch must be
/// proportional to the reference on the data qubits, weights summing to 1.
fn verify_channel(
    name: &str,
    circuit: &Circuit,
    reference: &UnitaryMatrix,
) -> Result<ExitCode, String> {
    let n = circuit.n_qubits();
    let ancillae = circuit.ancillae();
    let d = n - ancillae.len();
    if reference.dim() != 1 << d {
        return Err(format!(
            "reference dimension {} does not fit {d} data qubits",
            reference.dim()
        ));
    }
    // one unimodular entry per column, so branch operators can be compared
    // entrywise without ring division
    for x in 0..reference.dim() {
        let nonzero: Vec<usize> = (0..reference.dim())
            .filter(|y| !reference[(*y, x)].is_zero())
            .collect();
        if nonzero.len() != 1 || reference[(nonzero[0], x)].norm_sqr() != RingScalar::one() {
            return Err("channel verification supports permutation-phase references only".into());
        }
    }
    let data: Vec<usize> = (0..n).filter(|q| !ancillae.contains(q)).collect();
    let mut lambdas: std::collections::BTreeMap<Vec<bool>, RingScalar> = Default::default();
    for x in 0..1usize << d {
        let input = latticetoff::sim::scatter_data_bits(x, &data, n);
        let branches = run_with_measurement(circuit, &StateVector::basis(n, input))
            .map_err(|e| e.to_string())?;
        for br in branches {
            // the reference column tells us where the data part must sit
            let mut ok = false;
            for y in 0..reference.dim() {
                let coeff = reference[(y, x)];
                if coeff.is_zero() {
                    continue;
                }
                for (i, amp) in br.state.amplitudes().iter().enumerate() {
                    if amp.is_zero() {
                        continue;
                    }
                    // data bits of this amplitude index
                    let mut data_bits = 0usize;
                    for (pos, q) in data.iter().enumerate() {
                        if i >> (n - 1 - q) & 1 == 1 {
                            data_bits |= 1 << (d - 1 - pos);
                        }
                    }
                    if data_bits != y {
                        println!(
                            "{} {name}: branch {:?} leaks outside the reference image",
                            paint("FAIL", "31"),
                            br.outcomes
                        );
                        return Ok(ExitCode::from(1));
                    }
                    let lambda = *amp * coeff.conj(); // coeff is ±1/±i/ω^k, |coeff| = 1
                    match lambdas.get(&br.outcomes) {
                        None => {
                            lambdas.insert(br.outcomes.clone(), lambda);
                        }
                        Some(prev) if *prev == lambda => {}
                        Some(_) => {
                            println!(
                                "{} {name}: branch {:?} not proportional to the reference",
                                paint("FAIL", "31"),
                                br.outcomes
                            );
                            return Ok(ExitCode::from(1));
                        }
                    }
                    ok = true;
                }
            }
            if !ok && !br.state.is_zero() {
                println!(
                    "{} {name}: branch {:?} unaccounted for",
                    paint("FAIL", "31"),
                    br.outcomes
                );
                return Ok(ExitCode::from(1));
            }
        }
    }
    let total = lambdas
        .values()
        .fold(RingScalar::zero(), |acc, l| acc + l.norm_sqr());
    if total != RingScalar::one() {
        println!(
            "{} {name}: branch weights sum to {total}, not 1",
            paint("FAIL", "31")
        );
        return Ok(ExitCode::from(1));
    }
    println!(
        "{} {name}: all {} corrected branches proportional to the reference, weights sum to 1",
        paint("ok", "32"),
        lambdas.len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_map(input: &str, arch: &str, do_tile: bool) -> Result<ExitCode, String> {
    let (name, circuit) = load_circuit(input)?;
    let graph = parse_arch(arch)?;
    let placement = find_grid_embedding(&circuit, &graph).map_err(|e| e.to_string())?;
    match placement {
        None => {
            println!("{name}: no embedding in {arch}");
            Ok(ExitCode::SUCCESS)
        }
        Some(p) => {
            println!("{name}: SWAP-free embedding found on {arch}");
            let labels: Vec<String> = circuit.roles().iter().map(|r| r.label()).collect();
            print!("{}", render_grid(&graph, &p, &labels));
            let r = route_greedy(&circuit, &graph, &p).map_err(|e| e.to_string())?;
            println!("swaps needed under this placement: {}", r.swap_count);
            if do_tile {
                let block = CouplingGraph::grid(3, 2);
                let base = find_grid_embedding(&circuit, &block)
                    .map_err(|e| e.to_string())?
                    .ok_or("circuit has no 3x2 block placement to tile")?;
                let tiles = tile(&base, &block, &graph).map_err(|e| e.to_string())?;
                println!("tiles: {}", tiles.len());
                for (i, t) in tiles.iter().enumerate() {
                    let ok = is_executable(&circuit, &graph, t).map_err(|e| e.to_string())?;
                    println!("  tile {i}: executable = {ok}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

struct CompareRow {
    name: String,
    qubits: usize,
    t_count: usize,
    t_depth: usize,
    max_degree: usize,
    swaps: usize,
    routed_depth_serial: usize,
    routed_cnots: usize,
}

fn compare_row(name: &str, graph: &CouplingGraph) -> Result<CompareRow, String> {
    let (name, circuit) = load_circuit(name)?;
    if circuit.n_qubits() > graph.n_vertices() {
        return Err(format!(
            "`{name}` needs {} qubits but the architecture has {} vertices",
            circuit.n_qubits(),
            graph.n_vertices()
        ));
    }
    let m = metrics(&circuit);
    let placement = match find_grid_embedding(&circuit, graph).map_err(|e| e.to_string())? {
        Some(p) => p,
        None => Placement::trivial(circuit.n_qubits(), graph).map_err(|e| e.to_string())?,
    };
    let routed = route_greedy(&circuit, graph, &placement).map_err(|e| e.to_string())?;
    let serial = routed.serial_cost_view();
    let sm = metrics(&serial);
    let routed_cnots = serial
        .gates()
        .iter()
        .map(|g| g.two_qubit_pairs().len())
        .sum::<usize>();
    Ok(CompareRow {
        name,
        qubits: circuit.n_qubits(),
        t_count: m.t_count,
        t_depth: m.t_depth,
        max_degree: interaction_graph(&circuit).max_degree(),
        swaps: routed.swap_count,
        routed_depth_serial: sm.depth_multi,
        routed_cnots,
    })
}

fn cmd_compare(a: &str, b: &str, arch: &str, json: bool) -> Result<ExitCode, String> {
    let graph = parse_arch(arch)?;
    let rows = [compare_row(a, &graph)?, compare_row(b, &graph)?];
    if json {
        let docs: Vec<_> = rows
            .iter()
            .map(|r| {
                serde_json::json!({
                    "name": r.name,
                    "qubits": r.qubits,
                    "t_count": r.t_count,
                    "t_depth": r.t_depth,
                    "max_interaction_degree": r.max_degree,
                    "swap_count": r.swaps,
                    "routed_depth_serial": r.routed_depth_serial,
                    "routed_cnot_count": r.routed_cnots,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!(docs)).unwrap()
        );
    } else {
        println!("architecture: {arch}");
        println!(
            "{:<14} {:>6} {:>7} {:>7} {:>7} {:>6} {:>12} {:>7}",
            "name", "qubits", "t_count", "t_depth", "degree", "swaps", "serial_depth", "cnots"
        );
        for r in &rows {
            println!(
                "{:<14} {:>6} {:>7} {:>7} {:>7} {:>6} {:>12} {:>7}",
                r.name,
                r.qubits,
                r.t_count,
                r.t_depth,
                r.max_degree,
                r.swaps,
                r.routed_depth_serial,
                r.routed_cnots
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_selfcheck() -> Result<ExitCode, String> {
    let results = selfcheck::run_all();
    let mut all_ok = true;
    for r in &results {
        match &r.outcome {
            Ok(()) => println!("{} {:>2}. {}", paint("[PASS]", "32"), r.id, r.name),
            Err(e) => {
                all_ok = false;
                println!("{} {:>2}. {}: {e}", paint("[FAIL]", "31"), r.id, r.name);
            }
        }
    }
    if all_ok {
        println!("{} checks passed", results.len());
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}
