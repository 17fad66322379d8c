//! Circuit intermediate representation, ASAP layering, and cost metrics.
//!
//! The multi-target CNOT is a first-class gate here: one control fanning
//! out to several targets occupies all of its wires for exactly one time
//! step. That convention is what makes fan-out-friendly depth figures
//! (e.g. a depth-8 Toffoli with 6 CNOT steps) reproducible; the serial
//! view, where every control–target pair costs a step of its own, is
//! reported alongside for hardware without fan-out.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("circuit contains a measurement or classical control and cannot be inverted")]
    NotInvertible,
}

/// Role of a wire within a named construction.
///
/// Labels (`c1`, `t`, `a2`, `q5`, …) must be unique within a circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QubitRole {
    /// Control input, labeled `c1`, `c2`, …
    Control(u8),
    /// The (unique) target wire, labeled `t`.
    Target,
    /// Helper wire initialized to |0⟩, labeled `a1`, `a2`, …
    Ancilla(u8),
    /// Unlabeled wire `q<i>` where `i` is the qubit index.
    Generic(u16),
}

impl QubitRole {
    pub fn label(&self) -> String {
        match self {
            QubitRole::Control(n) => format!("c{n}"),
            QubitRole::Target => "t".to_string(),
            QubitRole::Ancilla(n) => format!("a{n}"),
            QubitRole::Generic(i) => format!("q{i}"),
        }
    }

    /// Parses a role label as produced by [`QubitRole::label`].
    pub fn parse(label: &str) -> Option<QubitRole> {
        if label == "t" {
            return Some(QubitRole::Target);
        }
        let tail = label.get(1..)?;
        match label.as_bytes().first()? {
            b'c' => tail.parse().ok().map(QubitRole::Control),
            b'a' => tail.parse().ok().map(QubitRole::Ancilla),
            b'q' => tail.parse().ok().map(QubitRole::Generic),
            _ => None,
        }
    }

    pub fn is_ancilla(&self) -> bool {
        matches!(self, QubitRole::Ancilla(_))
    }
}

/// A single circuit operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Cz(usize, usize),
    Swap(usize, usize),
    /// One control fanning out to one or more targets in a single step.
    /// Targets are kept sorted; a plain CNOT is the one-target case.
    MultiCnot {
        control: usize,
        targets: Vec<usize>,
    },
    MeasureX {
        qubit: usize,
        cbit: usize,
    },
    MeasureZ {
        qubit: usize,
        cbit: usize,
    },
    /// Applies the inner gate iff the classical bit is 1.
    Classical {
        bit: usize,
        gate: Box<Gate>,
    },
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q) => vec![*q],
            Gate::Cz(a, b) | Gate::Swap(a, b) => vec![*a, *b],
            Gate::MultiCnot { control, targets } => {
                let mut qs = vec![*control];
                qs.extend_from_slice(targets);
                qs
            }
            Gate::MeasureX { qubit, .. } | Gate::MeasureZ { qubit, .. } => vec![*qubit],
            Gate::Classical { gate, .. } => gate.qubits(),
        }
    }

    pub fn is_t(&self) -> bool {
        match self {
            Gate::T(_) | Gate::Tdg(_) => true,
            Gate::Classical { gate, .. } => gate.is_t(),
            _ => false,
        }
    }

    pub fn is_measurement(&self) -> bool {
        matches!(self, Gate::MeasureX { .. } | Gate::MeasureZ { .. })
    }

    pub fn is_multi_cnot(&self) -> bool {
        match self {
            Gate::MultiCnot { .. } => true,
            Gate::Classical { gate, .. } => gate.is_multi_cnot(),
            _ => false,
        }
    }

    /// Interacting qubit pairs: CZ and SWAP endpoints, and (control, target)
    /// for each fan-out branch of a multi-target CNOT.
    pub fn two_qubit_pairs(&self) -> Vec<(usize, usize)> {
        match self {
            Gate::Cz(a, b) | Gate::Swap(a, b) => vec![(*a, *b)],
            Gate::MultiCnot { control, targets } => {
                targets.iter().map(|t| (*control, *t)).collect()
            }
            Gate::Classical { gate, .. } => gate.two_qubit_pairs(),
            _ => vec![],
        }
    }

    /// The inverse gate; `None` for measurements.
    pub fn dagger(&self) -> Option<Gate> {
        Some(match self {
            Gate::T(q) => Gate::Tdg(*q),
            Gate::Tdg(q) => Gate::T(*q),
            Gate::S(q) => Gate::Sdg(*q),
            Gate::Sdg(q) => Gate::S(*q),
            Gate::MeasureX { .. } | Gate::MeasureZ { .. } => return None,
            Gate::Classical { bit, gate } => Gate::Classical {
                bit: *bit,
                gate: Box::new(gate.dagger()?),
            },
            g => g.clone(),
        })
    }
}

/// An immutable gate sequence over role-labeled qubits.
///
/// The builder methods consume and return the circuit, so constructions
/// read as chains; every method validates operand ranges eagerly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    roles: Vec<QubitRole>,
    gates: Vec<Gate>,
    n_cbits: usize,
}

impl Circuit {
    /// A circuit over explicitly role-labeled qubits. Labels must be unique.
    pub fn with_roles(roles: Vec<QubitRole>) -> Self {
        let labels: BTreeSet<String> = roles.iter().map(|r| r.label()).collect();
        assert_eq!(
            labels.len(),
            roles.len(),
            "qubit role labels must be unique"
        );
        Circuit {
            roles,
            gates: Vec::new(),
            n_cbits: 0,
        }
    }

    /// A circuit over `n` generic qubits `q0..q<n-1>`.
    pub fn new(n: usize) -> Self {
        Self::with_roles((0..n).map(|i| QubitRole::Generic(i as u16)).collect())
    }

    pub fn from_gates(roles: Vec<QubitRole>, gates: Vec<Gate>, n_cbits: usize) -> Self {
        let mut c = Circuit::with_roles(roles);
        c.n_cbits = n_cbits;
        for g in gates {
            c.push(g);
        }
        c
    }

    pub fn n_qubits(&self) -> usize {
        self.roles.len()
    }

    pub fn n_cbits(&self) -> usize {
        self.n_cbits
    }

    pub fn roles(&self) -> &[QubitRole] {
        &self.roles
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Indices of all ancilla-role qubits.
    pub fn ancillae(&self) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_ancilla())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn qubit_index(&self, label: &str) -> Option<usize> {
        self.roles.iter().position(|r| r.label() == label)
    }

    fn check_qubit(&self, q: usize) {
        assert!(q < self.n_qubits(), "qubit index {q} out of range");
    }

    pub fn push(&mut self, gate: Gate) {
        for q in gate.qubits() {
            self.check_qubit(q);
        }
        if let Gate::MultiCnot { control, targets } = &gate {
            assert!(
                !targets.is_empty(),
                "multi-target CNOT needs at least one target"
            );
            let set: BTreeSet<usize> = targets.iter().copied().collect();
            assert_eq!(set.len(), targets.len(), "duplicate CNOT target");
            assert!(!set.contains(control), "CNOT control cannot be a target");
        }
        if let Gate::Classical { bit, .. } = &gate {
            assert!(*bit < self.n_cbits, "classical bit {bit} out of range");
        }
        match &gate {
            Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => {
                assert!(*cbit < self.n_cbits, "classical bit {cbit} out of range");
            }
            _ => {}
        }
        self.gates.push(gate);
    }

    pub fn h(mut self, q: usize) -> Self {
        self.push(Gate::H(q));
        self
    }

    pub fn x(mut self, q: usize) -> Self {
        self.push(Gate::X(q));
        self
    }

    pub fn z(mut self, q: usize) -> Self {
        self.push(Gate::Z(q));
        self
    }

    pub fn s(mut self, q: usize) -> Self {
        self.push(Gate::S(q));
        self
    }

    pub fn sdg(mut self, q: usize) -> Self {
        self.push(Gate::Sdg(q));
        self
    }

    pub fn t(mut self, q: usize) -> Self {
        self.push(Gate::T(q));
        self
    }

    pub fn tdg(mut self, q: usize) -> Self {
        self.push(Gate::Tdg(q));
        self
    }

    pub fn cz(mut self, a: usize, b: usize) -> Self {
        assert_ne!(a, b);
        self.push(Gate::Cz(a, b));
        self
    }

    pub fn swap(mut self, a: usize, b: usize) -> Self {
        assert_ne!(a, b);
        self.push(Gate::Swap(a, b));
        self
    }

    pub fn cnot(self, control: usize, target: usize) -> Self {
        self.mcx(control, &[target])
    }

    pub fn mcx(mut self, control: usize, targets: &[usize]) -> Self {
        let mut ts = targets.to_vec();
        ts.sort_unstable();
        self.push(Gate::MultiCnot {
            control,
            targets: ts,
        });
        self
    }

    /// Allocates a classical bit and returns its index.
    pub fn alloc_cbit(&mut self) -> usize {
        self.n_cbits += 1;
        self.n_cbits - 1
    }

    pub fn measure_z(mut self, qubit: usize, cbit: usize) -> Self {
        self.push(Gate::MeasureZ { qubit, cbit });
        self
    }

    pub fn measure_x(mut self, qubit: usize, cbit: usize) -> Self {
        self.push(Gate::MeasureX { qubit, cbit });
        self
    }

    pub fn when(mut self, bit: usize, gate: Gate) -> Self {
        self.push(Gate::Classical {
            bit,
            gate: Box::new(gate),
        });
        self
    }

    pub fn has_measurement(&self) -> bool {
        self.gates.iter().any(|g| g.is_measurement())
    }

    /// Appends `other`'s gates with qubit `i` of `other` mapped to `map[i]`.
    pub fn append_mapped(mut self, other: &Circuit, map: &[usize]) -> Self {
        assert_eq!(map.len(), other.n_qubits());
        for g in &other.gates {
            self.push(remap_gate(g, map));
        }
        self
    }

    /// The dagger circuit: gates reversed and individually inverted.
    pub fn inverse(&self) -> Result<Circuit, CircuitError> {
        let mut gates = Vec::with_capacity(self.gates.len());
        for g in self.gates.iter().rev() {
            gates.push(g.dagger().ok_or(CircuitError::NotInvertible)?);
        }
        Ok(Circuit {
            roles: self.roles.clone(),
            gates,
            n_cbits: self.n_cbits,
        })
    }

    /// Rewrites every multi-target CNOT as consecutive single-target CNOTs.
    pub fn expand_multi_cnots(&self) -> Circuit {
        let mut out = Circuit {
            roles: self.roles.clone(),
            gates: Vec::new(),
            n_cbits: self.n_cbits,
        };
        for g in &self.gates {
            match g {
                Gate::MultiCnot { control, targets } => {
                    for t in targets {
                        out.gates.push(Gate::MultiCnot {
                            control: *control,
                            targets: vec![*t],
                        });
                    }
                }
                other => out.gates.push(other.clone()),
            }
        }
        out
    }
}

fn remap_gate(g: &Gate, map: &[usize]) -> Gate {
    match g {
        Gate::H(q) => Gate::H(map[*q]),
        Gate::X(q) => Gate::X(map[*q]),
        Gate::Z(q) => Gate::Z(map[*q]),
        Gate::S(q) => Gate::S(map[*q]),
        Gate::Sdg(q) => Gate::Sdg(map[*q]),
        Gate::T(q) => Gate::T(map[*q]),
        Gate::Tdg(q) => Gate::Tdg(map[*q]),
        Gate::Cz(a, b) => Gate::Cz(map[*a], map[*b]),
        Gate::Swap(a, b) => Gate::Swap(map[*a], map[*b]),
        Gate::MultiCnot { control, targets } => {
            let mut ts: Vec<usize> = targets.iter().map(|t| map[*t]).collect();
            ts.sort_unstable();
            Gate::MultiCnot {
                control: map[*control],
                targets: ts,
            }
        }
        Gate::MeasureX { qubit, cbit } => Gate::MeasureX {
            qubit: map[*qubit],
            cbit: *cbit,
        },
        Gate::MeasureZ { qubit, cbit } => Gate::MeasureZ {
            qubit: map[*qubit],
            cbit: *cbit,
        },
        Gate::Classical { bit, gate } => Gate::Classical {
            bit: *bit,
            gate: Box::new(remap_gate(gate, map)),
        },
    }
}

/// An ASAP layering of a circuit: each layer touches pairwise-disjoint
/// qubits, and concatenating the layers reproduces a valid topological
/// order of the gate list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    layers: Vec<Vec<Gate>>,
}

impl Schedule {
    pub fn layers(&self) -> &[Vec<Gate>] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Back to a flat circuit, layer by layer (gates within a layer are
    /// already ordered by lowest qubit index).
    pub fn flatten(&self, roles: Vec<QubitRole>, n_cbits: usize) -> Circuit {
        let gates = self.layers.iter().flatten().cloned().collect();
        Circuit::from_gates(roles, gates, n_cbits)
    }
}

/// Greedy as-soon-as-possible layering. Each gate lands in the earliest
/// layer after the last use of any of its qubits (and, for measurements
/// and classically controlled gates, of its classical bit).
pub fn asap_schedule(c: &Circuit) -> Schedule {
    let mut qubit_ready = vec![0usize; c.n_qubits()]; // earliest free layer, 0-based
    let mut cbit_ready = vec![0usize; c.n_cbits()];
    let mut layers: Vec<Vec<Gate>> = Vec::new();
    for g in c.gates() {
        let mut at = 0usize;
        for q in g.qubits() {
            at = at.max(qubit_ready[q]);
        }
        match g {
            Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => {
                at = at.max(cbit_ready[*cbit]);
            }
            Gate::Classical { bit, .. } => {
                at = at.max(cbit_ready[*bit]);
            }
            _ => {}
        }
        if at == layers.len() {
            layers.push(Vec::new());
        }
        layers[at].push(g.clone());
        for q in g.qubits() {
            qubit_ready[q] = at + 1;
        }
        match g {
            Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => cbit_ready[*cbit] = at + 1,
            Gate::Classical { bit, .. } => cbit_ready[*bit] = at + 1,
            _ => {}
        }
    }
    for layer in &mut layers {
        layer.sort_by_key(|g| g.qubits().into_iter().min().unwrap_or(0));
    }
    Schedule { layers }
}

/// Circuit cost summary.
///
/// `depth_multi` counts ASAP layers with each multi-target CNOT as one
/// step. `depth_serial` charges each layer the size of its widest
/// fan-out, i.e. what the same layering costs when every control–target
/// pair must run on its own step. `t_depth` is the usual T-depth: the
/// longest chain of T/T† gates through the dependency order, with all
/// other gates free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metrics {
    pub depth_multi: usize,
    pub depth_serial: usize,
    pub t_count: usize,
    pub t_depth: usize,
    pub cnot_steps: usize,
    pub swap_count: usize,
    pub ancilla_count: usize,
}

impl Metrics {
    pub fn zero() -> Self {
        Metrics {
            depth_multi: 0,
            depth_serial: 0,
            t_count: 0,
            t_depth: 0,
            cnot_steps: 0,
            swap_count: 0,
            ancilla_count: 0,
        }
    }
}

pub fn metrics(c: &Circuit) -> Metrics {
    let schedule = asap_schedule(c);
    let depth_multi = schedule.depth();
    let mut depth_serial = 0usize;
    let mut cnot_steps = 0usize;
    for layer in schedule.layers() {
        let widest_fanout = layer
            .iter()
            .filter_map(|g| match g {
                Gate::MultiCnot { targets, .. } => Some(targets.len()),
                _ => None,
            })
            .max();
        depth_serial += widest_fanout.unwrap_or(1).max(1);
        if layer.iter().any(|g| g.is_multi_cnot()) {
            cnot_steps += 1;
        }
    }
    let t_count = c.gates().iter().filter(|g| g.is_t()).count();
    let swap_count = c
        .gates()
        .iter()
        .filter(|g| matches!(g, Gate::Swap(_, _)))
        .count();

    // T-depth: per-wire level counters; non-T gates propagate the max
    // level across their operands, T/T† gates bump it.
    let mut level = vec![0usize; c.n_qubits()];
    let mut cbit_level = vec![0usize; c.n_cbits()];
    let mut t_depth = 0usize;
    for g in c.gates() {
        let mut m = g.qubits().into_iter().map(|q| level[q]).max().unwrap_or(0);
        match g {
            Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => {
                m = m.max(cbit_level[*cbit]);
            }
            Gate::Classical { bit, .. } => m = m.max(cbit_level[*bit]),
            _ => {}
        }
        if g.is_t() {
            m += 1;
        }
        for q in g.qubits() {
            level[q] = m;
        }
        match g {
            Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => cbit_level[*cbit] = m,
            Gate::Classical { bit, .. } => cbit_level[*bit] = m,
            _ => {}
        }
        t_depth = t_depth.max(m);
    }

    Metrics {
        depth_multi,
        depth_serial,
        t_count,
        t_depth,
        cnot_steps,
        swap_count,
        ancilla_count: c.ancillae().len(),
    }
}

/// Undirected graph of which qubits interact through two-qubit gates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteractionGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl InteractionGraph {
    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, q: usize) -> usize {
        self.edges
            .iter()
            .filter(|(u, v)| *u == q || *v == q)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|q| self.degree(q)).max().unwrap_or(0)
    }
}

impl fmt::Display for InteractionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|(u, v)| format!("{{q{u},q{v}}}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn interaction_graph(c: &Circuit) -> InteractionGraph {
    let mut edges = BTreeSet::new();
    for g in c.gates() {
        for (u, v) in g.two_qubit_pairs() {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    InteractionGraph {
        n: c.n_qubits(),
        edges,
    }
}
