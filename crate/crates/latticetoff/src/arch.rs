//! Coupling graphs, executability checks, grid embedding, tiling, and a
//! deliberately naive SWAP router.
//!
//! The router is a baseline for cost comparison, not a contribution:
//! greedy, shortest-path, lexicographic tie-breaks, fully deterministic.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::circuit::{Circuit, Gate, QubitRole};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArchError {
    #[error("placement covers {0} qubits but the circuit has {1}")]
    PartialPlacement(usize, usize),
    #[error("placement is not injective or maps outside the graph")]
    BadPlacement,
    #[error("no path between vertices {0} and {1}")]
    Disconnected(usize, usize),
    #[error("embedding search supports at most {0} qubits, circuit has {1}")]
    SearchDomainExceeded(usize, usize),
    #[error("host grid {0}x{1} cannot fit a {2}x{3} tile")]
    HostTooSmall(usize, usize, usize, usize),
    #[error("graph is not a full rectangular grid")]
    NotAGrid,
}

/// Hardware connectivity: vertices carry 2D coordinates (grids use them
/// for rendering and tiling), edges are the allowed two-qubit pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingGraph {
    coords: Vec<(usize, usize)>,
    edges: BTreeSet<(usize, usize)>,
}

impl CouplingGraph {
    /// W×H square lattice; vertex index is `y*w + x`, edges join
    /// unit-distance vertices.
    pub fn grid(w: usize, h: usize) -> Self {
        assert!(w >= 1 && h >= 1);
        let mut coords = Vec::with_capacity(w * h);
        for y in 0..h {
            for x in 0..w {
                coords.push((x, y));
            }
        }
        let mut edges = BTreeSet::new();
        for y in 0..h {
            for x in 0..w {
                let v = y * w + x;
                if x + 1 < w {
                    edges.insert((v, v + 1));
                }
                if y + 1 < h {
                    edges.insert((v, v + w));
                }
            }
        }
        CouplingGraph { coords, edges }
    }

    /// Path graph on n vertices.
    pub fn line(n: usize) -> Self {
        Self::grid(n, 1)
    }

    pub fn n_vertices(&self) -> usize {
        self.coords.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn coord(&self, v: usize) -> (usize, usize) {
        self.coords[v]
    }

    pub fn vertex_at(&self, x: usize, y: usize) -> Option<usize> {
        self.coords.iter().position(|c| *c == (x, y))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.n_vertices())
            .filter(|u| self.has_edge(*u, v))
            .collect();
        out.sort_unstable();
        out
    }

    /// (width, height) if the vertex set is a full rectangle in row-major
    /// order, i.e. the graph came from [`CouplingGraph::grid`].
    pub fn grid_dims(&self) -> Option<(usize, usize)> {
        let w = self.coords.iter().map(|c| c.0).max()? + 1;
        let h = self.coords.iter().map(|c| c.1).max()? + 1;
        if w * h == self.coords.len() && *self == CouplingGraph::grid(w, h) {
            Some((w, h))
        } else {
            None
        }
    }

    /// BFS distances from a source, `usize::MAX` for unreachable vertices.
    fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n_vertices()];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

/// Injective assignment of circuit qubits to graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    map: Vec<usize>,
}

impl Placement {
    pub fn new(map: Vec<usize>, graph: &CouplingGraph) -> Result<Self, ArchError> {
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        if distinct.len() != map.len() || map.iter().any(|v| *v >= graph.n_vertices()) {
            return Err(ArchError::BadPlacement);
        }
        Ok(Placement { map })
    }

    /// The identity-ish default: qubit i on vertex i.
    pub fn trivial(n_qubits: usize, graph: &CouplingGraph) -> Result<Self, ArchError> {
        Self::new((0..n_qubits).collect(), graph)
    }

    pub fn vertex(&self, qubit: usize) -> usize {
        self.map[qubit]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn n_qubits(&self) -> usize {
        self.map.len()
    }
}

/// First gate that cannot run under a placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExecutabilityViolation {
    pub gate_index: usize,
    pub qubits: (usize, usize),
    pub vertices: (usize, usize),
}

/// Checks that every two-qubit interaction lands on a graph edge.
pub fn check_executable(
    c: &Circuit,
    g: &CouplingGraph,
    p: &Placement,
) -> Result<Result<(), ExecutabilityViolation>, ArchError> {
    if p.n_qubits() != c.n_qubits() {
        return Err(ArchError::PartialPlacement(p.n_qubits(), c.n_qubits()));
    }
    for (i, gate) in c.gates().iter().enumerate() {
        for (u, v) in gate.two_qubit_pairs() {
            let (s, t) = (p.vertex(u), p.vertex(v));
            if !g.has_edge(s, t) {
                return Ok(Err(ExecutabilityViolation {
                    gate_index: i,
                    qubits: (u, v),
                    vertices: (s, t),
                }));
            }
        }
    }
    Ok(Ok(()))
}

pub fn is_executable(c: &Circuit, g: &CouplingGraph, p: &Placement) -> Result<bool, ArchError> {
    Ok(check_executable(c, g, p)?.is_ok())
}

/// Largest circuit the brute-force embedding search accepts.
pub const MAX_EMBED_QUBITS: usize = 8;

/// Backtracking search for a placement under which the circuit is
/// executable without SWAPs. Qubits are placed in index order, candidate
/// vertices tried in ascending order, so the result is the
/// lexicographically least valid placement (or `None`).
pub fn find_grid_embedding(c: &Circuit, g: &CouplingGraph) -> Result<Option<Placement>, ArchError> {
    let n = c.n_qubits();
    if n > MAX_EMBED_QUBITS {
        return Err(ArchError::SearchDomainExceeded(MAX_EMBED_QUBITS, n));
    }
    if n > g.n_vertices() {
        return Ok(None);
    }
    let graph = crate::circuit::interaction_graph(c);
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; g.n_vertices()];
    if backtrack(&mut assignment, &mut used, n, &graph, g) {
        return Ok(Some(Placement { map: assignment }));
    }
    Ok(None)
}

fn backtrack(
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
    n: usize,
    interactions: &crate::circuit::InteractionGraph,
    g: &CouplingGraph,
) -> bool {
    if assignment.len() == n {
        return true;
    }
    let q = assignment.len();
    'next: for v in 0..g.n_vertices() {
        if used[v] {
            continue;
        }
        for (prev, pv) in assignment.iter().enumerate() {
            if interactions.has_edge(prev, q) && !g.has_edge(*pv, v) {
                continue 'next;
            }
        }
        assignment.push(v);
        used[v] = true;
        if backtrack(assignment, used, n, interactions, g) {
            return true;
        }
        assignment.pop();
        used[v] = false;
    }
    false
}

/// Replicates a placement given on the 3×2 block (or any full grid)
/// across a larger grid: all axis-aligned translates in row-major order,
/// pairwise vertex-disjoint, ⌊W/bw⌋·⌊H/bh⌋ of them.
pub fn tile(
    base: &Placement,
    block: &CouplingGraph,
    host: &CouplingGraph,
) -> Result<Vec<Placement>, ArchError> {
    let (bw, bh) = block.grid_dims().ok_or(ArchError::NotAGrid)?;
    let (w, h) = host.grid_dims().ok_or(ArchError::NotAGrid)?;
    if w / bw == 0 || h / bh == 0 {
        return Err(ArchError::HostTooSmall(w, h, bw, bh));
    }
    let mut tiles = Vec::new();
    for ty in 0..h / bh {
        for tx in 0..w / bw {
            let map = base
                .as_slice()
                .iter()
                .map(|v| {
                    let (x, y) = block.coord(*v);
                    (ty * bh + y) * w + (tx * bw + x)
                })
                .collect();
            tiles.push(Placement { map });
        }
    }
    Ok(tiles)
}

/// A circuit routed onto hardware: gates re-addressed to physical wires
/// (one wire per graph vertex) with SWAPs inserted where needed.
#[derive(Debug, Clone)]
pub struct RoutingResult {
    /// The routed circuit over one generic wire per graph vertex.
    pub routed: Circuit,
    pub swap_count: usize,
    pub initial: Placement,
    /// Where each circuit qubit ends up after all inserted SWAPs.
    pub final_placement: Placement,
    /// Net content permutation: what started on vertex v ends on
    /// `vertex_permutation[v]`.
    pub vertex_permutation: Vec<usize>,
}

impl RoutingResult {
    /// The routed circuit with every SWAP expanded into its three-CNOT
    /// implementation, for serial cost accounting.
    pub fn serial_cost_view(&self) -> Circuit {
        let mut out =
            Circuit::from_gates(self.routed.roles().to_vec(), vec![], self.routed.n_cbits());
        for g in self.routed.gates() {
            match g {
                Gate::Swap(a, b) => {
                    out.push(Gate::MultiCnot {
                        control: *a,
                        targets: vec![*b],
                    });
                    out.push(Gate::MultiCnot {
                        control: *b,
                        targets: vec![*a],
                    });
                    out.push(Gate::MultiCnot {
                        control: *a,
                        targets: vec![*b],
                    });
                }
                other => out.push(other.clone()),
            }
        }
        out
    }
}

struct Router<'a> {
    graph: &'a CouplingGraph,
    /// qubit -> vertex
    location: Vec<usize>,
    /// vertex -> content tag; tracks the net permutation of wire contents
    content: Vec<usize>,
    gates: Vec<Gate>,
    swap_count: usize,
}

impl<'a> Router<'a> {
    /// Moves the content of `from` one step toward `to` along the
    /// lexicographically least shortest path; repeats until adjacent.
    /// Returns the vertex now holding the moved content.
    fn bring_adjacent(&mut self, from: usize, to: usize) -> Result<usize, ArchError> {
        let dist = self.graph.distances_from(to);
        if dist[from] == usize::MAX {
            return Err(ArchError::Disconnected(from, to));
        }
        let mut at = from;
        while dist[at] > 1 {
            let step = self
                .graph
                .neighbors(at)
                .into_iter()
                .filter(|n| dist[*n] < dist[at])
                .min()
                .expect("BFS distance decreases along some neighbor");
            self.gates.push(Gate::Swap(at.min(step), at.max(step)));
            self.swap_count += 1;
            // whatever logical qubits sit on these vertices move with them
            for loc in &mut self.location {
                if *loc == at {
                    *loc = step;
                } else if *loc == step {
                    *loc = at;
                }
            }
            self.content.swap(at, step);
            at = step;
        }
        Ok(at)
    }

    fn emit(&mut self, gate: Gate, classical_bit: Option<usize>) {
        match classical_bit {
            Some(bit) => self.gates.push(Gate::Classical {
                bit,
                gate: Box::new(gate),
            }),
            None => self.gates.push(gate),
        }
    }

    /// Routes one gate, inserting SWAPs first so that every emitted
    /// two-qubit gate sits on an edge at its moment of execution.
    fn route_gate(&mut self, gate: &Gate, classical_bit: Option<usize>) -> Result<(), ArchError> {
        match gate {
            Gate::H(q) => self.emit(Gate::H(self.location[*q]), classical_bit),
            Gate::X(q) => self.emit(Gate::X(self.location[*q]), classical_bit),
            Gate::Z(q) => self.emit(Gate::Z(self.location[*q]), classical_bit),
            Gate::S(q) => self.emit(Gate::S(self.location[*q]), classical_bit),
            Gate::Sdg(q) => self.emit(Gate::Sdg(self.location[*q]), classical_bit),
            Gate::T(q) => self.emit(Gate::T(self.location[*q]), classical_bit),
            Gate::Tdg(q) => self.emit(Gate::Tdg(self.location[*q]), classical_bit),
            Gate::Cz(a, b) => {
                let s = self.bring_adjacent(self.location[*a], self.location[*b])?;
                self.emit(Gate::Cz(s, self.location[*b]), classical_bit);
            }
            Gate::Swap(a, b) => {
                let s = self.bring_adjacent(self.location[*a], self.location[*b])?;
                self.emit(Gate::Swap(s, self.location[*b]), classical_bit);
            }
            Gate::MultiCnot { control, targets } => {
                // routed pair by pair; fan-out does not survive routing
                for t in targets {
                    let s = self.bring_adjacent(self.location[*control], self.location[*t])?;
                    self.emit(
                        Gate::MultiCnot {
                            control: s,
                            targets: vec![self.location[*t]],
                        },
                        classical_bit,
                    );
                }
            }
            Gate::MeasureX { qubit, cbit } => self.emit(
                Gate::MeasureX {
                    qubit: self.location[*qubit],
                    cbit: *cbit,
                },
                classical_bit,
            ),
            Gate::MeasureZ { qubit, cbit } => self.emit(
                Gate::MeasureZ {
                    qubit: self.location[*qubit],
                    cbit: *cbit,
                },
                classical_bit,
            ),
            Gate::Classical { bit, gate } => self.route_gate(gate, Some(*bit))?,
        }
        Ok(())
    }
}

/// Greedy router: scan gates in order; whenever a two-qubit pair is not
/// on an edge, SWAP the first operand's state along a shortest path
/// (lexicographic tie-break) until the pair is adjacent.
pub fn route_greedy(
    c: &Circuit,
    g: &CouplingGraph,
    p0: &Placement,
) -> Result<RoutingResult, ArchError> {
    if p0.n_qubits() != c.n_qubits() {
        return Err(ArchError::PartialPlacement(p0.n_qubits(), c.n_qubits()));
    }
    let mut router = Router {
        graph: g,
        location: p0.as_slice().to_vec(),
        content: (0..g.n_vertices()).collect(),
        gates: Vec::new(),
        swap_count: 0,
    };
    for gate in c.gates() {
        router.route_gate(gate, None)?;
    }
    let roles = (0..g.n_vertices())
        .map(|i| QubitRole::Generic(i as u16))
        .collect();
    let routed = Circuit::from_gates(roles, router.gates, c.n_cbits());
    let final_placement = Placement {
        map: router.location,
    };
    // content[v] = original vertex whose state now sits on v; invert into
    // "state of vertex u moved to perm[u]".
    let mut vertex_permutation = vec![0usize; g.n_vertices()];
    for (v, orig) in router.content.iter().enumerate() {
        vertex_permutation[*orig] = v;
    }
    Ok(RoutingResult {
        routed,
        swap_count: router.swap_count,
        initial: p0.clone(),
        final_placement,
        vertex_permutation,
    })
}

/// ASCII picture of a grid with qubit labels on their assigned vertices.
pub fn render_grid(g: &CouplingGraph, p: &Placement, labels: &[String]) -> String {
    let (w, h) = match g.grid_dims() {
        Some(dims) => dims,
        None => return String::from("(not a rectangular grid)"),
    };
    let mut cells = vec![String::from("."); w * h];
    for (q, v) in p.as_slice().iter().enumerate() {
        cells[*v] = labels.get(q).cloned().unwrap_or_else(|| format!("q{q}"));
    }
    let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    for y in 0..h {
        let row: Vec<String> = (0..w)
            .map(|x| format!("{:width$}", cells[y * w + x]))
            .collect();
        out.push_str(row.join(" ").trim_end());
        out.push('\n');
    }
    out
}
