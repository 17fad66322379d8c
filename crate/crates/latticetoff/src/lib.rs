//! Clifford+T circuit toolkit built around a SWAP-free, T-depth-2
//! Toffoli for 2D square-lattice hardware.
//!
//! The crate provides:
//!
//! - exact Clifford+T amplitude arithmetic over `ℤ[ω]/√2^k` ([`ring`]);
//! - a circuit IR with first-class multi-target CNOTs, ASAP layering and
//!   cost metrics ([`circuit`]);
//! - phase-polynomial extraction and the CCZ / controlled-S reference
//!   polynomials ([`phasepoly`]);
//! - an exact unitary/statevector simulator with deterministic
//!   measurement-branch enumeration ([`sim`]);
//! - the construction library: the T-depth-2 Toffoli, the T-depth-1 AND,
//!   the controlled-S gadget and the baselines they are compared with
//!   ([`constructions`]);
//! - coupling graphs, grid embedding, tiling and a greedy SWAP router
//!   ([`arch`]);
//! - OpenQASM 2.0 and JSON interchange ([`qasmio`]).
//!
//! Basis convention everywhere: qubit 0 is the most significant bit of a
//! basis index.

pub mod arch;
pub mod circuit;
pub mod constructions;
pub mod phasepoly;
pub mod qasmio;
pub mod ring;
pub mod selfcheck;
pub mod sim;

pub use circuit::{asap_schedule, interaction_graph, metrics, Circuit, Gate, Metrics, QubitRole};
pub use ring::{RingScalar, UnitaryMatrix};
