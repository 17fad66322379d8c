//! Phase polynomials of {CNOT, X, Z, S, S†, T, T†} circuits.
//!
//! A circuit from that gate set acts as a permutation of basis states
//! (tracked per wire as an affine GF(2) functional of the inputs) times a
//! diagonal of eighth roots of unity. The diagonal is `ω^{p(x)}` where
//! `p` is a sum of affine parities with coefficients mod 8: the phase
//! polynomial. Reference polynomials for CCZ and the controlled-S gate
//! live here too; equality of polynomials is what lets circuit identities
//! be checked without touching matrices.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::circuit::{Circuit, Gate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhasePolyError {
    #[error(
        "gate {0} at position {1} is outside the extraction domain (CNOT, X, Z, S, S†, T, T†)"
    )]
    UnsupportedGate(String, usize),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("initial wire state references variable {0} but only {1} variables are declared")]
    BadInit(usize, usize),
}

/// An affine GF(2) functional of the circuit inputs: a parity of input
/// variables plus an optional constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineParity {
    /// Bit `i` set means variable `x_{i+1}` participates.
    pub vars: u32,
    pub constant: bool,
}

impl AffineParity {
    pub fn zero() -> Self {
        AffineParity {
            vars: 0,
            constant: false,
        }
    }

    pub fn var(i: usize) -> Self {
        AffineParity {
            vars: 1 << i,
            constant: false,
        }
    }

    /// Parity of the given variables, e.g. `parity(&[0, 1])` = x1⊕x2.
    pub fn parity(vars: &[usize]) -> Self {
        let mut mask = 0u32;
        for v in vars {
            mask |= 1 << v;
        }
        AffineParity {
            vars: mask,
            constant: false,
        }
    }

    pub fn xor(self, other: AffineParity) -> AffineParity {
        AffineParity {
            vars: self.vars ^ other.vars,
            constant: self.constant ^ other.constant,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.vars == 0
    }

    /// Evaluates at an assignment given as a bitmask (bit `i` = value of x_{i+1}).
    pub fn eval(&self, assignment: u32) -> bool {
        ((self.vars & assignment).count_ones() % 2 == 1) ^ self.constant
    }
}

impl fmt::Display for AffineParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = (0..32)
            .filter(|i| self.vars >> i & 1 == 1)
            .map(|i| format!("x{}", i + 1))
            .collect();
        if self.constant {
            parts.push("1".to_string());
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Per-wire affine functionals describing each wire's value in terms of
/// the circuit inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearWireState {
    pub wires: Vec<AffineParity>,
    pub n_vars: usize,
}

impl LinearWireState {
    /// Evaluates every wire at a variable assignment, returned as a
    /// bitmask in wire order (bit i = wire i's value).
    pub fn eval(&self, assignment: u32) -> u64 {
        let mut out = 0u64;
        for (i, w) in self.wires.iter().enumerate() {
            if w.eval(assignment) {
                out |= 1 << i;
            }
        }
        out
    }
}

/// A sum of affine parities with coefficients mod 8, plus a global phase
/// exponent. Keys are normalized: a term on `1⊕ℓ` is folded into the
/// complementary term on `ℓ` and the global phase, so stored keys are
/// plain nonzero parities and equal polynomials compare field-by-field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhasePolynomial {
    n_vars: usize,
    terms: BTreeMap<AffineParity, u8>,
    global: u8,
}

impl PhasePolynomial {
    pub fn new(n_vars: usize) -> Self {
        PhasePolynomial {
            n_vars,
            terms: BTreeMap::new(),
            global: 0,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn global_phase(&self) -> u8 {
        self.global
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, parity: AffineParity) -> u8 {
        self.terms.get(&parity).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (AffineParity, u8)> + '_ {
        self.terms.iter().map(|(p, c)| (*p, *c))
    }

    /// Adds `coeff·ℓ(x)` for an affine `ℓ`, normalizing the key:
    /// `c·(1⊕ℓ) = c − c·ℓ` and purely constant terms go to the global phase.
    pub fn add_term(&mut self, parity: AffineParity, coeff: u8) {
        let coeff = coeff % 8;
        if coeff == 0 {
            return;
        }
        if parity.is_constant() {
            if parity.constant {
                self.global = (self.global + coeff) % 8;
            }
            return;
        }
        let (key, coeff) = if parity.constant {
            self.global = (self.global + coeff) % 8;
            (
                AffineParity {
                    vars: parity.vars,
                    constant: false,
                },
                (8 - coeff) % 8,
            )
        } else {
            (parity, coeff)
        };
        let e = self.terms.entry(key).or_insert(0);
        *e = (*e + coeff) % 8;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    /// `p(x)` mod 8 including the global phase, for a variable assignment.
    pub fn eval(&self, assignment: u32) -> u8 {
        let mut sum = self.global as u32;
        for (parity, coeff) in &self.terms {
            if parity.eval(assignment) {
                sum += *coeff as u32;
            }
        }
        (sum % 8) as u8
    }

    /// The same polynomial viewed over a wider variable set.
    pub fn lifted(&self, n_vars: usize) -> PhasePolynomial {
        assert!(n_vars >= self.n_vars);
        PhasePolynomial {
            n_vars,
            terms: self.terms.clone(),
            global: self.global,
        }
    }

    /// Coefficientwise sum mod 8; errors on variable-count mismatch.
    pub fn sum(&self, other: &PhasePolynomial) -> Result<PhasePolynomial, PhasePolyError> {
        if self.n_vars != other.n_vars {
            return Err(PhasePolyError::VariableMismatch(self.n_vars, other.n_vars));
        }
        let mut out = self.clone();
        out.global = (out.global + other.global) % 8;
        for (p, c) in &other.terms {
            out.add_term(*p, *c);
        }
        Ok(out)
    }

    /// Exact map equality mod 8; errors on variable-count mismatch.
    pub fn equal(&self, other: &PhasePolynomial) -> Result<bool, PhasePolyError> {
        if self.n_vars != other.n_vars {
            return Err(PhasePolyError::VariableMismatch(self.n_vars, other.n_vars));
        }
        Ok(self == other)
    }
}

impl fmt::Display for PhasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.global != 0 {
            parts.push(format!("{}", self.global));
        }
        for (parity, coeff) in &self.terms {
            parts.push(format!("{coeff}·({parity})"));
        }
        if parts.is_empty() {
            write!(f, "0 [mod 8]")
        } else {
            write!(f, "{} [mod 8]", parts.join(" + "))
        }
    }
}

/// Extracts the phase polynomial and final wire state of a circuit in
/// the extraction domain, starting from the given per-wire affine
/// initial values (`AffineParity::var(i)` for inputs, `zero()` for
/// fresh ancillae).
pub fn extract(
    c: &Circuit,
    init: &[AffineParity],
    n_vars: usize,
) -> Result<(PhasePolynomial, LinearWireState), PhasePolyError> {
    assert_eq!(init.len(), c.n_qubits(), "one initial value per wire");
    for w in init {
        if n_vars < 32 && w.vars >> n_vars != 0 {
            let bad = (31 - w.vars.leading_zeros()) as usize;
            return Err(PhasePolyError::BadInit(bad, n_vars));
        }
    }
    let mut wires: Vec<AffineParity> = init.to_vec();
    let mut poly = PhasePolynomial::new(n_vars);
    for (idx, g) in c.gates().iter().enumerate() {
        match g {
            Gate::MultiCnot { control, targets } => {
                let ctrl = wires[*control];
                for t in targets {
                    wires[*t] = wires[*t].xor(ctrl);
                }
            }
            Gate::X(q) => wires[*q].constant = !wires[*q].constant,
            Gate::T(q) => poly.add_term(wires[*q], 1),
            Gate::Tdg(q) => poly.add_term(wires[*q], 7),
            Gate::S(q) => poly.add_term(wires[*q], 2),
            Gate::Sdg(q) => poly.add_term(wires[*q], 6),
            Gate::Z(q) => poly.add_term(wires[*q], 4),
            other => {
                return Err(PhasePolyError::UnsupportedGate(format!("{other:?}"), idx));
            }
        }
    }
    Ok((poly, LinearWireState { wires, n_vars }))
}

/// Convenience initial state: the first qubits are the variables
/// `x1..x<n_vars>` in order, the rest are fresh zero ancillae.
pub fn vars_then_zeros(n_vars: usize, n_qubits: usize) -> Vec<AffineParity> {
    (0..n_qubits)
        .map(|i| {
            if i < n_vars {
                AffineParity::var(i)
            } else {
                AffineParity::zero()
            }
        })
        .collect()
}

/// The CCZ phase polynomial over (x1, x2, x3):
/// `x1 + x2 + x3 − (x1⊕x2) − (x1⊕x3) − (x2⊕x3) + (x1⊕x2⊕x3)`,
/// i.e. `4·x1·x2·x3` expanded into the parity basis.
pub fn ccz_poly() -> PhasePolynomial {
    let mut p = PhasePolynomial::new(3);
    p.add_term(AffineParity::var(0), 1);
    p.add_term(AffineParity::var(1), 1);
    p.add_term(AffineParity::var(2), 1);
    p.add_term(AffineParity::parity(&[0, 1]), 7);
    p.add_term(AffineParity::parity(&[0, 2]), 7);
    p.add_term(AffineParity::parity(&[1, 2]), 7);
    p.add_term(AffineParity::parity(&[0, 1, 2]), 1);
    p
}

/// The controlled-S phase polynomial over (x1, x2):
/// `x1 + x2 − (x1⊕x2)`, i.e. `2·x1·x2` in the parity basis.
pub fn cs_poly() -> PhasePolynomial {
    let mut p = PhasePolynomial::new(2);
    p.add_term(AffineParity::var(0), 1);
    p.add_term(AffineParity::var(1), 1);
    p.add_term(AffineParity::parity(&[0, 1]), 7);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_circuit_extracts_to_nothing() {
        let c = Circuit::new(2);
        let (poly, wires) = extract(&c, &vars_then_zeros(2, 2), 2).unwrap();
        assert_eq!(poly.term_count(), 0);
        assert_eq!(poly.global_phase(), 0);
        assert_eq!(
            wires.wires,
            vec![AffineParity::var(0), AffineParity::var(1)]
        );
    }

    #[test]
    fn cs_core_on_preloaded_parity() {
        // T(c1), T(c2), T†(a) with a already holding x1⊕x2
        let c = Circuit::new(3).t(0).t(1).tdg(2);
        let init = vec![
            AffineParity::var(0),
            AffineParity::var(1),
            AffineParity::parity(&[0, 1]),
        ];
        let (poly, _) = extract(&c, &init, 2).unwrap();
        assert!(poly.equal(&cs_poly()).unwrap());
    }

    #[test]
    fn ccz_poly_values() {
        let p = ccz_poly();
        assert_eq!(p.term_count(), 7);
        assert_eq!(p.eval(0b111), 4); // phase −1 on |111⟩
        assert_eq!(p.eval(0b011), 0); // trivial off |111⟩
        assert_eq!(p.eval(0b000), 0);
        for x in 0..8u32 {
            let expected = if x == 0b111 { 4 } else { 0 };
            assert_eq!(p.eval(x), expected, "x = {x:03b}");
        }
    }

    #[test]
    fn cs_poly_values() {
        let p = cs_poly();
        assert_eq!(p.term_count(), 3);
        assert_eq!(p.eval(0b11), 2); // phase i on |11⟩
        assert_eq!(p.eval(0b01), 0);
        assert_eq!(p.eval(0b10), 0);
        assert_eq!(p.eval(0b00), 0);
    }

    #[test]
    fn poly_equals_itself() {
        let p = ccz_poly();
        assert!(p.equal(&p).unwrap());
        assert!(matches!(
            p.equal(&cs_poly()),
            Err(PhasePolyError::VariableMismatch(3, 2))
        ));
    }

    #[test]
    fn x_gate_flips_the_constant_and_folds_into_global() {
        // X(q0); T(q0): phase term on x1⊕1 = 1 − x1 → global 1, coefficient 7 on x1.
        let c = Circuit::new(1).x(0).t(0);
        let (poly, wires) = extract(&c, &[AffineParity::var(0)], 1).unwrap();
        assert_eq!(poly.global_phase(), 1);
        assert_eq!(poly.coefficient(AffineParity::var(0)), 7);
        assert!(wires.wires[0].constant);
    }

    #[test]
    fn t_on_zero_ancilla_contributes_nothing() {
        let c = Circuit::new(2).t(1);
        let (poly, _) = extract(&c, &vars_then_zeros(1, 2), 1).unwrap();
        assert_eq!(poly.term_count(), 0);
        assert_eq!(poly.global_phase(), 0);
    }

    #[test]
    fn hadamard_is_rejected() {
        let c = Circuit::new(1).h(0);
        let err = extract(&c, &vars_then_zeros(1, 1), 1).unwrap_err();
        assert!(matches!(err, PhasePolyError::UnsupportedGate(_, 0)));
    }

    #[test]
    fn t_and_tdg_cancel() {
        let c = Circuit::new(1).t(0).tdg(0);
        let (poly, _) = extract(&c, &vars_then_zeros(1, 1), 1).unwrap();
        assert_eq!(poly.term_count(), 0);
    }

    #[test]
    fn rendering_matches_documented_format() {
        let p = cs_poly();
        assert_eq!(p.to_string(), "1·(x1) + 1·(x2) + 7·(x1+x2) [mod 8]");
        assert_eq!(PhasePolynomial::new(1).to_string(), "0 [mod 8]");
    }
}
