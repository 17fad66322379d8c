//! OpenQASM 2.0 subset and JSON interchange.
//!
//! QASM 2.0 has no fan-out primitive, so a multi-target CNOT is emitted
//! as consecutive `cx` statements preceded by a `// fanout k` comment and
//! fenced by `barrier` statements; the parser reassembles the group. The
//! JSON form is the lossless native format: roles, fan-out grouping and
//! classical controls all survive a round trip structurally.
//!
//! X-basis measurements are lowered to `h` + `measure` on emission (QASM
//! 2.0 has no native X measurement), so they round-trip to an equivalent
//! channel rather than the identical gate list.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{Circuit, Gate, QubitRole};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QasmError {
    #[error("{line}:{col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("cannot emit gate {0}: only z and cz may be classically controlled in QASM output")]
    UnsupportedClassical(String),
    #[error("JSON schema violation: {0}")]
    Schema(String),
    #[error("JSON syntax: {0}")]
    Json(String),
}

fn perr<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, QasmError> {
    Err(QasmError::Parse {
        line,
        col,
        message: message.into(),
    })
}

// ---------------------------------------------------------------------------
// QASM emission
// ---------------------------------------------------------------------------

/// Emits the OpenQASM 2.0 form of a circuit. Deterministic: LF line
/// endings, one statement per line, `OPENQASM 2.0;` header. Fails only
/// when a classically controlled gate other than Z/CZ is present, since
/// the declared subset restricts `if` to those.
pub fn emit_qasm(c: &Circuit) -> Result<String, QasmError> {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    let labels: Vec<String> = c.roles().iter().map(|r| r.label()).collect();
    let _ = writeln!(out, "// wires: {}", labels.join(" "));
    let _ = writeln!(out, "qreg q[{}];", c.n_qubits());
    if c.n_cbits() > 0 {
        let _ = writeln!(out, "creg c[{}];", c.n_cbits());
    }
    for g in c.gates() {
        emit_gate(&mut out, g, None)?;
    }
    Ok(out)
}

fn emit_gate(out: &mut String, g: &Gate, guard: Option<usize>) -> Result<(), QasmError> {
    if guard.is_some() && !matches!(g, Gate::Z(_) | Gate::Cz(_, _)) {
        return Err(QasmError::UnsupportedClassical(format!("{g:?}")));
    }
    let prefix = match guard {
        Some(bit) => format!("if(c=={}) ", 1u64 << bit),
        None => String::new(),
    };
    match g {
        Gate::H(q) => emit_line(out, &prefix, &format!("h q[{q}];")),
        Gate::X(q) => emit_line(out, &prefix, &format!("x q[{q}];")),
        Gate::Z(q) => emit_line(out, &prefix, &format!("z q[{q}];")),
        Gate::S(q) => emit_line(out, &prefix, &format!("s q[{q}];")),
        Gate::Sdg(q) => emit_line(out, &prefix, &format!("sdg q[{q}];")),
        Gate::T(q) => emit_line(out, &prefix, &format!("t q[{q}];")),
        Gate::Tdg(q) => emit_line(out, &prefix, &format!("tdg q[{q}];")),
        Gate::Cz(a, b) => emit_line(out, &prefix, &format!("cz q[{a}],q[{b}];")),
        Gate::Swap(a, b) => emit_line(out, &prefix, &format!("swap q[{a}],q[{b}];")),
        Gate::MultiCnot { control, targets } => {
            if targets.len() == 1 {
                emit_line(out, &prefix, &format!("cx q[{control}],q[{}];", targets[0]));
            } else {
                let wires: Vec<String> = std::iter::once(*control)
                    .chain(targets.iter().copied())
                    .map(|q| format!("q[{q}]"))
                    .collect();
                let fence = format!("barrier {};", wires.join(","));
                let _ = writeln!(out, "// fanout {}", targets.len());
                let _ = writeln!(out, "{fence}");
                for t in targets {
                    let _ = writeln!(out, "cx q[{control}],q[{t}];");
                }
                let _ = writeln!(out, "{fence}");
            }
        }
        Gate::MeasureZ { qubit, cbit } => {
            emit_line(out, &prefix, &format!("measure q[{qubit}] -> c[{cbit}];"))
        }
        Gate::MeasureX { qubit, cbit } => {
            let _ = writeln!(out, "// x-basis measurement");
            let _ = writeln!(out, "h q[{qubit}];");
            let _ = writeln!(out, "measure q[{qubit}] -> c[{cbit}];");
        }
        Gate::Classical { bit, gate } => emit_gate(out, gate, Some(*bit))?,
    }
    Ok(())
}

fn emit_line(out: &mut String, prefix: &str, stmt: &str) {
    let _ = writeln!(out, "{prefix}{stmt}");
}

// ---------------------------------------------------------------------------
// QASM parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(u64),
    Real(String),
    Str(String),
    Sym(char),
    Arrow,
    EqEq,
    /// Comment text without the leading slashes, at line granularity.
    Comment(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, QasmError> {
    let mut toks = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        let line = li + 1;
        let bytes: Vec<char> = raw_line.chars().collect();
        let mut i = 0usize;
        while i < bytes.len() {
            let c = bytes[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c == '/' && bytes.get(i + 1) == Some(&'/') {
                let comment: String = bytes[i + 2..].iter().collect();
                toks.push(Spanned {
                    tok: Tok::Comment(comment.trim().to_string()),
                    line,
                    col,
                });
                break;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                let ident: String = bytes[start..i].iter().collect();
                toks.push(Spanned {
                    tok: Tok::Ident(ident),
                    line,
                    col,
                });
            } else if c.is_ascii_digit() {
                let start = i;
                let mut is_real = false;
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == '.') {
                    if bytes[i] == '.' {
                        is_real = true;
                    }
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                if is_real {
                    toks.push(Spanned {
                        tok: Tok::Real(text),
                        line,
                        col,
                    });
                } else {
                    match text.parse() {
                        Ok(v) => toks.push(Spanned {
                            tok: Tok::Int(v),
                            line,
                            col,
                        }),
                        Err(_) => return perr(line, col, format!("bad integer literal `{text}`")),
                    }
                }
            } else if c == '"' {
                let start = i + 1;
                let mut j = start;
                while j < bytes.len() && bytes[j] != '"' {
                    j += 1;
                }
                if j == bytes.len() {
                    return perr(line, col, "unterminated string literal");
                }
                toks.push(Spanned {
                    tok: Tok::Str(bytes[start..j].iter().collect()),
                    line,
                    col,
                });
                i = j + 1;
            } else if c == '-' && bytes.get(i + 1) == Some(&'>') {
                toks.push(Spanned {
                    tok: Tok::Arrow,
                    line,
                    col,
                });
                i += 2;
            } else if c == '=' && bytes.get(i + 1) == Some(&'=') {
                toks.push(Spanned {
                    tok: Tok::EqEq,
                    line,
                    col,
                });
                i += 2;
            } else if "[];,()".contains(c) {
                toks.push(Spanned {
                    tok: Tok::Sym(c),
                    line,
                    col,
                });
                i += 1;
            } else {
                return perr(line, col, format!("unexpected character `{c}`"));
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    n_qubits: usize,
    n_cbits: usize,
    roles: Option<Vec<QubitRole>>,
    gates: Vec<Gate>,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn at(&self) -> (usize, usize) {
        self.toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|s| (s.line, s.col))
            .unwrap_or((0, 0))
    }

    fn next(&mut self) -> Option<Spanned> {
        let s = self.toks.get(self.pos).cloned();
        self.pos += 1;
        s
    }

    fn expect_sym(&mut self, c: char) -> Result<(), QasmError> {
        let (l, co) = self.at();
        match self.next() {
            Some(Spanned {
                tok: Tok::Sym(s), ..
            }) if s == c => Ok(()),
            _ => perr(l, co, format!("expected `{c}`")),
        }
    }

    fn expect_int(&mut self) -> Result<u64, QasmError> {
        let (l, co) = self.at();
        match self.next() {
            Some(Spanned {
                tok: Tok::Int(v), ..
            }) => Ok(v),
            _ => perr(l, co, "expected an integer"),
        }
    }

    fn expect_ident(&mut self) -> Result<String, QasmError> {
        let (l, co) = self.at();
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(s), ..
            }) => Ok(s),
            _ => perr(l, co, "expected an identifier"),
        }
    }

    /// `q[3]` → 3, with range check against the declared register.
    fn qubit_arg(&mut self) -> Result<usize, QasmError> {
        let (l, co) = self.at();
        let _name = self.expect_ident()?;
        self.expect_sym('[')?;
        let idx = self.expect_int()? as usize;
        self.expect_sym(']')?;
        if idx >= self.n_qubits {
            return perr(
                l,
                co,
                format!(
                    "qubit index {idx} out of range (qreg has {})",
                    self.n_qubits
                ),
            );
        }
        Ok(idx)
    }

    fn cbit_arg(&mut self) -> Result<usize, QasmError> {
        let (l, co) = self.at();
        let _name = self.expect_ident()?;
        self.expect_sym('[')?;
        let idx = self.expect_int()? as usize;
        self.expect_sym(']')?;
        if idx >= self.n_cbits {
            return perr(
                l,
                co,
                format!(
                    "classical index {idx} out of range (creg has {})",
                    self.n_cbits
                ),
            );
        }
        Ok(idx)
    }

    /// Consumes tokens through the next `;`.
    fn skip_statement(&mut self) {
        while let Some(s) = self.next() {
            if s.tok == Tok::Sym(';') {
                break;
            }
        }
    }
}

/// Parses the supported OpenQASM 2.0 subset back into a circuit.
pub fn parse_qasm(text: &str) -> Result<Circuit, QasmError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        n_qubits: 0,
        n_cbits: 0,
        roles: None,
        gates: Vec::new(),
    };

    // header
    let (l, c) = p.at();
    match p.next() {
        Some(Spanned {
            tok: Tok::Ident(kw),
            ..
        }) if kw == "OPENQASM" => {}
        _ => return perr(l, c, "expected `OPENQASM 2.0;` header"),
    }
    let (l, c) = p.at();
    match p.next() {
        Some(Spanned {
            tok: Tok::Real(v), ..
        }) if v == "2.0" => {}
        _ => return perr(l, c, "only OPENQASM version 2.0 is supported"),
    }
    p.expect_sym(';')?;

    let mut pending_fanout: Option<usize> = None;
    while let Some(spanned) = p.peek().cloned() {
        let (line, col) = (spanned.line, spanned.col);
        match spanned.tok {
            Tok::Comment(text) => {
                p.next();
                if let Some(rest) = text.strip_prefix("fanout ") {
                    match rest.trim().parse::<usize>() {
                        Ok(k) if k >= 1 => pending_fanout = Some(k),
                        _ => return perr(line, col, "malformed fanout annotation"),
                    }
                } else if let Some(rest) = text.strip_prefix("wires:") {
                    let labels: Vec<&str> = rest.split_whitespace().collect();
                    let roles: Option<Vec<QubitRole>> =
                        labels.iter().map(|l| QubitRole::parse(l)).collect();
                    match roles {
                        Some(rs) => p.roles = Some(rs),
                        None => return perr(line, col, "unrecognized wire label in roles comment"),
                    }
                }
            }
            Tok::Ident(kw) => match kw.as_str() {
                "include" => {
                    p.next();
                    p.skip_statement();
                }
                "qreg" => {
                    p.next();
                    let _ = p.expect_ident()?;
                    p.expect_sym('[')?;
                    p.n_qubits = p.expect_int()? as usize;
                    p.expect_sym(']')?;
                    p.expect_sym(';')?;
                }
                "creg" => {
                    p.next();
                    let _ = p.expect_ident()?;
                    p.expect_sym('[')?;
                    p.n_cbits = p.expect_int()? as usize;
                    p.expect_sym(']')?;
                    p.expect_sym(';')?;
                }
                "barrier" => {
                    p.next();
                    p.skip_statement();
                }
                "measure" => {
                    p.next();
                    let q = p.qubit_arg()?;
                    let (l, c) = p.at();
                    match p.next() {
                        Some(Spanned { tok: Tok::Arrow, .. }) => {}
                        _ => return perr(l, c, "expected `->` in measure statement"),
                    }
                    let b = p.cbit_arg()?;
                    p.expect_sym(';')?;
                    p.gates.push(Gate::MeasureZ { qubit: q, cbit: b });
                }
                "if" => {
                    p.next();
                    p.expect_sym('(')?;
                    let _reg = p.expect_ident()?;
                    let (l, c) = p.at();
                    match p.next() {
                        Some(Spanned { tok: Tok::EqEq, .. }) => {}
                        _ => return perr(l, c, "expected `==` in if condition"),
                    }
                    let value = p.expect_int()?;
                    if value == 0 || value & (value - 1) != 0 {
                        return perr(l, c, "only single-bit conditions (powers of two) are supported");
                    }
                    let bit = value.trailing_zeros() as usize;
                    if bit >= p.n_cbits {
                        return perr(l, c, format!("condition bit {bit} out of range"));
                    }
                    p.expect_sym(')')?;
                    let (l, c) = p.at();
                    let name = p.expect_ident()?;
                    let inner = match name.as_str() {
                        "z" => Gate::Z(p.qubit_arg()?),
                        "cz" => {
                            let a = p.qubit_arg()?;
                            p.expect_sym(',')?;
                            let b = p.qubit_arg()?;
                            Gate::Cz(a, b)
                        }
                        other => {
                            return perr(l, c, format!("`if` may only guard z or cz, found `{other}`"))
                        }
                    };
                    p.expect_sym(';')?;
                    p.gates.push(Gate::Classical { bit, gate: Box::new(inner) });
                }
                "cx" => {
                    // possibly the start of an announced fan-out group
                    let want = pending_fanout.take().unwrap_or(1);
                    let mut control = None;
                    let mut targets = Vec::new();
                    for step in 0..want {
                        let (l, c) = p.at();
                        match p.next() {
                            Some(Spanned { tok: Tok::Ident(cx), .. }) if cx == "cx" => {}
                            Some(Spanned { tok: Tok::Ident(b), .. }) if b == "barrier" && step > 0 => {
                                return perr(l, c, "fanout group shorter than announced");
                            }
                            _ => return perr(l, c, "expected `cx` in fanout group"),
                        }
                        let ctl = p.qubit_arg()?;
                        p.expect_sym(',')?;
                        let tgt = p.qubit_arg()?;
                        p.expect_sym(';')?;
                        match control {
                            None => control = Some(ctl),
                            Some(prev) if prev == ctl => {}
                            Some(prev) => {
                                return perr(
                                    l,
                                    c,
                                    format!("fanout group mixes controls q[{prev}] and q[{ctl}]"),
                                )
                            }
                        }
                        targets.push(tgt);
                    }
                    targets.sort_unstable();
                    p.gates.push(Gate::MultiCnot { control: control.unwrap(), targets });
                }
                "h" | "x" | "z" | "s" | "sdg" | "t" | "tdg" => {
                    p.next();
                    let q = p.qubit_arg()?;
                    p.expect_sym(';')?;
                    p.gates.push(match kw.as_str() {
                        "h" => Gate::H(q),
                        "x" => Gate::X(q),
                        "z" => Gate::Z(q),
                        "s" => Gate::S(q),
                        "sdg" => Gate::Sdg(q),
                        "t" => Gate::T(q),
                        _ => Gate::Tdg(q),
                    });
                }
                "cz" | "swap" => {
                    p.next();
                    let a = p.qubit_arg()?;
                    p.expect_sym(',')?;
                    let b = p.qubit_arg()?;
                    p.expect_sym(';')?;
                    if a == b {
                        return perr(line, col, "two-qubit gate needs distinct qubits");
                    }
                    p.gates.push(if kw == "cz" { Gate::Cz(a, b) } else { Gate::Swap(a, b) });
                }
                other => {
                    return perr(line, col, format!(
                        "unsupported gate `{other}` (supported: h x z s sdg t tdg cx cz swap measure barrier if)"
                    ))
                }
            },
            _ => return perr(line, col, "expected a statement"),
        }
    }

    let roles = match p.roles.take() {
        Some(rs) if rs.len() == p.n_qubits => rs,
        _ => (0..p.n_qubits)
            .map(|i| QubitRole::Generic(i as u16))
            .collect(),
    };
    build_circuit(roles, p.gates, p.n_cbits)
}

/// Validating construction shared by both parsers: turns schema issues
/// into errors instead of builder panics.
fn build_circuit(
    roles: Vec<QubitRole>,
    gates: Vec<Gate>,
    n_cbits: usize,
) -> Result<Circuit, QasmError> {
    let labels: std::collections::BTreeSet<String> = roles.iter().map(|r| r.label()).collect();
    if labels.len() != roles.len() {
        return Err(QasmError::Schema("duplicate wire labels".into()));
    }
    let n = roles.len();
    for (i, g) in gates.iter().enumerate() {
        validate_gate(g, i, n, n_cbits, false)?;
    }
    Ok(Circuit::from_gates(roles, gates, n_cbits))
}

fn validate_gate(
    g: &Gate,
    i: usize,
    n_qubits: usize,
    n_cbits: usize,
    nested: bool,
) -> Result<(), QasmError> {
    for q in g.qubits() {
        if q >= n_qubits {
            return Err(QasmError::Schema(format!(
                "gate {i} references qubit {q} of {n_qubits}"
            )));
        }
    }
    match g {
        Gate::MultiCnot { control, targets } => {
            let set: std::collections::BTreeSet<usize> = targets.iter().copied().collect();
            if targets.is_empty() || set.len() != targets.len() || set.contains(control) {
                return Err(QasmError::Schema(format!(
                    "gate {i} has an invalid CNOT target set"
                )));
            }
        }
        Gate::Cz(a, b) | Gate::Swap(a, b) if a == b => {
            return Err(QasmError::Schema(format!(
                "gate {i} needs two distinct qubits"
            )));
        }
        Gate::MeasureX { cbit, .. } | Gate::MeasureZ { cbit, .. } => {
            if nested {
                return Err(QasmError::Schema(format!(
                    "gate {i}: a measurement cannot be classically controlled"
                )));
            }
            if *cbit >= n_cbits {
                return Err(QasmError::Schema(format!(
                    "gate {i} writes classical bit {cbit} of {n_cbits}"
                )));
            }
        }
        Gate::Classical { bit, gate } => {
            if nested {
                return Err(QasmError::Schema(format!(
                    "gate {i}: classical controls cannot nest"
                )));
            }
            if *bit >= n_cbits {
                return Err(QasmError::Schema(format!(
                    "gate {i} reads classical bit {bit} of {n_cbits}"
                )));
            }
            validate_gate(gate, i, n_qubits, n_cbits, true)?;
        }
        _ => {}
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON format
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "gate", rename_all = "snake_case")]
enum WireGate {
    H { qubit: usize },
    X { qubit: usize },
    Z { qubit: usize },
    S { qubit: usize },
    Sdg { qubit: usize },
    T { qubit: usize },
    Tdg { qubit: usize },
    Cz { a: usize, b: usize },
    Swap { a: usize, b: usize },
    Mcx { control: usize, targets: Vec<usize> },
    MeasureX { qubit: usize, cbit: usize },
    MeasureZ { qubit: usize, cbit: usize },
    If { bit: usize, then: Box<WireGate> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct WireCircuit {
    format: String,
    version: u32,
    qubits: Vec<String>,
    cbits: usize,
    gates: Vec<WireGate>,
}

const FORMAT_NAME: &str = "latticetoff-circuit";

fn to_wire(g: &Gate) -> WireGate {
    match g {
        Gate::H(q) => WireGate::H { qubit: *q },
        Gate::X(q) => WireGate::X { qubit: *q },
        Gate::Z(q) => WireGate::Z { qubit: *q },
        Gate::S(q) => WireGate::S { qubit: *q },
        Gate::Sdg(q) => WireGate::Sdg { qubit: *q },
        Gate::T(q) => WireGate::T { qubit: *q },
        Gate::Tdg(q) => WireGate::Tdg { qubit: *q },
        Gate::Cz(a, b) => WireGate::Cz { a: *a, b: *b },
        Gate::Swap(a, b) => WireGate::Swap { a: *a, b: *b },
        Gate::MultiCnot { control, targets } => WireGate::Mcx {
            control: *control,
            targets: targets.clone(),
        },
        Gate::MeasureX { qubit, cbit } => WireGate::MeasureX {
            qubit: *qubit,
            cbit: *cbit,
        },
        Gate::MeasureZ { qubit, cbit } => WireGate::MeasureZ {
            qubit: *qubit,
            cbit: *cbit,
        },
        Gate::Classical { bit, gate } => WireGate::If {
            bit: *bit,
            then: Box::new(to_wire(gate)),
        },
    }
}

fn from_wire(g: &WireGate) -> Gate {
    match g {
        WireGate::H { qubit } => Gate::H(*qubit),
        WireGate::X { qubit } => Gate::X(*qubit),
        WireGate::Z { qubit } => Gate::Z(*qubit),
        WireGate::S { qubit } => Gate::S(*qubit),
        WireGate::Sdg { qubit } => Gate::Sdg(*qubit),
        WireGate::T { qubit } => Gate::T(*qubit),
        WireGate::Tdg { qubit } => Gate::Tdg(*qubit),
        WireGate::Cz { a, b } => Gate::Cz(*a, *b),
        WireGate::Swap { a, b } => Gate::Swap(*a, *b),
        WireGate::Mcx { control, targets } => {
            let mut ts = targets.clone();
            ts.sort_unstable();
            Gate::MultiCnot {
                control: *control,
                targets: ts,
            }
        }
        WireGate::MeasureX { qubit, cbit } => Gate::MeasureX {
            qubit: *qubit,
            cbit: *cbit,
        },
        WireGate::MeasureZ { qubit, cbit } => Gate::MeasureZ {
            qubit: *qubit,
            cbit: *cbit,
        },
        WireGate::If { bit, then } => Gate::Classical {
            bit: *bit,
            gate: Box::new(from_wire(then)),
        },
    }
}

/// Emits the lossless JSON form (pretty-printed, stable field order).
pub fn emit_json(c: &Circuit) -> String {
    let wire = WireCircuit {
        format: FORMAT_NAME.to_string(),
        version: 1,
        qubits: c.roles().iter().map(|r| r.label()).collect(),
        cbits: c.n_cbits(),
        gates: c.gates().iter().map(to_wire).collect(),
    };
    let mut text = serde_json::to_string_pretty(&wire).expect("circuit serialization cannot fail");
    text.push('\n');
    text
}

pub fn parse_json(text: &str) -> Result<Circuit, QasmError> {
    let wire: WireCircuit =
        serde_json::from_str(text).map_err(|e| QasmError::Json(e.to_string()))?;
    if wire.format != FORMAT_NAME {
        return Err(QasmError::Schema(format!(
            "unknown format `{}` (expected `{FORMAT_NAME}`)",
            wire.format
        )));
    }
    if wire.version != 1 {
        return Err(QasmError::Schema(format!(
            "unsupported version {}",
            wire.version
        )));
    }
    let roles: Option<Vec<QubitRole>> = wire.qubits.iter().map(|l| QubitRole::parse(l)).collect();
    let roles = roles.ok_or_else(|| QasmError::Schema("unrecognized wire label".into()))?;
    let gates: Vec<Gate> = wire.gates.iter().map(from_wire).collect();
    build_circuit(roles, gates, wire.cbits)
}

/// Sniffs the format of a circuit file by its first non-blank byte.
pub fn parse_auto(text: &str) -> Result<Circuit, QasmError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_qasm(text)
    }
}
