//! Exact arithmetic for Clifford+T amplitudes.
//!
//! Every amplitude that appears in a Clifford+T circuit is of the form
//! `(a + b·ω + c·ω² + d·ω³) / √2^k` with integer coefficients and
//! `ω = e^{iπ/4}`. [`RingScalar`] stores exactly that, always in canonical
//! form (minimal `k`), so equality is plain field comparison and no
//! floating-point tolerance is ever needed. [`UnitaryMatrix`] is dense
//! linear algebra over these scalars, sized for desk-scale circuits.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Errors from matrix-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

#[inline]
fn checked(v: Option<i64>) -> i64 {
    v.expect("ring coefficient overflow: circuit is outside the supported desk scale")
}

/// An element of `ℤ[ω]/√2^k` with ω = e^{iπ/4}, kept in canonical form.
///
/// Canonical means `k` is minimal: the numerator is divisible by √2 in
/// `ℤ[ω]` iff `a+c` and `b+d` are both even (because 1/√2 = (ω−ω³)/2), and
/// that division is applied until it no longer goes through. Zero is
/// stored with `k = 0`. Two scalars are equal as complex numbers iff all
/// five fields match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingScalar {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    k: u32,
}

impl RingScalar {
    /// Builds `(a + b·ω + c·ω² + d·ω³)/√2^k` and canonicalizes it.
    pub fn from_coeffs(a: i64, b: i64, c: i64, d: i64, k: u32) -> Self {
        let mut s = RingScalar { a, b, c, d, k };
        s.normalize();
        s
    }

    pub fn zero() -> Self {
        RingScalar {
            a: 0,
            b: 0,
            c: 0,
            d: 0,
            k: 0,
        }
    }

    pub fn one() -> Self {
        RingScalar {
            a: 1,
            b: 0,
            c: 0,
            d: 0,
            k: 0,
        }
    }

    /// ω^p for any integer power, reduced via ω⁴ = −1.
    pub fn omega_pow(p: i64) -> Self {
        let p = p.rem_euclid(8) as usize;
        let mut co = [0i64; 4];
        if p < 4 {
            co[p] = 1;
        } else {
            co[p - 4] = -1;
        }
        RingScalar {
            a: co[0],
            b: co[1],
            c: co[2],
            d: co[3],
            k: 0,
        }
    }

    /// i = ω².
    pub fn i() -> Self {
        Self::omega_pow(2)
    }

    /// √2^p for any integer p; negative powers go into the denominator.
    pub fn sqrt2_pow(p: i32) -> Self {
        if p >= 0 {
            // √2 = ω − ω³
            let mut s = Self::one();
            for _ in 0..p {
                s = s * RingScalar::from_coeffs(0, 1, 0, -1, 0);
            }
            s
        } else {
            RingScalar::from_coeffs(1, 0, 0, 0, (-p) as u32)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Raw fields `(a, b, c, d, k)` of the canonical form.
    pub fn coeffs(&self) -> (i64, i64, i64, i64, u32) {
        (self.a, self.b, self.c, self.d, self.k)
    }

    /// Complex conjugate: ω ↦ ω̄ = −ω³ (k is real and unchanged).
    pub fn conj(&self) -> Self {
        // Conjugation preserves the canonical-form parities, no renormalize needed.
        RingScalar {
            a: self.a,
            b: -self.d,
            c: -self.c,
            d: -self.b,
            k: self.k,
        }
    }

    /// |x|² as an exact ring element (always real and non-negative).
    pub fn norm_sqr(&self) -> Self {
        *self * self.conj()
    }

    /// Floating-point shadow of the exact value, for cross-checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        let re = self.a as f64 + (self.b as f64 - self.d as f64) * inv;
        let im = self.c as f64 + (self.b as f64 + self.d as f64) * inv;
        let scale = 2f64.powi(-(self.k as i32)).sqrt();
        (re * scale, im * scale)
    }

    /// Divisibility rule: the numerator is divisible by √2 in `ℤ[ω]`
    /// iff a+c and b+d are both even.
    fn divisible_by_sqrt2(&self) -> bool {
        (self.a + self.c) % 2 == 0 && (self.b + self.d) % 2 == 0
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.divisible_by_sqrt2() {
            // x/√2 = ((b−d) + (a+c)ω + (b+d)ω² + (c−a)ω³)/2
            let (a, b, c, d) = (self.a, self.b, self.c, self.d);
            self.a = (b - d) / 2;
            self.b = (a + c) / 2;
            self.c = (b + d) / 2;
            self.d = (c - a) / 2;
            self.k -= 1;
        }
    }

    /// Multiplies the numerator by √2 = ω − ω³ (k unchanged).
    fn numerator_times_sqrt2(&self) -> RingScalar {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        RingScalar {
            a: checked(b.checked_sub(d)),
            b: checked(a.checked_add(c)),
            c: checked(b.checked_add(d)),
            d: checked(c.checked_sub(a)),
            k: self.k,
        }
    }
}

impl Add for RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: RingScalar) -> RingScalar {
        // Bring both to the larger k, then add componentwise.
        let (mut lo, hi) = if self.k <= rhs.k {
            (self, rhs)
        } else {
            (rhs, self)
        };
        while lo.k < hi.k {
            lo = lo.numerator_times_sqrt2();
            lo.k += 1;
        }
        let mut s = RingScalar {
            a: checked(lo.a.checked_add(hi.a)),
            b: checked(lo.b.checked_add(hi.b)),
            c: checked(lo.c.checked_add(hi.c)),
            d: checked(lo.d.checked_add(hi.d)),
            k: hi.k,
        };
        s.normalize();
        s
    }
}

impl Sub for RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: RingScalar) -> RingScalar {
        self + (-rhs)
    }
}

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        RingScalar {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
            k: self.k,
        }
    }
}

impl Mul for RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: RingScalar) -> RingScalar {
        let x = [self.a, self.b, self.c, self.d];
        let y = [rhs.a, rhs.b, rhs.c, rhs.d];
        let mut out = [0i64; 4];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                let p = checked(xi.checked_mul(yj));
                let pos = i + j;
                if pos < 4 {
                    out[pos] = checked(out[pos].checked_add(p));
                } else {
                    // ω⁴ = −1
                    out[pos - 4] = checked(out[pos - 4].checked_sub(p));
                }
            }
        }
        let mut s = RingScalar {
            a: out[0],
            b: out[1],
            c: out[2],
            d: out[3],
            k: self.k + rhs.k,
        };
        s.normalize();
        s
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (coeff, sym) in [
            (self.a, ""),
            (self.b, "·w"),
            (self.c, "·w^2"),
            (self.d, "·w^3"),
        ] {
            if coeff != 0 {
                if sym.is_empty() {
                    parts.push(format!("{coeff}"));
                } else {
                    parts.push(format!("{coeff}{sym}"));
                }
            }
        }
        let num = parts.join(" + ");
        if self.k == 0 {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/sqrt2^{}", self.k)
        }
    }
}

/// Dense square matrix of [`RingScalar`] over `n` qubits (2^n × 2^n).
///
/// Basis convention (fixed project-wide): qubit 0 is the most significant
/// bit of the basis index, so `kron(A, B)` applies `A` to the lower-index
/// qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryMatrix {
    dim: usize,
    entries: Vec<RingScalar>,
}

impl UnitaryMatrix {
    pub fn zeros(dim: usize) -> Self {
        UnitaryMatrix {
            dim,
            entries: vec![RingScalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = RingScalar::one();
        }
        m
    }

    /// Builds a matrix from rows of `(a, b, c, d, k)` coefficient tuples.
    pub fn from_rows(rows: &[Vec<RingScalar>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix rows must be square");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = *v;
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Writes one column (used by the simulator when building circuit unitaries).
    pub fn set_column(&mut self, col: usize, values: &[RingScalar]) {
        assert_eq!(values.len(), self.dim);
        for (row, v) in values.iter().enumerate() {
            self[(row, col)] = *v;
        }
    }

    pub fn column(&self, col: usize) -> Vec<RingScalar> {
        (0..self.dim).map(|row| self[(row, col)]).collect()
    }

    pub fn mat_mul(&self, rhs: &UnitaryMatrix) -> Result<UnitaryMatrix, RingError> {
        if self.dim != rhs.dim {
            return Err(RingError::DimensionMismatch(
                self.dim, self.dim, rhs.dim, rhs.dim,
            ));
        }
        let mut out = UnitaryMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for l in 0..self.dim {
                let x = self[(i, l)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let y = rhs[(l, j)];
                    if y.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)] + x * y;
                }
            }
        }
        Ok(out)
    }

    pub fn mat_kron(&self, rhs: &UnitaryMatrix) -> UnitaryMatrix {
        let dim = self.dim * rhs.dim;
        let mut out = UnitaryMatrix::zeros(dim);
        for i1 in 0..self.dim {
            for j1 in 0..self.dim {
                let x = self[(i1, j1)];
                if x.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.dim {
                    for j2 in 0..rhs.dim {
                        let y = rhs[(i2, j2)];
                        if !y.is_zero() {
                            out[(i1 * rhs.dim + i2, j1 * rhs.dim + j2)] = x * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn mat_dagger(&self) -> UnitaryMatrix {
        let mut out = UnitaryMatrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: RingScalar) -> UnitaryMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = *e * s;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == UnitaryMatrix::identity(self.dim)
    }
}

impl std::ops::Index<(usize, usize)> for UnitaryMatrix {
    type Output = RingScalar;
    fn index(&self, (i, j): (usize, usize)) -> &RingScalar {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for UnitaryMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RingScalar {
        &mut self.entries[i * self.dim + j]
    }
}

impl fmt::Display for UnitaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(a: i64, b: i64, c: i64, d: i64, k: u32) -> RingScalar {
        RingScalar::from_coeffs(a, b, c, d, k)
    }

    #[test]
    fn omega_times_omega_cubed_is_minus_one() {
        let w = RingScalar::omega_pow(1);
        let w3 = RingScalar::omega_pow(3);
        assert_eq!(w * w3, s(-1, 0, 0, 0, 0));
    }

    #[test]
    fn omega_squared_squared_is_minus_one() {
        let w2 = RingScalar::omega_pow(2);
        assert_eq!(w2 * w2, s(-1, 0, 0, 0, 0));
    }

    #[test]
    fn inv_sqrt2_squared_is_half() {
        let inv = RingScalar::sqrt2_pow(-1);
        let half = inv * inv;
        // 1/2 in canonical form keeps k = 2 with a = 1.
        assert_eq!(half.coeffs(), (1, 0, 0, 0, 2));
        // The same value fed in as (2,0,0,0)/√2⁴ reduces to the same form.
        assert_eq!(s(2, 0, 0, 0, 4), half);
        let (re, im) = half.to_complex();
        assert!((re - 0.5).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn normalize_divides_out_sqrt2() {
        // (2 + 2ω)/√2² = 1 + ω
        assert_eq!(s(2, 2, 0, 0, 2), s(1, 1, 0, 0, 0));
        // all-zero numerator collapses to k = 0
        assert_eq!(s(0, 0, 0, 0, 3).coeffs(), (0, 0, 0, 0, 0));
        // already canonical stays put
        assert_eq!(s(1, 0, 0, 0, 0).coeffs(), (1, 0, 0, 0, 0));
    }

    #[test]
    fn conjugation_and_norm() {
        let w = RingScalar::omega_pow(1);
        assert_eq!(w.conj(), RingScalar::omega_pow(7));
        assert_eq!(w.norm_sqr(), RingScalar::one());
        let x = s(1, 2, -1, 3, 3);
        let n = x.norm_sqr();
        let (re, im) = n.to_complex();
        let (xr, xi) = x.to_complex();
        assert!((re - (xr * xr + xi * xi)).abs() < 1e-9);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn sqrt2_powers_multiply_out() {
        assert_eq!(RingScalar::sqrt2_pow(2), s(2, 0, 0, 0, 0));
        assert_eq!(RingScalar::sqrt2_pow(-2), s(1, 0, 0, 0, 2));
        assert_eq!(
            RingScalar::sqrt2_pow(1) * RingScalar::sqrt2_pow(-1),
            RingScalar::one()
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(s(0, 0, 0, 0, 0).to_string(), "0");
        assert_eq!(s(1, 1, 0, 0, 0).to_string(), "1 + 1·w");
        assert_eq!(s(1, 0, 0, -1, 1).to_string(), "(1 + -1·w^3)/sqrt2^1");
    }

    #[test]
    fn h_squared_is_identity() {
        let inv = RingScalar::sqrt2_pow(-1);
        let h = UnitaryMatrix::from_rows(&[vec![inv, inv], vec![inv, -inv]]);
        assert!(h.mat_mul(&h).unwrap().is_identity());
        assert!(h.mat_mul(&h.mat_dagger()).unwrap().is_identity());
    }

    #[test]
    fn t_times_t_dagger_is_identity() {
        let t = UnitaryMatrix::from_rows(&[
            vec![RingScalar::one(), RingScalar::zero()],
            vec![RingScalar::zero(), RingScalar::omega_pow(1)],
        ]);
        assert!(t.mat_mul(&t.mat_dagger()).unwrap().is_identity());
    }

    #[test]
    fn kron_follows_basis_convention() {
        // kron(I, X) must act on the least-significant qubit (qubit 1 of 2).
        let x = UnitaryMatrix::from_rows(&[
            vec![RingScalar::zero(), RingScalar::one()],
            vec![RingScalar::one(), RingScalar::zero()],
        ]);
        let ix = UnitaryMatrix::identity(2).mat_kron(&x);
        // |00⟩ (index 0) must map to |01⟩ (index 1).
        assert_eq!(ix[(1, 0)], RingScalar::one());
        assert_eq!(ix[(0, 0)], RingScalar::zero());
        // |10⟩ (index 2) must map to |11⟩ (index 3).
        assert_eq!(ix[(3, 2)], RingScalar::one());
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = UnitaryMatrix::identity(2);
        let b = UnitaryMatrix::identity(4);
        assert!(a.mat_mul(&b).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = RingScalar> {
        (-50i64..50, -50i64..50, -50i64..50, -50i64..50, 0u32..5)
            .prop_map(|(a, b, c, d, k)| RingScalar::from_coeffs(a, b, c, d, k))
    }

    proptest! {
        #[test]
        fn mul_is_associative(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
        }

        #[test]
        fn mul_distributes_over_add(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }

        #[test]
        fn add_is_commutative_and_associative(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!((x + y) + z, x + (y + z));
        }

        #[test]
        fn normalize_is_idempotent_and_value_preserving(
            a in -100i64..100, b in -100i64..100, c in -100i64..100, d in -100i64..100, k in 0u32..6
        ) {
            let canonical = RingScalar::from_coeffs(a, b, c, d, k);
            // idempotent: re-canonicalizing the canonical fields changes nothing
            let (ca, cb, cc, cd, ck) = canonical.coeffs();
            prop_assert_eq!(RingScalar::from_coeffs(ca, cb, cc, cd, ck), canonical);
            // value preserving: float shadow of the raw input agrees to 1e-12
            let inv = std::f64::consts::FRAC_1_SQRT_2;
            let scale = 2f64.powi(-(k as i32)).sqrt();
            let raw_re = (a as f64 + (b as f64 - d as f64) * inv) * scale;
            let raw_im = (c as f64 + (b as f64 + d as f64) * inv) * scale;
            let (re, im) = canonical.to_complex();
            prop_assert!((re - raw_re).abs() <= 1e-12);
            prop_assert!((im - raw_im).abs() <= 1e-12);
        }

        #[test]
        fn conj_is_involutive(x in arb_scalar()) {
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}
