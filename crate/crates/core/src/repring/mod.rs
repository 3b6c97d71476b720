//! The representation ring `R(mu_d)` of a finite cyclic group.
//!
//! Every irreducible representation of `mu_d` is a character `C_{lambda^k}`
//! with `lambda = exp(2 pi i / d)`, so a (virtual) representation is just a
//! length-`d` vector of integer multiplicities. Hodge tables and equivariant
//! Hodge-Deligne polynomials are finitely supported maps `(p, q) -> ReprClass`.

mod cyclotomic;
mod table;

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

pub use cyclotomic::{
    cyclotomic_polynomial, decode_characters, decode_cyclotomic, encode_characters, CyclotomicInt, IntPoly,
};
pub use table::{dual_table, poincare_dual_epoly, specialize_weight, tate_twist, EquivPoly, HodgeTable, WeightPoly};

/// The character `C_{lambda^k}` of `mu_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CharacterClass {
    d: usize,
    k: usize,
}

impl CharacterClass {
    /// `k` is reduced modulo `d`.
    pub fn new(d: usize, k: i64) -> Self {
        assert!(d >= 1, "modulus must be positive");
        Self { d, k: k.rem_euclid(d as i64) as usize }
    }

    pub fn trivial(d: usize) -> Self {
        Self::new(d, 0)
    }

    pub fn modulus(&self) -> usize {
        self.d
    }

    pub fn exponent(&self) -> usize {
        self.k
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// `C_alpha -> C_{alpha^{-1}}`.
    pub fn conj(&self) -> Self {
        Self::new(self.d, -(self.k as i64))
    }
}

impl fmt::Display for CharacterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda^{}", self.k)
    }
}

/// A virtual representation of `mu_d`: entry `k` is the multiplicity of `C_{lambda^k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ReprClass {
    mult: Vec<i64>,
}

impl ReprClass {
    pub fn zero(d: usize) -> Self {
        assert!(d >= 1, "modulus must be positive");
        Self { mult: vec![0; d] }
    }

    pub fn from_mult(mult: Vec<i64>) -> Self {
        assert!(!mult.is_empty(), "modulus must be positive");
        Self { mult }
    }

    /// `n` copies of the character `C_{lambda^k}`.
    pub fn character(d: usize, k: i64, n: i64) -> Self {
        let mut r = Self::zero(d);
        r.mult[CharacterClass::new(d, k).exponent()] = n;
        r
    }

    pub fn trivial(d: usize, n: i64) -> Self {
        Self::character(d, 0, n)
    }

    /// The regular representation: every character once.
    pub fn regular(d: usize) -> Self {
        Self { mult: vec![1; d] }
    }

    pub fn modulus(&self) -> usize {
        self.mult.len()
    }

    pub fn mult(&self) -> &[i64] {
        &self.mult
    }

    pub fn get(&self, k: usize) -> i64 {
        self.mult[k % self.mult.len()]
    }

    pub fn set(&mut self, k: usize, value: i64) {
        let d = self.mult.len();
        self.mult[k % d] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn is_genuine(&self) -> bool {
        self.mult.iter().all(|&m| m >= 0)
    }

    /// Virtual dimension, the sum of multiplicities.
    pub fn dim(&self) -> i64 {
        self.mult.iter().sum()
    }

    /// Dimension of the part on which `mu_d` acts nontrivially.
    pub fn dim_nontrivial(&self) -> i64 {
        self.mult[1..].iter().sum()
    }

    /// The dual representation: `mult[k] <- mult[(d - k) mod d]`.
    pub fn involution(&self) -> Self {
        let d = self.mult.len();
        Self { mult: (0..d).map(|k| self.mult[(d - k) % d]).collect() }
    }

    /// Drops the trivial-character component.
    pub fn nontrivial_part(&self) -> Self {
        let mut r = self.clone();
        r.mult[0] = 0;
        r
    }

    /// Trace of `lambda^s` as an element of the cyclotomic integers.
    pub fn trace(&self, s: usize) -> CyclotomicInt {
        let d = self.mult.len();
        let mut coeffs = vec![0i64; d];
        for (k, &m) in self.mult.iter().enumerate() {
            coeffs[(k * s) % d] += m;
        }
        CyclotomicInt::new(coeffs)
    }

    /// Iterator over `(k, multiplicity)` with nonzero multiplicity.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.mult.iter().copied().enumerate().filter(|&(_, m)| m != 0)
    }
}

impl TryFrom<Vec<i64>> for ReprClass {
    type Error = &'static str;

    fn try_from(mult: Vec<i64>) -> std::result::Result<Self, Self::Error> {
        if mult.is_empty() {
            Err("multiplicity vector must be nonempty")
        } else {
            Ok(Self { mult })
        }
    }
}

impl From<ReprClass> for Vec<i64> {
    fn from(r: ReprClass) -> Self {
        r.mult
    }
}

/// Additive involution on `R(mu_d)`, `C_alpha -> C_{alpha^{-1}}`.
pub fn involution(r: &ReprClass) -> ReprClass {
    r.involution()
}

impl Index<usize> for ReprClass {
    type Output = i64;

    fn index(&self, k: usize) -> &i64 {
        &self.mult[k]
    }
}

impl AddAssign<&ReprClass> for ReprClass {
    fn add_assign(&mut self, rhs: &ReprClass) {
        assert_eq!(self.modulus(), rhs.modulus(), "modulus mismatch");
        for (a, b) in self.mult.iter_mut().zip(&rhs.mult) {
            *a += b;
        }
    }
}

impl SubAssign<&ReprClass> for ReprClass {
    fn sub_assign(&mut self, rhs: &ReprClass) {
        assert_eq!(self.modulus(), rhs.modulus(), "modulus mismatch");
        for (a, b) in self.mult.iter_mut().zip(&rhs.mult) {
            *a -= b;
        }
    }
}

impl Add for &ReprClass {
    type Output = ReprClass;

    fn add(self, rhs: &ReprClass) -> ReprClass {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ReprClass {
    type Output = ReprClass;

    fn sub(self, rhs: &ReprClass) -> ReprClass {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &ReprClass {
    type Output = ReprClass;

    fn neg(self) -> ReprClass {
        ReprClass { mult: self.mult.iter().map(|m| -m).collect() }
    }
}

impl Mul<i64> for &ReprClass {
    type Output = ReprClass;

    fn mul(self, n: i64) -> ReprClass {
        ReprClass { mult: self.mult.iter().map(|m| m * n).collect() }
    }
}

impl fmt::Display for ReprClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, m) in self.support() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "C[l^{k}]")?;
            } else {
                write!(f, "{m}*C[l^{k}]")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
