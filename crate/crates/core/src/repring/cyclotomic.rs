//! Cyclotomic integers `Z[lambda]` and exact character decoding.

use std::f64::consts::PI;

use super::ReprClass;
use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients from the constant term up, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] = 1;
        Self::new(c)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        assert_eq!(divisor.0[dd], 1, "divisor must be monic");
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (IntPoly::default(), self.clone());
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let lead = rem[i];
            if lead == 0 {
                continue;
            }
            quot[i - dd] = lead;
            for (j, &c) in divisor.0.iter().enumerate() {
                rem[i - dd + j] -= lead * c;
            }
        }
        rem.truncate(dd);
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    pub fn eval_complex(&self, re: f64, im: f64) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for &c in self.0.iter().rev() {
            acc = (acc.0 * re - acc.1 * im + c as f64, acc.0 * im + acc.1 * re);
        }
        acc
    }
}

/// The `d`-th cyclotomic polynomial, by dividing `x^d - 1` by `Phi_e` for every proper divisor `e`.
pub fn cyclotomic_polynomial(d: usize) -> IntPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut p = IntPoly::x_pow_minus_one(d);
    for e in (1..d).filter(|e| d % e == 0) {
        let (q, r) = p.div_rem_monic(&cyclotomic_polynomial(e));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

/// An element `sum_t coeffs[t] lambda^t` of `Z[lambda]`, `lambda = exp(2 pi i / d)`.
///
/// The coefficient vector is a group-algebra representative; equality is
/// decided after reduction modulo `Phi_d`.
#[derive(Debug, Clone)]
pub struct CyclotomicInt {
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "modulus must be positive");
        Self { coeffs }
    }

    /// The rational integer `n` in `Z[lambda]`.
    pub fn integer(d: usize, n: i64) -> Self {
        let mut coeffs = vec![0; d];
        coeffs[0] = n;
        Self { coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Canonical representative: remainder modulo `Phi_d`.
    pub fn reduce(&self) -> IntPoly {
        let phi = cyclotomic_polynomial(self.modulus());
        IntPoly::new(self.coeffs.clone()).div_rem_monic(&phi).1
    }

    pub fn is_zero(&self) -> bool {
        self.reduce().is_zero()
    }

    /// `Some(n)` when the element is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.reduce();
        match r.coeffs() {
            [] => Some(0),
            [n] => Some(*n),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let d = self.modulus() as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (t, &c)| {
            let theta = 2.0 * PI * t as f64 / d;
            (re + c as f64 * theta.cos(), im + c as f64 * theta.sin())
        })
    }

    pub fn sub(&self, other: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.sub(other).is_zero()
    }
}

impl Eq for CyclotomicInt {}

/// Character values `s -> tr(lambda^s | r)` for `s = 0..d`.
pub fn encode_characters(r: &ReprClass) -> Vec<CyclotomicInt> {
    (0..r.modulus()).map(|s| r.trace(s)).collect()
}

/// Recovers a virtual class from its (cyclotomic) character values.
///
/// The inverse DFT is evaluated in floating point and rounded; the candidate
/// is accepted only if its exact character agrees with `traces` in `Z[lambda]`.
pub fn decode_cyclotomic(traces: &[CyclotomicInt]) -> Result<ReprClass> {
    let d = traces.len();
    assert!(d >= 1, "need at least one trace");
    let values: Vec<(f64, f64)> = traces.iter().map(CyclotomicInt::to_complex).collect();
    let mult = (0..d)
        .map(|k| {
            let re: f64 = values
                .iter()
                .enumerate()
                .map(|(s, &(vr, vi))| {
                    // multiply by lambda^{-ks}
                    let theta = -2.0 * PI * ((k * s) % d) as f64 / d as f64;
                    vr * theta.cos() - vi * theta.sin()
                })
                .sum();
            (re / d as f64).round() as i64
        })
        .collect();
    let candidate = ReprClass::from_mult(mult);
    for (s, t) in traces.iter().enumerate() {
        if t.modulus() != d {
            return Err(Error::ModulusMismatch { expected: d, found: t.modulus() });
        }
        if candidate.trace(s) != *t {
            return Err(Error::Decode { d, index: s });
        }
    }
    Ok(candidate)
}

/// Decodes integer character values `traces[s] = tr(lambda^s)` into a class of `R(mu_d)`.
pub fn decode_characters(traces: &[i64]) -> Result<ReprClass> {
    let d = traces.len();
    let lifted: Vec<CyclotomicInt> = traces.iter().map(|&t| CyclotomicInt::integer(d, t)).collect();
    decode_cyclotomic(&lifted)
}
