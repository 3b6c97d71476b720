use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{fermat_numbers, local_tables, sum_local};
use crate::arrangement::{comb_invariants, WeakCombData};
use crate::error::{Error, Result};

/// `Sp = sum m_a t^a` with `a` in `(0, 3]` and `d * a` integral.
///
/// Zero coefficients are not stored. Coefficients may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub d: usize,
    entries: BTreeMap<Rational64, i64>,
}

impl Spectrum {
    pub fn new(d: usize) -> Self {
        Self { d, entries: BTreeMap::new() }
    }

    pub fn add(&mut self, a: Rational64, m: i64) {
        let e = self.entries.entry(a).or_insert(0);
        *e += m;
        if *e == 0 {
            self.entries.remove(&a);
        }
    }

    pub fn get(&self, a: Rational64) -> i64 {
        self.entries.get(&a).copied().unwrap_or(0)
    }

    /// `m_{num/den}`
    pub fn m(&self, num: i64, den: i64) -> i64 {
        self.get(Rational64::new(num, den))
    }

    pub fn entries(&self) -> impl Iterator<Item = (Rational64, i64)> + '_ {
        self.entries.iter().map(|(&a, &m)| (a, m))
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }
}

/// The spectrum of the arrangement, computed from `d` and the multiplicity census only.
///
/// With `beta = exp(-2 pi i a)` and `gamma = conj(beta)`, `a = w + k/d`:
/// - `0 < a < 1`: `h^{2,0}_Y(beta) - sum_s h^{2,0}(F_s, beta)`
/// - `1 < a < 2`: `h^{1,1}_Y(gamma) - sum_s (h^{1,1} + h^{1,2})(F_s, gamma)`
/// - `2 < a < 3`: `h^{0,2}_Y(beta) - sum_s (h^{0,2} + h^{1,2})(F_s, beta)`
///
/// and `m_1 = b_2(M)`, `m_2 = -b_1(M)`, `m_3 = 0`.
pub fn spectrum(w: &WeakCombData) -> Result<Spectrum> {
    let d = w.d;
    let local = sum_local(d, &local_tables(w))?;
    let inv = comb_invariants(w);
    let mut sp = Spectrum::new(d);
    let di = d as i64;
    for k in 1..d {
        let beta = (d - k) % d;
        let gamma = k;
        let (h20, _, _) = fermat_numbers(d, beta);
        sp.add(Rational64::new(k as i64, di), h20 - local.h(2, 0, beta));

        let (_, h11, _) = fermat_numbers(d, gamma);
        sp.add(Rational64::new(di + k as i64, di), h11 - local.h(1, 1, gamma) - local.h(1, 2, gamma));

        let (_, _, h02) = fermat_numbers(d, beta);
        sp.add(Rational64::new(2 * di + k as i64, di), h02 - local.h(0, 2, beta) - local.h(1, 2, beta));
    }
    sp.add(Rational64::from_integer(1), inv.b2_m);
    sp.add(Rational64::from_integer(2), -inv.b1_m);

    let expected = inv.chi_f - 1;
    if sp.total() != expected {
        return Err(Error::SumRuleViolation { expected, got: sp.total() });
    }
    Ok(sp)
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    a: String,
    m: i64,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    d: usize,
    entries: Vec<EntryJson>,
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpectrumJson { d: self.d, entries: self.entries().map(|(a, m)| EntryJson { a: a.to_string(), m }).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = SpectrumJson::deserialize(de)?;
        let mut sp = Spectrum::new(raw.d);
        for e in raw.entries {
            let a: Rational64 = e.a.parse().map_err(|_| D::Error::custom(format!("bad exponent `{}`", e.a)))?;
            sp.add(a, e.m);
        }
        Ok(sp)
    }
}
