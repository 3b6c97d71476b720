use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ReprClass;

/// A finitely supported map `(p, q) -> R(mu_d)`.
///
/// Used both for the equivariant Hodge numbers of a single mixed Hodge
/// structure and for Euler-alternating equivariant Hodge-Deligne polynomials
/// ([`EquivPoly`]); the label records which one is meant. Zero classes are
/// never stored.
#[derive(Debug, Clone)]
pub struct HodgeTable {
    d: usize,
    label: String,
    entries: BTreeMap<(i32, i32), ReprClass>,
}

/// Equivariant Hodge-Deligne polynomial `sum E^{p,q} u^p v^q`.
pub type EquivPoly = HodgeTable;

impl HodgeTable {
    pub fn new(d: usize, label: impl Into<String>) -> Self {
        assert!(d >= 1, "modulus must be positive");
        Self { d, label: label.into(), entries: BTreeMap::new() }
    }

    pub fn modulus(&self) -> usize {
        self.d
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, p: i32, q: i32) -> ReprClass {
        self.entries.get(&(p, q)).cloned().unwrap_or_else(|| ReprClass::zero(self.d))
    }

    /// Multiplicity of `C_{lambda^k}` at `(p, q)`.
    pub fn h(&self, p: i32, q: i32, k: usize) -> i64 {
        self.entries.get(&(p, q)).map_or(0, |r| r.get(k))
    }

    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, &ReprClass)> + '_ {
        self.entries.iter().map(|(&(p, q), r)| (p, q, r))
    }

    pub fn bidegrees(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.entries.keys().copied()
    }

    /// Replaces the entry at `(p, q)`.
    pub fn set(&mut self, p: i32, q: i32, r: ReprClass) {
        assert_eq!(r.modulus(), self.d, "modulus mismatch");
        if r.is_zero() {
            self.entries.remove(&(p, q));
        } else {
            self.entries.insert((p, q), r);
        }
    }

    pub fn add_at(&mut self, p: i32, q: i32, r: &ReprClass) {
        let mut cur = self.get(p, q);
        cur += r;
        self.set(p, q, cur);
    }

    pub fn add_character(&mut self, p: i32, q: i32, k: i64, n: i64) {
        self.add_at(p, q, &ReprClass::character(self.d, k, n));
    }

    pub fn add(&self, other: &HodgeTable) -> HodgeTable {
        assert_eq!(self.d, other.d, "modulus mismatch");
        let mut out = self.clone();
        for (p, q, r) in other.entries() {
            out.add_at(p, q, r);
        }
        out
    }

    pub fn sub(&self, other: &HodgeTable) -> HodgeTable {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, n: i64) -> HodgeTable {
        self.map_classes(|r| r * n)
    }

    /// Applies `f` to every class, keeping bidegrees.
    pub fn map_classes(&self, f: impl Fn(&ReprClass) -> ReprClass) -> HodgeTable {
        let mut out = HodgeTable::new(self.d, self.label.clone());
        for (p, q, r) in self.entries() {
            out.set(p, q, f(r));
        }
        out
    }

    /// Moves the entry at `(p, q)` to `g(p, q)`, transforming its class by `f`.
    pub fn reindex(&self, g: impl Fn(i32, i32) -> (i32, i32), f: impl Fn(&ReprClass) -> ReprClass) -> HodgeTable {
        let mut out = HodgeTable::new(self.d, self.label.clone());
        for (p, q, r) in self.entries() {
            let (a, b) = g(p, q);
            out.add_at(a, b, &f(r));
        }
        out
    }

    /// Entrywise involution of `R(mu_d)`.
    pub fn involution(&self) -> HodgeTable {
        self.map_classes(ReprClass::involution)
    }

    /// Only the part with `alpha != 1`.
    pub fn nontrivial_part(&self) -> HodgeTable {
        self.map_classes(ReprClass::nontrivial_part)
    }

    /// Entries of weight `p + q = w`.
    pub fn weight_part(&self, w: i32) -> HodgeTable {
        let mut out = HodgeTable::new(self.d, self.label.clone());
        for (p, q, r) in self.entries().filter(|&(p, q, _)| p + q == w) {
            out.set(p, q, r.clone());
        }
        out
    }

    pub fn weights(&self) -> BTreeSet<i32> {
        self.entries.keys().map(|&(p, q)| p + q).collect()
    }

    /// Total virtual dimension.
    pub fn dim(&self) -> i64 {
        self.entries.values().map(ReprClass::dim).sum()
    }

    /// Total multiplicity of `C_{lambda^k}` over all bidegrees.
    pub fn dim_character(&self, k: usize) -> i64 {
        self.entries.values().map(|r| r.get(k)).sum()
    }

    /// `h^{p,q}(alpha) = h^{q,p}(conj alpha)` for every entry.
    pub fn is_conjugation_symmetric(&self) -> bool {
        self.entries().all(|(p, q, r)| self.get(q, p) == r.involution())
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(ReprClass::is_genuine)
    }

    /// First negative entry as `(p, q, k, value)`.
    pub fn first_negative(&self) -> Option<(i32, i32, usize, i64)> {
        self.entries()
            .find_map(|(p, q, r)| r.mult().iter().enumerate().find(|(_, &m)| m < 0).map(|(k, &m)| (p, q, k, m)))
    }
}

impl PartialEq for HodgeTable {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.entries == other.entries
    }
}

impl Eq for HodgeTable {}

impl fmt::Display for HodgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (d={})", self.label, self.d)?;
        for (p, q, r) in self.entries() {
            writeln!(f, "  ({p},{q}): {r}")?;
        }
        Ok(())
    }
}

/// `h^{p,q}(H^vee, alpha) = h^{-p,-q}(H, conj alpha)`.
pub fn dual_table(t: &HodgeTable) -> HodgeTable {
    t.reindex(|p, q| (-p, -q), ReprClass::involution)
}

/// Tate twist `H(m)`: `h^{p,q}(H(m)) = h^{p+m,q+m}(H)`.
pub fn tate_twist(t: &HodgeTable, m: i32) -> HodgeTable {
    t.reindex(|p, q| (p - m, q - m), Clone::clone)
}

/// `u^n v^n iota(P)(1/u, 1/v)`, relating `P^Gamma` and `P_c^Gamma` of a smooth
/// connected `n`-dimensional variety.
pub fn poincare_dual_epoly(p: &EquivPoly, n: i32) -> EquivPoly {
    p.reindex(|a, b| (n - a, n - b), ReprClass::involution)
}

/// The `u = v` specialization: weight-graded classes.
pub fn specialize_weight(p: &EquivPoly) -> WeightPoly {
    let mut out = WeightPoly::new(p.modulus());
    for (a, b, r) in p.entries() {
        out.add_at(a + b, r);
    }
    out
}

/// `sum_w W_w u^w` with coefficients in `R(mu_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoly {
    d: usize,
    coeffs: BTreeMap<i32, ReprClass>,
}

impl WeightPoly {
    pub fn new(d: usize) -> Self {
        Self { d, coeffs: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: i32) -> ReprClass {
        self.coeffs.get(&w).cloned().unwrap_or_else(|| ReprClass::zero(self.d))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i32, &ReprClass)> + '_ {
        self.coeffs.iter().map(|(&w, r)| (w, r))
    }

    pub fn add_at(&mut self, w: i32, r: &ReprClass) {
        let mut cur = self.coeff(w);
        cur += r;
        if cur.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, cur);
        }
    }

    pub fn dim(&self) -> i64 {
        self.coeffs.values().map(ReprClass::dim).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    p: i32,
    q: i32,
    mult: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    d: usize,
    entries: Vec<EntryJson>,
}

impl Serialize for HodgeTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableJson {
            d: self.d,
            entries: self.entries().map(|(p, q, r)| EntryJson { p, q, mult: r.mult().to_vec() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HodgeTable {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = TableJson::deserialize(de)?;
        if raw.d == 0 {
            return Err(D::Error::custom("d must be positive"));
        }
        let mut t = HodgeTable::new(raw.d, "");
        for e in raw.entries {
            if e.mult.len() != raw.d {
                return Err(D::Error::custom(format!(
                    "entry ({},{}) has {} multiplicities, expected {}",
                    e.p,
                    e.q,
                    e.mult.len(),
                    raw.d
                )));
            }
            t.add_at(e.p, e.q, &ReprClass::from_mult(e.mult));
        }
        Ok(t)
    }
}
