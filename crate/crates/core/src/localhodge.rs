//! Local Milnor fibers of the surface `Q(x) = t^d` over a `k`-fold point.
//!
//! Over an ordinary `k`-fold point of the arrangement the surface has the
//! singularity `g_k(a, b) + c^d = 0`. Its equivariant Hodge numbers depend only
//! on the weights `(1/k, 1/k, 1/d)` and the grading in `c`, so they are computed
//! on the model `x^k + y^k + z^d`: the monomials `x^a y^b z^c` with
//! `a, b <= k - 2`, `c <= d - 2` span the Milnor algebra, the monomial has
//! spectral number `l = (a+1)/k + (b+1)/k + (c+1)/d`, `mu_d` acts on it by
//! `lambda^{-(c+1)}`, and the Hodge bidegree is fixed by the window of `l`,
//! with weight 3 exactly when `l` is an integer.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repring::{CharacterClass, HodgeTable, ReprClass};

/// An ordinary `k`-fold point on a degree-`d` arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrdinarySing {
    k: usize,
    d: usize,
}

impl OrdinarySing {
    pub fn new(k: usize, d: usize) -> Result<Self> {
        if k < 2 || k > d {
            return Err(Error::InvalidSing { k, d });
        }
        Ok(Self { k, d })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Milnor number of the local surface singularity.
    pub fn milnor_number(&self) -> usize {
        (self.k - 1) * (self.k - 1) * (self.d - 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialDatum {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    #[serde(with = "crate::fraction")]
    pub ell: Rational64,
    pub character: CharacterClass,
    pub p: i32,
    pub q: i32,
}

impl MonomialDatum {
    pub fn weight(&self) -> i32 {
        self.p + self.q
    }
}

fn bidegree(ell: Rational64) -> (i32, i32) {
    if ell.is_integer() {
        let l = ell.to_integer() as i32;
        return (3 - l, l);
    }
    match ell.floor().to_i64().unwrap() {
        0 => (2, 0),
        1 => (1, 1),
        2 => (0, 2),
        _ => unreachable!("spectral numbers lie in (0, 3)"),
    }
}

pub fn milnor_basis(s: &OrdinarySing) -> Vec<MonomialDatum> {
    let (k, d) = (s.k as i64, s.d as i64);
    let mut out = Vec::with_capacity(s.milnor_number());
    for a in 0..k - 1 {
        for b in 0..k - 1 {
            for c in 0..d - 1 {
                let ell = Rational64::new(a + 1, k) + Rational64::new(b + 1, k) + Rational64::new(c + 1, d);
                let (p, q) = bidegree(ell);
                out.push(MonomialDatum {
                    a: a as usize,
                    b: b as usize,
                    c: c as usize,
                    ell,
                    character: CharacterClass::new(s.d, -(c + 1)),
                    p,
                    q,
                });
            }
        }
    }
    out
}

/// Equivariant Hodge numbers `h^{p,q}(H^2(F_s), lambda^j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalHodgeTable {
    pub sing: OrdinarySing,
    pub table: HodgeTable,
}

impl LocalHodgeTable {
    pub fn h(&self, p: i32, q: i32, j: usize) -> i64 {
        self.table.h(p, q, j)
    }

    pub fn total(&self) -> i64 {
        self.table.dim()
    }
}

pub fn local_hodge_table(s: &OrdinarySing) -> LocalHodgeTable {
    let mut table = HodgeTable::new(s.d, format!("H^2(F_s), k={}, d={}", s.k, s.d));
    for m in milnor_basis(s) {
        table.add_character(m.p, m.q, m.character.exponent() as i64, 1);
    }
    LocalHodgeTable { sing: *s, table }
}

/// Cohomology of the link `K_s`, one table per degree `0..=3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkHodge {
    pub degrees: Vec<HodgeTable>,
}

impl LinkHodge {
    pub fn degree(&self, j: usize) -> &HodgeTable {
        &self.degrees[j]
    }

    /// `sum_j (-1)^j [H^j(K_s)]`.
    pub fn epoly(&self) -> HodgeTable {
        let d = self.degrees[0].modulus();
        let mut e = HodgeTable::new(d, "P(K_s)");
        for (j, t) in self.degrees.iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            e = e.add(&t.scale(sign));
        }
        e
    }
}

pub fn link_hodge_table(s: &OrdinarySing) -> LinkHodge {
    let d = s.d;
    let local = local_hodge_table(s);
    let mut h0 = HodgeTable::new(d, "H^0(K_s)");
    h0.add_at(0, 0, &ReprClass::trivial(d, 1));
    // H^1(K_s) is the weight-3 part of H^2(F_s) shifted by (-1,-1)
    let mut h1 = HodgeTable::new(d, "H^1(K_s)");
    for (p, q, r) in local.table.entries().filter(|&(p, q, _)| p + q == 3) {
        h1.set(p - 1, q - 1, r.clone());
    }
    // link duality: H^2(K) = H^1(K)^vee(-2)
    let h2 = h1.reindex(|p, q| (2 - p, 2 - q), ReprClass::involution).with_label("H^2(K_s)");
    let mut h3 = HodgeTable::new(d, "H^3(K_s)");
    h3.add_at(2, 2, &ReprClass::trivial(d, 1));
    LinkHodge { degrees: vec![h0, h1, h2, h3] }
}

/// The spectral numbers of the local singularity, sorted.
pub fn local_spectrum(s: &OrdinarySing) -> Vec<Rational64> {
    let mut v: Vec<Rational64> = milnor_basis(s).into_iter().map(|m| m.ell).collect();
    v.sort();
    v
}
