//! Global assembly of the equivariant Hodge tables of the Milnor fiber.
//!
//! The surface `X: Q(x) = t^d` in `P^3` carries the `mu_d`-action on `t`, its
//! singular points sit over the multiple points of the arrangement, and the
//! nontrivial-eigenvalue part of `H^*(F)` is dual to the primitive cohomology
//! of `X`. The primitive cohomology is obtained by comparing `X` with a smooth
//! degree-`d` surface (the Fermat reference tables) and correcting by the local
//! Milnor fibers and the externally supplied `H^3(X)`.

mod checks;
mod spectrum;

use serde::{Deserialize, Serialize};

use crate::arrangement::{comb_invariants, epoly_v, CombInvariants, WeakCombData};
use crate::error::{Error, Result};
use crate::localhodge::{local_hodge_table, LocalHodgeTable, OrdinarySing};
use crate::repring::{poincare_dual_epoly, EquivPoly, HodgeTable, ReprClass};

pub use checks::{check_identities, CheckResult};
pub use spectrum::{spectrum, Spectrum};

fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// `(h^{2,0}, h^{1,1}, h^{0,2})` of `C_{lambda^k}` in `H^2_0` of the Fermat surface of degree `d`, `k != 0`.
pub(crate) fn fermat_numbers(d: usize, k: usize) -> (i64, i64, i64) {
    let (d, k) = (d as i64, k as i64);
    let h20 = binom2(k - 1);
    let h02 = binom2(d - k - 1);
    (h20, d * d - 3 * d + 3 - h20 - h02, h02)
}

/// Equivariant Hodge numbers of `H^2_0(Y)`, `Y: x^d + y^d + z^d + t^d = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermatTable {
    pub d: usize,
    pub table: HodgeTable,
}

impl FermatTable {
    pub fn h(&self, p: i32, q: i32, k: usize) -> i64 {
        self.table.h(p, q, k)
    }
}

pub fn fermat_table(d: usize) -> Result<FermatTable> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d });
    }
    let mut table = HodgeTable::new(d, format!("H^2_0(Fermat), d={d}"));
    for k in 1..d {
        let (h20, h11, h02) = fermat_numbers(d, k);
        table.add_character(2, 0, k as i64, h20);
        table.add_character(1, 1, k as i64, h11);
        table.add_character(0, 2, k as i64, h02);
    }
    Ok(FermatTable { d, table })
}

/// Equivariant Hodge numbers of `H^3(X)`, supported on `(2,1)` and `(1,2)`.
///
/// Not determined by weak combinatorial data, so always supplied by the caller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HodgeTable", into = "HodgeTable")]
pub struct SurfaceH3Data {
    table: HodgeTable,
}

impl SurfaceH3Data {
    pub fn new(table: HodgeTable) -> Result<Self> {
        if let Some((p, q)) = table.bidegrees().find(|&pq| pq != (2, 1) && pq != (1, 2)) {
            return Err(Error::BadH3Support { p, q });
        }
        if let Some((p, q, k, value)) = table.first_negative() {
            return Err(Error::NegativeMultiplicity { p, q, k, value });
        }
        Ok(Self { table: table.with_label("H^3(X)") })
    }

    pub fn zero(d: usize) -> Self {
        Self { table: HodgeTable::new(d, "H^3(X)") }
    }

    pub fn table(&self) -> &HodgeTable {
        &self.table
    }

    pub fn modulus(&self) -> usize {
        self.table.modulus()
    }
}

impl TryFrom<HodgeTable> for SurfaceH3Data {
    type Error = Error;

    fn try_from(t: HodgeTable) -> Result<Self> {
        Self::new(t)
    }
}

impl From<SurfaceH3Data> for HodgeTable {
    fn from(h: SurfaceH3Data) -> Self {
        h.table
    }
}

/// One local table per singular point, in increasing multiplicity.
pub fn local_tables(w: &WeakCombData) -> Vec<LocalHodgeTable> {
    w.census()
        .flat_map(|(k, count)| {
            let t = local_hodge_table(&OrdinarySing::new(k, w.d).expect("census multiplicities lie in 2..=d"));
            std::iter::repeat_n(t, count)
        })
        .collect()
}

/// Entrywise sum of the local tables.
pub fn sum_local(d: usize, local: &[LocalHodgeTable]) -> Result<HodgeTable> {
    let mut acc = HodgeTable::new(d, "sum_s H^2(F_s)");
    for t in local {
        if t.table.modulus() != d {
            return Err(Error::ModulusMismatch { expected: d, found: t.table.modulus() });
        }
        acc = acc.add(&t.table);
    }
    Ok(acc)
}

fn check_genuine(t: HodgeTable) -> Result<HodgeTable> {
    match t.first_negative() {
        Some((p, q, k, value)) => Err(Error::NegativeMultiplicity { p, q, k, value }),
        None => Ok(t),
    }
}

fn nontrivial(d: usize) -> impl Iterator<Item = usize> {
    1..d
}

/// Weight-1 part of `H^2_0(X)` without the sign check.
pub fn weight1_raw(local_sum: &HodgeTable, h3: &HodgeTable) -> HodgeTable {
    let d = h3.modulus();
    let mut out = HodgeTable::new(d, "Gr^W_1 H^2_0(X)");
    for (p, q) in [(1, 0), (0, 1)] {
        let mut r = ReprClass::zero(d);
        for k in nontrivial(d) {
            let conj = (d - k) % d;
            r.set(k, local_sum.h(p + 1, q + 1, k) - h3.h(2 - p, 2 - q, conj));
        }
        out.set(p, q, r);
    }
    out
}

/// Weight-2 part of `H^2_0(X)` without the sign check.
pub fn weight2_raw(fermat: &HodgeTable, local_sum: &HodgeTable, h3: &HodgeTable) -> HodgeTable {
    let d = h3.modulus();
    let mut out = HodgeTable::new(d, "Gr^W_2 H^2_0(X)");
    for (p, q) in [(2, 0), (1, 1), (0, 2)] {
        let mut r = ReprClass::zero(d);
        for k in nontrivial(d) {
            let global = fermat.h(p, q, k) + h3.h(p, q + 1, k) + h3.h(p + 1, q, k);
            let loc = local_sum.h(p, q, k) + local_sum.h(p, q + 1, k) + local_sum.h(p + 1, q, k);
            r.set(k, global - loc);
        }
        out.set(p, q, r);
    }
    out
}

/// `h^{p,q}(H^2_0(X), a) = sum_s h^{p+1,q+1}(H^2(F_s), a) - h^{2-p,2-q}(H^3(X), conj a)` for `p + q = 1`.
pub fn cor2_weight1(local: &[LocalHodgeTable], h3: &SurfaceH3Data) -> Result<HodgeTable> {
    let sum = sum_local(h3.modulus(), local)?;
    check_genuine(weight1_raw(&sum, &h3.table))
}

/// Weight-2 part of `H^2_0(X)` from the smoothing comparison with the Fermat surface.
pub fn prop2_weight2(fermat: &FermatTable, local: &[LocalHodgeTable], h3: &SurfaceH3Data) -> Result<HodgeTable> {
    let d = h3.modulus();
    if fermat.d != d {
        return Err(Error::ModulusMismatch { expected: d, found: fermat.d });
    }
    let sum = sum_local(d, local)?;
    check_genuine(weight2_raw(&fermat.table, &sum, &h3.table))
}

/// `h^{p,q}(H^j(F), a) = h^{2-q,2-p}(H^{4-j}_0(X), a)` for `a != 1`, returning `(H^1(F), H^2(F))`.
pub fn dualize_to_f(h2x: &HodgeTable, h3x: &HodgeTable) -> (HodgeTable, HodgeTable) {
    let flip = |t: &HodgeTable, label: &str| {
        t.nontrivial_part().reindex(|p, q| (2 - q, 2 - p), Clone::clone).with_label(label)
    };
    (flip(h3x, "H^1(F)_{!=1}"), flip(h2x, "H^2(F)_{!=1}"))
}

/// `H^j(F)_1 = H^j(M)`, pure of type `(j,j)` with trivial action.
pub fn h_trivial_part(d: usize, c: &CombInvariants) -> [HodgeTable; 3] {
    let betti = [1, c.b1_m, c.b2_m];
    std::array::from_fn(|j| {
        let mut t = HodgeTable::new(d, format!("H^{j}(F)_1"));
        t.add_character(j as i32, j as i32, 0, betti[j]);
        t
    })
}

/// `1 + uv + u^2 v^2`, trivial action.
fn p2_poly(d: usize) -> EquivPoly {
    let mut p = EquivPoly::new(d, "P_2");
    for i in 0..=2 {
        p.add_character(i, i, 0, 1);
    }
    p
}

/// Tables that need `H^3(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalTables {
    pub h3x: HodgeTable,
    pub h2x: HodgeTable,
    pub h1f: HodgeTable,
    pub h2f: HodgeTable,
    /// `P^{mu_d}(X) = P(H^*_0(X)) + P_2`.
    pub p_x: EquivPoly,
    /// `P_c^{mu_d}(F) = P^{mu_d}(X) - P^{mu_d}(V)`.
    pub p_c_f: EquivPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub d: usize,
    pub weak: WeakCombData,
    pub invariants: CombInvariants,
    pub spectrum: Spectrum,
    /// `H^0(F)_1, H^1(F)_1, H^2(F)_1`.
    pub trivial: [HodgeTable; 3],
    pub e_v: EquivPoly,
    pub global: Option<GlobalTables>,
}

impl Report {
    /// Full `H^j(F)` including the trivial-eigenvalue part, when available.
    pub fn h_f(&self, j: usize) -> Option<HodgeTable> {
        let g = self.global.as_ref()?;
        Some(match j {
            0 => self.trivial[0].clone(),
            1 => self.trivial[1].add(&g.h1f),
            2 => self.trivial[2].add(&g.h2f),
            _ => HodgeTable::new(self.d, ""),
        })
    }
}

/// Runs the whole chain. Without `h3` only the combinatorial parts are produced.
pub fn assemble_all(w: &WeakCombData, h3: Option<&SurfaceH3Data>) -> Result<Report> {
    let d = w.d;
    let invariants = comb_invariants(w);
    let spectrum = spectrum(w)?;
    let trivial = h_trivial_part(d, &invariants);
    let e_v = epoly_v(w);
    let global = match h3 {
        None => None,
        Some(h3) => {
            if h3.modulus() != d {
                return Err(Error::ModulusMismatch { expected: d, found: h3.modulus() });
            }
            let fermat = fermat_table(d)?;
            let local = local_tables(w);
            let w1 = cor2_weight1(&local, h3)?;
            let w2 = prop2_weight2(&fermat, &local, h3)?;
            let h2x = w1.add(&w2).with_label("H^2_0(X)");
            let (h1f, h2f) = dualize_to_f(&h2x, h3.table());
            let p_x = h2x.sub(h3.table()).add(&p2_poly(d)).with_label("P(X)");
            let p_c_f = p_x.sub(&e_v).with_label("P_c(F)");
            Some(GlobalTables { h3x: h3.table().clone(), h2x, h1f, h2f, p_x, p_c_f })
        }
    };
    Ok(Report { d, weak: w.clone(), invariants, spectrum, trivial, e_v, global })
}

/// `P_c(F)` recovered from the assembled `H^*(F)` by Poincare duality on the smooth surface `F`.
pub fn p_c_f_from_cohomology(report: &Report) -> Option<EquivPoly> {
    let mut p = EquivPoly::new(report.d, "P(F)");
    for j in 0..=2 {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        p = p.add(&report.h_f(j)?.scale(sign));
    }
    Some(poincare_dual_epoly(&p, 2).with_label("P_c(F)"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{weak_comb_data, Builtin, LineArrangement};

    pub(crate) fn ceva_h3() -> SurfaceH3Data {
        let mut t = HodgeTable::new(9, "");
        t.add_character(2, 1, 6, 2);
        t.add_character(1, 2, 3, 2);
        SurfaceH3Data::new(t).unwrap()
    }

    fn ceva_weak() -> WeakCombData {
        weak_comb_data(&LineArrangement::builtin(Builtin::Ceva))
    }

    #[test]
    fn fermat_degree_nine() {
        let f = fermat_table(9).unwrap();
        assert_eq!((f.h(2, 0, 3), f.h(0, 2, 3), f.h(1, 1, 3)), (1, 10, 46));
        assert_eq!(f.h(2, 0, 8), 21);
        assert_eq!((f.h(2, 0, 1), f.h(2, 0, 2)), (0, 0));
        assert_eq!((f.h(0, 2, 8), f.h(0, 2, 7)), (0, 0));
        assert_eq!(f.table.dim_character(0), 0);
        for k in 1..9 {
            assert_eq!(f.table.dim_character(k), 81 - 27 + 3);
        }
        assert!(f.table.is_conjugation_symmetric());
    }

    #[test]
    fn fermat_degree_four_geometric_genus() {
        let f = fermat_table(4).unwrap();
        assert_eq!(f.table.get(2, 0).dim(), 1);
        assert_eq!(fermat_table(2), Err(Error::DegreeTooSmall { d: 2 }));
    }

    #[test]
    fn h3_support_is_validated() {
        let mut t = HodgeTable::new(9, "");
        t.add_character(3, 0, 1, 1);
        assert_eq!(SurfaceH3Data::new(t), Err(Error::BadH3Support { p: 3, q: 0 }));
    }

    #[test]
    fn weight_one_part_for_ceva() {
        let w1 = cor2_weight1(&local_tables(&ceva_weak()), &ceva_h3()).unwrap();
        assert_eq!(w1.h(1, 0, 6), 12 - 2);
        assert_eq!(w1.h(0, 1, 3), 12 - 2);
        assert_eq!(w1.dim(), 20);
    }

    #[test]
    fn weight_one_degenerate_inputs() {
        assert!(cor2_weight1(&[], &SurfaceH3Data::zero(5)).unwrap().is_empty());
        let node = vec![local_hodge_table(&OrdinarySing::new(2, 3).unwrap())];
        assert!(cor2_weight1(&node, &SurfaceH3Data::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn weight_one_negative_is_an_error() {
        assert!(matches!(cor2_weight1(&[], &ceva_h3()), Err(Error::NegativeMultiplicity { .. })));
    }

    #[test]
    fn weight_two_part_for_ceva() {
        let f = fermat_table(9).unwrap();
        let w2 = prop2_weight2(&f, &local_tables(&ceva_weak()), &ceva_h3()).unwrap();
        assert_eq!(w2.h(1, 1, 3), 46 + 2 + 0 - 12 * (3 + 1));
        assert!(w2.is_conjugation_symmetric());
    }

    #[test]
    fn weight_two_smooth_case_is_fermat() {
        let f = fermat_table(5).unwrap();
        let w2 = prop2_weight2(&f, &[], &SurfaceH3Data::zero(5)).unwrap();
        assert_eq!(w2, f.table);
    }

    #[test]
    fn dualize_ceva_h1() {
        let h3 = ceva_h3();
        let (h1f, _) = dualize_to_f(&HodgeTable::new(9, ""), h3.table());
        assert_eq!(h1f.h(1, 0, 6), 2);
        assert_eq!(h1f.h(0, 1, 3), 2);
        assert_eq!(h1f.dim(), 4);
        let (z1, z2) = dualize_to_f(&HodgeTable::new(9, ""), &HodgeTable::new(9, ""));
        assert!(z1.is_empty() && z2.is_empty());
    }

    #[test]
    fn trivial_parts() {
        let c = comb_invariants(&ceva_weak());
        let t = h_trivial_part(9, &c);
        assert_eq!(t[0].h(0, 0, 0), 1);
        assert_eq!(t[1].h(1, 1, 0), 8);
        assert_eq!(t[2].h(2, 2, 0), 16);
        let b = h_trivial_part(3, &comb_invariants(&weak_comb_data(&LineArrangement::boolean())));
        assert_eq!((b[1].h(1, 1, 0), b[2].h(2, 2, 0)), (2, 1));
    }

    #[test]
    fn ceva_end_to_end_tables() {
        let r = assemble_all(&ceva_weak(), Some(&ceva_h3())).unwrap();
        let g = r.global.as_ref().unwrap();
        assert_eq!(g.h1f.dim_character(3), 2);
        assert_eq!(g.h1f.dim_character(6), 2);
        for k in 1..9 {
            assert_eq!(-g.h1f.dim_character(k) + g.h2f.dim_character(k), 9, "alpha = lambda^{k}");
        }
        assert_eq!(g.h2f.dim_character(3), 11);
    }

    #[test]
    fn spectrum_only_report() {
        let r = assemble_all(&ceva_weak(), None).unwrap();
        assert!(r.global.is_none());
        assert_eq!(r.spectrum.m(1, 1), 16);
    }
}
