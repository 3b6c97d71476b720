use serde::{Deserialize, Serialize};

use super::{p_c_f_from_cohomology, Report};
use crate::localhodge::{link_hodge_table, OrdinarySing};
use crate::repring::{poincare_dual_epoly, EquivPoly, HodgeTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.to_owned(), passed, detail: detail.into() }
    }
}

/// Consistency checks on an assembled report.
pub fn check_identities(report: &Report) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let sp = &report.spectrum;
    let expected = report.invariants.chi_f - 1;
    out.push(CheckResult::new(
        "spectrum_sum_rule",
        sp.total() == expected,
        format!("sum m_a = {}, chi(F) - 1 = {expected}", sp.total()),
    ));
    let bad_den = sp.entries().find(|(a, _)| report.d as i64 % a.denom() != 0);
    out.push(CheckResult::new(
        "spectrum_denominators",
        bad_den.is_none(),
        bad_den.map_or_else(|| "all denominators divide d".to_owned(), |(a, _)| format!("exponent {a}")),
    ));

    let Some(g) = &report.global else {
        return out;
    };

    let bad = g.h1f.weights().into_iter().find(|&w| w != 1);
    out.push(CheckResult::new(
        "h1f_pure_weight_1",
        bad.is_none(),
        bad.map_or_else(|| "H^1(F)_{!=1} is pure of weight 1".to_owned(), |w| format!("weight {w} present")),
    ));

    let has4 = g.h2f.weights().contains(&4);
    out.push(CheckResult::new(
        "h2f_no_weight_4",
        !has4,
        if has4 { "Gr^W_4 H^2(F)_{!=1} is nonzero" } else { "Gr^W_4 H^2(F)_{!=1} = 0" },
    ));

    let (lhs, rhs) = link_identity_sides(report, &g.p_x);
    out.push(CheckResult::new(
        "link_identity",
        lhs == rhs,
        if lhs == rhs {
            "P(X) - D(P(X)) = P(Sigma) - D(P(Sigma)) - P(T*)".to_owned()
        } else {
            format!("lhs {lhs}rhs {rhs}")
        },
    ));

    let asym: Vec<&str> = [&g.h3x, &g.h2x, &g.h1f, &g.h2f]
        .into_iter()
        .filter(|t| !t.is_conjugation_symmetric())
        .map(HodgeTable::label)
        .collect();
    out.push(CheckResult::new(
        "conjugation_symmetry",
        asym.is_empty(),
        if asym.is_empty() { "all tables symmetric".to_owned() } else { format!("asymmetric: {}", asym.join(", ")) },
    ));

    let from_cohomology = p_c_f_from_cohomology(report).expect("global tables present");
    out.push(CheckResult::new(
        "compact_support_identity",
        from_cohomology == g.p_c_f,
        "P(X) - P(V) against Poincare dual of P(F)",
    ));

    let chi_m = report.invariants.chi_m;
    let bad_alpha = (1..report.d).find(|&k| g.h2f.dim_character(k) - g.h1f.dim_character(k) != chi_m);
    out.push(CheckResult::new(
        "free_action_euler",
        bad_alpha.is_none(),
        bad_alpha.map_or_else(
            || format!("dim H^2(F)_a - dim H^1(F)_a = chi(M) = {chi_m} for all a != 1"),
            |k| format!("fails at lambda^{k}"),
        ),
    ));
    out
}

/// Both sides of `P(X) - D P(X) = P(Sigma) - D P(Sigma) - P(T*)`, `D` the `n = 2` duality.
fn link_identity_sides(report: &Report, p_x: &EquivPoly) -> (EquivPoly, EquivPoly) {
    let d = report.d;
    let lhs = p_x.sub(&poincare_dual_epoly(p_x, 2)).with_label("lhs");
    let mut p_sigma = EquivPoly::new(d, "P(Sigma)");
    p_sigma.add_character(0, 0, 0, report.weak.point_count() as i64);
    let mut p_link = EquivPoly::new(d, "P(T*)");
    for (k, count) in report.weak.census() {
        let link = link_hodge_table(&OrdinarySing::new(k, d).expect("census multiplicities lie in 2..=d"));
        p_link = p_link.add(&link.epoly().scale(count as i64));
    }
    let rhs = p_sigma.sub(&poincare_dual_epoly(&p_sigma, 2)).sub(&p_link).with_label("rhs");
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{weak_comb_data, Builtin, LineArrangement, WeakCombData};
    use crate::assembly::{assemble_all, SurfaceH3Data};

    fn ceva() -> WeakCombData {
        weak_comb_data(&LineArrangement::builtin(Builtin::Ceva))
    }

    #[test]
    fn ceva_passes_everything() {
        let r = assemble_all(&ceva(), Some(&super::super::tests::ceva_h3())).unwrap();
        for c in check_identities(&r) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn asymmetric_h3_is_caught() {
        let mut t = HodgeTable::new(9, "");
        t.add_character(2, 1, 6, 2);
        t.add_character(1, 2, 3, 3);
        let r = assemble_all(&ceva(), Some(&SurfaceH3Data::new(t).unwrap())).unwrap();
        let checks = check_identities(&r);
        let sym = checks.iter().find(|c| c.name == "conjugation_symmetry").unwrap();
        assert!(!sym.passed);
    }

    #[test]
    fn no_singularities_degenerates() {
        // synthetic: a smooth X has no local data
        let w = WeakCombData::new(1, Default::default()).unwrap();
        let r = assemble_all(&w, None).unwrap();
        assert!(check_identities(&r).iter().all(|c| c.passed));
    }
}
