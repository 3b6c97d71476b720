//! Equivariant point counts of the Milnor fiber and the cone complement over
//! prime fields, and the diagonal E-polynomial read off from them.

mod count;
mod field;
mod fit;
mod katz;
mod reduce;

use serde::{Deserialize, Serialize};

pub use count::{count_classes, count_reduced, twisted_counts, with_threads, CountTable, Target};
pub use field::{is_prime, PrimeField};
pub use fit::{fit_polynomial, fit_polynomials, Coeff, TwistFit};
pub use katz::katz_extract;
pub use reduce::{good_primes, good_primes_below, prime_bound, ReducedArrangement, DEFAULT_PRIME_BOUND};

use crate::arrangement::{comb_invariants, weak_comb_data, LineArrangement};
use crate::error::{Error, Result};
use crate::repring::EquivPoly;

/// `unrestricted` when every prime was admissible, `conditional` when only
/// primes `q = 1 mod d` were used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    Unrestricted,
    Conditional,
}

impl Certification {
    pub fn for_degree(d: usize) -> Self {
        if d > 2 {
            Certification::Conditional
        } else {
            Certification::Unrestricted
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub target: Target,
    pub degree_bound: usize,
    pub primes: Vec<u64>,
    pub counts: Vec<CountTable>,
    pub fits: Vec<TwistFit>,
    pub certification: Certification,
    /// `None` when some twist is not polynomial in `q`.
    pub epoly: Option<EquivPoly>,
    pub witness: Option<u64>,
}

/// Checks each prime, counts, fits with the target's degree bound and extracts.
pub fn extract(a: &LineArrangement, target: Target, primes: &[u64]) -> Result<Extraction> {
    let d = a.degree();
    let degree_bound = target.degree_bound();
    if primes.len() < degree_bound + 2 {
        return Err(Error::InsufficientPrimes { needed: degree_bound + 2, got: primes.len(), degree: degree_bound });
    }
    let mut counts = Vec::with_capacity(primes.len());
    for &q in primes {
        if (q - 1) % d as u64 != 0 {
            return Err(Error::BadPrime { q, reason: format!("q is not 1 mod {d}") });
        }
        counts.push(count_classes(a, q)?);
    }
    let rows: Vec<(u64, Vec<i64>)> = counts.iter().map(|t| (t.q, t.target_counts(target))).collect();
    let fits = fit_polynomials(&rows, degree_bound)?;
    let label = match target {
        Target::Fiber => "E(F)",
        Target::Complement => "E(N)",
    };
    let (epoly, witness) = match katz_extract(&fits, label) {
        Ok(e) => (Some(e), None),
        Err(Error::NotPolynomialCount { witness }) => (None, Some(witness)),
        Err(e) => return Err(e),
    };
    Ok(Extraction {
        target,
        degree_bound,
        primes: primes.to_vec(),
        counts,
        fits,
        certification: Certification::for_degree(d),
        epoly,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckRow {
    pub q: u64,
    pub count: i64,
    pub charpoly: i64,
    pub agrees: bool,
}

/// `|N(F_q)|` against the characteristic polynomial at `q`.
pub fn complement_crosscheck(a: &LineArrangement, primes: &[u64]) -> Result<Vec<CrosscheckRow>> {
    let inv = comb_invariants(&weak_comb_data(a));
    primes
        .iter()
        .map(|&q| {
            let count = count_classes(a, q)?.complement() as i64;
            let charpoly = inv.charpoly_at(q as i64);
            Ok(CrosscheckRow { q, count, charpoly, agrees: count == charpoly })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Builtin;
    use crate::repring::ReprClass;

    #[test]
    fn boolean_fiber() {
        let b = LineArrangement::boolean();
        let primes = good_primes(&b, 4, 7).unwrap();
        assert_eq!(primes, vec![7, 13, 19, 31]);
        let ex = extract(&b, Target::Fiber, &primes).unwrap();
        let e = ex.epoly.unwrap();
        assert_eq!(e.get(2, 2), ReprClass::trivial(3, 1));
        assert_eq!(e.get(1, 1), ReprClass::trivial(3, -2));
        assert_eq!(e.get(0, 0), ReprClass::trivial(3, 1));
        assert_eq!(ex.certification, Certification::Conditional);
    }

    #[test]
    fn ceva_complement() {
        let ceva = LineArrangement::builtin(Builtin::Ceva);
        let primes = good_primes(&ceva, 5, 19).unwrap();
        let ex = extract(&ceva, Target::Complement, &primes).unwrap();
        let e = ex.epoly.unwrap();
        // (q - 1)(q^2 - 8q + 16)
        for (i, n) in [(0, -16), (1, 24), (2, -9), (3, 1)] {
            assert_eq!(e.get(i, i), ReprClass::trivial(9, n));
        }
        assert!(complement_crosscheck(&ceva, &primes).unwrap().iter().all(|r| r.agrees));
    }

    #[test]
    fn extraction_specializes_to_untwisted_fit() {
        let b = LineArrangement::boolean();
        let ex = extract(&b, Target::Fiber, &[7, 13, 19, 31]).unwrap();
        let e = ex.epoly.unwrap();
        let untwisted = ex.fits[0].coeffs().unwrap();
        for (p, q, r) in e.entries() {
            assert_eq!(p, q);
            assert_eq!(Coeff::from_integer(r.dim() as i128), untwisted[p as usize]);
        }
    }

    #[test]
    fn complement_weights_match_betti_numbers() {
        // E(N) = (uv - 1)(u^2v^2 - b1 uv + b2) with trivial action
        let a = LineArrangement::rational(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]).unwrap();
        let inv = comb_invariants(&weak_comb_data(&a));
        let ex = extract(&a, Target::Complement, &good_primes(&a, 5, 5).unwrap()).unwrap();
        let w = crate::repring::specialize_weight(&ex.epoly.unwrap());
        let expect = [-inv.b2_m, inv.b2_m + inv.b1_m, -(inv.b1_m + 1), 1];
        for (i, n) in expect.into_iter().enumerate() {
            assert_eq!(w.coeff(2 * i as i32), ReprClass::trivial(4, n));
        }
    }

    #[test]
    fn rejects_inadmissible_prime() {
        let b = LineArrangement::boolean();
        assert!(matches!(extract(&b, Target::Fiber, &[7, 13, 19, 23]), Err(Error::BadPrime { q: 23, .. })));
        assert!(matches!(extract(&b, Target::Fiber, &[7, 13, 19]), Err(Error::InsufficientPrimes { .. })));
    }
}
