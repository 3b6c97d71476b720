use std::collections::BTreeMap;

use super::field::{is_prime, PrimeField};
use crate::arrangement::{weak_comb_data, Builtin, LineArrangement, WeakCombData};
use crate::error::{Error, Result};

/// Default upper end of the prime search; `MILNORHODGE_PRIME_BOUND` overrides it.
pub const DEFAULT_PRIME_BOUND: u64 = 200_000;

pub fn prime_bound() -> u64 {
    std::env::var("MILNORHODGE_PRIME_BOUND").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_PRIME_BOUND)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Eval {
    Product,
    /// `(x^3 - y^3)(x^3 - z^3)(y^3 - z^3)`
    Ceva,
}

/// An arrangement with good reduction at `q`, ready for evaluation of `Q`.
#[derive(Debug, Clone)]
pub struct ReducedArrangement {
    field: PrimeField,
    forms: Vec<[u64; 3]>,
    eval: Eval,
}

impl ReducedArrangement {
    /// Reduces `a` mod `q`. Fails with `BadPrime` when the lines do not survive
    /// reduction or the intersection census changes.
    pub fn new(a: &LineArrangement, q: u64) -> Result<Self> {
        let field = PrimeField::new(q)?;
        let bad = |reason: &str| Error::BadPrime { q, reason: reason.to_owned() };
        let (forms, eval) = match a.as_builtin() {
            Some(Builtin::Ceva) => {
                let w =
                    field.root_of_unity(3).filter(|_| q != 3).ok_or_else(|| bad("no primitive cube root of unity"))?;
                let mut forms = Vec::with_capacity(9);
                let neg = |v: u64| field.sub(0, v);
                for pair in [(0, 1), (0, 2), (1, 2)] {
                    for i in 0..3 {
                        let mut f = [0u64; 3];
                        f[pair.0] = 1;
                        f[pair.1] = neg(field.pow(w, i));
                        forms.push(f);
                    }
                }
                (forms, Eval::Ceva)
            }
            None => {
                let lines = a.lines().expect("non-builtin arrangements have explicit lines");
                let forms = lines.iter().map(|l| l.coeffs().map(|c| field.reduce(c))).collect();
                (forms, Eval::Product)
            }
        };
        let r = Self { field, forms, eval };
        let reduced = r.weak_data().ok_or_else(|| bad("lines collapse"))?;
        if reduced != weak_comb_data(a) {
            return Err(bad("intersection census changes"));
        }
        Ok(r)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[[u64; 3]] {
        &self.forms
    }

    /// `Q(x, y, z)` in `F_q`.
    pub fn eval(&self, v: [u64; 3]) -> u64 {
        let f = &self.field;
        match self.eval {
            Eval::Ceva => {
                let [x, y, z] = v.map(|t| f.pow(t, 3));
                f.mul(f.mul(f.sub(x, y), f.sub(x, z)), f.sub(y, z))
            }
            Eval::Product => self.forms.iter().fold(1, |acc, l| f.mul(acc, self.linear(l, v))),
        }
    }

    fn linear(&self, l: &[u64; 3], v: [u64; 3]) -> u64 {
        let f = &self.field;
        f.add(f.add(f.mul(l[0], v[0]), f.mul(l[1], v[1])), f.mul(l[2], v[2]))
    }

    fn normalize(&self, v: [u64; 3]) -> Option<[u64; 3]> {
        let lead = *v.iter().find(|&&c| c != 0)?;
        let inv = self.field.inv(lead);
        Some(v.map(|c| self.field.mul(c, inv)))
    }

    /// Census of the reduced arrangement over `F_q`, `None` if lines vanish or coincide.
    fn weak_data(&self) -> Option<WeakCombData> {
        let f = &self.field;
        let lines: Vec<[u64; 3]> = self.forms.iter().map(|&l| self.normalize(l)).collect::<Option<_>>()?;
        let mut pts: BTreeMap<[u64; 3], std::collections::BTreeSet<usize>> = BTreeMap::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let (a, b) = (lines[i], lines[j]);
                let c = [
                    f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
                    f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                    f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
                ];
                let p = self.normalize(c)?;
                let inc = pts.entry(p).or_default();
                inc.insert(i);
                inc.insert(j);
            }
        }
        let mut m = BTreeMap::new();
        for inc in pts.values() {
            *m.entry(inc.len()).or_insert(0) += 1;
        }
        WeakCombData::new(lines.len(), m).ok()
    }
}

/// The first `count` primes `q >= min_q`, `q = 1 mod d`, at which `a` has good reduction.
pub fn good_primes(a: &LineArrangement, count: usize, min_q: u64) -> Result<Vec<u64>> {
    good_primes_below(a, count, min_q, prime_bound())
}

pub fn good_primes_below(a: &LineArrangement, count: usize, min_q: u64, bound: u64) -> Result<Vec<u64>> {
    let d = a.degree() as u64;
    let mut out = Vec::with_capacity(count);
    let mut q = min_q.max(2);
    while out.len() < count && q <= bound {
        if (q - 1) % d == 0 && is_prime(q) && ReducedArrangement::new(a, q).is_ok() {
            out.push(q);
        }
        q += 1;
    }
    if out.len() < count {
        return Err(Error::NotEnoughPrimes { wanted: count, found: out.len(), bound });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceva_primes() {
        let ceva = LineArrangement::builtin(Builtin::Ceva);
        assert_eq!(good_primes(&ceva, 5, 19).unwrap(), vec![19, 37, 73, 109, 127]);
    }

    #[test]
    fn ceva_binomial_matches_line_product() {
        let r = ReducedArrangement::new(&LineArrangement::builtin(Builtin::Ceva), 19).unwrap();
        let f = *r.field();
        for v in [[1, 2, 3], [5, 0, 7], [4, 4, 1], [18, 11, 2]] {
            let prod = r.forms().iter().fold(1, |acc, l| f.mul(acc, r.linear(l, v)));
            assert_eq!(r.eval(v), prod);
        }
    }

    #[test]
    fn bad_reduction_is_skipped() {
        // x, y, z, x+y+z, x+y+3z: the last two meet on the line z = 0 only mod 2
        let a = LineArrangement::rational(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 1, 3]]).unwrap();
        assert!(ReducedArrangement::new(&a, 2).is_err());
        let a = LineArrangement::rational(&[[1, 0, 0], [0, 1, 0], [1, 7, 0]]).unwrap();
        assert!(ReducedArrangement::new(&a, 7).is_err());
        assert!(ReducedArrangement::new(&a, 11).is_ok());
    }

    #[test]
    fn search_bound() {
        let ceva = LineArrangement::builtin(Builtin::Ceva);
        assert_eq!(
            good_primes_below(&ceva, 5, 19, 100),
            Err(Error::NotEnoughPrimes { wanted: 5, found: 3, bound: 100 })
        );
    }
}
