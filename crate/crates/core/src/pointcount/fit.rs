use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = Ratio<i128>;

/// Exact fit of one twist's counts, coefficients constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum TwistFit {
    Polynomial {
        #[serde(with = "crate::fraction::vec")]
        coeffs: Vec<Coeff>,
    },
    NotPolynomialCount {
        witness: u64,
    },
}

impl TwistFit {
    pub fn coeffs(&self) -> Option<&[Coeff]> {
        match self {
            TwistFit::Polynomial { coeffs } => Some(coeffs),
            TwistFit::NotPolynomialCount { .. } => None,
        }
    }
}

/// Interpolates through the first `degree + 1` samples and checks the rest.
pub fn fit_polynomial(samples: &[(u64, i64)], degree: usize) -> Result<TwistFit> {
    let needed = degree + 2;
    if samples.len() < needed {
        return Err(Error::InsufficientPrimes { needed, got: samples.len(), degree });
    }
    let (head, tail) = samples.split_at(degree + 1);
    let coeffs = interpolate(head);
    for &(q, v) in tail {
        if eval(&coeffs, q as i128) != Coeff::from_integer(v as i128) {
            return Ok(TwistFit::NotPolynomialCount { witness: q });
        }
    }
    Ok(TwistFit::Polynomial { coeffs })
}

/// One fit per twist; `rows[i] = (q_i, counts by twist)`.
pub fn fit_polynomials(rows: &[(u64, Vec<i64>)], degree: usize) -> Result<Vec<TwistFit>> {
    let twists = rows.first().map_or(0, |r| r.1.len());
    (0..twists)
        .map(|j| {
            let samples: Vec<(u64, i64)> = rows.iter().map(|(q, c)| (*q, c[j])).collect();
            fit_polynomial(&samples, degree)
        })
        .collect()
}

fn eval(coeffs: &[Coeff], t: i128) -> Coeff {
    let t = Coeff::from_integer(t);
    coeffs.iter().rev().fold(Coeff::zero(), |acc, c| acc * t + c)
}

/// Newton divided differences expanded into the monomial basis, trailing zeros trimmed.
fn interpolate(points: &[(u64, i64)]) -> Vec<Coeff> {
    let xs: Vec<Coeff> = points.iter().map(|&(q, _)| Coeff::from_integer(q as i128)).collect();
    let mut dd: Vec<Coeff> = points.iter().map(|&(_, v)| Coeff::from_integer(v as i128)).collect();
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton form
    let mut poly = vec![Coeff::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (t - x_i) + dd[i]
        let mut next = vec![Coeff::zero(); n];
        for (k, c) in poly.iter().enumerate() {
            if k + 1 < n {
                next[k + 1] += c;
            }
            next[k] -= c * xs[i];
        }
        next[0] += dd[i];
        poly = next;
    }
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    if poly.len() == 1 && poly[0].is_zero() {
        poly.clear();
    }
    poly
}

pub(crate) fn is_integral(c: &Coeff) -> bool {
    c.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i128]) -> Vec<Coeff> {
        v.iter().map(|&c| Coeff::from_integer(c)).collect()
    }

    #[test]
    fn fits_square() {
        let s: Vec<(u64, i64)> = [7u64, 13, 19, 31].iter().map(|&q| (q, (q as i64 - 1).pow(2))).collect();
        assert_eq!(fit_polynomial(&s, 2).unwrap(), TwistFit::Polynomial { coeffs: ints(&[1, -2, 1]) });
    }

    #[test]
    fn detects_non_polynomial() {
        let s = [(7, 49), (13, 169), (19, 361), (31, 962)];
        assert_eq!(fit_polynomial(&s, 2).unwrap(), TwistFit::NotPolynomialCount { witness: 31 });
    }

    #[test]
    fn needs_a_spare_point() {
        let s = [(7, 1), (13, 1), (19, 1)];
        assert_eq!(fit_polynomial(&s, 2), Err(Error::InsufficientPrimes { needed: 4, got: 3, degree: 2 }));
    }

    #[test]
    fn rational_coefficients() {
        let s: Vec<(u64, i64)> = [1u64, 2, 3, 4].iter().map(|&q| (q, (q * (q + 1) / 2) as i64)).collect();
        let fit = fit_polynomial(&s, 2).unwrap();
        let c = fit.coeffs().unwrap();
        assert_eq!(c, &[Coeff::zero(), Coeff::new(1, 2), Coeff::new(1, 2)]);
        assert!(!is_integral(&c[1]));
        assert_eq!(fit_polynomial(&[(3, 0), (5, 0), (7, 0)], 1).unwrap(), TwistFit::Polynomial { coeffs: vec![] });
    }
}
