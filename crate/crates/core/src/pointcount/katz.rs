use num_traits::ToPrimitive;

use super::fit::{is_integral, TwistFit};
use crate::error::{Error, Result};
use crate::repring::{decode_characters, EquivPoly};

/// Reads a diagonal equivariant E-polynomial off per-twist count polynomials.
///
/// The coefficient of `q^i` at twist `j` is the trace of `lambda^j` on the
/// `(i, i)` part, so each power is decoded from its `d` character values.
pub fn katz_extract(fits: &[TwistFit], label: &str) -> Result<EquivPoly> {
    let d = fits.len();
    let mut coeffs = Vec::with_capacity(d);
    for fit in fits {
        match fit {
            TwistFit::Polynomial { coeffs: c } => coeffs.push(c.as_slice()),
            TwistFit::NotPolynomialCount { witness } => return Err(Error::NotPolynomialCount { witness: *witness }),
        }
    }
    let top = coeffs.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut e = EquivPoly::new(d, label);
    for power in 0..top {
        let traces = coeffs
            .iter()
            .enumerate()
            .map(|(twist, c)| match c.get(power) {
                None => Ok(0),
                Some(x) if is_integral(x) => x.to_integer().to_i64().ok_or(Error::NonIntegral { power, twist }),
                Some(_) => Err(Error::NonIntegral { power, twist }),
            })
            .collect::<Result<Vec<i64>>>()?;
        e.add_at(power as i32, power as i32, &decode_characters(&traces)?);
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointcount::fit::Coeff;
    use crate::repring::ReprClass;

    fn poly(c: &[i128]) -> TwistFit {
        TwistFit::Polynomial { coeffs: c.iter().map(|&x| Coeff::from_integer(x)).collect() }
    }

    #[test]
    fn boolean_shape() {
        let e = katz_extract(&[poly(&[1, -2, 1]), poly(&[1, -2, 1]), poly(&[1, -2, 1])], "E").unwrap();
        assert_eq!(e.get(2, 2), ReprClass::trivial(3, 1));
        assert_eq!(e.get(1, 1), ReprClass::trivial(3, -2));
        assert_eq!(e.get(0, 0), ReprClass::trivial(3, 1));
    }

    #[test]
    fn nontrivial_characters() {
        // traces (2, -1, -1) are those of lambda + lambda^2
        let e = katz_extract(&[poly(&[2]), poly(&[-1]), poly(&[-1])], "E").unwrap();
        assert_eq!(e.get(0, 0), ReprClass::from_mult(vec![0, 1, 1]));
    }

    #[test]
    fn failures() {
        let np = [poly(&[1]), TwistFit::NotPolynomialCount { witness: 31 }];
        assert_eq!(katz_extract(&np, ""), Err(Error::NotPolynomialCount { witness: 31 }));
        let half = TwistFit::Polynomial { coeffs: vec![Coeff::new(1, 2)] };
        assert_eq!(katz_extract(&[poly(&[1]), half], ""), Err(Error::NonIntegral { power: 0, twist: 1 }));
        assert!(matches!(katz_extract(&[poly(&[1]), poly(&[2]), poly(&[0])], ""), Err(Error::Decode { .. })));
    }
}
