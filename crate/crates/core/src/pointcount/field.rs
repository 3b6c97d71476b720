use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The prime field `F_p` with a fixed generator `g` of `F_p^*`.
///
/// The generator is the least primitive root, so every choice derived from it
/// (discrete logs, the embedding `mu_d -> F_p^*`) is reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    g: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::BadPrime { q: p, reason: "not prime".into() });
        }
        if p > u32::MAX as u64 {
            return Err(Error::BadPrime { q: p, reason: "too large for single-word arithmetic".into() });
        }
        if p == 2 {
            return Ok(Self { p, g: 1 });
        }
        let factors = prime_factors(p - 1);
        let g = (2..p).find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1)).expect("F_p^* is cyclic");
        Ok(Self { p, g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// A primitive `n`-th root of unity, `g^{(p-1)/n}`; needs `n | p - 1`.
    pub fn root_of_unity(&self, n: u64) -> Option<u64> {
        ((self.p - 1) % n == 0).then(|| self.pow(self.g, (self.p - 1) / n))
    }

    /// `log[v]` for `v in 1..p` (`log[0]` is unused).
    pub fn log_table(&self) -> Vec<u32> {
        let mut log = vec![0u32; self.p as usize];
        let mut x = 1u64;
        for e in 0..self.p - 1 {
            log[x as usize] = e as u32;
            x = self.mul(x, self.g);
        }
        log
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn generators() {
        assert_eq!(PrimeField::new(7).unwrap().generator(), 3);
        assert_eq!(PrimeField::new(19).unwrap().generator(), 2);
        assert_eq!(PrimeField::new(37).unwrap().generator(), 2);
        assert!(PrimeField::new(21).is_err());
    }

    #[test]
    fn logs_invert_powers() {
        let f = PrimeField::new(31).unwrap();
        let log = f.log_table();
        for v in 1..31u64 {
            assert_eq!(f.pow(f.generator(), log[v as usize] as u64), v);
        }
    }

    #[test]
    fn roots_of_unity() {
        let f = PrimeField::new(19).unwrap();
        let w = f.root_of_unity(9).unwrap();
        assert_eq!(f.pow(w, 9), 1);
        assert_ne!(f.pow(w, 3), 1);
        assert!(f.root_of_unity(4).is_none());
        assert_eq!(f.mul(f.inv(5), 5), 1);
    }
}
