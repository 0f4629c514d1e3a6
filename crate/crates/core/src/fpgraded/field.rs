use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A prime modulus. Residues are kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Prime(u32);

impl Prime {
    /// Largest accepted prime; keeps every product of two residues inside `u64`.
    pub const MAX: u32 = 1 << 30;

    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > Self::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.0 as u64) as u32
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero mod {}", self.0);
        self.pow(a, self.0 as u64 - 2)
    }

    /// `(-1)^k` as a residue.
    pub fn sign(self, odd: bool) -> u32 {
        if odd {
            self.neg(1)
        } else {
            1
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_small() {
        for n in [0, 1, 4, 9, 15, 1 << 31] {
            assert_eq!(Prime::new(n), Err(Error::NotPrime(n)));
        }
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(7).is_ok());
    }

    #[test]
    fn inverses() {
        let p = Prime::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a)), 1);
        }
        assert_eq!(p.reduce(-1), 6);
        assert_eq!(p.sign(true), 6);
    }
}
