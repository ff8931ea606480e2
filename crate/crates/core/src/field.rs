//! Prime field arithmetic for a modulus chosen at runtime.
//!
//! Elements are bare residues; the modulus lives in the [`PrimeField`]
//! descriptor that every operation goes through. The checked entry points
//! reject residues that are not reduced for the descriptor they are used
//! with, which is how a value from `F_7` fed into `F_5` is caught.

use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted modulus (exclusive). Products fit in `u128` and sums in
/// `u64` without any special handling.
pub const MAX_MODULUS: u64 = 1 << 61;

/// A residue in `[0, p)` for the enclosing field's `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

/// The field `F_p`. Primality is checked once, at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Checked constructor: the value must already be reduced.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.p {
            Ok(FieldElement(value))
        } else {
            Err(Error::NotInField {
                value,
                modulus: self.p,
            })
        }
    }

    #[inline]
    pub fn reduce(&self, value: u64) -> FieldElement {
        FieldElement(value % self.p)
    }

    #[inline]
    pub fn from_i64(&self, value: i64) -> FieldElement {
        FieldElement(value.rem_euclid(self.p as i64) as u64)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.p
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotInField {
                value: a.0,
                modulus: self.p,
            })
        }
    }

    /// Arithmetic with membership checks on both operands.
    pub fn apply(&self, a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
        })
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.p - a.0)
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(((a.0 as u128 * b.0 as u128) % self.p as u128) as u64)
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, a.0 as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(FieldElement(t0.rem_euclid(self.p as i128) as u64))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// All elements `0, 1, …, p-1`. Only sensible for small `p`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(FieldElement)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
