//! Exact arithmetic in the cyclotomic field K = Q(rho_p) for an odd prime p.
//!
//! Elements are stored as dense coordinate vectors on the power basis
//! 1, rho, ..., rho^(p-2) of Q[t]/Phi_p(t), with arbitrary-precision
//! rational coefficients.  Reduction uses the single relation
//! rho^(p-1) = -(1 + rho + ... + rho^(p-2)).

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The primes this crate supports.  p = 2 is excluded on purpose.
pub const SUPPORTED_PRIMES: [usize; 5] = [3, 5, 7, 11, 13];

/// Checks that `p` is an odd prime <= 13.
pub fn check_prime(p: usize) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime(p))
    }
}

/// An element of K = Q(rho_p), always fully reduced modulo Phi_p.
#[derive(Clone, PartialEq, Eq)]
pub struct CycNum {
    p: usize,
    /// Length p - 1; coordinate i is the coefficient of rho^i.
    coeffs: Vec<BigRational>,
}

impl CycNum {
    /// Builds an element from coordinates on the power basis.
    /// The vector must have length p - 1.
    pub fn new(p: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        check_prime(p)?;
        if coeffs.len() != p - 1 {
            return Err(Error::Shape(format!(
                "expected {} coordinates, got {}",
                p - 1,
                coeffs.len()
            )));
        }
        Ok(CycNum { p, coeffs })
    }

    pub fn zero(p: usize) -> Self {
        CycNum {
            p,
            coeffs: vec![BigRational::zero(); p - 1],
        }
    }

    pub fn one(p: usize) -> Self {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: usize, n: i64) -> Self {
        Self::from_rational(p, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(p: usize, q: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); p - 1];
        coeffs[0] = q;
        CycNum { p, coeffs }
    }

    /// The primitive p-th root of unity rho.
    pub fn rho(p: usize) -> Self {
        Self::rho_pow(p, 1)
    }

    /// rho^k for any integer k (negative exponents allowed).
    pub fn rho_pow(p: usize, k: i64) -> Self {
        let pi = p as i64;
        let k = ((k % pi) + pi) % pi;
        let mut raw = vec![BigRational::zero(); p];
        raw[k as usize] = BigRational::one();
        Self::reduce(p, raw)
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Returns the rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Reduces a raw length-p exponent vector using
    /// rho^(p-1) = -(1 + rho + ... + rho^(p-2)).
    fn reduce(p: usize, mut raw: Vec<BigRational>) -> Self {
        debug_assert_eq!(raw.len(), p);
        let top = raw.pop().unwrap();
        if !top.is_zero() {
            for c in raw.iter_mut() {
                *c -= &top;
            }
        }
        CycNum { p, coeffs: raw }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycNum { p: self.p, coeffs }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        CycNum { p: self.p, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let mut raw = vec![BigRational::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[(i + j) % p] += a * b;
            }
        }
        Self::reduce(p, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * q).collect();
        CycNum { p: self.p, coeffs }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Galois conjugate rho -> rho^k, for k not divisible by p.
    pub fn conj(&self, k: i64) -> Result<Self> {
        let p = self.p as i64;
        if k.rem_euclid(p) == 0 {
            return Err(Error::BadExponent(k));
        }
        let k = k.rem_euclid(p) as usize;
        let mut raw = vec![BigRational::zero(); self.p];
        for (i, a) in self.coeffs.iter().enumerate() {
            raw[(i * k) % self.p] += a;
        }
        Ok(Self::reduce(self.p, raw))
    }

    /// Field norm to Q: the product of all p - 1 Galois conjugates.
    pub fn norm(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut prod = self.clone();
        for k in 2..self.p {
            prod = prod.mul(&self.conj(k as i64).expect("k in 2..p is a unit mod p"));
        }
        prod.as_rational()
            .expect("product over the full Galois orbit is rational")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        // inv = (product of the other conjugates) / norm
        let mut cofactor = Self::one(self.p);
        for k in 2..self.p {
            cofactor = cofactor.mul(&self.conj(k as i64)?);
        }
        let n = self.norm();
        Ok(cofactor.scale(&n.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.p);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "r")?;
                    } else {
                        write!(f, "r^{}", i)?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn rational_from_string(s: &str) -> Result<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer =
        BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("bad numerator {s:?}: {e}")))?;
    let denom =
        BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("bad denominator {s:?}: {e}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

impl Serialize for CycNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&rational_to_string(c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = CycNum;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of p-1 rational strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<CycNum, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    coeffs.push(rational_from_string(&s).map_err(serde::de::Error::custom)?);
                }
                let p = coeffs.len() + 1;
                CycNum::new(p, coeffs).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}
