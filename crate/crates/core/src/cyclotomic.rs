//! Exact arithmetic in Z[ζ_p] over the basis 1, ζ, ..., ζ^{p-2}.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycError {
    #[error("mismatched cyclotomic orders {0} and {1}")]
    Mismatch(u32, u32),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        CycInt { p, coeffs: vec![BigInt::zero(); (p - 1) as usize] }
    }

    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Self {
        let mut c = Self::zero(p);
        c.coeffs[0] = n.into();
        c
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// ζ_p^e.
    pub fn from_exponent(p: u32, e: u32) -> Self {
        let mut z = ZetaSum::new(p);
        z.add(e, 1);
        z.to_cyc()
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<(), CycError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(CycError::Mismatch(self.p, other.p))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt { p: self.p, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CycError> {
        self.check(other)?;
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                full[(i + j) % p] += a * b;
            }
        }
        Ok(Self::from_full(self.p, full))
    }

    /// Reduces a length-p coefficient vector using ζ^{p-1} = -(1 + ... + ζ^{p-2}).
    fn from_full(p: u32, mut full: Vec<BigInt>) -> Self {
        let top = full.pop().unwrap();
        let coeffs = full.into_iter().map(|c| c - &top).collect();
        CycInt { p, coeffs }
    }

    /// Complex conjugation ζ^i ↦ ζ^{-i}.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut full = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            full[(p - i) % p] += a;
        }
        Self::from_full(self.p, full)
    }

    /// The rational integer value, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// a / n when a is a rational integer divisible by n.
    pub fn is_integer_multiple(&self, n: &BigInt) -> Option<BigInt> {
        let v = self.as_integer()?;
        (!n.is_zero() && (&v % n).is_zero()).then(|| v / n)
    }

    /// Writes self = m·ζ^e with m a nonnegative integer, when possible.
    pub fn as_scaled_root(&self) -> Option<(BigInt, u32)> {
        if self.is_zero() {
            return Some((BigInt::zero(), 0));
        }
        for e in 0..self.p {
            let z = Self::from_exponent(self.p, (self.p - e) % self.p);
            let w = self.mul(&z).ok()?;
            if let Some(m) = w.as_integer() {
                if m.is_positive() {
                    return Some((m, e));
                }
                if self.p == 2 {
                    return Some((-m, 1));
                }
            }
        }
        None
    }

    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match i {
                0 => c.to_string(),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{c}*z"),
                _ if c.is_one() => format!("z^{i}"),
                _ => format!("{c}*z^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("CycInt", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Accumulator of Σ n_e ζ^e with machine-integer counts per exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaSum {
    p: u32,
    counts: Vec<i64>,
}

impl ZetaSum {
    pub fn new(p: u32) -> Self {
        ZetaSum { p, counts: vec![0; p as usize] }
    }

    pub fn add(&mut self, e: u32, n: i64) {
        self.counts[(e % self.p) as usize] += n;
    }

    pub fn merge(&mut self, other: &ZetaSum) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub fn to_cyc(&self) -> CycInt {
        CycInt::from_full(self.p, self.counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.to_cyc().is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        let z5 = CycInt::from_exponent(5, 1);
        let z5_4 = CycInt::from_exponent(5, 4);
        assert_eq!(z5.mul(&z5_4).unwrap(), CycInt::one(5));
        let s = CycInt::from_exponent(3, 1).add(&CycInt::from_exponent(3, 2)).unwrap();
        assert_eq!(s, CycInt::from_int(3, -1));
        let m = CycInt::from_exponent(2, 1);
        assert_eq!(m, CycInt::from_int(2, -1));
        assert_eq!(m.mul(&m).unwrap(), CycInt::one(2));
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycInt::from_exponent(5, 1).conj(), CycInt::from_exponent(5, 4));
        let a = CycInt::from_int(3, 2).add(&CycInt::from_exponent(3, 1)).unwrap();
        let expected = CycInt::from_int(3, 1).sub(&CycInt::from_exponent(3, 1)).unwrap();
        assert_eq!(a.conj(), expected);
        assert_eq!(CycInt::from_int(5, 7).conj(), CycInt::from_int(5, 7));
    }

    #[test]
    fn integer_multiples() {
        let n = BigInt::from(1024);
        assert_eq!(CycInt::from_int(2, 1024).is_integer_multiple(&n), Some(BigInt::one()));
        assert_eq!(CycInt::from_int(2, 2048).is_integer_multiple(&n), Some(BigInt::from(2)));
        assert_eq!(CycInt::from_exponent(3, 1).is_integer_multiple(&BigInt::one()), None);
    }

    #[test]
    fn mismatch_is_error() {
        assert!(CycInt::one(3).add(&CycInt::one(5)).is_err());
    }

    #[test]
    fn scaled_roots() {
        let v = CycInt::from_exponent(5, 3).scale(&BigInt::from(81));
        assert_eq!(v.as_scaled_root(), Some((BigInt::from(81), 3)));
        assert_eq!(CycInt::from_int(2, -8).as_scaled_root(), Some((BigInt::from(8), 1)));
        let w = CycInt::one(3).add(&CycInt::from_exponent(3, 1)).unwrap();
        assert_eq!(w.as_scaled_root(), None);
    }
}
