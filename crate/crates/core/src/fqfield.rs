//! Arithmetic in F_{p^f} with dense coefficient vectors, the trace map, the
//! additive character φ(x) = ζ_p^{Tr(x)}, and the T_a / a_φ machinery.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 4;

const CONWAY_TABLE: &str = include_str!("../data/conway.txt");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree {0} outside 1..={MAX_DEGREE}")]
    BadDegree(usize),
    #[error("modulus must be monic of degree {expected}, got {got:?}")]
    BadModulus { expected: usize, got: Vec<u32> },
    #[error("modulus {0:?} is reducible over F_{1}")]
    Reducible(Vec<u32>, u32),
    #[error("no embedded Conway polynomial for p={0}, f={1}")]
    NoConway(u32, usize),
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("a_phi is undefined for a = 0")]
    ZeroAPhi,
    #[error("cannot parse field element {0:?}")]
    Parse(String),
}

/// An element of F_q as its coefficient vector c0 + c1 x + ... in the
/// polynomial basis. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug, Serialize)]
pub struct FqElem {
    c: [u8; MAX_DEGREE],
}

impl FqElem {
    pub const ZERO: FqElem = FqElem { c: [0; MAX_DEGREE] };

    pub fn coeffs(&self) -> &[u8; MAX_DEGREE] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0; MAX_DEGREE]
    }
}

/// Exponent e with φ_a(x) = ζ_p^e.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PhiExponent(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    f: usize,
    q: usize,
    modulus: Vec<u32>,
    trace_basis: [u32; MAX_DEGREE],
    dual: [FqElem; MAX_DEGREE],
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv_lead = pow_mod(m[dm], p - 2, p);
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        if lead != 0 {
            let k = lead * inv_lead % p;
            let shift = r.len() - 1 - dm;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - k * mi % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn pow_mod(b: u32, mut e: u32, p: u32) -> u32 {
    let (mut acc, mut b) = (1u64, b as u64 % p as u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Trial factorization: no monic factor of degree 1..=deg/2.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as usize).pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut k = idx;
            for c in g.iter_mut().take(d) {
                *c = (k % p as usize) as u32;
                k /= p as usize;
            }
            g[d] = 1;
            if poly_rem(m, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds F_{p^f} = F_p[x]/(modulus); `modulus` lists c0..cf and must be monic.
    pub fn new(p: u32, f: usize, modulus: &[u32]) -> Result<Self, FieldError> {
        if !is_prime(p) || p > 251 {
            return Err(FieldError::NotPrime(p));
        }
        if f == 0 || f > MAX_DEGREE {
            return Err(FieldError::BadDegree(f));
        }
        if modulus.len() != f + 1 || modulus[f] % p != 1 {
            return Err(FieldError::BadModulus { expected: f, got: modulus.to_vec() });
        }
        let modulus: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(modulus, p));
        }
        let mut field = FieldSpec {
            p,
            f,
            q: (p as usize).pow(f as u32),
            modulus,
            trace_basis: [0; MAX_DEGREE],
            dual: [FqElem::ZERO; MAX_DEGREE],
        };
        for i in 0..f {
            let xi = field.basis(i);
            let mut acc = FqElem::ZERO;
            let mut y = xi;
            for _ in 0..f {
                acc = field.add(acc, y);
                y = field.pow(y, p as u64);
            }
            field.trace_basis[i] = acc.c[0] as u32;
        }
        field.dual = field.compute_dual();
        Ok(field)
    }

    /// The embedded Conway polynomial field for (p, f).
    pub fn conway(p: u32, f: usize) -> Result<Self, FieldError> {
        let m = conway_polynomial(p, f).ok_or(FieldError::NoConway(p, f))?;
        Self::new(p, f, &m)
    }

    /// Conway field of order q (q a power of 2, 3 or 5 up to the fourth power).
    pub fn of_order(q: usize) -> Result<Self, FieldError> {
        for p in [2u32, 3, 5] {
            for f in 1..=MAX_DEGREE {
                if (p as usize).pow(f as u32) == q {
                    return Self::conway(p, f);
                }
            }
        }
        Err(FieldError::NoConway(0, 0))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FqElem {
        let mut e = FqElem::ZERO;
        e.c[0] = n.rem_euclid(self.p as i64) as u8;
        e
    }

    pub fn from_coeffs(&self, cs: &[u32]) -> FqElem {
        let mut e = FqElem::ZERO;
        for (i, &c) in cs.iter().enumerate().take(self.f) {
            e.c[i] = (c % self.p) as u8;
        }
        e
    }

    /// The polynomial basis element x^j.
    pub fn basis(&self, j: usize) -> FqElem {
        if self.f == 1 {
            return self.one();
        }
        let mut e = FqElem::ZERO;
        e.c[j] = 1;
        e
    }

    /// Element number `idx` in coefficient-lexicographic order (c0 most significant).
    pub fn element(&self, idx: usize) -> FqElem {
        let mut e = FqElem::ZERO;
        let mut k = idx;
        for i in (0..self.f).rev() {
            e.c[i] = (k % self.p as usize) as u8;
            k /= self.p as usize;
        }
        e
    }

    pub fn index(&self, a: FqElem) -> usize {
        a.c[..self.f].iter().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q).map(move |i| self.element(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (1..self.q).map(move |i| self.element(i))
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p as u8;
        let mut r = FqElem::ZERO;
        for i in 0..self.f {
            let s = a.c[i] + b.c[i];
            r.c[i] = if s >= p { s - p } else { s };
        }
        r
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.p as u8;
        let mut r = FqElem::ZERO;
        for i in 0..self.f {
            r.c[i] = if a.c[i] == 0 { 0 } else { p - a.c[i] };
        }
        r
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    /// k·a for an integer k.
    pub fn scale(&self, a: FqElem, k: i64) -> FqElem {
        let k = k.rem_euclid(self.p as i64) as u32;
        let mut r = FqElem::ZERO;
        for i in 0..self.f {
            r.c[i] = (a.c[i] as u32 * k % self.p) as u8;
        }
        r
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p;
        let f = self.f;
        if f == 1 {
            let mut r = FqElem::ZERO;
            r.c[0] = (a.c[0] as u32 * b.c[0] as u32 % p) as u8;
            return r;
        }
        let mut prod = [0u32; 2 * MAX_DEGREE];
        for i in 0..f {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..f {
                prod[i + j] += a.c[i] as u32 * b.c[j] as u32;
            }
        }
        for d in (f..2 * f - 1).rev() {
            let lead = prod[d] % p;
            if lead != 0 {
                for i in 0..f {
                    prod[d - f + i] += (p - self.modulus[i]) % p * lead;
                }
            }
            prod[d] = 0;
        }
        let mut r = FqElem::ZERO;
        for i in 0..f {
            r.c[i] = (prod[i] % p) as u8;
        }
        r
    }

    pub fn pow(&self, a: FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Tr_{F_q/F_p}(a), returned as an integer in 0..p.
    pub fn trace(&self, a: FqElem) -> u32 {
        (0..self.f).map(|i| a.c[i] as u32 * self.trace_basis[i]).sum::<u32>() % self.p
    }

    /// Tr by the defining sum a + a^p + ... + a^{p^{f-1}}; used to cross-check `trace`.
    pub fn trace_by_frobenius(&self, a: FqElem) -> u32 {
        let mut acc = FqElem::ZERO;
        let mut y = a;
        for _ in 0..self.f {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as u64);
        }
        debug_assert!(acc.c[1..].iter().all(|&c| c == 0));
        acc.c[0] as u32
    }

    /// φ_a(x) = φ(a x) = ζ_p^{Tr(a x)}.
    pub fn phi_exponent(&self, a: FqElem, x: FqElem) -> PhiExponent {
        PhiExponent(self.trace(self.mul(a, x)))
    }

    /// ker φ = {x : Tr(x) = 0}, sorted.
    pub fn kernel_phi(&self) -> Vec<FqElem> {
        self.elements().filter(|&x| self.trace(x) == 0).collect()
    }

    /// t^p − a^{p−1} t.
    pub fn artin_schreier(&self, a: FqElem, t: FqElem) -> FqElem {
        let ap = self.pow(a, self.p as u64 - 1);
        self.sub(self.pow(t, self.p as u64), self.mul(ap, t))
    }

    /// T_a = {t^p − a^{p−1} t : t ∈ F_q}, sorted and deduplicated.
    pub fn t_a_set(&self, a: FqElem) -> Vec<FqElem> {
        let mut v: Vec<FqElem> = self.elements().map(|t| self.artin_schreier(a, t)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Whether b·S equals ker φ for a set S given sorted.
    pub fn scales_onto_kernel(&self, b: FqElem, set: &[FqElem]) -> bool {
        let mut img: Vec<FqElem> = set.iter().map(|&t| self.mul(b, t)).collect();
        img.sort();
        img.dedup();
        img == self.kernel_phi()
    }

    /// The least b (coefficient-lexicographic) with b·T_a = ker φ.
    pub fn find_a_phi(&self, a: FqElem) -> Result<FqElem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroAPhi);
        }
        let ta = self.t_a_set(a);
        let kernel = self.kernel_phi();
        for b in self.nonzero_elements() {
            let mut img: Vec<FqElem> = ta.iter().map(|&t| self.mul(b, t)).collect();
            img.sort();
            img.dedup();
            if img == kernel {
                return Ok(b);
            }
        }
        unreachable!("T_a has index p, so some multiple equals ker φ")
    }

    /// Whether a = c^k for some nonzero c.
    pub fn is_kth_power(&self, a: FqElem, k: u64) -> bool {
        !a.is_zero() && self.nonzero_elements().any(|c| self.pow(c, k) == a)
    }

    /// Some c with c^k = a, least in enumeration order.
    pub fn kth_root(&self, a: FqElem, k: u64) -> Option<FqElem> {
        self.nonzero_elements().find(|&c| self.pow(c, k) == a)
    }

    fn compute_dual(&self) -> [FqElem; MAX_DEGREE] {
        // Gram matrix G_ij = Tr(x^i x^j); dual basis column j solves G d = e_j.
        let f = self.f;
        let p = self.p;
        let gram: Vec<Vec<u32>> = (0..f)
            .map(|i| (0..f).map(|j| self.trace(self.mul(self.basis(i), self.basis(j)))).collect())
            .collect();
        let inv = crate::linalg::invert(&gram, p).expect("trace form is nondegenerate");
        let mut dual = [FqElem::ZERO; MAX_DEGREE];
        for (j, d) in dual.iter_mut().enumerate().take(f) {
            let coeffs: Vec<u32> = (0..f).map(|i| inv[i][j]).collect();
            *d = self.from_coeffs(&coeffs);
        }
        dual
    }

    /// The trace-dual basis element e_j^* with Tr(x^i e_j^*) = δ_ij.
    pub fn dual_basis(&self, j: usize) -> FqElem {
        self.dual[j]
    }

    /// The functional x ↦ Tr(b x) on the polynomial basis.
    pub fn functional(&self, b: FqElem) -> Vec<u32> {
        (0..self.f).map(|j| self.trace(self.mul(b, self.basis(j)))).collect()
    }

    /// Inverse of `functional`: the unique b with Tr(b x^j) = values[j].
    pub fn from_functional(&self, values: &[u32]) -> FqElem {
        let mut b = FqElem::ZERO;
        for (j, &v) in values.iter().enumerate() {
            b = self.add(b, self.scale(self.dual[j], v as i64));
        }
        b
    }

    /// "p^f:c0,c1,..." serialization.
    pub fn format(&self, a: FqElem) -> String {
        let cs: Vec<String> = a.c[..self.f].iter().map(|c| c.to_string()).collect();
        format!("{}^{}:{}", self.p, self.f, cs.join(","))
    }

    /// Compact form used in words: an integer for prime-field elements, else "c0,c1,...".
    pub fn format_short(&self, a: FqElem) -> String {
        if a.c[1..].iter().all(|&c| c == 0) {
            a.c[0].to_string()
        } else {
            a.c[..self.f].iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Accepts "p^f:c0,..", "c0,c1,.." or a (possibly negative) integer.
    pub fn parse(&self, s: &str) -> Result<FqElem, FieldError> {
        let err = || FieldError::Parse(s.to_string());
        let s = s.trim();
        let body = match s.split_once(':') {
            Some((head, body)) => {
                let (p, f) = head.split_once('^').ok_or_else(err)?;
                if p.trim().parse::<u32>().ok() != Some(self.p)
                    || f.trim().parse::<usize>().ok() != Some(self.f)
                {
                    return Err(err());
                }
                body
            }
            None => s,
        };
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() == 1 {
            let n: i64 = parts[0].trim().parse().map_err(|_| err())?;
            return Ok(self.from_int(n));
        }
        if parts.len() != self.f {
            return Err(err());
        }
        let mut e = FqElem::ZERO;
        for (i, part) in parts.iter().enumerate() {
            let n: i64 = part.trim().parse().map_err(|_| err())?;
            e.c[i] = n.rem_euclid(self.p as i64) as u8;
        }
        Ok(e)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

/// Embedded Conway polynomial for (p, f), coefficients c0..cf.
pub fn conway_polynomial(p: u32, f: usize) -> Option<Vec<u32>> {
    let table = std::env::var("UNICHAR_TABLE_DIR")
        .ok()
        .and_then(|dir| std::fs::read_to_string(std::path::Path::new(&dir).join("conway.txt")).ok());
    let text = table.as_deref().unwrap_or(CONWAY_TABLE);
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(|l| {
            let nums: Vec<u32> = l.split_whitespace().filter_map(|w| w.parse().ok()).collect();
            (nums.len() >= 3 && nums[0] == p && nums[1] as usize == f).then(|| nums[2..].to_vec())
        })
        .next()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_multiplication() {
        let k = FieldSpec::conway(2, 2).unwrap();
        let w = k.basis(1);
        assert_eq!(k.mul(w, w), k.add(w, k.one()));
        assert_eq!(k.trace(k.one()), 0);
        assert_eq!(k.trace(w), 1);
    }

    #[test]
    fn trace_in_f9_with_x2_plus_1() {
        let k = FieldSpec::new(3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(k.trace(k.basis(1)), 0);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(matches!(FieldSpec::new(2, 2, &[1, 0, 1]), Err(FieldError::Reducible(..))));
        assert!(matches!(FieldSpec::new(4, 1, &[1, 1]), Err(FieldError::NotPrime(4))));
    }

    #[test]
    fn parse_round_trip() {
        let k = FieldSpec::conway(5, 2).unwrap();
        for a in k.elements() {
            assert_eq!(k.parse(&k.format(a)).unwrap(), a);
            assert_eq!(k.parse(&k.format_short(a)).unwrap(), a);
        }
        assert_eq!(k.parse("-1").unwrap(), k.from_int(4));
        assert!(k.parse("3^2:1,1").is_err());
    }

    #[test]
    fn zero_inverse_is_error() {
        let k = FieldSpec::conway(3, 1).unwrap();
        assert_eq!(k.inv(k.zero()), Err(FieldError::ZeroInverse));
        assert_eq!(k.find_a_phi(k.zero()), Err(FieldError::ZeroAPhi));
    }
}
