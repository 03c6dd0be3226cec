//! Arithmetic in GF(p^k) with elements encoded as integers below p^k.
//!
//! An element's base-p digits are the coefficients of its polynomial
//! representative modulo a fixed monic irreducible polynomial. The default
//! modulus for each (p, k) is the least monic irreducible polynomial of
//! degree k in the integer-encoding order of its coefficient vector, which is
//! deterministic and stable across runs.

use crate::error::{FieldError, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factors `n = p^k` with p prime, if possible.
pub fn prime_power(n: u64) -> Option<(u64, usize)> {
    permcore::prime_power(n as u128).map(|(p, t)| (p, t as usize))
}

/// A finite field GF(p^k) together with its defining modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic modulus of degree k, coefficients lowest-first, length k+1.
    modulus: Vec<u64>,
}

// polynomial helpers over GF(p), coefficients lowest-first

fn poly_trim(c: &mut Vec<u64>) {
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dm;
            for i in 0..=dm {
                r[shift + i] = (r[shift + i] + (p - lead) * m[i]) % p;
            }
        }
        r.pop();
    }
    poly_trim(&mut r);
    r
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !poly_is_zero(&b) {
        // make b monic before reducing
        let lead = *b.last().unwrap();
        let inv = mod_inv(lead, p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
        poly_trim(&mut b);
    }
    a
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mm = m as u128;
    let mut bb = b as u128 % mm;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// `x^(p^reps)` modulo `m`, by repeated p-th powering.
fn poly_pow_p(a: &[u64], reps: usize, m: &[u64], p: u64) -> Vec<u64> {
    let mut cur = a.to_vec();
    for _ in 0..reps {
        // raise to the p-th power by square and multiply
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Irreducibility over GF(p) by the standard Frobenius criterion:
/// x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k.
pub fn poly_irreducible(modulus: &[u64], p: u64) -> bool {
    let k = modulus.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let xpk = poly_pow_p(&x, k, modulus, p);
    let mut diff = xpk.clone();
    // diff = x^(p^k) - x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    if !poly_is_zero(&diff) {
        return false;
    }
    let mut primes = Vec::new();
    let mut kk = k;
    let mut d = 2;
    while d * d <= kk {
        if kk % d == 0 {
            primes.push(d);
            while kk % d == 0 {
                kk /= d;
            }
        }
        d += 1;
    }
    if kk > 1 {
        primes.push(kk);
    }
    for r in primes {
        let xe = poly_pow_p(&x, k / r, modulus, p);
        let mut diff = xe.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(modulus, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^k) with an explicit monic irreducible modulus.
    pub fn new(p: u64, k: usize, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 || k > 16 {
            return Err(FieldError::BadExtensionDegree(k));
        }
        let size = (p as u128).pow(k as u32);
        if size > 1 << 16 {
            return Err(FieldError::FieldTooLarge(size));
        }
        if modulus.len() != k + 1 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(FieldError::BadModulus { k });
        }
        if k > 1 && !poly_irreducible(&modulus, p) {
            return Err(FieldError::ReducibleModulus { p });
        }
        Ok(FieldSpec { p, k, modulus })
    }

    /// The prime field GF(p), with modulus x.
    pub fn prime_field(p: u64) -> Result<Self> {
        FieldSpec::new(p, 1, vec![0, 1])
    }

    /// GF(p^k) with the least monic irreducible modulus in coefficient
    /// encoding order.
    pub fn with_least_modulus(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 1 {
            return Self::prime_field(p);
        }
        if k == 0 || k > 16 {
            return Err(FieldError::BadExtensionDegree(k));
        }
        let lower = (p as u128).pow(k as u32);
        if lower > 1 << 16 {
            return Err(FieldError::FieldTooLarge(lower));
        }
        // enumerate monic degree-k polynomials by the integer encoding of
        // their lower coefficients
        for enc in 0..lower {
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut e = enc;
            for _ in 0..k {
                coeffs.push((e % p as u128) as u64);
                e /= p as u128;
            }
            coeffs.push(1);
            if poly_irreducible(&coeffs, p) {
                return FieldSpec::new(p, k, coeffs);
            }
        }
        Err(FieldError::NoIrreducible)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Field size q = p^k.
    pub fn size(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    fn to_coeffs(&self, a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k);
        let mut e = a;
        for _ in 0..self.k {
            out.push(e % self.p);
            e /= self.p;
        }
        out
    }

    fn from_coeffs(&self, c: &[u64]) -> u64 {
        let mut acc = 0u64;
        for &x in c.iter().rev() {
            acc = acc * self.p + x % self.p;
        }
        acc
    }

    pub fn check_element(&self, a: u64) -> Result<u64> {
        if a >= self.size() {
            Err(FieldError::ElementOutOfRange(a, self.size()))
        } else {
            Ok(a)
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (ca, cb) = (self.to_coeffs(a), self.to_coeffs(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.p).collect();
        self.from_coeffs(&sum)
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let ca = self.to_coeffs(a);
        let n: Vec<u64> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_coeffs(&n)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return a * b % self.p;
        }
        let (ca, cb) = (self.to_coeffs(a), self.to_coeffs(b));
        let prod = poly_rem(&poly_mul(&ca, &cb, self.p), &self.modulus, self.p);
        self.from_coeffs(&prod)
    }

    pub fn pow(&self, a: u64, mut e: u128) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(FieldError::DivisionByZero {
                p: self.p,
                k: self.k,
            });
        }
        // a^(q-2)
        Ok(self.pow(a, (self.size() - 2) as u128))
    }

    /// The p-power Frobenius, a GF(p)-linear field automorphism.
    pub fn frobenius(&self, a: u64) -> u64 {
        self.pow(a, self.p as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.size()
    }

    /// Least generator of the multiplicative group, found by testing element
    /// encodings in increasing order.
    pub fn multiplicative_generator(&self) -> Result<u64> {
        let q1 = self.size() - 1;
        if q1 == 1 {
            return Ok(1);
        }
        let mut primes = Vec::new();
        let mut m = q1;
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        for cand in 2..self.size() {
            if primes.iter().all(|&r| self.pow(cand, (q1 / r) as u128) != 1) {
                return Ok(cand);
            }
        }
        Err(FieldError::Internal("no multiplicative generator".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_multiplication() {
        // GF(4) with modulus x^2 + x + 1: x * (x + 1) = 1
        let f = FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap();
        let x = 2; // encoding of x
        let x1 = 3; // encoding of x + 1
        assert_eq!(f.mul(x, x1), 1);
        assert_eq!(f.inv(1).unwrap(), 1);
    }

    #[test]
    fn frobenius_squared_is_identity_on_gf4() {
        let f = FieldSpec::with_least_modulus(2, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.frobenius(f.frobenius(a)), a);
        }
    }

    #[test]
    fn frobenius_fixes_exactly_prime_subfield() {
        let f = FieldSpec::with_least_modulus(3, 2).unwrap();
        let fixed: Vec<u64> = f.elements().filter(|&a| f.frobenius(a) == a).collect();
        assert_eq!(fixed, vec![0, 1, 2]);
    }

    #[test]
    fn field_axioms_spot_checks() {
        for (p, k) in [(2, 1), (3, 1), (2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = FieldSpec::with_least_modulus(p, k).unwrap();
            let q = f.size();
            for a in 0..q.min(16) {
                for b in 0..q.min(16) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q.min(8) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
            assert!(f.inv(0).is_err());
        }
    }

    #[test]
    fn least_modulus_is_deterministic_and_irreducible() {
        let f = FieldSpec::with_least_modulus(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
        let f8 = FieldSpec::with_least_modulus(2, 3).unwrap();
        assert_eq!(f8.modulus(), &[1, 1, 0, 1]); // x^3 + x + 1
        assert!(FieldSpec::new(2, 2, vec![0, 0, 1]).is_err()); // x^2 reducible
        assert!(FieldSpec::new(4, 1, vec![0, 1]).is_err()); // 4 not prime
    }

    #[test]
    fn multiplicative_generator_has_full_order() {
        for (p, k) in [(2, 2), (2, 4), (3, 2), (7, 1)] {
            let f = FieldSpec::with_least_modulus(p, k).unwrap();
            let g = f.multiplicative_generator().unwrap();
            let q1 = f.size() - 1;
            let mut x = 1;
            for i in 1..=q1 {
                x = f.mul(x, g);
                if x == 1 {
                    assert_eq!(i, q1);
                }
            }
        }
    }
}
