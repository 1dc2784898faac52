//! Arithmetic over the Galois field GF(q), q = p^e.
//!
//! Elements are encoded as integers in `0..q`: the base-p digits of the
//! value are the coefficients of a polynomial over GF(p), constant term
//! least significant. For e >= 2 multiplication is reduced modulo a fixed
//! monic irreducible polynomial of degree e, chosen as the first irreducible
//! in the ascending-encoding scan (equivalently, lexicographically first by
//! coefficients read from the highest power down).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u32 },
}

/// Factors `q` as `p^e` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return if rest == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// An immutable arithmetic context for GF(q); elements are `u32` values in
/// `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfContext {
    p: u32,
    e: u32,
    q: u32,
    /// Coefficients c_0..c_{e-1} of the modulus x^e + sum c_i x^i; empty for
    /// prime fields.
    modulus: Vec<u32>,
}

impl GfContext {
    pub fn new(q: u32) -> Result<Self, GfError> {
        let (p, e) = prime_power(q).ok_or(GfError::NotPrimePower { q })?;
        let modulus = if e == 1 {
            Vec::new()
        } else {
            Self::first_irreducible(p, e)
        };
        Ok(Self { p, e, q, modulus })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Lower coefficients of the modulus polynomial (empty for e = 1).
    pub fn modulus_coeffs(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0; self.e as usize];
        for slot in d.iter_mut() {
            *slot = v % self.p;
            v /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u32]) -> u32 {
        let mut v = 0;
        for &c in d.iter().rev() {
            v = v * self.p + c;
        }
        v
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            return ((a as u64 + b as u64) % self.p as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.undigits(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!(a < self.q);
        if self.e == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.undigits(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if self.e == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let e = self.e as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] += (x * y) as u64;
            }
        }
        let p = self.p as u64;
        // reduce modulo x^e + sum modulus[j] x^j, i.e. x^e = -sum modulus[j] x^j
        for i in (e..2 * e - 1).rev() {
            let c = prod[i] % p;
            prod[i] = 0;
            if c == 0 {
                continue;
            }
            for (j, &mj) in self.modulus.iter().enumerate() {
                let sub = (c * mj as u64) % p;
                prod[i - e + j] += p - sub; // add the additive inverse
            }
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&c| (c % p) as u32).collect();
        self.undigits(&digits)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.q as u64 - 2))
    }

    /// The first monic irreducible polynomial of degree e over GF(p) in the
    /// ascending-encoding scan; returned as its lower coefficients.
    fn first_irreducible(p: u32, e: u32) -> Vec<u32> {
        let total = (p as u64).pow(e);
        for encoded in 0..total {
            let mut v = encoded;
            let mut coeffs = vec![0u32; e as usize];
            for slot in coeffs.iter_mut() {
                *slot = (v % p as u64) as u32;
                v /= p as u64;
            }
            if Self::is_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("irreducible polynomials exist for every degree over every prime field");
    }

    /// Tests irreducibility of x^e + sum lower[i] x^i by trial division by
    /// every monic polynomial of degree 1..=e/2.
    fn is_irreducible(lower: &[u32], p: u32) -> bool {
        let e = lower.len();
        let mut full: Vec<u32> = lower.to_vec();
        full.push(1);
        for d in 1..=e / 2 {
            let count = (p as u64).pow(d as u32);
            for encoded in 0..count {
                let mut v = encoded;
                let mut divisor = vec![0u32; d + 1];
                for slot in divisor.iter_mut().take(d) {
                    *slot = (v % p as u64) as u32;
                    v /= p as u64;
                }
                divisor[d] = 1;
                if poly_rem_is_zero(&full, &divisor, p) {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff the monic `divisor` divides `poly` over GF(p).
fn poly_rem_is_zero(poly: &[u32], divisor: &[u32], p: u32) -> bool {
    let mut rem: Vec<u32> = poly.to_vec();
    let d = divisor.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap() % p;
        let deg = rem.len() - 1;
        if lead != 0 {
            for (j, &c) in divisor.iter().enumerate() {
                let idx = deg - d + j;
                rem[idx] = (rem[idx] + p * p - (lead * c) % p) % p;
            }
        }
        rem.pop();
        while rem.len() > d && (*rem.last().unwrap()).is_multiple_of(p) {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c % p == 0)
}
