//! Dense polynomials over GF(2), one bit per coefficient.

use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    // little-endian limbs, no trailing zero limb
    limbs: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { limbs: vec![1] }
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Gf2Poly::zero();
        p.flip(k);
        p
    }

    /// Polynomial with coefficient 1 at each listed exponent (repeats cancel).
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Gf2Poly::zero();
        for k in exps {
            p.flip(k);
        }
        p
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    fn flip(&mut self, k: usize) {
        let (limb, bit) = (k / 64, k % 64);
        if self.limbs.len() <= limb {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << bit;
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.limbs
            .get(k / 64)
            .map(|l| (l >> (k % 64)) & 1 == 1)
            .unwrap_or(false)
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.limbs.last()?;
        Some(64 * (self.limbs.len() - 1) + 63 - last.leading_zeros() as usize)
    }

    pub fn trailing_zeros(&self) -> Option<usize> {
        let (i, l) = self.limbs.iter().enumerate().find(|(_, l)| **l != 0)?;
        Some(64 * i + l.trailing_zeros() as usize)
    }

    /// Exponents with non-zero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.limbs.iter().enumerate().flat_map(|(i, &l)| {
            (0..64)
                .filter(move |b| (l >> b) & 1 == 1)
                .map(move |b| 64 * i + b)
        })
    }

    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (a, b) in limbs.iter_mut().zip(&short.limbs) {
            *a ^= b;
        }
        let mut p = Gf2Poly { limbs };
        p.trim();
        p
    }

    pub fn shl(&self, k: usize) -> Gf2Poly {
        if self.is_zero() {
            return Gf2Poly::zero();
        }
        let (words, bits) = (k / 64, k % 64);
        let mut limbs = vec![0u64; words];
        let mut carry = 0u64;
        for &l in &self.limbs {
            limbs.push((l << bits) | carry);
            carry = if bits == 0 { 0 } else { l >> (64 - bits) };
        }
        limbs.push(carry);
        let mut p = Gf2Poly { limbs };
        p.trim();
        p
    }

    /// Division by `x^k`, dropping the low coefficients.
    pub fn shr(&self, k: usize) -> Gf2Poly {
        let (words, bits) = (k / 64, k % 64);
        if words >= self.limbs.len() {
            return Gf2Poly::zero();
        }
        let src = &self.limbs[words..];
        let mut limbs = Vec::with_capacity(src.len());
        for i in 0..src.len() {
            let hi = if bits == 0 {
                0
            } else {
                src.get(i + 1).map(|h| h << (64 - bits)).unwrap_or(0)
            };
            limbs.push((src[i] >> bits) | hi);
        }
        let mut p = Gf2Poly { limbs };
        p.trim();
        p
    }

    /// Carry-less product.
    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut acc = Gf2Poly::zero();
        for k in other.exponents() {
            acc = acc.add(&self.shl(k));
        }
        acc
    }

    pub fn mul_one_plus_x(&self) -> Gf2Poly {
        self.add(&self.shl(1))
    }

    /// Exact quotient by `1 + x`, or `None` when the remainder is non-zero.
    pub fn div_one_plus_x(&self) -> Option<Gf2Poly> {
        let Some(d) = self.degree() else {
            return Some(Gf2Poly::zero());
        };
        if d == 0 {
            return None;
        }
        // (1+x) q = p gives q_{d-1} = p_d and q_{k-1} = p_k + q_k
        let mut q = Gf2Poly::zero();
        let mut carry = false;
        for k in (1..=d).rev() {
            carry ^= self.coeff(k);
            if carry {
                q.flip(k - 1);
            }
        }
        let remainder = self.coeff(0) ^ q.coeff(0);
        if remainder {
            None
        } else {
            Some(q)
        }
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                k => format!("x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}
