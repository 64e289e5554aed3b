use std::fmt;

use crate::baumslag::poly::Gf2Poly;

/// An element `numerator / (x^xpow (1+x)^ypow)` of `GF(2)[x, 1/x, 1/(1+x)]`.
///
/// Canonical form: zero has `xpow = ypow = 0`; when `xpow > 0` the numerator
/// has a non-zero constant term; when `ypow > 0` the numerator is not
/// divisible by `1 + x`. Two values are equal iff their fields are equal.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyFrac {
    numerator: Gf2Poly,
    xpow: usize,
    ypow: usize,
}

impl PolyFrac {
    pub fn zero() -> Self {
        PolyFrac::default()
    }

    pub fn one() -> Self {
        PolyFrac::from_poly(Gf2Poly::one())
    }

    pub fn from_poly(p: Gf2Poly) -> Self {
        PolyFrac {
            numerator: p,
            xpow: 0,
            ypow: 0,
        }
    }

    /// Builds and canonicalizes an arbitrary fraction.
    pub fn new(numerator: Gf2Poly, xpow: usize, ypow: usize) -> Self {
        let mut p = PolyFrac {
            numerator,
            xpow,
            ypow,
        };
        p.canonicalize();
        p
    }

    /// `x^k (1+x)^l` for any integers `k`, `l`.
    pub fn monomial(k: i64, l: i64) -> Self {
        PolyFrac::one().mul_monomial(k, l)
    }

    /// The Laurent monomial `x^k`.
    pub fn x_pow(k: i64) -> Self {
        PolyFrac::monomial(k, 0)
    }

    /// Laurent polynomial with the given exponents (repeats cancel).
    pub fn laurent<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        exps.into_iter()
            .fold(PolyFrac::zero(), |acc, k| acc.add(&PolyFrac::x_pow(k)))
    }

    pub fn numerator(&self) -> &Gf2Poly {
        &self.numerator
    }

    pub fn xpow(&self) -> usize {
        self.xpow
    }

    pub fn ypow(&self) -> usize {
        self.ypow
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// A Laurent polynomial in `x`, i.e. no `(1+x)` in the denominator.
    pub fn is_laurent(&self) -> bool {
        self.ypow == 0
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.xpow = 0;
            self.ypow = 0;
            return;
        }
        let tz = self.numerator.trailing_zeros().unwrap_or(0).min(self.xpow);
        if tz > 0 {
            self.numerator = self.numerator.shr(tz);
            self.xpow -= tz;
        }
        while self.ypow > 0 {
            match self.numerator.div_one_plus_x() {
                Some(q) => {
                    self.numerator = q;
                    self.ypow -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator after rescaling to the denominator `x^xpow (1+x)^ypow`,
    /// which must dominate this value's own denominator.
    pub fn over_denominator(&self, xpow: usize, ypow: usize) -> Gf2Poly {
        debug_assert!(xpow >= self.xpow && ypow >= self.ypow);
        let mut n = self.numerator.shl(xpow - self.xpow);
        for _ in 0..ypow - self.ypow {
            n = n.mul_one_plus_x();
        }
        n
    }

    pub fn add(&self, other: &PolyFrac) -> PolyFrac {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let xpow = self.xpow.max(other.xpow);
        let ypow = self.ypow.max(other.ypow);
        let n = self
            .over_denominator(xpow, ypow)
            .add(&other.over_denominator(xpow, ypow));
        PolyFrac::new(n, xpow, ypow)
    }

    /// Product with `x^k (1+x)^l`.
    pub fn mul_monomial(&self, k: i64, l: i64) -> PolyFrac {
        if self.is_zero() {
            return PolyFrac::zero();
        }
        let mut out = self.clone();
        if k >= 0 {
            let k = k as usize;
            let cancel = k.min(out.xpow);
            out.xpow -= cancel;
            out.numerator = out.numerator.shl(k - cancel);
        } else {
            out.xpow += k.unsigned_abs() as usize;
        }
        if l >= 0 {
            let l = l as usize;
            let cancel = l.min(out.ypow);
            out.ypow -= cancel;
            for _ in 0..l - cancel {
                out.numerator = out.numerator.mul_one_plus_x();
            }
        } else {
            out.ypow += l.unsigned_abs() as usize;
        }
        out.canonicalize();
        out
    }

    pub fn mul(&self, other: &PolyFrac) -> PolyFrac {
        PolyFrac::new(
            self.numerator.mul(&other.numerator),
            self.xpow + other.xpow,
            self.ypow + other.ypow,
        )
    }

    /// Exponents of a Laurent polynomial, ascending; `None` if `(1+x)`
    /// divides the denominator.
    pub fn laurent_exponents(&self) -> Option<Vec<i64>> {
        if !self.is_laurent() {
            return None;
        }
        Some(
            self.numerator
                .exponents()
                .map(|e| e as i64 - self.xpow as i64)
                .collect(),
        )
    }
}

/// Decides whether `candidate` lies in the GF(2)-span of `targets`.
///
/// Denominators are cleared to a common one, which is an injective linear
/// map, and the resulting polynomials are reduced by Gaussian elimination
/// on their leading coefficients.
pub fn span_membership(targets: &[PolyFrac], candidate: &PolyFrac) -> bool {
    let xpow = targets
        .iter()
        .chain([candidate])
        .map(|p| p.xpow)
        .max()
        .unwrap_or(0);
    let ypow = targets
        .iter()
        .chain([candidate])
        .map(|p| p.ypow)
        .max()
        .unwrap_or(0);
    let mut basis: Vec<Gf2Poly> = Vec::new();
    let reduce = |basis: &[Gf2Poly], mut v: Gf2Poly| {
        // basis kept sorted by strictly decreasing degree
        for b in basis {
            if v.coeff(b.degree().unwrap()) {
                v = v.add(b);
            }
        }
        v
    };
    for t in targets {
        let v = reduce(&basis, t.over_denominator(xpow, ypow));
        if let Some(d) = v.degree() {
            for b in basis.iter_mut() {
                if b.coeff(d) {
                    *b = b.add(&v);
                }
            }
            let at = basis.partition_point(|b| b.degree().unwrap() > d);
            basis.insert(at, v);
        }
    }
    reduce(&basis, candidate.over_denominator(xpow, ypow)).is_zero()
}

impl fmt::Display for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.xpow == 0 && self.ypow == 0 {
            return write!(f, "{}", self.numerator);
        }
        let mut den = Vec::new();
        match self.xpow {
            0 => {}
            1 => den.push("x".to_string()),
            k => den.push(format!("x^{k}")),
        }
        match self.ypow {
            0 => {}
            1 => den.push("(1+x)".to_string()),
            l => den.push(format!("(1+x)^{l}")),
        }
        write!(f, "({})/({})", self.numerator, den.join(" "))
    }
}

impl fmt::Debug for PolyFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFrac({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        assert!(PolyFrac::one().add(&PolyFrac::one()).is_zero());
        let one_plus_x = PolyFrac::one().add(&PolyFrac::x_pow(1));
        assert_eq!(one_plus_x.numerator(), &Gf2Poly::from_exponents([0, 1]));
        assert_eq!((one_plus_x.xpow(), one_plus_x.ypow()), (0, 0));
        let p = PolyFrac::one().mul_monomial(-1, -1);
        assert_eq!(p.numerator(), &Gf2Poly::one());
        assert_eq!((p.xpow(), p.ypow()), (1, 1));
        assert_eq!(p.to_string(), "(1)/(x (1+x))");
        let q = PolyFrac::new(Gf2Poly::from_exponents([0, 1, 3]), 2, 1);
        assert_eq!(q.to_string(), "(1+x+x^3)/(x^2 (1+x))");
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (x + x^2) / (x (1+x)) = 1
        let p = PolyFrac::new(Gf2Poly::from_exponents([1, 2]), 1, 1);
        assert_eq!(p, PolyFrac::one());
        assert_eq!(
            PolyFrac::monomial(3, 2).mul_monomial(-3, -2),
            PolyFrac::one()
        );
        assert!(PolyFrac::new(Gf2Poly::zero(), 4, 4) == PolyFrac::zero());
    }

    #[test]
    fn span_examples() {
        assert!(!span_membership(&[PolyFrac::one()], &PolyFrac::x_pow(1)));
        assert!(span_membership(&[], &PolyFrac::zero()));
        assert!(!span_membership(&[], &PolyFrac::one()));
        let t = [PolyFrac::laurent([0, 1]), PolyFrac::laurent([1, -2])];
        assert!(span_membership(&t, &PolyFrac::laurent([0, -2])));
        assert!(!span_membership(&t, &PolyFrac::x_pow(0)));
        // 1/(1+x) + x/(1+x) = 1
        let frac = [PolyFrac::monomial(0, -1), PolyFrac::monomial(1, -1)];
        assert!(span_membership(&frac, &PolyFrac::one()));
    }

    fn frac() -> impl Strategy<Value = PolyFrac> {
        (
            proptest::collection::vec(0usize..40, 0..6),
            0usize..5,
            0usize..5,
        )
            .prop_map(|(e, x, y)| PolyFrac::new(Gf2Poly::from_exponents(e), x, y))
    }

    /// Independent check: subset sums of at most 6 targets.
    fn span_brute(targets: &[PolyFrac], c: &PolyFrac) -> bool {
        (0u32..1 << targets.len()).any(|mask| {
            let sum = targets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(PolyFrac::zero(), |acc, (_, t)| acc.add(t));
            &sum == c
        })
    }

    proptest! {
        #[test]
        fn sum_is_zero_iff_fields_equal(p in frac(), q in frac()) {
            prop_assert_eq!(p.add(&q).is_zero(), p == q);
        }

        #[test]
        fn addition_is_associative(p in frac(), q in frac(), r in frac()) {
            prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        }

        #[test]
        fn monomials_distribute(p in frac(), q in frac(), k in -5i64..5, l in -5i64..5) {
            prop_assert_eq!(
                p.add(&q).mul_monomial(k, l),
                p.mul_monomial(k, l).add(&q.mul_monomial(k, l))
            );
            prop_assert_eq!(p.mul_monomial(k, l).mul_monomial(-k, -l), p.clone());
            prop_assert_eq!(p.mul_monomial(k, l), p.mul(&PolyFrac::monomial(k, l)));
        }

        #[test]
        fn span_matches_subset_sums(
            targets in proptest::collection::vec(frac(), 0..5),
            pick in proptest::collection::vec(any::<bool>(), 5),
            noise in frac(),
        ) {
            let combo = targets.iter().zip(&pick).filter(|(_, b)| **b)
                .fold(PolyFrac::zero(), |acc, (t, _)| acc.add(t));
            prop_assert!(span_membership(&targets, &combo));
            prop_assert_eq!(span_membership(&targets, &noise), span_brute(&targets, &noise));
        }
    }
}
