//! Dense univariate polynomials over an exact coefficient field.
//!
//! The same representation serves several coefficient domains: the rationals,
//! rational functions in `t`, residue fields `Q[z]/(p)`, and the dynamic
//! extensions used by the D5 pairing. Domains plug in through [`CoeffField`].

use crate::rational::Rational;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// An exact field of coefficients. `inv` returns `None` for zero (and, for
/// residue rings that are not actually fields, for zero divisors; callers
/// that need to react to that case handle it explicitly).
pub trait CoeffField: Clone + PartialEq + Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl CoeffField for Rational {
    fn zero(&self) -> Self {
        Rational::zero()
    }
    fn one(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`, no trailing
/// zeros are stored. The zero polynomial has an empty coefficient vector but
/// keeps one sample coefficient around so derived zeros/ones of the domain
/// stay constructible (residue elements carry their modulus).
#[derive(Clone, PartialEq)]
pub struct UniPoly<F: CoeffField> {
    pub coeffs: Vec<F>,
    exemplar: F,
}

impl<F: CoeffField> Debug for UniPoly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

impl<F: CoeffField> UniPoly<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>, exemplar: F) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, exemplar }
    }

    pub fn zero(exemplar: F) -> Self {
        UniPoly { coeffs: Vec::new(), exemplar }
    }

    pub fn constant(c: F) -> Self {
        let ex = c.zero();
        Self::from_coeffs(vec![c], ex)
    }

    /// The monomial x.
    pub fn x(exemplar: F) -> Self {
        Self::from_coeffs(vec![exemplar.zero(), exemplar.one()], exemplar)
    }

    pub fn exemplar(&self) -> &F {
        &self.exemplar
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> &F {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.exemplar.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Self::from_coeffs(out, self.exemplar.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(&other.coeff(i)));
        }
        Self::from_coeffs(out, self.exemplar.clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.neg()).collect(), self.exemplar.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.exemplar.clone());
        }
        let mut out = vec![self.exemplar.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out, self.exemplar.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect(), self.exemplar.clone())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![self.exemplar.zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(out, self.exemplar.clone())
    }

    /// Euclidean division. Returns `None` when the divisor's leading
    /// coefficient is not invertible (zero divisor in a residue ring).
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let lc_inv = divisor.leading().inv()?;
        if divisor.is_constant() {
            return Some((self.scale(&lc_inv), Self::zero(self.exemplar.clone())));
        }
        let mut rem = self.clone();
        let mut quo = vec![self.exemplar.zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1];
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let factor = rem.leading().mul(&lc_inv);
            quo[shift] = quo[shift].add(&factor);
            let sub = divisor.scale(&factor).shift_up(shift);
            let new_rem = rem.sub(&sub);
            debug_assert!(new_rem.is_zero() || new_rem.degree() < rem.degree());
            rem = new_rem;
        }
        Some((Self::from_coeffs(quo, self.exemplar.clone()), rem))
    }

    pub fn rem(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.degree() < divisor.degree() {
            return Some(self.clone());
        }
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Scales so the leading coefficient is one. Zero stays zero. Returns
    /// `None` if the leading coefficient is not invertible.
    pub fn monic(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let inv = self.leading().inv()?;
        Some(self.scale(&inv))
    }

    /// Monic gcd by the Euclidean algorithm; valid over true fields.
    pub fn gcd(&self, other: &Self) -> Option<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, u, v) with g = u*self + v*other, g monic.
    pub fn extended_gcd(&self, other: &Self) -> Option<(Self, Self, Self)> {
        let ex = self.exemplar.clone();
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Self::constant(ex.one());
        let mut s1 = Self::zero(ex.clone());
        let mut t0 = Self::zero(ex.clone());
        let mut t1 = Self::constant(ex.one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return Some((r0, s0, t0));
        }
        let inv = r0.leading().inv()?;
        Some((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Formal derivative. Requires a way to multiply by small integers, which
    /// every field gives us through repeated addition.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.exemplar.clone());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut acc = self.exemplar.zero();
            for _ in 0..i {
                acc = acc.add(c);
            }
            out.push(acc);
        }
        Self::from_coeffs(out, self.exemplar.clone())
    }

    /// p / gcd(p, p'), monic-normalized.
    pub fn squarefree_part(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_constant() {
            return Some(Self::constant(self.exemplar.one()));
        }
        let g = self.gcd(&self.derivative())?;
        if g.is_constant() {
            return self.monic();
        }
        let (q, r) = self.div_rem(&g)?;
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.exemplar.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Substitutes x -> x + a.
    pub fn compose_shift(&self, a: &F) -> Self {
        let shift = Self::from_coeffs(vec![a.clone(), self.exemplar.one()], self.exemplar.clone());
        let mut acc = Self::zero(self.exemplar.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&Self::constant(c.clone()));
        }
        acc
    }
}

/// Univariate polynomial over the rationals, the workhorse instance.
pub type UniPolyQ = UniPoly<Rational>;

impl UniPolyQ {
    pub fn from_rationals(coeffs: Vec<Rational>) -> Self {
        Self::from_coeffs(coeffs, Rational::zero())
    }

    pub fn zero_q() -> Self {
        Self::zero(Rational::zero())
    }

    pub fn constant_q(c: Rational) -> Self {
        Self::constant(c)
    }

    pub fn x_q() -> Self {
        Self::x(Rational::zero())
    }

    /// Clears denominators and integer content; the result has coprime
    /// integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer as _;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if ints.last().map_or(false, |v| v.sign() == num_bigint::Sign::Minus) {
            content = -content;
        }
        Self::from_rationals(
            ints.iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(cs: &[i64]) -> UniPolyQ {
        UniPolyQ::from_rationals(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) = x^2 + x - 2
        let p = poly(&[-2, 1, 1]);
        let d = poly(&[-1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, poly(&[2, 1]));

        // gcd(x^2-1, x-1) = x-1
        let g = poly(&[-1, 0, 1]).gcd(&poly(&[-1, 1])).unwrap();
        assert_eq!(g, poly(&[-1, 1]));

        // gcd(f, f) = monic f
        let f = poly(&[2, 4]);
        assert_eq!(f.gcd(&f).unwrap(), poly(&[0, 1]).add(&UniPolyQ::constant_q(rat(1, 2))));
    }

    #[test]
    fn squarefree_part_examples() {
        // (x-1)^2 (x+2) -> (x-1)(x+2)
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let sf = p.squarefree_part().unwrap();
        assert_eq!(sf, poly(&[-2, 1, 1]));
        // squarefree stays itself (monic-normalized)
        let q = poly(&[-2, 1, 1]);
        assert_eq!(q.squarefree_part().unwrap(), q);
        // constants collapse to 1
        assert_eq!(poly(&[5]).squarefree_part().unwrap(), poly(&[1]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[2, 3, 1]); // (x+1)(x+2)
        let (g, u, v) = a.extended_gcd(&b).unwrap();
        assert_eq!(g, poly(&[1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn primitive_integer_normalization() {
        let p = UniPolyQ::from_rationals(vec![rat(1, 2), rat(-3, 4)]);
        let q = p.primitive_integer();
        assert_eq!(q, poly(&[-2, 3]));
    }
}
