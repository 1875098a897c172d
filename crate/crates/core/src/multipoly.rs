//! Sparse multivariate polynomials over the rationals.
//!
//! All polynomials live in the fixed variable universe `x1, x2, x3, t, z`;
//! a polynomial simply does not use the variables it does not mention.
//! Terms are kept in a BTreeMap keyed by exponent vectors under graded
//! lexicographic order, so iteration, leading terms, and printing are
//! deterministic.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unipoly::UniPolyQ;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    X1 = 0,
    X2 = 1,
    X3 = 2,
    T = 3,
    Z = 4,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X1 => "x1",
            Var::X2 => "x2",
            Var::X3 => "x3",
            Var::T => "t",
            Var::Z => "z",
        }
    }

    pub fn all() -> [Var; NVARS] {
        [Var::X1, Var::X2, Var::X3, Var::T, Var::Z]
    }
}

/// Exponent vector over the variable universe, ordered graded-lex:
/// higher total degree first, ties broken lexicographically on
/// (x1, x2, x3, t, z).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Expo(pub [u16; NVARS]);

impl Expo {
    pub fn zero() -> Self {
        Expo([0; NVARS])
    }

    pub fn of_var(v: Var, e: u16) -> Self {
        let mut a = [0; NVARS];
        a[v as usize] = e;
        Expo(a)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn get(&self, v: Var) -> u16 {
        self.0[v as usize]
    }

    pub fn mul(&self, other: &Expo) -> Expo {
        let mut a = [0; NVARS];
        for i in 0..NVARS {
            a[i] = self.0[i] + other.0[i];
        }
        Expo(a)
    }

    pub fn divides(&self, other: &Expo) -> bool {
        (0..NVARS).all(|i| self.0[i] <= other.0[i])
    }

    pub fn div(&self, other: &Expo) -> Expo {
        let mut a = [0; NVARS];
        for i in 0..NVARS {
            a[i] = self.0[i] - other.0[i];
        }
        Expo(a)
    }
}

impl PartialOrd for Expo {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Expo {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total().cmp(&other.total()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    pub terms: BTreeMap<Expo, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Expo::zero(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Expo::of_var(v, 1), Rational::one())
    }

    pub fn monomial(e: Expo, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|e| e.total() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&Expo::zero()).cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.total()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e.get(v) > 0)
    }

    pub fn vars_used(&self) -> Vec<Var> {
        Var::all().into_iter().filter(|&v| self.uses(v)).collect()
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Expo, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, e: Expo, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Expo) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let k = e.get(v);
            if k == 0 {
                continue;
            }
            let mut e2 = *e;
            e2.0[v as usize] -= 1;
            out.add_term(e2, c * Rational::from_integer(k.into()));
        }
        out
    }

    /// Coefficients of the powers of `v`; index i holds the coefficient of
    /// v^i as a polynomial in the remaining variables.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let k = e.get(v) as usize;
            let mut e2 = *e;
            e2.0[v as usize] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut out = MultiPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            let m = Expo::of_var(v, k as u16);
            for (e, a) in &c.terms {
                out.add_term(e.mul(&m), a.clone());
            }
        }
        out
    }

    /// Substitutes a rational constant for `v`.
    pub fn substitute_rational(&self, v: Var, value: &Rational) -> Self {
        let coeffs = self.coeffs_in(v);
        let mut out = MultiPoly::zero();
        let mut power = Rational::one();
        for c in coeffs {
            out = out.add(&c.scale(&power));
            power *= value;
        }
        out
    }

    /// Substitutes a polynomial for `v`.
    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        let coeffs = self.coeffs_in(v);
        let mut out = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            out = out.mul(value).add(c);
        }
        out
    }

    /// Evaluates with rational values for every used variable.
    pub fn eval_rational(&self, values: &[(Var, Rational)]) -> Result<Rational> {
        let mut acc = self.clone();
        for (v, val) in values {
            acc = acc.substitute_rational(*v, val);
        }
        acc.constant_value().ok_or_else(|| {
            Error::Invalid("evaluation left free variables".into())
        })
    }

    /// Homogenizes an (x1, x2)-polynomial to total degree `deg` in x3.
    pub fn homogenize_x3(&self, deg: u32) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let d = e.total();
            assert!(d <= deg, "degree exceeds homogenization target");
            let mut e2 = *e;
            e2.0[Var::X3 as usize] += (deg - d) as u16;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Sets x3 = 1.
    pub fn dehomogenize_x3(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2.0[Var::X3 as usize] = 0;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// True when every term has the same total degree in the given variables.
    pub fn is_homogeneous_in(&self, vars: &[Var]) -> bool {
        let deg_of = |e: &Expo| -> u32 { vars.iter().map(|&v| e.get(v) as u32).sum() };
        let mut degs = self.terms.keys().map(deg_of);
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Splits into homogeneous components by total degree in (x1, x2);
    /// index = degree.
    pub fn homogeneous_components_x1x2(&self) -> Vec<MultiPoly> {
        let d = self
            .terms
            .keys()
            .map(|e| e.get(Var::X1) as usize + e.get(Var::X2) as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![MultiPoly::zero(); d + 1];
        for (e, c) in &self.terms {
            let k = e.get(Var::X1) as usize + e.get(Var::X2) as usize;
            out[k].add_term(*e, c.clone());
        }
        out
    }

    /// Exact division; `None` when `self` is not a polynomial multiple of
    /// `divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lead_e, lead_c) = divisor.leading_term().unwrap();
        let lead_e = *lead_e;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((e, c)) = rem.leading_term() {
            if !lead_e.divides(e) {
                return None;
            }
            let qe = e.div(&lead_e);
            let qc = c / &lead_c;
            quo.add_term(qe, qc.clone());
            rem = rem.sub(&divisor.mul_monomial(&qe).scale(&qc));
        }
        Some(quo)
    }

    /// View as a univariate polynomial in `v`; fails if other variables occur.
    pub fn to_unipoly(&self, v: Var) -> Result<UniPolyQ> {
        for e in self.terms.keys() {
            for w in Var::all() {
                if w != v && e.get(w) > 0 {
                    return Err(Error::Invalid(format!(
                        "polynomial is not univariate in {}",
                        v.name()
                    )));
                }
            }
        }
        let mut coeffs = vec![Rational::zero(); self.degree_in(v) as usize + 1];
        for (e, c) in &self.terms {
            coeffs[e.get(v) as usize] = c.clone();
        }
        Ok(UniPolyQ::from_rationals(coeffs))
    }

    pub fn from_unipoly(p: &UniPolyQ, v: Var) -> Self {
        let mut out = MultiPoly::zero();
        for (i, c) in p.coeffs.iter().enumerate() {
            out.add_term(Expo::of_var(v, i as u16), c.clone());
        }
        out
    }

    /// Rational content: gcd-free scalar normalization helper. Scales so the
    /// coefficients are coprime integers and the graded-lex leading
    /// coefficient is positive. Returns the normalized polynomial.
    pub fn normalized_primitive(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer as _;
        use num_traits::Signed;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            content = content.gcd(&(c.numer() * (&lcm / c.denom())));
        }
        let mut factor = Rational::new(lcm, content);
        let (_, lead) = self.leading_term().unwrap();
        if (lead * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Scales so the graded-lex leading coefficient is one.
    pub fn monic_normalized(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.clone().recip();
                self.scale(&inv)
            }
        }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::format_poly(self))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::textio::format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn x1() -> MultiPoly {
        MultiPoly::var(Var::X1)
    }
    fn x2() -> MultiPoly {
        MultiPoly::var(Var::X2)
    }

    #[test]
    fn arithmetic_basics() {
        let p = x1().add(&x2()); // x1 + x2
        let q = p.mul(&p); // x1^2 + 2 x1 x2 + x2^2
        assert_eq!(q.terms.len(), 3);
        assert_eq!(q.total_degree(), 2);
        assert_eq!(q.degree_in(Var::X1), 2);
        let r = q.sub(&q);
        assert!(r.is_zero());
    }

    #[test]
    fn exact_division() {
        let p = x1().pow(2).sub(&x2().pow(2));
        let d = x1().sub(&x2());
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x1().add(&x2()));
        assert!(p.div_exact(&x1().add(&MultiPoly::one())).is_none());
    }

    #[test]
    fn homogenize_round_trip() {
        // x1^2 x2 + x2 + 3
        let p = x1()
            .pow(2)
            .mul(&x2())
            .add(&x2())
            .add(&MultiPoly::constant(rat_int(3)));
        let h = p.homogenize_x3(3);
        assert!(h.is_homogeneous_in(&[Var::X1, Var::X2, Var::X3]));
        assert_eq!(h.dehomogenize_x3(), p);
    }

    #[test]
    fn substitution_and_derivative() {
        // d/dx1 (x1^3 x2) = 3 x1^2 x2
        let p = x1().pow(3).mul(&x2());
        let d = p.derivative(Var::X1);
        assert_eq!(d, x1().pow(2).mul(&x2()).scale(&rat_int(3)));

        let s = p.substitute_rational(Var::X1, &rat_int(2));
        assert_eq!(s, x2().scale(&rat_int(8)));

        // substitute x2 -> x1 + 1 in x1 * x2
        let q = x1().mul(&x2()).substitute(Var::X2, &x1().add(&MultiPoly::one()));
        assert_eq!(q, x1().pow(2).add(&x1()));
    }

    #[test]
    fn graded_lex_leading_term() {
        // x2^3 beats x1^2 (higher total degree); x1 x2 beats x2^2? No:
        // equal total degree, lex on x1 first means x1 x2 > x2^2.
        let p = x1().mul(&x2()).add(&x2().pow(2));
        let (e, _) = p.leading_term().unwrap();
        assert_eq!(*e, Expo::of_var(Var::X1, 1).mul(&Expo::of_var(Var::X2, 1)));
    }

    #[test]
    fn normalization() {
        let p = x1().scale(&crate::rational::rat(2, 3)).add(&x2().scale(&rat_int(-4)));
        let n = p.normalized_primitive();
        // leading term is x1 (grlex ties: x1 before x2); its coefficient must be positive
        assert_eq!(n, x1().add(&x2().scale(&rat_int(-6))));
    }
}
