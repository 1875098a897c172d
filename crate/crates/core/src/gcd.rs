//! Polynomial gcds, contents, and primitive parts.
//!
//! Multivariate gcds run a subresultant polynomial remainder sequence on a
//! chosen main variable, recursing into the remaining variables for contents.
//! Homogeneous bivariate inputs take a faster route through a univariate gcd.

use crate::error::{Error, Result};
use crate::multipoly::{Expo, MultiPoly, Var};
use crate::rational::Rational;
use crate::unipoly::UniPolyQ;
use num_traits::Zero;

/// Exact pseudo-remainder of `a` by `b` in `v`:
/// lc_v(b)^(deg_v a - deg_v b + 1) * a = q * b + r with deg_v r < deg_v b.
/// Requires b nonzero with deg_v(b) <= deg_v(a).
pub fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: Var) -> MultiPoly {
    let da = a.degree_in(v) as i64;
    let db = b.degree_in(v) as i64;
    debug_assert!(!b.is_zero() && da >= db);
    let lc_b = {
        let coeffs = b.coeffs_in(v);
        coeffs.last().unwrap().clone()
    };
    let mut rem = a.clone();
    let mut scalings = 0i64;
    while !rem.is_zero() && rem.degree_in(v) as i64 >= db {
        let dr = rem.degree_in(v) as i64;
        let lc_r = {
            let coeffs = rem.coeffs_in(v);
            coeffs.last().unwrap().clone()
        };
        let shift = MultiPoly::monomial(Expo::of_var(v, (dr - db) as u16), num_traits::One::one());
        rem = rem.mul(&lc_b).sub(&b.mul(&shift).mul(&lc_r));
        scalings += 1;
        debug_assert!(rem.is_zero() || (rem.degree_in(v) as i64) < dr);
    }
    // pad to the exact power lc^(da-db+1) expected by resultant bookkeeping
    for _ in scalings..(da - db + 1) {
        rem = rem.mul(&lc_b);
    }
    rem
}

/// Leading coefficient of `p` viewed in `v`.
pub fn leading_coeff_in(p: &MultiPoly, v: Var) -> MultiPoly {
    p.coeffs_in(v).pop().unwrap_or_else(MultiPoly::zero)
}

/// Content of `p` with respect to `v`: the gcd of the coefficients of the
/// powers of `v`, a polynomial in the remaining variables.
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let coeffs = p.coeffs_in(v);
    let mut acc = MultiPoly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        acc = poly_gcd(&acc, &c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

/// Primitive part with respect to `v`, normalized to coprime integer
/// coefficients with positive graded-lex leading coefficient.
pub fn primitive_part_in(p: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let content = content_in(p, v);
    Ok(p.div_exact(&content)
        .expect("content divides its polynomial")
        .normalized_primitive())
}

/// Primitive part with respect to `t`.
pub fn primitive_part_t(p: &MultiPoly) -> Result<MultiPoly> {
    primitive_part_in(p, Var::T)
}

fn homogeneous_bivariate_gcd(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let mut vars: Vec<Var> = a.vars_used();
    for v in b.vars_used() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    if vars.len() != 2 {
        return None;
    }
    let (u, w) = (vars[0], vars[1]);
    if !a.is_homogeneous_in(&[u, w]) || !b.is_homogeneous_in(&[u, w]) {
        return None;
    }
    // factor out powers of u and w, map the rest to a univariate in u/w
    let split = |p: &MultiPoly| -> (u16, u16, UniPolyQ) {
        let mu = p.terms.keys().map(|e| e.get(u)).min().unwrap();
        let mw = p.terms.keys().map(|e| e.get(w)).min().unwrap();
        let mut coeffs = vec![Rational::zero(); p.total_degree() as usize + 1];
        for (e, c) in &p.terms {
            coeffs[(e.get(u) - mu) as usize] = c.clone();
        }
        (mu, mw, UniPolyQ::from_rationals(coeffs))
    };
    let (au, aw, ap) = split(a);
    let (bu, bw, bp) = split(b);
    let g = ap.gcd(&bp).unwrap();
    let (gu, gw) = (au.min(bu), aw.min(bw));
    let gd = g.degree() as u16;
    let mut out = MultiPoly::zero();
    for (i, c) in g.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = Expo::zero();
        e.0[u as usize] = i as u16 + gu;
        e.0[w as usize] = (gd - i as u16) + gw;
        out.add_term(e, c.clone());
    }
    Some(out.normalized_primitive())
}

/// Multivariate gcd over the rationals, normalized: integer-primitive with a
/// positive leading coefficient, so gcd(p, p) reproduces the normalized p and
/// gcd(p, 0) is the normalized p.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.normalized_primitive();
    }
    if b.is_zero() {
        return a.normalized_primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if let Some(g) = homogeneous_bivariate_gcd(a, b) {
        return g;
    }
    let shared: Vec<Var> = Var::all()
        .into_iter()
        .filter(|&v| a.uses(v) && b.uses(v))
        .collect();
    let v = match shared.first() {
        Some(&v) => v,
        // disjoint variable sets admit only constant common divisors
        None => return MultiPoly::one(),
    };
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cg = poly_gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).unwrap();
    let mut q = b.div_exact(&cb).unwrap();
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    // subresultant PRS on the primitive parts
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        if q.degree_in(v) == 0 {
            // nonzero with no v left: primitive parts are coprime in v
            return cg.normalized_primitive();
        }
        let delta = (p.degree_in(v) - q.degree_in(v)) as u32;
        let r = pseudo_rem(&p, &q, v);
        let divisor = g.mul(&h.pow(delta));
        let r = if r.is_zero() {
            r
        } else {
            r.div_exact(&divisor).expect("subresultant division is exact")
        };
        g = leading_coeff_in(&q, v);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
        p = q;
        if r.is_zero() {
            break;
        }
        q = r;
    }
    let pp = primitive_part_in(&p, v).unwrap();
    cg.mul(&pp).normalized_primitive()
}

/// Squarefree part of a univariate polynomial over the rationals:
/// p / gcd(p, p'), monic.
pub fn squarefree_part_q(p: &UniPolyQ) -> Result<UniPolyQ> {
    p.squarefree_part().ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textio::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn gcd_trivial_cases() {
        assert_eq!(poly_gcd(&p("x1^2 - 1"), &p("x1 - 1")), p("x1 - 1"));
        let f = p("2*x1^2 - 2");
        assert_eq!(poly_gcd(&f, &f), p("x1^2 - 1"));
        assert_eq!(poly_gcd(&f, &MultiPoly::zero()), p("x1^2 - 1"));
        assert_eq!(poly_gcd(&p("x1 + 1"), &p("t^2 - 2")), MultiPoly::one());
    }

    #[test]
    fn gcd_over_function_field() {
        // gcd((x1 - t)(x1 + 1), (x1 - t)(x1 + 2)) = x1 - t
        let a = p("(x1 - t)*(x1 + 1)");
        let b = p("(x1 - t)*(x1 + 2)");
        assert_eq!(poly_gcd(&a, &b), p("x1 - t"));
    }

    #[test]
    fn gcd_homogeneous_bivariate() {
        let a = p("(x1 - x3)^2 * (x1 + x3)");
        let b = p("(x1 - x3) * x1^2");
        assert_eq!(poly_gcd(&a, &b), p("x1 - x3"));
        let c = p("x1^2*x3*(x1 - x3)");
        let d = p("x1*x3^2*(x1 - x3)");
        assert_eq!(poly_gcd(&c, &d), p("x1^2*x3 - x1*x3^2"));
    }

    #[test]
    fn primitive_part_t_examples() {
        // (x1^2 - x1)(t^2 + x1 t): content is x1^2 - x1, pp is t^2 + x1 t
        let q = p("(x1^2 - x1)*(t^2 + x1*t)");
        let pp = primitive_part_t(&q).unwrap();
        assert_eq!(pp, p("t^2 + x1*t"));
        assert_eq!(content_in(&q, Var::T), p("x1^2 - x1"));

        // monomial content
        assert_eq!(primitive_part_t(&p("t*x1 + x1")).unwrap(), p("t + 1"));

        // already primitive: unchanged
        let r = p("t^2*x1 + t + 1");
        assert_eq!(primitive_part_t(&r).unwrap(), r);

        assert!(primitive_part_t(&MultiPoly::zero()).is_err());
    }

    #[test]
    fn primitive_part_is_idempotent_and_reconstructs() {
        let q = p("(x1^3 - x1^2)*(t^3 + 2*t*x1 + 1)");
        let pp = primitive_part_t(&q).unwrap();
        assert_eq!(primitive_part_t(&pp).unwrap(), pp);
        let content = content_in(&q, Var::T);
        let back = pp.mul(&content);
        let unit = q.div_exact(&back).unwrap();
        assert!(unit.is_constant() && !unit.is_zero());
    }
}
