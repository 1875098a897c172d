//! Resultants of multivariate polynomials.
//!
//! The default algorithm is the subresultant polynomial remainder sequence;
//! a naive Sylvester determinant (cofactor expansion over column masks) is
//! kept as a cross-check oracle for small degrees.

use crate::error::{Error, Result};
use crate::gcd::{leading_coeff_in, pseudo_rem};
use crate::multipoly::{MultiPoly, Var};
use std::collections::HashMap;

/// Resultant of `p` and `q` with respect to `v`, eliminating `v`.
///
/// Matches the Sylvester determinant convention with `p`'s coefficient rows
/// first. Errors if either input is zero or does not involve `v`.
pub fn poly_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree_in(v) == 0 || q.degree_in(v) == 0 {
        return Err(Error::VariableAbsent(v.name()));
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut negate = false;
    if a.degree_in(v) < b.degree_in(v) {
        if (a.degree_in(v) as u32 * b.degree_in(v) as u32) % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let da = a.degree_in(v) as u32;
        let db = b.degree_in(v) as u32;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        let divisor = g.mul(&h.pow(delta));
        b = if r.is_zero() {
            r
        } else {
            r.div_exact(&divisor).expect("subresultant division is exact")
        };
        g = leading_coeff_in(&a, v);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update is exact")
        };
        if b.is_zero() {
            // common factor of positive degree in v
            return Ok(MultiPoly::zero());
        }
        if b.degree_in(v) == 0 {
            break;
        }
    }
    let q_deg = a.degree_in(v) as u32;
    let res = b
        .pow(q_deg)
        .div_exact(&h.pow(q_deg - 1))
        .expect("final subresultant division is exact");
    Ok(if negate { res.neg() } else { res })
}

/// Sylvester-matrix resultant by cofactor expansion. Exponential in the
/// matrix size; intended as a test oracle for small degrees.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    if m == 0 || n == 0 {
        return Err(Error::VariableAbsent(v.name()));
    }
    let size = m + n;
    assert!(size <= 16, "Sylvester oracle limited to small degrees");
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    // rows 0..n hold p's coefficients (descending), rows n..n+m hold q's
    let entry = |row: usize, col: usize| -> MultiPoly {
        if row < n {
            let idx = m as i64 - (col as i64 - row as i64);
            if (0..=m as i64).contains(&idx) {
                pc[idx as usize].clone()
            } else {
                MultiPoly::zero()
            }
        } else {
            let r = row - n;
            let idx = n as i64 - (col as i64 - r as i64);
            if (0..=n as i64).contains(&idx) {
                qc[idx as usize].clone()
            } else {
                MultiPoly::zero()
            }
        }
    };
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    fn det(
        row: usize,
        mask: u32,
        size: usize,
        entry: &dyn Fn(usize, usize) -> MultiPoly,
        memo: &mut HashMap<u32, MultiPoly>,
    ) -> MultiPoly {
        if row == size {
            return MultiPoly::one();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = MultiPoly::zero();
        let mut sign = false;
        for col in 0..size {
            if mask & (1 << col) != 0 {
                continue;
            }
            let e = entry(row, col);
            if !e.is_zero() {
                let sub = det(row + 1, mask | (1 << col), size, entry, memo);
                let term = e.mul(&sub);
                acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            }
            sign = !sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    Ok(det(0, 0, size, &entry, &mut memo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::textio::parse_poly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn resultant_linear_cases() {
        // Res_x1(x1^2 - t, x1 - 1) = 1 - t, by the 3x3 Sylvester determinant
        let r = poly_resultant(&p("x1^2 - t"), &p("x1 - 1"), Var::X1).unwrap();
        assert_eq!(r, p("1 - t"));
        let s = sylvester_resultant(&p("x1^2 - t"), &p("x1 - 1"), Var::X1).unwrap();
        assert_eq!(s, r);

        // Res_x1(x1 - a, x1 - b) = a - b with x2, x3 standing in for a, b
        let r = poly_resultant(&p("x1 - x2"), &p("x1 - x3"), Var::X1).unwrap();
        assert_eq!(r, p("x2 - x3"));
    }

    #[test]
    fn resultant_common_factor_is_zero() {
        let a = p("(x1 - t)*(x1 + 1)");
        let b = p("(x1 - t)*(x1 + 2)");
        assert!(poly_resultant(&a, &b, Var::X1).unwrap().is_zero());
    }

    #[test]
    fn resultant_errors() {
        assert!(matches!(
            poly_resultant(&p("x2 + 1"), &p("x1 - 1"), Var::X1),
            Err(Error::VariableAbsent(_))
        ));
        assert!(poly_resultant(&MultiPoly::zero(), &p("x1"), Var::X1).is_err());
    }

    fn random_poly(rng: &mut ChaCha20Rng, dx: u16, dt: u16) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for i in 0..=dx {
            for j in 0..=dt {
                if rng.gen_bool(0.7) {
                    let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                    let e = crate::multipoly::Expo::of_var(Var::X1, i)
                        .mul(&crate::multipoly::Expo::of_var(Var::T, j));
                    out.add_term(e, c);
                }
            }
        }
        out
    }

    #[test]
    fn subresultant_matches_sylvester_oracle() {
        let mut rng = ChaCha20Rng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 40 {
            let a = random_poly(&mut rng, rng.gen_range(1..=4), 2);
            let b = random_poly(&mut rng, rng.gen_range(1..=3), 2);
            if a.degree_in(Var::X1) == 0 || b.degree_in(Var::X1) == 0 {
                continue;
            }
            let fast = poly_resultant(&a, &b, Var::X1).unwrap();
            let slow = sylvester_resultant(&a, &b, Var::X1).unwrap();
            assert_eq!(fast, slow, "mismatch for a={a:?} b={b:?}");
            checked += 1;
        }
    }

    #[test]
    fn resultant_specialization_commutes() {
        // Res_x(p, q)(t0) = Res_x(p(t0), q(t0)) away from leading-coefficient
        // vanishing, on 50 random instances
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 50 {
            let a = random_poly(&mut rng, rng.gen_range(1..=3), rng.gen_range(0..=2));
            let b = random_poly(&mut rng, rng.gen_range(1..=3), rng.gen_range(0..=2));
            if a.degree_in(Var::X1) == 0 || b.degree_in(Var::X1) == 0 {
                continue;
            }
            let t0 = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let a_spec = a.substitute_rational(Var::T, &t0);
            let b_spec = b.substitute_rational(Var::T, &t0);
            // degree drop under specialization changes the determinant; skip
            if a_spec.degree_in(Var::X1) != a.degree_in(Var::X1)
                || b_spec.degree_in(Var::X1) != b.degree_in(Var::X1)
            {
                continue;
            }
            let res_then_spec = poly_resultant(&a, &b, Var::X1)
                .unwrap()
                .substitute_rational(Var::T, &t0);
            let spec_then_res = poly_resultant(&a_spec, &b_spec, Var::X1).unwrap();
            assert_eq!(res_then_spec, spec_then_res);
            checked += 1;
        }
    }

    #[test]
    fn resultant_multiplicative_in_first_argument() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 20 {
            let a = random_poly(&mut rng, rng.gen_range(1..=2), 1);
            let b = random_poly(&mut rng, rng.gen_range(1..=2), 1);
            let c = random_poly(&mut rng, rng.gen_range(1..=2), 1);
            if [&a, &b, &c].iter().any(|p| p.degree_in(Var::X1) == 0) {
                continue;
            }
            let lhs = poly_resultant(&a.mul(&b), &c, Var::X1).unwrap();
            let rhs = poly_resultant(&a, &c, Var::X1)
                .unwrap()
                .mul(&poly_resultant(&b, &c, Var::X1).unwrap());
            assert_eq!(lhs, rhs);
            checked += 1;
        }
    }
}
