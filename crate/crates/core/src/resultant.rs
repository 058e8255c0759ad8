//! Resultants of trivariate polynomials viewed as univariate in x or y.
//!
//! The Sylvester matrix has entries in the remaining-variable polynomial
//! ring; its determinant is computed by Bareiss fraction-free elimination,
//! whose interior divisions are exact in the polynomial ring.

use thiserror::Error;

use crate::poly::{Poly, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResultantError {
    #[error("resultant of two polynomials constant in {0:?} is degenerate")]
    BothConstant(Var),
    #[error("resultant requires nonzero inputs")]
    ZeroInput,
}

/// Coefficient list of `p` in `var`, ascending degree, entries free of `var`.
fn coeffs_in(p: &Poly, var: Var) -> Vec<Poly> {
    let deg = p.degree_in(var).unwrap_or(0) as usize;
    let mut out = vec![Poly::zero(); deg + 1];
    for (e, c) in p.terms() {
        let d = e.get(var) as usize;
        let mut reduced = *e;
        match var {
            Var::X => reduced.dx = 0,
            Var::Y => reduced.dy = 0,
            Var::Z => reduced.dz = 0,
        }
        out[d].add_term(reduced, c.clone());
    }
    out
}

/// Determinant of the Sylvester matrix of `p`, `q` in `var`.
pub fn resultant(p: &Poly, q: &Poly, var: Var) -> Result<Poly, ResultantError> {
    if p.is_zero() || q.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let pc = coeffs_in(p, var);
    let qc = coeffs_in(q, var);
    let n = pc.len() - 1;
    let m = qc.len() - 1;
    if n == 0 && m == 0 {
        return Err(ResultantError::BothConstant(var));
    }
    // Res(p, c) = c^deg(p) when one argument is constant in var.
    if m == 0 {
        return Ok(qc[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(pc[0].pow(m as u32));
    }

    let size = n + m;
    let mut mat = vec![vec![Poly::zero(); size]; size];
    for row in 0..m {
        for (k, c) in pc.iter().enumerate() {
            mat[row][row + (n - k)] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in qc.iter().enumerate() {
            mat[m + row][row + (m - k)] = c.clone();
        }
    }
    Ok(bareiss_determinant(mat))
}

/// Fraction-free Gaussian elimination; each division is exact.
fn bareiss_determinant(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = 1i64;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division must be exact");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;
    use crate::rational::int;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn two_by_two_oracle() {
        // Res_y(y - x, y + x): |1 -x; 1 x| = 2x
        let r = resultant(&p("y - x"), &p("y + x"), Var::Y).unwrap();
        assert_eq!(r, p("2*x"));
    }

    #[test]
    fn common_root_everywhere() {
        let r = resultant(&p("y"), &p("y"), Var::Y).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn constant_second_argument() {
        // deg_y(q) = 0 gives q^deg_y(p)
        let r = resultant(&p("y"), &p("x"), Var::Y).unwrap();
        assert_eq!(r, p("x"));
        let r = resultant(&p("y^3"), &p("x"), Var::Y).unwrap();
        assert_eq!(r, p("x^3"));
    }

    #[test]
    fn both_constant_is_degenerate() {
        assert_eq!(
            resultant(&p("x"), &p("x + 1"), Var::Y),
            Err(ResultantError::BothConstant(Var::Y))
        );
        assert_eq!(
            resultant(&Poly::zero(), &p("x"), Var::Y),
            Err(ResultantError::ZeroInput)
        );
    }

    #[test]
    fn vanishes_exactly_when_common_root_exists() {
        // p and q share the root y = x for every x, so Res_y ≡ 0.
        let r = resultant(&p("(y - x)*(y - 1)"), &p("(y - x)*(y + 2)"), Var::Y).unwrap();
        assert!(r.is_zero());
        // p = y - x^2, q = y - 2x share a root iff x^2 = 2x.
        let r = resultant(&p("y - x^2"), &p("y - 2*x"), Var::Y).unwrap();
        assert_eq!(r, p("x^2 - 2*x"));
        assert_eq!(r.eval_rat(&[int(0), int(0), int(0)]), int(0));
        assert_eq!(r.eval_rat(&[int(2), int(0), int(0)]), int(0));
        assert_ne!(r.eval_rat(&[int(1), int(0), int(0)]), int(0));
    }

    #[test]
    fn classic_discriminant() {
        // Res_y(y^2 - x, 2y) = 4(-x)... Sylvester det for y^2 - x and its
        // derivative: discriminant of y^2 - x up to sign = -4x.
        let r = resultant(&p("y^2 - x"), &p("2*y"), Var::Y).unwrap();
        assert_eq!(r, p("-4*x"));
    }

    #[test]
    fn larger_random_cross_check() {
        // Compare Bareiss against expansion for a 5x5 Sylvester matrix via a
        // known factorization: Res_y((y-a)(y-b), (y-c)) = (c-a)(c-b) with
        // a = x, b = 2x, c = x + 1.
        let pp = p("(y - x)*(y - 2*x)");
        let qq = p("y - x - 1");
        let r = resultant(&pp, &qq, Var::Y).unwrap();
        let expect = p("(x + 1 - x)*(x + 1 - 2*x)");
        assert_eq!(r, expect);
    }
}
