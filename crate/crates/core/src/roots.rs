//! Real-root isolation for univariate polynomials with rational
//! coefficients, via Sturm sequences and interval bisection.

use num_traits::{Signed, Zero};

use crate::poly::{Poly, Var};
use crate::rational::{int, rat, to_f64, Rat};

/// Dense ascending coefficient vector; invariant: no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// Extract the coefficients of a `Poly` that only involves `var`.
    /// Returns `None` if another variable appears.
    pub fn from_poly(p: &Poly, var: Var) -> Option<Self> {
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in p.terms() {
            if e.total() != e.get(var) as u64 {
                return None;
            }
            coeffs[e.get(var) as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::new(vec![]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        UniPoly::new(coeffs)
    }

    fn rem(&self, d: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.coeffs.last().expect("nonzero divisor").clone();
        while r.len() > dd && !r.is_empty() {
            let lead = r.last().unwrap().clone();
            if lead.is_zero() {
                r.pop();
                continue;
            }
            let shift = r.len() - 1 - dd;
            let q = lead / dl.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                let idx = shift + k;
                let v = r[idx].clone() - c * q.clone();
                r[idx] = v;
            }
            // leading entry cancels exactly
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// self / gcd(self, self'): same roots, all simple.
    pub fn squarefree(&self) -> UniPoly {
        let d = self.derivative();
        if d.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&d);
        if g.degree() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
    }

    fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let dl = d.coeffs.last().unwrap().clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let lead = r.last().unwrap().clone();
            let shift = r.len() - 1 - dd;
            let qc = lead / dl.clone();
            q[shift] = qc.clone();
            for (k, c) in d.coeffs.iter().enumerate() {
                let idx = shift + k;
                let v = r[idx].clone() - c * qc.clone();
                r[idx] = v;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(q)
    }
}

/// Cauchy bound: all real roots lie in [-B, B].
fn root_bound(p: &UniPoly) -> Rat {
    let lead = p.coeffs.last().unwrap().abs();
    let max = p
        .coeffs
        .iter()
        .take(p.coeffs.len() - 1)
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    int(1) + max / lead
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        let neg = UniPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect());
        chain.push(neg);
    }
}

fn sign_variations(chain: &[UniPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(prev) = last {
            if prev != s {
                count += 1;
            }
        }
        last = Some(s);
    }
    count
}

/// All real roots of `p`, each refined to within `eps`, ascending.
pub fn isolate_real_roots(p: &UniPoly, eps: f64) -> Vec<f64> {
    if p.is_zero() || p.degree() == 0 {
        return vec![];
    }
    let sf = p.squarefree();
    if sf.degree() == 0 {
        return vec![];
    }
    let chain = sturm_chain(&sf);
    let bound = root_bound(&sf);
    let mut intervals = vec![(-bound.clone(), bound.clone())];
    let mut isolated: Vec<(Rat, Rat)> = Vec::new();

    while let Some((lo, hi)) = intervals.pop() {
        if lo >= hi {
            continue;
        }
        let n = sign_variations(&chain, &lo) - sign_variations(&chain, &hi);
        match n {
            0 => {}
            1 => isolated.push((lo, hi)),
            _ => {
                let mid = (lo.clone() + hi.clone()) * rat(1, 2);
                if sf.eval(&mid).is_zero() {
                    // exact root at the midpoint; peel it off and recurse on
                    // slightly shrunk halves
                    isolated.push((mid.clone(), mid.clone()));
                    let width = hi.clone() - lo.clone();
                    let delta = width * rat(1, 1_000_000);
                    intervals.push((lo, mid.clone() - delta.clone()));
                    intervals.push((mid + delta, hi));
                } else {
                    intervals.push((lo, mid.clone()));
                    intervals.push((mid, hi));
                }
            }
        }
    }

    let mut roots: Vec<f64> = isolated
        .into_iter()
        .map(|(mut lo, mut hi)| {
            // bisect on sign of the squarefree polynomial
            if sf.eval(&lo).is_zero() {
                return to_f64(&lo);
            }
            if sf.eval(&hi).is_zero() {
                return to_f64(&hi);
            }
            let lo_pos = sf.eval(&lo).is_positive();
            while to_f64(&hi) - to_f64(&lo) > eps {
                let mid = (lo.clone() + hi.clone()) * rat(1, 2);
                let v = sf.eval(&mid);
                if v.is_zero() {
                    return to_f64(&mid);
                }
                if v.is_positive() == lo_pos {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (to_f64(&lo) + to_f64(&hi))
        })
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_poly;

    fn uni(s: &str) -> UniPoly {
        UniPoly::from_poly(&parse_poly(s).unwrap(), Var::X).unwrap()
    }

    #[test]
    fn quadratic_roots() {
        let roots = isolate_real_roots(&uni("x^2 - 1/4"), 1e-13);
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 0.5).abs() < 1e-12);
        assert!((roots[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&uni("x^2 + 1"), 1e-13).is_empty());
    }

    #[test]
    fn multiple_roots_are_found_once() {
        let roots = isolate_real_roots(&uni("(x - 1/2)^2 * (x + 2)"), 1e-13);
        assert_eq!(roots.len(), 2);
        assert!((roots[0] + 2.0).abs() < 1e-12);
        assert!((roots[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rational_root_hit_exactly() {
        let roots = isolate_real_roots(&uni("x^3"), 1e-13);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0], 0.0);
    }

    #[test]
    fn irrational_roots() {
        let roots = isolate_real_roots(&uni("x^2 - 2"), 1e-13);
        assert_eq!(roots.len(), 2);
        assert!((roots[1] - 2.0_f64.sqrt()).abs() < 1e-12);
    }
}
