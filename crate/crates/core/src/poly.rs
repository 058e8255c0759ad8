//! Exact sparse polynomials in the three variables x, y, z with rational
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent triples under graded
//! lexicographic order, so equality, printing, and iteration are canonical.
//! The zero polynomial is the empty map; no stored coefficient is zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{format_rat, int, to_f64, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// Exponent triple of a monomial x^dx y^dy z^dz.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exps {
    pub dx: u32,
    pub dy: u32,
    pub dz: u32,
}

impl Exps {
    pub const fn new(dx: u32, dy: u32, dz: u32) -> Self {
        Exps { dx, dy, dz }
    }

    pub fn total(&self) -> u64 {
        self.dx as u64 + self.dy as u64 + self.dz as u64
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::X => self.dx,
            Var::Y => self.dy,
            Var::Z => self.dz,
        }
    }

    fn mul(&self, other: &Exps) -> Exps {
        Exps::new(
            self.dx + other.dx,
            self.dy + other.dy,
            self.dz + other.dz,
        )
    }
}

// Graded lexicographic: total degree first, then dx, dy, dz.
impl Ord for Exps {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.dx.cmp(&other.dx))
            .then(self.dy.cmp(&other.dy))
            .then(self.dz.cmp(&other.dz))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exps, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(int(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term(Exps::new(0, 0, 0), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let e = match v {
            Var::X => Exps::new(1, 0, 0),
            Var::Y => Exps::new(0, 1, 0),
            Var::Z => Exps::new(0, 0, 1),
        };
        Poly::monomial(e, int(1))
    }

    pub fn monomial(e: Exps, c: Rat) -> Self {
        let mut p = Poly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exps) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| e.total()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e.get(v)).max()
    }

    pub fn max_abs_coeff(&self) -> Rat {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Accumulate `c * x^e`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            out.terms.insert(*e, -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (e, k) in &self.terms {
            out.terms.insert(*e, k * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.mul(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiply by the monomial x^dx y^dy z^dz.
    pub fn mul_monomial(&self, e: Exps, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            out.terms.insert(ea.mul(&e), ca * c);
        }
        out
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let d = e.get(v);
            if d == 0 {
                continue;
            }
            let mut ne = *e;
            match v {
                Var::X => ne.dx -= 1,
                Var::Y => ne.dy -= 1,
                Var::Z => ne.dz -= 1,
            }
            out.add_term(ne, c * int(d as i64));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rat(&self, p: &[Rat; 3]) -> Rat {
        let mut sum = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            t *= pow_rat(&p[0], e.dx);
            t *= pow_rat(&p[1], e.dy);
            t *= pow_rat(&p[2], e.dz);
            sum += t;
        }
        sum
    }

    fn nest(&self) -> BTreeMap<u32, BTreeMap<u32, BTreeMap<u32, Rat>>> {
        let mut m: BTreeMap<u32, BTreeMap<u32, BTreeMap<u32, Rat>>> = BTreeMap::new();
        for (e, c) in &self.terms {
            m.entry(e.dx)
                .or_default()
                .entry(e.dy)
                .or_default()
                .insert(e.dz, c.clone());
        }
        m
    }

    /// Floating evaluation, Horner-style per variable over the nested form.
    pub fn eval_f64(&self, p: [f64; 3]) -> f64 {
        fn horner(pairs: &[(u32, f64)], v: f64) -> f64 {
            // pairs ascending by degree; fold from the top down
            let mut acc = 0.0;
            let mut prev: Option<u32> = None;
            for &(d, val) in pairs.iter().rev() {
                acc = match prev {
                    None => val,
                    Some(pd) => acc * v.powi((pd - d) as i32) + val,
                };
                prev = Some(d);
            }
            match prev {
                None => 0.0,
                Some(d0) => acc * v.powi(d0 as i32),
            }
        }
        let nested = self.nest();
        let mut x_pairs = Vec::with_capacity(nested.len());
        for (&dx, ymap) in &nested {
            let mut y_pairs = Vec::with_capacity(ymap.len());
            for (&dy, zmap) in ymap {
                let z_pairs: Vec<(u32, f64)> =
                    zmap.iter().map(|(&dz, c)| (dz, to_f64(c))).collect();
                y_pairs.push((dy, horner(&z_pairs, p[2])));
            }
            x_pairs.push((dx, horner(&y_pairs, p[1])));
        }
        horner(&x_pairs, p[0])
    }

    /// Restriction z := 0.
    pub fn at_z_zero(&self) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e.dz == 0 {
                out.terms.insert(*e, c.clone());
            }
        }
        out
    }

    /// Substitute polynomials for the variables (used by the blow-up chart).
    pub fn substitute(&self, sx: &Poly, sy: &Poly, sz: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let t = sx
                .pow(e.dx)
                .mul(&sy.pow(e.dy))
                .mul(&sz.pow(e.dz))
                .scale(c);
            out = out.add(&t);
        }
        out
    }

    /// True when every monomial is divisible by z^k.
    pub fn divisible_by_z(&self, k: u32) -> bool {
        self.terms.keys().all(|e| e.dz >= k)
    }

    /// Exact division by z^k. Panics if not divisible.
    pub fn div_z(&self, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            assert!(e.dz >= k, "not divisible by z^{k}");
            out.terms
                .insert(Exps::new(e.dx, e.dy, e.dz - k), c.clone());
        }
        out
    }

    /// Leading term under graded lex, `None` on zero.
    pub fn leading(&self) -> Option<(Exps, Rat)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))
    }

    /// Exact division: returns `self / d` when the division is exact.
    ///
    /// Standard leading-term long division under the graded-lex order; when
    /// `self` is a true multiple of `d` the leading term of the remainder is
    /// always divisible by the leading term of `d`, so the loop terminates
    /// with remainder zero. A stuck division returns `None`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lde, ldc) = d.leading()?;
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((lre, lrc)) = rem.leading() {
            if lre.dx < lde.dx || lre.dy < lde.dy || lre.dz < lde.dz {
                return None;
            }
            let qe = Exps::new(lre.dx - lde.dx, lre.dy - lde.dy, lre.dz - lde.dz);
            let qc = lrc / ldc.clone();
            quo.add_term(qe, qc.clone());
            rem = rem.sub(&d.mul_monomial(qe, &qc));
        }
        Some(quo)
    }

    /// Canonical text form, reparseable by `parser::parse_poly`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(e);
            if mono.is_empty() {
                out.push_str(&format_rat(&mag));
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rat(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Compact representation for fast repeated f64 evaluation.
    pub fn compile(&self) -> CompiledPoly {
        let mut max = [0u32; 3];
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            max[0] = max[0].max(e.dx);
            max[1] = max[1].max(e.dy);
            max[2] = max[2].max(e.dz);
            terms.push((e.dx, e.dy, e.dz, to_f64(c)));
        }
        CompiledPoly { terms, max }
    }
}

fn pow_rat(base: &Rat, n: u32) -> Rat {
    if n == 0 {
        return int(1);
    }
    let mut result = base.clone();
    for _ in 1..n {
        result *= base;
    }
    result
}

fn format_monomial(e: &Exps) -> String {
    let mut parts = Vec::new();
    for (d, name) in [(e.dx, "x"), (e.dy, "y"), (e.dz, "z")] {
        match d {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{d}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::parser::parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

/// Flat f64 view of a polynomial with shared power tables.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    terms: Vec<(u32, u32, u32, f64)>,
    max: [u32; 3],
}

impl CompiledPoly {
    pub fn eval(&self, p: [f64; 3], scratch: &mut PowerScratch) -> f64 {
        scratch.fill(p, self.max);
        let mut acc = 0.0;
        for &(dx, dy, dz, c) in &self.terms {
            acc += c * scratch.x[dx as usize] * scratch.y[dy as usize] * scratch.z[dz as usize];
        }
        acc
    }

    pub fn max_degrees(&self) -> [u32; 3] {
        self.max
    }
}

/// Reusable buffers of variable powers for `CompiledPoly::eval`.
#[derive(Debug, Default, Clone)]
pub struct PowerScratch {
    x: Vec<f64>,
    y: Vec<f64>,
    z: Vec<f64>,
}

impl PowerScratch {
    fn fill(&mut self, p: [f64; 3], max: [u32; 3]) {
        fill_powers(&mut self.x, p[0], max[0]);
        fill_powers(&mut self.y, p[1], max[1]);
        fill_powers(&mut self.z, p[2], max[2]);
    }
}

fn fill_powers(buf: &mut Vec<f64>, v: f64, max: u32) {
    buf.clear();
    buf.push(1.0);
    for k in 1..=max {
        let prev = buf[(k - 1) as usize];
        buf.push(prev * v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn x() -> Poly {
        Poly::var(Var::X)
    }
    pub(crate) fn y() -> Poly {
        Poly::var(Var::Y)
    }

    #[test]
    fn difference_of_squares() {
        let p = x().add(&y()).mul(&x().sub(&y()));
        let expect = x().mul(&x()).sub(&y().mul(&y()));
        assert_eq!(p, expect);
    }

    #[test]
    fn binomial_cube_coefficients() {
        // (x^2 + y^2)^3 expands with coefficients 1, 3, 3, 1.
        let p = x().pow(2).add(&y().pow(2)).pow(3);
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coeff(&Exps::new(6, 0, 0)), int(1));
        assert_eq!(p.coeff(&Exps::new(4, 2, 0)), int(3));
        assert_eq!(p.coeff(&Exps::new(2, 4, 0)), int(3));
        assert_eq!(p.coeff(&Exps::new(0, 6, 0)), int(1));
    }

    #[test]
    fn power_rule() {
        // d/dx (x^2 y) = 2xy
        let p = x().pow(2).mul(&y());
        assert_eq!(p.partial(Var::X), x().mul(&y()).scale(&int(2)));
        // d/dz (x^2 + y^2) = 0
        let q = x().pow(2).add(&y().pow(2));
        assert!(q.partial(Var::Z).is_zero());
    }

    #[test]
    fn eval_exact_and_float() {
        let p = x().pow(2).add(&y().pow(2)).add(&Poly::var(Var::Z).pow(2));
        let v = p.eval_rat(&[int(1), int(2), int(3)]);
        assert_eq!(v, int(14));
        assert_eq!(p.eval_f64([1.0, 2.0, 3.0]), 14.0);
    }

    #[test]
    fn cancellation_yields_zero() {
        let p = x().sub(&x());
        assert!(p.is_zero());
        assert_eq!(p.to_text(), "0");
    }

    #[test]
    fn exact_division() {
        let a = x().pow(2).sub(&y().pow(2));
        let b = x().sub(&y());
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, x().add(&y()));
        assert!(x().div_exact(&y()).is_none());
    }

    #[test]
    fn text_form_is_canonical() {
        let h = x().pow(2).sub(&Poly::constant(rat(1, 4)));
        assert_eq!(h.to_text(), "x^2 - 1/4");
        let p = y().scale(&rat(1, 16)).sub(&x().mul(&y()).scale(&rat(1, 4)));
        assert_eq!(p.to_text(), "-1/4*x*y + 1/16*y");
    }

    #[test]
    fn compiled_eval_matches_plain() {
        let p = x()
            .pow(3)
            .mul(&y())
            .add(&Poly::var(Var::Z).pow(4).scale(&rat(-7, 3)));
        let c = p.compile();
        let mut scratch = PowerScratch::default();
        for pt in [[0.3, -1.2, 0.9], [1.5, 2.0, -0.25]] {
            let a = p.eval_f64(pt);
            let b = c.eval(pt, &mut scratch);
            assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()));
        }
    }
}
