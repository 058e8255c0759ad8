//! Algebra of the affine chart map σ(x, y, z) = (xz, yz, z).
//!
//! Two factorizations are provided and they are *not* the same operation:
//!
//! * [`z_order_decompose`] writes the pullback as `f∘σ = z^order · quotient`
//!   with the quotient not divisible by z. This measures the divisor order
//!   of a pulled-back function.
//! * [`blowdown`] produces the polynomial `image` and integer `exponent`
//!   with `image∘σ = z^exponent · f`. This is the weighted push-forward used
//!   when descending a chart construction to the ambient space; it is the
//!   transform whose exponent bookkeeping makes the strict-transform
//!   identity of the ambient field come out exactly.
//!
//! On a monomial x^a y^b z^c the pullback multiplies the z-exponent by
//! a+b+c, so `order = min(a+b+c)`; the push-forward needs z^(exponent+c-a-b)
//! to stay polynomial, so `exponent = max(a+b-c)` (possibly negative).

use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Exps, Poly, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlowupError {
    #[error("the zero polynomial has no z-order decomposition")]
    ZeroPolynomial,
}

/// f(xz, yz, z), exact.
pub fn compose_blowup(f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (e, c) in f.terms() {
        let dz = e.dz + e.dx + e.dy;
        out.add_term(Exps::new(e.dx, e.dy, dz), c.clone());
    }
    out
}

/// `f∘σ = z^order · quotient` with `quotient` not divisible by z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupDecomposition {
    pub order: u32,
    pub quotient: Poly,
    /// Set when quotient(0,0,0) ≠ 0; downstream constructions expect the
    /// quotient to vanish at the origin and should treat this as a caution.
    pub quotient_nonzero_at_origin: bool,
}

pub fn z_order_decompose(f: &Poly) -> Result<BlowupDecomposition, BlowupError> {
    if f.is_zero() {
        return Err(BlowupError::ZeroPolynomial);
    }
    let pulled = compose_blowup(f);
    let order = pulled
        .terms()
        .map(|(e, _)| e.dz)
        .min()
        .expect("nonzero poly");
    let quotient = pulled.div_z(order);
    let at_origin = quotient.coeff(&Exps::new(0, 0, 0));
    Ok(BlowupDecomposition {
        order,
        quotient_nonzero_at_origin: !at_origin.is_zero(),
        quotient,
    })
}

/// `image∘σ = z^exponent · f` with the image not divisible by z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blowdown {
    pub exponent: i64,
    pub image: Poly,
}

pub fn blowdown(f: &Poly) -> Result<Blowdown, BlowupError> {
    if f.is_zero() {
        return Err(BlowupError::ZeroPolynomial);
    }
    let exponent = f
        .terms()
        .map(|(e, _)| e.dx as i64 + e.dy as i64 - e.dz as i64)
        .max()
        .expect("nonzero poly");
    let mut image = Poly::zero();
    for (e, c) in f.terms() {
        let dz = exponent + e.dz as i64 - e.dx as i64 - e.dy as i64;
        debug_assert!(dz >= 0);
        image.add_term(Exps::new(e.dx, e.dy, dz as u32), c.clone());
    }
    Ok(Blowdown { exponent, image })
}

/// z^k · f for signed k ≥ 0 contexts.
pub fn z_pow(k: u32) -> Poly {
    Poly::var(Var::Z).pow(k)
}
