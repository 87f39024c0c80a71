//! Operators acting on position polynomials through `x̂ = x·` and `p̂ = −iħ∂`.
//!
//! The routines here only differentiate and multiply commutative polynomials,
//! so they check the normal-ordering arithmetic without sharing code with it.

use num::BigRational;

use super::{minus_i_hbar_pow, OpMono, Operator};
use crate::coeffring::Coefficient;
use crate::error::{CoreError, Result};
use crate::phasepoly::{PhaseMono, PhasePoly};
use crate::sparse::{factorial, falling_factorial};

/// Acts with `op` on a polynomial in `x, y`, keeping ħ symbolic.
pub fn apply_to_polynomial(op: &Operator, f: &PhasePoly) -> Result<PhasePoly> {
    if !f.is_position_only() {
        return Err(CoreError::NotPositionPolynomial(f.to_string()));
    }
    let mut out = Vec::new();
    for (w, cw) in op.terms() {
        let prefactor = cw * &minus_i_hbar_pow(w.momentum_order());
        for (m, cf) in f.terms() {
            if w.c > m.a || w.d > m.b {
                continue;
            }
            let falling = falling_factorial(m.a, w.c) * falling_factorial(m.b, w.d);
            let c = &prefactor * cf * Coefficient::from_rational(BigRational::from_integer(falling));
            out.push((PhaseMono::new(w.a + m.a - w.c, w.b + m.b - w.d, 0, 0), c));
        }
    }
    Ok(PhasePoly::from_terms(out))
}

fn basis(c: u32, d: u32) -> PhasePoly {
    PhasePoly::monomial(Coefficient::one(), PhaseMono::new(c, d, 0, 0))
}

/// Recovers the normal-ordered operator whose action on `x^c y^d` is `action(x^c y^d)`.
///
/// Probes every basis monomial with `c + d ≤ max_order`, peeling off one
/// momentum order at a time, then requires the order `max_order + 1` layer to
/// be fully explained by what was rebuilt.
pub fn reconstruct_from_action<F>(max_order: u32, mut action: F) -> Result<Operator>
where
    F: FnMut(&PhasePoly) -> Result<PhasePoly>,
{
    let mut rebuilt = Operator::zero();
    for order in 0..=max_order + 1 {
        let mut layer = Vec::new();
        for c in 0..=order {
            let d = order - c;
            let f = basis(c, d);
            let residual = action(&f)? - apply_to_polynomial(&rebuilt, &f)?;
            if order > max_order {
                if !residual.is_zero() {
                    return Err(CoreError::InconsistentAction);
                }
                continue;
            }
            // residual = Σ_{a,b} C_{abcd} (−iħ)^{c+d} c! d! x^a y^b
            let norm = Coefficient::from_rational(BigRational::from_integer(factorial(c) * factorial(d)).recip())
                * Coefficient::i().pow(order);
            for (m, coeff) in residual.terms() {
                let c_abcd = coeff.div_hbar_pow(order).ok_or(CoreError::InconsistentAction)? * norm.clone();
                layer.push((OpMono::new(m.a, m.b, c, d), c_abcd));
            }
        }
        rebuilt = rebuilt + Operator::from_terms(layer);
    }
    Ok(rebuilt)
}

/// `[A, B]` rebuilt from `f ↦ A(Bf) − B(Af)` on the monomial basis.
pub fn commutator_by_action(a: &Operator, b: &Operator) -> Result<Operator> {
    let order = a.momentum_order() + b.momentum_order();
    reconstruct_from_action(order, |f| {
        let ab = apply_to_polynomial(a, &apply_to_polynomial(b, f)?)?;
        let ba = apply_to_polynomial(b, &apply_to_polynomial(a, f)?)?;
        Ok(ab - ba)
    })
}
