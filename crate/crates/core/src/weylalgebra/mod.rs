//! The Weyl algebra generated by `x̂, ŷ, p̂_x, p̂_y` with `[x̂_i, p̂_j] = iħ δ_ij`.
//!
//! Every [`Operator`] is kept in normal order: a sum of words
//! `x̂^a ŷ^b p̂_x^c p̂_y^d` with positions to the left. Products are re-ordered with
//! the closed form
//!
//! ```text
//! p̂^s x̂^r = Σ_{k=0}^{min(r,s)} k!·C(s,k)·C(r,k)·(−iħ)^k x̂^{r−k} p̂^{s−k}
//! ```
//!
//! applied independently to each index. [`action`] provides the differential
//! operator realization `p̂ = −iħ∂`, which never goes through this rewrite and is
//! used as an oracle for it.

pub mod action;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use crate::coeffring::{forward_owned_binop, Coefficient, Scalar};
use crate::phasepoly::{latex_vars, render_latex, render_text, PhaseMono, PhasePoly};
use crate::sparse::{add_term, binomial, factorial};

pub use action::{apply_to_polynomial, commutator_by_action, reconstruct_from_action};

/// The normal-ordered word `x̂^a ŷ^b p̂_x^c p̂_y^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct OpMono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl OpMono {
    pub const ONE: OpMono = OpMono { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        OpMono { a, b, c, d }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    pub fn momentum_order(&self) -> u32 {
        self.c + self.d
    }

    fn key(&self) -> (u32, u32, u32, u32, u32) {
        (self.degree(), self.a, self.b, self.c, self.d)
    }

    fn as_phase(&self) -> PhaseMono {
        PhaseMono::new(self.a, self.b, self.c, self.d)
    }
}

impl Ord for OpMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for OpMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<PhaseMono> for OpMono {
    fn from(m: PhaseMono) -> Self {
        OpMono::new(m.a, m.b, m.c, m.d)
    }
}

/// `(−iħ)^k`.
pub(crate) fn minus_i_hbar_pow(k: u32) -> Coefficient {
    (Coefficient::i() * Coefficient::hbar()).scale(&Scalar::from_int(-1)).pow(k)
}

fn int_coeff(n: num::BigInt) -> Coefficient {
    Coefficient::from_rational(BigRational::from_integer(n))
}

/// Normal-ordering coefficients for `p̂^s x̂^r`: entries `(k, k!·C(s,k)·C(r,k)·(−iħ)^k)`.
fn reorder_terms(s: u32, r: u32) -> Vec<(u32, Coefficient)> {
    (0..=s.min(r))
        .map(|k| {
            let n = factorial(k) * binomial(s, k) * binomial(r, k);
            (k, int_coeff(n) * minus_i_hbar_pow(k))
        })
        .collect()
}

/// Product of two normal-ordered words, itself in normal order.
fn mul_words(l: OpMono, r: OpMono) -> Vec<(OpMono, Coefficient)> {
    let xs = reorder_terms(l.c, r.a);
    let ys = reorder_terms(l.d, r.b);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for (kx, cx) in &xs {
        for (ky, cy) in &ys {
            let mono = OpMono::new(l.a + r.a - kx, l.b + r.b - ky, l.c - kx + r.c, l.d - ky + r.d);
            out.push((mono, cx * cy));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Operator {
    terms: BTreeMap<OpMono, Coefficient>,
}

impl Operator {
    pub fn zero() -> Self {
        Operator::default()
    }

    pub fn one() -> Self {
        Operator::scalar(Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> Self {
        Operator::word(c, OpMono::ONE)
    }

    pub fn word(c: Coefficient, mono: OpMono) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, mono, c);
        Operator { terms }
    }

    pub fn x() -> Self {
        Operator::word(Coefficient::one(), OpMono::new(1, 0, 0, 0))
    }

    pub fn y() -> Self {
        Operator::word(Coefficient::one(), OpMono::new(0, 1, 0, 0))
    }

    pub fn px() -> Self {
        Operator::word(Coefficient::one(), OpMono::new(0, 0, 1, 0))
    }

    pub fn py() -> Self {
        Operator::word(Coefficient::one(), OpMono::new(0, 0, 0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (OpMono, Coefficient)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        Operator { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OpMono, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &OpMono) -> Coefficient {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Highest total momentum power among the words; 0 for the zero operator.
    pub fn momentum_order(&self) -> u32 {
        self.terms.keys().map(OpMono::momentum_order).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Operator::from_terms(self.terms.iter().map(|(m, k)| (*m, k * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Operator::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal adjoint: reverse every word and conjugate its coefficient.
    pub fn adjoint(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let reversed = mul_words(OpMono::new(0, 0, m.c, m.d), OpMono::new(m.a, m.b, 0, 0));
            let cc = c.conj();
            for (mono, k) in reversed {
                add_term(&mut terms, mono, &k * &cc);
            }
        }
        Operator { terms }
    }

    /// Smallest ħ- and ω-exponents over every coefficient term; `(0, 0)` for zero.
    pub fn min_parameter_exps(&self) -> (u32, u32) {
        let h = self.terms.values().filter_map(Coefficient::min_h_exp).min().unwrap_or(0);
        let w = self.terms.values().filter_map(Coefficient::min_w_exp).min().unwrap_or(0);
        (h, w)
    }

    /// Keeps only the coefficient terms with ħ-exponent exactly `h`.
    pub fn hbar_component(&self, h: u32) -> Self {
        Operator::from_terms(self.terms.iter().map(|(m, c)| (*m, c.hbar_component(h))))
    }

    /// Differential-operator view under `p̂ = −iħ∂`.
    pub fn to_diff_form(&self) -> DiffForm {
        DiffForm {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c * &minus_i_hbar_pow(m.momentum_order())))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn to_latex(&self) -> String {
        render_latex(self.terms.iter().rev(), |m| {
            latex_vars(&m.as_phase(), ["\\hat x", "\\hat y", "\\hat p_x", "\\hat p_y"])
        })
    }
}

/// `AB − BA`.
pub fn commutator(a: &Operator, b: &Operator) -> Operator {
    a * b - b * a
}

/// The ħ⁰ part of an operator with `p̂ ↦ p`.
pub fn classical_symbol(op: &Operator) -> PhasePoly {
    PhasePoly::from_terms(op.terms.iter().map(|(m, c)| (m.as_phase(), c.hbar_component(0))))
}

impl fmt::Display for Operator {
    /// Normal-ordered text; `px`, `py` stand for the momentum operators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_text(f, self.terms.iter().rev(), |m| m.as_phase().text_factors(["x", "y", "px", "py"]))
    }
}

impl Add for &Operator {
    type Output = Operator;
    fn add(self, rhs: &Operator) -> Operator {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Operator { terms }
    }
}

impl Sub for &Operator {
    type Output = Operator;
    fn sub(self, rhs: &Operator) -> Operator {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, -c);
        }
        Operator { terms }
    }
}

impl Mul for &Operator {
    type Output = Operator;
    fn mul(self, rhs: &Operator) -> Operator {
        let mut terms = BTreeMap::new();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                let c = cl * cr;
                for (mono, k) in mul_words(*ml, *mr) {
                    add_term(&mut terms, mono, &k * &c);
                }
            }
        }
        Operator { terms }
    }
}

impl Neg for &Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        Operator { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        -&self
    }
}

forward_owned_binop!(Operator, Add, add);
forward_owned_binop!(Operator, Sub, sub);
forward_owned_binop!(Operator, Mul, mul);

/// An operator written as `Σ c · x^a y^b ∂_x^c ∂_y^d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffForm {
    terms: BTreeMap<OpMono, Coefficient>,
}

impl DiffForm {
    pub fn from_terms<I: IntoIterator<Item = (OpMono, Coefficient)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        DiffForm { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OpMono, &Coefficient)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Back to the normal-ordered momentum form, `∂ = (i/ħ)p̂`.
    pub fn to_operator(&self) -> Option<Operator> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let k = m.momentum_order();
            let c = c.div_hbar_pow(k)? * Coefficient::i().pow(k);
            terms.push((*m, c));
        }
        Some(Operator::from_terms(terms))
    }

    pub fn to_latex(&self) -> String {
        render_latex(self.terms.iter().rev(), |m| {
            let mut parts = Vec::new();
            let pos = latex_vars(&PhaseMono::new(m.a, m.b, 0, 0), ["x", "y", "", ""]);
            if !pos.is_empty() {
                parts.push(pos);
            }
            let order = m.c + m.d;
            if order > 0 {
                let num = if order == 1 { "\\partial".to_string() } else { format!("\\partial^{{{}}}", order) };
                let den: Vec<String> = [("x", m.c), ("y", m.d)]
                    .iter()
                    .filter(|(_, e)| *e > 0)
                    .map(|(v, e)| if *e == 1 { format!("\\partial {}", v) } else { format!("\\partial {}^{{{}}}", v, e) })
                    .collect();
                parts.push(format!("\\frac{{{}}}{{{}}}", num, den.join(" ")));
            }
            parts.join(" ")
        })
    }
}

impl fmt::Display for DiffForm {
    /// Text with `dx`, `dy` for `∂/∂x`, `∂/∂y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_text(f, self.terms.iter().rev(), |m| m.as_phase().text_factors(["x", "y", "dx", "dy"]))
    }
}
