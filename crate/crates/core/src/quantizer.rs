//! Born–Jordan and Weyl quantization of polynomial observables.
//!
//! Both schemes act on a single canonical pair by
//!
//! ```text
//! Born–Jordan: q^r p^s ↦ 1/(s+1) Σ_{k=0}^{s} p̂^{s−k} q̂^r p̂^k
//! Weyl:        q^r p^s ↦ 2^{−s} Σ_{k=0}^{s} C(s,k) p̂^{s−k} q̂^r p̂^k
//! ```
//!
//! Factors belonging to different degrees of freedom commute, so a mixed
//! monomial is quantized pair by pair and the results multiplied.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};

use crate::coeffring::Coefficient;
use crate::generators::OscillatorParams;
use crate::phasepoly::{PhaseMono, PhasePoly};
use crate::sparse::binomial;
use crate::weylalgebra::{OpMono, Operator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    BornJordan,
    Weyl,
}

impl Scheme {
    pub const ALL: [Scheme; 2] = [Scheme::BornJordan, Scheme::Weyl];

    /// Weight of `p̂^{s−k} q̂^r p̂^k` in the symmetrized sum.
    fn weight(self, s: u32, k: u32) -> Coefficient {
        let q = match self {
            Scheme::BornJordan => BigRational::new(BigInt::from(1), BigInt::from(s + 1)),
            Scheme::Weyl => BigRational::new(binomial(s, k), BigInt::from(2).pow(s)),
        };
        Coefficient::from_rational(q)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Scheme::BornJordan => "bj",
            Scheme::Weyl => "weyl",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::BornJordan => "Born-Jordan",
            Scheme::Weyl => "Weyl",
        })
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bj" | "born-jordan" | "bornjordan" => Ok(Scheme::BornJordan),
            "weyl" | "w" => Ok(Scheme::Weyl),
            other => Err(format!("unknown scheme `{}` (expected bj or weyl)", other)),
        }
    }
}

/// Quantization of `q^r p^s` for one canonical pair; `word(e_q, e_p)` builds the
/// normal-ordered word for that pair.
fn quantize_pair(scheme: Scheme, r: u32, s: u32, word: impl Fn(u32, u32) -> OpMono) -> Operator {
    let q = Operator::word(Coefficient::one(), word(r, 0));
    let p = |e: u32| Operator::word(Coefficient::one(), word(0, e));
    let mut out = Operator::zero();
    for k in 0..=s {
        let ordered = p(s - k) * &q * p(k);
        out = out + ordered.scale(&scheme.weight(s, k));
    }
    out
}

pub fn quantize_monomial(scheme: Scheme, m: &PhaseMono) -> Operator {
    let xs = quantize_pair(scheme, m.a, m.c, |q, p| OpMono::new(q, 0, p, 0));
    let ys = quantize_pair(scheme, m.b, m.d, |q, p| OpMono::new(0, q, 0, p));
    xs * ys
}

/// Linear extension of [`quantize_monomial`].
pub fn quantize(scheme: Scheme, f: &PhasePoly) -> Operator {
    let mut out = Operator::zero();
    for (m, c) in f.terms() {
        out = out + quantize_monomial(scheme, m).scale(c);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderIntegral {
    F1,
    F2,
}

/// Ladder factors `(b̂₁, b̂₁*, b̂₂, b̂₂*)` with `b̂_j = p̂_j − iω_j q̂_j`, unnormalized.
pub fn ladder_operators(p: &OscillatorParams) -> [Operator; 4] {
    let i = Coefficient::i();
    let ix = Operator::x().scale(&(i.clone() * p.omega1()));
    let iy = Operator::y().scale(&(i * p.omega2()));
    [
        Operator::px() - ix.clone(),
        Operator::px() + ix,
        Operator::py() - iy.clone(),
        Operator::py() + iy,
    ]
}

/// Jauch–Hill integrals built directly from ladder operators:
/// `½(b̂₁ⁿb̂₂*ᵐ + b̂₁*ⁿb̂₂ᵐ)` or `−(i/2)(b̂₁ⁿb̂₂*ᵐ − b̂₁*ⁿb̂₂ᵐ)`.
pub fn quantize_ladder(p: &OscillatorParams, which: LadderIntegral) -> Operator {
    let [b1, b1s, b2, b2s] = ladder_operators(p);
    let forward = b1.pow(p.n()) * b2s.pow(p.m());
    let backward = b1s.pow(p.n()) * b2.pow(p.m());
    match which {
        LadderIntegral::F1 => (forward + backward).scale(&Coefficient::ratio(1, 2)),
        LadderIntegral::F2 => (forward - backward).scale(&(Coefficient::i() * Coefficient::ratio(-1, 2))),
    }
}
