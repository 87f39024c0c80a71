//! Exact coefficients in `Q(i)[√2][ħ, ω]`.
//!
//! A [`Coefficient`] is a finite sum of Gaussian-rational [`Scalar`]s attached
//! to monomials `ħ^h · ω^w · √2^r` with `r ∈ {0, 1}`. The only relation is
//! `√2 · √2 = 2`, which is folded into the scalar on every product, so the
//! sparse representation is canonical and equality is structural.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar { re: &self.re / &norm, im: -(&self.im / &norm) })
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    /// `a+b*i` form, with the zero part omitted when the other is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

/// Monomial `ħ^h · ω^w · √2^r`. The derived order is lexicographic on `(h, w, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CoeffMono {
    pub h_exp: u32,
    pub w_exp: u32,
    pub r_exp: u8,
}

impl CoeffMono {
    pub const ONE: CoeffMono = CoeffMono { h_exp: 0, w_exp: 0, r_exp: 0 };

    pub fn new(h_exp: u32, w_exp: u32, r_exp: u8) -> Self {
        assert!(r_exp <= 1, "sqrt2 exponent must be reduced");
        CoeffMono { h_exp, w_exp, r_exp }
    }

    /// Product of monomials, plus whether a factor of 2 was released by `√2·√2`.
    fn mul(self, other: CoeffMono) -> (CoeffMono, bool) {
        let r = self.r_exp + other.r_exp;
        let mono = CoeffMono {
            h_exp: self.h_exp + other.h_exp,
            w_exp: self.w_exp + other.w_exp,
            r_exp: r % 2,
        };
        (mono, r == 2)
    }
}

/// Element of `Q(i)[√2][ħ, ω]` in canonical sparse form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coefficient {
    terms: BTreeMap<CoeffMono, Scalar>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one() -> Self {
        Coefficient::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Coefficient::term(s, CoeffMono::ONE)
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient::from_scalar(Scalar::from_int(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Coefficient::from_scalar(Scalar::real(q))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Coefficient::from_scalar(Scalar::ratio(num, den))
    }

    pub fn term(s: Scalar, mono: CoeffMono) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(mono, s);
        }
        Coefficient { terms }
    }

    pub fn i() -> Self {
        Coefficient::from_scalar(Scalar::i())
    }

    pub fn hbar() -> Self {
        Coefficient::term(Scalar::one(), CoeffMono::new(1, 0, 0))
    }

    pub fn omega() -> Self {
        Coefficient::term(Scalar::one(), CoeffMono::new(0, 1, 0))
    }

    pub fn sqrt2() -> Self {
        Coefficient::term(Scalar::one(), CoeffMono::new(0, 0, 1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&CoeffMono::ONE) == Some(&Scalar::one())
    }

    /// True when every scalar has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(h, w, r)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&CoeffMono, &Scalar)> {
        self.terms.iter()
    }

    /// The lone term, if the coefficient is a single monomial.
    pub fn as_single_term(&self) -> Option<(&CoeffMono, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Complex conjugation `i ↦ −i`; ħ, ω and √2 are fixed.
    pub fn conj(&self) -> Self {
        Coefficient { terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Coefficient::zero();
        }
        Coefficient { terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coefficient::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn min_h_exp(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.h_exp).min()
    }

    pub fn min_w_exp(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.w_exp).min()
    }

    /// Terms whose ħ-exponent equals `h`.
    pub fn hbar_component(&self, h: u32) -> Self {
        Coefficient {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.h_exp == h)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Exact division by `ħ^k`; `None` when some term has fewer than `k` factors of ħ.
    pub fn div_hbar_pow(&self, k: u32) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (mono, s) in &self.terms {
            let h_exp = mono.h_exp.checked_sub(k)?;
            terms.insert(CoeffMono { h_exp, ..*mono }, s.clone());
        }
        Some(Coefficient { terms })
    }

    fn add_term(&mut self, mono: CoeffMono, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(s);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &s;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Canonical report rendering: every term as `(a+b*i)*hbar^h*omega^w*sqrt2^r`,
    /// sorted by `(h, w, r)` descending, joined by ` + `. Zero renders as `0`.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, s)| {
                format!(
                    "({}+{}*i)*hbar^{}*omega^{}*sqrt2^{}",
                    fmt_rational(&s.re),
                    fmt_rational(&s.im),
                    m.h_exp,
                    m.w_exp,
                    m.r_exp
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// LaTeX rendering, terms in canonical (descending) order.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, s)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = scalar_latex(s);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let params = mono_latex(mono);
            if params.is_empty() {
                out.push_str(if body.is_empty() { "1" } else { &body });
            } else {
                out.push_str(&body);
                out.push_str(&params);
            }
        }
        out
    }
}

fn rational_latex(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Returns (leading minus, magnitude text with unit factors elided).
fn scalar_latex(s: &Scalar) -> (bool, String) {
    match (s.re.is_zero(), s.im.is_zero()) {
        (_, true) => {
            let mag = s.re.abs();
            let body = if mag.is_one() { String::new() } else { rational_latex(&mag) };
            (s.re.is_negative(), body)
        }
        (true, false) => {
            let mag = s.im.abs();
            let body = if mag.is_one() { "i".to_string() } else { format!("{}i", rational_latex(&mag)) };
            (s.im.is_negative(), body)
        }
        (false, false) => {
            let sign = if s.im.is_negative() { '-' } else { '+' };
            (false, format!("\\left({} {} {}i\\right)", rational_latex(&s.re), sign, rational_latex(&s.im.abs())))
        }
    }
}

fn mono_latex(m: &CoeffMono) -> String {
    let mut out = String::new();
    if m.r_exp == 1 {
        out.push_str("\\sqrt{2}");
    }
    for (name, e) in [("\\hbar", m.h_exp), ("\\omega", m.w_exp)] {
        match e {
            0 => {}
            1 => out.push_str(name),
            _ => out.push_str(&format!("{}^{{{}}}", name, e)),
        }
    }
    out
}

/// Text form of a single `scalar · monomial` term usable as a parser factor chain.
pub(crate) fn single_term_text(mono: &CoeffMono, s: &Scalar) -> (bool, String) {
    let mut factors = Vec::new();
    let neg;
    match (s.re.is_zero(), s.im.is_zero()) {
        (_, true) => {
            neg = s.re.is_negative();
            let mag = s.re.abs();
            if !mag.is_one() {
                factors.push(fmt_rational(&mag));
            }
        }
        (true, false) => {
            neg = s.im.is_negative();
            let mag = s.im.abs();
            if !mag.is_one() {
                factors.push(fmt_rational(&mag));
            }
            factors.push("i".to_string());
        }
        (false, false) => {
            neg = false;
            factors.push(format!("({})", s));
        }
    }
    for (name, e) in [("hbar", mono.h_exp), ("omega", mono.w_exp), ("sqrt2", mono.r_exp as u32)] {
        match e {
            0 => {}
            1 => factors.push(name.to_string()),
            _ => factors.push(format!("{}^{}", name, e)),
        }
    }
    (neg, factors.join("*"))
}

impl fmt::Display for Coefficient {
    /// Parseable text in canonical term order, e.g. `3/2*hbar^2 - i*omega`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (mono, s)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = single_term_text(mono, s);
            let body = if body.is_empty() { "1".to_string() } else { body };
            match (idx, neg) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (mono, s) in &rhs.terms {
            self.add_term(*mono, s.clone());
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        for (mono, s) in &rhs.terms {
            out.add_term(*mono, -s);
        }
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let two = Scalar::from_int(2);
        let mut out = Coefficient::zero();
        for (ma, sa) in &self.terms {
            for (mb, sb) in &rhs.terms {
                let (mono, doubled) = ma.mul(*mb);
                let mut s = sa * sb;
                if doubled {
                    s = &s * &two;
                }
                out.add_term(mono, s);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Coefficient, Add, add);
forward_owned_binop!(Coefficient, Sub, sub);
forward_owned_binop!(Coefficient, Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl From<Scalar> for Coefficient {
    fn from(s: Scalar) -> Self {
        Coefficient::from_scalar(s)
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}
