//! Commutative polynomials on the phase space `(x, y, p_x, p_y)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational};

use crate::coeffring::{forward_owned_binop, single_term_text, Coefficient};
use crate::error::{CoreError, Result};
use crate::sparse::add_term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhaseVar {
    X,
    Y,
    PX,
    PY,
}

impl PhaseVar {
    pub const ALL: [PhaseVar; 4] = [PhaseVar::X, PhaseVar::Y, PhaseVar::PX, PhaseVar::PY];

    pub fn name(self) -> &'static str {
        match self {
            PhaseVar::X => "x",
            PhaseVar::Y => "y",
            PhaseVar::PX => "px",
            PhaseVar::PY => "py",
        }
    }
}

/// `x^a y^b p_x^c p_y^d`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PhaseMono {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl PhaseMono {
    pub const ONE: PhaseMono = PhaseMono { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        PhaseMono { a, b, c, d }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c + self.d
    }

    pub fn exp(&self, v: PhaseVar) -> u32 {
        match v {
            PhaseVar::X => self.a,
            PhaseVar::Y => self.b,
            PhaseVar::PX => self.c,
            PhaseVar::PY => self.d,
        }
    }

    fn exp_mut(&mut self, v: PhaseVar) -> &mut u32 {
        match v {
            PhaseVar::X => &mut self.a,
            PhaseVar::Y => &mut self.b,
            PhaseVar::PX => &mut self.c,
            PhaseVar::PY => &mut self.d,
        }
    }

    pub fn is_position(&self) -> bool {
        self.c == 0 && self.d == 0
    }

    fn mul(self, o: PhaseMono) -> PhaseMono {
        PhaseMono::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }

    fn key(&self) -> (u32, u32, u32, u32, u32) {
        (self.degree(), self.a, self.b, self.c, self.d)
    }

    /// `x^a*y^b*px^c*py^d` with unit exponents elided; empty for the constant monomial.
    pub(crate) fn text_factors(&self, names: [&str; 4]) -> Vec<String> {
        [self.a, self.b, self.c, self.d]
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{}^{}", n, e) })
            .collect()
    }
}

impl Ord for PhaseMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PhaseMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PhasePoly {
    terms: BTreeMap<PhaseMono, Coefficient>,
}

impl PhasePoly {
    pub fn zero() -> Self {
        PhasePoly::default()
    }

    pub fn one() -> Self {
        PhasePoly::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        PhasePoly::monomial(c, PhaseMono::ONE)
    }

    pub fn monomial(c: Coefficient, mono: PhaseMono) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, mono, c);
        PhasePoly { terms }
    }

    pub fn var(v: PhaseVar) -> Self {
        let mut mono = PhaseMono::ONE;
        *mono.exp_mut(v) = 1;
        PhasePoly::monomial(Coefficient::one(), mono)
    }

    pub fn x() -> Self {
        PhasePoly::var(PhaseVar::X)
    }

    pub fn y() -> Self {
        PhasePoly::var(PhaseVar::Y)
    }

    pub fn px() -> Self {
        PhasePoly::var(PhaseVar::PX)
    }

    pub fn py() -> Self {
        PhasePoly::var(PhaseVar::PY)
    }

    pub fn from_terms<I: IntoIterator<Item = (PhaseMono, Coefficient)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            add_term(&mut terms, m, c);
        }
        PhasePoly { terms }
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

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PhaseMono, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &PhaseMono) -> Coefficient {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(PhaseMono::degree).max()
    }

    pub fn is_position_only(&self) -> bool {
        self.terms.keys().all(PhaseMono::is_position)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        PhasePoly::from_terms(self.terms.iter().map(|(m, k)| (*m, k * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = PhasePoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn conj(&self) -> Self {
        PhasePoly::from_terms(self.terms.iter().map(|(m, k)| (*m, k.conj())))
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: PhaseVar) -> Self {
        PhasePoly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|(m, k)| {
            let e = m.exp(v);
            let mut dm = *m;
            *dm.exp_mut(v) -= 1;
            (dm, k * &Coefficient::from_int(e as i64))
        }))
    }

    /// LaTeX rendering, highest graded-lex term first.
    pub fn to_latex(&self) -> String {
        render_latex(self.terms.iter().rev(), |m| {
            latex_vars(m, ["x", "y", "p_x", "p_y"])
        })
    }
}

pub(crate) fn latex_vars(m: &PhaseMono, names: [&str; 4]) -> String {
    [m.a, m.b, m.c, m.d]
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{}^{{{}}}", n, e) })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Shared LaTeX layout for sparse `coefficient · monomial` sums.
pub(crate) fn render_latex<'a, K: 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Coefficient)>,
    vars: impl Fn(&K) -> String,
) -> String {
    let mut out = String::new();
    for (idx, (mono, coeff)) in terms.enumerate() {
        let vars = vars(mono);
        let mut c = coeff.to_latex();
        let multi = coeff.len() > 1;
        let neg = !multi && c.starts_with('-');
        if neg {
            c.remove(0);
        }
        if multi {
            c = format!("\\left({}\\right)", c);
        }
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match (c.as_str(), vars.is_empty()) {
            (c, true) => out.push_str(c),
            ("1", false) => out.push_str(&vars),
            (c, false) => {
                out.push_str(c);
                out.push(' ');
                out.push_str(&vars);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parseable text for sparse sums; `factors` yields the variable part of a monomial.
pub(crate) fn render_text<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Coefficient)>,
    factors: impl Fn(&K) -> Vec<String>,
) -> fmt::Result {
    let mut first = true;
    for (mono, coeff) in terms {
        let (neg, coeff_text) = match coeff.as_single_term() {
            Some((cm, s)) => single_term_text(cm, s),
            None => (false, format!("({})", coeff)),
        };
        let mut parts = Vec::new();
        if !coeff_text.is_empty() {
            parts.push(coeff_text);
        }
        parts.extend(factors(mono));
        let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
        match (first, neg) {
            (true, true) => write!(f, "-{}", body)?,
            (true, false) => write!(f, "{}", body)?,
            (false, true) => write!(f, " - {}", body)?,
            (false, false) => write!(f, " + {}", body)?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for PhasePoly {
    /// Highest graded-lex term first, in the surface grammar of the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_text(f, self.terms.iter().rev(), |m| m.text_factors(["x", "y", "px", "py"]))
    }
}

impl Add for &PhasePoly {
    type Output = PhasePoly;
    fn add(self, rhs: &PhasePoly) -> PhasePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, c.clone());
        }
        PhasePoly { terms }
    }
}

impl Sub for &PhasePoly {
    type Output = PhasePoly;
    fn sub(self, rhs: &PhasePoly) -> PhasePoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, -c);
        }
        PhasePoly { terms }
    }
}

impl Mul for &PhasePoly {
    type Output = PhasePoly;
    fn mul(self, rhs: &PhasePoly) -> PhasePoly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                add_term(&mut terms, ma.mul(*mb), ca * cb);
            }
        }
        PhasePoly { terms }
    }
}

impl Neg for &PhasePoly {
    type Output = PhasePoly;
    fn neg(self) -> PhasePoly {
        PhasePoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for PhasePoly {
    type Output = PhasePoly;
    fn neg(self) -> PhasePoly {
        -&self
    }
}

forward_owned_binop!(PhasePoly, Add, add);
forward_owned_binop!(PhasePoly, Sub, sub);
forward_owned_binop!(PhasePoly, Mul, mul);

impl From<Coefficient> for PhasePoly {
    fn from(c: Coefficient) -> Self {
        PhasePoly::constant(c)
    }
}

/// Canonical Poisson bracket
/// `{f,g} = f_x g_px − f_px g_x + f_y g_py − f_py g_y`.
pub fn poisson(f: &PhasePoly, g: &PhasePoly) -> PhasePoly {
    let pairs = [(PhaseVar::X, PhaseVar::PX), (PhaseVar::Y, PhaseVar::PY)];
    let mut out = PhasePoly::zero();
    for (q, p) in pairs {
        out = out + f.partial(q) * g.partial(p) - f.partial(p) * g.partial(q);
    }
    out
}

/// Hamiltonian vector field of `l` applied to `g`, i.e. `{g, l}`.
///
/// With this orientation `X_L(x) = p_x` for `L = ½p_x² + ω²x²`.
pub fn hamiltonian_flow_apply(l: &PhasePoly, g: &PhasePoly) -> PhasePoly {
    poisson(g, l)
}

/// Polynomial in the extended-Hamiltonian chart `(x, u, p_x, p_u)`.
///
/// Stored on the same four slots as [`PhasePoly`], with `u` in the `y` slot and
/// `p_u` in the `p_y` slot. Only [`substitute_uy`] turns it into a Cartesian
/// observable.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly(PhasePoly);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(PhasePoly::zero())
    }

    pub fn constant(c: Coefficient) -> Self {
        UPoly(PhasePoly::constant(c))
    }

    pub fn x() -> Self {
        UPoly(PhasePoly::x())
    }

    pub fn u() -> Self {
        UPoly(PhasePoly::y())
    }

    pub fn px() -> Self {
        UPoly(PhasePoly::px())
    }

    pub fn pu() -> Self {
        UPoly(PhasePoly::py())
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        UPoly(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        UPoly(self.0.pow(e))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Add for UPoly {
    type Output = UPoly;
    fn add(self, rhs: UPoly) -> UPoly {
        UPoly(self.0 + rhs.0)
    }
}

impl Mul for UPoly {
    type Output = UPoly;
    fn mul(self, rhs: UPoly) -> UPoly {
        UPoly(self.0 * rhs.0)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_text(f, self.0.terms().rev(), |m| m.text_factors(["x", "u", "px", "pu"]))
    }
}

/// Change of chart `u = (n/m)·y`, `p_u = (m/n)·p_y`; `x` and `p_x` are untouched.
pub fn substitute_uy(f: &UPoly, m: u32, n: u32) -> Result<PhasePoly> {
    if m == 0 || n == 0 {
        return Err(CoreError::InvalidParams { m, n });
    }
    let ratio = |num: u32, den: u32, e: u32| {
        BigRational::new(BigInt::from(num).pow(e), BigInt::from(den).pow(e))
    };
    Ok(PhasePoly::from_terms(f.0.terms().map(|(mono, c)| {
        let factor = ratio(n, m, mono.b) * ratio(m, n, mono.d);
        (*mono, c * &Coefficient::from_rational(factor))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w2() -> Coefficient {
        Coefficient::omega().pow(2)
    }

    fn l() -> PhasePoly {
        PhasePoly::px().pow(2).scale(&Coefficient::ratio(1, 2)) + PhasePoly::x().pow(2).scale(&w2())
    }

    #[test]
    fn product_examples() {
        assert_eq!(PhasePoly::x() * PhasePoly::px(), PhasePoly::monomial(Coefficient::one(), PhaseMono::new(1, 0, 1, 0)));
        let k11 = PhasePoly::x() * PhasePoly::py() - PhasePoly::y() * PhasePoly::px();
        assert_eq!(k11.clone() * PhasePoly::one(), k11);

        let w1 = Coefficient::sqrt2() * Coefficient::omega();
        let iw1x = PhasePoly::x().scale(&(Coefficient::i() * w1));
        let prod = (PhasePoly::px() - iw1x.clone()) * (PhasePoly::px() + iw1x);
        assert_eq!(prod, l().scale(&Coefficient::from_int(2)));
    }

    #[test]
    fn partial_examples() {
        let f = PhasePoly::monomial(Coefficient::one(), PhaseMono::new(2, 0, 0, 1));
        assert_eq!(f.partial(PhaseVar::X), PhasePoly::monomial(Coefficient::from_int(2), PhaseMono::new(1, 0, 0, 1)));
        let g = PhasePoly::x().pow(2).scale(&w2());
        assert!(g.partial(PhaseVar::PX).is_zero());
        let h = PhasePoly::monomial(Coefficient::one(), PhaseMono::new(0, 3, 1, 1));
        assert_eq!(h.partial(PhaseVar::PY), PhasePoly::monomial(Coefficient::one(), PhaseMono::new(0, 3, 1, 0)));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(poisson(&PhasePoly::x(), &PhasePoly::px()), PhasePoly::one());
        assert_eq!(poisson(&PhasePoly::x(), &l()), PhasePoly::px());
        assert_eq!(hamiltonian_flow_apply(&l(), &PhasePoly::x()), PhasePoly::px());
        assert!(hamiltonian_flow_apply(&l(), &PhasePoly::zero()).is_zero());
        // X_L(2 x p_x) = 2 p_x^2 - 4 w^2 x^2, bracket worked by hand.
        let g2 = (PhasePoly::x() * PhasePoly::px()).scale(&Coefficient::from_int(2));
        let expected = PhasePoly::px().pow(2).scale(&Coefficient::from_int(2))
            - PhasePoly::x().pow(2).scale(&(w2() * Coefficient::from_int(4)));
        assert_eq!(hamiltonian_flow_apply(&l(), &g2), expected);
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(substitute_uy(&UPoly::u(), 4, 1).unwrap(), PhasePoly::y().scale(&Coefficient::ratio(1, 4)));
        assert_eq!(
            substitute_uy(&UPoly::pu().pow(4), 4, 1).unwrap(),
            PhasePoly::py().pow(4).scale(&Coefficient::from_int(256))
        );
        let xpx = UPoly::x() * UPoly::px();
        assert_eq!(substitute_uy(&xpx, 3, 7).unwrap(), PhasePoly::x() * PhasePoly::px());
        assert_eq!(substitute_uy(&xpx, 0, 1), Err(CoreError::InvalidParams { m: 0, n: 1 }));
        assert_eq!(substitute_uy(&xpx, 2, 0), Err(CoreError::InvalidParams { m: 2, n: 0 }));
    }

    #[test]
    fn graded_lex_order() {
        let lo = PhaseMono::new(0, 0, 0, 3);
        let hi = PhaseMono::new(1, 0, 0, 0);
        assert!(lo > hi);
        assert!(PhaseMono::new(1, 0, 0, 2) > PhaseMono::new(0, 1, 2, 0));
    }

    #[test]
    fn text_rendering() {
        let f = PhasePoly::x() * PhasePoly::py().pow(4).scale(&Coefficient::from_int(256))
            - PhasePoly::x().scale(&(Coefficient::hbar().pow(2) * Coefficient::ratio(3, 8)))
            + PhasePoly::constant(Coefficient::i() + Coefficient::omega());
        assert_eq!(f.to_string(), "256*x*py^4 - 3/8*hbar^2*x + (omega + i)");
        assert_eq!(PhasePoly::zero().to_string(), "0");
        assert_eq!(f.to_latex(), "256 x p_y^{4} - \\frac{3}{8}\\hbar^{2} x + \\left(\\omega + i\\right)");
    }
}
