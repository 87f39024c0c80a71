//! Classical observables of the 2D anisotropic oscillator in its extended form.
//!
//! `K_{m,n} = P_{m,n} G_n + D_{m,n} X_L(G_n)` is assembled in the `(x, u, p_x, p_u)`
//! chart and pulled back to Cartesian coordinates with [`substitute_uy`].

use num::{BigInt, BigRational};

use crate::coeffring::Coefficient;
use crate::error::{CoreError, Result};
use crate::phasepoly::{hamiltonian_flow_apply, substitute_uy, PhasePoly, UPoly};
use crate::sparse::binomial;

/// Frequency ratio `m : n` of the oscillator. Both must be positive; pairs
/// with a common factor are kept as given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OscillatorParams {
    m: u32,
    n: u32,
}

impl OscillatorParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(CoreError::InvalidParams { m, n });
        }
        Ok(OscillatorParams { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn ratio(num: u32, den: u32) -> Coefficient {
        Coefficient::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ω₁ = √2·ω`.
    pub fn omega1(&self) -> Coefficient {
        Coefficient::sqrt2() * Coefficient::omega()
    }

    /// `ω₂ = (n/m)·√2·ω`, so that `m·ω₂ = n·ω₁`.
    pub fn omega2(&self) -> Coefficient {
        Self::ratio(self.n, self.m) * self.omega1()
    }
}

fn minus_two_omega_sq() -> Coefficient {
    Coefficient::from_int(-2) * Coefficient::omega().pow(2)
}

/// `H = ½(p_x² + p_y²) + ω²(x² + (n/m)² y²)`, the Cartesian Hamiltonian with the
/// overall `(m/n)²` dropped.
pub fn hamiltonian(p: &OscillatorParams) -> PhasePoly {
    let half = Coefficient::ratio(1, 2);
    let w2 = Coefficient::omega().pow(2);
    let ny = OscillatorParams::ratio(p.n, p.m).pow(2);
    (PhasePoly::px().pow(2) + PhasePoly::py().pow(2)).scale(&half)
        + PhasePoly::x().pow(2).scale(&w2)
        + PhasePoly::y().pow(2).scale(&(w2.clone() * ny))
}

/// `L = ½p_x² + ω²x²`.
pub fn l_integral() -> PhasePoly {
    PhasePoly::px().pow(2).scale(&Coefficient::ratio(1, 2)) + PhasePoly::x().pow(2).scale(&Coefficient::omega().pow(2))
}

/// `G_n = Σ_{k=0}^{⌊(n−1)/2⌋} C(n, 2k+1) (−2ω²)^k x^{2k+1} p_x^{n−2k−1}`.
///
/// `n = 0` gives the empty sum.
pub fn g_poly(n: u32) -> PhasePoly {
    if n == 0 {
        return PhasePoly::zero();
    }
    let mut out = PhasePoly::zero();
    for k in 0..=(n - 1) / 2 {
        let c = Coefficient::from_rational(BigRational::from_integer(binomial(n, 2 * k + 1)))
            * minus_two_omega_sq().pow(k);
        out = out + (PhasePoly::x().pow(2 * k + 1) * PhasePoly::px().pow(n - 2 * k - 1)).scale(&c);
    }
    out
}

fn binom_coeff(n: u32, k: u32) -> Coefficient {
    Coefficient::from_rational(BigRational::from_integer(binomial(n, k)))
}

/// `−(m/n)·u`, the building block of both `P` and `D`.
fn scaled_u(p: &OscillatorParams) -> UPoly {
    UPoly::u().scale(&-OscillatorParams::ratio(p.m, p.n))
}

/// `P_{m,n}` expanded in `(u, p_u)` and then written in Cartesian variables.
pub fn p_poly(p: &OscillatorParams) -> PhasePoly {
    let m = p.m;
    let mut acc = UPoly::zero();
    for k in 0..=m / 2 {
        let c = binom_coeff(m, 2 * k) * minus_two_omega_sq().pow(k);
        acc = acc + (scaled_u(p).pow(2 * k) * UPoly::pu().pow(m - 2 * k)).scale(&c);
    }
    substitute_uy(&acc, p.m, p.n).expect("params validated")
}

/// `D_{m,n}`; the `m = 1` case uses the separate closed form `−(m/n²)·u`.
pub fn d_poly(p: &OscillatorParams) -> PhasePoly {
    let m = p.m;
    let acc = if m == 1 {
        let c = -OscillatorParams::ratio(m, p.n * p.n);
        UPoly::u().scale(&c)
    } else {
        let mut acc = UPoly::zero();
        for k in 0..=(m - 1) / 2 {
            let c = binom_coeff(m, 2 * k + 1) * minus_two_omega_sq().pow(k);
            acc = acc + (scaled_u(p).pow(2 * k + 1) * UPoly::pu().pow(m - 2 * k - 1)).scale(&c);
        }
        acc.scale(&OscillatorParams::ratio(1, p.n))
    };
    substitute_uy(&acc, p.m, p.n).expect("params validated")
}

/// The degree `m + n` first integral `K_{m,n} = P G_n + D X_L(G_n)`.
pub fn k_integral(p: &OscillatorParams) -> PhasePoly {
    let g = g_poly(p.n);
    let flow = hamiltonian_flow_apply(&l_integral(), &g);
    p_poly(p) * g + d_poly(p) * flow
}

/// Unnormalized ladder factors `(b̃₁, b̃₁*, b̃₂, b̃₂*)` with `b̃_j = p_j − iω_j q_j`.
pub fn ladder_factors(p: &OscillatorParams) -> [PhasePoly; 4] {
    let i = Coefficient::i();
    let ix = PhasePoly::x().scale(&(i.clone() * p.omega1()));
    let iy = PhasePoly::y().scale(&(i * p.omega2()));
    [
        PhasePoly::px() - ix.clone(),
        PhasePoly::px() + ix,
        PhasePoly::py() - iy.clone(),
        PhasePoly::py() + iy,
    ]
}

/// `(F̃₁, F̃₂)` with `F̃₁ = ½(b̃₁ⁿb̃₂*ᵐ + b̃₁*ⁿb̃₂ᵐ)` and `F̃₂ = −(i/2)(b̃₁ⁿb̃₂*ᵐ − b̃₁*ⁿb̃₂ᵐ)`.
pub fn ladder_integrals(p: &OscillatorParams) -> (PhasePoly, PhasePoly) {
    let [b1, b1s, b2, b2s] = ladder_factors(p);
    let forward = b1.pow(p.n) * b2s.pow(p.m);
    let backward = b1s.pow(p.n) * b2.pow(p.m);
    let f1 = (&forward + &backward).scale(&Coefficient::ratio(1, 2));
    let f2 = (forward - backward).scale(&(Coefficient::i() * Coefficient::ratio(-1, 2)));
    (f1, f2)
}
