//! Exact symbolic operator calculus for comparing Born–Jordan and Weyl
//! quantization on the first integrals of the 2D anisotropic harmonic oscillator.
//!
//! Layers, bottom-up:
//! - [`coeffring`]: coefficients in `Q(i)[√2][ħ, ω]`
//! - [`phasepoly`]: classical polynomials, Poisson bracket, chart change
//! - [`generators`]: `H_{m,n}`, `L`, `G_n`, `P`, `D`, `K_{m,n}`, ladder integrals
//! - [`weylalgebra`]: normal-ordered operators and the `p̂ = −iħ∂` action oracle
//! - [`quantizer`]: the two monomial quantization rules and ladder substitution

pub mod coeffring;
pub mod error;
pub mod generators;
pub mod phasepoly;
pub mod quantizer;
mod sparse;
pub mod weylalgebra;

pub use coeffring::{CoeffMono, Coefficient, Scalar};
pub use error::{CoreError, Result};
pub use generators::OscillatorParams;
pub use phasepoly::{PhaseMono, PhasePoly, PhaseVar};
pub use quantizer::{LadderIntegral, Scheme};
pub use weylalgebra::{DiffForm, OpMono, Operator};
