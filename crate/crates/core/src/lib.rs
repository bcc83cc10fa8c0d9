//! Completed zeta functions of global fields and numerical verification of
//! their functional equation
//!
//! ```text
//! Z_k(1 - s) = beta(A/k)^(2s - 1) Z_k(s)
//! ```
//!
//! where `Z_k` is the Dedekind zeta function multiplied by its archimedean
//! Gamma factors and `beta(A/k)` is the covolume of `k` in its adele ring:
//! `sqrt|D|` for a number field of discriminant `D`, `q^(g-1)` for a function
//! field of genus `g` over `F_q`.
//!
//! The crate is organized bottom-up:
//!
//! - [`kernel`]: complex log-Gamma, Hurwitz and Riemann zeta, Kronecker
//!   characters and Dirichlet L-functions.
//! - [`field`]: field descriptors (the rationals, quadratic fields, rational
//!   function fields and curves given by their L-polynomial), places, local
//!   Euler factors and the covolume.
//! - [`zeta`]: `zeta_k`, the Gamma factor and `Z_k`, with an explicit pole
//!   model.
//! - [`verify`]: the functional-equation checks (numerical sweeps, exact
//!   coefficient symmetry for function fields, Euler-product consistency).
//! - [`cli`]: the command-line front end and the JSON/CSV report formats.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cli;
pub mod error;
pub mod field;
pub mod kernel;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use field::{
    covolume, make_curve_function_field, make_quadratic, make_rational_function_field,
    make_rationals, Covolume, FieldDescriptor, FunctionFieldDescriptor, LPolynomial,
    NumberFieldDescriptor, Place,
};
pub use kernel::{Complex64, KroneckerCharacter, POLE_RADIUS};
pub use verify::{FunctionalEquationReport, Grid, Status, SweepSummary};
pub use zeta::{completed_zeta, gamma_factor, zeta, EvaluationRecord, Regularization};
