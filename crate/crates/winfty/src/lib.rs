//! Mod-2 Dyer–Lashof calculus for free `W∞`-algebras.
//!
//! Classes are polynomials in factors `Q^I(x)` with `I` normal for the
//! generator `x` (upper indices, innermost operation last). [`apply_q`]
//! rewrites any composite into this normal form using the Cartan formula,
//! the squaring and vanishing rules and the Adem relations;
//! [`dual_steenrod`] applies `Sq^r_*` through the Cartan and Nishida
//! formulas. [`free_basis`] enumerates monomial bases and
//! [`ideal_quotient_dims`] computes dimensions of quotients by `W∞`-ideals
//! inside a bidegree box.
//!
//! Text syntax: `s^2*Q[2,1](s) + Q[1](s)^3`, lower indices `q[1,1](s)`,
//! composites of arbitrary expressions `Q[2](s*Q[1](s))`.

mod basis;
mod monomial;
mod ops;
mod parse;

pub use basis::{brute_force_basis, free_basis, ideal_quotient_dims, normal_atoms, QuotientTable};
pub use monomial::{Factor, Generator, WMonomial, WPolynomial};
pub use ops::{
    adem_rule, apply_q, apply_q_sequence, apply_lower_q, bar_class, binomial_mod2, dual_steenrod, is_normal,
    lower_indices, nishida_rule, slope, upper_from_lower, SteenrodValues,
};
pub use parse::{parse, Context};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("lower-index operation applied to an element that is not homogeneous")]
    Inhomogeneous,
}
