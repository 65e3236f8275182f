//! Exact symbolic machinery for vertex (super)algebras over the rationals.
//!
//! The crate is organized around five subsystems:
//!
//! * [`series`] / [`kernel`] — truncated Laurent series in `Q((x))` with
//!   certified orders, and the named residue kernels (`f_n`, `g_n`, Huang's
//!   kernels, exponential-substitution kernels) expanded lazily.
//! * [`algebra`] / [`engine`] / [`parse`] — graded vertex (super)algebras
//!   over PBW bases (rank-1 Heisenberg, Virasoro, free fermion) with exact
//!   mode products `u_m v`, the translation operator `D`, weights, parity
//!   signs, and a text grammar for vectors.
//! * [`linalg`] / [`zhu`] — exact sparse row reduction and the Zhu-style
//!   quotient machinery: kernel products, spans of circle products plus
//!   `D V`, truncated quotient algebras, and the classical binomial-kernel
//!   products for comparison.
//! * [`fock`] / [`phi`] / [`lie`] — highest-weight Fock modules viewed as
//!   phi-coordinated modules via `x^{L(0)}`, the component-commutator and
//!   vacuum-space checks, and the Lie superalgebra on `V ⊗ C[t,t^{-1}]`
//!   modulo `span{Dv ⊗ t^n + n v ⊗ t^n}`.
//! * [`conformal`] — Virasoro audits with extracted central charge,
//!   conformal-vector shifts `ω - λ Da`, the square-bracket vertex structure
//!   `Y(e^{xL(0)}u, e^x - 1)`, zero-mode scalars, and the `e^{-αx}` twist
//!   identity at series level.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere and every reported identity is exact.

pub mod algebra;
pub mod audit;
pub mod conformal;
pub mod engine;
pub mod fock;
pub mod kernel;
pub mod lie;
pub mod linalg;
pub mod parse;
pub mod phi;
pub mod rat;
pub mod report;
pub mod sample;
pub mod series;
pub mod zhu;

pub use algebra::{AlgebraSpec, Kind, Monomial, Parity, Vector};
pub use engine::Engine;
pub use rat::Rat;
pub use report::{CheckResult, Report, Status};
pub use series::Series;
