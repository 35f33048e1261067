//! Exact-arithmetic kernel for down-up algebras `A(alpha, beta, gamma)`.
//!
//! The algebra has two generators `d`, `u` and defining relations
//!
//! ```text
//! d*d*u = alpha*d*u*d + beta*u*d*d + gamma*d
//! d*u*u = alpha*u*d*u + beta*u*u*d + gamma*u
//! ```
//!
//! Everything here is computed exactly over the rationals or a quadratic
//! extension `Q(sqrt(D))`; no floating point is used anywhere.
//!
//! Modules:
//!
//! * [`scalar`] — exact field arithmetic, square roots, roots of unity.
//! * [`pbw`] — words in `{d,u}`, rewriting to the `u^i (du)^j d^k` basis,
//!   products, grading, filtration counts, the antiautomorphism `eta`,
//!   and centrality tests.
//! * [`expr`] — text grammar for elements and scalars.
//! * [`weights`] — the weight recurrences and their closed forms, the
//!   weight maps `delta`/`mu` and their orbits, the weight-coincidence
//!   classifier, linkage, and parameter conversions.
//! * [`matrix`] — small dense matrices over [`scalar::Scalar`].
//! * [`repmod`] — truncated matrix models of the module families
//!   (highest weight, lowest weight, doubly infinite, weight orbit),
//!   relation checks, simplicity and submodule analysis, duals,
//!   central characters, and one-dimensional modules.
//! * [`poset`] — ranked posets, their down/up operators, relation
//!   verification, and exact parameter fitting.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod expr;
pub mod matrix;
pub mod pbw;
pub mod poset;
pub mod repmod;
pub mod scalar;
pub mod weights;

pub use pbw::{Algebra, Element, FreeElement, Monomial, Params, Word};
pub use scalar::{Rat, Scalar};
pub use weights::Weight;
