//! Exact computational kernel for classical and quantum family algebras.
//!
//! The crate implements, over arbitrary-precision rationals:
//!
//! - sparse multivariate polynomials (the symmetric algebra S(g)) and the
//!   one-parameter enveloping algebra U_t(g) in PBW normal form;
//! - Lie algebras by structure constants, representations by matrices,
//!   Killing form, Casimir element, and exact base change;
//! - the Poisson bracket on S(g), the PBW star product and its deformation
//!   expansion, and the closed second-order forms;
//! - matrix-valued polynomial algebras `End(V) (x) S(g)`, the classical and
//!   quantum invariance criteria, invariant bases by degree, the
//!   noncommutative Poisson bracket, `nabla`, `nabla'`, and the first Chern
//!   class;
//! - an evaluable Hochschild cochain calculus (differential, circle
//!   product, Gerstenhaber bracket) and named identity suites that verify
//!   the deformation identities exactly on spanning sets.
//!
//! Every check is exact: a suite passes only when each residual is the zero
//! polynomial.

pub mod cochain;
pub mod error;
pub mod expr;
pub mod family;
pub mod lie;
pub mod linalg;
pub mod matpoly;
pub mod poisson;
pub mod poly;
pub mod rat;
pub mod rep;
pub mod star;
pub mod suites;
pub mod tpoly;
pub mod ue;

pub use error::KernelError;
pub use family::Family;
pub use lie::{abelian, affine2, heisenberg3, sl2, LieAlgebra, ValidityReport};
pub use linalg::QMatrix;
pub use matpoly::{MatPoly, MatUE};
pub use poly::{Mono, SymPoly};
pub use rat::Rat;
pub use rep::Representation;
pub use star::{StarCache, StarExpansion};
pub use tpoly::TPoly;
pub use ue::UEElement;
