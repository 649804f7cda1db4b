//! Annihilators and attached primes of top local cohomology modules
//! `H_a^{dim M}(M)` for `M = R/I` over a polynomial ring, with `a` and `I`
//! monomial ideals.
//!
//! Layers, bottom up:
//! - [`monomial`]: monomials and monomial ideal arithmetic.
//! - [`decomposition`]: irreducible/primary decomposition, associated primes, dimension.
//! - [`homology`]: Stanley–Reisner complexes and reduced homology over `QQ` or `GF(p)`.
//! - [`cohdim`]: cohomological dimension via Hochster's formula, plus a Čech oracle.
//! - [`theorems`]: `T(a, M)`, `Ann H_a^{dim M}(M)` and attached-prime sets.
//! - [`cli_io`]: parsing, JSON requests/reports and the randomized verifier.

pub mod cli_io;
pub mod cohdim;
pub mod decomposition;
pub mod error;
pub mod field;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod ring;
pub mod theorems;
pub mod varset;

pub use cohdim::CdValue;
pub use decomposition::{Decomposition, MonomialPrime, PrimaryComponent};
pub use error::{Error, Result};
pub use field::Field;
pub use monomial::{Monomial, MonomialIdeal};
pub use ring::RingSpec;
pub use varset::VarSet;
