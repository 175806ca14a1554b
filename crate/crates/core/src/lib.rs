//! Certified bounds on the level of perfect complexes over graded quotients
//! of polynomial rings over a prime field.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: exact polynomial arithmetic over `F_p` under degrevlex.
//! * [`gb`], [`ideal`], [`monomial_ideal`]: Gröbner bases and ideal calculus.
//! * [`module`]: graded modules over `R = P/J`, syzygies, torsion, free rank.
//! * [`complex`]: finite free complexes, Koszul and Hom complexes, homology.
//! * [`invariants`]: dimension, depth, embedding dimension, Lech-independence.
//! * [`level`]: certified lower and upper bounds on levels.

pub mod complex;
pub mod error;
pub mod gb;
pub mod ideal;
pub mod invariants;
pub mod level;
pub mod linalg;
pub mod module;
pub mod monomial_ideal;
pub mod poly;

pub use error::{AlgebraError, Result};
pub use ideal::IdealData;
pub use poly::{Monomial, Poly, PolyRing};
