//! Exact radical parametrization of plane algebraic curves.
//!
//! The library parametrizes an irreducible plane curve by radicals when one
//! of the implemented methods applies: small partial degree, a pencil of
//! lines through a point of multiplicity d-r (1 <= r <= 4), or pencils of
//! adjoint curves for genus at most 4. Outputs are closed-form expression
//! towers over Q(t) together with a high-precision numeric verification
//! harness, and lift to offsets and conchoids.

pub mod error;
pub mod rational;
pub mod unipoly;
pub mod multipoly;
pub mod textio;
pub mod gcd;
pub mod resultant;
pub mod factor;
pub mod ratfunc;
pub mod residue;
pub mod linalg;
pub mod numeric;
pub mod expr;
pub mod solve;
pub mod curve;
pub mod direct;
pub mod adjoint;
pub mod d5;
pub mod geom;
pub mod verify;

pub use error::{Error, Result};
pub use expr::{Expr, RadicalParametrization, SquareParametrization};
pub use multipoly::{MultiPoly, Var};
pub use rational::Rational;
pub use ratfunc::RationalFunction;
pub use unipoly::{UniPoly, UniPolyQ};
