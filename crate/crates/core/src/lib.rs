//! Census and construction of algebraic integer points: pairs of real
//! conjugate roots of monic irreducible integer polynomials, counted in
//! rectangles and in shrinking neighbourhoods of plane curves.

pub mod constructor;
pub mod enumeration;
pub mod error;
pub mod harness;
pub mod intpoly;
pub mod primes;
pub mod rational;
pub mod realroots;
pub mod region;
pub mod special;

pub use error::{Error, Result};
pub use intpoly::IntPolynomial;
pub use rational::Rational;
pub use realroots::{AlgebraicIntegerPoint, RootInterval};
pub use region::{Rectangle, Region};
