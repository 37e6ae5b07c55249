//! Exact computation of (3,3)-isogenous genus-2 curves in characteristic 3,
//! together with a verification suite for the Burkhardt/Coble identities and
//! an arbitrary-precision complex realization of the same secant pipeline.
//!
//! The construction: embed the six Weierstrass x-coordinates and the four
//! 3-torsion secant pairs of an ordinary curve on the degree-6 rational
//! normal curve in P^6, take the hyperplane through the six points, meet it
//! with the four secants, project from the plane those meets span, and read
//! the new curve off the conic through the six projected points.

pub mod conic;
pub mod curves;
pub mod error;
pub mod field;
pub mod geom;
pub mod linalg;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, Polynomial};
