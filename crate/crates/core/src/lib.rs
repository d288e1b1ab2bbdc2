//! Computational number theory: prime sieves, prime counting, integer
//! factorization, the Smarandache function η, divisor and totient
//! functions, primality criteria, congruence identities, Diophantine
//! solvers and an exhaustive search harness for η-equations.

pub mod arithfun;
pub mod congruence;
pub mod counting;
pub mod dioph_linear;
pub mod dioph_quad;
pub mod eta;
pub mod error;
pub mod factorint;
pub mod primality;
pub mod search;
pub mod sieves;
pub mod tables;

pub use error::{Error, Result};
