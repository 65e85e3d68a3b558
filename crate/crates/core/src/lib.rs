//! Binomial ideals of corner-interval 2-minors: combinatorics of the interval
//! graph, Gröbner bases over the rationals, minimal primes, contingency-table
//! fibers, Hilbert series and graded Betti numbers.

pub mod betti;
pub mod combinatorics;
pub mod config;
pub mod error;
pub mod fibers;
pub mod grading;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod primes;
pub mod verify;

pub use config::Caps;
pub use error::{Error, Result};
pub use poly::{coeff, Cell, Coeff, Monomial, OrderKind, Polynomial, Ring, TermOrder};
