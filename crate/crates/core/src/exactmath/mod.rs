//! Exact scalar arithmetic: arbitrary-precision rationals, word-sized prime
//! fields, and sparse multivariate polynomials over either.
//!
//! All scalar types implement [`RingElem`]; the invertible ones additionally
//! implement [`FieldElem`]. Generic code (matrix elimination, polynomial
//! coefficients) is written against these traits so the same algorithms run
//! over `Q`, `F_p`, `Q[x]`, and `F_p[x]`.

mod fp;
mod poly;
mod rat;

pub use fp::{is_prime_u64, prime_for_seed, FpScalar, PRIMES};
pub use poly::{fp_reduce, Monomial, Poly, PolyFp, PolyQ};
pub use rat::Rat;

use thiserror::Error;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// Two polynomials (or a polynomial and an evaluation point) disagree on
    /// the number of variables.
    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    /// A rational coefficient has a denominator divisible by the prime, so it
    /// has no image in `F_p`.
    #[error("prime {prime} divides the denominator of {value}; no image in F_p")]
    BadPrime { prime: u64, value: String },

    /// Division by zero in a field, or inversion of zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Exact division failed in an integral domain: the quotient does not
    /// exist as an element of the domain.
    #[error("exact division failed: {detail}")]
    NotDivisible { detail: String },

    /// A scalar string failed to parse.
    #[error("cannot parse {kind} from {input:?}: {detail}")]
    Parse {
        kind: &'static str,
        input: String,
        detail: String,
    },
}

/// Element-level operations of a commutative ring with exact division.
///
/// The trait is element-based rather than ring-object-based: contextual data
/// (a prime modulus, a polynomial arity) travels inside each element, and the
/// `*_like` constructors derive new constants from an existing element of the
/// same ring. Mixing elements of *different* rings of the same Rust type
/// (different moduli, different arities) is a programming error; operations
/// panic or return an error as documented on each implementation.
pub trait RingElem: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    /// The zero of the ring this element belongs to.
    fn zero_like(&self) -> Self;
    /// The one of the ring this element belongs to.
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Exact division in an integral domain: returns `q` with `q * rhs == self`,
    /// or an error when no such element exists. Used by fraction-free
    /// elimination, where every division is exact by construction.
    fn exact_div(&self, rhs: &Self) -> Result<Self, ArithError>;
}

/// A [`RingElem`] whose nonzero elements are invertible.
pub trait FieldElem: RingElem {
    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn invert(&self) -> Result<Self, ArithError>;
}
