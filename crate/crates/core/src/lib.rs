//! Exact computer algebra for representation-theoretic obstructions to
//! pre-Lie structures on Lie algebras.
//!
//! Everything here is exact: arithmetic is over arbitrary-precision rationals
//! ([`exactmath::Rat`]), word-sized prime fields ([`exactmath::FpScalar`]),
//! and sparse multivariate polynomials over either ([`exactmath::Poly`]).
//! There are no floating-point numbers anywhere in the crate.
//!
//! The layers, bottom to top:
//!
//! * [`exactmath`] — scalars and polynomials.
//! * [`symlinalg`] — dense matrices, fraction-free (Bareiss) elimination,
//!   kernels, and probabilistic rank certification by random prime-field
//!   specialization (Schwartz–Zippel).
//! * [`catalog`] — Weyl dimension formulas for the classical families, the
//!   enumeration of *small* simple modules (dimension below `dim g`), and
//!   exhaustive feasibility search for module-dimension decompositions.
//! * [`repbuild`] — concrete matrix realizations: `sl(n)`, `so(2n+1)` in its
//!   block form, the 14 generators of `g2` inside `gl(7)`, the derivation
//!   action on `Λ³(Q⁶)`, and matrix modules `M_{d,r}` with symbolic points.
//! * [`verygood`] — the evaluation map `Υ_m : g → M`, `x ↦ x·m`, of a pointed
//!   module `(M, m)`, and the obstruction verdicts built on its rank.
//! * [`prelie`] — pre-Lie tables, PBW straightening in `U(g)`, the
//!   correspondence between pre-Lie products and left ideals of `U(g)`, and
//!   the Oudom–Guin extension of a pre-Lie product to `S(g)`.
//! * [`dendriform`] — word Hopf algebras, the splitting of an associative
//!   product into `≺` / `≻`, dendriform axiom checking, and brace products.
//! * [`verify`] — a registry of named, independently runnable claim checks;
//!   the CLI's `verify-paper` runs the whole registry.

pub mod catalog;
pub mod dendriform;
pub mod exactmath;
pub mod prelie;
pub mod repbuild;
pub mod symlinalg;
pub mod verify;
pub mod verygood;
