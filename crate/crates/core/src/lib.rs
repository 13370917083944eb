//! Exact computations around rank-2 Nichols algebras of diagonal type and
//! the conformal field theory data attached to them.
//!
//! The library covers five layers:
//!
//! * [`exact`] — arbitrary-precision rationals, rational angles (roots of
//!   unity in Q/Z), cyclotomic fields, fraction-free linear algebra;
//! * [`braiding`] — diagonal braiding matrices, generalized Cartan matrix
//!   inference, Weyl-groupoid reflections and orbits;
//! * [`charge`] — screening-momentum Gram matrices, the dimension-one
//!   system for the energy-momentum tensor, Virasoro central charges and
//!   their invariance under reflections;
//! * [`catalog`] — the rank-2 list of finite-dimensional diagonal Nichols
//!   algebras (Heckenberger's enumeration) with machine-checkable
//!   conditions, solution families, charge evaluators and presentations;
//! * [`nichols`] — graded dimensions via braided symmetrizers with a
//!   quantum-shuffle cross-check, and kernel membership for relations;
//! * [`freefield`] — an exact free-boson operator algebra: OPEs, screening
//!   residues, centralizers, W-algebra generators and the octuplet.
//!
//! All numbers are exact rationals or cyclotomic integers; no floats.

pub mod braiding;
pub mod catalog;
pub mod charge;
pub mod exact;
pub mod freefield;
pub mod nichols;
pub mod suite;

pub use exact::{Cyclotomic, ExactMatrix, Rational, RationalAngle};
