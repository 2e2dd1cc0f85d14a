//! Exact involutivity calculus for exterior differential systems.
//!
//! Everything here computes over the rationals, exactly.  The crate is
//! organized bottom-up:
//!
//! * [`rat`], [`linalg`] — arbitrary-precision rationals and dense exact
//!   linear algebra (rank, kernel, subspace operations).
//! * [`expr`] — a small symbolic expression engine: rational functions in
//!   declared parameters, free derivatives, and opaque unary function
//!   symbols with optional derivative rules.
//! * [`form`], [`structure`] — exterior algebra on a coframe and the
//!   structure-equation exterior derivative (`d` rewritten through
//!   `dω = -½C ω∧ω`, `da = F ω`, `db = G ω + β`).
//! * [`tableau`] — q-form tableaux, flag characters, prolongation, and
//!   Cartan's test with generic-flag search.
//! * [`point`] — constant-coefficient exterior ideals at a point: integral
//!   elements, polar spaces, Cartan's bound, and the ordinary test.
//! * [`analysis`] — the decision procedures for coframing existence
//!   theorems: torsion residuals, tableaux of free derivatives, the Jacobi
//!   map and Jacobi-manifold test, structure-equation prolongation, and
//!   invariant counting.
//! * [`hstruct`] — torsion-free H-structure analysis from a Lie subalgebra:
//!   the curvature kernels K₀ and K₁, first prolongation of 𝔥, and the
//!   generated structure system.
//! * [`dsl`] — the text format used by the CLI and the bundled corpus.

pub mod analysis;
pub mod dsl;
pub mod error;
pub mod expr;
pub mod form;
pub mod hstruct;
pub mod linalg;
pub mod point;
pub mod rat;
pub mod structure;
pub mod tableau;

pub use error::Error;
pub use expr::{Expr, ExprContext, SamplePoint};
pub use form::{Form, Frame};
pub use linalg::{AffineSolution, Matrix, Rref, Subspace};
pub use point::{FlagReport, IntegralElement, OrdinaryVerdict, PointIdeal};
pub use rat::Rat;
pub use structure::{Mode, StructureSystem};
pub use tableau::{CharacterSeq, Flag, FormTableau, InvolutivityReport};
