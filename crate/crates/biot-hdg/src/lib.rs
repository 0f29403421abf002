//! H(div)-conforming hybridized DG / hybrid mixed finite elements for the
//! quasi-static Biot consolidation model on 2D triangular meshes.
//!
//! The three-field formulation (displacement `u`, seepage velocity `w`, pore
//! pressure `p`) is discretized with BDM elements for `u`, broken
//! Raviart-Thomas elements for `w` and discontinuous polynomials for `p`.
//! Tangential continuity of the displacement is imposed weakly through facet
//! unknowns (HDG), normal continuity of the velocity through a facet Lagrange
//! multiplier (hybrid mixed). Both element fields are eliminated per element
//! (static condensation), leaving a symmetric indefinite saddle system in the
//! displacement and pressure-multiplier unknowns which is solved by MinRes
//! with parameter-robust block-diagonal preconditioners.
//!
//! The crate is organised along the pipeline:
//!
//! * [`mesh`] — structured unit-square triangulations, uniform refinement,
//!   oriented facet connectivity;
//! * [`quadrature`] — triangle and edge rules exact to a requested degree;
//! * [`elements`] — reference bases (BDM, RT, polynomial, facet spaces) built
//!   from dual functionals, plus Piola pushforwards;
//! * [`spaces`] — global dof maps, conformity and boundary constraints;
//! * [`forms`] — assembly of every bilinear form and load vector;
//! * [`condense`] — element-local elimination of velocity and pressure and
//!   exact recovery of the eliminated fields;
//! * [`solver`] — preconditioned MinRes, block preconditioners, sparse and
//!   dense direct paths, zero-mean pressure handling;
//! * [`biot`] — parameter scaling, manufactured solutions, error norms,
//!   implicit Euler time stepping;
//! * [`experiments`] — drivers for convergence, robustness, cost accounting
//!   and the mixed vs hybrid mixed cross-check, emitting CSV files.
//!
//! See the crate `examples/` directory for one runnable program per driver.

pub mod biot;
pub mod condense;
pub mod elements;
pub mod error;
pub mod experiments;
pub mod forms;
pub mod linalg;
pub mod mesh;
pub mod quadrature;
pub mod solver;
pub mod spaces;

pub use error::{Error, Result};
