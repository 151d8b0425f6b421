//! Singularity invariants of weighted-homogeneous maps from irreducible
//! monomial curves to the plane.
//!
//! A source curve `(X,0)` is given by its weights `(w1, ..., wn)`, a map
//! `f: (X,0) -> (C^2,0)` by the weighted degrees `(l1, l2)` of its
//! components. From these the crate computes the delta invariant of `f`, the
//! image Milnor number, the A_e-codimensions of `f` and of the pair `(X, f)`,
//! and the auxiliary quotient dimensions through which they are derived.
//!
//! Two independent routes are provided:
//!
//! * [`invariants`]: closed formulas in the exponent data;
//! * [`oracle`]: brute-force counts of monomial exponents outside a
//!   submodule, built on [`ExponentSet`] algebra.
//!
//! [`oracle::cross_check`] compares them, and [`sweep`] runs that comparison
//! over every map within given bounds.
//!
//! ```
//! use monocurve_core::{full_report, ConsistentPlaneMap, MonomialCurve};
//!
//! let cusp = MonomialCurve::new(&[3, 2]).unwrap();
//! let f = ConsistentPlaneMap::new(cusp, 3, 4).unwrap();
//! let report = full_report(&f).unwrap();
//! assert_eq!((report.mu_i, report.ae_codim_pair, report.delta_f), (4, 4, 2));
//! ```

pub mod exponent_set;
pub mod invariants;
pub mod model;
pub mod oracle;
pub mod semigroup;
pub mod sweep;

pub use exponent_set::{count_complement, Count, ExponentSet, Kind};
pub use invariants::{full_report, Decomposition, InvariantError, InvariantReport};
pub use model::{
    milnor_from_equation_degrees, ConsistentPlaneMap, ImageCurve, ModelError, MonomialCurve,
};
pub use oracle::{cross_check, CheckReport, IdentityCheck, Oracle, OracleError, ShiftedCover};
pub use semigroup::{is_ci_presentable, NumericalSemigroup, SemigroupError};
pub use sweep::{SweepConfig, SweepError, SweepFailure, SweepOutcome, SweepRecord, SweepSummary};
