//! Exact Poincaré series of curve and divisorial valuations on ℚ[[x, y]].
//!
//! Branches are given by parametrizations with coefficients in a number field. The crate
//! resolves them while tracking the field generated by the blow-up centers, computes the
//! numerical data of the quotient dual graph, assembles the semigroup, classical and
//! divisorial Poincaré series as binomial products, and checks them against a brute-force
//! linear-algebra oracle.

pub mod analysis;
pub mod exactfield;
pub mod linalg;
pub mod oracle;
pub mod poincare;
pub mod resolution;
pub mod scalar;
pub mod series;

pub use exactfield::{AlgNum, AmbientField, FieldError, Subfield};
pub use resolution::{BranchParam, Coef, PlaneParam, ResolutionError};
pub use scalar::{RatFun, Scalar};
pub use series::{Order, TauSeries};
