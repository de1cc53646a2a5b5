//! Exact computations with partial representations of finite-dimensional
//! Hopf algebras: structure constants over `Q` and `F_p`, coradical
//! filtrations, the partial Hopf algebra `H_par` and its base algebra
//! `A_par` (by truncated rewriting and by groupoid models), twist maps and
//! smash products.

pub mod catalog;
pub mod coradical;
pub mod error;
pub mod field;
pub mod format;
pub mod group;
pub mod hopf;
pub mod hpar;
pub mod linalg;
pub mod partial;
pub mod report;
pub mod smash;
pub mod suites;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use group::Group;
pub use hopf::{AlgebraData, CoalgebraData, HopfData, MorphismData, MorphismKind};
pub use linalg::{Matrix, Subspace, Vector};
pub use report::{CheckStatus, Report};
