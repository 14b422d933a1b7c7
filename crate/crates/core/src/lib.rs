//! Exact computational tools for the split exceptional Lie algebras of
//! types E6 and E7: root systems, Chevalley structure constants, parabolic
//! decompositions, the Heisenberg tower, and the rank-two structures on the
//! two-step nilradical, together with a deterministic verification report.

pub mod chevalley;
pub mod error;
pub mod linalg;
pub mod parabolic;
pub mod report;
pub mod rootsys;
pub mod structures;
pub mod verify;

pub use chevalley::{kernel_dim, ActionMatrix, AlgElement, ChevalleyAlgebra, JacobiStats};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational};
pub use parabolic::{HeisenbergTower, ParabolicDecomposition, ParabolicName};
pub use report::{Check, CheckStatus, Value, VerificationReport};
pub use rootsys::{DynkinType, Root, RootSystem, RootSystemType, Subsystem};
pub use structures::golden::GoldenTables;
pub use structures::Structures;
pub use verify::{verify_all, Mode};
