//! Entanglement detection for bipartite density matrices using inequalities
//! built from SU(n) generators.
//!
//! For a state `rho` on `M x N` and levels `j < k`, three observables
//! `Y1, Y2, Y3` are assembled from generalized Gell-Mann matrices, and every
//! separable state satisfies
//!
//! ```text
//! Y3^2 >= Y1^2 + Y2^2,   Y_i = Tr(rho (U (x) V) Y_i (U (x) V)^dag)
//! ```
//!
//! for all local unitaries `U`, `V`. A positive violation
//! `f = Y1^2 + Y2^2 - Y3^2` certifies entanglement. The [`search`] module
//! maximizes `f` over `U`, `V`; [`witness::ppt_check`] provides an
//! independent partial-transpose cross-check.
//!
//! ```
//! use ggm_entangle::{search, states, witness};
//!
//! let rho = states::werner(0.5).unwrap();
//! let report = search::evaluate_identity(&rho, None, witness::DEFAULT_TOL).unwrap();
//! assert_eq!(report.verdict, witness::Verdict::EntangledCertified);
//! assert!((report.best_f - 0.1875).abs() < 1e-12);
//! ```

pub mod cli;
pub mod error;
pub mod ggm;
pub mod io;
pub mod linalg;
pub mod rng;
pub mod search;
pub mod states;
pub mod witness;

pub use error::{Error, Result};
pub use ggm::GellMannBasis;
pub use linalg::{BipartiteShape, ComplexMatrix};
pub use search::{maximize_violation, DetectionReport, SearchConfig};
pub use states::DensityMatrix;
pub use witness::{LevelPair, LocalUnitaryPair, Verdict, WitnessTriple, YValues};
