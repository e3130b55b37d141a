//! SU(1,1) coherent states of the two-particle Calogero-Sutherland model.
//!
//! Three families are built in a truncated Fock basis `|n, λ⟩`:
//!
//! - Barut-Girardello coherent states (BGCS), eigenstates of `J₋`;
//! - nonlinear Barut-Girardello coherent states (NBGCS), produced by the
//!   `m`-deformed Barut-Girardello displacement acting on the vacuum;
//! - photon-added Barut-Girardello coherent states (PABGCS), the `m`-fold
//!   raised NBGCS with Fock support starting at `n = m`.
//!
//! Every statistical quantity is available twice: as a direct sum over Fock
//! coefficients (the ground truth) and as a ratio of generalized
//! hypergeometric series. The crate also checks the structural identities of
//! the construction: commutators, shift identities, eigen-relations, moment
//! identities behind the resolution of unity, temporal stability and the
//! orthonormality of the position-space basis.
//!
//! ```
//! use su11_coherent::observables::{cross_check, expectation_suite};
//! use su11_coherent::states::build;
//! use su11_coherent::{Complex64, Family, IrrepParams, StateSpec, TruncationPolicy};
//!
//! let spec = StateSpec::new(Family::Pabgcs, Complex64::new(1.0, 0.5), 2, IrrepParams::new(0.5)?)?;
//! let state = build(&spec, &TruncationPolicy::default())?;
//! let report = expectation_suite(&state)?;
//! assert!(report.mandel_q < 0.0);
//! assert!(cross_check(&spec, &TruncationPolicy::default())?.max_rel_dev() < 1e-9);
//! # Ok::<(), su11_coherent::Error>(())
//! ```

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod cli;
pub mod error;
pub mod measures;
pub mod nonlinear;
pub mod observables;
pub mod position;
pub mod special;
pub mod states;

pub use algebra::{FockVector, IrrepParams, TruncationPolicy};
pub use error::{Error, Result};
pub use observables::ObservableReport;
pub use states::{Family, StateSpec};

pub use num_complex::Complex64;
