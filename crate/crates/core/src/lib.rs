//! Exact combinatorics and representation bookkeeping for spin blocks of the
//! double covers `S̃_n^η` and `Ã_n` at an odd prime `p`.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: ordinary and bar partitions, p-cores, p-quotients,
//!   p-core towers, p-bar-cores and p-bar-quotients.
//! * [`signs`]: Legendre symbols and the signed integers `N_λ^η`, `M_λ^η`
//!   together with every sign derived from them.
//! * [`cyclotomic`]: exact arithmetic in `ℚ(ζ_N)`, the Frobenius-type
//!   automorphism `ζ ↦ ζ^p`, Gauss sums and exact matrices.
//! * [`humphreys`]: descriptor calculus for Humphreys products.
//! * [`local_reps`]: explicit Pauli-matrix representations of
//!   `T̃^{*e}·S̃_e^{η'}` and brute-force checks of their presentations.
//! * [`weights`]: radical subgroup shapes, defect-zero slots and weight labels.
//! * [`bijection`]: Brauer character labels, the explicit label bijection and
//!   the per-block equivariance verification.
//! * [`report`]: the deterministic JSON report document.

pub mod bijection;
pub mod cyclotomic;
pub mod error;
pub mod humphreys;
pub mod local_reps;
pub mod partitions;
pub mod report;
pub mod signs;
pub mod weights;

pub use error::{Error, Result};
pub use partitions::{Associatedness, BarPartition, OddPrime, Partition};
pub use signs::{Sign, SpinContext};
