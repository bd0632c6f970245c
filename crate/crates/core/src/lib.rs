//! Ulam-distance statistics: longest increasing subsequences, the
//! Robinson–Schensted correspondence, and exhaustive checks of
//! log-concavity for the LIS distribution and its subclasses.
//!
//! The triangles `u(n, k)` (permutations of `S_n` with LIS `k`) and their
//! relatives are computed by enumeration in [`census`]. The combinatorial
//! injections that prove log-concavity for hooks, protected tableaux and
//! two-row tableaux live in [`injections`] and [`paths`].

pub mod census;
pub mod error;
pub mod injections;
pub mod par;
pub mod paths;
pub mod perm;
pub mod tableaux;

pub use census::{
    check_log_concavity, enumerate, sequence, verify_conjecture, Budget, ClassLabel, ClassSequence,
    CountMethod, LogConcavityReport, Member,
};
pub use error::{Error, Result};
pub use injections::{hook_inject, lift, protected_inject};
pub use par::Execution;
pub use paths::{flip_inject, flip_preimage, LatticePath, Step};
pub use perm::{ulam_distance, Permutation};
pub use tableaux::{rsk, rsk_inverse, HookType, ProtectedDecomposition, Shape, Tableau};
