//! Degree invariants of simple knots in lens spaces, and exhaustive checks of
//! which simple knots admit integer surgeries to `S³`.
//!
//! A simple knot is described by a triple `(p, q, k)`: the lens space
//! `L(p, q)` and a homology class `k ∈ Z/p`. The crate computes
//!
//! * [`v_pair`], the signed counting map on `Z/p`,
//! * [`big_g`] / [`gbar`], the degree of the (rescaled) Alexander polynomial
//!   and its companion `Ḡ`, and the genus-minimizing test `Ḡ < 2p`,
//! * the parameters of a primitive `q` modulo `k²` ([`derive_params`]) and the
//!   run structure of `Q` ([`z_decompose`], [`mobile_report`]),
//! * closed-form classifications ([`gm_q_set`], [`match_families`]) and a
//!   sweep harness comparing them against brute force ([`harness::run`]).
//!
//! ```
//! use lensgenus::{gbar, GbarMode, Triple};
//!
//! let t = Triple::new(25, 6, 5).unwrap();
//! assert_eq!(gbar(&t, GbarMode::Fast).gbar, 40);
//! ```

pub mod classify;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod modmath;
pub mod params;
pub mod structure;

pub use classify::{
    bridge_triples, conjecture_check, gm_q_set, match_families, reduce_p, surgery_triple,
    ConjectureCheck, Family, FamilyMatch, FamilyReport, ReducedTriple,
};
pub use error::{Error, Result};
pub use invariants::{
    big_g, f_profile, gbar, genus, is_genus_minimizing, max_q_abs_v, v_pair, FProfile, GbarMode,
    GbarResult, Triple, VMap,
};
pub use modmath::{gcd, inv, rep, sigma, Residue, Sign};
pub use params::{derive_params, ParamSet, QType};
pub use structure::{
    consecutive_v_check, mobile_report, structure_diagnostics, theta, xi_sum, z_decompose,
    ConsecutiveCheck, MobileReport, StructureDiagnostics, ZDecomposition,
};
