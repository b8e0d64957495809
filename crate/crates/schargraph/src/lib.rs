//! Combinatorial machinery for dual fat-vertex graph pairs on the sphere.
//!
//! The crate models pairs of spherical fat-vertex graphs that arise as the
//! two views of a common intersection pattern, and implements the analysis
//! toolkit built on top of them:
//!
//! * [`pair`], [`view`] — validated graph pairs, embedded side views,
//!   subgraphs with region (face containment) tracking;
//! * [`cycles`] — label cycles, Scharlemann cycles, webs, one-sign sets and
//!   disk descent, tree/cycle certificates;
//! * [`star`], [`corner`] — stars (dual-orientation templates on a model
//!   vertex), their derivatives and coherence sequences, corner quality;
//! * [`orient`] — dual orientations induced on label subgraphs: switch and
//!   negative edges, boundary indices, representing faces, face reversal,
//!   the rotation-free reduction, dual graphs and index witnesses;
//! * [`digraph`] — embedded directed graphs and the index census
//!   underlying the Euler identity;
//! * [`enumerate`] — deterministic enumeration of valid pairs and
//!   parity-breaking mutation soundness;
//! * [`harness`] — a batch verification harness that replays the lemma
//!   checks over enumerated and fixture instances;
//! * [`fixtures`] — built-in example instances;
//! * [`numbers`] — small numeric facts (bridge widths, web sizes).

pub mod combmap;
pub mod corner;
pub mod cycles;
pub mod digraph;
pub mod error;
pub mod enumerate;
pub mod fixtures;
pub mod numbers;
pub mod orient;
pub mod pair;
pub mod sign;
pub mod star;
pub mod view;

pub use error::{Error, Result, ValidationReport, Violation, ViolationCode};
pub use pair::{validate_pair, IntersectionPair, RawPair, Side, Slot};
pub use sign::{Dir, Sign};
