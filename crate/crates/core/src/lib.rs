//! Exact equivariant cohomology on Grassmannians and homological bookkeeping
//! for the projective duality between Gr(2,n) and Pfaffian varieties.
//!
//! The computational core is the Borel-Bott-Weil reduction ([`weights`]),
//! extended by the GL(n) representation ring ([`schur`]) to cohomology and Ext
//! groups of formal complexes of Schur bundles ([`cohom`]), pushforwards along
//! the projective bundle resolving Pf(4,n) ([`pushforward`]), exact Hilbert
//! polynomials ([`hilbert`]), and Lefschetz/linear-section bookkeeping
//! ([`hpd`]).  Everything is exact: weights are machine integers, while every
//! quantity that can grow (multiplicities, dimensions, Euler characteristics,
//! polynomial coefficients) is arbitrary precision.
//!
//! All values are immutable and all operations are pure, so the verification
//! sweeps in [`verify`] fan out across claims; with the default `parallel`
//! feature they run on rayon, without it they run sequentially.

pub mod bundles;
pub mod cohom;
pub mod hilbert;
pub mod hpd;
pub mod models;
pub(crate) mod par;
pub mod poly;
pub mod pushforward;
pub mod schur;
pub mod verify;
pub mod weights;

use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("sequence {0:?} is not nonincreasing")]
    NotDominant(Vec<i64>),
    #[error("invalid Grassmannian Gr({k},{n})")]
    BadGrassmannian { k: usize, n: usize },
    #[error("objects live on different spaces")]
    SpaceMismatch,
    #[error("operation requires a plain Grassmannian object, found an H_Y twist")]
    UnexpectedFiberTwist,
    #[error("H_Y twists only make sense on the resolution total space")]
    FiberTwistOnGrassmannian,
    #[error("ambient rank {0} unsupported; the resolution requires rank >= 6")]
    BadResolutionRank(usize),
    #[error("ambient rank {0} unsupported; this operation needs n = 6 or 7")]
    UnsupportedAmbient(usize),
    #[error("unknown Lefschetz model `{0}`")]
    UnknownModel(String),
    #[error("Lefschetz blocks must be prefix-nested")]
    BlocksNotNested,
    #[error("degenerate Lefschetz model: all blocks empty")]
    DegenerateModel,
    #[error("section parameter r = {r} out of range 1..={max}")]
    SectionOutOfRange { r: usize, max: usize },
    #[error("unknown object label `{0}`")]
    UnknownLabel(String),
    #[error("invalid weight literal `{0}`")]
    BadWeightLiteral(String),
    #[error("projectivization convention self-test failed")]
    ConventionCheckFailed,
}

pub use bundles::{EquivariantObject, Grassmannian, SchurBundle, Space, Term};
pub use cohom::{ExtAnswer, GradedRep, SerreOutcome};
pub use schur::VirtualRep;
pub use weights::{bbw_reduce, rho, BbwOutcome, DominantWeight, Weight};
