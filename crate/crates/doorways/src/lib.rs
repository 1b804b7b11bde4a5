//! Exact decision procedures for the doorways problem.
//!
//! A *hallway* is a row of integer-aligned doorways: doorway `i` is the open
//! unit interval `(d_i, d_i + 1)` in the wall at `x = i`. The library decides,
//! with exact arithmetic throughout, whether a straight line can pass through
//! every doorway, and connects that geometry to the combinatorics of the
//! words read off from the door positions:
//!
//! - [`numeric`]: arbitrary-precision rationals and real quadratic
//!   irrationals `(a + b*sqrt(d))/r` with exact comparison and floor.
//! - [`hallway`]: finite hallways, their difference words, and finitely
//!   described infinite hallways (eventually periodic or rotation-generated).
//! - [`sight`]: intercept intervals, feasible polygons in `(slope, intercept)`
//!   space, rational witness lines, and nudged (`+eps`/`-eps`) lines of sight
//!   for infinite hallways.
//! - [`sturmian`]: rotation words, subword complexity, enumeration of the
//!   words of visible hallways, and the two partitions (intercept components
//!   and the parameter-square cell decomposition) that organise them.
//! - [`metrics`]: the truncation metric, the rational-visibility metric, the
//!   visibility function and its semicontinuity experiments, and metrics
//!   induced on slopes.
//!
//! Everything is deterministic and allocation-bounded at "desk scale"
//! (hallway lengths and denominators in the tens), which is the regime the
//! decision procedures are designed for.

pub mod hallway;
pub mod metrics;
pub mod numeric;
pub mod sight;
pub mod sturmian;
pub mod svg;

pub use hallway::{BinaryWord, Doorway, FiniteHallway, InfiniteHallwaySpec, Side, Word};
pub use metrics::{BaseMetric, Comm, MetricOutcome, MetricValue, UnframedHallway, VisibilityResult};
pub use numeric::{BigRational, ExactReal, QuadraticIrrational};
pub use sight::{
    Certificate, EpsilonSight, FeasiblePolygon, Interval, LineOfSight, Mode, Passage,
};
pub use sturmian::{PPartitionCell, RotationParams, Variant, YPartition};

/// Errors shared across the library.
///
/// Preconditions stated on individual functions (for example "the hallway is
/// nonempty") are enforced with panics, not errors; this enum covers the
/// failure modes a correct caller can still run into.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Exact comparison of two quadratic irrationals with different
    /// (squarefree) radicands is outside the supported fragment.
    #[error("cannot compare quadratic irrationals over sqrt({0}) and sqrt({1})")]
    UnsupportedComparison(u64, u64),
    /// The hallway admits no line of sight.
    #[error("hallway admits no line of sight")]
    NoLineOfSight,
    /// A factor length exceeded the word it is drawn from.
    #[error("factor length {len} exceeds word length {word_len}")]
    InvalidLength { len: usize, word_len: usize },
    /// An enumeration was requested beyond the configured bound.
    #[error("enumeration bound exceeded: n = {n} is larger than {bound}")]
    ResourceLimit { n: usize, bound: usize },
    /// A line meets the integer lattice at a wall, so the door sequence is
    /// ambiguous there.
    #[error("line meets the integer lattice at index {index}")]
    LatticeTouch { index: usize },
    /// The spec admits no line of sight, so the requested quantity (slope,
    /// intercept set) is undefined.
    #[error("spec admits no line of sight")]
    NotVisible,
    /// A caller-supplied line fails the precondition of the operation.
    #[error("line is not a line of sight for the spec")]
    PreconditionViolated,
    /// Text input did not match the expected grammar.
    #[error("parse error: {0}")]
    Parse(String),
}
