//! Metrics on infinite hallways and what visibility does under them.
//!
//! The *standard* metric is `1/k` where `k` is the first doorway index at
//! which two hallways disagree. The *rational* metric looks at the longest
//! common truncation instead: it is infinite when that truncation is
//! impassable, and otherwise `1/q` for the smallest denominator of a
//! rational slope that passes the truncation with doorways closed. The two
//! disagree about limits in an instructive way: the family built by
//! [`discontinuity_family`] converges to [`discontinuity_limit`] in the
//! standard metric while staying at rational distance 1, and visibility
//! drops from 1 to 0 exactly at that limit.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::hallway::{FiniteHallway, InfiniteHallwaySpec, Side, Word};
use crate::numeric::{rat, rat_i, BigRational, ExactReal};
use crate::sight::{
    admits_line_of_sight, epsilon_line_of_sight, feasible_polygon, intercept_interval,
    Certificate, Interval, LineOfSight, Mode,
};
use crate::sturmian::partition_y;
use crate::Error;

/// A distance that is zero, a unit fraction, or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MetricValue {
    Zero,
    Reciprocal(u64),
    Infinite,
}

impl MetricValue {
    /// The denominator, when the value is a unit fraction.
    pub fn denominator(&self) -> Option<u64> {
        match self {
            MetricValue::Reciprocal(q) => Some(*q),
            _ => None,
        }
    }
}

impl Ord for MetricValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use MetricValue::*;
        match (self, other) {
            (Zero, Zero) | (Infinite, Infinite) => Ordering::Equal,
            (Zero, _) | (_, Infinite) => Ordering::Less,
            (_, Zero) | (Infinite, _) => Ordering::Greater,
            // 1/q < 1/q' exactly when q > q'.
            (Reciprocal(q), Reciprocal(p)) => p.cmp(q),
        }
    }
}

impl PartialOrd for MetricValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MetricValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricValue::Zero => f.write_str("0"),
            MetricValue::Reciprocal(1) => f.write_str("1"),
            MetricValue::Reciprocal(q) => write!(f, "1/{q}"),
            MetricValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MetricValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// A metric value together with how far it is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MetricOutcome {
    pub value: MetricValue,
    pub certificate: Certificate,
}

impl MetricOutcome {
    fn full(value: MetricValue) -> Self {
        MetricOutcome { value, certificate: Certificate::Full }
    }
}

/// Index of the first doorway at which two hallways differ.
///
/// `None` with a full certificate means the hallways are equal; `None` with
/// a bounded certificate means no difference was found within the horizon
/// (possible only when at least one spec is rotation-generated with
/// irrational slope). For eventually periodic pairs a difference, if any,
/// shows up within one preperiod plus the period lcm, so the scan there is
/// complete.
fn first_difference(
    a: &InfiniteHallwaySpec,
    b: &InfiniteHallwaySpec,
    horizon: usize,
) -> (Option<usize>, Certificate) {
    let ca = a.canonical();
    let cb = b.canonical();
    if ca == cb {
        return (None, Certificate::Full);
    }
    let scan_to = match (&ca, &cb) {
        (
            InfiniteHallwaySpec::EventuallyPeriodic { pre: pa, period: ma },
            InfiniteHallwaySpec::EventuallyPeriodic { pre: pb, period: mb },
        ) => Some(pa.len().max(pb.len()) + ma.len().lcm(&mb.len())),
        _ => None,
    };
    let limit = scan_to.unwrap_or(horizon);
    let (mut da, mut db) = (0i64, 0i64);
    for i in 1..=limit {
        da += ca.letter(i - 1);
        db += cb.letter(i - 1);
        if da != db {
            return (Some(i), Certificate::Full);
        }
    }
    match scan_to {
        Some(_) => unreachable!("distinct canonical forms differ within the period bound"),
        None => (None, Certificate::Bounded { horizon }),
    }
}

/// The standard metric: `1/k` at the first differing doorway index, zero
/// for equal hallways.
pub fn d_standard(
    a: &InfiniteHallwaySpec,
    b: &InfiniteHallwaySpec,
    horizon: usize,
) -> MetricOutcome {
    match first_difference(a, b, horizon) {
        (Some(k), _) => MetricOutcome::full(MetricValue::Reciprocal(k as u64)),
        (None, certificate) => MetricOutcome { value: MetricValue::Zero, certificate },
    }
}

/// The longest common start of two hallways: a finite truncation when they
/// differ, the whole spec when they do not.
#[derive(Debug, Clone, PartialEq)]
pub enum Comm {
    Whole(InfiniteHallwaySpec),
    Prefix(FiniteHallway),
}

pub fn comm(
    a: &InfiniteHallwaySpec,
    b: &InfiniteHallwaySpec,
    horizon: usize,
) -> (Comm, Certificate) {
    match first_difference(a, b, horizon) {
        // Doorway 0 is always shared (both normalized to zero), so the
        // common part runs through index k - 1.
        (Some(k), certificate) => (Comm::Prefix(a.truncate(k - 1)), certificate),
        (None, certificate) => (Comm::Whole(a.clone()), certificate),
    }
}

/// A finite hallway with its doorways closed.
#[derive(Debug, Clone, PartialEq)]
pub struct UnframedHallway {
    hallway: FiniteHallway,
}

/// Closes the doorways of `h`: lines may touch the frames.
pub fn unframe(h: &FiniteHallway) -> UnframedHallway {
    UnframedHallway { hallway: h.clone() }
}

impl UnframedHallway {
    pub fn hallway(&self) -> &FiniteHallway {
        &self.hallway
    }

    pub fn admits_line_of_sight(&self) -> bool {
        crate::sight::admits_closed_line_of_sight(&self.hallway)
    }

    /// Intercepts whose line of slope `alpha` passes every closed doorway.
    pub fn intercept_interval(&self, alpha: &ExactReal) -> Interval {
        intercept_interval(&self.hallway, alpha, Mode::Closed)
    }

    /// The smallest lowest-terms denominator among rational slopes passing
    /// the closed hallway, `None` when even the closed hallway is blocked.
    ///
    /// Bounded by the word length: a nonempty closed region has a rational
    /// vertex whose slope denominator divides a difference of wall indices.
    pub fn minimal_sight_denominator(&self) -> Option<u64> {
        let h = &self.hallway;
        if h.len() == 1 {
            return Some(1);
        }
        let poly = feasible_polygon(h, Mode::Closed);
        if !poly.is_nonempty() {
            return None;
        }
        let (lo, hi) = poly.slope_range().expect("nonempty polygon has vertices");
        for q in 1..=h.n() as i64 {
            let qr = rat_i(q);
            let p_min: BigInt = (&lo * &qr).ceil().to_integer();
            let p_max: BigInt = (&hi * &qr).floor().to_integer();
            let mut p = p_min;
            while p <= p_max {
                if p.gcd(&BigInt::from(q)).is_one() {
                    let slope =
                        ExactReal::from_rational(BigRational::new(p.clone(), q.into()));
                    if !self.intercept_interval(&slope).is_empty() {
                        return Some(q as u64);
                    }
                }
                p += 1;
            }
        }
        unreachable!("a passable closed hallway has a slope with denominator <= n");
    }
}

/// The rational metric: zero for equal hallways, infinite when the common
/// truncation is impassable with open doorways, else `1/q` for the minimal
/// denominator of a rational slope passing the common truncation with
/// closed doorways.
///
/// The open gate and the closed denominator search genuinely differ; see
/// the module tests for a hallway where they part ways.
pub fn d_rational(
    a: &InfiniteHallwaySpec,
    b: &InfiniteHallwaySpec,
    horizon: usize,
) -> MetricOutcome {
    match comm(a, b, horizon) {
        (Comm::Whole(_), certificate) => MetricOutcome { value: MetricValue::Zero, certificate },
        (Comm::Prefix(h), _) => {
            if !admits_line_of_sight(&h) {
                return MetricOutcome::full(MetricValue::Infinite);
            }
            let q = unframe(&h)
                .minimal_sight_denominator()
                .expect("closed region contains the open one");
            MetricOutcome::full(MetricValue::Reciprocal(q))
        }
    }
}

/// Whether an infinite hallway lets an epsilon line through, with a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VisibilityResult {
    pub visible: bool,
    pub witness: Option<LineOfSight>,
    pub certified: Certificate,
}

/// Decides visibility of an infinite hallway.
///
/// Eventually periodic hallways are decided exactly: the only possible
/// slope is the period's average step `k/m`, and the closed intercepts over
/// one preperiod plus one period tell the whole story (positive width gives
/// an untouched line, zero width forces touches on both sides, empty means
/// blocked). Rotation-generated hallways are visible by construction, with
/// their own parameters as witness; the horizon is only used to re-check
/// the witness in debug builds.
pub fn visibility(s: &InfiniteHallwaySpec, horizon: usize) -> VisibilityResult {
    match s {
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
            let k: i64 = period.letters().iter().sum();
            let m = period.len();
            let slope = ExactReal::Rational(BigRational::new(k.into(), (m as i64).into()));
            let window = s.truncate(pre.len() + m);
            let d = intercept_interval(&window, &slope, Mode::Closed);
            if d.has_interior() {
                let intercept = d.midpoint().expect("nonempty interval");
                VisibilityResult {
                    visible: true,
                    witness: Some(LineOfSight { slope, intercept, side: None }),
                    certified: Certificate::Full,
                }
            } else {
                // Zero width pins the intercept to a value that touches some
                // doorway at the bottom and another at the top, so neither
                // nudge survives; empty is blocked outright.
                VisibilityResult { visible: false, witness: None, certified: Certificate::Full }
            }
        }
        InfiniteHallwaySpec::Rotation { alpha, beta, side } => {
            debug_assert!(
                epsilon_line_of_sight(s, alpha, beta, horizon.min(200))
                    .expect("rotation parameters are compatible")
                    .passage
                    .allows(*side),
                "rotation door sequences admit their own line"
            );
            VisibilityResult {
                visible: true,
                witness: Some(LineOfSight {
                    slope: alpha.clone(),
                    intercept: beta.clone(),
                    side: Some(*side),
                }),
                certified: Certificate::Full,
            }
        }
    }
}

/// The slope shared by all lines of sight of a visible hallway.
pub fn slope_of(s: &InfiniteHallwaySpec) -> Result<ExactReal, Error> {
    match s {
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
            if !visibility(s, 10 * (pre.len() + period.len())).visible {
                return Err(Error::NotVisible);
            }
            let k: i64 = period.letters().iter().sum();
            Ok(ExactReal::Rational(BigRational::new(
                k.into(),
                (period.len() as i64).into(),
            )))
        }
        InfiniteHallwaySpec::Rotation { alpha, .. } => Ok(alpha.clone()),
    }
}

/// Intercepts of lines (touches allowed) through the first `horizon` walls
/// at the hallway's own slope.
///
/// For eventually periodic hallways the constraints repeat after one
/// preperiod plus period, so the result is exact for any horizon at least
/// that long (shorter horizons are widened to it). For rotation-generated
/// hallways the interval is a certified overestimate that shrinks as the
/// horizon grows.
pub fn intercept_set(s: &InfiniteHallwaySpec, horizon: usize) -> Result<Interval, Error> {
    if !visibility(s, horizon).visible {
        return Err(Error::NotVisible);
    }
    let slope = slope_of(s)?;
    let window = match s {
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
            horizon.max(pre.len() + period.len())
        }
        InfiniteHallwaySpec::Rotation { .. } => horizon,
    };
    Ok(intercept_interval(&s.truncate(window), &slope, Mode::Closed))
}

/// Which metric a derived computation builds on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseMetric {
    Standard,
    Rational,
}

/// The metric induced on slopes: the infimum of the base metric over pairs
/// of hallways with the given slopes.
///
/// The infimum is approached from above by pairing rotation hallways whose
/// intercepts run over the component midpoints of each slope's intercept
/// partition, so the result is an upper bound with a bounded certificate
/// (exact zero for equal slopes). Slopes must lie in `[0, 1]`.
pub fn tilde_metric(
    base: BaseMetric,
    alpha: &ExactReal,
    gamma: &ExactReal,
    horizon: usize,
) -> Result<MetricOutcome, Error> {
    for x in [alpha, gamma] {
        let in_range = x.sign() != Ordering::Less
            && x.compare(&ExactReal::one())? != Ordering::Greater;
        if !in_range {
            return Err(Error::Parse(format!("slope {x} is outside [0, 1]")));
        }
    }
    if alpha == gamma {
        return Ok(MetricOutcome::full(MetricValue::Zero));
    }
    let grid = |x: &ExactReal| -> Vec<ExactReal> {
        if x == &ExactReal::one() {
            // The partition is built for slopes below 1; slope 1 cuts the
            // intercept interval nowhere, like slope 0.
            vec![ExactReal::Rational(rat(1, 2))]
        } else {
            partition_y(x, horizon.min(32)).component_midpoints()
        }
    };
    let mut best = MetricValue::Infinite;
    for ba in grid(alpha) {
        let ha = InfiniteHallwaySpec::rotation(alpha.clone(), ba, Side::Plus)?;
        for bg in grid(gamma) {
            let hg = InfiniteHallwaySpec::rotation(gamma.clone(), bg, Side::Plus)?;
            let v = match base {
                BaseMetric::Standard => d_standard(&ha, &hg, horizon),
                BaseMetric::Rational => d_rational(&ha, &hg, horizon),
            };
            best = best.min(v.value);
        }
    }
    Ok(MetricOutcome { value: best, certificate: Certificate::Bounded { horizon } })
}

/// The hallway with a unit jump after doorway 0 and then steps of slope
/// `1/n`: doorway 0 at height 0, doorway `i` at `floor((i-1)/n) + 1`.
pub fn discontinuity_family(n: usize) -> InfiniteHallwaySpec {
    assert!(n >= 1, "family index starts at 1");
    let mut period = vec![0i64; n - 1];
    period.push(1);
    InfiniteHallwaySpec::eventually_periodic(Word::new(vec![1]), Word::new(period))
}

/// The pointwise limit of [`discontinuity_family`]: one unit jump, then
/// flat forever. Every member of the family is visible; this is not.
pub fn discontinuity_limit() -> InfiniteHallwaySpec {
    InfiniteHallwaySpec::eventually_periodic(Word::new(vec![1]), Word::new(vec![0]))
}

impl Serialize for Comm {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Comm", 2)?;
        match self {
            Comm::Whole(spec) => {
                st.serialize_field("whole", &true)?;
                st.serialize_field("spec", spec)?;
            }
            Comm::Prefix(h) => {
                st.serialize_field("whole", &false)?;
                st.serialize_field("hallway", h)?;
            }
        }
        st.end()
    }
}
