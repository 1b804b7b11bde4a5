//! Lines of sight through hallways, decided exactly.
//!
//! A line `y = alpha*x + beta` sees through a finite hallway when its height
//! at every wall `x = i` lands inside doorway `i`. Fixing the slope gives the
//! *intercept interval* (an intersection of translated doorways); letting
//! both parameters vary gives the *feasible polygon* in `(alpha, beta)`
//! space, a convex region cut out by the doorway half-planes. Open mode uses
//! the open doorways `(d_i, d_i+1)`; closed mode uses their closures, which
//! is what the unframed variants in the metrics module need.
//!
//! For infinite hallways, lines are allowed to graze door frames as long as
//! every touch can be escaped by the same infinitesimal nudge: a touch at the
//! bottom of a doorway forces the `+eps` side, a touch at the top forces
//! `-eps`, and opposite touches block the line entirely.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::hallway::{FiniteHallway, InfiniteHallwaySpec, Side};
use crate::numeric::{rat_i, BigRational, ExactReal};
use crate::Error;

/// Whether doorways are treated as open or closed intervals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Open,
    Closed,
}

/// An interval with exact endpoints, possibly empty, possibly degenerate
/// (a single point, only when both ends are closed).
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Interval {
    Empty,
    Span {
        lo: ExactReal,
        hi: ExactReal,
        lo_open: bool,
        hi_open: bool,
    },
}

impl Interval {
    /// Normalizing constructor: spans with `lo > hi`, or `lo = hi` with an
    /// open end, collapse to `Empty`. Endpoints must be comparable.
    pub fn span(lo: ExactReal, hi: ExactReal, lo_open: bool, hi_open: bool) -> Self {
        match lo.compare(&hi).expect("interval endpoints must be comparable") {
            Ordering::Greater => Interval::Empty,
            Ordering::Equal if lo_open || hi_open => Interval::Empty,
            _ => Interval::Span { lo, hi, lo_open, hi_open },
        }
    }

    pub fn open(lo: ExactReal, hi: ExactReal) -> Self {
        Self::span(lo, hi, true, true)
    }

    pub fn closed(lo: ExactReal, hi: ExactReal) -> Self {
        Self::span(lo, hi, false, false)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    /// Length of the interval (zero when empty or degenerate).
    pub fn width(&self) -> ExactReal {
        match self {
            Interval::Empty => ExactReal::zero(),
            Interval::Span { lo, hi, .. } => {
                hi.sub(lo).expect("interval endpoints must be comparable")
            }
        }
    }

    /// True when the interval contains an open neighbourhood (positive
    /// width), i.e. it survives in open mode.
    pub fn has_interior(&self) -> bool {
        self.width().sign() == Ordering::Greater
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (a, b) = match (self, other) {
            (Interval::Empty, _) | (_, Interval::Empty) => return Interval::Empty,
            (
                Interval::Span { lo, hi, lo_open, hi_open },
                Interval::Span { lo: lo2, hi: hi2, lo_open: lo2_open, hi_open: hi2_open },
            ) => (
                (lo, *lo_open, hi, *hi_open),
                (lo2, *lo2_open, hi2, *hi2_open),
            ),
        };
        let (lo, lo_open) = match a.0.compare(b.0).expect("comparable endpoints") {
            Ordering::Less => (b.0.clone(), b.1),
            Ordering::Greater => (a.0.clone(), a.1),
            Ordering::Equal => (a.0.clone(), a.1 || b.1),
        };
        let (hi, hi_open) = match a.2.compare(b.2).expect("comparable endpoints") {
            Ordering::Less => (a.2.clone(), a.3),
            Ordering::Greater => (b.2.clone(), b.3),
            Ordering::Equal => (a.2.clone(), a.3 || b.3),
        };
        Interval::span(lo, hi, lo_open, hi_open)
    }

    pub fn midpoint(&self) -> Option<ExactReal> {
        match self {
            Interval::Empty => None,
            Interval::Span { lo, hi, .. } => Some(
                lo.midpoint(hi).expect("interval endpoints must be comparable"),
            ),
        }
    }

    pub fn contains(&self, x: &ExactReal) -> Result<bool, Error> {
        match self {
            Interval::Empty => Ok(false),
            Interval::Span { lo, hi, lo_open, hi_open } => {
                let above = match x.compare(lo)? {
                    Ordering::Greater => true,
                    Ordering::Equal => !lo_open,
                    Ordering::Less => false,
                };
                let below = match x.compare(hi)? {
                    Ordering::Less => true,
                    Ordering::Equal => !hi_open,
                    Ordering::Greater => false,
                };
                Ok(above && below)
            }
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            Interval::Empty => {
                let mut s = ser.serialize_struct("Interval", 1)?;
                s.serialize_field("empty", &true)?;
                s.end()
            }
            Interval::Span { lo, hi, lo_open, hi_open } => {
                let mut s = ser.serialize_struct("Interval", 4)?;
                s.serialize_field("lo", &lo.to_string())?;
                s.serialize_field("hi", &hi.to_string())?;
                s.serialize_field("lo_open", lo_open)?;
                s.serialize_field("hi_open", hi_open)?;
                s.end()
            }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => f.write_str("empty"),
            Interval::Span { lo, hi, lo_open, hi_open } => write!(
                f,
                "{}{}, {}{}",
                if *lo_open { "(" } else { "[" },
                lo,
                hi,
                if *hi_open { ")" } else { "]" },
            ),
        }
    }
}

/// An exact point in `(slope, intercept)` space.
pub type Pt = (BigRational, BigRational);

/// The half-plane `a*x + b*y <= c`.
#[derive(Debug, Clone)]
pub(crate) struct HalfPlane {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

impl HalfPlane {
    pub fn new_i(a: i64, b: i64, c: i64) -> Self {
        HalfPlane { a: rat_i(a), b: rat_i(b), c: rat_i(c) }
    }

    fn value(&self, p: &Pt) -> BigRational {
        &self.a * &p.0 + &self.b * &p.1 - &self.c
    }
}

/// Clips a convex polygon (counterclockwise or clockwise vertex list) by a
/// half-plane, exactly. Division-free tests, one division per crossing.
pub(crate) fn clip(poly: &[Pt], hp: &HalfPlane) -> Vec<Pt> {
    if poly.is_empty() {
        return Vec::new();
    }
    let mut out: Vec<Pt> = Vec::with_capacity(poly.len() + 2);
    let vals: Vec<BigRational> = poly.iter().map(|p| hp.value(p)).collect();
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        let (vi, vj) = (&vals[i], &vals[j]);
        let keep_i = !vi.is_positive();
        if keep_i {
            out.push(poly[i].clone());
        }
        // Edge crosses the boundary strictly: add the crossing point.
        if (vi.is_positive() && vj.is_negative()) || (vi.is_negative() && vj.is_positive()) {
            let t = vi / (vi - vj);
            let x = &poly[i].0 + &t * (&poly[j].0 - &poly[i].0);
            let y = &poly[i].1 + &t * (&poly[j].1 - &poly[i].1);
            out.push((x, y));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

pub(crate) fn rect(x0: BigRational, x1: BigRational, y0: BigRational, y1: BigRational) -> Vec<Pt> {
    vec![
        (x0.clone(), y0.clone()),
        (x1.clone(), y0),
        (x1, y1.clone()),
        (x0, y1),
    ]
}

/// Twice the (unsigned) area of a polygon, by the shoelace sum.
pub(crate) fn area2(poly: &[Pt]) -> BigRational {
    if poly.len() < 3 {
        return BigRational::zero();
    }
    let mut acc = BigRational::zero();
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        acc += &poly[i].0 * &poly[j].1 - &poly[j].0 * &poly[i].1;
    }
    acc.abs()
}

/// The closure of the feasible region of a hallway in `(slope, intercept)`
/// space, as a convex polygon, together with the mode it answers for.
///
/// Open mode asks about the strict constraints: the open region is nonempty
/// exactly when the closure has positive area.
#[derive(Debug, Clone, PartialEq)]
pub struct FeasiblePolygon {
    vertices: Vec<Pt>,
    mode: Mode,
}

impl FeasiblePolygon {
    pub(crate) fn from_vertices(vertices: Vec<Pt>, mode: Mode) -> Self {
        FeasiblePolygon { vertices, mode }
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn area2(&self) -> BigRational {
        area2(&self.vertices)
    }

    /// Nonemptiness in this polygon's mode: closed mode accepts any point,
    /// open mode needs positive area.
    pub fn is_nonempty(&self) -> bool {
        match self.mode {
            Mode::Closed => !self.vertices.is_empty(),
            Mode::Open => self.area2().is_positive(),
        }
    }

    /// A point strictly inside (vertex centroid), when the area is positive.
    pub fn interior_point(&self) -> Option<Pt> {
        if !self.area2().is_positive() {
            return None;
        }
        let n = rat_i(self.vertices.len() as i64);
        let sx: BigRational = self.vertices.iter().map(|p| &p.0).sum();
        let sy: BigRational = self.vertices.iter().map(|p| &p.1).sum();
        Some((sx / &n, sy / n))
    }

    /// Smallest and largest slope over the (closure) polygon.
    pub fn slope_range(&self) -> Option<(BigRational, BigRational)> {
        let first = self.vertices.first()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for (x, _) in &self.vertices {
            if x < &lo {
                lo = x.clone();
            }
            if x > &hi {
                hi = x.clone();
            }
        }
        Some((lo, hi))
    }
}

impl Serialize for FeasiblePolygon {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let verts: Vec<[String; 2]> = self
            .vertices
            .iter()
            .map(|(x, y)| [x.to_string(), y.to_string()])
            .collect();
        let mut s = ser.serialize_struct("FeasiblePolygon", 2)?;
        s.serialize_field("mode", &self.mode)?;
        s.serialize_field("vertices", &verts)?;
        s.end()
    }
}

/// A witness line, with an optional nudge side (infinite hallways only).
#[derive(Debug, Clone, PartialEq)]
pub struct LineOfSight {
    pub slope: ExactReal,
    pub intercept: ExactReal,
    pub side: Option<Side>,
}

impl Serialize for LineOfSight {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("LineOfSight", 3)?;
        s.serialize_field("slope", &self.slope.to_string())?;
        s.serialize_field("intercept", &self.intercept.to_string())?;
        s.serialize_field("side", &self.side)?;
        s.end()
    }
}

/// Height of the point `(x, y)` projected along slope `gamma` back to the
/// axis `x = 0`, i.e. `y - gamma * x`.
pub fn project(gamma: &ExactReal, x: i64, y: &ExactReal) -> Result<ExactReal, Error> {
    y.sub(&gamma.mul_int(x))
}

/// Intercepts `beta` for which the line of slope `alpha` passes every
/// doorway of `h`, in the given mode: the intersection over `i` of
/// `(d_i - alpha*i, d_i + 1 - alpha*i)`.
pub fn intercept_interval(h: &FiniteHallway, alpha: &ExactReal, mode: Mode) -> Interval {
    let open = mode == Mode::Open;
    let mut acc = Interval::span(
        ExactReal::zero(),
        ExactReal::one(),
        open,
        open,
    );
    for (i, d) in h.doorways().iter().enumerate().skip(1) {
        let shift = alpha.mul_int(i as i64);
        let lo = ExactReal::from_int(d.left)
            .sub(&shift)
            .expect("doorway bounds stay in the slope's radicand");
        let hi = ExactReal::from_int(d.left + 1)
            .sub(&shift)
            .expect("doorway bounds stay in the slope's radicand");
        acc = acc.intersect(&Interval::span(lo, hi, open, open));
        if acc.is_empty() {
            break;
        }
    }
    acc
}

fn doorway_halfplanes(h: &FiniteHallway) -> Vec<HalfPlane> {
    let mut hps = Vec::with_capacity(2 * h.len());
    for (i, d) in h.doorways().iter().enumerate() {
        let i = i as i64;
        // i*alpha + beta >= d  and  i*alpha + beta <= d + 1.
        hps.push(HalfPlane::new_i(-i, -1, -d.left));
        hps.push(HalfPlane::new_i(i, 1, d.left + 1));
    }
    hps
}

/// The feasible polygon of `h` (closure of the feasible region), for
/// hallways with at least two doorways (the region is otherwise an
/// unbounded strip).
pub fn feasible_polygon(h: &FiniteHallway, mode: Mode) -> FeasiblePolygon {
    assert!(h.len() >= 2, "feasible polygon needs at least two doorways");
    // The first two doorway constraints confine the slope to
    // (d_1 - 1, d_1 + 1), so this box never cuts the true region.
    let d1 = h.left(1);
    let mut poly = rect(rat_i(d1 - 2), rat_i(d1 + 2), rat_i(-1), rat_i(2));
    for hp in doorway_halfplanes(h) {
        poly = clip(&poly, &hp);
        if poly.is_empty() {
            break;
        }
    }
    FeasiblePolygon { vertices: poly, mode }
}

/// Feasible polygon further clipped to `lo <= alpha <= hi`.
pub fn feasible_polygon_in_slope_range(
    h: &FiniteHallway,
    mode: Mode,
    lo: &BigRational,
    hi: &BigRational,
) -> FeasiblePolygon {
    let base = feasible_polygon(h, mode);
    let mut poly = base.vertices;
    poly = clip(&poly, &HalfPlane { a: -BigRational::one(), b: BigRational::zero(), c: -lo.clone() });
    poly = clip(&poly, &HalfPlane { a: BigRational::one(), b: BigRational::zero(), c: hi.clone() });
    FeasiblePolygon { vertices: poly, mode }
}

/// Whether some line passes through every open doorway of `h`.
///
/// Single-doorway hallways are always passable. Otherwise this is positive
/// area of the feasible polygon: strict constraints are satisfiable exactly
/// when the closure has interior.
pub fn admits_line_of_sight(h: &FiniteHallway) -> bool {
    if h.len() == 1 {
        return true;
    }
    feasible_polygon(h, Mode::Open).is_nonempty()
}

/// Closed-doorway variant (used by the unframed hallways in the metrics).
pub fn admits_closed_line_of_sight(h: &FiniteHallway) -> bool {
    if h.len() == 1 {
        return true;
    }
    feasible_polygon(h, Mode::Closed).is_nonempty()
}

/// The open interval of slopes of lines of sight through `h` (at least two
/// doorways). Errors with [`Error::NoLineOfSight`] when there is none.
pub fn slope_interval(h: &FiniteHallway) -> Result<Interval, Error> {
    assert!(h.len() >= 2, "slope interval needs at least two doorways");
    let poly = feasible_polygon(h, Mode::Open);
    if !poly.is_nonempty() {
        return Err(Error::NoLineOfSight);
    }
    let (lo, hi) = poly.slope_range().expect("nonempty polygon has vertices");
    Ok(Interval::open(
        ExactReal::from_rational(lo),
        ExactReal::from_rational(hi),
    ))
}

/// A rational witness line through `h` with denominator at most `n` (the
/// word length), which always exists when any line does.
///
/// Deterministic choice: smallest denominator, then smallest numerator, then
/// the midpoint of the intercept interval at that slope.
pub fn rational_line_of_sight(h: &FiniteHallway) -> Result<LineOfSight, Error> {
    assert!(h.len() >= 2, "rational witness search needs at least two doorways");
    let poly = feasible_polygon(h, Mode::Open);
    if !poly.is_nonempty() {
        return Err(Error::NoLineOfSight);
    }
    let (lo, hi) = poly.slope_range().expect("nonempty polygon has vertices");
    let n = h.n() as i64;
    for q in 1..=n {
        let qr = rat_i(q);
        // Integers p with lo < p/q < hi.
        let p_min: BigInt = (&lo * &qr).floor().to_integer() + 1;
        let p_max: BigInt = (&hi * &qr).ceil().to_integer() - 1;
        let mut p = p_min.clone();
        while p <= p_max {
            if p.gcd(&BigInt::from(q)).is_one() {
                let slope = ExactReal::from_rational(BigRational::new(p.clone(), q.into()));
                let fiber = intercept_interval(h, &slope, Mode::Open);
                if fiber.has_interior() {
                    let intercept = fiber.midpoint().expect("nonempty fiber");
                    return Ok(LineOfSight { slope, intercept, side: None });
                }
            }
            p += 1;
        }
    }
    unreachable!("a feasible hallway admits a rational slope with denominator <= n");
}

/// Which infinitesimal nudges of a line survive a hallway.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Passage {
    /// No touches at all: both nudges work.
    Both,
    /// Bottom-of-doorway touches only: the `+eps` line passes.
    Plus,
    /// Top-of-doorway touches only: the `-eps` line passes.
    Minus,
    /// A hard miss, or touches on both sides.
    #[serde(rename = "none")]
    Blocked,
}

impl Passage {
    pub fn allows(&self, side: Side) -> bool {
        matches!(
            (self, side),
            (Passage::Both, _) | (Passage::Plus, Side::Plus) | (Passage::Minus, Side::Minus)
        )
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Passage::Both => "both",
            Passage::Plus => "plus",
            Passage::Minus => "minus",
            Passage::Blocked => "none",
        })
    }
}

/// How far a verdict is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certificate {
    /// Exact for the whole infinite hallway.
    Full,
    /// Checked for doorway indices up to the horizon only.
    Bounded { horizon: usize },
}

/// Result of the nudged line-of-sight check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EpsilonSight {
    pub passage: Passage,
    pub certificate: Certificate,
}

/// Default scan depth: ten rounds of the word for eventually periodic specs,
/// a fixed window for rotation specs.
pub fn default_horizon(s: &InfiniteHallwaySpec) -> usize {
    match s {
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
            10 * (pre.len() + period.len())
        }
        InfiniteHallwaySpec::Rotation { .. } => 1000,
    }
}

/// Decides which nudges of `y = alpha*x + beta` pass every doorway of `s`.
///
/// For eventually periodic specs the verdict is always fully certified: if
/// `alpha` differs from the period's slope the line drifts out of any
/// doorway window, and otherwise the doorway offsets repeat after one
/// preperiod plus period, so a finite scan is complete. For rotation specs
/// the scan is certified up to `horizon` unless a hard violation appears
/// earlier (which is final).
pub fn epsilon_line_of_sight(
    s: &InfiniteHallwaySpec,
    alpha: &ExactReal,
    beta: &ExactReal,
    horizon: usize,
) -> Result<EpsilonSight, Error> {
    let (limit, full) = match s {
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
            let k: i64 = period.letters().iter().sum();
            let m = period.len() as i64;
            // Offset drift per period is alpha*m - k; nonzero drift escapes
            // every unit window, so only the matching slope needs a scan.
            let drift_is_zero = alpha
                .compare(&ExactReal::Rational(BigRational::new(k.into(), m.into())))?
                == Ordering::Equal;
            if !drift_is_zero {
                return Ok(EpsilonSight {
                    passage: Passage::Blocked,
                    certificate: Certificate::Full,
                });
            }
            (pre.len() + period.len(), true)
        }
        InfiniteHallwaySpec::Rotation { .. } => (horizon, false),
    };
    let mut plus_ok = true;
    let mut minus_ok = true;
    for i in 0..=limit {
        let v = alpha.mul_int(i as i64).add(beta)?;
        let d = s.left(i);
        match v.compare(&ExactReal::from_int(d))? {
            Ordering::Less => {
                return Ok(EpsilonSight {
                    passage: Passage::Blocked,
                    certificate: Certificate::Full,
                })
            }
            Ordering::Equal => {
                // Bottom touch: only the +eps nudge clears it.
                minus_ok = false;
            }
            Ordering::Greater => {}
        }
        match v.compare(&ExactReal::from_int(d + 1))? {
            Ordering::Greater => {
                return Ok(EpsilonSight {
                    passage: Passage::Blocked,
                    certificate: Certificate::Full,
                })
            }
            Ordering::Equal => {
                // Top touch: only the -eps nudge clears it.
                plus_ok = false;
            }
            Ordering::Less => {}
        }
        if !plus_ok && !minus_ok {
            return Ok(EpsilonSight {
                passage: Passage::Blocked,
                certificate: Certificate::Full,
            });
        }
    }
    let passage = match (plus_ok, minus_ok) {
        (true, true) => Passage::Both,
        (true, false) => Passage::Plus,
        (false, true) => Passage::Minus,
        (false, false) => unreachable!("handled in the loop"),
    };
    Ok(EpsilonSight {
        passage,
        certificate: if full {
            Certificate::Full
        } else {
            Certificate::Bounded { horizon }
        },
    })
}
