//! Hallways and the words they spell.
//!
//! A finite hallway is a list of doorways, one per integer wall position
//! `x = 0..=n`, each doorway being the open unit interval `(d_i, d_i + 1)`.
//! Hallways are kept normalized with `d_0 = 0`; the difference word
//! `w_i = d_{i+1} - d_i` determines the hallway up to that normalization.
//!
//! Infinite hallways appear through finite descriptions: an eventually
//! periodic difference word, or rotation parameters `(alpha, beta, side)`
//! whose doorway positions are `floor(i*alpha + beta)` (`side = plus`) or
//! `ceil(i*alpha + beta) - 1` (`side = minus`). Indices run over the natural
//! numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::numeric::ExactReal;
use crate::Error;

/// One doorway: the open interval `(left, left + 1)` in a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Doorway {
    pub left: i64,
}

/// A word of integer letters (differences of consecutive door positions).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<i64>,
}

impl Word {
    pub fn new(letters: Vec<i64>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl From<Vec<i64>> for Word {
    fn from(letters: Vec<i64>) -> Self {
        Word { letters }
    }
}

/// A word over `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    /// Panics if any entry is not 0 or 1.
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "binary word letters must be 0 or 1");
        BinaryWord { bits }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word::new(self.bits.iter().map(|&b| b as i64).collect())
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::Parse(format!("not a binary word: {s:?}"))),
            }
        }
        Ok(BinaryWord { bits })
    }
}

/// A finite hallway of `n + 1` doorways, normalized so the first doorway is
/// `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteHallway {
    doorways: Vec<Doorway>,
}

impl FiniteHallway {
    /// Builds a hallway from raw door positions, translating so `d_0 = 0`.
    ///
    /// Panics on an empty list: a hallway has at least one doorway.
    pub fn from_lefts(lefts: &[i64]) -> Self {
        assert!(!lefts.is_empty(), "a hallway has at least one doorway");
        let base = lefts[0];
        FiniteHallway {
            doorways: lefts.iter().map(|&d| Doorway { left: d - base }).collect(),
        }
    }

    /// The hallway spelling `w`: door positions are prefix sums of the word.
    pub fn from_word(w: &Word) -> Self {
        let mut lefts = Vec::with_capacity(w.len() + 1);
        let mut d = 0i64;
        lefts.push(d);
        for &x in w.letters() {
            d += x;
            lefts.push(d);
        }
        FiniteHallway::from_lefts(&lefts)
    }

    pub fn doorways(&self) -> &[Doorway] {
        &self.doorways
    }

    pub fn left(&self, i: usize) -> i64 {
        self.doorways[i].left
    }

    pub fn lefts(&self) -> Vec<i64> {
        self.doorways.iter().map(|d| d.left).collect()
    }

    /// Number of doorways.
    pub fn len(&self) -> usize {
        self.doorways.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Word length `n` (one less than the number of doorways).
    pub fn n(&self) -> usize {
        self.doorways.len() - 1
    }

    /// The difference word of the hallway.
    pub fn word(&self) -> Word {
        Word::new(
            self.doorways
                .windows(2)
                .map(|w| w[1].left - w[0].left)
                .collect(),
        )
    }
}

/// Difference word of a hallway (the hallway-to-word direction of the
/// correspondence; [`FiniteHallway::from_word`] is its inverse).
pub fn phi(h: &FiniteHallway) -> Word {
    h.word()
}

/// Hallway spelled by a word (inverse of [`phi`] on normalized hallways).
pub fn phi_inv(w: &Word) -> FiniteHallway {
    FiniteHallway::from_word(w)
}

/// Collapses a word over a two-letter alphabet `{a, a+1}` to a binary word,
/// returning `(a, bits)`. Words with all letters equal use `a` = the common
/// letter (so the bits are all zero); the empty word reports `a = 0`. Returns
/// `None` when the letters do not fit any `{a, a+1}`.
pub fn psi(w: &Word) -> Option<(i64, BinaryWord)> {
    let letters = w.letters();
    let (min, max) = match letters.iter().copied().fold(None, |acc, x| match acc {
        None => Some((x, x)),
        Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
    }) {
        None => return Some((0, BinaryWord::new(Vec::new()))),
        Some(mm) => mm,
    };
    if max - min > 1 {
        return None;
    }
    let a = min;
    Some((
        a,
        BinaryWord::new(letters.iter().map(|&x| (x - a) as u8).collect()),
    ))
}

/// Expands a binary word back over the alphabet `{a, a+1}`.
pub fn psi_inv(a: i64, bits: &BinaryWord) -> Word {
    Word::new(bits.bits().iter().map(|&b| a + b as i64).collect())
}

/// Which side an infinitesimally nudged line leans to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// A finitely described infinite hallway.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpecRepr", into = "SpecRepr")]
pub enum InfiniteHallwaySpec {
    /// Difference word `pre` followed by `period` repeated forever.
    EventuallyPeriodic { pre: Word, period: Word },
    /// Doorways read off a line of the given slope and intercept; `side`
    /// picks the floor (`plus`) or ceiling (`minus`) reading at lattice
    /// touches.
    Rotation {
        alpha: ExactReal,
        beta: ExactReal,
        side: Side,
    },
}

impl InfiniteHallwaySpec {
    /// Panics if `period` is empty.
    pub fn eventually_periodic(pre: Word, period: Word) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        InfiniteHallwaySpec::EventuallyPeriodic { pre, period }
    }

    pub fn periodic(period: Word) -> Self {
        Self::eventually_periodic(Word::new(Vec::new()), period)
    }

    /// Validates `0 <= alpha <= 1` and that the slope and intercept live in
    /// the same arithmetic (not two different radicands).
    pub fn rotation(alpha: ExactReal, beta: ExactReal, side: Side) -> Result<Self, Error> {
        let in_range = alpha.sign() != std::cmp::Ordering::Less
            && alpha.compare(&ExactReal::one())? != std::cmp::Ordering::Greater;
        if !in_range {
            return Err(Error::Parse(format!("rotation slope {alpha} outside [0, 1]")));
        }
        alpha.add(&beta)?;
        Ok(InfiniteHallwaySpec::Rotation { alpha, beta, side })
    }

    /// The `i`-th letter of the difference word.
    pub fn letter(&self, i: usize) -> i64 {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
                if i < pre.len() {
                    pre.letters()[i]
                } else {
                    period.letters()[(i - pre.len()) % period.len()]
                }
            }
            InfiniteHallwaySpec::Rotation { .. } => {
                (self.raw_left(i + 1) - self.raw_left(i))
                    .to_i64()
                    .expect("desk-scale door positions fit i64")
            }
        }
    }

    /// Door position before normalization (rotation specs only use this
    /// internally; eventually periodic specs are already normalized).
    fn raw_left(&self, i: usize) -> BigInt {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { .. } => BigInt::from(self.left(i)),
            InfiniteHallwaySpec::Rotation { alpha, beta, side } => {
                let v = alpha.mul_int(i as i64).add(beta).expect(
                    "slope and intercept over mixed radicands are unsupported",
                );
                match side {
                    Side::Plus => v.floor(),
                    Side::Minus => v.ceil() - 1,
                }
            }
        }
    }

    /// Normalized door position at index `i` (so `left(0) = 0`).
    pub fn left(&self, i: usize) -> i64 {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { .. } => {
                let mut d = 0i64;
                for j in 0..i {
                    d += self.letter(j);
                }
                d
            }
            InfiniteHallwaySpec::Rotation { .. } => (self.raw_left(i) - self.raw_left(0))
                .to_i64()
                .expect("desk-scale door positions fit i64"),
        }
    }

    /// First `n + 1` doorways as a normalized finite hallway.
    pub fn truncate(&self, n: usize) -> FiniteHallway {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { .. } => {
                let mut lefts = Vec::with_capacity(n + 1);
                let mut d = 0i64;
                lefts.push(d);
                for i in 0..n {
                    d += self.letter(i);
                    lefts.push(d);
                }
                FiniteHallway::from_lefts(&lefts)
            }
            InfiniteHallwaySpec::Rotation { .. } => {
                let lefts: Vec<i64> = (0..=n)
                    .map(|i| {
                        (self.raw_left(i))
                            .to_i64()
                            .expect("desk-scale door positions fit i64")
                    })
                    .collect();
                FiniteHallway::from_lefts(&lefts)
            }
        }
    }

    /// Drops the first doorway: the spec of the hallway one step to the
    /// right. Rotation specs shift the intercept by the slope (mod 1).
    pub fn shift(&self) -> Self {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
                if pre.is_empty() {
                    let mut p = period.letters().to_vec();
                    p.rotate_left(1);
                    InfiniteHallwaySpec::eventually_periodic(Word::new(Vec::new()), Word::new(p))
                } else {
                    InfiniteHallwaySpec::eventually_periodic(
                        Word::new(pre.letters()[1..].to_vec()),
                        period.clone(),
                    )
                }
            }
            InfiniteHallwaySpec::Rotation { alpha, beta, side } => {
                let beta = alpha
                    .add(beta)
                    .expect("slope and intercept over mixed radicands are unsupported")
                    .frac();
                InfiniteHallwaySpec::Rotation {
                    alpha: alpha.clone(),
                    beta,
                    side: *side,
                }
            }
        }
    }

    /// Period length of the periodic part (eventually periodic specs only).
    pub fn period_len(&self) -> Option<usize> {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { period, .. } => Some(period.len()),
            InfiniteHallwaySpec::Rotation { .. } => None,
        }
    }

    /// Canonical form: equal canonical forms mean equal door sequences.
    ///
    /// Eventually periodic specs get the minimal period and shortest
    /// preperiod. Rotation specs with rational slope become eventually
    /// periodic (their words are periodic with the slope's denominator).
    /// Rotation specs with irrational slope reduce the intercept mod 1 and
    /// drop the side distinction when the line never meets the lattice.
    pub fn canonical(&self) -> Self {
        match self {
            InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
                canonical_eventually_periodic(pre.letters(), period.letters())
            }
            InfiniteHallwaySpec::Rotation { alpha, beta, side } => {
                if let Some(a) = alpha.as_rational() {
                    let q = a
                        .denom()
                        .to_usize()
                        .expect("desk-scale slope denominator fits usize");
                    let letters: Vec<i64> = (0..q).map(|i| self.letter(i)).collect();
                    return canonical_eventually_periodic(&[], &letters);
                }
                let beta = beta.frac();
                let side = if lattice_touch_index(alpha, &beta).is_some() {
                    *side
                } else {
                    Side::Plus
                };
                InfiniteHallwaySpec::Rotation {
                    alpha: alpha.clone(),
                    beta,
                    side,
                }
            }
        }
    }
}

/// The unique `i >= 0` with `i*alpha + beta` an integer, when one exists.
/// Only meaningful for irrational `alpha` (where there is at most one).
pub(crate) fn lattice_touch_index(alpha: &ExactReal, beta: &ExactReal) -> Option<usize> {
    let (b1, d1, r1) = match alpha {
        ExactReal::Quadratic(q) => {
            let (_, b, d, r) = q.coefficients();
            (b, d, r)
        }
        ExactReal::Rational(_) => unreachable!("irrational slope expected"),
    };
    match beta {
        // i*alpha is irrational for i >= 1, so only i = 0 can touch.
        ExactReal::Rational(b) => {
            if b.is_integer() {
                Some(0)
            } else {
                None
            }
        }
        ExactReal::Quadratic(q) => {
            let (_, b2, d2, r2) = q.coefficients();
            if d2 != d1 {
                // sqrt(d1) and sqrt(d2) are rationally independent, so the
                // irrational parts can never cancel.
                return None;
            }
            // Irrational part of i*alpha + beta is (i*b1*r2 + b2*r1)/(r1*r2).
            let num = -(b2 * r1);
            let den = b1 * r2;
            if (&num % &den).is_zero() {
                let i = num / den;
                if !i.is_negative() {
                    let i = i.to_usize()?;
                    let v = alpha.mul_int(i as i64).add(beta).expect("same radicand");
                    if v.is_integer() {
                        return Some(i);
                    }
                }
            }
            None
        }
    }
}

/// Minimal-period, minimal-preperiod form of an eventually periodic word.
fn canonical_eventually_periodic(pre: &[i64], period: &[i64]) -> InfiniteHallwaySpec {
    assert!(!period.is_empty());
    // Minimal cyclic period divides the length.
    let m = period.len();
    let mut best = m;
    for p in 1..m {
        if m.is_multiple_of(p) && (0..m).all(|i| period[i] == period[i % p]) {
            best = p;
            break;
        }
    }
    let mut period: Vec<i64> = period[..best].to_vec();
    let mut pre: Vec<i64> = pre.to_vec();
    // Absorb preperiod letters that already follow the cycle.
    while let Some(&last) = pre.last() {
        if last == period[period.len() - 1] {
            pre.pop();
            period.rotate_right(1);
        } else {
            break;
        }
    }
    InfiniteHallwaySpec::eventually_periodic(Word::new(pre), Word::new(period))
}

/// Prepends a doorway in front of an infinite hallway along a line of sight.
///
/// `(alpha, beta, side)` is the nudged line in the coordinates of the
/// extended hallway: the existing spec `s` occupies positions `x = 1, 2, ...`
/// and the new doorway sits at `x = 0`, where the line has height `beta`.
/// The returned doorway is `(floor(beta), floor(beta) + 1)` for `side = plus`
/// and `(ceil(beta) - 1, ceil(beta))` for `side = minus`; by construction the
/// line still passes it on the requested side.
///
/// Errors with [`Error::PreconditionViolated`] when the line is not a line of
/// sight for `s` (checked up to the sight module's default horizon).
pub fn prepend(
    s: &InfiniteHallwaySpec,
    alpha: &ExactReal,
    beta: &ExactReal,
    side: Side,
) -> Result<Doorway, Error> {
    // Where the line meets the wall at x = 1 determines the integer offset at
    // which `s`'s normalized doorways must sit for the line to pass them.
    let at_tail = alpha.add(beta)?;
    let offset = match side {
        Side::Plus => at_tail.floor(),
        Side::Minus => at_tail.ceil() - 1,
    };
    let tail_intercept = at_tail.sub(&ExactReal::from_integer(offset))?;
    let horizon = crate::sight::default_horizon(s);
    let sight = crate::sight::epsilon_line_of_sight(s, alpha, &tail_intercept, horizon)?;
    if !sight.passage.allows(side) {
        return Err(Error::PreconditionViolated);
    }
    let left = match side {
        Side::Plus => beta.floor(),
        Side::Minus => beta.ceil() - 1,
    };
    Ok(Doorway {
        left: left.to_i64().ok_or(Error::PreconditionViolated)?,
    })
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum SpecRepr {
    EventuallyPeriodic { pre: Vec<i64>, period: Vec<i64> },
    Rotation {
        alpha: String,
        beta: String,
        side: Side,
    },
}

impl TryFrom<SpecRepr> for InfiniteHallwaySpec {
    type Error = Error;

    fn try_from(r: SpecRepr) -> Result<Self, Error> {
        match r {
            SpecRepr::EventuallyPeriodic { pre, period } => {
                if period.is_empty() {
                    return Err(Error::Parse("period must be nonempty".into()));
                }
                Ok(InfiniteHallwaySpec::eventually_periodic(
                    Word::new(pre),
                    Word::new(period),
                ))
            }
            SpecRepr::Rotation { alpha, beta, side } => {
                InfiniteHallwaySpec::rotation(alpha.parse()?, beta.parse()?, side)
            }
        }
    }
}

impl From<InfiniteHallwaySpec> for SpecRepr {
    fn from(s: InfiniteHallwaySpec) -> Self {
        match s {
            InfiniteHallwaySpec::EventuallyPeriodic { pre, period } => {
                SpecRepr::EventuallyPeriodic {
                    pre: pre.letters().to_vec(),
                    period: period.letters().to_vec(),
                }
            }
            InfiniteHallwaySpec::Rotation { alpha, beta, side } => SpecRepr::Rotation {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                side,
            },
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", rename = "finite")]
struct FiniteHallwayRepr {
    lefts: Vec<i64>,
}

impl Serialize for FiniteHallway {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        FiniteHallwayRepr { lefts: self.lefts() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FiniteHallway {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = FiniteHallwayRepr::deserialize(de)?;
        if repr.lefts.is_empty() {
            return Err(serde::de::Error::custom("a hallway has at least one doorway"));
        }
        Ok(FiniteHallway::from_lefts(&repr.lefts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn ep(pre: &[i64], period: &[i64]) -> InfiniteHallwaySpec {
        InfiniteHallwaySpec::eventually_periodic(Word::new(pre.to_vec()), Word::new(period.to_vec()))
    }

    fn rot(alpha: ExactReal, beta: ExactReal, side: Side) -> InfiniteHallwaySpec {
        InfiniteHallwaySpec::rotation(alpha, beta, side).unwrap()
    }

    #[test]
    fn word_and_hallway_correspond() {
        let h = FiniteHallway::from_lefts(&[0, 0, 1]);
        assert_eq!(phi(&h), Word::new(vec![0, 1]));
        assert_eq!(phi_inv(&Word::new(vec![0, 1])), h);
        let h2 = FiniteHallway::from_lefts(&[5, 5, 6]);
        assert_eq!(h2.lefts(), vec![0, 0, 1], "normalization translates to d0 = 0");
    }

    #[test]
    fn psi_collapses_two_letter_alphabets() {
        let (a, bits) = psi(&Word::new(vec![3, 4, 3])).unwrap();
        assert_eq!((a, bits.to_string().as_str()), (3, "010"));
        assert_eq!(psi(&Word::new(vec![0, 2])), None);
        let (a, bits) = psi(&Word::new(vec![5, 5])).unwrap();
        assert_eq!((a, bits.to_string().as_str()), (5, "00"));
        let (a, bits) = psi(&Word::new(vec![])).unwrap();
        assert_eq!((a, bits.len()), (0, 0));
        assert_eq!(psi_inv(3, &"010".parse().unwrap()), Word::new(vec![3, 4, 3]));
    }

    #[test]
    fn truncates_rotation_specs() {
        let s = rot(
            ExactReal::Rational(rat(1, 2)),
            ExactReal::Rational(rat(1, 4)),
            Side::Plus,
        );
        assert_eq!(s.truncate(4).lefts(), vec![0, 0, 1, 1, 2]);
        let flat = rot(ExactReal::zero(), ExactReal::Rational(rat(1, 2)), Side::Plus);
        assert_eq!(flat.truncate(3).lefts(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn truncates_minus_side_with_ceilings() {
        let s = rot(
            ExactReal::Rational(rat(1, 2)),
            ExactReal::zero(),
            Side::Minus,
        );
        // ceil(i/2) - 1: -1, 0, 0, 1 -> normalized 0, 1, 1, 2.
        assert_eq!(s.truncate(3).lefts(), vec![0, 1, 1, 2]);
        let plus = rot(
            ExactReal::Rational(rat(1, 2)),
            ExactReal::zero(),
            Side::Plus,
        );
        assert_eq!(plus.truncate(3).lefts(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn truncates_eventually_periodic_specs() {
        assert_eq!(ep(&[], &[1]).truncate(3).lefts(), vec![0, 1, 2, 3]);
        assert_eq!(ep(&[1], &[0]).truncate(3).lefts(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn shift_drops_the_first_doorway() {
        let s = ep(&[1], &[0]);
        assert_eq!(s.shift(), ep(&[], &[0]));
        assert_eq!(ep(&[], &[1, 0]).shift(), ep(&[], &[0, 1]));
        let r = rot(
            ExactReal::Rational(rat(1, 2)),
            ExactReal::Rational(rat(3, 4)),
            Side::Plus,
        );
        let shifted = r.shift();
        match &shifted {
            InfiniteHallwaySpec::Rotation { beta, .. } => {
                assert_eq!(beta, &ExactReal::Rational(rat(1, 4)));
            }
            _ => panic!("shift keeps rotation form"),
        }
        // Shifting the spec matches shifting the door sequence.
        for i in 0..8 {
            assert_eq!(shifted.letter(i), r.letter(i + 1));
        }
    }

    #[test]
    fn canonical_reduces_periods_and_preperiods() {
        assert_eq!(ep(&[], &[1, 0, 1, 0]).canonical(), ep(&[], &[1, 0]));
        assert_eq!(ep(&[1], &[0, 1]).canonical(), ep(&[], &[1, 0]));
        assert_eq!(ep(&[1], &[1]).canonical(), ep(&[], &[1]));
        assert_eq!(ep(&[2, 1], &[0]).canonical(), ep(&[2, 1], &[0]));
        // Rational rotation specs become eventually periodic.
        let r = rot(
            ExactReal::Rational(rat(1, 2)),
            ExactReal::Rational(rat(1, 4)),
            Side::Plus,
        );
        assert_eq!(r.canonical(), ep(&[], &[0, 1]));
    }

    #[test]
    fn canonical_rotation_drops_side_without_touches() {
        let golden = ExactReal::quadratic_i(-1, 1, 5, 2);
        let a = rot(golden.clone(), ExactReal::Rational(rat(1, 3)), Side::Plus);
        let b = rot(golden.clone(), ExactReal::Rational(rat(1, 3)), Side::Minus);
        assert_eq!(a.canonical(), b.canonical());
        for i in 0..30 {
            assert_eq!(a.letter(i), b.letter(i));
        }
        // beta = 0 touches the lattice at i = 0, so the sides differ.
        let a0 = rot(golden.clone(), ExactReal::zero(), Side::Plus);
        let b0 = rot(golden, ExactReal::zero(), Side::Minus);
        assert_ne!(a0.canonical(), b0.canonical());
        assert_ne!(a0.letter(0), b0.letter(0));
    }

    #[test]
    fn lattice_touch_solves_exactly() {
        let golden = ExactReal::quadratic_i(-1, 1, 5, 2);
        // beta = 3 - 4*alpha touches at i = 4: 4*alpha + beta = 3.
        let beta = golden.mul_int(-4).add(&ExactReal::from_int(3)).unwrap();
        assert_eq!(lattice_touch_index(&golden, &beta), Some(4));
        assert_eq!(
            lattice_touch_index(&golden, &ExactReal::Rational(rat(1, 3))),
            None
        );
        assert_eq!(lattice_touch_index(&golden, &ExactReal::zero()), Some(0));
        // Different radicand: the radicals cannot cancel.
        let beta2 = ExactReal::quadratic_i(0, 1, 2, 1);
        assert_eq!(lattice_touch_index(&golden, &beta2), None);
    }

    #[test]
    fn json_forms_round_trip() {
        let h = FiniteHallway::from_lefts(&[0, 1, 1]);
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"type":"finite","lefts":[0,1,1]}"#
        );
        let back: FiniteHallway = serde_json::from_str(r#"{"type":"finite","lefts":[0,1,1]}"#).unwrap();
        assert_eq!(back, h);

        let s = ep(&[1], &[0]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"type":"eventually_periodic","pre":[1],"period":[0]}"#
        );
        let r = rot(
            ExactReal::quadratic_i(-1, 1, 5, 2),
            ExactReal::zero(),
            Side::Plus,
        );
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            r#"{"type":"rotation","alpha":"(-1+1*sqrt(5))/2","beta":"0","side":"plus"}"#
        );
        let back: InfiniteHallwaySpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<InfiniteHallwaySpec>(
            r#"{"type":"eventually_periodic","pre":[],"period":[]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<InfiniteHallwaySpec>(
            r#"{"type":"rotation","alpha":"3/2","beta":"0","side":"plus"}"#
        )
        .is_err());
    }
}
