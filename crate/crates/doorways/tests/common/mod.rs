//! Shared helpers for the integration suites: a tiny deterministic RNG and
//! two independent oracles (fixed-point interval arithmetic for quadratics,
//! integer Farey search for hallway feasibility). The oracles deliberately
//! avoid the library's own numeric and geometry code.

#![allow(dead_code)]

use std::cmp::Ordering;

/// SplitMix64. Deterministic, seedable, good enough for test sweeps.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n`. Modulo bias is irrelevant at test scales.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Fixed-point interval oracle for values of the form (a + b*sqrt(d)) / r.
///
/// Everything is scaled by 2^60 and carried in i128, so each value is pinned
/// to an interval of width a few units of 2^-60. Verdicts are only issued
/// when the intervals are disjoint (comparison) or pin the same integer
/// (floor); otherwise the oracle reports inconclusive.
pub mod interval_oracle {
    use super::Ordering;

    const SHIFT: u32 = 60;

    /// Bounds on sqrt(d) * 2^60 for d >= 0.
    fn sqrt_bounds(d: u64) -> (i128, i128) {
        // isqrt returns floor(sqrt(d * 2^120)) = floor(sqrt(d) * 2^60).
        let lo = ((d as u128) << (2 * SHIFT)).isqrt() as i128;
        (lo, lo + 1)
    }

    fn div_floor(a: i128, b: i128) -> i128 {
        assert!(b > 0);
        let q = a / b;
        if a % b != 0 && a < 0 {
            q - 1
        } else {
            q
        }
    }

    fn div_ceil(a: i128, b: i128) -> i128 {
        assert!(b > 0);
        let q = a / b;
        if a % b != 0 && a > 0 {
            q + 1
        } else {
            q
        }
    }

    /// Outward-rounded bounds on ((a + b*sqrt(d)) / r) * 2^60.
    ///
    /// Inputs must be small enough that |a|*2^60 + |b|*sqrt(d)*2^60 fits in
    /// i128 with room to spare; the test sweeps stay far below that.
    pub fn value_bounds(a: i64, b: i64, d: u64, r: i64) -> (i128, i128) {
        assert!(r > 0);
        let (s_lo, s_hi) = sqrt_bounds(d);
        let a_scaled = (a as i128) << SHIFT;
        let (t_lo, t_hi) = if b >= 0 {
            (a_scaled + b as i128 * s_lo, a_scaled + b as i128 * s_hi)
        } else {
            (a_scaled + b as i128 * s_hi, a_scaled + b as i128 * s_lo)
        };
        (div_floor(t_lo, r as i128), div_ceil(t_hi, r as i128))
    }

    /// Compare two quadratic values, if the intervals separate them.
    pub fn compare(x: (i64, i64, u64, i64), y: (i64, i64, u64, i64)) -> Option<Ordering> {
        let (xlo, xhi) = value_bounds(x.0, x.1, x.2, x.3);
        let (ylo, yhi) = value_bounds(y.0, y.1, y.2, y.3);
        if xhi < ylo {
            Some(Ordering::Less)
        } else if xlo > yhi {
            Some(Ordering::Greater)
        } else if xlo == xhi && ylo == yhi && xlo == ylo {
            // Both intervals degenerate to the same point (rational inputs).
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Floor of a quadratic value, if both interval ends agree on it.
    pub fn floor(a: i64, b: i64, d: u64, r: i64) -> Option<i128> {
        let (lo, hi) = value_bounds(a, b, d, r);
        let f_lo = lo >> SHIFT;
        let f_hi = hi >> SHIFT;
        if f_lo == f_hi {
            Some(f_lo)
        } else {
            None
        }
    }
}

/// Brute-force feasibility oracle for finite hallways given as binary words.
///
/// A word is feasible exactly when some rational slope p/q with q <= n admits
/// a sight line, so an exhaustive Farey scan decides it. At fixed p/q the
/// intercept constraints
///     d_i < alpha*i + beta < d_i + 1
/// become integer bounds on q*beta, so the whole check is integer-only and
/// shares nothing with the library's polygon code.
pub mod feasibility_oracle {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        a = a.abs();
        b = b.abs();
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    /// Does any line pass the hallway of `bits` (letters 0/1)?
    pub fn word_is_feasible(bits: &[u8]) -> bool {
        let mut lefts = Vec::with_capacity(bits.len() + 1);
        let mut acc: i64 = 0;
        lefts.push(acc);
        for &b in bits {
            acc += b as i64;
            lefts.push(acc);
        }
        let n = lefts.len() as i64;
        // Binary letters keep every admissible slope inside (-1, 2).
        for q in 1..=n {
            for p in (-q + 1)..=(2 * q - 1) {
                if gcd(p, q) != 1 {
                    continue;
                }
                // q*beta must lie strictly between these integers for all i.
                let mut lo = i64::MIN;
                let mut hi = i64::MAX;
                for (i, &d) in lefts.iter().enumerate() {
                    let i = i as i64;
                    lo = lo.max(d * q - p * i);
                    hi = hi.min((d + 1) * q - p * i);
                }
                if lo < hi {
                    return true;
                }
            }
        }
        false
    }
}
