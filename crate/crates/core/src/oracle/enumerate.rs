//! Exhaustive enumeration of admissible h-vectors.
//!
//! Deliberately written without touching the shape analysis in `hvector` or
//! `bounds`: every admissible h-vector of degree `d` and initial degree `s`
//! is the ramp `1..s` followed by a partition of `d - s(s+1)/2` into parts of
//! size at most `s`, listed in nonincreasing order.

use serde::{Deserialize, Serialize};

use crate::hvector::HVector;

/// What to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub degree: u64,
    pub initial_degree: u32,
    pub decreasing_only: bool,
}

impl EnumSpec {
    pub fn all(degree: u64, initial_degree: u32) -> Self {
        EnumSpec {
            degree,
            initial_degree,
            decreasing_only: false,
        }
    }

    pub fn decreasing(degree: u64, initial_degree: u32) -> Self {
        EnumSpec {
            degree,
            initial_degree,
            decreasing_only: true,
        }
    }
}

/// Partitions of `total` into parts `<= max_part`, as nonincreasing
/// sequences, in ascending lexicographic order.
#[derive(Debug, Clone)]
struct Partitions {
    max_part: u32,
    current: Option<Vec<u32>>,
}

impl Partitions {
    fn new(total: u64, max_part: u32) -> Self {
        let current = if total > 0 && max_part == 0 {
            None
        } else {
            Some(vec![1; total as usize])
        };
        Partitions { max_part, current }
    }

    fn successor(a: &[u32], max_part: u32) -> Option<Vec<u32>> {
        let mut rest: u64 = 0;
        for i in (0..a.len()).rev() {
            let cap = if i == 0 { max_part } else { a[i - 1] };
            if rest >= 1 && a[i] < cap {
                let mut next = a[..i].to_vec();
                next.push(a[i] + 1);
                next.extend(std::iter::repeat_n(1, (rest - 1) as usize));
                return Some(next);
            }
            rest += u64::from(a[i]);
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        self.current = Self::successor(&out, self.max_part);
        Some(out)
    }
}

/// Definition check, independent of `HVector::is_decreasing_type`: after the
/// first strict drop every step is a strict drop or sits at zero.
pub fn has_decreasing_shape(seq: &[u32]) -> bool {
    let at = |n: usize| seq.get(n).copied().unwrap_or(0);
    match (0..seq.len()).find(|&a| at(a) > at(a + 1)) {
        None => true,
        Some(a) => (a..seq.len()).all(|n| at(n) > at(n + 1) || at(n) == 0),
    }
}

/// `Σ_{i>=2} (i-1) c_i`, kept local so the oracle shares no code path with the
/// module under test.
pub fn oracle_genus(seq: &[u32]) -> i64 {
    let mut g = 0i64;
    for (i, &c) in seq.iter().enumerate() {
        if i >= 2 {
            g += (i as i64 - 1) * i64::from(c);
        }
    }
    g
}

/// Lazily yields every C2-admissible h-vector with the given degree and
/// initial degree, each once, in lexicographic order.
pub fn enumerate(spec: EnumSpec) -> impl Iterator<Item = HVector> {
    let s = spec.initial_degree;
    let ramp_degree = u64::from(s) * u64::from(s + 1) / 2;
    let parts = if s == 0 || spec.degree < ramp_degree {
        None
    } else {
        Some(Partitions::new(spec.degree - ramp_degree, s))
    };
    let ramp: Vec<u32> = (1..=s).collect();
    parts
        .into_iter()
        .flatten()
        .map(move |tail| {
            let mut seq = ramp.clone();
            seq.extend(tail);
            seq
        })
        .filter(move |seq| !spec.decreasing_only || has_decreasing_shape(seq))
        .map(HVector::new)
}

/// Maximum genus over all decreasing-type h-vectors of degree `d` and initial
/// degree `s`, or `None` when there are none.
pub fn gmax_oracle(d: u64, s: u32) -> Option<i64> {
    enumerate(EnumSpec::decreasing(d, s))
        .map(|h| oracle_genus(h.entries()))
        .max()
}

/// Number of decreasing-type h-vectors predicted by the shape decomposition:
/// subsets of `{1..s-1}` with sum `≡ d - s(s+1)/2 (mod s)` and sum at most
/// that remainder.
pub fn decreasing_count_by_subsets(d: u64, s: u32) -> u64 {
    let ramp = u64::from(s) * u64::from(s + 1) / 2;
    if s == 0 || d < ramp {
        return 0;
    }
    let remainder = d - ramp;
    let s64 = u64::from(s);
    (0u64..1 << (s - 1))
        .filter(|mask| {
            let sum: u64 = (1..s64).filter(|v| mask >> (v - 1) & 1 == 1).sum();
            sum <= remainder && (remainder - sum).is_multiple_of(s64)
        })
        .count() as u64
}
