//! Complete-intersection h-vectors and linkage of h-vectors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::{add_hyperplane, intersection_from_union, HVector};

/// A complete intersection `m x n` used to link curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageFrame {
    pub m: u32,
    pub n: u32,
    pub h_ci: HVector,
}

impl LinkageFrame {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        Ok(LinkageFrame {
            m,
            n,
            h_ci: ci_hvector(m, n)?,
        })
    }

    /// Residual of `h` in this complete intersection.
    pub fn link(&self, h: &HVector) -> Result<HVector> {
        if !h.is_c2_admissible() {
            return Err(Error::NotAdmissible(h.clone()));
        }
        let (m, n) = (self.m, self.n);
        let top = i64::from(m + n) - 2;
        let fail = |reason: String| Error::Linkage {
            h: h.clone(),
            m,
            n,
            reason,
        };
        if h.len() as i64 > top + 1 {
            return Err(fail(format!(
                "entry {} of h lies beyond the top index {top} of the complete intersection",
                h.len() - 1
            )));
        }
        let mut entries = Vec::with_capacity(top as usize + 1);
        for l in 0..=top {
            let v = i64::from(self.h_ci.at(l)) - i64::from(h.at(top - l));
            if v < 0 {
                return Err(fail(format!("residual entry {l} would be {v}")));
            }
            entries.push(v as u32);
        }
        let out = HVector::new(entries);
        if out.is_empty() {
            return Err(fail("the residual is empty".into()));
        }
        if !out.is_c2_admissible() {
            return Err(fail(format!("residual {out} is not C2-admissible")));
        }
        Ok(out)
    }
}

/// h-vector of the complete intersection `m x n`: `l + 1` up to `m - 1`, flat
/// at `m` up to `n - 1`, then down to zero at `m + n - 1`.
pub fn ci_hvector(m: u32, n: u32) -> Result<HVector> {
    if m == 0 || m > n {
        return Err(Error::InvalidDegrees { m, n });
    }
    let entries = (0..m + n - 1)
        .map(|l| (l + 1).min(m).min(m + n - 1 - l))
        .collect();
    Ok(HVector::new(entries))
}

/// `h_2(l) = h_{m,n}(l) - h_1(m + n - 2 - l)`.
pub fn link(h1: &HVector, m: u32, n: u32) -> Result<HVector> {
    LinkageFrame::new(m, n)?.link(h1)
}

/// Clause-by-clause outcome of the numerical constraints on a linked pair
/// with `m = s(h1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageClauses {
    /// `b2 <= n - 2`.
    pub top_bounded: bool,
    /// Present only when `s2 < s1`.
    pub smaller_residual: Option<SmallerResidualClauses>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallerResidualClauses {
    /// `n <= b1 + 1`.
    pub n_le_b1_plus_1: bool,
    /// `b2 < b1`.
    pub b2_lt_b1: bool,
    /// `t2 <= m`.
    pub t2_le_m: bool,
}

impl LinkageClauses {
    pub fn all_hold(&self) -> bool {
        self.top_bounded
            && self
                .smaller_residual
                .is_none_or(|c| c.n_le_b1_plus_1 && c.b2_lt_b1 && c.t2_le_m)
    }
}

pub fn check_linkage_clauses(h1: &HVector, h2: &HVector, m: u32, n: u32) -> Result<LinkageClauses> {
    let a = h1.invariants()?;
    if a.initial_degree != m {
        return Err(Error::Hypothesis(format!(
            "m = {m} must equal s(h1) = {}",
            a.initial_degree
        )));
    }
    let expected = link(h1, m, n)?;
    if &expected != h2 {
        return Err(Error::Hypothesis(format!(
            "{h2} is not linked to {h1} by {m}x{n} (residual is {expected})"
        )));
    }
    let b = h2.invariants()?;
    let smaller_residual = (b.initial_degree < a.initial_degree).then(|| SmallerResidualClauses {
        n_le_b1_plus_1: i64::from(n) <= a.top_index + 1,
        b2_lt_b1: b.top_index < a.top_index,
        t2_le_m: b.second_ideal_degree <= m,
    });
    Ok(LinkageClauses {
        top_bounded: b.top_index <= i64::from(n) - 2,
        smaller_residual,
    })
}

/// Intersection of `h1` with its residual in `m x n`, `m = s(h1)`. The union
/// is the complete intersection, which maximizes the count for this pair.
///
/// Frames with `m > s(h1)` are refused: linking there need not give the
/// maximum for the two h-vectors.
pub fn linked_intersection(h1: &HVector, m: u32, n: u32) -> Result<i64> {
    let s1 = h1.invariants()?.initial_degree;
    if m != s1 {
        return Err(Error::Hypothesis(format!(
            "m = {m} must equal s(h1) = {s1}"
        )));
    }
    let frame = LinkageFrame::new(m, n)?;
    let h2 = frame.link(h1)?;
    Ok(intersection_from_union(
        frame.h_ci.genus(),
        h1.genus(),
        h2.genus(),
    ))
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(s+1, 2) t - C(s+1, 3)` points for the curves `1 2 .. s` and `1 2 .. t`.
pub fn ladder_intersection(s: u32, t: u32) -> Result<i64> {
    if s == 0 || s > t {
        return Err(Error::OutOfRange(format!("need 1 <= s <= t, got s={s} t={t}")));
    }
    let (s, t) = (i64::from(s), i64::from(t));
    Ok(choose(s + 1, 2) * t - choose(s + 1, 3))
}

/// Union h-vector `1 2 .. t s .. 2 1`, built from the `s x (s+1)` complete
/// intersection by one hyperplane of degree `k` for each `k = s+1 ..= t`.
pub fn ladder_union(s: u32, t: u32) -> Result<HVector> {
    if s == 0 || s > t {
        return Err(Error::OutOfRange(format!("need 1 <= s <= t, got s={s} t={t}")));
    }
    (s + 1..=t).try_fold(ci_hvector(s, s + 1)?, |h, k| add_hyperplane(&h, k))
}
