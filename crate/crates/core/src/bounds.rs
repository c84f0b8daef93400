//! Maximal genus `G_CM(d, s)` and bounds on the number of points in which two
//! ACM curves can meet.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvector::{add_hyperplane, intersection_from_union, CurveInvariants, HVector};
use crate::liaison::ci_hvector;

/// Which bound produced a [`BoundReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "CI-a")]
    CiA,
    #[serde(rename = "CI-b")]
    CiB,
    #[serde(rename = "CI-c")]
    CiC,
    #[serde(rename = "CI-d")]
    CiD,
    #[serde(rename = "Main-a")]
    MainA,
    #[serde(rename = "Main-b")]
    MainB,
    Refined,
}

impl Rule {
    pub fn tag(self) -> &'static str {
        match self {
            Rule::CiA => "CI-a",
            Rule::CiB => "CI-b",
            Rule::CiC => "CI-c",
            Rule::CiD => "CI-d",
            Rule::MainA => "Main-a",
            Rule::MainB => "Main-b",
            Rule::Refined => "Refined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    /// Points for the CI and `Main-b` rules, genus for `Main-a` and `Refined`.
    pub bound: i64,
    pub rule: Rule,
    /// h-vector of a union attaining the bound, when one is known.
    pub witness: Option<HVector>,
    /// Attaining the bound forces the union to be ACM.
    pub acm_if_attained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmaxResult {
    pub genus: i64,
    /// Empty when infeasible.
    pub witness: HVector,
    pub feasible: bool,
}

/// Largest arithmetic genus of a decreasing-type h-vector with degree `d` and
/// initial degree exactly `s`; `genus = 0, feasible = false` when
/// `d < s(s+1)/2`.
///
/// Such an h-vector is the ramp `1..s`, some number `p >= 0` of further `s`,
/// then a strictly decreasing run of distinct values from `{1..s-1}`. The
/// search runs over those subsets. Ties are broken towards the
/// lexicographically larger sequence.
pub fn gmax(d: u64, s: u32) -> GmaxResult {
    let infeasible = GmaxResult {
        genus: 0,
        witness: HVector::empty(),
        feasible: false,
    };
    let ramp = u64::from(s) * u64::from(s + 1) / 2;
    if s == 0 || d < ramp {
        return infeasible;
    }
    let remainder = d - ramp;
    let s64 = u64::from(s);
    let mut best: Option<(i64, HVector)> = None;
    for mask in 0u64..(1u64 << (s - 1)) {
        let values: Vec<u32> = (1..s).rev().filter(|v| mask >> (v - 1) & 1 == 1).collect();
        let sum: u64 = values.iter().map(|&v| u64::from(v)).sum();
        if sum > remainder || !(remainder - sum).is_multiple_of(s64) {
            continue;
        }
        let plateau = ((remainder - sum) / s64) as usize;
        let mut seq: Vec<u32> = (1..=s).collect();
        seq.extend(std::iter::repeat_n(s, plateau));
        seq.extend(values);
        let h = HVector::new(seq);
        let g = h.genus();
        let better = match &best {
            None => true,
            Some((bg, bh)) => g > *bg || (g == *bg && h > *bh),
        };
        if better {
            best = Some((g, h));
        }
    }
    match best {
        Some((genus, witness)) => GmaxResult {
            genus,
            witness,
            feasible: true,
        },
        None => infeasible,
    }
}

fn product(xs: &[u32]) -> i64 {
    xs.iter().map(|&x| i64::from(x)).product()
}

/// Orders each pair as `s <= t` and the pairs as `s1 <= s2` (ties on `s`
/// broken by `t`).
pub fn normalize_ci(c1: (u32, u32), c2: (u32, u32)) -> ((u32, u32), (u32, u32)) {
    let sort = |(a, b): (u32, u32)| if a <= b { (a, b) } else { (b, a) };
    let (c1, c2) = (sort(c1), sort(c2));
    if c1 <= c2 {
        (c1, c2)
    } else {
        (c2, c1)
    }
}

/// Every case whose hypotheses hold for the normalized pair. At
/// `t1 = t2 = s2` both `CI-b` and `CI-d` hold and give the same product.
pub fn ci_applicable_cases(c1: (u32, u32), c2: (u32, u32)) -> Vec<Rule> {
    let ((s1, t1), (s2, t2)) = normalize_ci(c1, c2);
    let mut out = Vec::new();
    if s1 == s2 {
        out.push(Rule::CiA);
    }
    if s1 < s2 && t1 >= t2 {
        out.push(Rule::CiB);
    }
    if s1 < s2 && s2 < t1 && t1 < t2 {
        out.push(Rule::CiC);
    }
    if s1 < s2 && t1 <= s2 {
        out.push(Rule::CiD);
    }
    out
}

/// Maximum intersection of complete intersections `s1 x t1` and `s2 x t2`,
/// with a union attaining it.
pub fn ci_bound(c1: (u32, u32), c2: (u32, u32)) -> Result<BoundReport> {
    if [c1.0, c1.1, c2.0, c2.1].contains(&0) {
        return Err(Error::OutOfRange(format!(
            "surface degrees must be positive, got {c1:?} and {c2:?}"
        )));
    }
    let ((s1, t1), (s2, t2)) = normalize_ci(c1, c2);
    let rule = if s1 == s2 {
        Rule::CiA
    } else if t1 >= t2 {
        Rule::CiB
    } else if t1 > s2 {
        Rule::CiC
    } else {
        Rule::CiD
    };
    let bound = match rule {
        Rule::CiA => product(&[s1, t1, t2]),
        Rule::CiB => product(&[s1, s2, t2]),
        Rule::CiC => product(&[s1, s2, t1]),
        _ => product(&[s1, t1, t2]),
    };
    let witness = ci_witness(rule, (s1, t1), (s2, t2));
    Ok(BoundReport {
        bound,
        rule,
        witness,
        acm_if_attained: true,
    })
}

/// Union realizing the bound: a complete intersection for `CI-a`, otherwise
/// one curve plus a multiple of the hyperplane class on a surface through it.
fn ci_witness(rule: Rule, (s1, t1): (u32, u32), (s2, t2): (u32, u32)) -> Option<HVector> {
    let repeat_add = |start: HVector, k: u32, times: u32| {
        (0..times).try_fold(start, |h, _| add_hyperplane(&h, k).ok())
    };
    match rule {
        Rule::CiA => ci_hvector(s1, t1 + t2).ok(),
        // C1 = s1 H on a surface of degree t1 through C2
        Rule::CiB => repeat_add(ci_hvector(s2, t2).ok()?, t1, s1),
        // C2 = s2 H on a surface of degree t2 through C1
        Rule::CiC => repeat_add(ci_hvector(s1, t1).ok()?, t2, s2),
        // C2 = t2 H on a surface of degree s2 through C1
        Rule::CiD => repeat_add(ci_hvector(s1, t1).ok()?, s2, t2),
        _ => None,
    }
}

fn checked_invariants(h: &HVector, label: &str) -> Result<CurveInvariants> {
    let inv = h.invariants()?;
    if !h.is_decreasing_type()? {
        return Err(Error::Hypothesis(format!(
            "{label} = {h} is not of decreasing type"
        )));
    }
    Ok(inv)
}

/// Whether the two biliaison types can be the halves of a type with a gap:
/// `t_i - s_i >= b_j + 3` for some `i != j`.
pub fn gap_possible(h1: &HVector, h2: &HVector) -> Result<bool> {
    let a = h1.invariants()?;
    let b = h2.invariants()?;
    let fits = |x: &CurveInvariants, y: &CurveInvariants| {
        i64::from(x.second_ideal_degree) - i64::from(x.initial_degree) >= y.top_index + 3
    };
    Ok(fits(&a, &b) || fits(&b, &a))
}

/// Both bounds for two integral ACM curves, with when each applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainBound {
    /// Genus bound `G_CM(d1+d2, max(s1,s2))`, valid when the union's hyperplane
    /// section has a biliaison type without gaps.
    pub genus_bound: BoundReport,
    /// The genus bound read as a point count. Negative means a gap-free union
    /// with these h-vectors cannot exist.
    pub points_from_genus: i64,
    /// Point bound `min(d1 s2, d2 s1)`, valid when the union's type has a gap
    /// or `s(C) = s1 + s2`.
    pub point_bound: BoundReport,
    pub gap_possible: bool,
}

pub fn main_bound(h1: &HVector, h2: &HVector) -> Result<MainBound> {
    let a = checked_invariants(h1, "h1")?;
    let b = checked_invariants(h2, "h2")?;
    let g = gmax(a.degree + b.degree, a.initial_degree.max(b.initial_degree));
    let genus_bound = BoundReport {
        bound: g.genus,
        rule: Rule::MainA,
        witness: g.feasible.then_some(g.witness),
        acm_if_attained: true,
    };
    let points = (a.degree * u64::from(b.initial_degree)).min(b.degree * u64::from(a.initial_degree));
    Ok(MainBound {
        points_from_genus: intersection_from_union(g.genus, a.genus, b.genus),
        genus_bound,
        point_bound: BoundReport {
            bound: points as i64,
            rule: Rule::MainB,
            witness: None,
            acm_if_attained: true,
        },
        gap_possible: gap_possible(h1, h2)?,
    })
}

/// Genus bound `G_CM(d1+d2, min(s1+s2, max(t1,t2)))` for `s1 != s2` and
/// `s_i < t_j` (or `s_i <= t_j` when `strict` is off).
pub fn refined_bound(h1: &HVector, h2: &HVector, strict: bool) -> Result<BoundReport> {
    let a = checked_invariants(h1, "h1")?;
    let b = checked_invariants(h2, "h2")?;
    if a.initial_degree == b.initial_degree {
        return Err(Error::Hypothesis(format!(
            "s1 = s2 = {} but the initial degrees must differ",
            a.initial_degree
        )));
    }
    let ss = [("s1", a.initial_degree), ("s2", b.initial_degree)];
    let ts = [("t1", a.second_ideal_degree), ("t2", b.second_ideal_degree)];
    for (sn, s) in ss {
        for (tn, t) in ts {
            let ok = if strict { s < t } else { s <= t };
            if !ok {
                let op = if strict { "<" } else { "<=" };
                return Err(Error::Hypothesis(format!("{sn} = {s} is not {op} {tn} = {t}")));
            }
        }
    }
    let s = (a.initial_degree + b.initial_degree)
        .min(a.second_ideal_degree.max(b.second_ideal_degree));
    let g = gmax(a.degree + b.degree, s);
    Ok(BoundReport {
        bound: g.genus,
        rule: Rule::Refined,
        witness: g.feasible.then_some(g.witness),
        acm_if_attained: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(xs: &[u32]) -> HVector {
        HVector::from(xs)
    }

    #[test]
    fn gmax_examples() {
        let r = gmax(11, 2);
        assert_eq!((r.genus, r.feasible), (20, true));
        assert_eq!(r.witness, hv(&[1, 2, 2, 2, 2, 2]));

        let r = gmax(13, 4);
        assert_eq!((r.genus, r.witness), (21, hv(&[1, 2, 3, 4, 2, 1])));

        let r = gmax(7, 4);
        assert_eq!((r.genus, r.feasible), (0, false));
        assert!(r.witness.is_empty());

        let r = gmax(19, 5);
        assert_eq!((r.genus, r.witness), (43, hv(&[1, 2, 3, 4, 5, 3, 1])));

        let r = gmax(21, 5);
        assert_eq!((r.genus, r.witness), (54, hv(&[1, 2, 3, 4, 5, 3, 2, 1])));

        assert!(!gmax(5, 0).feasible);
        assert_eq!(gmax(3, 2).genus, 0);
        assert!(gmax(3, 2).feasible);
    }

    #[test]
    fn ci_bound_examples() {
        let r = ci_bound((2, 2), (2, 3)).unwrap();
        assert_eq!((r.bound, r.rule), (12, Rule::CiA));
        let r = ci_bound((2, 5), (3, 3)).unwrap();
        assert_eq!((r.bound, r.rule), (18, Rule::CiB));
        assert_eq!(r.witness, Some(hv(&[1, 2, 3, 4, 5, 3, 1])));
        let r = ci_bound((1, 1), (4, 7)).unwrap();
        assert_eq!((r.bound, r.rule), (7, Rule::CiD));
        // argument order does not matter
        assert_eq!(ci_bound((7, 4), (1, 1)).unwrap().bound, 7);
        let r = ci_bound((2, 4), (3, 5)).unwrap();
        assert_eq!((r.bound, r.rule), (24, Rule::CiC));
        assert!(ci_bound((0, 1), (1, 1)).is_err());
        assert!(r.acm_if_attained);
    }

    #[test]
    fn ci_case_overlap_agrees() {
        // t1 = t2 = s2: both b and d apply
        assert_eq!(ci_applicable_cases((1, 3), (3, 3)), vec![Rule::CiB, Rule::CiD]);
    }

    #[test]
    fn gap_possible_examples() {
        assert!(gap_possible(&hv(&[1, 2]), &hv(&[1; 8])).unwrap());
        assert!(!gap_possible(&hv(&[1, 2, 3]), &hv(&[1, 2, 3])).unwrap());
        assert!(!gap_possible(&hv(&[1]), &hv(&[1])).unwrap());
        assert!(gap_possible(&hv(&[1, 3]), &hv(&[1])).is_err());
    }

    #[test]
    fn main_bound_examples() {
        let r = main_bound(&hv(&[1, 2]), &hv(&[1; 8])).unwrap();
        assert_eq!(r.point_bound.bound, 3);
        assert_eq!(r.point_bound.rule, Rule::MainB);
        assert_eq!(r.genus_bound.bound, 20);
        assert!(r.gap_possible);

        let r = main_bound(&hv(&[1, 2, 3]), &hv(&[1, 2, 3])).unwrap();
        assert_eq!(r.genus_bound.bound, 19);
        assert_eq!(r.genus_bound.witness, Some(hv(&[1, 2, 3, 3, 2, 1])));
        assert_eq!(r.points_from_genus, 14);

        let r = main_bound(&hv(&[1]), &hv(&[1])).unwrap();
        assert_eq!((r.genus_bound.bound, r.points_from_genus), (0, 1));

        assert!(matches!(
            main_bound(&hv(&[1, 2, 1, 1]), &hv(&[1])),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn refined_bound_examples() {
        let ci25 = ci_hvector(2, 5).unwrap();
        let ci26 = ci_hvector(2, 6).unwrap();
        let ci33 = ci_hvector(3, 3).unwrap();

        let r = refined_bound(&ci25, &ci33, false).unwrap();
        assert_eq!(r.bound, 43);
        assert_eq!(r.witness, Some(hv(&[1, 2, 3, 4, 5, 3, 1])));
        // s2 = t2 = 3 fails the strict reading
        let err = refined_bound(&ci25, &ci33, true).unwrap_err();
        assert!(err.to_string().contains("s2 = 3 is not < t2 = 3"), "{err}");

        let r = refined_bound(&ci26, &ci33, false).unwrap();
        assert_eq!(r.bound, 54);
        assert_eq!(r.witness, Some(hv(&[1, 2, 3, 4, 5, 3, 2, 1])));

        let err = refined_bound(&hv(&[1, 2]), &hv(&[1, 2, 2]), true).unwrap_err();
        assert!(err.to_string().contains("s1 = s2 = 2"), "{err}");
    }
}
