//! Unions of ordinary ACM curves.
//!
//! An ordinary h-vector is `1, 2, .., s, a` with `0 <= a <= s`, the h-vector
//! of general points in the plane. For two of them with the same `s` the
//! union with the most intersection points has a closed form; unequal initial
//! degrees are reduced to that case by peeling hyperplane sections off the
//! larger curve and adding them back afterwards.

use serde::{Deserialize, Serialize};

use crate::bounds::gmax;
use crate::error::{Error, Result};
use crate::hvector::{add_hyperplane, intersection_from_union, subtract_hyperplane, HVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrdinaryCurve {
    pub s: u32,
    pub a: u32,
}

impl OrdinaryCurve {
    pub fn new(s: u32, a: u32) -> Result<Self> {
        if s == 0 || a > s {
            return Err(Error::OutOfRange(format!(
                "ordinary curve needs s >= 1 and 0 <= a <= s, got s={s} a={a}"
            )));
        }
        Ok(OrdinaryCurve { s, a })
    }

    pub fn hvector(&self) -> HVector {
        let mut v: Vec<u32> = (1..=self.s).collect();
        v.push(self.a);
        HVector::new(v)
    }

    /// Reads `(s, a)` back from an h-vector; `s` is its initial degree.
    pub fn from_hvector(h: &HVector) -> Result<Self> {
        if !h.is_c2_admissible() {
            return Err(Error::NotOrdinary(h.clone()));
        }
        let s = h.initial_degree();
        let e = h.entries();
        let a = match e.len() as u32 {
            len if len == s => 0,
            len if len == s + 1 => e[s as usize],
            _ => return Err(Error::NotOrdinary(h.clone())),
        };
        OrdinaryCurve::new(s, a)
    }
}

pub fn ordinary_h(s: u32, a: u32) -> Result<HVector> {
    Ok(OrdinaryCurve::new(s, a)?.hvector())
}

/// The three shapes of the closed form, by `c = a + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnionCase {
    /// `c = 0`
    #[serde(rename = "i")]
    I,
    /// `0 < c <= s`
    #[serde(rename = "ii")]
    II,
    /// `s < c <= 2s`
    #[serde(rename = "iii")]
    III,
}

impl UnionCase {
    pub fn tag(self) -> &'static str {
        match self {
            UnionCase::I => "i",
            UnionCase::II => "ii",
            UnionCase::III => "iii",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionConstruction {
    pub h3: HVector,
    /// Union forced onto an irreducible surface of degree `s + 1`.
    pub restricted: bool,
    pub case_tag: UnionCase,
    /// The value deleted from the descending part, 0 if none.
    pub omitted_value: u32,
}

/// Closed-form union of `1..s,a` and `1..s,b`.
///
/// Built as the ramp `1..s`, the case's plateau, the run `s-1, .., 1`, minus
/// one entry equal to the omitted value (which can sit in the plateau when it
/// exceeds `s - 1`).
///
/// # Panics
///
/// If the construction breaks its own degree, shape, or maximal-genus
/// identities; that is a bug here, not bad input.
pub fn union_ordinary(s: u32, a: u32, b: u32, restricted: bool) -> Result<UnionConstruction> {
    OrdinaryCurve::new(s, a)?;
    OrdinaryCurve::new(s, b)?;
    let c = i64::from(a + b);
    let si = i64::from(s);
    let case = if c == 0 {
        UnionCase::I
    } else if c <= si {
        UnionCase::II
    } else {
        UnionCase::III
    };
    let (plateau, hat): (Vec<u32>, i64) = match (case, restricted) {
        (UnionCase::I, _) => (vec![s], 0),
        (UnionCase::II, false) => (vec![s, s], si - c),
        (UnionCase::II, true) => (vec![s + 1, s], si + 1 - c),
        (UnionCase::III, false) => (vec![s, s, s], 2 * si - c),
        (UnionCase::III, true) => (vec![s + 1, s + 1, s], 2 * si + 2 - c),
    };
    let mut tail = plateau;
    tail.extend((1..s).rev());
    let omitted_value = if hat >= 1 {
        let pos = tail
            .iter()
            .position(|&v| i64::from(v) == hat)
            .unwrap_or_else(|| panic!("omitted value {hat} missing from {tail:?}"));
        tail.remove(pos);
        hat as u32
    } else {
        0
    };
    let mut seq: Vec<u32> = (1..=s).collect();
    seq.extend(tail);
    let h3 = HVector::new(seq);

    let degree = u64::from(s) * u64::from(s) + u64::from(s) + c as u64;
    assert_eq!(h3.degree(), degree, "degree identity broken for {h3}");
    assert!(
        h3.is_decreasing_type().unwrap_or(false),
        "{h3} is not of decreasing type"
    );
    if !restricted {
        assert_eq!(
            h3.genus(),
            gmax(degree, s).genus,
            "{h3} does not reach the maximal genus"
        );
    }
    Ok(UnionConstruction {
        h3,
        restricted,
        case_tag: case,
        omitted_value,
    })
}

pub fn ordinary_intersection(s: u32, a: u32, b: u32, restricted: bool) -> Result<i64> {
    let u = union_ordinary(s, a, b, restricted)?;
    Ok(intersection_from_union(
        u.h3.genus(),
        ordinary_h(s, a)?.genus(),
        ordinary_h(s, b)?.genus(),
    ))
}

/// Why a reduced union is believed to be maximal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certification {
    /// The union itself reaches `G_CM(degree, initial_degree)`.
    MaximalGenus { degree: u64, initial_degree: u32 },
    /// An intermediate union reaches `G_CM`; every later step only adds
    /// hyperplane sections on the same surface.
    Stepwise {
        step: HVector,
        degree: u64,
        initial_degree: u32,
    },
    /// Neither applies.
    Heuristic,
}

impl Certification {
    pub fn is_heuristic(&self) -> bool {
        matches!(self, Certification::Heuristic)
    }

    /// First hit scanning from the final union backwards.
    fn of_chain(chain: &[HVector]) -> Self {
        let reaches = |h: &HVector| {
            let s = h.initial_degree();
            let g = gmax(h.degree(), s);
            g.feasible && g.genus == h.genus()
        };
        let Some(last) = chain.last() else {
            return Certification::Heuristic;
        };
        if reaches(last) {
            return Certification::MaximalGenus {
                degree: last.degree(),
                initial_degree: last.initial_degree(),
            };
        }
        chain
            .iter()
            .rev()
            .skip(1)
            .find(|h| reaches(h))
            .map(|h| Certification::Stepwise {
                step: h.clone(),
                degree: h.degree(),
                initial_degree: h.initial_degree(),
            })
            .unwrap_or(Certification::Heuristic)
    }
}

/// Outcome of a reduce-combine-readd construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedUnion {
    pub union: HVector,
    /// Degrees of the hyperplanes peeled off, in peeling order.
    pub hyperplanes: Vec<u32>,
    /// What the larger curve was reduced to.
    pub reduced: HVector,
    /// Base union the hyperplanes were added back to.
    pub base: HVector,
    /// Closed-form case used at the base, if any.
    pub base_case: Option<UnionCase>,
    /// The restricted closed form had to replace the unrestricted one.
    pub restricted: bool,
    /// Base union followed by every intermediate union, ending in `union`.
    pub chain: Vec<HVector>,
    pub intersection: i64,
    pub certification: Certification,
}

/// Adds the hyperplanes back, requiring at each step that the current union
/// sits on an irreducible surface of that degree.
fn readd(base: &HVector, degrees: impl Iterator<Item = u32>) -> Option<Vec<HVector>> {
    let mut chain = vec![base.clone()];
    for k in degrees {
        let cur = chain.last().expect("non-empty");
        if !cur.fits_irreducible_surface(k) {
            return None;
        }
        chain.push(add_hyperplane(cur, k).ok()?);
    }
    Some(chain)
}

/// Union of two ordinary h-vectors with `s1 <= s2` (the arguments are
/// swapped otherwise).
///
/// `h2` is reduced by hyperplanes of degree equal to its current initial
/// degree until it matches `s1`. The closed form combines the two, and the
/// hyperplanes are added back in reverse. When the unrestricted base union
/// does not fit on an irreducible surface of the first degree to add back,
/// the restricted base is used instead.
pub fn union_ordinary_general(h1: &HVector, h2: &HVector) -> Result<ReducedUnion> {
    let o1 = OrdinaryCurve::from_hvector(h1)?;
    let o2 = OrdinaryCurve::from_hvector(h2)?;
    if o1.s > o2.s {
        return union_ordinary_general(h2, h1);
    }
    let mut reduced = h2.clone();
    let mut hyperplanes = Vec::new();
    while reduced.initial_degree() > o1.s {
        let k = reduced.initial_degree();
        reduced = subtract_hyperplane(&reduced, k)
            .map_err(|e| Error::Reduction(format!("peeling {h2}: {e}")))?;
        hyperplanes.push(k);
    }
    let b = OrdinaryCurve::from_hvector(&reduced)?.a;

    let mut built = None;
    for restricted in [false, true] {
        let base = union_ordinary(o1.s, o1.a, b, restricted)?;
        if let Some(chain) = readd(&base.h3, hyperplanes.iter().rev().copied()) {
            built = Some((base, chain));
            break;
        }
    }
    let (base, chain) = built.ok_or_else(|| {
        Error::Reduction(format!(
            "no base union of {h1} and {reduced} accepts the hyperplanes {hyperplanes:?}"
        ))
    })?;
    let union = chain.last().expect("non-empty").clone();
    Ok(ReducedUnion {
        intersection: intersection_from_union(union.genus(), h1.genus(), h2.genus()),
        certification: Certification::of_chain(&chain),
        union,
        hyperplanes,
        reduced,
        base: base.h3,
        base_case: Some(base.case_tag),
        restricted: base.restricted,
        chain,
    })
}

/// Union of `h1` and `h2` on an integral surface of degree `m`, where each
/// curve must satisfy `m = s_i` or `m >= t_i`.
///
/// Hyperplanes of degree `m` are peeled from `h2` while that stays
/// numerically valid; the remainder is combined with `h1` (it is absorbed
/// when nothing remains, otherwise both must be ordinary) and the peeled
/// hyperplanes are added back.
pub fn union_on_surface(h1: &HVector, h2: &HVector, m: u32) -> Result<ReducedUnion> {
    for (name, h) in [("h1", h1), ("h2", h2)] {
        let inv = h.invariants()?;
        if !(m == inv.initial_degree || m >= inv.second_ideal_degree) {
            return Err(Error::Hypothesis(format!(
                "{name} = {h} has s = {} and t = {}; need m = s or m >= t, got m = {m}",
                inv.initial_degree, inv.second_ideal_degree
            )));
        }
    }
    let mut reduced = h2.clone();
    let mut peeled = 0usize;
    while !reduced.is_empty() {
        match subtract_hyperplane(&reduced, m) {
            Ok(next) => {
                reduced = next;
                peeled += 1;
            }
            Err(_) => break,
        }
    }

    let (mut chain, base_case, restricted) = if reduced.is_empty() {
        (vec![h1.clone()], None, false)
    } else {
        let (o1, o2) = (OrdinaryCurve::from_hvector(h1), OrdinaryCurve::from_hvector(&reduced));
        if o1.is_err() || o2.is_err() {
            return Err(Error::Reduction(format!(
                "{h1} and {reduced} are not both ordinary"
            )));
        }
        let inner = union_ordinary_general(h1, &reduced)?;
        (inner.chain, inner.base_case, inner.restricted)
    };
    let base = chain[0].clone();
    let inner_union = chain.last().expect("non-empty").clone();
    let tail = readd(&inner_union, std::iter::repeat_n(m, peeled)).ok_or_else(|| {
        Error::Reduction(format!(
            "cannot add {peeled} hyperplanes of degree {m} back to {inner_union}"
        ))
    })?;
    chain.extend(tail.into_iter().skip(1));
    let union = chain.last().expect("non-empty").clone();
    Ok(ReducedUnion {
        intersection: intersection_from_union(union.genus(), h1.genus(), h2.genus()),
        certification: Certification::of_chain(&chain),
        union,
        hyperplanes: vec![m; peeled],
        reduced,
        base,
        base_case,
        restricted,
        chain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(xs: &[u32]) -> HVector {
        HVector::from(xs)
    }

    #[test]
    fn ordinary_shapes() {
        assert_eq!(ordinary_h(2, 1).unwrap(), hv(&[1, 2, 1]));
        assert_eq!(ordinary_h(4, 0).unwrap(), hv(&[1, 2, 3, 4]));
        assert_eq!(ordinary_h(1, 1).unwrap(), hv(&[1, 1]));
        assert!(ordinary_h(2, 3).is_err());
        assert!(ordinary_h(0, 0).is_err());
        assert_eq!(OrdinaryCurve::from_hvector(&hv(&[1, 2, 2])).unwrap(), OrdinaryCurve { s: 2, a: 2 });
        assert_eq!(OrdinaryCurve::from_hvector(&hv(&[1, 2, 3])).unwrap(), OrdinaryCurve { s: 3, a: 0 });
        assert!(OrdinaryCurve::from_hvector(&hv(&[1, 2, 2, 1])).is_err());
    }

    #[test]
    fn base_cases_at_s1() {
        assert_eq!(union_ordinary(1, 1, 1, false).unwrap().h3, hv(&[1, 1, 1, 1]));
        assert_eq!(union_ordinary(1, 1, 1, true).unwrap().h3, hv(&[1, 2, 1]));
        assert_eq!(union_ordinary(1, 0, 1, false).unwrap().h3, hv(&[1, 1, 1]));
        assert_eq!(union_ordinary(1, 0, 1, true).unwrap().h3, hv(&[1, 2]));
        assert_eq!(union_ordinary(1, 0, 0, false).unwrap().h3, hv(&[1, 1]));
    }

    #[test]
    fn closed_form_examples() {
        for restricted in [false, true] {
            let u = union_ordinary(2, 0, 0, restricted).unwrap();
            assert_eq!(u.h3, hv(&[1, 2, 2, 1]));
            assert_eq!(u.case_tag, UnionCase::I);
        }
        let u = union_ordinary(4, 2, 3, false).unwrap();
        assert_eq!(u.h3, hv(&[1, 2, 3, 4, 4, 4, 4, 2, 1]));
        assert_eq!((u.case_tag, u.omitted_value), (UnionCase::III, 3));
        // the omitted s+1 sits in the plateau
        let u = union_ordinary(2, 1, 2, true).unwrap();
        assert_eq!(u.h3, hv(&[1, 2, 3, 2, 1]));
        assert_eq!(u.omitted_value, 3);
        assert!(union_ordinary(2, 3, 0, false).is_err());
    }

    #[test]
    fn intersections() {
        assert_eq!(ordinary_intersection(1, 1, 1, true).unwrap(), 2);
        assert_eq!(ordinary_intersection(1, 1, 1, false).unwrap(), 4);
        assert_eq!(ordinary_intersection(2, 0, 0, false).unwrap(), 5);
        assert_eq!(ordinary_intersection(2, 0, 0, true).unwrap(), 5);
    }

    #[test]
    fn general_multisecant() {
        let r = union_ordinary_general(&hv(&[1]), &hv(&[1, 2, 3, 4, 4])).unwrap();
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 4, 1]));
        assert_eq!(r.intersection, 5);
        assert_eq!(r.hyperplanes, vec![4, 4, 3, 2]);
        assert_eq!(r.reduced, hv(&[1]));
        assert_eq!(r.base, hv(&[1, 1]));
        assert!(!r.restricted);
        assert_eq!(
            r.certification,
            Certification::Stepwise {
                step: hv(&[1, 2, 3, 4, 1]),
                degree: 11,
                initial_degree: 4
            }
        );
    }

    #[test]
    fn general_depends_on_a_and_b() {
        let r = union_ordinary_general(&hv(&[1, 2]), &hv(&[1, 2, 3, 4, 5, 5])).unwrap();
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 5, 5, 2, 1]));
        assert_eq!(r.hyperplanes, vec![5, 5, 4, 3]);
        assert_eq!(r.base, hv(&[1, 2, 2, 1]));
        assert!(matches!(r.certification, Certification::Stepwise { degree: 18, initial_degree: 5, .. }));

        let r = union_ordinary_general(&hv(&[1, 2, 1]), &hv(&[1, 2, 3, 4, 5, 4])).unwrap();
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 5, 4, 3, 1]));
        assert_eq!(r.hyperplanes, vec![5, 4, 4, 3]);
        assert_eq!(r.base, hv(&[1, 2, 3, 1]));
        assert!(r.restricted);
        assert_eq!(
            r.certification,
            Certification::MaximalGenus {
                degree: 23,
                initial_degree: 5
            }
        );
    }

    #[test]
    fn general_swaps_arguments() {
        let a = union_ordinary_general(&hv(&[1, 2, 3, 4, 4]), &hv(&[1])).unwrap();
        assert_eq!(a.union, hv(&[1, 2, 3, 4, 4, 1]));
        assert!(union_ordinary_general(&hv(&[1, 2, 2, 1]), &hv(&[1])).is_err());
    }

    #[test]
    fn on_surface_examples() {
        let h1 = hv(&[1, 2, 3, 4]);
        let h2 = hv(&[1, 2, 3, 4, 3, 2, 1]);

        let r = union_on_surface(&h1, &h2, 4).unwrap();
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 4, 4, 4, 4]));
        assert_eq!(r.intersection, 40);
        assert_eq!(r.hyperplanes, vec![4; 4]);
        assert!(r.reduced.is_empty());

        let r = union_on_surface(&h1, &h2, 5).unwrap();
        assert_eq!(r.reduced, hv(&[1]));
        assert_eq!(r.chain[r.chain.len() - 4], hv(&[1, 2, 3, 4, 1]));
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 5, 5, 5, 1]));

        let r = union_on_surface(&h1, &h2, 6).unwrap();
        assert_eq!(r.reduced, hv(&[1, 2, 1]));
        assert_eq!(r.chain[r.chain.len() - 3], hv(&[1, 2, 3, 4, 3, 1]));
        assert_eq!(r.union, hv(&[1, 2, 3, 4, 5, 6, 4, 1]));

        // 1,2,2,2 has s = 2, t = 4
        assert!(matches!(
            union_on_surface(&hv(&[1, 2, 2, 2]), &h2, 3),
            Err(Error::Hypothesis(_))
        ));
    }
}
