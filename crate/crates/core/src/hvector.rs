//! h-vectors and biliaison types of ACM curves.
//!
//! An [`HVector`] is the second difference of the Hilbert function of an ACM
//! curve in P^3, stored trimmed (no trailing zeros). A [`BiliaisonType`] is
//! the dual encoding `k_1 <= ... <= k_s` where `k_i` counts the entries of the
//! h-vector that are at least `s + 1 - i`.
//!
//! Everything here is plain integer arithmetic on immutable values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite h-vector `c_0, ..., c_b`, implicitly zero outside `[0, b]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(Vec<u32>);

/// Numerical invariants of an ACM curve read off its h-vector or biliaison type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    pub degree: u64,
    pub genus: i64,
    pub initial_degree: u32,
    pub second_ideal_degree: u32,
    pub speciality: i64,
    pub regularity: i64,
    pub top_index: i64,
}

impl HVector {
    /// Builds an h-vector, dropping trailing zeros.
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        HVector(entries)
    }

    /// The h-vector of the empty curve.
    pub fn empty() -> Self {
        HVector(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Entry at `n`, zero outside the stored range.
    pub fn at(&self, n: i64) -> u32 {
        if n < 0 {
            return 0;
        }
        self.0.get(n as usize).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// `sum_{i >= 2} (i - 1) c_i`. Meaningful for any sequence, not only
    /// admissible ones, so unions that are not of decreasing type can be
    /// measured too.
    pub fn genus(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .skip(2)
            .map(|(i, &c)| (i as i64 - 1) * i64::from(c))
            .sum()
    }

    /// `b = sup { n : c_n > 0 }`, or `None` for the empty vector.
    pub fn top_index(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// `inf { n : c_n < n + 1 }`.
    pub fn initial_degree(&self) -> u32 {
        (0..)
            .find(|&n| i64::from(self.at(n)) < n + 1)
            .expect("sequence is finite") as u32
    }

    /// `inf { n >= s : c_n < s }`.
    pub fn second_ideal_degree(&self) -> u32 {
        let s = self.initial_degree();
        (i64::from(s)..)
            .find(|&n| self.at(n) < s)
            .expect("sequence is finite") as u32
    }

    pub fn is_c2_admissible(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let s = self.initial_degree() as usize;
        if s == 0 {
            return false;
        }
        let ramp = self.0[..s].iter().enumerate().all(|(n, &c)| c as usize == n + 1);
        ramp && self.0[s - 1..].windows(2).all(|w| w[0] >= w[1])
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_c2_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(self.clone()))
        }
    }

    /// Once the sequence strictly drops past the ramp it keeps strictly
    /// dropping until it reaches zero.
    pub fn is_decreasing_type(&self) -> Result<bool> {
        self.require_admissible()?;
        let s = self.initial_degree() as i64;
        let b = self.0.len() as i64 - 1;
        let first_drop = (s - 1..=b).find(|&a| self.at(a) > self.at(a + 1));
        Ok(match first_drop {
            None => true,
            Some(a) => (a..=b).all(|n| self.at(n) > self.at(n + 1)),
        })
    }

    pub fn invariants(&self) -> Result<CurveInvariants> {
        self.require_admissible()?;
        let b = self.0.len() as i64 - 1;
        Ok(CurveInvariants {
            degree: self.degree(),
            genus: self.genus(),
            initial_degree: self.initial_degree(),
            second_ideal_degree: self.second_ideal_degree(),
            speciality: b - 2,
            regularity: b + 1,
            top_index: b,
        })
    }

    pub fn to_biliaison(&self) -> Result<BiliaisonType> {
        self.require_admissible()?;
        let s = self.initial_degree();
        let ks = (1..=s)
            .map(|i| {
                let threshold = s + 1 - i;
                self.0.iter().filter(|&&c| c >= threshold).count() as u32
            })
            .collect();
        Ok(BiliaisonType(ks))
    }

    /// True when a curve with this h-vector can sit on an irreducible surface
    /// of degree `m`, i.e. `m = s` or `m >= t`. The empty curve sits anywhere.
    pub fn fits_irreducible_surface(&self, m: u32) -> bool {
        self.is_empty() || m == self.initial_degree() || m >= self.second_ideal_degree()
    }
}

impl From<Vec<u32>> for HVector {
    fn from(v: Vec<u32>) -> Self {
        HVector::new(v)
    }
}

impl From<&[u32]> for HVector {
    fn from(v: &[u32]) -> Self {
        HVector::new(v.to_vec())
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses `INT ("," INT)*` with positive integers, no leading zeros, and
/// optional whitespace around the commas.
pub(crate) fn parse_positive_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|item| {
            let item = item.trim();
            if item.is_empty() {
                return Err(Error::Parse(format!("empty item in {s:?}")));
            }
            if !item.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("{item:?} is not a positive integer")));
            }
            if item.starts_with('0') {
                return Err(Error::Parse(format!(
                    "{item:?}: zero or leading zero not allowed"
                )));
            }
            item.parse::<u32>()
                .map_err(|e| Error::Parse(format!("{item:?}: {e}")))
        })
        .collect()
}

impl FromStr for HVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(HVector::new(parse_positive_list(s)?))
    }
}

/// Biliaison type `{k_1, ..., k_s}`: positive and nondecreasing. Types coming
/// from curves are strictly increasing; see [`BiliaisonType::is_strictly_increasing`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BiliaisonType(Vec<u32>);

/// Result of splitting a biliaison type at a gap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DavisSplit {
    /// Residual curve `B`, the first `t` entries.
    pub residual: BiliaisonType,
    /// Subcurve `D`, the remaining entries.
    pub subcurve: BiliaisonType,
    /// `#(B ∩ D) = deg(B) * s(D)`.
    pub count: u64,
}

impl BiliaisonType {
    pub fn new(ks: Vec<u32>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::InvalidBiliaison("empty sequence".into()));
        }
        if ks.contains(&0) {
            return Err(Error::InvalidBiliaison(format!("{ks:?} has a zero entry")));
        }
        if ks.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidBiliaison(format!("{ks:?} is not nondecreasing")));
        }
        Ok(BiliaisonType(ks))
    }

    /// Constructor for curve data: rejects anything not strictly increasing.
    pub fn strict(ks: Vec<u32>) -> Result<Self> {
        let lam = Self::new(ks)?;
        lam.require_strict()?;
        Ok(lam)
    }

    pub fn ks(&self) -> &[u32] {
        &self.0
    }

    /// `s`, the number of entries.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&k| u64::from(k)).sum()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    fn require_strict(&self) -> Result<()> {
        if self.is_strictly_increasing() {
            Ok(())
        } else {
            Err(Error::NotStrictlyIncreasing(self.clone()))
        }
    }

    /// The unique admissible h-vector with this biliaison type: the threshold
    /// set `{n : h(n) >= s + 1 - i}` is the run `[s - i, s - i + k_i - 1]`.
    pub fn to_hvector(&self) -> Result<HVector> {
        self.require_strict()?;
        let s = self.0.len();
        let runs: Vec<(usize, usize)> = self
            .0
            .iter()
            .enumerate()
            .map(|(idx, &k)| {
                let start = s - (idx + 1);
                (start, start + k as usize - 1)
            })
            .collect();
        let top = runs.iter().map(|r| r.1).max().unwrap_or(0);
        let entries = (0..=top)
            .map(|n| runs.iter().filter(|(lo, hi)| *lo <= n && n <= *hi).count() as u32)
            .collect();
        Ok(HVector::new(entries))
    }

    /// Invariants from the biliaison-type formulas alone:
    /// `d = Σk_i`, `p_a = 1 + Σ k_i(k_i-3)/2 + Σ (s-i) k_i`, `t = s + k_1 - 1`,
    /// `e = k_s - 3`, `reg = k_s`.
    pub fn invariants(&self) -> Result<CurveInvariants> {
        self.require_strict()?;
        let s = self.0.len() as i64;
        let ks: Vec<i64> = self.0.iter().map(|&k| i64::from(k)).collect();
        let genus = 1
            + ks.iter().map(|k| k * (k - 3) / 2).sum::<i64>()
            + ks
                .iter()
                .enumerate()
                .map(|(idx, k)| (s - (idx as i64 + 1)) * k)
                .sum::<i64>();
        let k_first = ks[0];
        let k_last = *ks.last().expect("non-empty");
        Ok(CurveInvariants {
            degree: self.degree(),
            genus,
            initial_degree: s as u32,
            second_ideal_degree: (s + k_first - 1) as u32,
            speciality: k_last - 3,
            regularity: k_last,
            top_index: k_last - 1,
        })
    }

    /// 1-based indices `i` with `k_{i+1} - k_i >= 3`.
    pub fn find_gaps(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] >= w[0] + 3)
            .map(|(idx, _)| idx + 1)
            .collect()
    }

    /// Splits at the gap `t` into the residual `{k_1..k_t}` and the subcurve
    /// `{k_{t+1}..k_s}` and counts their intersection.
    pub fn davis_split(&self, t: usize) -> Result<DavisSplit> {
        if !self.find_gaps().contains(&t) {
            return Err(Error::NotGapIndex {
                index: t,
                lam: self.clone(),
            });
        }
        let residual = BiliaisonType(self.0[..t].to_vec());
        let subcurve = BiliaisonType(self.0[t..].to_vec());
        let s_residual = residual.len() as u64;
        let s_sub = subcurve.len() as u64;
        let count = s_sub * residual.degree();
        debug_assert!(residual.degree() * s_sub < subcurve.degree() * s_residual);
        Ok(DavisSplit {
            residual,
            subcurve,
            count,
        })
    }
}

impl fmt::Display for BiliaisonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        write_joined(f, &self.0)?;
        f.write_str("}")
    }
}

impl FromStr for BiliaisonType {
    type Err = Error;

    /// Accepts `{1,2,4,6}` or the bare list `1,2,4,6`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(Error::Parse(format!("unbalanced braces in {s:?}"))),
        };
        BiliaisonType::new(parse_positive_list(inner)?)
    }
}

/// `p_a(C1 ∪ C2) - p_a(C1) - p_a(C2) + 1`. A negative value means no such
/// union exists.
pub fn intersection_from_union(pa_union: i64, pa1: i64, pa2: i64) -> i64 {
    pa_union - pa1 - pa2 + 1
}

/// Adds a hyperplane section of a surface of degree `k` (a biliaison of
/// height one): `h'(n) = h(n-1) + [0 <= n <= k-1]`. The empty curve is
/// accepted and yields the plane curve of degree `k`.
pub fn add_hyperplane(h: &HVector, k: u32) -> Result<HVector> {
    if k == 0 {
        return Err(Error::InvalidSurfaceDegree(k));
    }
    if !h.is_empty() {
        h.require_admissible()?;
    }
    let len = (h.len() + 1).max(k as usize);
    let entries = (0..len as i64)
        .map(|n| h.at(n - 1) + u32::from(n < i64::from(k)))
        .collect();
    let out = HVector::new(entries);
    if !out.is_c2_admissible() {
        return Err(Error::Hyperplane {
            op: "add",
            h: h.clone(),
            k,
            reason: format!("result {out} is not C2-admissible"),
        });
    }
    Ok(out)
}

/// Inverse of [`add_hyperplane`]: `h'(n) = h(n+1) - [0 <= n <= k-2]`. May
/// return the empty curve.
pub fn subtract_hyperplane(h: &HVector, k: u32) -> Result<HVector> {
    if k == 0 {
        return Err(Error::InvalidSurfaceDegree(k));
    }
    h.require_admissible()?;
    let len = h.len().max(k as usize - 1);
    let mut entries = Vec::with_capacity(len);
    for n in 0..len as i64 {
        let v = i64::from(h.at(n + 1)) - i64::from(n <= i64::from(k) - 2);
        if v < 0 {
            return Err(Error::Hyperplane {
                op: "subtract",
                h: h.clone(),
                k,
                reason: format!("entry {n} would be negative"),
            });
        }
        entries.push(v as u32);
    }
    let out = HVector::new(entries);
    if !out.is_empty() && !out.is_c2_admissible() {
        return Err(Error::Hyperplane {
            op: "subtract",
            h: h.clone(),
            k,
            reason: format!("result {out} is not C2-admissible"),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(xs: &[u32]) -> HVector {
        HVector::from(xs)
    }

    fn lam(xs: &[u32]) -> BiliaisonType {
        BiliaisonType::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(hv(&[1, 2, 3, 4, 2, 1]).is_c2_admissible());
        assert!(!hv(&[1, 3, 2]).is_c2_admissible());
        assert!(hv(&[1, 2, 3, 1, 1, 1, 1, 1]).is_c2_admissible());
        assert!(!HVector::empty().is_c2_admissible());
        assert!(!hv(&[2]).is_c2_admissible());
        assert!(!hv(&[1, 2, 1, 2]).is_c2_admissible());
    }

    #[test]
    fn trimming_and_parsing() {
        assert_eq!(HVector::new(vec![1, 2, 0, 0]), hv(&[1, 2]));
        assert_eq!("1, 2 ,3".parse::<HVector>().unwrap(), hv(&[1, 2, 3]));
        assert!("1,,2".parse::<HVector>().is_err());
        assert!("1,02".parse::<HVector>().is_err());
        assert!("1,0".parse::<HVector>().is_err());
        assert!("1,-2".parse::<HVector>().is_err());
        assert!("".parse::<HVector>().is_err());
        assert_eq!("{1,2,4,6}".parse::<BiliaisonType>().unwrap(), lam(&[1, 2, 4, 6]));
        assert_eq!("1,2".parse::<BiliaisonType>().unwrap(), lam(&[1, 2]));
        assert!("{1,2".parse::<BiliaisonType>().is_err());
        assert_eq!(hv(&[1, 2, 3]).to_string(), "1,2,3");
        assert_eq!(lam(&[1, 2, 8]).to_string(), "{1,2,8}");
    }

    #[test]
    fn decreasing_type() {
        assert!(hv(&[1, 2, 3, 4, 2, 1]).is_decreasing_type().unwrap());
        assert!(!hv(&[1, 2, 3, 1, 1, 1, 1, 1]).is_decreasing_type().unwrap());
        assert!(hv(&[1, 2, 2, 2, 2]).is_decreasing_type().unwrap());
        assert!(hv(&[1, 1, 1]).is_decreasing_type().unwrap());
        assert!(hv(&[1, 2, 3]).is_decreasing_type().unwrap());
        assert!(matches!(hv(&[1, 3]).is_decreasing_type(), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn invariants_examples() {
        let inv = hv(&[1, 2, 3, 4, 2, 1]).invariants().unwrap();
        assert_eq!(
            (inv.degree, inv.genus, inv.initial_degree, inv.second_ideal_degree),
            (13, 21, 4, 4)
        );
        assert_eq!((inv.speciality, inv.regularity, inv.top_index), (3, 6, 5));

        // a line: b = 0, so reg = b + 1 = 1 and e = -2
        let inv = hv(&[1]).invariants().unwrap();
        assert_eq!((inv.degree, inv.genus, inv.initial_degree, inv.second_ideal_degree), (1, 0, 1, 1));
        assert_eq!((inv.speciality, inv.regularity), (-2, 1));

        let inv = hv(&[1, 2, 2, 1]).invariants().unwrap();
        assert_eq!((inv.degree, inv.genus, inv.initial_degree, inv.second_ideal_degree), (6, 4, 2, 3));
        assert_eq!((inv.speciality, inv.regularity), (1, 4));

        assert!(hv(&[1, 3]).invariants().is_err());
    }

    #[test]
    fn biliaison_conversions() {
        assert_eq!(hv(&[1, 2, 3, 4, 2, 1]).to_biliaison().unwrap(), lam(&[1, 2, 4, 6]));
        assert_eq!(hv(&[1, 2, 3]).to_biliaison().unwrap(), lam(&[1, 2, 3]));
        assert_eq!(hv(&[1, 2, 3, 1, 1, 1, 1, 1]).to_biliaison().unwrap(), lam(&[1, 2, 8]));

        assert_eq!(lam(&[1, 2, 8]).to_hvector().unwrap(), hv(&[1, 2, 3, 1, 1, 1, 1, 1]));
        assert_eq!(lam(&[1]).to_hvector().unwrap(), hv(&[1]));
        assert_eq!(lam(&[2, 3, 4, 5]).to_hvector().unwrap(), hv(&[1, 2, 3, 4, 4]));
        assert!(matches!(
            lam(&[2, 2]).to_hvector(),
            Err(Error::NotStrictlyIncreasing(_))
        ));
        assert!(BiliaisonType::new(vec![3, 2]).is_err());
        assert!(BiliaisonType::new(vec![0, 2]).is_err());
        assert!(BiliaisonType::strict(vec![2, 2]).is_err());
    }

    #[test]
    fn lambda_invariants() {
        let inv = lam(&[1, 2, 4, 6]).invariants().unwrap();
        assert_eq!(inv, hv(&[1, 2, 3, 4, 2, 1]).invariants().unwrap());

        let inv = lam(&[1]).invariants().unwrap();
        assert_eq!((inv.degree, inv.genus, inv.initial_degree, inv.second_ideal_degree), (1, 0, 1, 1));
        assert_eq!((inv.speciality, inv.regularity), (-2, 1));
        assert_eq!(inv, hv(&[1]).invariants().unwrap());

        let inv = lam(&[2, 3]).invariants().unwrap();
        assert_eq!((inv.degree, inv.genus, inv.initial_degree, inv.second_ideal_degree), (5, 2, 2, 3));
        assert_eq!((inv.speciality, inv.regularity), (0, 3));
    }

    #[test]
    fn gaps_and_davis() {
        assert_eq!(lam(&[1, 2, 8]).find_gaps(), vec![2]);
        assert!(lam(&[1, 2, 4, 6]).find_gaps().is_empty());
        assert_eq!(lam(&[1, 5]).find_gaps(), vec![1]);

        let split = lam(&[1, 2, 8]).davis_split(2).unwrap();
        assert_eq!(split.residual, lam(&[1, 2]));
        assert_eq!(split.subcurve, lam(&[8]));
        assert_eq!(split.count, 3);

        let split = lam(&[1, 5]).davis_split(1).unwrap();
        assert_eq!((split.residual.ks(), split.subcurve.ks(), split.count), (&[1][..], &[5][..], 1));

        for t in 0..5 {
            assert!(matches!(
                lam(&[1, 2, 4, 6]).davis_split(t),
                Err(Error::NotGapIndex { .. })
            ));
        }
    }

    #[test]
    fn hyperplanes() {
        assert_eq!(add_hyperplane(&hv(&[1, 2]), 3).unwrap(), hv(&[1, 2, 3]));
        assert_eq!(add_hyperplane(&hv(&[1]), 1).unwrap(), hv(&[1, 1]));
        assert_eq!(add_hyperplane(&HVector::empty(), 4).unwrap(), hv(&[1, 1, 1, 1]));
        assert!(matches!(add_hyperplane(&hv(&[1]), 0), Err(Error::InvalidSurfaceDegree(0))));
        // 1,2,3 + plane line: 1,1,2,3 is not admissible
        assert!(matches!(add_hyperplane(&hv(&[1, 2, 3]), 1), Err(Error::Hyperplane { .. })));

        assert_eq!(subtract_hyperplane(&hv(&[1, 2, 3, 4, 4]), 4).unwrap(), hv(&[1, 2, 3, 4]));
        assert_eq!(subtract_hyperplane(&hv(&[1, 2, 3]), 3).unwrap(), hv(&[1, 2]));
        assert!(matches!(subtract_hyperplane(&hv(&[1, 2]), 5), Err(Error::Hyperplane { .. })));
        assert_eq!(subtract_hyperplane(&hv(&[1, 1, 1, 1]), 4).unwrap(), HVector::empty());
        assert!(subtract_hyperplane(&hv(&[1]), 0).is_err());
    }

    #[test]
    fn union_intersections() {
        assert_eq!(intersection_from_union(23, 0, 21), 3);
        assert_eq!(intersection_from_union(0, 0, 0), 1);
        assert_eq!(intersection_from_union(10, 0, 3), 8);
        assert!(intersection_from_union(0, 5, 5) < 0);
    }

    #[test]
    fn irreducible_surface_criterion() {
        // 1,2,2,2 has s = 2, t = 4: no irreducible cubic
        assert!(!hv(&[1, 2, 2, 2]).fits_irreducible_surface(3));
        assert!(hv(&[1, 2, 2, 2]).fits_irreducible_surface(2));
        assert!(hv(&[1, 2, 2, 2]).fits_irreducible_surface(4));
        assert!(hv(&[1, 2, 3, 1]).fits_irreducible_surface(3));
        assert!(HVector::empty().fits_irreducible_surface(7));
    }
}
