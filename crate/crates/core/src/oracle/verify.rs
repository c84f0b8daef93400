use std::fmt;

use serde::{Deserialize, Serialize};

use super::enumerate::{
    decreasing_count_by_subsets, enumerate, gmax_oracle, has_decreasing_shape, oracle_genus,
    EnumSpec,
};
use crate::bounds::{ci_bound, gmax, main_bound, refined_bound, GmaxResult, Rule};
use crate::error::Result;
use crate::hvector::{
    add_hyperplane, intersection_from_union, subtract_hyperplane, BiliaisonType, HVector,
};
use crate::liaison::{
    check_linkage_clauses, ci_hvector, ladder_intersection, ladder_union, link,
    linked_intersection,
};
use crate::ordinary::{
    ordinary_h, ordinary_intersection, union_on_surface, union_ordinary, union_ordinary_general,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Concatenates two reports; associative, with the empty report as unit.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
        self
    }

    pub fn failing_checks(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.failures.iter().map(|f| f.check.as_str()).collect();
        names.dedup();
        names
    }

    fn equal<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        input: impl fmt::Display,
        expected: T,
        got: Result<T>,
    ) {
        self.checks_run += 1;
        let ok = matches!(&got, Ok(v) if *v == expected);
        if !ok {
            self.failures.push(Failure {
                check: check.into(),
                input: input.to_string(),
                expected: expected.to_string(),
                got: match got {
                    Ok(v) => v.to_string(),
                    Err(e) => format!("error: {e}"),
                },
            });
        }
    }

    fn holds(&mut self, check: &str, input: impl fmt::Display, property: &str, ok: bool) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(Failure {
                check: check.into(),
                input: input.to_string(),
                expected: property.into(),
                got: "violated".into(),
            });
        }
    }
}

/// Grid sizes for [`Verifier::run`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest degree for `gmax`, enumeration and h-vector sweeps.
    pub dmax: u64,
    /// Largest initial degree for `gmax` and enumeration.
    pub smax: u32,
    /// Largest `m * n` for linkage frames.
    pub mn_max: u32,
    /// Largest degree of curves fed to linkage.
    pub link_dmax: u64,
    /// Largest `k_s` for biliaison-type sweeps.
    pub kmax: u32,
    /// Largest `t` for the ladder formula.
    pub ladder_tmax: u32,
    /// Largest `s` for ordinary unions.
    pub ordinary_smax: u32,
    /// Largest `t2` for complete-intersection chains.
    pub ci_tmax: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dmax: 40,
            smax: 6,
            mn_max: 48,
            link_dmax: 30,
            kmax: 12,
            ladder_tmax: 10,
            ordinary_smax: 8,
            ci_tmax: 8,
        }
    }
}

impl Limits {
    /// Every grid empty; only the fixed regression values run.
    pub fn none() -> Self {
        Limits {
            dmax: 0,
            smax: 0,
            mn_max: 0,
            link_dmax: 0,
            kmax: 0,
            ladder_tmax: 0,
            ordinary_smax: 0,
            ci_tmax: 0,
        }
    }
}

/// Runs the checks against a `gmax` implementation, normally
/// [`crate::bounds::gmax`]; tests swap in a broken one.
#[derive(Clone, Copy)]
pub struct Verifier {
    pub limits: Limits,
    pub gmax: fn(u64, u32) -> GmaxResult,
}

impl Verifier {
    pub fn new(limits: Limits) -> Self {
        Verifier { limits, gmax }
    }

    pub fn run(&self) -> VerificationReport {
        [
            self.check_gmax(),
            self.check_enumeration(),
            self.check_lambda(),
            self.check_gap_duality(),
            self.check_hyperplanes(),
            self.check_linkage(),
            self.check_ladder(),
            self.check_ordinary(),
            self.check_ci_chain(),
            self.check_davis(),
            self.check_regression(),
        ]
        .into_iter()
        .fold(VerificationReport::default(), VerificationReport::merge)
    }

    fn gmax_genus(&self, d: u64, s: u32) -> i64 {
        (self.gmax)(d, s).genus
    }

    /// `gmax` against the exhaustive maximum, witness sanity, and
    /// monotonicity in `s`.
    pub fn check_gmax(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for s in 1..=self.limits.smax {
            for d in ramp(s)..=self.limits.dmax {
                let got = (self.gmax)(d, s);
                let expected = gmax_oracle(d, s).expect("feasible past the ramp");
                let input = format!("d={d} s={s}");
                r.equal("gmax", &input, expected, Ok(got.genus));
                let w = got.witness.entries();
                r.holds(
                    "gmax-witness",
                    &input,
                    "witness has degree d, initial degree s, decreasing type and the reported genus",
                    got.feasible
                        && got.witness.degree() == d
                        && got.witness.initial_degree() == s
                        && has_decreasing_shape(w)
                        && oracle_genus(w) == got.genus,
                );
                if d >= ramp(s + 1) {
                    r.holds(
                        "gmax-monotone",
                        &input,
                        "G(d,s) >= G(d,s+1)",
                        got.genus >= self.gmax_genus(d, s + 1),
                    );
                }
            }
        }
        r
    }

    /// Decreasing-type counts against the subset decomposition.
    pub fn check_enumeration(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for s in 1..=self.limits.smax {
            for d in 0..=self.limits.dmax {
                let all: Vec<HVector> = enumerate(EnumSpec::decreasing(d, s)).collect();
                let input = format!("d={d} s={s}");
                r.equal(
                    "enumeration-count",
                    &input,
                    decreasing_count_by_subsets(d, s),
                    Ok(all.len() as u64),
                );
                r.holds(
                    "enumeration-distinct",
                    &input,
                    "strictly ascending output",
                    all.windows(2).all(|w| w[0] < w[1]),
                );
            }
        }
        r
    }

    /// `h <-> lambda` round trip and the two invariant formulas, over every
    /// strictly increasing type with `k_s <= kmax`.
    pub fn check_lambda(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for lam in strict_types(self.limits.kmax) {
            let h = match lam.to_hvector() {
                Ok(h) => h,
                Err(e) => {
                    r.equal::<String>("lambda-roundtrip", &lam, "an h-vector".into(), Err(e));
                    continue;
                }
            };
            r.equal("lambda-roundtrip", &lam, lam.to_string(), h.to_biliaison().map(|l| l.to_string()));
            match (lam.invariants(), h.invariants()) {
                (Ok(a), Ok(b)) => {
                    let key = |i: &crate::hvector::CurveInvariants| {
                        format!(
                            "d={} pa={} s={} t={} e={}",
                            i.degree, i.genus, i.initial_degree, i.second_ideal_degree, i.speciality
                        )
                    };
                    r.equal("lambda-invariants", &lam, key(&b), Ok(key(&a)));
                    r.holds(
                        "lambda-genus-oracle",
                        &lam,
                        "lambda genus equals the direct sum",
                        a.genus == oracle_genus(h.entries()),
                    );
                }
                (Err(e), _) | (_, Err(e)) => {
                    r.equal::<String>("lambda-invariants", &lam, "invariants".into(), Err(e))
                }
            }
        }
        r
    }

    /// Decreasing type exactly when the type is strict and has no gap.
    pub fn check_gap_duality(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for h in all_admissible(self.limits.dmax) {
            let lam = match h.to_biliaison() {
                Ok(l) => l,
                Err(e) => {
                    r.equal::<String>("gap-duality", &h, "a biliaison type".into(), Err(e));
                    continue;
                }
            };
            let lhs = has_decreasing_shape(h.entries());
            let rhs = lam.is_strictly_increasing() && lam.find_gaps().is_empty();
            r.equal("gap-duality", &h, lhs, Ok(rhs));
            r.equal("decreasing-type", &h, lhs, h.is_decreasing_type());
        }
        r
    }

    /// Adding then removing a hyperplane is the identity; degree moves by `k`
    /// and genus by `d - 1 + C(k-1, 2)`.
    pub fn check_hyperplanes(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for h in all_admissible(self.limits.dmax.min(20)) {
            for k in 1..=h.len() as u32 + 2 {
                let input = format!("h={h} k={k}");
                let Ok(up) = add_hyperplane(&h, k) else {
                    continue;
                };
                r.equal("hyperplane-inverse", &input, h.clone(), subtract_hyperplane(&up, k));
                r.equal("hyperplane-degree", &input, h.degree() + u64::from(k), Ok(up.degree()));
                let k = i64::from(k);
                let expected = h.genus() + h.degree() as i64 - 1 + (k - 1) * (k - 2) / 2;
                r.equal("hyperplane-genus", &input, expected, up.invariants().map(|i| i.genus));
            }
        }
        r
    }

    /// Involution, degree additivity and the numerical clauses for frames
    /// `m = s(h)`.
    pub fn check_linkage(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for h in all_admissible(self.limits.link_dmax.min(self.limits.dmax)) {
            if !has_decreasing_shape(h.entries()) {
                continue;
            }
            let m = h.initial_degree();
            for n in m..=self.limits.mn_max / m {
                let Ok(h2) = link(&h, m, n) else {
                    continue;
                };
                let input = format!("h={h} m={m} n={n}");
                r.equal("linkage-involution", &input, h.clone(), link(&h2, m, n));
                r.equal(
                    "linkage-degree",
                    &input,
                    u64::from(m * n),
                    Ok(h.degree() + h2.degree()),
                );
                r.equal(
                    "linkage-clauses",
                    &input,
                    true,
                    check_linkage_clauses(&h, &h2, m, n).map(|c| c.all_hold()),
                );
            }
        }
        r
    }

    /// Binomial formula against the genus chain through `1..t, s..1`.
    pub fn check_ladder(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for t in 1..=self.limits.ladder_tmax {
            for s in 1..=t {
                let input = format!("s={s} t={t}");
                let mut seq: Vec<u32> = (1..=t).collect();
                seq.extend((1..=s).rev());
                let expected_union = HVector::new(seq);
                r.equal("ladder-union", &input, expected_union.clone(), ladder_union(s, t));
                let ramp_genus = |n: u32| oracle_genus(&(1..=n).collect::<Vec<_>>());
                let chain =
                    oracle_genus(expected_union.entries()) - ramp_genus(s) - ramp_genus(t) + 1;
                r.equal("ladder", &input, chain, ladder_intersection(s, t));
            }
        }
        r
    }

    /// Closed-form unions of ordinary curves: degree, shape, symmetry,
    /// maximal genus, and intersection counts inside the point bound.
    pub fn check_ordinary(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for s in 1..=self.limits.ordinary_smax {
            for a in 0..=s {
                for b in 0..=s {
                    for restricted in [false, true] {
                        let input = format!("s={s} a={a} b={b} restricted={restricted}");
                        let (u, swapped) = match (
                            union_ordinary(s, a, b, restricted),
                            union_ordinary(s, b, a, restricted),
                        ) {
                            (Ok(u), Ok(v)) => (u, v),
                            (Err(e), _) | (_, Err(e)) => {
                                r.equal::<String>("ordinary", &input, "a union".into(), Err(e));
                                continue;
                            }
                        };
                        let degree = u64::from(s * s + s + a + b);
                        r.equal("ordinary-degree", &input, degree, Ok(u.h3.degree()));
                        r.holds(
                            "ordinary-decreasing",
                            &input,
                            "decreasing type",
                            has_decreasing_shape(u.h3.entries()),
                        );
                        r.equal("ordinary-symmetry", &input, u.h3.clone(), Ok(swapped.h3));
                        let genus = oracle_genus(u.h3.entries());
                        let s3 = u.h3.initial_degree();
                        if !restricted {
                            r.equal("ordinary-genus", &input, self.gmax_genus(degree, s), Ok(genus));
                        } else if s3 == s + 1 {
                            r.equal(
                                "ordinary-restricted-genus",
                                &input,
                                self.gmax_genus(degree, s + 1),
                                Ok(genus),
                            );
                        }
                        r.holds(
                            "ordinary-supremacy",
                            &input,
                            "genus at most the exhaustive maximum",
                            gmax_oracle(degree, s3).is_some_and(|g| genus <= g),
                        );
                        let count = ordinary_intersection(s, a, b, restricted);
                        // the point bound needs s(C) = s1 + s2 here, the union having no gap
                        let bound = ordinary_h(s, a).and_then(|h1| {
                            let m = main_bound(&h1, &ordinary_h(s, b)?)?;
                            Ok(if s3 == 2 * s {
                                m.point_bound.bound
                            } else {
                                m.points_from_genus
                            })
                        });
                        r.holds(
                            "ordinary-intersection",
                            &input,
                            "0 <= intersection <= the applicable main bound",
                            matches!((count, bound), (Ok(c), Ok(p)) if 0 <= c && c <= p),
                        );
                    }
                }
            }
        }
        r
    }

    /// Complete intersections on a common surface of degree `s`: the product
    /// `s t1 t2` is the genus chain through `G(s(t1+t2), s)`.
    pub fn check_ci_chain(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        let n = self.limits.ci_tmax;
        for s in 1..=n {
            for t1 in s..=n {
                for t2 in t1..=n {
                    let input = format!("s={s} t1={t1} t2={t2}");
                    let product = i64::from(s * t1 * t2);
                    let chain = ci_hvector(s, t1).and_then(|c1| {
                        let c2 = ci_hvector(s, t2)?;
                        let g = self.gmax_genus(u64::from(s * (t1 + t2)), s);
                        Ok(intersection_from_union(g, c1.genus(), c2.genus()))
                    });
                    r.equal("ci-chain", &input, product, chain);
                    r.equal(
                        "ci-bound",
                        &input,
                        format!("{product} {}", Rule::CiA.tag()),
                        ci_bound((s, t1), (s, t2)).map(|b| format!("{} {}", b.bound, b.rule.tag())),
                    );
                }
            }
        }
        r
    }

    /// For each gap, `deg(B) s(D)` is the count, it is below `deg(D) s(B)`,
    /// and it agrees with the genus chain of the whole curve.
    pub fn check_davis(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        for lam in strict_types(self.limits.kmax) {
            for t in lam.find_gaps() {
                let input = format!("lam={lam} t={t}");
                let split = match lam.davis_split(t) {
                    Ok(sp) => sp,
                    Err(e) => {
                        r.equal::<String>("davis", &input, "a split".into(), Err(e));
                        continue;
                    }
                };
                let (b, d) = (&split.residual, &split.subcurve);
                let cross = b.degree() * d.len() as u64;
                r.equal("davis-count", &input, cross, Ok(split.count));
                r.holds(
                    "davis-inequality",
                    &input,
                    "deg(B) s(D) < deg(D) s(B)",
                    cross < d.degree() * b.len() as u64,
                );
                let chain = (|| {
                    let g = |l: &BiliaisonType| Ok::<_, crate::Error>(l.to_hvector()?.genus());
                    Ok(intersection_from_union(g(&lam)?, g(b)?, g(d)?))
                })();
                r.equal("davis-genus-chain", &input, split.count as i64, chain);
            }
        }
        r
    }

    /// Fixed published values.
    pub fn check_regression(&self) -> VerificationReport {
        let mut r = VerificationReport::default();
        let hv = |s: &str| s.parse::<HVector>().expect("literal");
        let wit = |d: u64, s: u32| {
            let g = (self.gmax)(d, s);
            format!("{} {}", g.genus, g.witness)
        };

        for (d, s, expected) in [
            (11, 2, "20 1,2,2,2,2,2"),
            (13, 4, "21 1,2,3,4,2,1"),
            (19, 5, "43 1,2,3,4,5,3,1"),
            (21, 5, "54 1,2,3,4,5,3,2,1"),
            (23, 5, "63 1,2,3,4,5,4,3,1"),
        ] {
            r.equal("regression-gmax", format!("d={d} s={s}"), expected.to_string(), Ok(wit(d, s)));
        }

        // twisted cubic and plane octic, whose union type has a gap
        let (h1, h2) = (hv("1,2"), hv("1,1,1,1,1,1,1,1"));
        let union = (|| {
            let mut ks = h1.to_biliaison()?.ks().to_vec();
            ks.extend_from_slice(h2.to_biliaison()?.ks());
            ks.sort_unstable();
            BiliaisonType::strict(ks)
        })();
        match union {
            Ok(lam) => {
                let u = lam.to_hvector();
                r.equal("regression-gapped-union", &lam, hv("1,2,3,1,1,1,1,1"), u.clone());
                r.equal("regression-gapped-union", &lam, 23, u.map(|h| h.genus()));
                r.equal("regression-gapped-union", &lam, 3, lam.davis_split(2).map(|s| s.count));
            }
            Err(e) => r.equal::<String>("regression-gapped-union", "1,2 ; 1^8", "{1,2,8}".into(), Err(e)),
        }
        r.equal(
            "regression-main-bound",
            "1,2 ; 1,1,1,1,1,1,1,1",
            3,
            main_bound(&h1, &h2).map(|m| m.point_bound.bound),
        );
        r.equal(
            "regression-main-bound",
            "1,2 ; 1,1,1,1,1,1,1,1",
            true,
            crate::bounds::gap_possible(&h1, &h2),
        );
        r.equal(
            "regression-main-bound",
            "1,2,3 ; 1,2,3",
            19,
            main_bound(&hv("1,2,3"), &hv("1,2,3")).map(|m| m.genus_bound.bound),
        );

        let ci = |c1, c2| ci_bound(c1, c2).map(|b| format!("{} {}", b.bound, b.rule.tag()));
        r.equal("regression-ci-bound", "2,2 2,3", "12 CI-a".to_string(), ci((2, 2), (2, 3)));
        r.equal("regression-ci-bound", "2,5 3,3", "18 CI-b".to_string(), ci((2, 5), (3, 3)));
        r.equal("regression-ci-bound", "1,1 4,7", "7 CI-d".to_string(), ci((1, 1), (4, 7)));

        let ci25 = hv("1,2,2,2,2,1");
        let ci26 = hv("1,2,2,2,2,2,1");
        let cubic = hv("1,2,3,2,1");
        r.equal(
            "regression-refined",
            "1,2,2,2,2,1 ; 1,2,3,2,1",
            43,
            refined_bound(&ci25, &cubic, false).map(|b| b.bound),
        );
        r.equal(
            "regression-refined",
            "1,2,2,2,2,1 ; 1,2,3,2,1",
            18,
            Ok(intersection_from_union(43, ci25.genus(), cubic.genus())),
        );
        r.equal(
            "regression-refined",
            "1,2,2,2,2,2,1 ; 1,2,3,2,1",
            "54 1,2,3,4,5,3,2,1".to_string(),
            refined_bound(&ci26, &cubic, false)
                .map(|b| format!("{} {}", b.bound, b.witness.unwrap_or_default())),
        );
        r.equal("regression-refined", "1,2,3,4,5,4,2", 52, Ok(hv("1,2,3,4,5,4,2").genus()));

        r.equal("regression-linked", "1,2 2x3", 5, linked_intersection(&hv("1,2"), 2, 3));
        r.equal("regression-linked", "1,2,3 3x4", 14, linked_intersection(&hv("1,2,3"), 3, 4));
        r.equal("regression-ladder", "2,3", 8, ladder_intersection(2, 3));
        r.equal("regression-ladder", "2,2", 5, ladder_intersection(2, 2));

        for (a, b, restricted, expected) in [
            (1, 1, false, "1,1,1,1"),
            (1, 1, true, "1,2,1"),
            (0, 1, false, "1,1,1"),
            (0, 1, true, "1,2"),
        ] {
            r.equal(
                "regression-ordinary",
                format!("s=1 a={a} b={b} restricted={restricted}"),
                hv(expected),
                union_ordinary(1, a, b, restricted).map(|u| u.h3),
            );
        }

        for (h1, h2, expected) in [
            ("1", "1,2,3,4,4", "1,2,3,4,4,1 5"),
            ("1,2", "1,2,3,4,5,5", "1,2,3,4,5,5,2,1 17"),
            ("1,2,1", "1,2,3,4,5,4", "1,2,3,4,5,4,3,1 21"),
        ] {
            r.equal(
                "regression-general",
                format!("{h1} ; {h2}"),
                expected.to_string(),
                union_ordinary_general(&hv(h1), &hv(h2))
                    .map(|u| format!("{} {}", u.union, u.intersection)),
            );
        }

        let base = (hv("1,2,3,4"), hv("1,2,3,4,3,2,1"));
        for (m, expected) in [
            (4, "1,2,3,4,4,4,4,4 40"),
            (5, "1,2,3,4,5,5,5,1 34"),
            (6, "1,2,3,4,5,6,4,1 33"),
        ] {
            r.equal(
                "regression-surface",
                format!("{} ; {} m={m}", base.0, base.1),
                expected.to_string(),
                union_on_surface(&base.0, &base.1, m)
                    .map(|u| format!("{} {}", u.union, u.intersection)),
            );
        }
        r
    }
}

pub fn verify_all(limits: Limits) -> VerificationReport {
    Verifier::new(limits).run()
}

fn ramp(s: u32) -> u64 {
    u64::from(s) * u64::from(s + 1) / 2
}

/// Every C2-admissible h-vector with `1 <= d <= dmax`.
fn all_admissible(dmax: u64) -> impl Iterator<Item = HVector> {
    (1..=dmax).flat_map(|d| {
        (1u32..)
            .take_while(move |&s| ramp(s) <= d)
            .flat_map(move |s| enumerate(EnumSpec::all(d, s)))
    })
}

/// Every strictly increasing sequence of positive integers with last entry
/// at most `kmax`.
fn strict_types(kmax: u32) -> impl Iterator<Item = BiliaisonType> {
    let n = kmax.min(30);
    (1u32..1 << n).map(move |mask| {
        let ks = (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect();
        BiliaisonType::strict(ks).expect("strictly increasing by construction")
    })
}
