use proptest::prelude::*;

use acm_core::oracle::{has_decreasing_shape, oracle_genus};
use acm_core::{
    add_hyperplane, gmax, link, subtract_hyperplane, union_ordinary, BiliaisonType, HVector,
};

/// Ramp `1..s` followed by a nonincreasing tail bounded by `s`.
fn admissible() -> impl Strategy<Value = HVector> {
    (1u32..=6)
        .prop_flat_map(|s| (Just(s), prop::collection::vec(1..=s, 0..8)))
        .prop_map(|(s, mut tail)| {
            tail.sort_unstable_by(|a, b| b.cmp(a));
            let mut v: Vec<u32> = (1..=s).collect();
            v.extend(tail);
            HVector::new(v)
        })
}

fn strict_type() -> impl Strategy<Value = BiliaisonType> {
    prop::collection::btree_set(1u32..=15, 1..7)
        .prop_map(|set| BiliaisonType::strict(set.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn text_round_trip(h in admissible()) {
        let back: HVector = h.to_string().parse().unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn lambda_round_trip(lam in strict_type()) {
        let h = lam.to_hvector().unwrap();
        prop_assert!(h.is_c2_admissible());
        prop_assert_eq!(h.to_biliaison().unwrap(), lam.clone());
        let (a, b) = (lam.invariants().unwrap(), h.invariants().unwrap());
        prop_assert_eq!(a.genus, oracle_genus(h.entries()));
        prop_assert_eq!(
            (a.degree, a.genus, a.initial_degree, a.second_ideal_degree, a.speciality, a.regularity),
            (b.degree, b.genus, b.initial_degree, b.second_ideal_degree, b.speciality, b.regularity)
        );
    }

    #[test]
    fn decreasing_iff_gapless(h in admissible()) {
        let lam = h.to_biliaison().unwrap();
        let gapless = lam.is_strictly_increasing() && lam.find_gaps().is_empty();
        prop_assert_eq!(h.is_decreasing_type().unwrap(), gapless);
        prop_assert_eq!(has_decreasing_shape(h.entries()), gapless);
    }

    #[test]
    fn hyperplane_add_subtract(h in admissible(), k in 1u32..10) {
        if let Ok(up) = add_hyperplane(&h, k) {
            prop_assert_eq!(up.degree(), h.degree() + u64::from(k));
            prop_assert_eq!(subtract_hyperplane(&up, k).unwrap(), h);
        }
    }

    #[test]
    fn linkage_is_an_involution(h in admissible(), extra in 0u32..4, n_extra in 0u32..6) {
        let m = h.initial_degree() + extra;
        let n = m + n_extra;
        if let Ok(h2) = link(&h, m, n) {
            prop_assert_eq!(h.degree() + h2.degree(), u64::from(m * n));
            prop_assert_eq!(link(&h2, m, n).unwrap(), h);
        }
    }

    #[test]
    fn gmax_dominates(h in admissible()) {
        prop_assume!(h.is_decreasing_type().unwrap());
        let g = gmax(h.degree(), h.initial_degree());
        prop_assert!(g.feasible);
        prop_assert!(h.genus() <= g.genus);
    }

    #[test]
    fn union_ordinary_symmetric(s in 1u32..=8, a in 0u32..=8, b in 0u32..=8, restricted: bool) {
        prop_assume!(a <= s && b <= s);
        let u = union_ordinary(s, a, b, restricted).unwrap();
        let v = union_ordinary(s, b, a, restricted).unwrap();
        prop_assert_eq!(&u.h3, &v.h3);
        prop_assert_eq!(u.h3.degree(), u64::from(s * s + s + a + b));
    }
}
