//! Property tests for the exact arithmetic and the combinatorial layer.

use alt_hecke::chars::{greene_identity, SemilinearPoset};
use alt_hecke::combinat::{partitions_of, std_tableaux, symmetric_covering, Partition};
use alt_hecke::hecke::{hash_of_t, HeckeElem};
use alt_hecke::scalars::json::{tower_from_json, tower_to_json};
use alt_hecke::scalars::{alpha_coeff, neg_inv_qint, qint, LaurentPoly, RatFunc, TowerElem};
use alt_hecke::symgroup::Permutation;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i32..=3, prop::collection::vec(-4i64..=4, 0..4))
        .prop_map(|(low, c)| LaurentPoly::from_ints(low, &c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent()).prop_filter_map("non-zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn tower() -> impl Strategy<Value = TowerElem> {
    prop::collection::vec((0u32..16, ratfunc()), 0..3).prop_map(|terms| {
        let mut acc = TowerElem::zero();
        for (mask, c) in terms {
            acc.add_assign_ref(&TowerElem::monomial(mask << 2, c));
        }
        acc
    })
}

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn composition(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n.saturating_sub(1)).prop_map(move |cuts| {
        let mut parts = vec![1];
        for c in cuts {
            if c {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        parts
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn bar_is_a_ring_involution(a in ratfunc(), b in ratfunc()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn tower_ring_axioms(a in tower(), b in tower(), c in tower()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(tower_from_json(&tower_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn qint_addition(a in -12i64..=12, b in -12i64..=12) {
        let lhs = qint(a + b);
        let rhs = &qint(a) + &(&RatFunc::q_pow(2 * a as i32) * &qint(b));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(qint(-a), -(&RatFunc::q_pow(-2 * a as i32) * &qint(a)));
    }

    #[test]
    fn generator_squares(k in 2u32..=20) {
        let y = TowerElem::y(k).unwrap();
        let want = TowerElem::from_ratfunc(&qint(k as i64) * &RatFunc::q_pow(-1));
        prop_assert_eq!(&y * &y, want);
    }

    #[test]
    fn seminormal_block_is_quadratic(k in 1i64..=12) {
        // the 2×2 block on {t, ts} for axial distance k
        let a = neg_inv_qint(k).unwrap();
        let d = neg_inv_qint(-k).unwrap();
        let bc = &alpha_coeff(k).unwrap() * &alpha_coeff(-k).unwrap();
        let qq = RatFunc::q_minus_qinv();
        let one = TowerElem::one();
        prop_assert_eq!(&(&a * &a) + &bc, &one + &a.scale(&qq));
        prop_assert_eq!(&(&d * &d) + &bc, &one + &d.scale(&qq));
        prop_assert_eq!(&a + &d, TowerElem::from_ratfunc(qq));
    }

    #[test]
    fn reduced_words_rebuild_the_permutation(w in permutation(7)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(w.n(), &word).unwrap(), w.clone());
        prop_assert_eq!(w.multiply(&w.inverse()), Permutation::identity(w.n()));
    }

    #[test]
    fn hash_is_multiplicative_on_generators(w in permutation(4), i in 1usize..4) {
        let n = w.n();
        prop_assume!(i < n);
        let s = Permutation::from_word(n, &[i]).unwrap();
        let lhs = (&HeckeElem::t(&s) * &HeckeElem::t(&w)).hash_inv();
        let rhs = &*hash_of_t(&s) * &*hash_of_t(&w);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hook_formula_counts_tableaux(n in 1usize..=8, pick in any::<prop::sample::Index>()) {
        let parts = partitions_of(n);
        let lam = pick.get(&parts);
        prop_assert_eq!(num_bigint::BigUint::from(std_tableaux(lam).len()), lam.hook_formula());
    }

    #[test]
    fn coverings_exist_exactly_for_hooks(
        (n, kappa) in (1usize..=9).prop_flat_map(|n| (Just(n), composition(n))),
        pick in any::<prop::sample::Index>(),
    ) {
        let lams: Vec<Partition> = partitions_of(n).into_iter().filter(Partition::is_self_conjugate).collect();
        prop_assume!(!lams.is_empty());
        let lam = pick.get(&lams);
        let (h, _) = lam.diagonal_hooks().unwrap();
        let mut sorted = kappa.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(symmetric_covering(lam, &kappa).unwrap().is_some(), sorted == h);
    }

    #[test]
    fn greene_identity_holds(
        rel in prop::collection::vec(prop::option::of(any::<bool>()), 0..5),
        seed in prop::collection::vec(-8i64..=8, 6),
    ) {
        let mut c: Vec<i64> = Vec::new();
        for x in seed.into_iter().chain(-8..=8) {
            if !c.contains(&x) {
                c.push(x);
            }
        }
        c.truncate(rel.len() + 1);
        let (lhs, rhs) = greene_identity(&SemilinearPoset::new(rel), &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
