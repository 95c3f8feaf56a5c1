//! Property-based invariants of the exact arithmetic layer and the
//! counting tables.

use std::collections::BTreeMap;

use proptest::prelude::*;

use hyperforest::counts::{rooted_table, unrooted_table, WeightSpec};
use hyperforest::exact::{is_nonneg_integer, rat, Rat, Ring, TruncatedSeries, UniPoly, Var};
use hyperforest::grassmann::GrassmannElement;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rat_strategy() -> impl Strategy<Value = Rat> {
    (1i64..=9, 1i64..=5, any::<bool>())
        .prop_map(|(n, d, neg)| if neg { rat(-n, d) } else { rat(n, d) })
}

fn poly_strategy() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rat_strategy(), 0..8).prop_map(|cs| UniPoly::from_coeffs(Var::X, cs))
}

/// Series with zero constant term, order 8.
fn nilpotent_series_strategy() -> impl Strategy<Value = TruncatedSeries<Rat>> {
    prop::collection::vec(rat_strategy(), 0..8).prop_map(|mut cs| {
        cs.insert(0, rat(0, 1));
        TruncatedSeries::from_coeffs(8, cs)
    })
}

proptest! {
    #[test]
    fn poly_eval_is_a_ring_homomorphism(p in poly_strategy(), q in poly_strategy(), v in rat_strategy()) {
        let prod = Ring::mul(&p, &q);
        prop_assert_eq!(prod.eval(&v), p.eval(&v) * q.eval(&v));
        let sum = Ring::add(&p, &q);
        prop_assert_eq!(sum.eval(&v), p.eval(&v) + q.eval(&v));
    }

    #[test]
    fn series_exp_of_negation_is_inverse(s in nilpotent_series_strategy()) {
        let e = s.exp().unwrap();
        let e_inv = s.neg().exp().unwrap();
        prop_assert_eq!(e.mul(&e_inv), TruncatedSeries::one(s.order()));
    }

    #[test]
    fn series_exp_is_additive_morphism(a in nilpotent_series_strategy(), b in nilpotent_series_strategy()) {
        let lhs = a.add(&b).exp().unwrap();
        let rhs = a.exp().unwrap().mul(&b.exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversion_is_two_sided_inverse(
        c1 in nonzero_rat_strategy(),
        rest in prop::collection::vec(rat_strategy(), 0..7),
    ) {
        let mut cs = vec![rat(0, 1), c1];
        cs.extend(rest);
        let s = TruncatedSeries::from_coeffs(8, cs);
        let r = s.reversion().unwrap();
        let z = TruncatedSeries::z(8);
        prop_assert_eq!(s.compose(&r).unwrap(), z.clone());
        prop_assert_eq!(r.compose(&s).unwrap(), z);
    }

    #[test]
    fn compose_distributes_over_product(
        inner in nilpotent_series_strategy(),
        a in prop::collection::vec(rat_strategy(), 0..6),
        b in prop::collection::vec(rat_strategy(), 0..6),
    ) {
        let a = TruncatedSeries::from_coeffs(8, a);
        let b = TruncatedSeries::from_coeffs(8, b);
        let lhs = a.mul(&b).compose(&inner).unwrap();
        let rhs = a.compose(&inner).unwrap().mul(&b.compose(&inner).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

/// Random exterior-algebra element over `n` vertex pairs with up to
/// `terms` monomials.
fn grassmann_strategy(n: usize, terms: usize) -> impl Strategy<Value = GrassmannElement<Rat>> {
    let bits = 2 * n as u32;
    prop::collection::vec((0u64..(1 << bits), -5i64..=5), 1..terms).prop_map(move |spec| {
        let mut el = GrassmannElement::zero(n);
        for (mask, c) in spec {
            let mut mono = GrassmannElement::scalar(n, rat(c, 1));
            for g in 0..bits as usize {
                if mask & (1 << g) != 0 {
                    let single = if g % 2 == 0 {
                        GrassmannElement::psi_bar(n, g / 2)
                    } else {
                        GrassmannElement::psi(n, g / 2)
                    };
                    mono = mono.mul(&single);
                }
            }
            el = el.add(&mono);
        }
        el
    })
}

proptest! {
    #[test]
    fn grassmann_product_is_associative(
        a in grassmann_strategy(3, 4),
        b in grassmann_strategy(3, 4),
        c in grassmann_strategy(3, 4),
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn grassmann_monomials_anticommute_by_degree(
        mask_a in 0u64..64,
        mask_b in 0u64..64,
    ) {
        // pure monomials satisfy a·b = (-1)^(|a||b|) b·a
        let n = 3;
        let a = GrassmannElement::<Rat>::mask_monomial(n, mask_a);
        let b = GrassmannElement::<Rat>::mask_monomial(n, mask_b);
        let forward = a.mul(&b);
        let backward = b.mul(&a);
        let sign_flip = (mask_a.count_ones() * mask_b.count_ones()) % 2 == 1;
        if sign_flip {
            prop_assert_eq!(forward, backward.neg());
        } else {
            prop_assert_eq!(forward, backward);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn integer_weights_yield_integer_tables(
        w2 in 0i64..=3,
        w3 in 0i64..=3,
        w4 in 0i64..=3,
        n in 1usize..=6,
    ) {
        let mut m = BTreeMap::new();
        m.insert(2, rat(w2, 1));
        m.insert(3, rat(w3, 1));
        m.insert(4, rat(w4, 1));
        let w = WeightSpec::Map(m);
        for v in rooted_table(n, &w).counts.iter().chain(unrooted_table(n, &w).counts.iter()) {
            prop_assert!(is_nonneg_integer(v), "non-integer table entry {}", v);
        }
    }
}
