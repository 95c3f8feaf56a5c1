//! Independent verification route through truncated exponential
//! generating functions.
//!
//! The rooted-hypertree series satisfies
//! `T(z) = z exp[Σ_k w_k T(z)^(k-1)/(k-1)!]`; iterating that fixed point
//! determines one further coefficient per pass.  The unrooted series is
//! `U = T + Σ_k w_k (1-k) T^k / k!`, and rooted/unrooted forest tables
//! fall out as `n! [z^n] T^r/r!` and `n! [z^n] U^p/p!`.  Lagrange
//! inversion (`[z^n] T^r = (r/n) [y^(n-r)] exp[n Σ_k w_k y^(k-1)/(k-1)!]`)
//! is kept as a second, derivation-independent route.

use crate::counts::{RootedTable, UnrootedTable, WeightSpec};
use crate::exact::{factorial, rat_int, Int, Rat, TruncatedSeries};

/// Kernel `Σ_k w_k y^(k-1)/(k-1)!` truncated at `order`.
fn attachment_series(w: &WeightSpec, order: usize) -> TruncatedSeries<Rat> {
    let mut s = TruncatedSeries::zero(order);
    for k in w.support(order + 1) {
        s = s.add(&TruncatedSeries::monomial(
            order,
            k - 1,
            w.w(k) / Rat::from_integer(factorial(k - 1)),
        ));
    }
    s
}

/// EGF of rooted hypertrees, solved from its functional equation by
/// fixed-point iteration.
pub fn tree_series(w: &WeightSpec, order: usize) -> TruncatedSeries<Rat> {
    let mut t = TruncatedSeries::zero(order);
    // pass m fixes the z^m coefficient; one extra pass asserts stability
    for _ in 0..=order {
        let inner = attachment_series(w, order)
            .compose(&t)
            .expect("T has zero constant term");
        let next = inner.exp().expect("kernel vanishes at 0").shift_up(1);
        if next == t {
            break;
        }
        t = next;
    }
    t
}

/// EGF of unrooted hypertrees `U = K(T)`,
/// `K(y) = y + Σ_k w_k (1-k) y^k / k!`.
pub fn unrooted_tree_series(w: &WeightSpec, order: usize) -> TruncatedSeries<Rat> {
    let t = tree_series(w, order);
    let mut u = t.clone();
    for k in w.support(order) {
        let c = w.w(k) * Rat::new(Int::from(1i64 - k as i64), factorial(k));
        u = u.add(&t.pow(k).scale(&c));
    }
    u
}

/// Second definition of `U`: term-by-term integral of `T(ω)/ω`, i.e.
/// `[z^n] U = [z^n] T / n`.
pub fn unrooted_tree_series_by_integral(w: &WeightSpec, order: usize) -> TruncatedSeries<Rat> {
    let t = tree_series(w, order);
    let coeffs = t
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n == 0 {
                rat_int(0)
            } else {
                c / rat_int(n as i64)
            }
        })
        .collect();
    TruncatedSeries::from_coeffs(order, coeffs)
}

/// `[z^n] T(z)^r` by Lagrange inversion, with no fixed point involved.
pub fn tree_power_coeff_lagrange(n: usize, r: usize, w: &WeightSpec) -> Rat {
    if r > n {
        return rat_int(0);
    }
    if n == 0 {
        return rat_int(if r == 0 { 1 } else { 0 });
    }
    let theta_n = attachment_series(w, n)
        .scale(&rat_int(n as i64))
        .exp()
        .expect("kernel vanishes at 0");
    theta_n.coeff(n - r) * Rat::new(Int::from(r), Int::from(n))
}

/// Rooted and unrooted tables read off the coefficients of `e^{tT}` and
/// `e^{λU}`: `t_{n,r} = n![z^n] T^r/r!`, `u_{n,p} = n![z^n] U^p/p!`.
pub fn tables_via_egf(n: usize, w: &WeightSpec) -> (RootedTable, UnrootedTable) {
    let t = tree_series(w, n);
    let u = unrooted_tree_series(w, n);
    let n_fact = Rat::from_integer(factorial(n));
    let mut rooted = vec![rat_int(0); n + 1];
    let mut unrooted = vec![rat_int(0); n + 1];
    let mut t_pow = TruncatedSeries::<Rat>::one(n);
    let mut u_pow = t_pow.clone();
    rooted[0] = t_pow.coeff(n) * &n_fact;
    unrooted[0] = u_pow.coeff(n) * &n_fact;
    for r in 1..=n {
        t_pow = t_pow.mul(&t);
        u_pow = u_pow.mul(&u);
        let r_fact = Rat::from_integer(factorial(r));
        rooted[r] = t_pow.coeff(n) * &n_fact / &r_fact;
        unrooted[r] = u_pow.coeff(n) * &n_fact / &r_fact;
    }
    (
        RootedTable { n, counts: rooted },
        UnrootedTable {
            n,
            counts: unrooted,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::special::bell_poly;
    use rand::{Rng, SeedableRng};
    use std::collections::BTreeMap;

    fn egf_coeff(s: &TruncatedSeries<Rat>, n: usize) -> Rat {
        s.coeff(n) * Rat::from_integer(factorial(n))
    }

    fn random_map(rng: &mut impl Rng, ks: &[usize]) -> WeightSpec {
        let mut m = BTreeMap::new();
        for &k in ks {
            m.insert(k, rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
        }
        WeightSpec::Map(m)
    }

    #[test]
    fn tree_series_cayley() {
        // n! [z^n] T = n^(n-1) for plain graphs
        let t = tree_series(&WeightSpec::Uniform(2), 5);
        let expected = [0i64, 1, 2, 9, 64, 625];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(egf_coeff(&t, n), rat_int(v));
        }
    }

    #[test]
    fn tree_series_uniform_closed_form() {
        // off-lattice coefficients vanish; on-lattice ones match the
        // Lagrange closed form n (n w_k)^m (n-1)!/(m! ((k-1)!)^m n),
        // m = (n-1)/(k-1)
        for k in 3..=4 {
            let w = WeightSpec::Uniform(k);
            let t = tree_series(&w, 9);
            for n in 1..=9 {
                let coeff = egf_coeff(&t, n);
                if (n - 1) % (k - 1) != 0 {
                    assert_eq!(coeff, rat_int(0), "n={}, k={}", n, k);
                } else {
                    let m = (n - 1) / (k - 1);
                    let expected = Rat::from_integer(Int::from(n).pow(m as u32) * factorial(n - 1))
                        / Rat::from_integer(factorial(m) * factorial(k - 1).pow(m as u32));
                    assert_eq!(coeff, expected, "n={}, k={}", n, k);
                }
            }
        }
    }

    #[test]
    fn tree_series_weighted_uniform_closed_form() {
        // general edge weight w on cardinality k:
        // n! [z^n] T = (n w)^m (n-1)!/(m! ((k-1)!)^m), m = (n-1)/(k-1)
        let w_val = rat(2, 3);
        for k in 2..=4usize {
            let mut m = BTreeMap::new();
            m.insert(k, w_val.clone());
            let t = tree_series(&WeightSpec::Map(m), 9);
            for n in 1..=9 {
                let coeff = egf_coeff(&t, n);
                if (n - 1) % (k - 1) != 0 {
                    assert_eq!(coeff, rat_int(0));
                    continue;
                }
                let m = (n - 1) / (k - 1);
                let expected = (rat_int(n as i64) * &w_val).pow(m as i32)
                    * Rat::from_integer(factorial(n - 1))
                    / Rat::from_integer(factorial(m) * factorial(k - 1).pow(m as u32));
                assert_eq!(coeff, expected, "n={}, k={}", n, k);
            }
        }
    }

    #[test]
    fn tree_series_all_ones_is_bell() {
        // n! [z^n] T = b_{n-1}(n)
        let t = tree_series(&WeightSpec::AllOnes, 5);
        let expected = [1i64, 2, 12, 116, 1555];
        for (i, &v) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(egf_coeff(&t, n), rat_int(v));
            assert_eq!(egf_coeff(&t, n), bell_poly(n - 1).eval(&rat_int(n as i64)));
        }
    }

    #[test]
    fn unrooted_series_examples() {
        let u2 = unrooted_tree_series(&WeightSpec::Uniform(2), 5);
        for (n, &v) in [0i64, 1, 1, 3, 16, 125].iter().enumerate() {
            assert_eq!(egf_coeff(&u2, n), rat_int(v)); // n^(n-2)
        }
        let u1 = unrooted_tree_series(&WeightSpec::AllOnes, 5);
        for (n, &v) in [0i64, 1, 1, 4, 29, 311].iter().enumerate() {
            assert_eq!(egf_coeff(&u1, n), rat_int(v)); // A030019
        }
    }

    #[test]
    fn two_unrooted_definitions_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..6 {
            let w = random_map(&mut rng, &[2, 3, 4]);
            assert_eq!(
                unrooted_tree_series(&w, 12),
                unrooted_tree_series_by_integral(&w, 12)
            );
        }
    }

    #[test]
    fn z_du_dz_is_t() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(22);
        for order in [8usize, 15] {
            let w = random_map(&mut rng, &[2, 3, 5]);
            let t = tree_series(&w, order);
            let u = unrooted_tree_series(&w, order);
            assert_eq!(u.z_d_dz(), t);
        }
    }

    #[test]
    fn lagrange_route_agrees_with_fixed_point() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for w in [
            WeightSpec::Uniform(2),
            WeightSpec::AllOnes,
            random_map(&mut rng, &[2, 3]),
        ] {
            let order = 12;
            let t = tree_series(&w, order);
            for n in 1..=order {
                let mut t_pow = TruncatedSeries::<Rat>::one(order);
                for r in 0..=n {
                    assert_eq!(
                        t_pow.coeff(n),
                        &tree_power_coeff_lagrange(n, r, &w),
                        "n={}, r={}",
                        n,
                        r
                    );
                    t_pow = t_pow.mul(&t);
                }
            }
        }
    }

    #[test]
    fn tree_series_is_reversion_of_its_inverse_map() {
        // T also comes out of generic series reversion applied to
        // y exp[-Σ_k w_k y^(k-1)/(k-1)!]; ties the module to exact-core.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(24);
        let w = random_map(&mut rng, &[2, 3]);
        let order = 10;
        let inverse_map = attachment_series(&w, order)
            .neg()
            .exp()
            .unwrap()
            .shift_up(1);
        assert_eq!(inverse_map.reversion().unwrap(), tree_series(&w, order));
    }

    #[test]
    fn exp_of_tree_series_counts_rooted_forests() {
        // n! [z^n] e^T = E_n(1; e_2) = (n+1)^(n-1): 1, 1, 3, 16
        let t = tree_series(&WeightSpec::Uniform(2), 3);
        let e = t.exp().unwrap();
        for (n, &v) in [1i64, 1, 3, 16].iter().enumerate() {
            assert_eq!(egf_coeff(&e, n), rat_int(v));
        }
    }

    #[test]
    fn egf_tables_equal_closed_form_tables() {
        for w in [
            WeightSpec::Uniform(2),
            WeightSpec::Uniform(3),
            WeightSpec::AllOnes,
        ] {
            for n in 1..=12 {
                let (rooted, unrooted) = tables_via_egf(n, &w);
                assert_eq!(
                    rooted,
                    crate::counts::rooted_table(n, &w),
                    "n={}, w={:?}",
                    n,
                    w
                );
                assert_eq!(
                    unrooted,
                    crate::counts::unrooted_table(n, &w),
                    "n={}, w={:?}",
                    n,
                    w
                );
            }
        }
    }

    #[test]
    fn egf_tables_match_small_closed_forms() {
        let (rooted, unrooted) = tables_via_egf(3, &WeightSpec::Uniform(2));
        assert_eq!(
            rooted.counts,
            vec![rat_int(0), rat_int(9), rat_int(6), rat_int(1)]
        );
        assert_eq!(unrooted.total(), rat_int(7));
        let (rooted1, unrooted1) = tables_via_egf(3, &WeightSpec::AllOnes);
        assert_eq!(
            rooted1.counts,
            vec![rat_int(0), rat_int(12), rat_int(6), rat_int(1)]
        );
        assert_eq!(
            unrooted1.counts,
            vec![rat_int(0), rat_int(4), rat_int(3), rat_int(1)]
        );
        let (r1, u1) = tables_via_egf(1, &WeightSpec::AllOnes);
        assert_eq!(r1.counts, vec![rat_int(0), rat_int(1)]);
        assert_eq!(u1.counts, vec![rat_int(0), rat_int(1)]);
    }
}
