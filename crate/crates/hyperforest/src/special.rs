//! Stirling numbers of the second kind, Bell polynomials, generalized
//! Hermite polynomials and associated Laguerre polynomials: the special
//! number families the closed-form counts are built from.

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::exact::{factorial, rat_int, Int, Rat, UniPoly, Var};

/// Cached triangle of Stirling numbers of the second kind, filled row by
/// row from the recurrence `{n,k} = k {n-1,k} + {n-1,k-1}`.
#[derive(Debug, Default)]
pub struct StirlingTable {
    rows: Vec<Vec<Int>>,
}

impl StirlingTable {
    pub fn new() -> Self {
        StirlingTable {
            rows: vec![vec![Int::one()]],
        }
    }

    fn ensure(&mut self, n: usize) {
        if self.rows.is_empty() {
            self.rows.push(vec![Int::one()]);
        }
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = vec![Int::zero(); m + 1];
            for k in 1..=m {
                let mut v = prev.get(k).cloned().unwrap_or_else(Int::zero);
                v *= Int::from(k);
                v += &prev[k - 1];
                row[k] = v;
            }
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, k: usize) -> Int {
        if k > n {
            return Int::zero();
        }
        self.ensure(n);
        self.rows[n][k].clone()
    }

    /// Full row `{n,0}..{n,n}`.
    pub fn row(&mut self, n: usize) -> Vec<Int> {
        self.ensure(n);
        self.rows[n].clone()
    }
}

static TABLE: RwLock<Option<StirlingTable>> = RwLock::new(None);

/// Runs `f` on row `n` of the shared triangle; concurrent readers share
/// the lock and only a missing row takes the writer path (the fill is
/// idempotent).
fn with_row<T>(n: usize, f: impl Fn(&[Int]) -> T) -> T {
    if let Some(table) = TABLE.read().expect("stirling table poisoned").as_ref() {
        if let Some(row) = table.rows.get(n) {
            return f(row);
        }
    }
    let mut guard = TABLE.write().expect("stirling table poisoned");
    let table = guard.get_or_insert_with(StirlingTable::new);
    table.ensure(n);
    f(&table.rows[n])
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks.
pub fn stirling2(n: usize, k: usize) -> Int {
    with_row(n, |row| row.get(k).cloned().unwrap_or_else(Int::zero))
}

/// Bell polynomial `b_n(x) = Σ_k {n,k} x^k`.
pub fn bell_poly(n: usize) -> UniPoly {
    with_row(n, |row| {
        UniPoly::from_coeffs(Var::X, row.iter().cloned().map(Rat::from_integer).collect())
    })
}

/// Bell number `b_n = b_n(1)`.
pub fn bell_number(n: usize) -> Int {
    with_row(n, |row| row.iter().sum())
}

/// Generalized binomial coefficient `C(a, j)` for rational (possibly
/// negative) `a`, as the falling-factorial product `a(a-1)...(a-j+1)/j!`.
pub fn gen_binomial(a: &Rat, j: usize) -> Rat {
    let mut acc = rat_int(1);
    for i in 0..j {
        acc *= a - Rat::from_integer(Int::from(i));
    }
    acc / Rat::from_integer(factorial(j))
}

/// Generalized Hermite polynomial `H_s^(k)(x)`, the coefficient family of
/// `exp[x z + (1-k) z^k / k!] = Σ_s H_s^(k)(x) z^s / s!`, computed from
/// the explicit sum
/// `H_s^(k)(x) = Σ_q (1/q!) ((1-k)/k!)^q s!/(s-kq)! x^(s-kq)`.
///
/// `H_s^(2)` is the probabilists' Hermite polynomial `He_s`.
pub fn gen_hermite(s: usize, k: usize) -> UniPoly {
    assert!(k >= 2, "generalized Hermite needs k >= 2");
    let base = Rat::new(Int::from(1i64 - k as i64), factorial(k));
    let s_fact = Rat::from_integer(factorial(s));
    let mut coeffs = vec![rat_int(0); s + 1];
    let mut base_pow = rat_int(1);
    for q in 0..=s / k {
        let deg = s - k * q;
        let c = &s_fact * &base_pow
            / (Rat::from_integer(factorial(q)) * Rat::from_integer(factorial(deg)));
        coeffs[deg] = c;
        base_pow *= &base;
    }
    UniPoly::from_coeffs(Var::X, coeffs)
}

/// Associated Laguerre polynomial `L_m^(α)(x) = Σ_ν C(m+α, m-ν) (-x)^ν/ν!`
/// evaluated exactly; `α` may be any rational, including the negative
/// integers the uniform-hypergraph counts use.
pub fn assoc_laguerre(m: usize, alpha: &Rat, x: &Rat) -> Rat {
    let top = alpha + Rat::from_integer(Int::from(m));
    let mut acc = rat_int(0);
    let mut x_pow = rat_int(1);
    for nu in 0..=m {
        acc += gen_binomial(&top, m - nu) * &x_pow / Rat::from_integer(factorial(nu));
        x_pow *= -x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, Ring, TruncatedSeries};

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(3, 2), int(3));
        for n in 0..=12 {
            assert_eq!(stirling2(n, n), int(1));
        }
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(stirling2(2, 5), int(0));
        assert_eq!(stirling2(5, 0), int(0));
        assert_eq!(stirling2(0, 0), int(1));
    }

    /// Counts set partitions of {0..n-1} into exactly k blocks by brute
    /// force over restricted-growth strings.
    fn partitions_brute(n: usize, k: usize) -> u64 {
        fn rec(assign: &mut Vec<usize>, n: usize, k: usize) -> u64 {
            if assign.len() == n {
                let blocks = assign.iter().copied().max().map_or(0, |m| m + 1);
                return u64::from(blocks == k);
            }
            let next_free = assign.iter().copied().max().map_or(0, |m| m + 1);
            let mut total = 0;
            for b in 0..=next_free.min(k - 1) {
                assign.push(b);
                total += rec(assign, n, k);
                assign.pop();
            }
            total
        }
        rec(&mut Vec::new(), n, k)
    }

    #[test]
    fn stirling_matches_brute_force_partitions() {
        assert_eq!(stirling2(6, 3), int(90));
        assert_eq!(partitions_brute(6, 3), 90);
        for n in 1..=7 {
            for k in 1..=n {
                assert_eq!(stirling2(n, k), int(partitions_brute(n, k) as i64));
            }
        }
    }

    #[test]
    fn bell_polys() {
        assert_eq!(bell_poly(0), UniPoly::one(Var::X));
        let b3 = UniPoly::from_coeffs(Var::X, vec![rat_int(0), rat_int(1), rat_int(3), rat_int(1)]);
        assert_eq!(bell_poly(3), b3);
        assert_eq!(bell_poly(3).eval(&rat_int(1)), rat_int(5));
        assert_eq!(bell_number(3), int(5));
    }

    #[test]
    fn bell_numbers_are_row_sums() {
        let known = [1i64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in known.iter().enumerate() {
            assert_eq!(bell_number(n), int(b));
            let row_sum: Int = (0..=n).map(|k| stirling2(n, k)).sum();
            assert_eq!(row_sum, int(b));
        }
        for n in 9..=20 {
            let row_sum: Int = (0..=n).map(|k| stirling2(n, k)).sum();
            assert_eq!(bell_number(n), row_sum);
        }
    }

    #[test]
    fn bell_egf_has_bell_polynomial_coefficients() {
        // exp(x(e^z - 1)) has z^n coefficient b_n(x)/n!, with symbolic x.
        let order = 20;
        let x = UniPoly::variable(Var::X);
        let mut inner = TruncatedSeries::<UniPoly>::zero(order);
        for j in 1..=order {
            inner = inner.add(&TruncatedSeries::monomial(
                order,
                j,
                x.scale(&Rat::new(Int::one(), factorial(j))),
            ));
        }
        let egf = inner.exp().unwrap();
        for n in 0..=order {
            let expected = bell_poly(n).scale(&Rat::new(Int::one(), factorial(n)));
            assert_eq!(egf.coeff(n), &expected);
        }
    }

    #[test]
    fn hermite_small_cases() {
        // He_2 = x^2 - 1
        let he2 = UniPoly::from_coeffs(Var::X, vec![rat_int(-1), rat_int(0), rat_int(1)]);
        assert_eq!(gen_hermite(2, 2), he2);
        // pure power below the k threshold
        for k in 2..=5 {
            for s in 0..k {
                assert_eq!(gen_hermite(s, k), UniPoly::monomial(Var::X, s, rat_int(1)));
            }
        }
        let h33 = UniPoly::from_coeffs(
            Var::X,
            vec![rat_int(-2), rat_int(0), rat_int(0), rat_int(1)],
        );
        assert_eq!(gen_hermite(3, 3), h33);
    }

    #[test]
    fn hermite_matches_series_expansion() {
        // s! [z^s] exp[x z + (1-k) z^k/k!] with symbolic x, the defining
        // generating function, as an independent route.
        for k in 2..=4 {
            let order = 9;
            let x = UniPoly::variable(Var::X);
            let mut inner = TruncatedSeries::<UniPoly>::monomial(order, 1, x);
            inner = inner.add(&TruncatedSeries::monomial(
                order,
                k,
                UniPoly::constant(Rat::new(Int::from(1i64 - k as i64), factorial(k))),
            ));
            let gf = inner.exp().unwrap();
            for s in 0..=order {
                let expected = gf.coeff(s).scale(&Rat::from_integer(factorial(s)));
                assert_eq!(gen_hermite(s, k), expected, "H_{}^({})", s, k);
            }
        }
    }

    #[test]
    fn hermite_he_recurrence() {
        // He_{s+1} = x He_s - s He_{s-1}
        let x = UniPoly::variable(Var::X);
        for s in 1..=20 {
            let lhs = gen_hermite(s + 1, 2);
            let rhs = Ring::sub(
                &Ring::mul(&x, &gen_hermite(s, 2)),
                &gen_hermite(s - 1, 2).scale(&rat_int(s as i64)),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn laguerre_base_cases() {
        let alpha = rat(5, 3);
        let x = rat(-7, 2);
        assert_eq!(assoc_laguerre(0, &alpha, &x), rat_int(1));
        assert_eq!(assoc_laguerre(1, &alpha, &x), &alpha + rat_int(1) - &x);
    }

    #[test]
    fn gen_binomial_falling_factorial() {
        assert_eq!(gen_binomial(&rat_int(5), 2), rat_int(10));
        assert_eq!(gen_binomial(&rat_int(-1), 3), rat_int(-1));
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&rat_int(2), 5), rat_int(0));
        assert_eq!(gen_binomial(&rat(-3, 2), 0), rat_int(1));
    }

    #[test]
    fn laguerre_three_term_identity() {
        // z L_{p-1}^(α+1)(z) = (p+α) L_{p-1}^(α)(z) - p L_p^(α)(z),
        // the contiguous relation the sum formula must satisfy.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let p = rng.gen_range(1..=10usize);
            let alpha = rat(rng.gen_range(-12..=12), rng.gen_range(1..=4));
            let z = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
            let lhs = &z * assoc_laguerre(p - 1, &(&alpha + rat_int(1)), &z);
            let rhs = (&alpha + rat_int(p as i64)) * assoc_laguerre(p - 1, &alpha, &z)
                - rat_int(p as i64) * assoc_laguerre(p, &alpha, &z);
            assert_eq!(lhs, rhs);
        }
    }
}
