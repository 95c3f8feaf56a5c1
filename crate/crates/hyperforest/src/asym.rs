//! Large-`n` approximations of the uniform-hypergraph forest counts,
//! evaluated in log-domain floating point and measured against the exact
//! big-integer values.
//!
//! The exact comparison values can have tens of thousands of bits, so
//! logarithms of big integers are taken exactly from the bit length plus
//! a 53-bit mantissa, never through a lossy direct conversion.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Int, Rat};

/// Natural log of a positive big integer.
pub fn ln_int(x: &Int) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive integer");
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let mantissa = (x >> shift).to_f64().expect("53 bits fit");
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_rat(x: &Rat) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive rational");
    ln_int(x.numer()) - ln_int(x.denom())
}

/// Leading asymptotics of the Laguerre value entering the uniform count:
/// `L_s^((n-p)/(k-1) - p)(kn/(k-1)) ≈ ((-n)^s/s!) ·
///  (1 + s[s+1 + 2k(p-s)] / (2n(k-1)))`.
/// Returns the order-0 and order-1 truncations.
pub fn laguerre_leading_orders(s: usize, n: usize, p: usize, k: usize) -> (f64, f64) {
    assert!(k >= 2);
    let mut order0 = 1.0f64;
    for j in 1..=s {
        order0 *= -(n as f64) / j as f64;
    }
    let s_f = s as f64;
    let correction =
        s_f * (s_f + 1.0 + 2.0 * k as f64 * (p as f64 - s_f)) / (2.0 * n as f64 * (k - 1) as f64);
    (order0, order0 * (1.0 + correction))
}

/// Exact rational value of the large-`n` approximation
/// `u_{n,p}(e_k) ≈ C(n-1,p-1) (n-p)!/m! · n^(m-1)/((k-1)!)^m ·
///  ((k-1)/k)^(p-1)` with `m = (n-p)/(k-1)`.
///
/// At `p = 1` this equals the exact count.
pub fn uniform_forest_asympt_exact(n: usize, p: usize, k: usize) -> Result<Rat> {
    assert!(k >= 2 && p >= 1 && p <= n);
    if !(n - p).is_multiple_of(k - 1) {
        return Err(Error::DivisibilityViolation { n, p, k });
    }
    let m = (n - p) / (k - 1);
    let mut v = Rat::from_integer(binomial(n - 1, p - 1));
    v *= Rat::new(factorial(n - p), factorial(m));
    v *= Rat::from_integer(Int::from(n)).pow(m as i32 - 1);
    v /= Rat::from_integer(factorial(k - 1)).pow(m as i32);
    v *= Rat::new(Int::from(k - 1), Int::from(k)).pow(p as i32 - 1);
    Ok(v)
}

/// `ln` of the approximation above.
pub fn uniform_forest_asympt_ln(n: usize, p: usize, k: usize) -> Result<f64> {
    Ok(ln_rat(&uniform_forest_asympt_exact(n, p, k)?))
}

/// `ln` of the approximate partition sum `Σ_p u_{n,p}(e_k) λ^p`:
///
/// `n^(n-2) e^(-n(k-2)/(k-1)) √(k-1) ((k-2)!)^(-n/(k-1))
///  λ exp[((k-1)/k) ((k-2)!)^(1/(k-1)) λ]`,
///
/// which for `k = 2` is `n^(n-2) λ e^(λ/2)`.  The validity region in `λ`
/// is not asserted; callers compare against exact values.
pub fn partition_sum_approx_ln(n: usize, k: usize, lambda: f64) -> f64 {
    assert!(n >= 2 && k >= 2 && lambda > 0.0);
    let km2_fact = factorial(k - 2).to_f64().expect("small factorial");
    (n as f64 - 2.0) * (n as f64).ln() - n as f64 * (k - 2) as f64 / (k - 1) as f64
        + 0.5 * ((k - 1) as f64).ln()
        - n as f64 / (k - 1) as f64 * km2_fact.ln()
        + lambda.ln()
        + (k - 1) as f64 / k as f64 * km2_fact.powf(1.0 / (k - 1) as f64) * lambda
}

/// Relative deviation `|approx/exact - 1|` computed from log values.
pub fn rel_err_from_ln(ln_approx: f64, ln_exact: f64) -> f64 {
    ((ln_approx - ln_exact).exp() - 1.0).abs()
}

fn rat_to_f64(x: &Rat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * (ln_rat(&x.abs())).exp()
}

/// Exact Laguerre value the expansion approximates, as an `f64`.
pub fn laguerre_exact_value(s: usize, n: usize, p: usize, k: usize) -> f64 {
    let alpha = Rat::new(Int::from(n - p), Int::from(k - 1)) - Rat::from_integer(Int::from(p));
    let x = Rat::new(Int::from(k * n), Int::from(k - 1));
    rat_to_f64(&crate::special::assoc_laguerre(s, &alpha, &x))
}
