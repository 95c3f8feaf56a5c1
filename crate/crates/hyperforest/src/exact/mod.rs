//! Exact arithmetic: big integers/rationals, dense univariate polynomials
//! and truncated formal power series over an abstract coefficient ring.
//!
//! Counts of hyperforests are integers and weights are rationals, so every
//! operation here is exact; floating point never enters (the asymptotics
//! module converts to logs at the very end).

mod poly;
mod series;

pub use poly::{UniPoly, Var};
pub use series::TruncatedSeries;

use num_traits::{One, Signed, Zero};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always normalized (den > 0, gcd = 1).
pub type Rat = num_rational::BigRational;

/// Commutative ring with exact equality and an exact action of the
/// rationals.  `TruncatedSeries` and the Grassmann engine are generic over
/// this, which is what lets the same series code run over plain rationals
/// and over polynomials in `λ` or `t`.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact multiplication by a rational scalar.
    fn scale(&self, c: &Rat) -> Self;

    fn from_rat(c: &Rat) -> Self {
        Self::one().scale(c)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rat) -> Self {
        self * c
    }
}

/// `n` as a big integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n` as a big rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` as a big rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` (zero for `k > n`).
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Parses `a` or `a/b` into an exact rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((a, b)) => {
            let num: Int = a.trim().parse().ok()?;
            let den: Int = b.trim().parse().ok()?;
            if den == Int::from(0) {
                return None;
            }
            Some(Rat::new(num, den))
        }
        None => Some(Rat::from_integer(s.trim().parse().ok()?)),
    }
}

/// True when `r` is an integer (denominator 1).
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True when `r` is an integer `>= 0`.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    is_integer(r) && !r.numer().is_negative()
}
