//! Closed-form tables of rooted and unrooted spanning-hyperforest weights
//! on the complete hypergraph.
//!
//! Everything rests on two polynomial families derived from the exponential
//! generating function of rooted hypertrees:
//!
//! * `P_s(x) = s! [y^s] exp[x Σ_k w_k y^(k-1)/(k-1)!]`: the rooted table
//!   is `t_{n,r} = C(n-1, r-1) P_{n-r}(n)`.  For all-ones weights `P_s` is
//!   the Bell polynomial `b_s`.
//! * `Π_s(λ) = s! [y^s] exp[λ (y + Σ_k w_k (1-k) y^k/k!)]`: its
//!   coefficients `π_{s,p}` convert the rooted table into the unrooted one
//!   via `u_{n,p} = Σ_s π_{s,p} t_{n,s}`.
//!
//! For `k`-uniform weights the unrooted counts additionally collapse to an
//! associated-Laguerre closed form, implemented here as an independent
//! route and cross-checked in the tests.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{
    binomial, factorial, parse_rat, rat_int, Int, Rat, Ring, TruncatedSeries, UniPoly, Var,
};
use crate::special::{assoc_laguerre, stirling2};

/// Cardinality-indexed hyperedge weights `w_k`, `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// `w_j = δ_{jk}`: only hyperedges of cardinality `k` appear, with
    /// weight one (the `k`-uniform complete hypergraph).
    Uniform(usize),
    /// `w_j = 1` for every `j >= 2` (the complete hypergraph).
    AllOnes,
    /// Explicit finite-support map; missing keys weigh zero.
    Map(BTreeMap<usize, Rat>),
}

impl WeightSpec {
    /// Weight of a hyperedge of cardinality `k`.
    pub fn w(&self, k: usize) -> Rat {
        debug_assert!(k >= 2);
        match self {
            WeightSpec::Uniform(u) => {
                if k == *u {
                    rat_int(1)
                } else {
                    rat_int(0)
                }
            }
            WeightSpec::AllOnes => rat_int(1),
            WeightSpec::Map(m) => m.get(&k).cloned().unwrap_or_else(Rat::zero),
        }
    }

    /// Cardinalities in `2..=max_k` with nonzero weight.
    pub fn support(&self, max_k: usize) -> Vec<usize> {
        (2..=max_k).filter(|&k| !self.w(k).is_zero()).collect()
    }

    pub fn uniform(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidWeightSpec(format!(
                "uniform:{k} (need K >= 2)"
            )));
        }
        Ok(WeightSpec::Uniform(k))
    }

    pub fn from_map(m: BTreeMap<usize, Rat>) -> Result<Self> {
        if m.keys().any(|&k| k < 2) {
            return Err(Error::InvalidWeightSpec("map keys must be >= 2".into()));
        }
        Ok(WeightSpec::Map(m))
    }
}

impl FromStr for WeightSpec {
    type Err = Error;

    /// Grammar: `uniform:K` | `ones` | `map:2=1,3=1/2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidWeightSpec(s.to_string());
        if s == "ones" {
            return Ok(WeightSpec::AllOnes);
        }
        if let Some(k) = s.strip_prefix("uniform:") {
            let k: usize = k.parse().map_err(|_| bad())?;
            return WeightSpec::uniform(k);
        }
        if let Some(body) = s.strip_prefix("map:") {
            let mut m = BTreeMap::new();
            for item in body.split(',') {
                let (k, v) = item.split_once('=').ok_or_else(bad)?;
                let k: usize = k.trim().parse().map_err(|_| bad())?;
                let v = parse_rat(v).ok_or_else(bad)?;
                m.insert(k, v);
            }
            return WeightSpec::from_map(m).map_err(|_| bad());
        }
        Err(bad())
    }
}

/// Weights `t_{n,r}` of rooted spanning hyperforests with `r` hypertrees,
/// `r = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootedTable {
    pub n: usize,
    pub counts: Vec<Rat>,
}

/// Weights `u_{n,p}` of unrooted spanning hyperforests with `p`
/// hypertrees, `p = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnrootedTable {
    pub n: usize,
    pub counts: Vec<Rat>,
}

impl RootedTable {
    pub fn total(&self) -> Rat {
        self.counts.iter().sum()
    }

    /// Generating polynomial `E_n(t) = Σ_r t_{n,r} t^r`.
    pub fn gen_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(Var::T, self.counts.clone())
    }
}

impl UnrootedTable {
    pub fn total(&self) -> Rat {
        self.counts.iter().sum()
    }

    /// Generating polynomial `F_n(λ) = Σ_p u_{n,p} λ^p`.
    pub fn gen_poly(&self) -> UniPoly {
        UniPoly::from_coeffs(Var::Lambda, self.counts.clone())
    }
}

/// `P_0..P_s` from the recursion
/// `P_s(x) = x Σ_k w_k C(s-1, k-2) P_{s-(k-1)}(x)`, `P_0 = 1`.
pub fn rooted_polys_upto(s_max: usize, w: &WeightSpec) -> Vec<UniPoly> {
    let support = w.support(s_max + 1);
    let mut polys = Vec::with_capacity(s_max + 1);
    polys.push(UniPoly::one(Var::X));
    for s in 1..=s_max {
        let mut sum = UniPoly::zero(Var::X);
        for &k in &support {
            if k - 1 > s {
                break;
            }
            let c = Rat::from_integer(binomial(s - 1, k - 2)) * w.w(k);
            if !c.is_zero() {
                sum = Ring::add(&sum, &polys[s - (k - 1)].scale(&c));
            }
        }
        polys.push(sum.shift_up(1));
    }
    polys
}

/// The polynomial `P_s(x)` for the given weights.
pub fn rooted_poly(s: usize, w: &WeightSpec) -> UniPoly {
    rooted_polys_upto(s, w)
        .pop()
        .expect("nonempty by construction")
}

/// Rooted table `t_{n,r} = C(n-1, r-1) P_{n-r}(n)`; `t_{n,0} = 0` and
/// `t_{n,n} = 1` for every weight choice.  `n = 0` yields the empty-forest
/// convention `t_{0,0} = 1`.
pub fn rooted_table(n: usize, w: &WeightSpec) -> RootedTable {
    if n == 0 {
        return RootedTable {
            n: 0,
            counts: vec![rat_int(1)],
        };
    }
    let polys = rooted_polys_upto(n - 1, w);
    let x = Rat::from_integer(Int::from(n));
    let mut counts = vec![rat_int(0); n + 1];
    for r in 1..=n {
        counts[r] = Rat::from_integer(binomial(n - 1, r - 1)) * polys[n - r].eval(&x);
    }
    RootedTable { n, counts }
}

/// Total rooted-hyperforest weight `E_n(1) = Σ_r t_{n,r}`.
pub fn rooted_total(n: usize, w: &WeightSpec) -> Rat {
    rooted_table(n, w).total()
}

/// `Π_0..Π_s` as polynomials in `λ`, extracted from one truncated-series
/// exponential of `λ K(y)` with `K(y) = y + Σ_k w_k (1-k) y^k / k!`.
pub fn component_polys_upto(s_max: usize, w: &WeightSpec) -> Vec<UniPoly> {
    let lambda = UniPoly::variable(Var::Lambda);
    let mut inner = TruncatedSeries::<UniPoly>::monomial(s_max, 1, lambda.clone());
    for k in w.support(s_max) {
        let c = w.w(k) * Rat::new(Int::from(1i64 - k as i64), factorial(k));
        inner = inner.add(&TruncatedSeries::monomial(s_max, k, lambda.scale(&c)));
    }
    let gf = inner.exp().expect("zero constant term by construction");
    (0..=s_max)
        .map(|s| gf.coeff(s).scale(&Rat::from_integer(factorial(s))))
        .collect()
}

/// The monic polynomial `Π_s(λ)`; its coefficients `π_{s,p}` weigh the
/// ways a hyperforest with `s` rooted hypertrees splits into `p` unrooted
/// ones.
pub fn component_poly(s: usize, w: &WeightSpec) -> UniPoly {
    component_polys_upto(s, w)
        .pop()
        .expect("nonempty by construction")
}

/// Closed-form coefficient `π_{s,p}` for all-ones weights:
/// `Σ_q (-1)^(s-p-q) C(p, s-p-q) {p+q, p} s!/(p+q)!`.
pub fn component_coeff_all_ones(s: usize, p: usize) -> Rat {
    if p > s {
        return rat_int(0);
    }
    let s_fact = factorial(s);
    let mut acc = rat_int(0);
    let q_lo = s.saturating_sub(2 * p);
    for q in q_lo..=(s - p) {
        let m = s - p - q; // index into C(p, ·), 0..=p by the q range
        let mut term = Rat::from_integer(binomial(p, m) * stirling2(p + q, p) * &s_fact)
            / Rat::from_integer(factorial(p + q));
        if m % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// Unrooted table via `u_{n,p} = Σ_s π_{s,p} t_{n,s}`.
pub fn unrooted_table(n: usize, w: &WeightSpec) -> UnrootedTable {
    if n == 0 {
        return UnrootedTable {
            n: 0,
            counts: vec![rat_int(1)],
        };
    }
    let rooted = rooted_table(n, w);
    let pis = component_polys_upto(n, w);
    let mut counts = vec![rat_int(0); n + 1];
    for (pi_s, t_s) in pis.iter().zip(&rooted.counts).skip(1) {
        if t_s.is_zero() {
            continue;
        }
        for (u, pi) in counts.iter_mut().zip(pi_s.coeffs()).skip(1) {
            if !pi.is_zero() {
                *u += pi * t_s;
            }
        }
    }
    UnrootedTable { n, counts }
}

/// Generating polynomial `F_n(λ) = Σ_s Π_s(λ) t_{n,s}`.
pub fn unrooted_gen_poly(n: usize, w: &WeightSpec) -> UniPoly {
    unrooted_table(n, w).gen_poly()
}

/// Total unrooted-hyperforest weight `F_n(1)`.
pub fn unrooted_total(n: usize, w: &WeightSpec) -> Rat {
    unrooted_table(n, w).total()
}

/// Unrooted count `u_{n,p}` on the `k`-uniform complete hypergraph through
/// the associated-Laguerre representation
///
/// `u_{n,p} = (n-1)!/m! (n/(k-1)!)^m (-(k-1)/(kn))^p
///            [p L_p^(m-p)(kn/(k-1)) + (n-p) L_{p-1}^(m-p)(kn/(k-1))]`
///
/// with `m = (n-p)/(k-1)`; zero when `(k-1)` does not divide `n-p`.
pub fn unrooted_uniform_via_laguerre(n: usize, p: usize, k: usize) -> Rat {
    assert!(k >= 2 && p >= 1 && p <= n);
    if !(n - p).is_multiple_of(k - 1) {
        return rat_int(0);
    }
    let m = (n - p) / (k - 1);
    let alpha = Rat::from_integer(Int::from(m as i64 - p as i64));
    let z = Rat::new(Int::from(k * n), Int::from(k - 1));
    let bracket = Rat::from_integer(Int::from(p)) * assoc_laguerre(p, &alpha, &z)
        + Rat::from_integer(Int::from(n - p)) * assoc_laguerre(p - 1, &alpha, &z);
    let mut front = Rat::new(factorial(n - 1), factorial(m));
    front *= Rat::new(Int::from(n), factorial(k - 1)).pow(m as i32);
    front *= Rat::new(Int::from(k as i64 - 1), Int::from(k * n)).pow(p as i32)
        * if p % 2 == 1 { -rat_int(1) } else { rat_int(1) };
    front * bracket
}
