//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;

use num_traits::{One, Signed};

use super::{rat_int, Rat, Ring};

/// Variable tag carried by a polynomial.  Constants are variable-agnostic:
/// arithmetic between a constant and any polynomial adopts the latter's
/// variable, and two constants compare equal regardless of the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Argument of the `P_s` family (evaluated at `x = n`).
    X,
    /// Component-counting variable of unrooted generating polynomials.
    Lambda,
    /// Root-counting variable of rooted generating polynomials.
    T,
    /// Expansion variable of the two-level series-over-polynomial pattern.
    Y,
    /// Auxiliary variable for fractional-power identities checked under
    /// the substitution `λ = μ^k`.
    Mu,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::X => "x",
            Var::Lambda => "λ",
            Var::T => "t",
            Var::Y => "y",
            Var::Mu => "μ",
        };
        f.write_str(s)
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the degree-`i` coefficient
/// and the top coefficient is nonzero unless the polynomial is zero (empty
/// coefficient list).
#[derive(Debug, Clone)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero(var: Var) -> Self {
        UniPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant_in(var, rat_int(1))
    }

    /// Constant polynomial; the variable tag is irrelevant for constants.
    pub fn constant(c: Rat) -> Self {
        Self::constant_in(Var::X, c)
    }

    pub fn constant_in(var: Var, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero(var)
        } else {
            UniPoly {
                var,
                coeffs: vec![c],
            }
        }
    }

    /// The monic degree-one polynomial `var`.
    pub fn variable(var: Var) -> Self {
        Self::monomial(var, 1, rat_int(1))
    }

    pub fn monomial(var: Var, degree: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![rat_int(0); degree + 1];
        coeffs[degree] = c;
        UniPoly { var, coeffs }
    }

    pub fn from_coeffs(var: Var, coeffs: Vec<Rat>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree-`i` coefficient (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Variable of the result of a binary operation; panics on a genuine
    /// mismatch (two non-constant operands in different variables), which
    /// is always a programming error here.
    fn unified_var(&self, rhs: &Self) -> Var {
        if self.is_constant() {
            rhs.var
        } else if rhs.is_constant() || self.var == rhs.var {
            self.var
        } else {
            panic!(
                "mixed-variable polynomial arithmetic: {:?} vs {:?}",
                self.var, rhs.var
            )
        }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rat) -> Rat {
        let mut acc = rat_int(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Self::from_coeffs(self.var, coeffs)
    }

    /// Multiplication by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![rat_int(0); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly {
            var: self.var,
            coeffs,
        }
    }

    /// Substitution `var -> new_var^k`: degree-`j` terms move to `k*j`.
    pub fn inflate(&self, k: usize, new_var: Var) -> Self {
        assert!(k >= 1);
        let mut coeffs = vec![rat_int(0); self.coeffs.len().saturating_sub(1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c.clone();
        }
        Self::from_coeffs(new_var, coeffs)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..e {
            acc = Ring::mul(&acc, self);
        }
        acc
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        (self.is_constant() || other.is_constant() || self.var == other.var)
            && self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly {}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero(Var::X)
    }
    fn one() -> Self {
        UniPoly::one(Var::X)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let var = self.unified_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Self::from_coeffs(var, coeffs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Ring::add(self, &Ring::neg(rhs))
    }
    fn mul(&self, rhs: &Self) -> Self {
        let var = self.unified_var(rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero(var);
        }
        let mut coeffs = vec![rat_int(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(var, coeffs)
    }
    fn neg(&self) -> Self {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    f.write_str("*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}
