//! Truncated formal power series over an abstract coefficient ring.
//!
//! A series carries its truncation order `N` and exactly the coefficients
//! `0..=N`.  Every operation is exact on that window; combining series of
//! different orders truncates to the smaller one, and the result records
//! the order it is valid to.

use super::{rat_int, Rat, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, R::one())
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(order, 1, R::one())
    }

    pub fn monomial(order: usize, index: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        if index <= order {
            s.coeffs[index] = c;
        }
        s
    }

    /// Builds from raw coefficients, padding with zeros or dropping
    /// coefficients beyond the order.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> &R {
        assert!(
            i <= self.order,
            "coefficient {} beyond truncation order {}",
            i,
            self.order
        );
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|i| self.coeffs[i].add(&rhs.coeffs[i]))
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn scale_ring(&self, c: &R) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries { order, coeffs }
    }

    /// Multiplication by `z^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); self.order + 1];
        if k <= self.order {
            coeffs[k..].clone_from_slice(&self.coeffs[..=self.order - k]);
        }
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `Σ_n n a_n z^n`, i.e. `z d/dz`.
    pub fn z_d_dz(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.scale(&Rat::from_integer(i.into())))
            .collect();
        TruncatedSeries {
            order: self.order,
            coeffs,
        }
    }

    /// Composition `self(inner)`; the inner series must have a zero
    /// constant term for the result to be well defined order by order.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let inner = inner.truncate(order);
        // Horner over the outer coefficients.
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Exponential of a series with zero constant term, via the
    /// coefficient recurrence of `f' = s' f`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order;
        let mut coeffs = vec![R::zero(); order + 1];
        coeffs[0] = R::one();
        for n in 1..=order {
            let mut acc = R::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    let term = self.coeffs[j].mul(&coeffs[n - j]);
                    acc = acc.add(&term.scale(&Rat::from_integer(j.into())));
                }
            }
            coeffs[n] = acc.scale(&Rat::new(1.into(), n.into()));
        }
        Ok(TruncatedSeries { order, coeffs })
    }
}

impl TruncatedSeries<Rat> {
    /// Compositional inverse: the unique `r` with `self(r(z)) = z` up to
    /// the truncation order.  Requires `self = c1 z + ...` with `c1 != 0`.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.coeffs.len() < 2 || self.coeffs[1].is_zero() {
            return Err(Error::MissingLinearCoefficient);
        }
        let order = self.order;
        let c1_inv = rat_int(1) / self.coeffs[1].clone();
        let mut rev = TruncatedSeries::monomial(order, 1, c1_inv.clone());
        // Triangular solve: the z^n coefficient of self∘rev is
        // c1*rev_n + (terms already fixed), so each pass pins one more.
        for n in 2..=order {
            let composed = self.truncate(n).compose(&rev.truncate(n))?;
            let correction = composed.coeff(n) * &c1_inv;
            rev.coeffs[n] = -correction;
        }
        Ok(rev)
    }
}
