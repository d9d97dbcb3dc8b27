//! Truncated formal power series over exact rationals.
//!
//! A series of order `N` stores the coefficients of `t^0 .. t^{N-1}` and
//! represents a residue class modulo `t^N`. Truncation is explicit
//! throughout: binary operations require equal orders and never extend or
//! shrink them silently, so the precision of every intermediate result is
//! visible at the call site.
//!
//! Beyond ring arithmetic the module provides reciprocals, composition,
//! square roots with constant term one, compositional inverses (both by
//! Newton iteration and coefficient-by-coefficient Lagrange inversion), and
//! formal derivatives. The two inversion routes share no code, which makes
//! them useful as mutual cross-checks.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, ratio, ExactScalar};

/// A formal power series truncated at a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactScalar>,
}

impl TruncatedSeries {
    /// Wraps a coefficient vector; `coeffs[i]` is the coefficient of `t^i`
    /// and the order is `coeffs.len()`.
    pub fn from_coeffs(coeffs: Vec<ExactScalar>) -> Self {
        Self { coeffs }
    }

    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ExactScalar::zero(); order],
        }
    }

    /// The constant series `c` of the given order.
    pub fn constant(c: ExactScalar, order: usize) -> Self {
        assert!(order > 0, "constant series needs order >= 1");
        let mut coeffs = vec![ExactScalar::zero(); order];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(ExactScalar::one(), order)
    }

    /// The monomial `c * t^e`, zero when `e >= order`.
    pub fn monomial(c: ExactScalar, e: usize, order: usize) -> Self {
        let mut coeffs = vec![ExactScalar::zero(); order];
        if e < order {
            coeffs[e] = c;
        }
        Self { coeffs }
    }

    /// The identity series `t`.
    pub fn t(order: usize) -> Self {
        Self::monomial(ExactScalar::one(), 1, order)
    }

    /// Builds a series by evaluating `f(i)` for each coefficient index.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ExactScalar) -> Self {
        Self {
            coeffs: (0..order).map(f).collect(),
        }
    }

    /// Number of stored coefficients; the series is a class mod `t^order`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// The coefficient of `t^i`. Panics when `i >= order`.
    pub fn coeff(&self, i: usize) -> &ExactScalar {
        &self.coeffs[i]
    }

    /// All coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Consumes the series and returns its coefficients.
    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    /// Discards coefficients from `t^order` on. Panics when asked to extend.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "truncated cannot extend order {} to {}",
            self.order(),
            order
        );
        Self {
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    /// Zero-pads up to the given order. Panics when asked to shrink.
    pub(crate) fn extended(&self, order: usize) -> Self {
        assert!(
            order >= self.order(),
            "extended cannot shrink order {} to {}",
            self.order(),
            order
        );
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, ExactScalar::zero());
        Self { coeffs }
    }

    /// Multiplies by `t^m` at fixed order, dropping the top `m` coefficients.
    pub(crate) fn shifted_up(&self, m: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![ExactScalar::zero(); n];
        for i in 0..n.saturating_sub(m) {
            coeffs[i + m] = self.coeffs[i].clone();
        }
        Self { coeffs }
    }

    /// Divides by `t^m`; the first `m` coefficients must vanish. The order
    /// drops by `m` because nothing is known about the new top coefficients.
    pub(crate) fn shifted_down(&self, m: usize) -> Self {
        assert!(m <= self.order());
        assert!(
            self.coeffs[..m].iter().all(Zero::is_zero),
            "shifted_down requires the low {} coefficients to vanish",
            m
        );
        Self {
            coeffs: self.coeffs[m..].to_vec(),
        }
    }

    /// Scalar multiple.
    pub fn scaled(&self, c: &ExactScalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum. Orders must match.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Coefficient-wise difference. Orders must match.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    ///
    /// Time: O(N^2) rational multiplications; zero coefficients are skipped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let n = self.order();
        let mut coeffs = vec![ExactScalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    ///
    /// Uses the triangular recurrence `g_m = -(1/f_0) * sum f_i g_{m-i}`.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs.first().ok_or(Error::NotAUnit)?;
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut g = vec![ExactScalar::zero(); n];
        g[0] = inv0.clone();
        for m in 1..n {
            let mut acc = ExactScalar::zero();
            for i in 1..=m {
                if self.coeffs[i].is_zero() || g[m - i].is_zero() {
                    continue;
                }
                acc += &self.coeffs[i] * &g[m - i];
            }
            if !acc.is_zero() {
                g[m] = -(acc * &inv0);
            }
        }
        Ok(Self { coeffs: g })
    }

    /// Substitutes `inner` for the variable; `inner` must have constant
    /// term zero so the result is well defined at finite order.
    ///
    /// Horner evaluation from the top coefficient down: O(N) series
    /// multiplications.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_orders(inner)?;
        if let Some(c0) = inner.coeffs.first() {
            if !c0.is_zero() {
                return Err(Error::CompositionConstantTerm);
            }
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let mut acc = Self::constant(self.coeffs[n - 1].clone(), n);
        for i in (0..n - 1).rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        Self {
            coeffs: (1..n)
                .map(|i| &self.coeffs[i] * rat(i as i64))
                .collect(),
        }
    }

    /// Square root with constant term one.
    ///
    /// Newton iteration `y <- (y + f/y) / 2` doubling the correct order
    /// each round, so the cost is dominated by the final full-order
    /// reciprocal and product.
    pub fn sqrt(&self) -> Result<Self> {
        match self.coeffs.first() {
            Some(c0) if c0.is_one() => {}
            _ => return Err(Error::SqrtConstantTerm),
        }
        let n = self.order();
        let mut y = Self::one(1);
        let mut m = 1usize;
        while m < n {
            let m2 = (2 * m).min(n);
            let f = self.truncated(m2);
            let y2 = y.extended(m2);
            let q = f.mul(&y2.reciprocal()?)?;
            y = y2.add(&q)?.scaled(&ratio(1, 2));
            m = m2;
        }
        Ok(y)
    }

    /// Compositional inverse of a series with constant term zero and
    /// linear term one, computed by Newton iteration with order doubling:
    /// `g <- g - (f(g) - t) / f'(g)`.
    pub fn comp_inverse(&self) -> Result<Self> {
        if self.order() < 2
            || !self.coeffs[0].is_zero()
            || !self.coeffs[1].is_one()
        {
            return Err(Error::NotReversible);
        }
        let n = self.order();
        let mut g = Self::from_coeffs(vec![ExactScalar::zero(), ExactScalar::one()]);
        let mut m = 2usize;
        while m < n {
            let m2 = (2 * m).min(n);
            let f = self.truncated(m2);
            let g2 = g.extended(m2);
            let num = f.compose(&g2)?.sub(&Self::t(m2))?;
            let den = f.derivative().extended(m2).compose(&g2)?;
            let correction = num.mul(&den.reciprocal()?)?;
            g = g2.sub(&correction)?;
            m = m2;
        }
        Ok(g)
    }

    /// Coefficient `n` of the compositional inverse, straight from the
    /// Lagrange inversion formula: `(1/(n+1)) [u^n] (u/f(u))^(n+1)`.
    ///
    /// Independent of `comp_inverse`, so the two can validate each other.
    /// Requires order at least `n + 2`.
    pub fn lagrange_coefficient(&self, n: usize) -> Result<ExactScalar> {
        if self.order() < 2
            || !self.coeffs[0].is_zero()
            || !self.coeffs[1].is_one()
        {
            return Err(Error::NotReversible);
        }
        if self.order() < n + 2 {
            return Err(Error::InsufficientOrder {
                needed: n + 2,
                order: self.order(),
            });
        }
        // f(u)/u has constant term one, so (u/f(u))^(n+1) is a unit power.
        let base = Self::from_coeffs(self.coeffs[1..n + 2].to_vec());
        let power = base.reciprocal()?.pow(n + 1)?;
        Ok(power.coeff(n) / rat(n as i64 + 1))
    }

    /// `self^e` by repeated squaring at fixed order.
    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::one(self.order().max(1));
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for TruncatedSeries {
    /// Comma-separated reduced rationals, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}
