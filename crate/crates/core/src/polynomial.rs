//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so
//! structural equality is mathematical equality. The zero polynomial is the
//! empty vector and has no degree.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactScalar>,
}

impl Polynomial {
    /// Builds a polynomial, stripping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c x^e`.
    pub fn monomial(c: ExactScalar, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ExactScalar::zero(); e + 1];
        coeffs[e] = c;
        Self { coeffs }
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(ExactScalar::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `x^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> ExactScalar {
        self.coeffs.get(j).cloned().unwrap_or_else(ExactScalar::zero)
    }

    /// Coefficients lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeff(i) + other.coeff(i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| self.coeff(i) - other.coeff(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scaled(&self, c: &ExactScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Schoolbook product. Time: O(deg^2).
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs =
            vec![ExactScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`. Exact over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroPolynomialDivision)?;
        let lead_inv = divisor.coeffs[d_deg].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Self::zero(), self.clone()));
        }
        let q_len = rem.len() - d_deg;
        let mut quot = vec![ExactScalar::zero(); q_len];
        for i in (0..q_len).rev() {
            let c = &rem[i + d_deg] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let sub = d * &c;
                rem[i + j] -= sub;
            }
            quot[i] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact interpolation through points with pairwise distinct abscissas.
    ///
    /// Lagrange basis construction: O(n^3) rational operations, fine for
    /// the small degrees used here.
    pub fn interpolate(points: &[(ExactScalar, ExactScalar)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::one();
            let mut denom = ExactScalar::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&Self::new(vec![-xj, ExactScalar::one()]));
                let diff = xi - xj;
                assert!(!diff.is_zero(), "interpolation nodes must be distinct");
                denom *= diff;
            }
            acc = acc.add(&basis.scaled(&(yi / denom)));
        }
        acc
    }
}
