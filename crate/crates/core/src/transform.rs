//! The group of unit sequences and its transform operators.
//!
//! A unit sequence is a finite prefix `a_0, a_1, ..., a_{N-1}` with
//! `a_0 = 1`. Embedding it as the series `a_0 t + a_1 t^2 + ...` (one order
//! higher than the prefix length, so nothing is lost) turns composition of
//! series into a group product on prefixes. In that group:
//!
//! * `bullet` is the product,
//! * `eta` (the revert transform) is inversion,
//! * `epsilon` (termwise sign alternation) is an automorphism,
//! * `gamma = eta . epsilon` is an anti-automorphism,
//! * geometric sequences `x^n` form a one-parameter subgroup, and left or
//!   right multiplication by them gives the interpolated invert and
//!   binomial transforms.
//!
//! The invert and binomial transforms each have a second, direct
//! implementation (a rational generating function and a binomial
//! convolution); agreement of the two routes is itself a theorem and is
//! exercised heavily by the test suites.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;
use crate::series::TruncatedSeries;

/// A finite prefix of a sequence whose first term is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitSequence {
    terms: Vec<ExactScalar>,
}

impl UnitSequence {
    /// Wraps a term vector after checking it is nonempty and starts with 1.
    pub fn new(terms: Vec<ExactScalar>) -> Result<Self> {
        match terms.first() {
            Some(a0) if a0.is_one() => Ok(Self { terms }),
            _ => Err(Error::NotUnitSequence),
        }
    }

    /// The group identity `1, 0, 0, ...`.
    pub fn identity(len: usize) -> Self {
        assert!(len > 0, "a unit sequence has at least one term");
        let mut terms = vec![ExactScalar::zero(); len];
        terms[0] = ExactScalar::one();
        Self { terms }
    }

    /// The geometric sequence `1, x, x^2, ...`.
    pub fn geometric(x: &ExactScalar, len: usize) -> Self {
        assert!(len > 0, "a unit sequence has at least one term");
        let mut terms = Vec::with_capacity(len);
        let mut p = ExactScalar::one();
        for _ in 0..len {
            terms.push(p.clone());
            p *= x;
        }
        Self { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The term `a_i`. Panics when `i >= len`.
    pub fn term(&self, i: usize) -> &ExactScalar {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[ExactScalar] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<ExactScalar> {
        self.terms
    }

    /// The ordinary generating series `sum a_n t^n` at order `len`.
    pub fn ogf(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.terms.clone())
    }
}

impl fmt::Display for UnitSequence {
    /// Comma-separated reduced rationals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", a)?;
        }
        Ok(())
    }
}

/// Embeds a prefix of length `N` as the order `N + 1` series
/// `a_0 t + a_1 t^2 + ... + a_{N-1} t^N`.
pub fn lambda_embed(a: &UnitSequence) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(a.len() + 1);
    coeffs.push(ExactScalar::zero());
    coeffs.extend_from_slice(a.terms());
    TruncatedSeries::from_coeffs(coeffs)
}

/// Recovers the prefix from an embedded series; the series must have
/// constant term zero and linear term one.
pub fn lambda_extract(f: &TruncatedSeries) -> Result<UnitSequence> {
    if f.order() < 2 || !f.coeff(0).is_zero() || !f.coeff(1).is_one() {
        return Err(Error::NotUnitSequence);
    }
    Ok(UnitSequence {
        terms: f.coeffs()[1..].to_vec(),
    })
}

/// The group product: `lambda_extract(lambda(a) . lambda(b))` where `.` is
/// series composition. Prefix lengths must match.
pub fn bullet(a: &UnitSequence, b: &UnitSequence) -> Result<UnitSequence> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let composed = lambda_embed(a)
        .compose(&lambda_embed(b))
        .expect("embedded series compose cleanly");
    lambda_extract(&composed)
}

/// Revert: the group inverse, realized as the compositional inverse of the
/// embedded series.
pub fn eta(a: &UnitSequence) -> UnitSequence {
    let inv = lambda_embed(a)
        .comp_inverse()
        .expect("embedded series are reversible");
    lambda_extract(&inv).expect("inverse of an embedded series is embedded")
}

/// Sign alternation `a_n -> (-1)^n a_n`.
pub fn epsilon(a: &UnitSequence) -> UnitSequence {
    UnitSequence {
        terms: a
            .terms()
            .iter()
            .enumerate()
            .map(|(n, x)| if n % 2 == 1 { -x } else { x.clone() })
            .collect(),
    }
}

/// Revert-with-signs `gamma = eta . epsilon`, an involution that swaps the
/// left and right actions of the geometric subgroup.
pub fn gamma(a: &UnitSequence) -> UnitSequence {
    eta(&epsilon(a))
}

/// Interpolated invert transform, computed directly from the generating
/// function identity: the result has ogf `A(t) / (1 - x t A(t))`.
pub fn invert_interp(a: &UnitSequence, x: &ExactScalar) -> UnitSequence {
    let n = a.len();
    let num = a.ogf();
    let denom = TruncatedSeries::one(n)
        .sub(&num.shifted_up(1).scaled(x))
        .expect("orders agree by construction");
    let out = num
        .mul(&denom.reciprocal().expect("denominator is a unit"))
        .expect("orders agree by construction");
    UnitSequence {
        terms: out.into_coeffs(),
    }
}

/// Interpolated invert transform as left multiplication by the geometric
/// sequence: `bullet(geometric(x), a)`. Same map as [`invert_interp`]
/// through an unrelated computation.
pub fn invert_interp_via_group(a: &UnitSequence, x: &ExactScalar) -> UnitSequence {
    bullet(&UnitSequence::geometric(x, a.len()), a)
        .expect("lengths agree by construction")
}

/// Interpolated binomial transform, computed directly as the convolution
/// `l_n = sum_j C(n, j) y^(n-j) a_j`.
pub fn binomial_interp(a: &UnitSequence, y: &ExactScalar) -> UnitSequence {
    let n = a.len();
    let y_pows: Vec<ExactScalar> = {
        let mut v = Vec::with_capacity(n);
        let mut p = ExactScalar::one();
        for _ in 0..n {
            v.push(p.clone());
            p *= y;
        }
        v
    };
    // Pascal rows up to n - 1, built once per call.
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    let mut terms = Vec::with_capacity(n);
    for m in 0..n {
        if m > 0 {
            let mut next = vec![BigInt::one(); m + 1];
            for j in 1..m {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        let mut acc = ExactScalar::zero();
        for (j, c) in row.iter().enumerate() {
            let term = &y_pows[m - j] * a.term(j);
            if term.is_zero() {
                continue;
            }
            acc += term * ExactScalar::from_integer(c.clone());
        }
        terms.push(acc);
    }
    UnitSequence { terms }
}

/// Interpolated binomial transform as right multiplication by the geometric
/// sequence: `bullet(a, geometric(y))`. Same map as [`binomial_interp`]
/// through an unrelated computation.
pub fn binomial_interp_via_group(a: &UnitSequence, y: &ExactScalar) -> UnitSequence {
    bullet(a, &UnitSequence::geometric(y, a.len()))
        .expect("lengths agree by construction")
}
