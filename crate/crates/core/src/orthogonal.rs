//! Orthogonal polynomial families for the moment functional.
//!
//! The linear functional sends `x^j` to the moment `mu_j(h, k)`. Against
//! it, the monic family built on the recurrence
//! `Q[n] = (x - h) Q[n-1] - k Q[n-2]` is orthogonal: cross pairings vanish
//! and the squared norms are the powers `k^n`. The same family has an
//! explicit binomial expansion in powers of `x - h`, a coefficient-level
//! closed form, and two classical specializations: the seed-parameter
//! family from the recurrence module (centered at `-h`, orthogonal once
//! the sign of `h` is flipped in the functional) and the Dickson
//! polynomials of the second kind at `h = 0`.
//!
//! Pairing the Dickson family against the centered functional collapses to
//! a Catalan-number identity, exposed here in a raw integer form and a
//! `k`-weighted form.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::moments::catalan;
use crate::polynomial::Polynomial;
use crate::scalar::{binom_int, pow, rat, ExactScalar};

/// The moment functional for a weight pair `(h, k)`, with `k` nonzero.
/// Moments are produced by the holonomic recurrence and cached, so
/// repeated pairings over a grid stay cheap.
#[derive(Clone, Debug)]
pub struct MomentFunctional {
    h: ExactScalar,
    k: ExactScalar,
    cache: Vec<ExactScalar>,
}

impl MomentFunctional {
    pub fn new(h: ExactScalar, k: ExactScalar) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroK);
        }
        let cache = vec![ExactScalar::one(), h.clone()];
        Ok(Self { h, k, cache })
    }

    pub fn h(&self) -> &ExactScalar {
        &self.h
    }

    pub fn k(&self) -> &ExactScalar {
        &self.k
    }

    /// The moment `mu_j`, extending the cache as needed.
    pub fn moment(&mut self, j: usize) -> ExactScalar {
        while self.cache.len() <= j {
            let n = self.cache.len();
            let disc = &self.h * &self.h - rat(4) * &self.k;
            let a = &self.h * rat(2 * n as i64 + 1) * &self.cache[n - 1];
            let b = disc * rat(n as i64 - 1) * &self.cache[n - 2];
            self.cache.push((a - b) / rat(n as i64 + 2));
        }
        self.cache[j].clone()
    }
}

/// Applies the functional to a polynomial: `sum c_j mu_j`.
pub fn apply_functional(v: &mut MomentFunctional, p: &Polynomial) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for (j, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc += c * v.moment(j);
    }
    acc
}

/// The monic orthogonal family by its recurrence:
/// `Q[0] = 1`, `Q[1] = x - h`, `Q[n] = (x - h) Q[n-1] - k Q[n-2]`.
pub fn orthogonal_family(n: usize, h: &ExactScalar, k: &ExactScalar) -> Result<Polynomial> {
    if k.is_zero() {
        return Err(Error::ZeroK);
    }
    let step = Polynomial::new(vec![-h, ExactScalar::one()]);
    let mut prev = Polynomial::zero();
    let mut cur = Polynomial::one();
    for _ in 0..n {
        let next = step.mul(&cur).sub(&prev.scaled(k));
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The same family in closed form:
/// `sum_l C(n-l, l) (-k)^l (x - h)^(n-2l)`.
pub fn p_explicit(n: usize, h: &ExactScalar, k: &ExactScalar) -> Polynomial {
    let base = Polynomial::new(vec![-h, ExactScalar::one()]);
    let mut base_pows = Vec::with_capacity(n + 1);
    base_pows.push(Polynomial::one());
    for e in 1..=n {
        base_pows.push(base_pows[e - 1].mul(&base));
    }
    let minus_k = -k;
    let mut acc = Polynomial::zero();
    for l in 0..=n / 2 {
        let c = ExactScalar::from_integer(binom_int((n - l) as u64, l as u64))
            * pow(&minus_k, l);
        acc = acc.add(&base_pows[n - 2 * l].scaled(&c));
    }
    acc
}

/// The coefficient of `x^j` in the closed form, summed term by term:
/// `sum_l C(n-l, l) C(n-2l, j) (-h)^(n-2l-j) (-k)^l`.
pub fn p_coefficient(
    n: usize,
    j: usize,
    h: &ExactScalar,
    k: &ExactScalar,
) -> ExactScalar {
    let minus_h = -h;
    let minus_k = -k;
    let mut acc = ExactScalar::zero();
    for l in 0..=n / 2 {
        if n - 2 * l < j {
            continue;
        }
        let c = binom_int((n - l) as u64, l as u64)
            * binom_int((n - 2 * l) as u64, j as u64);
        if c.is_zero() {
            continue;
        }
        acc += ExactScalar::from_integer(c)
            * pow(&minus_h, n - 2 * l - j)
            * pow(&minus_k, l);
    }
    acc
}

/// Dickson polynomials of the second kind:
/// `E[n](x, k) = sum_i C(n-i, i) (-k)^i x^(n-2i)`, the `h = 0` member of
/// the family.
pub fn dickson_e(n: usize, k: &ExactScalar) -> Polynomial {
    let minus_k = -k;
    let mut coeffs = vec![ExactScalar::zero(); n + 1];
    for i in 0..=n / 2 {
        coeffs[n - 2 * i] =
            ExactScalar::from_integer(binom_int((n - i) as u64, i as u64))
                * pow(&minus_k, i);
    }
    Polynomial::new(coeffs)
}

/// Result of pairing `Q[n]` against the functional.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaCheck {
    /// Whether the pairing equals `1` at `n = 0` and `0` otherwise.
    pub holds: bool,
    /// The pairing minus its expected value, exactly.
    pub residual: ExactScalar,
}

/// Pairs the degree `n` family member against its own functional and
/// compares with the Kronecker delta at zero.
pub fn delta_relation_check(
    n: usize,
    h: &ExactScalar,
    k: &ExactScalar,
) -> Result<DeltaCheck> {
    let mut v = MomentFunctional::new(h.clone(), k.clone())?;
    let q = orthogonal_family(n, h, k)?;
    let expected = if n == 0 { rat(1) } else { rat(0) };
    let residual = apply_functional(&mut v, &q) - expected;
    Ok(DeltaCheck {
        holds: residual.is_zero(),
        residual,
    })
}

/// The alternating Catalan convolution
/// `sum_i C(2m - i, i) (-1)^i Cat(m - i)`, which telescopes to the
/// Kronecker delta at `m = 0`.
pub fn catalan_identity_core(m: usize) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    let mut sign = ExactScalar::one();
    for i in 0..=m {
        acc += ExactScalar::from_integer(binom_int((2 * m - i) as u64, i as u64))
            * &sign
            * catalan(m - i);
        sign = -sign;
    }
    acc
}

/// The `k`-weighted form `sum_i C(2m - i, i) (-k)^i k^(m-i) Cat(m - i)`,
/// equal to `k^m` times the core sum and so again the delta. This is what
/// pairing the even Dickson polynomial against the centered functional
/// produces term by term.
pub fn catalan_identity(m: usize, k: &ExactScalar) -> ExactScalar {
    let minus_k = -k;
    let mut acc = ExactScalar::zero();
    for i in 0..=m {
        acc += ExactScalar::from_integer(binom_int((2 * m - i) as u64, i as u64))
            * pow(&minus_k, i)
            * pow(k, m - i)
            * catalan(m - i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::p_poly;
    use crate::scalar::ratio;

    #[test]
    fn functional_requires_nonzero_k() {
        assert!(MomentFunctional::new(rat(1), rat(0)).is_err());
    }

    #[test]
    fn functional_reproduces_motzkin_moments() {
        let mut v = MomentFunctional::new(rat(1), rat(1)).unwrap();
        assert_eq!(v.moment(0), rat(1));
        assert_eq!(v.moment(5), rat(21));
        assert_eq!(v.moment(3), rat(4));
    }

    #[test]
    fn apply_functional_is_linear() {
        let mut v = MomentFunctional::new(rat(2), rat(1)).unwrap();
        let p = Polynomial::new(vec![rat(3), rat(0), rat(-1)]);
        // 3 mu_0 - mu_2 with mu(2,1) the shifted Catalans: 3 - 5 = -2.
        assert_eq!(apply_functional(&mut v, &p), rat(-2));
        assert_eq!(apply_functional(&mut v, &Polynomial::zero()), rat(0));
    }

    #[test]
    fn family_recurrence_and_closed_form_agree() {
        for h in [-2i64, 0, 1, 3] {
            for k in [-2i64, 1, 2] {
                for n in 0..=12 {
                    assert_eq!(
                        orthogonal_family(n, &rat(h), &rat(k)).unwrap(),
                        p_explicit(n, &rat(h), &rat(k))
                    );
                }
            }
        }
    }

    #[test]
    fn family_matches_seed_polynomials_with_flipped_center() {
        // The seed-parameter family runs on (x + h); flipping h aligns it
        // with the orthogonal family.
        for n in 0..=10i64 {
            let q = p_explicit(n as usize, &rat(3), &rat(2));
            let p = p_poly(&rat(-3), &rat(2), n);
            assert_eq!(q, p);
        }
    }

    #[test]
    fn explicit_low_degrees() {
        let h = rat(1);
        let k = rat(1);
        assert_eq!(p_explicit(0, &h, &k), Polynomial::one());
        // Q1 = x - 1
        assert_eq!(p_explicit(1, &h, &k), Polynomial::new(vec![rat(-1), rat(1)]));
        // Q2 = (x-1)^2 - 1 = x^2 - 2x
        assert_eq!(
            p_explicit(2, &h, &k),
            Polynomial::new(vec![rat(0), rat(-2), rat(1)])
        );
    }

    #[test]
    fn coefficient_formula_matches_expansion() {
        let h = ratio(1, 2);
        let k = rat(-3);
        for n in 0..=12usize {
            let q = p_explicit(n, &h, &k);
            for j in 0..=n {
                assert_eq!(p_coefficient(n, j, &h, &k), q.coeff(j));
            }
        }
    }

    #[test]
    fn dickson_is_the_centered_family() {
        for k in [-2i64, 1, 3] {
            for n in 0..=12 {
                assert_eq!(
                    dickson_e(n, &rat(k)),
                    p_explicit(n, &rat(0), &rat(k))
                );
            }
        }
    }

    #[test]
    fn dickson_low_degrees() {
        let k = rat(2);
        // E2 = x^2 - 2, E3 = x^3 - 4x, E4 = x^4 - 6x^2 + 4.
        assert_eq!(
            dickson_e(2, &k),
            Polynomial::new(vec![rat(-2), rat(0), rat(1)])
        );
        assert_eq!(
            dickson_e(3, &k),
            Polynomial::new(vec![rat(0), rat(-4), rat(0), rat(1)])
        );
        assert_eq!(
            dickson_e(4, &k),
            Polynomial::new(vec![rat(4), rat(0), rat(-6), rat(0), rat(1)])
        );
    }

    #[test]
    fn cross_pairings_vanish() {
        for h in [-1i64, 0, 2] {
            for k in [-2i64, 1, 2] {
                let mut v = MomentFunctional::new(rat(h), rat(k)).unwrap();
                for m in 0..=8usize {
                    for n in 0..m {
                        let qm = orthogonal_family(m, &rat(h), &rat(k)).unwrap();
                        let qn = orthogonal_family(n, &rat(h), &rat(k)).unwrap();
                        assert_eq!(
                            apply_functional(&mut v, &qm.mul(&qn)),
                            rat(0),
                            "pairing {} x {} at h={}, k={}",
                            m,
                            n,
                            h,
                            k
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn squared_norms_are_powers_of_k() {
        for h in [-1i64, 0, 2] {
            for k in [-2i64, 1, 2] {
                let mut v = MomentFunctional::new(rat(h), rat(k)).unwrap();
                for n in 0..=8usize {
                    let q = orthogonal_family(n, &rat(h), &rat(k)).unwrap();
                    assert_eq!(
                        apply_functional(&mut v, &q.mul(&q)),
                        pow(&rat(k), n)
                    );
                }
            }
        }
    }

    #[test]
    fn delta_relation_holds_for_own_functional() {
        for n in 0..=10usize {
            let check = delta_relation_check(n, &rat(2), &rat(-1)).unwrap();
            assert!(check.holds);
            assert_eq!(check.residual, rat(0));
        }
    }

    #[test]
    fn mismatched_center_breaks_orthogonality() {
        // Pairing the (x + h) seed family against mu(h, k) instead of
        // mu(-h, k) leaves a nonzero first pairing: V[x + h] = 2h.
        let mut v = MomentFunctional::new(rat(3), rat(1)).unwrap();
        let p1 = p_poly(&rat(3), &rat(1), 1);
        assert_eq!(apply_functional(&mut v, &p1), rat(6));
    }

    #[test]
    fn seed_family_is_orthogonal_for_flipped_functional() {
        let h = rat(2);
        let k = rat(3);
        let mut v = MomentFunctional::new(-&h, k.clone()).unwrap();
        for m in 0..=6usize {
            for n in 0..=6usize {
                let pm = p_poly(&h, &k, m as i64);
                let pn = p_poly(&h, &k, n as i64);
                let pairing = apply_functional(&mut v, &pm.mul(&pn));
                let expected = if m == n { pow(&k, n) } else { rat(0) };
                assert_eq!(pairing, expected);
            }
        }
    }

    #[test]
    fn catalan_core_telescopes_to_delta() {
        assert_eq!(catalan_identity_core(0), rat(1));
        for m in 1..=40usize {
            assert_eq!(catalan_identity_core(m), rat(0), "m = {}", m);
        }
    }

    #[test]
    fn weighted_catalan_identity_is_delta() {
        for k in [-3i64, -1, 1, 2, 5] {
            assert_eq!(catalan_identity(0, &rat(k)), rat(1));
            for m in 1..=15usize {
                assert_eq!(catalan_identity(m, &rat(k)), rat(0));
            }
        }
    }

    #[test]
    fn weighted_identity_matches_dickson_pairing() {
        // V_(0,k)[E_2m] expands term by term into the weighted sum.
        for k in [-2i64, 1, 3] {
            let mut v = MomentFunctional::new(rat(0), rat(k)).unwrap();
            for m in 0..=8usize {
                let paired = apply_functional(&mut v, &dickson_e(2 * m, &rat(k)));
                assert_eq!(paired, catalan_identity(m, &rat(k)));
            }
        }
    }

    #[test]
    fn odd_dickson_pairings_vanish_by_parity() {
        let mut v = MomentFunctional::new(rat(0), rat(2)).unwrap();
        for m in 0..=7usize {
            assert_eq!(
                apply_functional(&mut v, &dickson_e(2 * m + 1, &rat(2))),
                rat(0)
            );
        }
    }
}
