//! Second-order linear recurrent sequences and how the transforms act on
//! their parameters.
//!
//! The family covered here starts at 1 and obeys
//! `w[n] = h * w[n-1] - k * w[n-2]` for `n >= 2`, with `w[1] = b` free.
//! Such prefixes are unit sequences, and the interpolated invert and
//! binomial transforms send the family to itself: only the parameters
//! `(b, h, k)` move. The closed parameter maps are implemented directly and
//! cross-checked against the transforms themselves by the verification
//! suites.
//!
//! The module also exposes the associated monic polynomial family in the
//! seed parameter, whose divisibility along index multiples mirrors the
//! classical strong divisibility of Fibonacci-like sequences, and a
//! reverted-sequence transport rule that trades an invert or binomial step
//! for a parameter change on the other side of the revert transform.

use std::collections::HashMap;

use num_traits::One;

use crate::error::Result;
use crate::polynomial::Polynomial;
use crate::scalar::{rat, ExactScalar};
use crate::series::TruncatedSeries;
use crate::transform::{
    binomial_interp, eta, invert_interp, UnitSequence,
};

/// Parameters of a recurrent sequence `1, b, h*b - k, ...` with rule
/// `w[n] = h * w[n-1] - k * w[n-2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RecParams {
    pub b: ExactScalar,
    pub h: ExactScalar,
    pub k: ExactScalar,
}

impl RecParams {
    pub fn new(b: ExactScalar, h: ExactScalar, k: ExactScalar) -> Self {
        Self { b, h, k }
    }

    /// The generalized Fibonacci member: second term equal to `h`.
    pub fn fibonacci(h: ExactScalar, k: ExactScalar) -> Self {
        Self {
            b: h.clone(),
            h,
            k,
        }
    }
}

/// The first `n_terms` terms of the sequence.
pub fn w_generate(p: &RecParams, n_terms: usize) -> UnitSequence {
    assert!(n_terms > 0, "need at least one term");
    let mut terms = Vec::with_capacity(n_terms);
    terms.push(ExactScalar::one());
    if n_terms > 1 {
        terms.push(p.b.clone());
    }
    for n in 2..n_terms {
        let next = &p.h * &terms[n - 1] - &p.k * &terms[n - 2];
        terms.push(next);
    }
    UnitSequence::new(terms).expect("recurrent sequences start at 1")
}

/// The ordinary generating function `(1 + (b - h) t) / (1 - h t + k t^2)`
/// expanded to the given order.
pub fn gf_series(p: &RecParams, order: usize) -> TruncatedSeries {
    let num = TruncatedSeries::from_fn(order, |i| match i {
        0 => ExactScalar::one(),
        1 => &p.b - &p.h,
        _ => rat(0),
    });
    let den = TruncatedSeries::from_fn(order, |i| match i {
        0 => ExactScalar::one(),
        1 => -&p.h,
        2 => p.k.clone(),
        _ => rat(0),
    });
    num.mul(&den.reciprocal().expect("denominator is a unit"))
        .expect("orders agree by construction")
}

/// Parameter image under the interpolated invert transform:
/// `(b, h, k) -> (b + x, h + x, (h - b) x + k)`.
pub fn map_invert(p: &RecParams, x: &ExactScalar) -> RecParams {
    RecParams {
        b: &p.b + x,
        h: &p.h + x,
        k: (&p.h - &p.b) * x + &p.k,
    }
}

/// Parameter image under the interpolated binomial transform:
/// `(b, h, k) -> (b + y, h + 2y, y^2 + h y + k)`.
pub fn map_binomial(p: &RecParams, y: &ExactScalar) -> RecParams {
    RecParams {
        b: &p.b + y,
        h: &p.h + rat(2) * y,
        k: y * y + &p.h * y + &p.k,
    }
}

/// Parameter image under invert-then-binomial (equivalently
/// binomial-then-invert; the two compositions agree on this family).
pub fn map_combined(p: &RecParams, x: &ExactScalar, y: &ExactScalar) -> RecParams {
    map_binomial(&map_invert(p, x), y)
}

/// The monic polynomial family `P[-1] = 0`, `P[0] = 1`,
/// `P[n] = (x + h) P[n-1] - k P[n-2]`, as polynomials in the seed variable.
pub fn p_poly(h: &ExactScalar, k: &ExactScalar, n: i64) -> Polynomial {
    assert!(n >= -1, "index starts at -1");
    if n == -1 {
        return Polynomial::zero();
    }
    let step = Polynomial::new(vec![h.clone(), ExactScalar::one()]);
    let mut prev = Polynomial::zero();
    let mut cur = Polynomial::one();
    for _ in 0..n {
        let next = step.mul(&cur).sub(&prev.scaled(k));
        prev = cur;
        cur = next;
    }
    cur
}

/// Whether `P[m-1]` divides `P[n-1]` exactly in the polynomial ring.
/// Divisibility is guaranteed when `m` divides `n`; the converse is not
/// asserted. Requires `m, n >= 1`.
pub fn divides(m: usize, n: usize, h: &ExactScalar, k: &ExactScalar) -> Result<bool> {
    assert!(m >= 1 && n >= 1, "indices start at 1");
    let small = p_poly(h, k, m as i64 - 1);
    let large = p_poly(h, k, n as i64 - 1);
    let (_, rem) = large.div_rem(&small)?;
    Ok(rem.is_zero())
}

/// Checks the transport rule for transforms acting on a reverted sequence:
/// with `A = eta(w(1, b, h, k))` truncated to `n_terms`,
///
/// * invert by `x` lands on `eta(w(1, b - x, h - 2x, x^2 - h x + k))`,
/// * binomial by `x` lands on `eta(w(1, b - x, h - x, (b - h) x + k))`.
///
/// Returns true when both identities hold through `n_terms` terms.
pub fn eta_transport_check(p: &RecParams, x: &ExactScalar, n_terms: usize) -> bool {
    assert!(n_terms >= 2, "need headroom to see the transforms act");
    let reverted = eta(&w_generate(p, n_terms));

    let invert_params = RecParams {
        b: &p.b - x,
        h: &p.h - rat(2) * x,
        k: x * x - &p.h * x + &p.k,
    };
    let invert_ok =
        invert_interp(&reverted, x) == eta(&w_generate(&invert_params, n_terms));

    let binomial_params = RecParams {
        b: &p.b - x,
        h: &p.h - x,
        k: (&p.b - &p.h) * x + &p.k,
    };
    let binomial_ok =
        binomial_interp(&reverted, x) == eta(&w_generate(&binomial_params, n_terms));

    invert_ok && binomial_ok
}

/// Memoizing wrapper for `eta(w_generate(p, n_terms))`, useful when a grid
/// sweep revisits parameter triples.
#[derive(Default)]
pub struct RevertedCache {
    map: HashMap<(RecParams, usize), UnitSequence>,
}

impl RevertedCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: &RecParams, n_terms: usize) -> UnitSequence {
        self.map
            .entry((p.clone(), n_terms))
            .or_insert_with(|| eta(&w_generate(p, n_terms)))
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::transform::lambda_extract;

    fn params(b: i64, h: i64, k: i64) -> RecParams {
        RecParams::new(rat(b), rat(h), rat(k))
    }

    #[test]
    fn w_generate_fibonacci_slice() {
        // h = 1, k = -1, b = 1 gives the Fibonacci numbers from F(1).
        let p = params(1, 1, -1);
        let w = w_generate(&p, 8);
        assert_eq!(
            w.terms().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            ["1", "1", "2", "3", "5", "8", "13", "21"]
        );
    }

    #[test]
    fn w_generate_mersenne() {
        // h = 3, k = 2, b = 3 gives 2^(n+1) - 1.
        let p = RecParams::fibonacci(rat(3), rat(2));
        let w = w_generate(&p, 10);
        for (n, t) in w.terms().iter().enumerate() {
            assert_eq!(*t, rat((1i64 << (n + 1)) - 1));
        }
    }

    #[test]
    fn w_generate_single_term() {
        let w = w_generate(&params(9, 4, 4), 1);
        assert_eq!(w.terms(), &[rat(1)]);
    }

    #[test]
    fn gf_matches_recurrence() {
        let p = RecParams::new(ratio(1, 2), rat(-3), ratio(2, 3));
        let w = w_generate(&p, 12);
        assert_eq!(gf_series(&p, 12).coeffs(), w.terms());
    }

    #[test]
    fn invert_map_matches_transform() {
        let p = params(2, 1, 3);
        for x in [-2i64, -1, 0, 1, 2] {
            let x = rat(x);
            let lhs = invert_interp(&w_generate(&p, 14), &x);
            let rhs = w_generate(&map_invert(&p, &x), 14);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn binomial_map_matches_transform() {
        let p = params(-1, 2, -2);
        for y in [-2i64, -1, 0, 1, 2] {
            let y = rat(y);
            let lhs = binomial_interp(&w_generate(&p, 14), &y);
            let rhs = w_generate(&map_binomial(&p, &y), 14);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn combined_map_is_order_independent() {
        let p = RecParams::new(ratio(3, 2), rat(1), rat(-1));
        for (x, y) in [(1i64, 1i64), (2, -1), (-3, 2), (0, 5)] {
            let (x, y) = (rat(x), rat(y));
            let via_invert_first = map_binomial(&map_invert(&p, &x), &y);
            let via_binomial_first = map_invert(&map_binomial(&p, &y), &x);
            assert_eq!(via_invert_first, via_binomial_first);
            assert_eq!(map_combined(&p, &x, &y), via_invert_first);
        }
    }

    #[test]
    fn combined_map_matches_stacked_transforms() {
        let p = params(0, 2, 1);
        let (x, y) = (rat(2), rat(-1));
        let lhs = binomial_interp(&invert_interp(&w_generate(&p, 12), &x), &y);
        let rhs = w_generate(&map_combined(&p, &x, &y), 12);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn p_poly_chebyshev_like_start() {
        let h = rat(1);
        let k = rat(1);
        assert_eq!(p_poly(&h, &k, -1), Polynomial::zero());
        assert_eq!(p_poly(&h, &k, 0), Polynomial::one());
        // P1 = x + 1, P2 = (x+1)^2 - 1 = x^2 + 2x
        assert_eq!(
            p_poly(&h, &k, 1),
            Polynomial::new(vec![rat(1), rat(1)])
        );
        assert_eq!(
            p_poly(&h, &k, 2),
            Polynomial::new(vec![rat(0), rat(2), rat(1)])
        );
    }

    #[test]
    fn p_poly_is_monic_of_full_degree() {
        let h = ratio(-2, 3);
        let k = rat(5);
        for n in 0..10i64 {
            let q = p_poly(&h, &k, n);
            assert_eq!(q.degree(), Some(n as usize));
            assert_eq!(q.coeff(n as usize), rat(1));
        }
    }

    #[test]
    fn p_poly_evaluates_to_fibonacci_family() {
        // At x = h the polynomial family reproduces the generalized
        // Fibonacci sequence with parameters (2h, k).
        let h = rat(1);
        let k = rat(-1);
        let w = w_generate(&RecParams::fibonacci(rat(2), rat(-1)), 9);
        for n in 0..9 {
            assert_eq!(p_poly(&h, &k, n as i64).eval(&h), *w.term(n));
        }
    }

    #[test]
    fn divisibility_along_index_multiples() {
        let h = rat(2);
        let k = rat(3);
        for m in 1..=6usize {
            for mult in 1..=4usize {
                assert!(divides(m, m * mult, &h, &k).unwrap());
            }
        }
    }

    #[test]
    fn divisibility_counterexample_exists() {
        // Coprime indices generally fail; this documents that `divides`
        // reports honest remainders rather than assuming the theorem.
        let h = rat(0);
        let k = rat(1);
        assert!(!divides(3, 5, &h, &k).unwrap());
    }

    #[test]
    fn eta_transport_holds_on_a_sample() {
        let p = params(2, -1, 2);
        assert!(eta_transport_check(&p, &rat(1), 12));
        assert!(eta_transport_check(&p, &rat(-2), 12));
    }

    #[test]
    fn reverted_cache_matches_direct() {
        let mut cache = RevertedCache::new();
        let p = params(1, 2, 1);
        let direct = eta(&w_generate(&p, 10));
        assert_eq!(cache.get(&p, 10), direct);
        assert_eq!(cache.get(&p, 10), direct);
    }

    #[test]
    fn gf_numerator_structure() {
        // Multiplying the series back by the denominator recovers the
        // two-term numerator.
        let p = params(4, -2, 7);
        let order = 10;
        let f = gf_series(&p, order);
        let den = TruncatedSeries::from_fn(order, |i| match i {
            0 => rat(1),
            1 => rat(2),
            2 => rat(7),
            _ => rat(0),
        });
        let num = f.mul(&den).unwrap();
        let mut expected = vec![rat(0); order];
        expected[0] = rat(1);
        expected[1] = rat(4) - rat(-2);
        assert_eq!(num.coeffs(), &expected[..]);
    }

    #[test]
    fn reverted_sequences_extract_cleanly() {
        // Sanity on the lambda plumbing used by the transport rule.
        let p = params(3, 3, 2);
        let w = w_generate(&p, 8);
        let embedded = crate::transform::lambda_embed(&w);
        assert_eq!(lambda_extract(&embedded).unwrap(), w);
    }
}
