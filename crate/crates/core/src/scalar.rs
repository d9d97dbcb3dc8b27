//! Exact rational scalars and small combinatorial helpers.
//!
//! Every algebraic computation in this crate runs over arbitrary-precision
//! rationals, so results are exact and comparisons are decidable. The
//! helpers here cover the handful of combinatorial quantities the rest of
//! the crate needs: integer and rational-argument binomials, factorials,
//! and trinomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The coefficient field: reduced fractions of arbitrary-precision integers.
pub type ExactScalar = num_rational::BigRational;

/// The integer `n` as a scalar.
pub fn rat(n: i64) -> ExactScalar {
    ExactScalar::from_integer(BigInt::from(n))
}

/// The fraction `p/q` as a scalar.
///
/// Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> ExactScalar {
    ExactScalar::new(BigInt::from(p), BigInt::from(q))
}

/// `x^e` by repeated squaring.
pub fn pow(x: &ExactScalar, e: usize) -> ExactScalar {
    num_traits::pow::pow(x.clone(), e)
}

/// Binomial coefficient `C(n, j)` for integer arguments, zero when `j > n`.
///
/// The running product stays integral because every prefix is itself a
/// binomial coefficient. Time: O(j) big-integer operations.
pub fn binom_int(n: u64, j: u64) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Generalized binomial coefficient `C(a, i)` for rational `a`, defined by
/// the falling factorial `a (a-1) ... (a-i+1) / i!`.
pub fn binom_rational(a: &ExactScalar, i: u64) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for step in 0..i {
        acc *= a - rat(step as i64);
    }
    acc / ExactScalar::from_integer(factorial(i))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Trinomial coefficient `n! / (a! b! c!)` where `a + b + c == n`.
pub fn trinomial(n: u64, a: u64, b: u64, c: u64) -> BigInt {
    assert_eq!(a + b + c, n, "trinomial arguments must sum to n");
    binom_int(n, a) * binom_int(n - a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_int_basics() {
        assert_eq!(binom_int(0, 0), BigInt::from(1));
        assert_eq!(binom_int(5, 2), BigInt::from(10));
        assert_eq!(binom_int(10, 10), BigInt::from(1));
        assert_eq!(binom_int(4, 7), BigInt::from(0));
        assert_eq!(binom_int(52, 5), BigInt::from(2_598_960u64));
    }

    #[test]
    fn binom_int_pascal_rule() {
        for n in 1..30u64 {
            for j in 1..=n {
                assert_eq!(
                    binom_int(n, j),
                    binom_int(n - 1, j - 1) + binom_int(n - 1, j)
                );
            }
        }
    }

    #[test]
    fn binom_rational_half() {
        // C(1/2, 0) = 1, C(1/2, 1) = 1/2, C(1/2, 2) = -1/8, C(1/2, 3) = 1/16
        let half = ratio(1, 2);
        assert_eq!(binom_rational(&half, 0), rat(1));
        assert_eq!(binom_rational(&half, 1), ratio(1, 2));
        assert_eq!(binom_rational(&half, 2), ratio(-1, 8));
        assert_eq!(binom_rational(&half, 3), ratio(1, 16));
    }

    #[test]
    fn binom_rational_matches_integer_case() {
        for n in 0..12i64 {
            for j in 0..12u64 {
                assert_eq!(
                    binom_rational(&rat(n), j),
                    ExactScalar::from_integer(binom_int(n as u64, j))
                );
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn trinomial_values() {
        assert_eq!(trinomial(3, 1, 1, 1), BigInt::from(6));
        assert_eq!(trinomial(6, 2, 2, 2), BigInt::from(90));
        assert_eq!(trinomial(5, 5, 0, 0), BigInt::from(1));
    }

    #[test]
    fn pow_small_cases() {
        assert_eq!(pow(&ratio(2, 3), 0), rat(1));
        assert_eq!(pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(pow(&rat(-2), 5), rat(-32));
    }
}
