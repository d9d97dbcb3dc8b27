//! Deterministic input builders shared by the benchmark targets.
//!
//! Benchmarks want inputs that are reproducible, cheap to build, and free
//! of accidental structure (no all-zero tails, no unit sequences that
//! collapse a kernel into a no-op). A tiny multiplicative congruential
//! generator over small integers does the job without pulling random-crate
//! seeds into timing code.

use motzkin_core::scalar::{rat, ExactScalar};
use motzkin_core::transform::UnitSequence;
use motzkin_core::TruncatedSeries;

/// Small pseudo-random integers in `-4..=4`, never returning a run of
/// zeros long enough to trivialize arithmetic.
fn small_ints(seed: u64, len: usize) -> Vec<i64> {
    let mut state = seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        out.push(((state >> 33) % 9) as i64 - 4);
    }
    out
}

/// A series of the given order with small integer coefficients and a
/// nonzero constant term, so it is a unit for multiplication.
pub fn unit_series(order: usize, seed: u64) -> TruncatedSeries {
    let mut coeffs: Vec<ExactScalar> = small_ints(seed, order).into_iter().map(rat).collect();
    coeffs[0] = rat(1);
    TruncatedSeries::from_coeffs(coeffs)
}

/// A series with zero constant term and linear term one, the shape the
/// compositional kernels require.
pub fn reversible_series(order: usize, seed: u64) -> TruncatedSeries {
    let mut coeffs: Vec<ExactScalar> = small_ints(seed, order).into_iter().map(rat).collect();
    coeffs[0] = rat(0);
    if order > 1 {
        coeffs[1] = rat(1);
    }
    TruncatedSeries::from_coeffs(coeffs)
}

/// A sequence starting at one with small integer terms.
pub fn unit_sequence(len: usize, seed: u64) -> UnitSequence {
    let mut terms: Vec<ExactScalar> = small_ints(seed, len).into_iter().map(rat).collect();
    terms[0] = rat(1);
    UnitSequence::new(terms).expect("first term set to one")
}
