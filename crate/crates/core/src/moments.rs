//! Generalized Motzkin moments through five independent routes.
//!
//! The moment sequence `mu_n(h, k)` is defined by the lattice-path model:
//! `mu_n` is the total weight of paths of length `n` built from east,
//! northeast and southeast unit steps, never dipping below the start
//! height and ending at it, where each east step carries weight `h` and
//! each southeast step weight `k`. At `h = k = 1` these are the Motzkin
//! numbers, at `h = 2, k = 1` the shifted Catalan numbers, and at `h = 0`
//! the aerated, `k`-powered Catalan numbers.
//!
//! The same sequence is computed along five routes that share essentially
//! no code:
//!
//! 1. series expansion of the algebraic generating function
//!    `(1 - h t - sqrt((1 - h t)^2 - 4 k t^2)) / (2 k t^2)`,
//! 2. expansion of the depth-limited continued fraction with constant
//!    level weights,
//! 3. a closed binomial sum with half-integer upper index,
//! 4. a three-term holonomic recurrence in `n`,
//! 5. Lagrange inversion of the kernel `u / (1 + h u + k u^2)`, evaluated
//!    as an explicit trinomial double sum.
//!
//! Route 6, exhaustive path enumeration, is exponential and gated behind a
//! length bound; it is the semantic ground truth the others are checked
//! against.
//!
//! Sign convention: `mu_1 = h`, and flipping the sign of `h` flips exactly
//! the odd-index moments. The reverted generalized Fibonacci sequence with
//! parameters `(h, k)` equals the moment sequence of `(-h, k)`; the
//! orthogonality module works with the same convention.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{
    binom_int, binom_rational, factorial, pow, rat, ratio, trinomial, ExactScalar,
};
use crate::series::TruncatedSeries;

/// Longest path length accepted by the exhaustive route; lengths above
/// this make the step-sequence tree (3^n nodes before pruning) too large.
pub const DEFAULT_PATH_BOUND: usize = 18;

/// A request for the moments `mu_0 .. mu_n_max` of a weight pair `(h, k)`
/// with `k` nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MomentRequest {
    h: ExactScalar,
    k: ExactScalar,
    n_max: usize,
}

impl MomentRequest {
    pub fn new(h: ExactScalar, k: ExactScalar, n_max: usize) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::ZeroK);
        }
        Ok(Self { h, k, n_max })
    }

    pub fn h(&self) -> &ExactScalar {
        &self.h
    }

    pub fn k(&self) -> &ExactScalar {
        &self.k
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }
}

/// Route 1: expand the algebraic generating function.
///
/// The square root is taken at order `n_max + 3`; the numerator then
/// vanishes to order two, which is asserted, and the division by `2 k t^2`
/// is a coefficient shift.
pub fn mu_gf_series(req: &MomentRequest) -> Vec<ExactScalar> {
    let order = req.n_max + 3;
    let one_minus_ht = TruncatedSeries::from_fn(order, |i| match i {
        0 => ExactScalar::one(),
        1 => -&req.h,
        _ => rat(0),
    });
    // (1 - h t)^2 - 4 k t^2
    let radicand = TruncatedSeries::from_fn(order, |i| match i {
        0 => ExactScalar::one(),
        1 => rat(-2) * &req.h,
        2 => &req.h * &req.h - rat(4) * &req.k,
        _ => rat(0),
    });
    let root = radicand.sqrt().expect("radicand has constant term one");
    let num = one_minus_ht
        .sub(&root)
        .expect("orders agree by construction");
    let shifted = num.shifted_down(2);
    let scale = (rat(2) * &req.k).recip();
    shifted.scaled(&scale).into_coeffs()[..=req.n_max].to_vec()
}

/// Route 2: expand the continued fraction
/// `1 / (1 - h t - k t^2 / (1 - h t - k t^2 / ...))` cut at `depth`
/// levels.
///
/// A cut at depth `d` is exact through `t^(2d - 1)`, so the request is
/// rejected unless `depth >= n_max / 2 + 1`.
pub fn mu_cfrac(req: &MomentRequest, depth: usize) -> Result<Vec<ExactScalar>> {
    let required = req.n_max / 2 + 1;
    if depth < required {
        return Err(Error::InsufficientDepth {
            required,
            got: depth,
            n_max: req.n_max,
        });
    }
    let order = req.n_max + 1;
    let level = TruncatedSeries::from_fn(order, |i| match i {
        0 => ExactScalar::one(),
        1 => -&req.h,
        _ => rat(0),
    });
    // Innermost level outward: den <- 1 - h t - k t^2 / den.
    let mut den = level.clone();
    for _ in 1..depth {
        let tail = den
            .reciprocal()
            .expect("every level has constant term one")
            .shifted_up(2)
            .scaled(&req.k);
        den = level.sub(&tail).expect("orders agree by construction");
    }
    Ok(den
        .reciprocal()
        .expect("every level has constant term one")
        .into_coeffs())
}

/// Route 3: the closed binomial sum with half-integer upper index,
///
/// `mu_n = -(1/(2k)) * sum_j C(1/2, n+2-j) C(n+2-j, j)
///         (-2h)^(n+2-2j) (h^2 - 4k)^j`,
///
/// where `j` runs to `(n+1)/2` for odd `n` and to `(n+2)/2` for even `n`.
pub fn mu_closed(n: usize, h: &ExactScalar, k: &ExactScalar) -> Result<ExactScalar> {
    if k.is_zero() {
        return Err(Error::ZeroK);
    }
    let half = ratio(1, 2);
    let disc = h * h - rat(4) * k;
    let minus_2h = rat(-2) * h;
    let j_top = if n % 2 == 1 { (n + 1) / 2 } else { (n + 2) / 2 };
    let mut acc = ExactScalar::zero();
    for j in 0..=j_top {
        let outer = (n + 2 - j) as u64;
        let c1 = binom_rational(&half, outer);
        if c1.is_zero() {
            continue;
        }
        let c2 = binom_int(outer, j as u64);
        if c2.is_zero() {
            continue;
        }
        let term = c1
            * ExactScalar::from_integer(c2)
            * pow(&minus_2h, n + 2 - 2 * j)
            * pow(&disc, j);
        acc += term;
    }
    Ok(-acc / (rat(2) * k))
}

/// Route 4: the holonomic recurrence
/// `(n + 2) mu_n = h (2n + 1) mu_{n-1} - (h^2 - 4k)(n - 1) mu_{n-2}`
/// seeded with `mu_0 = 1`, `mu_1 = h`.
pub fn mu_recur(req: &MomentRequest) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(req.n_max + 1);
    out.push(ExactScalar::one());
    if req.n_max >= 1 {
        out.push(req.h.clone());
    }
    let disc = &req.h * &req.h - rat(4) * &req.k;
    for n in 2..=req.n_max {
        let a = &req.h * rat(2 * n as i64 + 1) * &out[n - 1];
        let b = &disc * rat(n as i64 - 1) * &out[n - 2];
        out.push((a - b) / rat(n as i64 + 2));
    }
    out
}

/// Route 5: Lagrange inversion of `u / (1 + h u + k u^2)` in closed form,
///
/// `mu_n = sum_p n! / (p! (n - 2p + 2)! (p - 1)!) h^(n-2p+2) k^(p-1)`
///
/// with `p` from 1 to `(n + 2) / 2`.
pub fn mu_lagrange(n: usize, h: &ExactScalar, k: &ExactScalar) -> Result<ExactScalar> {
    if k.is_zero() {
        return Err(Error::ZeroK);
    }
    let n_fact = ExactScalar::from_integer(factorial(n as u64));
    let mut acc = ExactScalar::zero();
    for p in 1..=(n + 2) / 2 {
        let h_exp = n + 2 - 2 * p;
        let denom = factorial(p as u64)
            * factorial(h_exp as u64)
            * factorial(p as u64 - 1);
        let coeff = &n_fact / ExactScalar::from_integer(denom);
        acc += coeff * pow(h, h_exp) * pow(k, p - 1);
    }
    Ok(acc)
}

/// Trinomial-expansion variant of route 5: reads the moment off
/// `(1 + h u + k u^2)^(n+1)` one multinomial term at a time. Kept separate
/// so route 5 can be cross-checked without series machinery.
pub fn mu_trinomial(n: usize, h: &ExactScalar, k: &ExactScalar) -> Result<ExactScalar> {
    if k.is_zero() {
        return Err(Error::ZeroK);
    }
    let m = (n + 1) as u64;
    let mut acc = ExactScalar::zero();
    // [u^n] (1 + h u + k u^2)^(n+1): pick b linear and c quadratic factors
    // with b + 2c = n.
    for c in 0..=(n / 2) as u64 {
        let b = n as u64 - 2 * c;
        if b + c > m {
            continue;
        }
        let a = m - b - c;
        let coeff = trinomial(m, a, b, c);
        acc += ExactScalar::from_integer(coeff)
            * pow(h, b as usize)
            * pow(k, c as usize);
    }
    Ok(acc / rat(m as i64))
}

/// One unit step of a lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    East,
    NorthEast,
    SouthEast,
}

impl Step {
    fn rise(self) -> i64 {
        match self {
            Step::East => 0,
            Step::NorthEast => 1,
            Step::SouthEast => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::East => 'H',
            Step::NorthEast => 'U',
            Step::SouthEast => 'D',
        }
    }
}

/// A Motzkin path: starts and ends at height zero, never goes below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    /// Validates the height profile of a step sequence.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for s in &steps {
            height += s.rise();
            if height < 0 {
                return Err(Error::NotAPath);
            }
        }
        if height != 0 {
            return Err(Error::NotAPath);
        }
        Ok(Self { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of east steps.
    pub fn east_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::East).count()
    }

    /// Number of southeast steps (equals the northeast count).
    pub fn fall_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::SouthEast).count()
    }

    /// The path weight `h^east * k^southeast`.
    pub fn weight(&self, h: &ExactScalar, k: &ExactScalar) -> ExactScalar {
        pow(h, self.east_count()) * pow(k, self.fall_count())
    }
}

impl fmt::Display for MotzkinPath {
    /// Letters `H`, `U`, `D` for east, northeast, southeast.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("(empty)");
        }
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::PathBoundExceeded { n, bound });
    }
    Ok(())
}

/// All Motzkin paths of length `n` in lexicographic step order
/// (east < northeast < southeast). Gated by the enumeration bound.
pub fn enumerate_paths(n: usize, bound: usize) -> Result<Vec<MotzkinPath>> {
    check_bound(n, bound)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    recurse_paths(n, 0, &mut prefix, &mut out);
    Ok(out)
}

fn recurse_paths(
    remaining: usize,
    height: usize,
    prefix: &mut Vec<Step>,
    out: &mut Vec<MotzkinPath>,
) {
    if remaining == 0 {
        debug_assert_eq!(height, 0);
        out.push(MotzkinPath {
            steps: prefix.clone(),
        });
        return;
    }
    // A path at `height` needs at least `height` more steps to land.
    for step in [Step::East, Step::NorthEast, Step::SouthEast] {
        let next = match step {
            Step::East => height,
            Step::NorthEast => height + 1,
            Step::SouthEast => {
                if height == 0 {
                    continue;
                }
                height - 1
            }
        };
        if next > remaining - 1 {
            continue;
        }
        prefix.push(step);
        recurse_paths(remaining - 1, next, prefix, out);
        prefix.pop();
    }
}

/// Counts paths of length `n` grouped by `(east, southeast)` step counts.
/// Since rises and falls pair up, `east + 2 * southeast == n` for every
/// key. Gated by the enumeration bound.
pub fn path_census(n: usize, bound: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    check_bound(n, bound)?;
    let mut out = BTreeMap::new();
    census(n, 0, 0, 0, &mut out);
    Ok(out)
}

fn census(
    remaining: usize,
    height: usize,
    east: usize,
    se: usize,
    out: &mut BTreeMap<(usize, usize), u64>,
) {
    if remaining == 0 {
        *out.entry((east, se)).or_insert(0) += 1;
        return;
    }
    if height <= remaining - 1 {
        census(remaining - 1, height, east + 1, se, out);
    }
    if height + 1 <= remaining - 1 {
        census(remaining - 1, height + 1, east, se, out);
    }
    if height > 0 && height - 1 <= remaining - 1 {
        census(remaining - 1, height - 1, east, se + 1, out);
    }
}

/// Route 6: the defining weighted path sum, by exhaustive enumeration.
pub fn mu_paths(
    n: usize,
    h: &ExactScalar,
    k: &ExactScalar,
    bound: usize,
) -> Result<ExactScalar> {
    let census = path_census(n, bound)?;
    let mut acc = ExactScalar::zero();
    for ((east, se), count) in census {
        acc += rat(count as i64) * pow(h, east) * pow(k, se);
    }
    Ok(acc)
}

/// The moment `mu_n` as a polynomial in `k` at `h = 1`: returns the
/// coefficients `c_0 .. c_{n/2}` where `c_j` multiplies `h^(n-2j) k^j` in
/// the bivariate moment. Computed by exact interpolation over `k`, with no
/// path enumeration involved, so it serves as a symbolic oracle for the
/// census.
pub fn mu_census_symbolic(n: usize) -> Vec<BigInt> {
    let deg = n / 2;
    let points: Vec<(ExactScalar, ExactScalar)> = (1..=deg as i64 + 1)
        .map(|kv| {
            let req = MomentRequest::new(rat(1), rat(kv), n)
                .expect("k is nonzero on the node grid");
            (rat(kv), mu_recur(&req)[n].clone())
        })
        .collect();
    let poly = crate::polynomial::Polynomial::interpolate(&points);
    (0..=deg)
        .map(|j| {
            let c = poly.coeff(j);
            assert!(c.is_integer(), "census coefficients are integers");
            c.to_integer()
        })
        .collect()
}

/// The Catalan number `C(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> ExactScalar {
    ExactScalar::new(binom_int(2 * m as u64, m as u64), BigInt::from(m as u64 + 1))
}

/// Runs every analytic route on one request and returns the labelled
/// results in a fixed order. All vectors are `n_max + 1` long and must be
/// identical; the caller decides what to do when they are not.
pub fn mu_all_routes(req: &MomentRequest) -> Vec<(&'static str, Vec<ExactScalar>)> {
    let depth = req.n_max / 2 + 1;
    let closed: Vec<_> = (0..=req.n_max)
        .map(|n| mu_closed(n, req.h(), req.k()).expect("k nonzero by construction"))
        .collect();
    let lagrange: Vec<_> = (0..=req.n_max)
        .map(|n| mu_lagrange(n, req.h(), req.k()).expect("k nonzero by construction"))
        .collect();
    vec![
        ("gf", mu_gf_series(req)),
        (
            "cfrac",
            mu_cfrac(req, depth).expect("depth chosen sufficient"),
        ),
        ("closed", closed),
        ("recur", mu_recur(req)),
        ("lagrange", lagrange),
    ]
}
