//! Grid verification suites.
//!
//! Each suite sweeps one area of the library over a parameter grid and
//! tallies named checks. The `Full` grid runs the sizes the project's
//! acceptance bar asks for; `Small` runs the same checks on a reduced grid
//! for quick interactive use. Suites are pure functions returning a
//! report, so the command-line front end and the acceptance tests share
//! them verbatim.
//!
//! Random instances (for the group laws) come from a fixed-seed ChaCha
//! stream, so every run sees the same sequences.

use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::moments::{
    catalan, mu_all_routes, mu_census_symbolic, mu_cfrac, mu_recur, path_census,
    MomentRequest, DEFAULT_PATH_BOUND,
};
use crate::orthogonal::{
    apply_functional, catalan_identity, catalan_identity_core, delta_relation_check,
    dickson_e, orthogonal_family, p_coefficient, p_explicit, MomentFunctional,
};
use crate::polynomial::Polynomial;
use crate::recurrence::{
    divides, gf_series, map_binomial, map_combined, map_invert, p_poly, w_generate,
    RecParams, RevertedCache,
};
use crate::scalar::{pow, rat, ratio, ExactScalar};
use crate::transform::{
    binomial_interp, binomial_interp_via_group, bullet, epsilon, eta, gamma,
    invert_interp, invert_interp_via_group, UnitSequence,
};
use crate::weight::{omega, quad_moment, WeightSpec};

/// Grid size selector. `Full` matches the documented acceptance sweeps;
/// `Small` is a fast subset with the same checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    Small,
    Full,
}

/// Pass/fail tally of one named check, aggregated across grid points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: u64,
    pub fail: u64,
}

/// All checks of one suite, in execution order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> u64 {
        self.checks.iter().map(|c| c.pass).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.fail).sum()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    /// The tally for one named check; panics when the name is unknown,
    /// which keeps acceptance wiring honest.
    pub fn check(&self, name: &str) -> &Check {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("no check named {:?} in suite {}", name, self.suite))
    }
}

struct Tally {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Tally {
    fn new(suite: &'static str) -> Self {
        Self {
            suite,
            checks: Vec::new(),
        }
    }

    fn record(&mut self, name: &'static str, ok: bool) {
        let entry = match self.checks.iter_mut().find(|c| c.name == name) {
            Some(c) => c,
            None => {
                self.checks.push(Check {
                    name,
                    pass: 0,
                    fail: 0,
                });
                self.checks.last_mut().expect("just pushed")
            }
        };
        if ok {
            entry.pass += 1;
        } else {
            entry.fail += 1;
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checks: self.checks,
        }
    }
}

/// Motzkin and shifted-Catalan reference values, frozen here independently
/// of every computational route.
const MOTZKIN: [i64; 15] = [
    1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
];
const CATALAN: [i64; 13] = [
    1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
];

fn int_range(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    lo..=hi
}

/// Group laws of the unit-sequence product, on fixed-seed random
/// sequences. Full: 100 instances of 32 terms; small: 20 of 12.
pub fn group_suite(grid: Grid) -> SuiteReport {
    let (instances, len) = match grid {
        Grid::Full => (100usize, 32usize),
        Grid::Small => (20, 12),
    };
    let mut tally = Tally::new("group");
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d74_7a6b);
    let random_seq = |rng: &mut ChaCha8Rng| {
        let mut terms = vec![ExactScalar::one()];
        for _ in 1..len {
            terms.push(rat(rng.random_range(-3..=3)));
        }
        UnitSequence::new(terms).expect("starts with one")
    };

    for _ in 0..instances {
        let a = random_seq(&mut rng);
        let b = random_seq(&mut rng);
        let c = random_seq(&mut rng);
        let x = rat(rng.random_range(-3..=3));
        let y = rat(rng.random_range(-3..=3));
        let e = UnitSequence::identity(len);

        let ab = bullet(&a, &b).expect("equal lengths");
        let bc = bullet(&b, &c).expect("equal lengths");
        tally.record(
            "product is associative",
            bullet(&ab, &c).expect("equal lengths") == bullet(&a, &bc).expect("equal lengths"),
        );
        tally.record(
            "identity is neutral",
            bullet(&a, &e).expect("equal lengths") == a
                && bullet(&e, &a).expect("equal lengths") == a,
        );

        let eta_a = eta(&a);
        let eta_b = eta(&b);
        tally.record(
            "revert inverts",
            bullet(&a, &eta_a).expect("equal lengths") == e
                && bullet(&eta_a, &a).expect("equal lengths") == e,
        );
        tally.record("revert is an involution", eta(&eta_a) == a);
        tally.record(
            "revert reverses products",
            eta(&ab) == bullet(&eta_b, &eta_a).expect("equal lengths"),
        );

        let eps_a = epsilon(&a);
        let eps_b = epsilon(&b);
        tally.record(
            "sign flip is an automorphism",
            epsilon(&ab) == bullet(&eps_a, &eps_b).expect("equal lengths"),
        );
        tally.record("sign flip is an involution", epsilon(&eps_a) == a);
        tally.record(
            "revert and sign flip commute",
            eta(&eps_a) == epsilon(&eta_a),
        );

        let gamma_a = gamma(&a);
        let gamma_b = gamma(&b);
        tally.record("gamma is an involution", gamma(&gamma_a) == a);
        tally.record(
            "gamma reverses products",
            gamma(&ab) == bullet(&gamma_b, &gamma_a).expect("equal lengths"),
        );

        let gx = UnitSequence::geometric(&x, len);
        let gy = UnitSequence::geometric(&y, len);
        tally.record(
            "geometric sequences form a subgroup",
            bullet(&gx, &gy).expect("equal lengths")
                == UnitSequence::geometric(&(&x + &y), len),
        );
        tally.record(
            "revert and sign flip negate the geometric ratio",
            eta(&gx) == UnitSequence::geometric(&-&x, len)
                && epsilon(&gx) == UnitSequence::geometric(&-&x, len),
        );

        tally.record(
            "invert routes agree",
            invert_interp(&a, &x) == invert_interp_via_group(&a, &x),
        );
        tally.record(
            "binomial routes agree",
            binomial_interp(&a, &y) == binomial_interp_via_group(&a, &y),
        );

        tally.record(
            "invert composes additively",
            invert_interp(&invert_interp(&a, &x), &y)
                == invert_interp(&a, &(&x + &y)),
        );
        tally.record(
            "binomial composes additively",
            binomial_interp(&binomial_interp(&a, &x), &y)
                == binomial_interp(&a, &(&x + &y)),
        );
        tally.record(
            "invert and binomial commute",
            invert_interp(&binomial_interp(&a, &y), &x)
                == binomial_interp(&invert_interp(&a, &x), &y),
        );

        tally.record(
            "revert swaps invert for binomial",
            eta(&invert_interp(&a, &x)) == binomial_interp(&eta_a, &-&x),
        );
        tally.record(
            "revert swaps binomial for invert",
            eta(&binomial_interp(&a, &y)) == invert_interp(&eta_a, &-&y),
        );
        tally.record(
            "sign flip conjugates invert",
            epsilon(&invert_interp(&a, &x)) == invert_interp(&eps_a, &-&x),
        );
        tally.record(
            "sign flip conjugates binomial",
            epsilon(&binomial_interp(&a, &y)) == binomial_interp(&eps_a, &-&y),
        );
        tally.record(
            "gamma turns invert into binomial",
            gamma(&invert_interp(&a, &x)) == binomial_interp(&gamma_a, &x),
        );
        tally.record(
            "gamma turns binomial into invert",
            gamma(&binomial_interp(&a, &y)) == invert_interp(&gamma_a, &y),
        );
    }
    tally.finish()
}

/// Recurrent-sequence checks: generating function, parameter transport
/// under the transforms, revert transport, seed-polynomial divisibility,
/// and closed forms at rational roots.
pub fn recurrence_suite(grid: Grid) -> SuiteReport {
    let (param_span, x_span, n_terms) = match grid {
        Grid::Full => (3i64, 2i64, 30usize),
        Grid::Small => (1, 1, 12),
    };
    let mut tally = Tally::new("recurrence");

    for b in int_range(-param_span, param_span) {
        for h in int_range(-param_span, param_span) {
            for k in int_range(-param_span, param_span) {
                let p = RecParams::new(rat(b), rat(h), rat(k));
                let w = w_generate(&p, n_terms);
                tally.record(
                    "generating function matches the recurrence",
                    gf_series(&p, n_terms).coeffs() == w.terms(),
                );
                let inverted: Vec<(ExactScalar, UnitSequence)> = int_range(-x_span, x_span)
                    .map(|x| (rat(x), invert_interp(&w, &rat(x))))
                    .collect();
                let binomialed: Vec<(ExactScalar, UnitSequence)> = int_range(-x_span, x_span)
                    .map(|y| (rat(y), binomial_interp(&w, &rat(y))))
                    .collect();
                for (x, ix) in &inverted {
                    tally.record(
                        "invert transform moves the parameters",
                        *ix == w_generate(&map_invert(&p, x), n_terms),
                    );
                }
                for (y, by) in &binomialed {
                    tally.record(
                        "binomial transform moves the parameters",
                        *by == w_generate(&map_binomial(&p, y), n_terms),
                    );
                }
                for (x, ix) in &inverted {
                    for (y, by) in &binomialed {
                        let combined = w_generate(&map_combined(&p, x, y), n_terms);
                        tally.record(
                            "stacked transforms match the combined map",
                            binomial_interp(ix, y) == combined
                                && invert_interp(by, x) == combined,
                        );
                    }
                }
            }
        }
    }

    let mut cache = RevertedCache::new();
    for b in int_range(-param_span, param_span) {
        for h in int_range(-param_span, param_span) {
            for k in int_range(-param_span, param_span) {
                let p = RecParams::new(rat(b), rat(h), rat(k));
                let reverted = cache.get(&p, n_terms);
                for x in int_range(-x_span, x_span) {
                    let x = rat(x);
                    let invert_image = RecParams::new(
                        &p.b - &x,
                        &p.h - rat(2) * &x,
                        &x * &x - &p.h * &x + &p.k,
                    );
                    tally.record(
                        "revert transport for invert",
                        invert_interp(&reverted, &x)
                            == cache.get(&invert_image, n_terms),
                    );
                    let binomial_image = RecParams::new(
                        &p.b - &x,
                        &p.h - &x,
                        (&p.b - &p.h) * &x + &p.k,
                    );
                    tally.record(
                        "revert transport for binomial",
                        binomial_interp(&reverted, &x)
                            == cache.get(&binomial_image, n_terms),
                    );
                }
            }
        }
    }

    let div_n = match grid {
        Grid::Full => 40usize,
        Grid::Small => 12,
    };
    for h in int_range(-2, 2) {
        for k in int_range(-2, 2) {
            let (h, k) = (rat(h), rat(k));
            for n in 1..=div_n {
                for m in (1..=n).filter(|m| n % m == 0) {
                    tally.record(
                        "seed polynomials divide along index multiples",
                        divides(m, n, &h, &k).expect("divisor is nonzero"),
                    );
                }
            }
        }
    }

    // Discriminants h^2 - 4k are perfect squares here, so the terms admit
    // a two-power closed form w[n] = (r1^(n+1) - r2^(n+1)) / (r1 - r2).
    let binet_cases: [(i64, i64); 6] = [(3, 2), (5, 6), (1, -2), (4, 3), (-3, 2), (7, 12)];
    for (h, k) in binet_cases {
        let disc = h * h - 4 * k;
        let sqrt_disc = (disc as f64).sqrt().round() as i64;
        assert_eq!(sqrt_disc * sqrt_disc, disc, "case list must stay square");
        let r1 = ratio(h + sqrt_disc, 2);
        let r2 = ratio(h - sqrt_disc, 2);
        let w = w_generate(&RecParams::fibonacci(rat(h), rat(k)), 26);
        let gap = &r1 - &r2;
        let mut ok = true;
        for (n, term) in w.terms().iter().enumerate() {
            let closed = (pow(&r1, n + 1) - pow(&r2, n + 1)) / &gap;
            ok &= closed == *term;
        }
        tally.record("closed form at rational roots", ok);
    }

    tally.finish()
}

/// Moment checks: agreement of the five analytic routes, path enumeration
/// as ground truth, parity and specialization laws, the binomial shift,
/// and the revert bridge to recurrent sequences.
pub fn moments_suite(grid: Grid) -> SuiteReport {
    let (span, n_max, path_n, census_n, int_span, int_n) = match grid {
        Grid::Full => (3i64, 24usize, 14usize, 12usize, 5i64, 40usize),
        Grid::Small => (1, 10, 8, 6, 2, 12),
    };
    let mut tally = Tally::new("moments");

    let pairs: Vec<(i64, i64)> = int_range(-span, span)
        .flat_map(|h| {
            int_range(-span, span)
                .filter(|k| *k != 0)
                .map(move |k| (h, k))
        })
        .collect();

    for &(h, k) in &pairs {
        let req = MomentRequest::new(rat(h), rat(k), n_max).expect("k nonzero");
        let routes = mu_all_routes(&req);
        let reference = routes[0].1.clone();
        let agree = routes.iter().all(|(_, v)| *v == reference);
        tally.record("five analytic routes agree", agree);
    }
    if grid == Grid::Full {
        for (h, k) in [(ratio(1, 2), ratio(-3, 4)), (ratio(-2, 3), ratio(5, 7))] {
            let req = MomentRequest::new(h, k, 16).expect("k nonzero");
            let routes = mu_all_routes(&req);
            let reference = routes[0].1.clone();
            tally.record(
                "five analytic routes agree",
                routes.iter().all(|(_, v)| *v == reference),
            );
        }
    }

    for n in 0..=path_n {
        let census = path_census(n, DEFAULT_PATH_BOUND).expect("within bound");
        for &(h, k) in &pairs {
            let mut from_paths = ExactScalar::zero();
            for ((east, se), count) in &census {
                from_paths +=
                    rat(*count as i64) * pow(&rat(h), *east) * pow(&rat(k), *se);
            }
            let req = MomentRequest::new(rat(h), rat(k), n).expect("k nonzero");
            tally.record(
                "paths certify the analytic moments",
                from_paths == mu_recur(&req)[n],
            );
        }
    }

    for n in 0..=census_n {
        let census = path_census(n, DEFAULT_PATH_BOUND).expect("within bound");
        let symbolic = mu_census_symbolic(n);
        let mut ok = true;
        for (j, coeff) in symbolic.iter().enumerate() {
            let count = census.get(&(n - 2 * j, j)).copied().unwrap_or(0);
            ok &= *coeff == num_bigint::BigInt::from(count);
        }
        tally.record("census matches symbolic coefficients", ok);
    }

    for h in int_range(-int_span, int_span) {
        for k in int_range(-int_span, int_span) {
            if k == 0 {
                continue;
            }
            let req = MomentRequest::new(rat(h), rat(k), int_n).expect("k nonzero");
            tally.record(
                "integer parameters give integer moments",
                mu_recur(&req).iter().all(|m| m.is_integer()),
            );
        }
    }

    for k in int_range(-span, span) {
        if k == 0 {
            continue;
        }
        let req = MomentRequest::new(rat(0), rat(k), 2 * 7).expect("k nonzero");
        let mu = mu_recur(&req);
        tally.record(
            "odd moments vanish at h = 0",
            mu.iter().skip(1).step_by(2).all(Zero::is_zero),
        );
        let evens_ok = (0..=7).all(|m| mu[2 * m] == pow(&rat(k), m) * catalan(m));
        tally.record("even moments at h = 0 are powered Catalans", evens_ok);
    }

    for &(h, k) in &pairs {
        let plus = mu_recur(&MomentRequest::new(rat(h), rat(k), 20).expect("k nonzero"));
        let minus =
            mu_recur(&MomentRequest::new(rat(-h), rat(k), 20).expect("k nonzero"));
        tally.record(
            "flipping h flips exactly the odd moments",
            (0..=20).all(|n| {
                if n % 2 == 1 {
                    minus[n] == -&plus[n]
                } else {
                    minus[n] == plus[n]
                }
            }),
        );

        let prefix =
            UnitSequence::new(plus[..].to_vec()).expect("moments start at one");
        for y in int_range(-span, span) {
            let shifted = mu_recur(
                &MomentRequest::new(rat(h + y), rat(k), 20).expect("k nonzero"),
            );
            tally.record(
                "binomial transform shifts the moment center",
                binomial_interp(&prefix, &rat(y)).terms() == &shifted[..],
            );
        }

        let fib = w_generate(&RecParams::fibonacci(rat(h), rat(k)), 21);
        tally.record(
            "reverted sequences are moments of the flipped center",
            eta(&fib).terms() == &minus[..],
        );

        let req = MomentRequest::new(rat(h), rat(k), 20).expect("k nonzero");
        let depth = req.n_max() / 2 + 1;
        tally.record(
            "extra continued fraction depth changes nothing",
            mu_cfrac(&req, depth).expect("depth sufficient")
                == mu_cfrac(&req, depth + 7).expect("depth sufficient"),
        );
    }

    let motzkin = mu_recur(&MomentRequest::new(rat(1), rat(1), 14).expect("k nonzero"));
    tally.record(
        "motzkin numbers come out at h = k = 1",
        (0..=14).all(|n| motzkin[n] == rat(MOTZKIN[n])),
    );
    let shifted = mu_recur(&MomentRequest::new(rat(2), rat(1), 11).expect("k nonzero"));
    tally.record(
        "shifted catalan numbers come out at h = 2, k = 1",
        (0..=11).all(|n| shifted[n] == rat(CATALAN[n + 1])),
    );

    tally.finish()
}

/// Orthogonality checks: family constructions, pairings under the moment
/// functional, the Dickson specialization, and the sign convention.
pub fn orthogonality_suite(grid: Grid) -> SuiteReport {
    let (family_n, pair_n, span) = match grid {
        Grid::Full => (20usize, 12usize, 2i64),
        Grid::Small => (12, 8, 1),
    };
    let mut tally = Tally::new("orthogonality");

    for h in int_range(-span, span) {
        for k in int_range(-span, span) {
            let (hr, kr) = (rat(h), rat(k));
            if k != 0 {
                for n in 0..=family_n {
                    tally.record(
                        "recurrence and closed form build the same family",
                        orthogonal_family(n, &hr, &kr).expect("k nonzero")
                            == p_explicit(n, &hr, &kr),
                    );
                }
            }
            for n in 0..=(family_n.min(16)) {
                tally.record(
                    "seed polynomials are the recentered family",
                    p_poly(&hr, &kr, n as i64) == p_explicit(n, &-&hr, &kr),
                );
            }
            for n in 0..=12usize {
                let q = p_explicit(n, &hr, &kr);
                tally.record(
                    "coefficient formula matches the expansion",
                    (0..=n).all(|j| p_coefficient(n, j, &hr, &kr) == q.coeff(j)),
                );
            }
        }
    }

    for k in int_range(-3, 3) {
        let kr = rat(k);
        for n in 0..=16usize {
            tally.record(
                "dickson polynomials are the centered family",
                dickson_e(n, &kr) == p_explicit(n, &rat(0), &kr),
            );
        }
    }

    for h in int_range(-span, span) {
        for k in int_range(-span, span) {
            if k == 0 {
                continue;
            }
            let (hr, kr) = (rat(h), rat(k));
            let mut v = MomentFunctional::new(hr.clone(), kr.clone())
                .expect("k nonzero");
            let family: Vec<Polynomial> = (0..=pair_n)
                .map(|n| orthogonal_family(n, &hr, &kr).expect("k nonzero"))
                .collect();
            let mut cross_ok = true;
            for m in 0..=pair_n {
                for n in 0..m {
                    cross_ok &=
                        apply_functional(&mut v, &family[m].mul(&family[n])).is_zero();
                }
            }
            tally.record("cross pairings vanish", cross_ok);
            tally.record(
                "squared norms are powers of k",
                (0..=pair_n).all(|n| {
                    apply_functional(&mut v, &family[n].mul(&family[n]))
                        == pow(&kr, n)
                }),
            );
            tally.record(
                "family pairs to the delta against its functional",
                (0..=pair_n).all(|n| {
                    delta_relation_check(n, &hr, &kr)
                        .expect("k nonzero")
                        .holds
                }),
            );

            let mut flipped = MomentFunctional::new(-&hr, kr.clone())
                .expect("k nonzero");
            let seed: Vec<Polynomial> = (0..=8)
                .map(|n| p_poly(&hr, &kr, n as i64))
                .collect();
            tally.record(
                "seed family is orthogonal under the flipped functional",
                (0..=8usize).all(|m| {
                    (0..=8usize).all(|n| {
                        let pairing =
                            apply_functional(&mut flipped, &seed[m].mul(&seed[n]));
                        if m == n {
                            pairing == pow(&kr, n)
                        } else {
                            pairing.is_zero()
                        }
                    })
                }),
            );
            if h != 0 {
                tally.record(
                    "unflipped pairing of the seed family fails",
                    apply_functional(&mut v, &seed[1]) == rat(2) * &hr,
                );
            }
        }
    }

    for k in int_range(-2, 3) {
        if k == 0 {
            continue;
        }
        let kr = rat(k);
        let mut v = MomentFunctional::new(rat(0), kr.clone()).expect("k nonzero");
        tally.record(
            "even dickson pairings collapse to the delta",
            (0..=10usize).all(|m| {
                let paired = apply_functional(&mut v, &dickson_e(2 * m, &kr));
                paired == if m == 0 { rat(1) } else { rat(0) }
            }),
        );
    }

    tally.finish()
}

/// The alternating Catalan convolution and its weighted form.
pub fn catalan_suite(grid: Grid) -> SuiteReport {
    let (core_m, weighted_m) = match grid {
        Grid::Full => (100usize, 30usize),
        Grid::Small => (40, 12),
    };
    let mut tally = Tally::new("catalan");

    for m in 0..=core_m {
        let expected = if m == 0 { rat(1) } else { rat(0) };
        tally.record(
            "alternating convolution telescopes to the delta",
            catalan_identity_core(m) == expected,
        );
    }

    for k in int_range(-3, 3) {
        for m in 0..=weighted_m {
            let expected = if m == 0 { rat(1) } else { rat(0) };
            tally.record(
                "weighted convolution telescopes to the delta",
                catalan_identity(m, &rat(k)) == expected,
            );
        }
    }

    for m in 0..25usize {
        let mut acc = ExactScalar::zero();
        for i in 0..=m {
            acc += catalan(i) * catalan(m - i);
        }
        tally.record(
            "catalan numbers satisfy the convolution recurrence",
            catalan(m + 1) == acc,
        );
    }

    for k in [-2i64, 1, 2, 3] {
        let kr = rat(k);
        let mut v = MomentFunctional::new(rat(0), kr.clone()).expect("k nonzero");
        tally.record(
            "identity matches the dickson pairing",
            (0..=10usize).all(|m| {
                apply_functional(&mut v, &dickson_e(2 * m, &kr))
                    == catalan_identity(m, &kr)
            }),
        );
    }

    tally.finish()
}

/// Floating-point weight checks: shape of the density and quadrature
/// against the exact moments.
pub fn weight_suite(grid: Grid) -> SuiteReport {
    let quad_n = match grid {
        Grid::Full => 12usize,
        Grid::Small => 6,
    };
    let mut tally = Tally::new("weight");

    let specs: Vec<WeightSpec> = [(0.0, 1.0), (1.0, 1.0), (1.0, 2.0), (2.0, 4.0), (0.5, 0.25)]
        .iter()
        .map(|&(h, k)| WeightSpec::new(h, k).expect("k positive"))
        .collect();

    for spec in &specs {
        let total = quad_moment(0, spec, 1e-11).expect("smooth integrand");
        tally.record("density integrates to one", (total - 1.0).abs() < 1e-10);

        let (lo, hi) = spec.support();
        tally.record(
            "density vanishes off the support",
            omega(spec, lo - 0.5) == 0.0
                && omega(spec, hi + 0.5) == 0.0
                && omega(spec, lo) == 0.0
                && omega(spec, hi) == 0.0,
        );

        let mut symmetric = true;
        let mut scaled = true;
        let base = WeightSpec::new(0.0, 1.0).expect("k positive");
        let sk = spec.k().sqrt();
        for i in 0..=80 {
            let s = (i as f64 / 80.0) * (hi - lo) * 0.6;
            symmetric &=
                (omega(spec, spec.h() - s) - omega(spec, spec.h() + s)).abs() < 1e-14;
            let t = lo + (i as f64 / 80.0) * (hi - lo);
            let reference = omega(&base, (t - spec.h()) / sk) / sk;
            scaled &= (omega(spec, t) - reference).abs() < 1e-12;
        }
        tally.record("density is symmetric about its center", symmetric);
        tally.record("density rescales to the unit semicircle", scaled);
    }

    for h in [0i64, 1, 2] {
        for k in [1i64, 2, 4] {
            let spec = WeightSpec::new(h as f64, k as f64).expect("k positive");
            let req = MomentRequest::new(rat(h), rat(k), quad_n).expect("k nonzero");
            let exact = mu_recur(&req);
            let mut ok = true;
            for (n, value) in exact.iter().enumerate() {
                let q = quad_moment(n, &spec, 1e-10).expect("smooth integrand");
                let e = value.to_f64().expect("moments fit in f64");
                ok &= (q - e).abs() / e.abs().max(1.0) < 1e-8;
            }
            tally.record("quadrature reproduces the exact moments", ok);
        }
    }

    tally.finish()
}

/// Runs every suite on the chosen grid, in a fixed order.
pub fn all_suites(grid: Grid) -> Vec<SuiteReport> {
    vec![
        group_suite(grid),
        recurrence_suite(grid),
        moments_suite(grid),
        orthogonality_suite(grid),
        catalan_suite(grid),
        weight_suite(grid),
    ]
}

/// Looks a suite up by its command-line name.
pub fn suite_by_name(name: &str, grid: Grid) -> Option<SuiteReport> {
    match name {
        "group" => Some(group_suite(grid)),
        "recurrence" => Some(recurrence_suite(grid)),
        "moments" => Some(moments_suite(grid)),
        "orthogonality" => Some(orthogonality_suite(grid)),
        "catalan" => Some(catalan_suite(grid)),
        "weight" => Some(weight_suite(grid)),
        _ => None,
    }
}
