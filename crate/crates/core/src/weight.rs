//! The absolutely continuous weight behind the moment functional, and
//! floating-point quadrature against it.
//!
//! For `k > 0` the moments `mu_n(h, k)` are realized by the semicircle-type
//! density
//!
//! `omega(t) = sqrt(4k - (t - h)^2) / (2 k pi)`
//!
//! supported on `[h - 2 sqrt(k), h + 2 sqrt(k)]` and zero elsewhere. This
//! module evaluates the density, samples it for plotting, and integrates
//! `t^n omega(t)` with adaptive Simpson quadrature so the exact rational
//! routes can be checked against classical numerics.
//!
//! The integration substitutes `t = h + 2 sqrt(k) sin(theta)`, which turns
//! the endpoint square-root singularity of the derivative into the smooth
//! integrand `(2/pi) (h + 2 sqrt(k) sin(theta))^n cos(theta)^2` on
//! `[-pi/2, pi/2]`; Simpson panels then converge at full order.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Weight-function parameters; requires finite `h` and finite `k > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeightSpec {
    h: f64,
    k: f64,
}

impl WeightSpec {
    pub fn new(h: f64, k: f64) -> Result<Self> {
        if !h.is_finite() || !k.is_finite() || k <= 0.0 {
            return Err(Error::NonPositiveK);
        }
        Ok(Self { h, k })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// The support interval `[h - 2 sqrt(k), h + 2 sqrt(k)]`.
    pub fn support(&self) -> (f64, f64) {
        let r = 2.0 * self.k.sqrt();
        (self.h - r, self.h + r)
    }
}

/// The density at `t`: the semicircle formula inside the support, zero
/// outside. Continuous everywhere, including the endpoints where the
/// radicand vanishes.
pub fn omega(spec: &WeightSpec, t: f64) -> f64 {
    let dev = t - spec.h;
    let radicand = 4.0 * spec.k - dev * dev;
    if radicand <= 0.0 {
        return 0.0;
    }
    radicand.sqrt() / (2.0 * spec.k * PI)
}

/// Uniform samples of the density across the closed support,
/// endpoints included. Needs at least two samples.
pub fn weight_samples(spec: &WeightSpec, samples: usize) -> Result<Vec<(f64, f64)>> {
    if samples < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples,
        });
    }
    let (lo, hi) = spec.support();
    let step = (hi - lo) / (samples - 1) as f64;
    Ok((0..samples)
        .map(|i| {
            let t = lo + step * i as f64;
            (t, omega(spec, t))
        })
        .collect())
}

/// The sample table as CSV with header `t,omega`, one row per sample,
/// twelve significant digits, newline terminated.
pub fn weight_csv(spec: &WeightSpec, samples: usize) -> Result<String> {
    let rows = weight_samples(spec, samples)?;
    let mut out = String::from("t,omega\n");
    for (t, w) in rows {
        out.push_str(&format!("{:.11e},{:.11e}\n", t, w));
    }
    Ok(out)
}

struct QuadState {
    value: f64,
    error_bound: f64,
    converged: bool,
    budget: u64,
}

fn simpson(fa: f64, fm: f64, fb: f64, width: f64) -> f64 {
    (fa + 4.0 * fm + fb) * width / 6.0
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    tol_floor: f64,
    force: usize,
    depth: usize,
    state: &mut QuadState,
) {
    // The panel budget bounds total work. Needle-sharp integrands (large
    // moment orders produce peaks spanning hundreds of decades) would
    // otherwise expand the refinement tree exponentially before the depth
    // limit ever bites.
    if state.budget == 0 {
        state.value += whole;
        state.error_bound = f64::INFINITY;
        state.converged = false;
        return;
    }
    state.budget -= 1;
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    // A non-finite panel can never be refined into convergence (overflowed
    // integrands give infinities whose differences are NaN), so record the
    // failure instead of recursing to full depth on every subpanel.
    if !delta.is_finite() {
        state.value += left + right;
        state.error_bound = f64::INFINITY;
        state.converged = false;
        return;
    }
    // Accept the pair of half panels when the Richardson estimate of the
    // remaining error is within budget; the correction term delta / 15
    // upgrades the result to fifth order. The first few levels always
    // split, because symmetric integrands can fool the whole-interval
    // comparison into agreeing long before anything has converged.
    if (force == 0 && delta.abs() <= 15.0 * tol) || depth == 0 {
        state.value += left + right + delta / 15.0;
        state.error_bound += delta.abs() / 15.0;
        if depth == 0 && delta.abs() > 15.0 * tol {
            state.converged = false;
        }
        return;
    }
    // Never chase tolerances below rounding noise; the floor keeps panels
    // near the endpoints (where the integrand vanishes) from recursing
    // forever on cancellation dust.
    let half_tol = (0.5 * tol).max(tol_floor);
    let force = force.saturating_sub(1);
    adapt(f, a, m, fa, flm, fm, left, half_tol, tol_floor, force, depth - 1, state);
    adapt(f, m, b, fm, frm, fb, right, half_tol, tol_floor, force, depth - 1, state);
}

/// Integrates `t^n omega(t)` over the support by adaptive Simpson
/// quadrature on the sine-substituted integrand.
///
/// `rel_tol` must lie in `(1e-14, 1e-2)`; it is interpreted relative to
/// `max(1, |coarse estimate|)`. Total work is bounded by a refinement
/// depth and a global panel budget. Returns the non-convergence error,
/// with the best estimate and error bound attached, when either limit is
/// exhausted before the panels settle.
pub fn quad_moment(n: usize, spec: &WeightSpec, rel_tol: f64) -> Result<f64> {
    if !(rel_tol > 1e-14 && rel_tol < 1e-2) {
        return Err(Error::ToleranceOutOfRange(rel_tol));
    }
    let radius = 2.0 * spec.k.sqrt();
    let center = spec.h;
    let f = move |theta: f64| {
        let c = theta.cos();
        (center + radius * theta.sin()).powi(n as i32) * c * c * 2.0 / PI
    };
    let (a, b) = (-FRAC_PI_2, FRAC_PI_2);
    let (fa, fb) = (f(a), f(b));
    let fm = f(0.0);
    let whole = simpson(fa, fm, fb, b - a);
    let scale = whole.abs().max(1.0);
    let tol = rel_tol * scale;
    let tol_floor = f64::EPSILON * scale;
    let mut state = QuadState {
        value: 0.0,
        error_bound: 0.0,
        converged: true,
        budget: 1 << 22,
    };
    adapt(&f, a, b, fa, fm, fb, whole, tol, tol_floor, 6, 48, &mut state);
    if !state.converged {
        return Err(Error::QuadratureNonConvergence {
            estimate: state.value,
            error_bound: state.error_bound,
        });
    }
    Ok(state.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(WeightSpec::new(0.0, 1.0).is_ok());
        assert!(WeightSpec::new(1.0, 0.0).is_err());
        assert!(WeightSpec::new(1.0, -2.0).is_err());
        assert!(WeightSpec::new(f64::NAN, 1.0).is_err());
        assert!(WeightSpec::new(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn support_endpoints() {
        let spec = WeightSpec::new(1.0, 4.0).unwrap();
        assert_eq!(spec.support(), (-3.0, 5.0));
    }

    #[test]
    fn omega_vanishes_outside_support() {
        let spec = WeightSpec::new(0.0, 1.0).unwrap();
        assert_eq!(omega(&spec, 2.0), 0.0);
        assert_eq!(omega(&spec, -2.0), 0.0);
        assert_eq!(omega(&spec, 5.0), 0.0);
        assert!(omega(&spec, 1.999) > 0.0);
    }

    #[test]
    fn omega_center_value() {
        // At the center the density is 1 / (pi sqrt(k)).
        for k in [1.0, 2.0, 4.0] {
            let spec = WeightSpec::new(3.0, k).unwrap();
            let expected = 1.0 / (PI * k.sqrt());
            assert!((omega(&spec, 3.0) - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn omega_is_symmetric_about_center() {
        let spec = WeightSpec::new(-1.5, 2.0).unwrap();
        for i in 0..50 {
            let s = i as f64 * 0.05;
            let left = omega(&spec, -1.5 - s);
            let right = omega(&spec, -1.5 + s);
            assert!((left - right).abs() < 1e-15);
        }
    }

    #[test]
    fn omega_scales_to_the_standard_semicircle() {
        // omega_{h,k}(t) = omega_{0,1}((t - h)/sqrt(k)) / sqrt(k).
        let base = WeightSpec::new(0.0, 1.0).unwrap();
        let spec = WeightSpec::new(2.0, 3.0).unwrap();
        for i in -60..=60 {
            let t = i as f64 * 0.1;
            let scaled = omega(&base, (t - 2.0) / 3f64.sqrt()) / 3f64.sqrt();
            assert!((omega(&spec, t) - scaled).abs() < 1e-14);
        }
    }

    #[test]
    fn normalization_integrates_to_one() {
        for (h, k) in [(0.0, 1.0), (1.0, 2.0), (-2.0, 4.0), (0.5, 0.25)] {
            let spec = WeightSpec::new(h, k).unwrap();
            let total = quad_moment(0, &spec, 1e-11).unwrap();
            assert!(
                (total - 1.0).abs() < 1e-10,
                "normalization off at h={}, k={}: {}",
                h,
                k,
                total
            );
        }
    }

    #[test]
    fn quadrature_matches_motzkin_moments() {
        let spec = WeightSpec::new(1.0, 1.0).unwrap();
        let motzkin = [1.0, 1.0, 2.0, 4.0, 9.0, 21.0, 51.0, 127.0];
        for (n, m) in motzkin.iter().enumerate() {
            let q = quad_moment(n, &spec, 1e-10).unwrap();
            assert!(
                (q - m).abs() / m.max(1.0) < 1e-9,
                "moment {} came out as {}",
                n,
                q
            );
        }
    }

    #[test]
    fn quadrature_matches_odd_zero_moments() {
        let spec = WeightSpec::new(0.0, 2.0).unwrap();
        for n in [1, 3, 5, 7] {
            let q = quad_moment(n, &spec, 1e-10).unwrap();
            assert!(q.abs() < 1e-10);
        }
    }

    #[test]
    fn needle_integrand_exhausts_the_budget() {
        // (2 + 2 sin theta)^400 spans 240 decades across the interval, far
        // beyond what any fixed refinement can resolve; the call must
        // return promptly with the non-convergence error instead of
        // grinding through an exponential panel tree.
        let spec = WeightSpec::new(2.0, 1.0).unwrap();
        assert!(matches!(
            quad_moment(400, &spec, 1e-10),
            Err(Error::QuadratureNonConvergence { .. })
        ));
    }

    #[test]
    fn overflowing_integrand_reports_non_convergence() {
        // (1e150 + 2 sin theta)^3 overflows f64, so the panel estimates are
        // infinite and their Richardson deltas are NaN.
        let spec = WeightSpec::new(1e150, 1.0).unwrap();
        assert!(matches!(
            quad_moment(3, &spec, 1e-10),
            Err(Error::QuadratureNonConvergence { .. })
        ));
    }

    #[test]
    fn tolerance_is_validated() {
        let spec = WeightSpec::new(1.0, 1.0).unwrap();
        assert!(matches!(
            quad_moment(2, &spec, 1e-15),
            Err(Error::ToleranceOutOfRange(_))
        ));
        assert!(matches!(
            quad_moment(2, &spec, 0.5),
            Err(Error::ToleranceOutOfRange(_))
        ));
    }

    #[test]
    fn samples_are_uniform_and_cover_support() {
        let spec = WeightSpec::new(1.0, 1.0).unwrap();
        let rows = weight_samples(&spec, 5).unwrap();
        assert_eq!(rows.len(), 5);
        assert!((rows[0].0 - -1.0).abs() < 1e-12);
        assert!((rows[4].0 - 3.0).abs() < 1e-12);
        assert_eq!(rows[0].1, 0.0);
        assert_eq!(rows[4].1, 0.0);
        assert!(rows[2].1 > 0.0);
    }

    #[test]
    fn too_few_samples_is_an_error() {
        let spec = WeightSpec::new(0.0, 1.0).unwrap();
        assert_eq!(
            weight_samples(&spec, 1),
            Err(Error::TooFewSamples { needed: 2, got: 1 })
        );
    }

    #[test]
    fn csv_shape() {
        let spec = WeightSpec::new(0.0, 1.0).unwrap();
        let csv = weight_csv(&spec, 4).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,omega");
        assert_eq!(lines.len(), 5);
        assert!(csv.ends_with('\n'));
        for line in &lines[1..] {
            let mut parts = line.split(',');
            let t: f64 = parts.next().unwrap().parse().unwrap();
            let w: f64 = parts.next().unwrap().parse().unwrap();
            assert!(parts.next().is_none());
            assert!(t.is_finite() && w.is_finite());
        }
    }
}
