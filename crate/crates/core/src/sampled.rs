//! Boundary graph functions of time, sampled at knots.
//!
//! A `SampledFunction` is piecewise linear between strictly increasing knot
//! times and is only defined on its knot window. Built-in profiles keep their
//! analytic generator alongside the knots, so boundary rescalings
//! f ↦ (f(r²t + τ) − f(τ))/r can be evaluated exactly instead of through the
//! interpolant; piecewise-linear data rescales exactly anyway because the
//! change of variables is affine.

use crate::error::{Error, Result};

/// Exact generator for built-in boundary profiles.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticSource {
    Const(f64),
    /// slope · t + intercept
    Linear { slope: f64, intercept: f64 },
    /// amp · sin(freq · t)
    Sine { amp: f64, freq: f64 },
    /// amp · |t|^{1/2}
    SqrtCusp { amp: f64 },
    /// (base(r²t + τ) − base(τ)) / r
    Rescaled {
        base: Box<AnalyticSource>,
        r: f64,
        tau: f64,
    },
}

impl AnalyticSource {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            AnalyticSource::Const(c) => *c,
            AnalyticSource::Linear { slope, intercept } => slope * t + intercept,
            AnalyticSource::Sine { amp, freq } => amp * (freq * t).sin(),
            AnalyticSource::SqrtCusp { amp } => amp * t.abs().sqrt(),
            AnalyticSource::Rescaled { base, r, tau } => {
                (base.eval(r * r * t + tau) - base.eval(*tau)) / r
            }
        }
    }
}

/// A function of time given by sorted knots with piecewise-linear
/// interpolation, optionally backed by an exact analytic source.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    knots: Vec<(f64, f64)>,
    source: Option<AnalyticSource>,
}

impl SampledFunction {
    /// Builds from raw knots. Knot times must be finite and strictly
    /// increasing; at least one knot is required.
    pub fn from_knots(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::Degenerate("sampled function needs ≥ 1 knot".into()));
        }
        for w in knots.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::Degenerate(format!(
                    "knot times must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if knots.iter().any(|(t, v)| !t.is_finite() || !v.is_finite()) {
            return Err(Error::Degenerate("non-finite knot".into()));
        }
        Ok(SampledFunction {
            knots,
            source: None,
        })
    }

    /// Samples an analytic source on `n` uniform knots over [t0, t1] and
    /// keeps the source for exact evaluation.
    pub fn analytic(source: AnalyticSource, t0: f64, t1: f64, n: usize) -> Result<Self> {
        if !(t1 > t0) || n < 2 {
            return Err(Error::Degenerate(
                "analytic sampling needs t1 > t0 and n ≥ 2".into(),
            ));
        }
        let knots = (0..n)
            .map(|i| {
                let t = t0 + (t1 - t0) * i as f64 / (n - 1) as f64;
                (t, source.eval(t))
            })
            .collect();
        Ok(SampledFunction {
            knots,
            source: Some(source),
        })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn source(&self) -> Option<&AnalyticSource> {
        self.source.as_ref()
    }

    /// Definition window [t_min, t_max].
    pub fn window(&self) -> (f64, f64) {
        (self.knots[0].0, self.knots[self.knots.len() - 1].0)
    }

    fn in_window(&self, t: f64) -> bool {
        let (a, b) = self.window();
        t >= a && t <= b
    }

    /// Evaluates at `t`; outside the window this is a window error.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !self.in_window(t) {
            let (a, b) = self.window();
            return Err(Error::Window(format!(
                "t = {t} outside function window [{a}, {b}]"
            )));
        }
        if let Some(src) = &self.source {
            return Ok(src.eval(t));
        }
        Ok(self.eval_pl(t))
    }

    /// Piecewise-linear evaluation (ignores the analytic source).
    pub fn eval_pl(&self, t: f64) -> f64 {
        let k = &self.knots;
        if t <= k[0].0 {
            return k[0].1;
        }
        if t >= k[k.len() - 1].0 {
            return k[k.len() - 1].1;
        }
        // last index with knot time <= t
        let i = match k.binary_search_by(|(kt, _)| kt.total_cmp(&t)) {
            Ok(i) => return k[i].1,
            Err(i) => i - 1,
        };
        let (t0, v0) = k[i];
        let (t1, v1) = k[i + 1];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    /// The blowup rescaling t ↦ (f(r²t + τ) − f(τ))/r, exact for both the
    /// piecewise-linear and the analytic representation. The window maps to
    /// [(t_min − τ)/r², (t_max − τ)/r²].
    pub fn rescale(&self, tau: f64, r: f64) -> Result<SampledFunction> {
        if !(r > 0.0) {
            return Err(Error::Precondition("rescale needs r > 0".into()));
        }
        if !self.in_window(tau) {
            return Err(Error::Window(format!("rescale center τ = {tau} off window")));
        }
        let f_tau = self.eval(tau)?;
        let r2 = r * r;
        let mut knots: Vec<(f64, f64)> = self
            .knots
            .iter()
            .map(|(t, v)| ((t - tau) / r2, (v - f_tau) / r))
            .collect();
        // Keep τ itself as a knot so the interpolant is exactly the rescaled
        // interpolant (affine maps preserve the linear pieces).
        if !self.knots.iter().any(|(t, _)| *t == tau) {
            let pos = knots.partition_point(|(t, _)| *t < 0.0);
            knots.insert(pos, (0.0, 0.0));
        }
        let source = self.source.as_ref().map(|src| AnalyticSource::Rescaled {
            base: Box::new(src.clone()),
            r,
            tau,
        });
        Ok(SampledFunction { knots, source })
    }

    /// Restriction to [a, b] (both inside the window); knot set keeps
    /// interior knots and adds exact endpoint knots.
    pub fn restrict(&self, a: f64, b: f64) -> Result<SampledFunction> {
        if !(b > a) || !self.in_window(a) || !self.in_window(b) {
            return Err(Error::Window(format!(
                "restriction [{a}, {b}] not inside window"
            )));
        }
        let mut knots = vec![(a, self.eval(a)?)];
        for &(t, v) in &self.knots {
            if t > a && t < b {
                knots.push((t, v));
            }
        }
        knots.push((b, self.eval(b)?));
        Ok(SampledFunction {
            knots,
            source: self.source.clone(),
        })
    }

    /// Range of values attained at knots (coarse min/max bound).
    pub fn knot_value_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &(_, v) in &self.knots {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        (lo, hi)
    }
}

/// Lip(1/2) seminorm estimate: the exact maximum of
/// |f(t) − f(s)| / |t − s|^{1/2} over knot pairs, together with the same
/// maximum over once-subdivided knots. For piecewise-linear f the true
/// supremum can exceed the knot-pair value (the ratio is maximized inside a
/// segment when slopes are steep), so both numbers are reported.
#[derive(Debug, Clone, Copy)]
pub struct LipHalfEstimate {
    pub knot_pair: f64,
    pub refined: f64,
}

impl LipHalfEstimate {
    /// The better (larger) of the two lower bounds.
    pub fn value(&self) -> f64 {
        self.knot_pair.max(self.refined)
    }
}

/// Computes the Lip(1/2) estimate. Requires ≥ 2 knots.
pub fn lip_half_norm(f: &SampledFunction) -> Result<LipHalfEstimate> {
    if f.knots().len() < 2 {
        return Err(Error::Degenerate("lip_half_norm needs ≥ 2 knots".into()));
    }
    let pair_max = |pts: &[(f64, f64)]| -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let dt = (pts[j].0 - pts[i].0).abs().sqrt();
                if dt > 0.0 {
                    m = m.max((pts[j].1 - pts[i].1).abs() / dt);
                }
            }
        }
        m
    };
    let knot_pair = pair_max(f.knots());
    // one subdivision, evaluated through the same path as `eval`
    let mut fine = Vec::with_capacity(2 * f.knots().len());
    for w in f.knots().windows(2) {
        let tm = 0.5 * (w[0].0 + w[1].0);
        fine.push(w[0]);
        fine.push((tm, f.eval(tm)?));
    }
    fine.push(*f.knots().last().unwrap());
    let refined = pair_max(&fine);
    Ok(LipHalfEstimate { knot_pair, refined })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_function_has_zero_norm() {
        let f = SampledFunction::from_knots(vec![(-1.0, 0.0), (0.0, 0.0), (1.0, 0.0)]).unwrap();
        let est = lip_half_norm(&f).unwrap();
        assert_eq!(est.value(), 0.0);
    }

    #[test]
    fn single_knot_is_degenerate_for_norm() {
        let f = SampledFunction::from_knots(vec![(0.0, 1.0)]).unwrap();
        assert!(matches!(lip_half_norm(&f), Err(Error::Degenerate(_))));
    }

    // Oracle (dense brute force over pairs, run before freezing): for
    // f(t) = |t|^{1/2} on [−1,1] the supremum of |f(t)−f(s)|/|t−s|^{1/2}
    // equals 1: same-sign pairs give √(t−s)/(√t+√s) ≤ 1 with equality as
    // s → 0, and cross-sign pairs give |√t − √u|/√(t+u) ≤ 1.
    #[test]
    fn sqrt_cusp_norm_is_one() {
        let f = SampledFunction::analytic(AnalyticSource::SqrtCusp { amp: 1.0 }, -1.0, 1.0, 4001)
            .unwrap();
        let est = lip_half_norm(&f).unwrap();
        assert!(
            (est.value() - 1.0).abs() < 2e-2,
            "lip(1/2) of sqrt cusp = {} (oracle 1)",
            est.value()
        );
        assert!(est.value() <= 1.0 + 1e-12, "estimate must stay a lower bound");

        // independent brute force on a fresh 1501-point lattice
        let mut brute: f64 = 0.0;
        for i in 0..1501 {
            let t = -1.0 + 2.0 * i as f64 / 1500.0;
            for j in (i + 1)..1501 {
                let s = -1.0 + 2.0 * j as f64 / 1500.0;
                let num = (t.abs().sqrt() - s.abs().sqrt()).abs();
                brute = brute.max(num / (s - t).abs().sqrt());
            }
        }
        assert!((brute - 1.0).abs() < 2e-2, "brute force oracle = {brute}");
    }

    // For f(t) = 3t on [0,1], (3|t−s|)/|t−s|^{1/2} = 3|t−s|^{1/2} is
    // maximized at the extreme pair (0,1): value 3.
    #[test]
    fn linear_norm_attained_at_extreme_pair() {
        let f =
            SampledFunction::analytic(AnalyticSource::Linear { slope: 3.0, intercept: 0.0 }, 0.0, 1.0, 65)
                .unwrap();
        let est = lip_half_norm(&f).unwrap();
        assert!((est.value() - 3.0).abs() < 1e-12, "got {}", est.value());
    }

    #[test]
    fn eval_errors_outside_window() {
        let f = SampledFunction::from_knots(vec![(0.0, 1.0), (1.0, 2.0)]).unwrap();
        assert!(matches!(f.eval(1.5), Err(Error::Window(_))));
        assert_eq!(f.eval(0.5).unwrap(), 1.5);
    }

    #[test]
    fn rescale_is_exact_for_piecewise_linear() {
        let f = SampledFunction::from_knots(vec![(-2.0, 1.0), (0.0, 0.5), (2.0, 2.5)]).unwrap();
        let g = f.rescale(0.5, 0.5).unwrap();
        // g(t) = (f(0.25 t + 0.5) − f(0.5)) / 0.5 checked at several points
        for &t in &[-4.0, -1.0, 0.0, 1.0, 3.0] {
            let expect = (f.eval(0.25 * t + 0.5).unwrap() - f.eval(0.5).unwrap()) / 0.5;
            assert!((g.eval(t).unwrap() - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn rescale_of_cusp_is_self_similar_bitwise() {
        let f = SampledFunction::analytic(AnalyticSource::SqrtCusp { amp: 1.0 }, -8.0, 8.0, 513)
            .unwrap();
        for k in 1..=6 {
            let r = 0.5f64.powi(k);
            let g = f.rescale(0.0, r).unwrap();
            for &t in &[-1.0, -0.25, 0.125, 0.75, 1.0] {
                // dyadic r makes √(r²|t|)/r = √|t| exact in floating point
                assert_eq!(g.eval(t).unwrap(), t.abs().sqrt());
            }
        }
    }

    #[test]
    fn rescale_semigroup_on_dyadic_radii() {
        let f = SampledFunction::analytic(
            AnalyticSource::Sine { amp: 0.3, freq: 1.0 },
            -4.0,
            4.0,
            801,
        )
        .unwrap();
        let two_step = f.rescale(0.0, 0.25).unwrap().rescale(0.0, 0.5).unwrap();
        let one_step = f.rescale(0.0, 0.125).unwrap();
        for i in 0..=40 {
            let t = -2.0 + 4.0 * i as f64 / 40.0;
            let a = two_step.eval(t).unwrap();
            let b = one_step.eval(t).unwrap();
            assert!((a - b).abs() < 1e-15, "semigroup mismatch at t={t}: {a} vs {b}");
        }
    }
}
