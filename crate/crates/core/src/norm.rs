//! Estimation of the hyperbolic sup-norm `||S_f|| = sup (1-|z|^2)^2 |S_f(z)|`,
//! the pointwise class bounds, and the one-dimensional auxiliary functions
//! whose maximizers yield them.
//!
//! The supremum is usually approached only as `|z| -> 1`. [`estimate_norm`]
//! therefore reports the best interior value it found (a certified lower
//! bound) and, when the profile is still rising at the outermost radius, a
//! linear extrapolation of the profile in `1 - r` to the boundary.

use std::cmp::Ordering;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::{schwarzian, AnalyticFunction};
use crate::classes::ClassSpec;
use crate::disk::GridConfig;
use crate::error::{bad, Error, Result};

const GOLDEN: f64 = 0.618_033_988_749_894_9;
const TOP_K: usize = 6;
const REFINE_ROUNDS: usize = 3;
const REFINE_TOL: f64 = 1e-10;
const EXTRAPOLATION_POINTS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct NormReport {
    /// `max(interior_max, extrapolated_value)`.
    pub estimate: f64,
    pub peak_r: f64,
    pub peak_theta: f64,
    pub extrapolated: bool,
    /// Largest profile value actually evaluated inside the disk.
    pub interior_max: f64,
    /// Boundary limit estimate along the peak angle, when computed.
    pub extrapolated_value: Option<f64>,
    pub theoretical_bound: Option<f64>,
    pub slack: Option<f64>,
}

impl NormReport {
    pub fn with_bound(mut self, bound: f64) -> Self {
        self.theoretical_bound = Some(bound);
        self.slack = Some(bound - self.estimate);
        self
    }
}

/// `(1 - r^2)^2 |S_f(r e^{i theta})|`.
pub fn weighted_profile(f: &AnalyticFunction, r: f64, theta: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::OutsideDisk(Complex64::from_polar(r, theta)));
    }
    let w = 1.0 - r * r;
    Ok(w * w * schwarzian(f, Complex64::from_polar(r, theta))?.norm())
}

/// Golden-section search for a maximum of `f` on `[a, b]`.
pub fn golden_section_max(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut lo, mut hi) = (a.min(b), a.max(b));
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = f(x2);
        }
    }
    // Endpoints are candidates too: the maximum of a monotone profile sits there.
    let mid = 0.5 * (lo + hi);
    [(mid, f(mid)), (a, f(a)), (b, f(b))]
        .into_iter()
        .fold((mid, f64::NEG_INFINITY), |best, c| {
            if c.1 > best.1 {
                c
            } else {
                best
            }
        })
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    value: f64,
    r: f64,
    theta: f64,
}

// Larger value first; ties go to the smaller radius, then smaller angle.
fn rank(a: &Sample, b: &Sample) -> Ordering {
    b.value
        .partial_cmp(&a.value)
        .unwrap_or(Ordering::Equal)
        .then(a.r.partial_cmp(&b.r).unwrap_or(Ordering::Equal))
        .then(a.theta.partial_cmp(&b.theta).unwrap_or(Ordering::Equal))
}

fn profile_or_zero(f: &AnalyticFunction, r: f64, theta: f64) -> f64 {
    weighted_profile(f, r, theta).unwrap_or(0.0)
}

fn refine(f: &AnalyticFunction, seed: Sample, r_lo: f64, r_hi: f64, dtheta: f64) -> Sample {
    let mut best = seed;
    let (t_lo, t_hi) = (seed.theta - dtheta, seed.theta + dtheta);
    for _ in 0..REFINE_ROUNDS {
        let (r, v) = golden_section_max(
            |r| profile_or_zero(f, r, best.theta),
            r_lo,
            r_hi,
            REFINE_TOL,
        );
        if v > best.value {
            best = Sample {
                value: v,
                r,
                theta: best.theta,
            };
        }
        let (t, v) = golden_section_max(|t| profile_or_zero(f, best.r, t), t_lo, t_hi, REFINE_TOL);
        if v > best.value {
            best = Sample {
                value: v,
                r: best.r,
                theta: t,
            };
        }
    }
    best.theta = best.theta.rem_euclid(TAU);
    best
}

/// Least-squares line through `(t_i, y_i)`, evaluated at `t = 0`.
fn linear_intercept(t: &[f64], y: &[f64]) -> f64 {
    let n = t.len() as f64;
    let mt = t.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = t.iter().zip(y).map(|(a, b)| (a - mt) * (b - my)).sum();
    let sxx: f64 = t.iter().map(|a| (a - mt) * (a - mt)).sum();
    my - sxy / sxx * mt
}

/// Grid scan, local refinement of the best cells, then boundary
/// extrapolation along the peak angle.
pub fn estimate_norm(f: &AnalyticFunction, cfg: &GridConfig) -> Result<NormReport> {
    let radii = cfg.radii();
    let n_theta = cfg.angles();
    let cells: Vec<(usize, usize)> = (0..radii.len())
        .flat_map(|i| (0..n_theta).map(move |j| (i, j)))
        .collect();
    let mut samples: Vec<(usize, Sample)> = cells
        .par_iter()
        .map(|&(i, j)| {
            let (r, theta) = (radii[i], cfg.angle(j));
            weighted_profile(f, r, theta).map(|value| (i, Sample { value, r, theta }))
        })
        .collect::<Result<_>>()?;
    samples.sort_by(|a, b| rank(&a.1, &b.1));

    let dtheta = TAU / n_theta as f64;
    let mut refined: Vec<Sample> = samples
        .par_iter()
        .take(TOP_K)
        .map(|&(i, s)| {
            let r_lo = radii[i.saturating_sub(1)];
            let r_hi = radii[(i + 1).min(radii.len() - 1)];
            refine(f, s, r_lo, r_hi, dtheta)
        })
        .collect();
    refined.sort_by(rank);
    let peak = refined.first().copied().unwrap_or(Sample {
        value: 0.0,
        r: 0.0,
        theta: 0.0,
    });

    let r_max = cfg.r_max();
    let step = 0.5 * (1.0 - r_max);
    let rising = r_max - step > 0.0
        && profile_or_zero(f, r_max, peak.theta) > profile_or_zero(f, r_max - step, peak.theta);
    let extrapolated_value = if rising && peak.value > 0.0 {
        let t: Vec<f64> = (0..EXTRAPOLATION_POINTS)
            .map(|k| (1.0 - r_max) * (1.0 + 0.5 * k as f64))
            .collect();
        let y: Vec<f64> = t
            .iter()
            .map(|t| weighted_profile(f, 1.0 - t, peak.theta))
            .collect::<Result<_>>()?;
        Some(linear_intercept(&t, &y))
    } else {
        None
    };
    let extrapolated = extrapolated_value.is_some_and(|v| v > peak.value);
    let estimate = extrapolated_value.map_or(peak.value, |v| v.max(peak.value));

    let report = NormReport {
        estimate,
        peak_r: peak.r,
        peak_theta: peak.theta,
        extrapolated,
        interior_max: peak.value,
        extrapolated_value,
        theoretical_bound: None,
        slack: None,
    };
    Ok(match f.class_hint() {
        Some(spec) => report.with_bound(spec.norm_bound()),
        None => report,
    })
}

/// `beta (2 + beta) / (2 (1 - |z|)^2)`.
pub fn pointwise_bound_g(beta: f64, z: Complex64) -> Result<f64> {
    ClassSpec::g(beta)?;
    crate::error::check_in_disk(z)?;
    let d = 1.0 - z.norm();
    Ok(beta * (2.0 + beta) / (2.0 * d * d))
}

/// `2(1 - alpha)/(1 + alpha) * (1 + alpha - alpha |z|^2)/(1 - |z|^2)^2`.
pub fn pointwise_bound_f(alpha: f64, z: Complex64) -> Result<f64> {
    ClassSpec::f(alpha)?;
    crate::error::check_in_disk(z)?;
    let s = z.norm_sqr();
    Ok(2.0 * (1.0 - alpha) / (1.0 + alpha) * (1.0 + alpha - alpha * s) / ((1.0 - s) * (1.0 - s)))
}

pub fn pointwise_bound(spec: ClassSpec, z: Complex64) -> Result<f64> {
    match spec {
        ClassSpec::G(b) => pointwise_bound_g(b, z),
        ClassSpec::F(a) => pointwise_bound_f(a, z),
    }
}

/// `g(s) = (2|z|^2 + s^2 (beta - beta |z|^2 - 2|z|^2)) / (2 |z|^2 (1 - |z|^2)(1 - s)^2)`.
pub fn aux_g(beta: f64, absz: f64, s: f64) -> f64 {
    let z2 = absz * absz;
    (2.0 * z2 + s * s * (beta - beta * z2 - 2.0 * z2)) / (2.0 * z2 * (1.0 - z2) * (1.0 - s).powi(2))
}

/// `h(s) = 2(1 - alpha) (|z|^2 - s^2 (1 + alpha - alpha |z|^2)) / (|z|^2 (1 - |z|^2)(1 - s)^2)`.
pub fn aux_h(alpha: f64, absz: f64, s: f64) -> f64 {
    let z2 = absz * absz;
    2.0 * (1.0 - alpha) * (z2 - s * s * (1.0 + alpha - alpha * z2))
        / (z2 * (1.0 - z2) * (1.0 - s).powi(2))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxReport {
    pub s_star: f64,
    pub numeric_argmax: f64,
}

const AUX_SCAN: usize = 4000;

/// Compares the closed-form maximizer of `g` (for `G(beta)`, at `|z|`)
/// or `h` (for `F(alpha)`, at `|z|^2/(1 + alpha - alpha |z|^2)`) with a
/// dense scan plus golden-section refinement over `(0, |z|]`.
pub fn aux_maximizer_check(kind: ClassSpec, absz: f64) -> Result<AuxReport> {
    kind.validate()?;
    if !(absz > 0.0 && absz < 1.0) {
        return Err(bad(format!("|z| must lie in (0, 1), got {absz}")));
    }
    let (aux, s_star): (Box<dyn Fn(f64) -> f64>, f64) = match kind {
        ClassSpec::G(b) => (Box::new(move |s| aux_g(b, absz, s)), absz),
        ClassSpec::F(a) => (
            Box::new(move |s| aux_h(a, absz, s)),
            absz * absz / (1.0 + a - a * absz * absz),
        ),
    };
    let grid: Vec<f64> = (1..=AUX_SCAN)
        .map(|i| absz * i as f64 / AUX_SCAN as f64)
        .collect();
    let best = (0..grid.len())
        .max_by(|&i, &j| {
            aux(grid[i])
                .partial_cmp(&aux(grid[j]))
                .unwrap_or(Ordering::Equal)
                .then(j.cmp(&i))
        })
        .expect("non-empty scan");
    let lo = if best == 0 {
        absz * 1e-9
    } else {
        grid[best - 1]
    };
    let hi = grid[(best + 1).min(grid.len() - 1)];
    let (numeric_argmax, _) = golden_section_max(&aux, lo, hi, 1e-12);
    Ok(AuxReport {
        s_star,
        numeric_argmax,
    })
}
