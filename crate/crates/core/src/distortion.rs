//! Two-point distortion: the functional `Delta_f(z1, z2)` and the sin/sinh
//! bounds that hold whenever `||S_f|| <= 2(1 + delta^2)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::analytic::{jet, AnalyticFunction, ExtremalKind};
use crate::classes::ClassSpec;
use crate::disk::{hyperbolic_distance, pseudo_hyperbolic};
use crate::error::{bad, check_in_disk, Error, Result};

/// Slack allowed on either side of the two-point bounds.
pub const TPD_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionResult {
    pub z1: Complex64,
    pub z2: Complex64,
    pub rho: f64,
    pub lambda: f64,
    pub delta_f: f64,
    /// `None` when `lambda > pi/delta` (the lower bound does not apply).
    pub lower: Option<f64>,
    pub upper: f64,
    pub delta_param: f64,
}

impl DistortionResult {
    pub fn lower_slack(&self) -> Option<f64> {
        self.lower.map(|l| self.delta_f - l)
    }

    pub fn upper_slack(&self) -> f64 {
        self.upper - self.delta_f
    }

    pub fn holds(&self) -> bool {
        self.lower_slack().is_none_or(|s| s >= -TPD_TOL) && self.upper_slack() >= -TPD_TOL
    }
}

/// `|f(z1) - f(z2)| / sqrt((1 - |z1|^2)|f'(z1)| (1 - |z2|^2)|f'(z2)|)`.
///
/// The weights enter under the square root, which makes the quantity
/// invariant under post-composition with Mobius maps and under disk
/// automorphisms; the two-point bounds are stated for this form.
pub fn delta_functional(f: &AnalyticFunction, z1: Complex64, z2: Complex64) -> Result<f64> {
    check_in_disk(z1)?;
    check_in_disk(z2)?;
    if z1 == z2 {
        return Err(Error::CoincidentPoints);
    }
    let j1 = jet(f, z1)?;
    let j2 = jet(f, z2)?;
    let w = (1.0 - z1.norm_sqr()) * j1.f1.norm() * (1.0 - z2.norm_sqr()) * j2.f1.norm();
    Ok((j1.f - j2.f).norm() / w.sqrt())
}

/// `delta > 0` with `2(1 + delta^2)` equal to the class norm bound:
/// `sqrt(beta^2 + 2 beta - 1)` for `G(beta)`, `sqrt(-2 alpha/(1 + alpha))` for `F(alpha)`.
pub fn delta_param(spec: ClassSpec) -> Result<f64> {
    spec.validate()?;
    let d2 = match spec {
        ClassSpec::G(b) => b * b + 2.0 * b - 1.0,
        ClassSpec::F(a) => -2.0 * a / (1.0 + a),
    };
    if d2 <= 1e-14 {
        return Err(bad(format!(
            "{spec}: norm bound {} <= 2, two-point bounds need delta > 0",
            spec.norm_bound()
        )));
    }
    Ok(d2.sqrt())
}

/// `(1/delta) sin(delta lambda)` for `0 <= lambda <= pi/delta`.
pub fn tpd_lower(delta: f64, lambda: f64) -> Result<f64> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(bad("lower two-point bound needs delta > 0"));
    }
    if !(0.0..=PI / delta).contains(&lambda) {
        return Err(Error::OutOfRange {
            value: lambda,
            reason: format!("lambda must lie in [0, pi/{delta}]"),
        });
    }
    Ok((delta * lambda).sin() / delta)
}

/// `sinh(c lambda)/c` with `c = sqrt(2 + delta^2)`.
pub fn tpd_upper(delta: f64, lambda: f64) -> Result<f64> {
    if delta.is_nan() || lambda.is_nan() || delta < 0.0 || lambda < 0.0 {
        return Err(bad("upper two-point bound needs delta, lambda >= 0"));
    }
    let c = (2.0 + delta * delta).sqrt();
    Ok((c * lambda).sinh() / c)
}

/// `((1+z)/(1-z))^{i delta}` (kind F) or `((1+z)/(1-z))^{sqrt(2+delta^2)}` (kind G).
pub fn tb_extremal(kind: ExtremalKind, delta: f64, z: Complex64) -> Result<Complex64> {
    AnalyticFunction::DistortionExtremal { kind, delta }.value(z)
}

/// Full two-point record for one pair.
pub fn distortion_at(
    f: &AnalyticFunction,
    delta: f64,
    z1: Complex64,
    z2: Complex64,
) -> Result<DistortionResult> {
    let rho = pseudo_hyperbolic(z1, z2)?;
    let lambda = hyperbolic_distance(z1, z2)?;
    let delta_f = delta_functional(f, z1, z2)?;
    let lower = if lambda <= PI / delta {
        Some(tpd_lower(delta, lambda)?)
    } else {
        None
    };
    Ok(DistortionResult {
        z1,
        z2,
        rho,
        lambda,
        delta_f,
        lower,
        upper: tpd_upper(delta, lambda)?,
        delta_param: delta,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TpdReport {
    pub delta: f64,
    pub results: Vec<DistortionResult>,
    /// Smallest `Delta_f - lower` over pairs where the lower bound applies.
    pub worst_lower_slack: Option<f64>,
    pub worst_upper_slack: f64,
    pub lower_skipped: usize,
    pub ok: bool,
}

/// Checks `lower <= Delta_f <= upper` on every pair, with `delta` taken
/// from the class.
pub fn verify_tpd(
    f: &AnalyticFunction,
    spec: ClassSpec,
    pairs: &[(Complex64, Complex64)],
) -> Result<TpdReport> {
    let delta = delta_param(spec)?;
    let results: Vec<DistortionResult> = pairs
        .iter()
        .map(|&(a, b)| distortion_at(f, delta, a, b))
        .collect::<Result<_>>()?;
    let worst_lower_slack = results
        .iter()
        .filter_map(|r| r.lower_slack())
        .reduce(f64::min);
    let worst_upper_slack = results
        .iter()
        .map(|r| r.upper_slack())
        .fold(f64::INFINITY, f64::min);
    let lower_skipped = results.iter().filter(|r| r.lower.is_none()).count();
    let ok = results.iter().all(|r| r.holds());
    Ok(TpdReport {
        delta,
        results,
        worst_lower_slack,
        worst_upper_slack,
        lower_skipped,
        ok,
    })
}
