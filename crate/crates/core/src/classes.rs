//! The classes `G(beta)` and `F(alpha)`: Schwarz functions, the
//! subordination construction, the extremal families and membership checks.
//!
//! Every member of either class satisfies
//! `1 + z f''/f' = target(omega(z))` for a Schwarz function `omega`, which
//! rearranges to `f''/f' = c * (omega/z) / (1 - omega)` with `c = -beta`
//! for `G(beta)` and `c = 2(1 - alpha)` for `F(alpha)`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::analytic::{pre_schwarzian, AnalyticFunction};
use crate::disk::GridConfig;
use crate::error::{bad, check_in_disk, Error, Result};
use crate::jet::Jet3;
use crate::series::TaylorSeries;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Tolerance on the membership margin.
pub const MEMBERSHIP_TOL: f64 = 1e-9;

/// Radius on which the ODE-built series must have converged.
pub const SERIES_COVER_RADIUS: f64 = 0.95;
const SERIES_TAIL_TOL: f64 = 1e-13;
const SERIES_MAX_ORDER: usize = 8192;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassSpec {
    /// `Re(1 + z f''/f') < 1 + beta/2`, `beta > 0`.
    G(f64),
    /// `Re(1 + z f''/f') > alpha`, `-1/2 <= alpha <= 0`.
    F(f64),
}

impl ClassSpec {
    pub fn g(beta: f64) -> Result<Self> {
        let s = ClassSpec::G(beta);
        s.validate()?;
        Ok(s)
    }

    pub fn f(alpha: f64) -> Result<Self> {
        let s = ClassSpec::F(alpha);
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ClassSpec::G(b) if b.is_finite() && b > 0.0 => Ok(()),
            ClassSpec::G(b) => Err(bad(format!("G(beta) needs beta > 0, got {b}"))),
            ClassSpec::F(a) if (-0.5..=0.0).contains(&a) => Ok(()),
            ClassSpec::F(a) => Err(bad(format!("F(alpha) needs -1/2 <= alpha <= 0, got {a}"))),
        }
    }

    /// Sharp bound on `||S_f||` over the class.
    pub fn norm_bound(&self) -> f64 {
        match *self {
            ClassSpec::G(b) => 2.0 * b * (2.0 + b),
            ClassSpec::F(a) => 2.0 * (1.0 - a) / (1.0 + a),
        }
    }

    /// `c` in `f''/f' = c (omega/z) / (1 - omega)`.
    pub fn ode_coefficient(&self) -> f64 {
        match *self {
            ClassSpec::G(b) => -b,
            ClassSpec::F(a) => 2.0 * (1.0 - a),
        }
    }

    /// Signed distance of `Re q` from the class half-plane boundary;
    /// positive inside.
    pub fn margin(&self, q: Complex64) -> f64 {
        match *self {
            ClassSpec::G(b) => 1.0 + b / 2.0 - q.re,
            ClassSpec::F(a) => q.re - a,
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::G(b) => write!(f, "g:{b}"),
            ClassSpec::F(a) => write!(f, "f:{a}"),
        }
    }
}

/// The Mobius map whose image half-plane defines the class:
/// `(1 - (1+beta) z)/(1 - z)` for `G(beta)`, `(1 + (1-2 alpha) z)/(1 - z)` for `F(alpha)`.
pub fn halfplane_target(spec: ClassSpec) -> impl Fn(Complex64) -> Complex64 {
    let k = match spec {
        ClassSpec::G(b) => -(1.0 + b),
        ClassSpec::F(a) => 1.0 - 2.0 * a,
    };
    move |z| (ONE + z * k) / (ONE - z)
}

#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzRepr {
    /// `e^{i rotation} prod (z - z_j)/(1 - conj(z_j) z)`; one zero sits at 0.
    Blaschke {
        zeros: Vec<Complex64>,
        rotation: f64,
    },
    Series(TaylorSeries),
}

/// An analytic self-map of the disk fixing 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SchwarzFunction {
    repr: SchwarzRepr,
    // Blaschke zeros other than the one removed at the origin.
    others: Vec<Complex64>,
}

fn factor_jet(a: Complex64, z: Complex64) -> Jet3 {
    let den = ONE - a.conj() * z;
    let m = 1.0 - a.norm_sqr();
    let d1 = m / (den * den);
    Jet3::new(
        (z - a) / den,
        d1,
        d1 * a.conj() * 2.0 / den,
        d1 * a.conj() * a.conj() * 6.0 / (den * den),
    )
}

fn factor_series(a: Complex64, order: usize) -> TaylorSeries {
    let mut c = vec![ZERO; order + 1];
    c[0] = -a;
    let ac = a.conj();
    let m = 1.0 - a.norm_sqr();
    let mut p = ONE;
    for ck in c.iter_mut().skip(1) {
        *ck = p * m;
        p *= ac;
    }
    TaylorSeries::from_vec(c)
}

impl SchwarzFunction {
    pub fn blaschke(zeros: Vec<Complex64>, rotation: f64) -> Result<Self> {
        if !rotation.is_finite() {
            return Err(bad("non-finite Blaschke rotation"));
        }
        for &z in &zeros {
            check_in_disk(z)?;
        }
        let origin = zeros
            .iter()
            .position(|z| *z == ZERO)
            .ok_or_else(|| bad("a Schwarz Blaschke product needs a zero at 0"))?;
        let mut others = zeros.clone();
        others.remove(origin);
        Ok(Self {
            repr: SchwarzRepr::Blaschke { zeros, rotation },
            others,
        })
    }

    /// Series Schwarz function. Requires `c_0 = 0` and `|omega| < 1` on a
    /// 20 x 20 polar test grid reaching radius 0.99.
    pub fn series(s: TaylorSeries) -> Result<Self> {
        if s.coeff(0) != ZERO {
            return Err(Error::NonvanishingAtZero(s.coeff(0)));
        }
        for i in 1..=20 {
            let r = 0.99 * i as f64 / 20.0;
            for j in 0..20 {
                let z = Complex64::from_polar(r, TAU * j as f64 / 20.0);
                if s.eval(z).norm() >= 1.0 {
                    return Err(bad(format!("series is not a self-map of the disk at {z}")));
                }
            }
        }
        Ok(Self {
            repr: SchwarzRepr::Series(s),
            others: Vec::new(),
        })
    }

    pub fn identity() -> Self {
        Self::blaschke(vec![ZERO], 0.0).expect("valid")
    }

    /// `z^k` for `k >= 1`.
    pub fn monomial(k: usize) -> Self {
        Self::blaschke(vec![ZERO; k.max(1)], 0.0).expect("valid")
    }

    pub fn zero() -> Self {
        Self {
            repr: SchwarzRepr::Series(TaylorSeries::zero(1)),
            others: Vec::new(),
        }
    }

    pub fn repr(&self) -> &SchwarzRepr {
        &self.repr
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        z * self.quotient_jet(z).f
    }

    /// Jet of `omega(z)/z`, analytic across the origin.
    pub fn quotient_jet(&self, z: Complex64) -> Jet3 {
        match &self.repr {
            SchwarzRepr::Blaschke { rotation, .. } => self.others.iter().fold(
                Jet3::constant(Complex64::from_polar(1.0, *rotation)),
                |acc, &a| acc * factor_jet(a, z),
            ),
            SchwarzRepr::Series(s) => {
                let q = s.shift_div_by_z().expect("checked at construction");
                Jet3::from_slice(&q.eval_jet_unchecked(z, 3))
            }
        }
    }

    /// Jet of `omega` itself.
    pub fn jet(&self, z: Complex64) -> Jet3 {
        Jet3::variable(z) * self.quotient_jet(z)
    }

    pub fn to_series(&self, order: usize) -> TaylorSeries {
        match &self.repr {
            SchwarzRepr::Blaschke { rotation, .. } => {
                let init = TaylorSeries::identity(order)
                    .with_order(order)
                    .scale(Complex64::from_polar(1.0, *rotation));
                self.others
                    .iter()
                    .fold(init, |acc, &a| acc.mul_series(&factor_series(a, order)))
            }
            SchwarzRepr::Series(s) => s.with_order(order),
        }
    }
}

fn fmt_complex(z: Complex64) -> String {
    format!("{}:{}", z.re, z.im)
}

impl fmt::Display for SchwarzFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            SchwarzRepr::Blaschke { zeros, rotation } => {
                let z: Vec<String> = zeros.iter().map(|z| fmt_complex(*z)).collect();
                write!(f, "blaschke:{}@{}", z.join("/"), rotation)
            }
            SchwarzRepr::Series(s) => {
                let c: Vec<String> = s.coeffs().iter().skip(1).map(|z| fmt_complex(*z)).collect();
                write!(f, "poly:{}", c.join("/"))
            }
        }
    }
}

#[derive(Debug, Clone)]
struct BuiltSeries {
    f: TaylorSeries,
    df: TaylorSeries,
}

/// A class member given by its Schwarz function. `f''/f'` and `S_f` are
/// evaluated in closed form from `omega`; values of `f` and `f'` come from
/// the ODE-built Taylor series, constructed on first use.
#[derive(Debug)]
pub struct SubordinationFn {
    spec: ClassSpec,
    omega: SchwarzFunction,
    min_order: usize,
    built: OnceLock<BuiltSeries>,
}

impl SubordinationFn {
    pub fn spec(&self) -> ClassSpec {
        self.spec
    }

    pub fn omega(&self) -> &SchwarzFunction {
        &self.omega
    }

    /// Jet of `P = f''/f' = c (omega/z)/(1 - omega)`.
    pub fn pre_schwarzian_jet(&self, z: Complex64) -> Jet3 {
        let u = self.omega.quotient_jet(z);
        let w = Jet3::variable(z) * u;
        (u / (Jet3::constant(ONE) - w)).scale(Complex64::new(self.spec.ode_coefficient(), 0.0))
    }

    fn built(&self) -> &BuiltSeries {
        self.built
            .get_or_init(|| build_series(self.spec, &self.omega, self.min_order))
    }

    /// Taylor series of `f`.
    pub fn series(&self) -> &TaylorSeries {
        &self.built().f
    }

    /// Taylor series of `f'`.
    pub fn derivative_series(&self) -> &TaylorSeries {
        &self.built().df
    }

    pub fn value(&self, z: Complex64) -> Complex64 {
        self.built().f.eval(z)
    }

    pub(crate) fn jet(&self, z: Complex64) -> Result<Jet3> {
        let p = self.pre_schwarzian_jet(z);
        let d = self.built().df.eval(z);
        Ok(Jet3::new(self.value(z), d, d * p.f, d * (p.f1 + p.f * p.f)))
    }
}

fn build_series(spec: ClassSpec, omega: &SchwarzFunction, min_order: usize) -> BuiltSeries {
    let c = Complex64::new(spec.ode_coefficient(), 0.0);
    let mut n = min_order.max(8);
    loop {
        let w = omega.to_series(n + 1);
        let u = w.shift_div_by_z().expect("omega(0) = 0");
        let one_minus_w = &TaylorSeries::constant(ONE, n) - &w;
        let p = u
            .div_series(&one_minus_w)
            .expect("1 - omega(0) = 1")
            .scale(c);
        let df = p.integrate().exp();
        let tail = df.tail_indicator(SERIES_COVER_RADIUS, 8) * df.order() as f64
            / df.majorant(SERIES_COVER_RADIUS);
        if tail < SERIES_TAIL_TOL || n >= SERIES_MAX_ORDER {
            return BuiltSeries {
                f: df.integrate(),
                df,
            };
        }
        n *= 2;
    }
}

/// Solves `f''/f' = c (omega/z)/(1 - omega)`, `f(0) = 0`, `f'(0) = 1`.
///
/// `order` is the starting truncation order; it is doubled until the
/// series of `f'` has converged on `|z| <= 0.95`.
pub fn build_from_schwarz(
    spec: ClassSpec,
    omega: SchwarzFunction,
    order: usize,
) -> Result<AnalyticFunction> {
    spec.validate()?;
    Ok(AnalyticFunction::Subordination(Arc::new(SubordinationFn {
        spec,
        omega,
        min_order: order,
        built: OnceLock::new(),
    })))
}

/// `f_0(z) = (1 - (1-z)^{1+beta})/(1+beta)`, extremal for `G(beta)`.
pub fn extremal_g(beta: f64) -> Result<AnalyticFunction> {
    ClassSpec::g(beta)?;
    Ok(AnalyticFunction::ExtremalG { beta })
}

fn check_f_params(alpha: f64, z0: f64) -> Result<()> {
    ClassSpec::f(alpha)?;
    if !(z0 > -1.0 && z0 < 1.0) {
        return Err(bad(format!("z0 must lie in (-1, 1), got {z0}")));
    }
    Ok(())
}

pub(crate) fn b_formula(alpha: f64, z0: f64) -> f64 {
    let s = z0 * z0;
    z0 * (2.0 + alpha - alpha * s) / (1.0 + alpha + s - alpha * s)
}

/// Second zero `b` of the extremal Blaschke product for `F(alpha)` at `z0`.
pub fn b_param(alpha: f64, z0: f64) -> Result<f64> {
    check_f_params(alpha, z0)?;
    Ok(b_formula(alpha, z0))
}

/// `omega_{z0}(z) = -z (z - b)/(1 - b z)`.
pub fn extremal_omega(alpha: f64, z0: f64) -> Result<SchwarzFunction> {
    let b = b_param(alpha, z0)?;
    SchwarzFunction::blaschke(vec![ZERO, Complex64::new(b, 0.0)], PI)
}

/// `f_{z0}`, for which the pointwise bound of `F(alpha)` is attained at `z0`.
pub fn extremal_f(alpha: f64, z0: f64) -> Result<AnalyticFunction> {
    let omega = extremal_omega(alpha, z0)?;
    build_from_schwarz(ClassSpec::F(alpha), omega, crate::series::DEFAULT_ORDER)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipReport {
    pub ok: bool,
    pub worst_margin: f64,
    pub worst_point: Complex64,
}

/// Samples `q(z) = 1 + z f''/f'` on the grid and reports the smallest
/// distance to the class boundary.
pub fn membership_check(
    f: &AnalyticFunction,
    spec: ClassSpec,
    grid: &GridConfig,
) -> Result<MembershipReport> {
    spec.validate()?;
    let pts = grid.points();
    let margins: Vec<(f64, Complex64)> = pts
        .par_iter()
        .map(|&z| pre_schwarzian(f, z).map(|p| (spec.margin(ONE + z * p), z)))
        .collect::<Result<_>>()?;
    let (worst_margin, worst_point) =
        margins.into_iter().fold(
            (f64::INFINITY, ZERO),
            |acc, m| if m.0 < acc.0 { m } else { acc },
        );
    Ok(MembershipReport {
        ok: worst_margin > -MEMBERSHIP_TOL,
        worst_margin,
        worst_point,
    })
}

/// Quasiconformal extension constant `k < 1` implied by `||S_f|| <= 2k`.
pub fn qc_constant(spec: ClassSpec) -> Option<f64> {
    match spec {
        ClassSpec::G(b) if b > 0.0 && b < std::f64::consts::SQRT_2 - 1.0 => Some(b * (2.0 + b)),
        // (1 - alpha)/(1 + alpha) >= 1 on the admissible range.
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::schwarzian;
    use crate::series::DEFAULT_ORDER;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn targets() {
        let g = halfplane_target(ClassSpec::G(0.7));
        assert_eq!(g(ZERO), ONE);
        let g1 = halfplane_target(ClassSpec::G(1.0));
        assert!((g1(r(0.5)) - ZERO).norm() < 1e-15);
        let f0 = halfplane_target(ClassSpec::F(0.0));
        for x in [0.1, 0.5, 0.9] {
            let w = f0(r(x));
            assert!((w - r((1.0 + x) / (1.0 - x))).norm() < 1e-12);
        }
        // The image of the unit circle lies on the boundary line.
        for t in [0.3f64, 1.0, 2.0, 3.0] {
            let z = Complex64::from_polar(1.0, t);
            assert!((halfplane_target(ClassSpec::G(0.6))(z).re - 1.3).abs() < 1e-12);
            assert!((halfplane_target(ClassSpec::F(-0.25))(z).re + 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn spec_validation() {
        assert!(ClassSpec::g(0.0).is_err());
        assert!(ClassSpec::f(-0.6).is_err());
        assert!(ClassSpec::f(0.1).is_err());
        assert!(ClassSpec::f(-0.5).is_ok());
        assert!(ClassSpec::g(3.0).is_ok());
    }

    #[test]
    fn identity_schwarz_gives_extremal_g() {
        for beta in [0.25, 1.0, 2.0, 3.5] {
            let f =
                build_from_schwarz(ClassSpec::G(beta), SchwarzFunction::identity(), 64).unwrap();
            let AnalyticFunction::Subordination(s) = &f else {
                unreachable!()
            };
            // Oracle: binomial expansion of (1 - (1-z)^{1+beta})/(1+beta).
            let mut binom = 1.0;
            for k in 1..=32 {
                binom *= (1.0 + beta - (k - 1) as f64) / k as f64;
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let want = -sign * binom / (1.0 + beta);
                assert!(
                    (s.series().coeff(k) - r(want)).norm() < 1e-12,
                    "beta={beta} k={k}"
                );
            }
            assert_eq!(s.series().coeff(0), ZERO);
        }
    }

    #[test]
    fn zero_schwarz_gives_identity() {
        let f = build_from_schwarz(ClassSpec::F(-0.2), SchwarzFunction::zero(), 16).unwrap();
        let AnalyticFunction::Subordination(s) = &f else {
            unreachable!()
        };
        assert_eq!(s.series().coeff(1), ONE);
        for k in 2..=16 {
            assert_eq!(s.series().coeff(k), ZERO);
        }
    }

    #[test]
    fn z_squared_convex_member() {
        // f''/f' = 2z/(1 - z^2) integrates to artanh z = z + z^3/3 + ...
        let f = build_from_schwarz(ClassSpec::F(0.0), SchwarzFunction::monomial(2), 16).unwrap();
        let AnalyticFunction::Subordination(s) = &f else {
            unreachable!()
        };
        assert!((s.series().coeff(2)).norm() < 1e-15);
        assert!((s.series().coeff(3) - r(1.0 / 3.0)).norm() < 1e-15);
        assert!((s.series().coeff(5) - r(0.2)).norm() < 1e-15);
    }

    #[test]
    fn series_schwarz_validation() {
        let bad_c0 = TaylorSeries::from_real(&[0.1, 0.5]).unwrap();
        assert!(matches!(
            SchwarzFunction::series(bad_c0),
            Err(Error::NonvanishingAtZero(_))
        ));
        let too_big = TaylorSeries::from_real(&[0.0, 1.2]).unwrap();
        assert!(SchwarzFunction::series(too_big).is_err());
        let ok = TaylorSeries::from_real(&[0.0, 0.5, 0.3]).unwrap();
        let w = SchwarzFunction::series(ok).unwrap();
        assert!((w.eval(r(0.5)) - r(0.325)).norm() < 1e-15);
    }

    #[test]
    fn blaschke_jets_match_series() {
        let w = SchwarzFunction::blaschke(
            vec![ZERO, Complex64::new(0.3, -0.2), Complex64::new(-0.5, 0.1)],
            1.1,
        )
        .unwrap();
        let s = w.to_series(200);
        let z = Complex64::new(0.2, 0.35);
        let j = w.jet(z);
        let d = s.eval_jet(z, 3).unwrap();
        for (a, b) in [j.f, j.f1, j.f2, j.f3].iter().zip(&d) {
            assert!((a - b).norm() < 1e-12);
        }
        assert!(SchwarzFunction::blaschke(vec![r(0.5)], 0.0).is_err());
        assert!(SchwarzFunction::blaschke(vec![ZERO, r(1.0)], 0.0).is_err());
    }

    #[test]
    fn extremal_g_examples() {
        let f = extremal_g(1.0).unwrap();
        for x in [0.1, -0.4, 0.8] {
            assert!((f.value(r(x)).unwrap() - r(x - x * x / 2.0)).norm() < 1e-15);
        }
        let f2 = extremal_g(2.0).unwrap();
        let z = Complex64::new(0.3, 0.2);
        assert!((f2.value(z).unwrap() - (z - z * z + z * z * z / 3.0)).norm() < 1e-15);
        assert!(extremal_g(0.0).is_err());
        assert!(extremal_g(-1.0).is_err());
    }

    #[test]
    fn b_param_examples() {
        assert_eq!(b_param(-0.3, 0.0).unwrap(), 0.0);
        assert!((b_param(-0.5, 0.5).unwrap() - 0.8125 / 0.875).abs() < 1e-15);
        assert_eq!(b_formula(-0.2, 1.0), 1.0);
        assert_eq!(b_formula(-0.2, -1.0), -1.0);
        assert!(b_param(-0.2, 1.0).is_err());
        assert!(b_param(0.2, 0.5).is_err());
    }

    #[test]
    fn extremal_f_examples() {
        let f = extremal_f(-0.3, 0.0).unwrap();
        let AnalyticFunction::Subordination(s) = &f else {
            unreachable!()
        };
        let z = Complex64::new(0.4, 0.3);
        assert!((s.omega().eval(z) + z * z).norm() < 1e-15);
        let rep =
            membership_check(&f, ClassSpec::F(-0.3), &GridConfig::membership_default()).unwrap();
        assert!(rep.ok);

        let f = extremal_f(0.0, 0.3).unwrap();
        assert!(
            membership_check(&f, ClassSpec::F(0.0), &GridConfig::membership_default())
                .unwrap()
                .ok
        );

        for (alpha, z0) in [(-0.5, 0.5), (0.0, 0.7), (-0.25, -0.6)] {
            let f = extremal_f(alpha, z0).unwrap();
            let s = schwarzian(&f, r(z0)).unwrap();
            let want = -2.0 * (1.0 - alpha) * (1.0 + alpha - alpha * z0 * z0)
                / ((1.0 + alpha) * (1.0 - z0 * z0).powi(2));
            assert!((s - r(want)).norm() < 1e-10, "{s} vs {want}");
        }
    }

    #[test]
    fn membership_examples() {
        let grid = GridConfig::membership_default();
        for spec in [ClassSpec::G(0.5), ClassSpec::F(-0.5), ClassSpec::F(0.0)] {
            let rep = membership_check(&AnalyticFunction::identity(), spec, &grid).unwrap();
            assert!(rep.ok);
        }
        // f0 approaches the boundary of G(beta) at |z| -> 1 away from z = 1:
        // margin = beta (Re 1/(1 - z) - 1/2).
        let mut last = f64::INFINITY;
        for r_max in [0.9, 0.99, 0.999] {
            let grid = GridConfig::clustered(60, 60, r_max).unwrap();
            let rep =
                membership_check(&extremal_g(1.0).unwrap(), ClassSpec::G(1.0), &grid).unwrap();
            assert!(rep.ok && rep.worst_margin >= 0.0);
            assert!(rep.worst_margin < last);
            assert!((rep.worst_margin - (1.0 - r_max) / (2.0 * (1.0 + r_max))).abs() < 1e-12);
            last = rep.worst_margin;
        }
        // Koebe is not convex: at z = -0.8, 1 + z k''/k' = (1 + 4z + z^2)/(1 - z^2) < 0.
        let k = AnalyticFunction::koebe(DEFAULT_ORDER);
        let rep = membership_check(&k, ClassSpec::F(0.0), &grid).unwrap();
        assert!(!rep.ok);
        let q = ONE + r(-0.8) * pre_schwarzian(&k, r(-0.8)).unwrap();
        assert!(q.re < 0.0);
    }

    #[test]
    fn qc_constants() {
        assert!((qc_constant(ClassSpec::G(0.2)).unwrap() - 0.44).abs() < 1e-15);
        assert_eq!(qc_constant(ClassSpec::G(1.0)), None);
        assert_eq!(qc_constant(ClassSpec::F(0.0)), None);
        assert_eq!(qc_constant(ClassSpec::F(-0.5)), None);
    }
}
