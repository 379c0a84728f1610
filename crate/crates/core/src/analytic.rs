//! Normalized locally univalent functions on the disk and their
//! pre-Schwarzian and Schwarzian derivatives.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::classes::{ClassSpec, SubordinationFn};
use crate::error::{check_in_disk, Error, Result};
use crate::jet::Jet3;
use crate::series::TaylorSeries;

/// Below this `|f'(z)|` evaluation reports [`Error::VanishingDerivative`].
pub const VANISHING_DERIVATIVE: f64 = 1e-14;

/// Default spacing of the finite-difference oracle.
pub const FD_STEP: f64 = 1e-3;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `T(w) = (a w + b) / (c w + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mobius {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.re.is_finite() || !det.im.is_finite() {
            return Err(Error::BadParameter("Mobius map with ad - bc = 0".into()));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn eval(&self, w: Complex64) -> Result<Complex64> {
        let den = self.c * w + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(w));
        }
        Ok((self.a * w + self.b) / den)
    }

    /// `[T, T', T'', T''']` at `w`.
    pub fn derivatives(&self, w: Complex64) -> Result<[Complex64; 4]> {
        let den = self.c * w + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(w));
        }
        let det = self.det();
        let inv = ONE / den;
        let t1 = det * inv * inv;
        Ok([
            (self.a * w + self.b) * inv,
            t1,
            -t1 * self.c * inv * 2.0,
            t1 * self.c * self.c * inv * inv * 6.0,
        ])
    }
}

/// Which extremal of the two-point distortion theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    /// `((1+z)/(1-z))^{i delta}`, sharp for the lower bound.
    F,
    /// `((1+z)/(1-z))^{sqrt(2+delta^2)}`, sharp for the upper bound.
    G,
}

impl ExtremalKind {
    pub fn exponent(self, delta: f64) -> Complex64 {
        match self {
            ExtremalKind::F => Complex64::new(0.0, delta),
            ExtremalKind::G => Complex64::new((2.0 + delta * delta).sqrt(), 0.0),
        }
    }
}

#[derive(Debug, Clone)]
pub enum AnalyticFunction {
    /// `(1 - (1-z)^{1+beta}) / (1+beta)`, evaluated in closed form.
    ExtremalG {
        beta: f64,
    },
    /// Defined by `1 + z f''/f' = target(omega(z))` for a class target.
    Subordination(Arc<SubordinationFn>),
    Series(TaylorSeries),
    Mobius(Mobius),
    PostComposed {
        outer: Mobius,
        inner: Box<AnalyticFunction>,
    },
    /// Extremals `F`, `G` of the two-point distortion theorem. Not normalized.
    DistortionExtremal {
        kind: ExtremalKind,
        delta: f64,
    },
}

impl AnalyticFunction {
    pub fn identity() -> Self {
        AnalyticFunction::Series(TaylorSeries::identity(1))
    }

    /// Koebe function `z / (1-z)^2 = sum n z^n`, truncated at `order`.
    pub fn koebe(order: usize) -> Self {
        let c: Vec<f64> = (0..=order).map(|n| n as f64).collect();
        AnalyticFunction::Series(TaylorSeries::from_real(&c).expect("finite"))
    }

    pub fn post_compose(outer: Mobius, inner: AnalyticFunction) -> Self {
        AnalyticFunction::PostComposed {
            outer,
            inner: Box::new(inner),
        }
    }

    /// The class this function is known to belong to, when the
    /// representation records it.
    pub fn class_hint(&self) -> Option<ClassSpec> {
        match self {
            AnalyticFunction::ExtremalG { beta } => Some(ClassSpec::G(*beta)),
            AnalyticFunction::Subordination(s) => Some(s.spec()),
            _ => None,
        }
    }

    /// `f(z)` without derivative checks.
    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        match self {
            AnalyticFunction::ExtremalG { beta } => {
                let b1 = 1.0 + beta;
                Ok((ONE - (ONE - z).powf(b1)) / b1)
            }
            AnalyticFunction::Subordination(s) => Ok(s.value(z)),
            AnalyticFunction::Series(s) => Ok(s.eval(z)),
            AnalyticFunction::Mobius(m) => m.eval(z),
            AnalyticFunction::PostComposed { outer, inner } => outer.eval(inner.value(z)?),
            AnalyticFunction::DistortionExtremal { kind, delta } => {
                Ok((kind.exponent(*delta) * log_cayley(z)).exp())
            }
        }
    }

    fn raw_jet(&self, z: Complex64) -> Result<Jet3> {
        match self {
            AnalyticFunction::ExtremalG { beta } => {
                let b = *beta;
                let w = ONE - z;
                let wb = w.powf(b);
                Ok(Jet3::new(
                    (ONE - w * wb) / (1.0 + b),
                    wb,
                    -wb / w * b,
                    wb / (w * w) * (b * (b - 1.0)),
                ))
            }
            AnalyticFunction::Subordination(s) => s.jet(z),
            AnalyticFunction::Series(s) => Ok(Jet3::from_slice(&s.eval_jet_unchecked(z, 3))),
            AnalyticFunction::Mobius(m) => Ok(Jet3::from_slice(&m.derivatives(z)?)),
            AnalyticFunction::PostComposed { outer, inner } => {
                let j = inner.raw_jet(z)?;
                Ok(j.compose(outer.derivatives(j.f)?))
            }
            AnalyticFunction::DistortionExtremal { kind, delta } => {
                let q = ONE - z * z;
                let l = Jet3::new(
                    log_cayley(z),
                    ONE * 2.0 / q,
                    z * 4.0 / (q * q),
                    (ONE + z * z * 3.0) * 4.0 / (q * q * q),
                );
                Ok(l.scale(kind.exponent(*delta)).exp())
            }
        }
    }
}

fn log_cayley(z: Complex64) -> Complex64 {
    ((ONE + z) / (ONE - z)).ln()
}

impl fmt::Display for AnalyticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticFunction::ExtremalG { beta } => write!(f, "extremal-g:{beta}"),
            AnalyticFunction::Subordination(s) => write!(f, "subord:{};{}", s.spec(), s.omega()),
            AnalyticFunction::Series(s) => write!(f, "series(order {})", s.order()),
            AnalyticFunction::Mobius(m) => {
                write!(f, "mobius({}, {}, {}, {})", m.a, m.b, m.c, m.d)
            }
            AnalyticFunction::PostComposed { inner, .. } => write!(f, "mobius o {inner}"),
            AnalyticFunction::DistortionExtremal { kind, delta } => {
                write!(f, "distortion-extremal-{kind:?}:{delta}")
            }
        }
    }
}

fn check_derivative(j: &Jet3, z: Complex64) -> Result<()> {
    if j.f1.norm() < VANISHING_DERIVATIVE {
        Err(Error::VanishingDerivative(z))
    } else {
        Ok(())
    }
}

/// Value and first three derivatives of `f` at `z`.
pub fn jet(f: &AnalyticFunction, z: Complex64) -> Result<Jet3> {
    check_in_disk(z)?;
    let j = f.raw_jet(z)?;
    check_derivative(&j, z)?;
    Ok(j)
}

/// `f''(z) / f'(z)`.
pub fn pre_schwarzian(f: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
    check_in_disk(z)?;
    if let AnalyticFunction::Subordination(s) = f {
        return Ok(s.pre_schwarzian_jet(z).f);
    }
    let j = f.raw_jet(z)?;
    check_derivative(&j, z)?;
    Ok(j.pre_schwarzian())
}

/// `S_f(z) = f'''/f' - (3/2)(f''/f')^2`.
///
/// Subordination forms skip the series: with `P = f''/f'` known in closed
/// form from the Schwarz function, `S_f = P' - P^2/2`.
pub fn schwarzian(f: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
    check_in_disk(z)?;
    if let AnalyticFunction::Subordination(s) = f {
        let p = s.pre_schwarzian_jet(z);
        return Ok(p.f1 - p.f * p.f * 0.5);
    }
    let j = f.raw_jet(z)?;
    check_derivative(&j, z)?;
    Ok(j.schwarzian())
}

/// Test oracle: `S_f(z)` from central differences of `f` on the seven
/// points `z + k h`, `k = -3..=3`. Sixth-order stencils for `f'`, `f''`,
/// fourth-order for `f'''`.
pub fn schwarzian_fd_oracle(f: &AnalyticFunction, z: Complex64, h: f64) -> Result<Complex64> {
    if h.is_nan() || h <= 0.0 || z.norm() + 3.0 * h >= 1.0 {
        return Err(Error::StencilOutsideDisk { z, h });
    }
    let mut v = [Complex64::new(0.0, 0.0); 7];
    for (i, slot) in v.iter_mut().enumerate() {
        *slot = f.value(z + Complex64::new((i as f64 - 3.0) * h, 0.0))?;
    }
    let [m3, m2, m1, c0, p1, p2, p3] = v;
    let d1 = (-m3 + m2 * 9.0 - m1 * 45.0 + p1 * 45.0 - p2 * 9.0 + p3) / (60.0 * h);
    let d2 = (m3 * 2.0 - m2 * 27.0 + m1 * 270.0 - c0 * 490.0 + p1 * 270.0 - p2 * 27.0 + p3 * 2.0)
        / (180.0 * h * h);
    let d3 = (m3 - m2 * 8.0 + m1 * 13.0 - p1 * 13.0 + p2 * 8.0 - p3) / (8.0 * h * h * h);
    if d1.norm() < VANISHING_DERIVATIVE {
        return Err(Error::VanishingDerivative(z));
    }
    let p = d2 / d1;
    Ok(d3 / d1 - p * p * 1.5)
}
