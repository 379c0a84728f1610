//! Truncated complex Taylor series centered at the origin.
//!
//! A [`TaylorSeries`] of order `N` stores the coefficients `c_0..=c_N`.
//! Binary operations truncate both operands to the smaller order, so every
//! coefficient of a result is exact up to floating-point rounding.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Series order used when the caller does not ask for one.
pub const DEFAULT_ORDER: usize = 128;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    coeffs: Vec<Complex64>,
}

/// Binary coefficient-wise operations for [`ts_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CalculusOp {
    Derivative,
    IntegrateFrom0,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Transcendental {
    Exp,
    Log,
    /// Principal branch of `a^gamma`.
    Pow(Complex64),
}

impl TaylorSeries {
    /// Builds a series from `c_0..=c_N`. At least one coefficient is
    /// required and every coefficient must be finite.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParameter("a series needs at least c_0".into()));
        }
        if let Some(i) = coeffs
            .iter()
            .position(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_vec(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec(vec![ZERO; order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series of `z` itself.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = ONE;
        s
    }

    /// `1 / (1 - z)` truncated at `order`.
    pub fn geometric(order: usize) -> Self {
        Self::from_vec(vec![ONE; order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_k`, zero beyond the stored order.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    /// Truncates or zero-pads to exactly `order`.
    pub fn with_order(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, ZERO);
        Self::from_vec(c)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul_series(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let a = &self.coeffs;
        let b = &other.coeffs;
        let out = (0..=n)
            .map(|k| (0..=k).fold(ZERO, |acc, j| acc + a[j] * b[k - j]))
            .collect();
        Self::from_vec(out)
    }

    /// Recursive deconvolution `self / other`.
    pub fn div_series(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0 == ZERO {
            return Err(Error::DivisionByNonUnit);
        }
        let n = self.order().min(other.order());
        let b = &other.coeffs;
        let inv = ONE / b0;
        let mut out: Vec<Complex64> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let s = (1..=k).fold(self.coeffs[k], |acc, j| acc - b[j] * out[k - j]);
            out.push(s * inv);
        }
        Ok(Self::from_vec(out))
    }

    /// Formal derivative; the order drops by one (an order-0 series maps to `[0]`).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(ZERO);
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / (k + 1) as f64),
        );
        Self::from_vec(out)
    }

    pub fn exp(&self) -> Self {
        let n = self.order();
        let a = &self.coeffs;
        let mut out: Vec<Complex64> = Vec::with_capacity(n + 1);
        out.push(a[0].exp());
        for m in 1..=n {
            let s = (1..=m).fold(ZERO, |acc, k| acc + a[k] * out[m - k] * k as f64);
            out.push(s / m as f64);
        }
        Self::from_vec(out)
    }

    /// Principal logarithm.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == ZERO {
            return Err(Error::BranchPointAtCenter);
        }
        let n = self.order();
        let a = &self.coeffs;
        let mut out: Vec<Complex64> = Vec::with_capacity(n + 1);
        out.push(a0.ln());
        for m in 1..=n {
            let s = (1..m).fold(ZERO, |acc, k| acc + out[k] * a[m - k] * k as f64);
            out.push((a[m] - s / m as f64) / a0);
        }
        Ok(Self::from_vec(out))
    }

    /// Principal power `self^gamma`, computed with the Miller recurrence
    /// (`a * (b)' = gamma * a' * b` solved coefficient by coefficient).
    pub fn pow(&self, gamma: Complex64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == ZERO {
            return Err(Error::BranchPointAtCenter);
        }
        let n = self.order();
        let a = &self.coeffs;
        let mut out: Vec<Complex64> = Vec::with_capacity(n + 1);
        out.push((gamma * a0.ln()).exp());
        for m in 1..=n {
            let s = (1..=m).fold(ZERO, |acc, k| {
                acc + a[k] * out[m - k] * ((gamma + 1.0) * k as f64 - m as f64)
            });
            out.push(s / (a0 * m as f64));
        }
        Ok(Self::from_vec(out))
    }

    /// `self(inner(z))` by Horner's scheme. `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs[0] != ZERO {
            return Err(Error::NonvanishingInner(inner.coeffs[0]));
        }
        let n = self.order().min(inner.order());
        let inner = inner.with_order(n);
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// `self(z) / z` for a series vanishing at 0.
    pub fn shift_div_by_z(&self) -> Result<Self> {
        if self.coeffs[0] != ZERO {
            return Err(Error::NonvanishingAtZero(self.coeffs[0]));
        }
        if self.order() == 0 {
            return Ok(Self::zero(0));
        }
        Ok(Self::from_vec(self.coeffs[1..].to_vec()))
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, c| acc * z + c)
    }

    /// Value plus the magnitude `|c_N z^N|` of the last retained term.
    pub fn eval_with_tail(&self, z: Complex64) -> (Complex64, f64) {
        let n = self.order();
        (
            self.eval(z),
            self.coeffs[n].norm() * z.norm().powi(n as i32),
        )
    }

    /// `[a(z), a'(z), ..., a^(k)(z)]` for `|z| < 1`.
    pub fn eval_jet(&self, z: Complex64, k: usize) -> Result<Vec<Complex64>> {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisk(z));
        }
        Ok(self.eval_jet_unchecked(z, k))
    }

    pub(crate) fn eval_jet_unchecked(&self, z: Complex64, k: usize) -> Vec<Complex64> {
        // Repeated synthetic division: d[j] ends up as the j-th Taylor
        // coefficient of a about z.
        let mut d = vec![ZERO; k + 1];
        for &c in self.coeffs.iter().rev() {
            for j in (1..=k).rev() {
                d[j] = d[j] * z + d[j - 1];
            }
            d[0] = d[0] * z + c;
        }
        let mut fact = 1.0;
        for (j, dj) in d.iter_mut().enumerate().skip(1) {
            fact *= j as f64;
            *dj *= fact;
        }
        d
    }

    /// Largest `|c_k| r^k` over the last `window` coefficients, a heuristic
    /// for the truncation error at radius `r`.
    pub fn tail_indicator(&self, r: f64, window: usize) -> f64 {
        let n = self.order();
        let start = n.saturating_sub(window.max(1) - 1);
        (start..=n)
            .map(|k| self.coeffs[k].norm() * r.powi(k as i32))
            .fold(0.0, f64::max)
    }

    /// `sum |c_k| r^k`, the majorant used to normalise tail indicators.
    pub fn majorant(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }
}

impl Add for &TaylorSeries {
    type Output = TaylorSeries;
    fn add(self, rhs: Self) -> TaylorSeries {
        let n = self.order().min(rhs.order());
        TaylorSeries::from_vec((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }
}

impl Sub for &TaylorSeries {
    type Output = TaylorSeries;
    fn sub(self, rhs: Self) -> TaylorSeries {
        let n = self.order().min(rhs.order());
        TaylorSeries::from_vec((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }
}

impl Mul for &TaylorSeries {
    type Output = TaylorSeries;
    fn mul(self, rhs: Self) -> TaylorSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &TaylorSeries {
    type Output = TaylorSeries;
    fn neg(self) -> TaylorSeries {
        TaylorSeries::from_vec(self.coeffs.iter().map(|c| -c).collect())
    }
}

pub fn ts_arith(a: &TaylorSeries, b: &TaylorSeries, op: ArithOp) -> Result<TaylorSeries> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.div_series(b)?,
    })
}

pub fn ts_calculus(a: &TaylorSeries, op: CalculusOp) -> TaylorSeries {
    match op {
        CalculusOp::Derivative => a.derivative(),
        CalculusOp::IntegrateFrom0 => a.integrate(),
    }
}

pub fn ts_transcend(a: &TaylorSeries, op: Transcendental) -> Result<TaylorSeries> {
    match op {
        Transcendental::Exp => Ok(a.exp()),
        Transcendental::Log => a.log(),
        Transcendental::Pow(g) => a.pow(g),
    }
}

pub fn ts_compose(outer: &TaylorSeries, inner: &TaylorSeries) -> Result<TaylorSeries> {
    outer.compose(inner)
}

pub fn ts_shift_div_by_z(a: &TaylorSeries) -> Result<TaylorSeries> {
    a.shift_div_by_z()
}

pub fn eval_jet(a: &TaylorSeries, z: Complex64, k: usize) -> Result<Vec<Complex64>> {
    a.eval_jet(z, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn real(s: &TaylorSeries) -> Vec<f64> {
        s.coeffs().iter().map(|c| c.re).collect()
    }

    fn close(a: &TaylorSeries, b: &TaylorSeries, tol: f64) -> bool {
        a.order() == b.order()
            && a.coeffs()
                .iter()
                .zip(b.coeffs())
                .all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn product_of_conjugate_binomials() {
        let a = TaylorSeries::from_real(&[1.0, 1.0, 0.0, 0.0]).unwrap();
        let b = TaylorSeries::from_real(&[1.0, -1.0, 0.0, 0.0]).unwrap();
        let p = ts_arith(&a, &b, ArithOp::Mul).unwrap();
        assert_eq!(real(&p), vec![1.0, 0.0, -1.0, 0.0]);
    }

    #[test]
    fn reciprocal_of_one_minus_z_is_geometric() {
        let one = TaylorSeries::constant(c(1.0), 6);
        let d = TaylorSeries::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let q = ts_arith(&one, &d, ArithOp::Div).unwrap();
        assert_eq!(real(&q), vec![1.0; 7]);
    }

    #[test]
    fn addition_is_componentwise() {
        let a = TaylorSeries::from_real(&[1.0, 2.0]).unwrap();
        let b = TaylorSeries::from_real(&[3.0, 4.0]).unwrap();
        assert_eq!(
            real(&ts_arith(&a, &b, ArithOp::Add).unwrap()),
            vec![4.0, 6.0]
        );
        assert_eq!(
            real(&ts_arith(&a, &b, ArithOp::Sub).unwrap()),
            vec![-2.0, -2.0]
        );
    }

    #[test]
    fn mismatched_orders_truncate() {
        let a = TaylorSeries::from_real(&[1.0, 2.0, 3.0]).unwrap();
        let b = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b).order(), 1);
    }

    #[test]
    fn division_by_non_unit_fails() {
        let a = TaylorSeries::from_real(&[1.0, 2.0]).unwrap();
        let z = TaylorSeries::identity(1);
        assert_eq!(
            ts_arith(&a, &z, ArithOp::Div),
            Err(Error::DivisionByNonUnit)
        );
    }

    #[test]
    fn derivative_and_integral() {
        let z2 = TaylorSeries::from_real(&[0.0, 0.0, 1.0]).unwrap();
        assert_eq!(
            real(&ts_calculus(&z2, CalculusOp::Derivative)),
            vec![0.0, 2.0]
        );
        let a = TaylorSeries::from_real(&[1.0, 1.0]).unwrap();
        assert_eq!(
            real(&ts_calculus(&a, CalculusOp::IntegrateFrom0)),
            vec![0.0, 1.0, 0.5]
        );
        let k = TaylorSeries::from_real(&[5.0]).unwrap();
        assert_eq!(real(&k.derivative()), vec![0.0]);
    }

    #[test]
    fn exp_of_zero_is_one() {
        let e = ts_transcend(&TaylorSeries::zero(5), Transcendental::Exp).unwrap();
        assert_eq!(real(&e), vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn square_of_one_minus_z() {
        let a = TaylorSeries::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0]).unwrap();
        let p = ts_transcend(&a, Transcendental::Pow(c(2.0))).unwrap();
        let want = TaylorSeries::from_real(&[1.0, -2.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(close(&p, &want, 1e-15), "{:?}", p);
    }

    #[test]
    fn log_matches_mercator_series() {
        // Oracle: log(1 - z) = -sum z^k / k.
        let a = TaylorSeries::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let l = ts_transcend(&a, Transcendental::Log).unwrap();
        for k in 1..=7 {
            assert!((l.coeff(k) - c(-1.0 / k as f64)).norm() < 1e-15, "k={k}");
        }
        assert!((l.coeff(3) - c(-1.0 / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn log_and_pow_reject_branch_point() {
        let z = TaylorSeries::identity(3);
        assert_eq!(z.log(), Err(Error::BranchPointAtCenter));
        assert_eq!(z.pow(c(0.5)), Err(Error::BranchPointAtCenter));
    }

    #[test]
    fn composition_examples() {
        let n = 8;
        let g = TaylorSeries::geometric(n);
        let z2 = TaylorSeries::from_real(&[0.0, 0.0, 1.0])
            .unwrap()
            .with_order(n);
        let r = ts_compose(&g, &z2).unwrap();
        assert_eq!(real(&r), vec![1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]);

        let a = TaylorSeries::from_real(&[0.5, 2.0, -1.0, 3.0]).unwrap();
        let id = TaylorSeries::identity(3);
        assert!(close(
            &ts_compose(
                &id,
                &TaylorSeries::from_real(&[0.0, 2.0, -1.0, 3.0]).unwrap()
            )
            .unwrap(),
            &TaylorSeries::from_real(&[0.0, 2.0, -1.0, 3.0]).unwrap(),
            0.0
        ));
        assert!(close(&ts_compose(&a, &id).unwrap(), &a, 0.0));
        assert!(matches!(
            ts_compose(&a, &a),
            Err(Error::NonvanishingInner(_))
        ));
    }

    #[test]
    fn shift_examples() {
        let a = TaylorSeries::from_real(&[0.0, 1.0, 2.0]).unwrap();
        assert_eq!(real(&ts_shift_div_by_z(&a).unwrap()), vec![1.0, 2.0]);
        let b = TaylorSeries::from_real(&[0.0, 0.0, 3.0]).unwrap();
        assert_eq!(real(&b.shift_div_by_z().unwrap()), vec![0.0, 3.0]);
        assert_eq!(
            real(&TaylorSeries::identity(1).shift_div_by_z().unwrap()),
            vec![1.0]
        );
        assert!(matches!(
            TaylorSeries::from_real(&[1.0, 1.0])
                .unwrap()
                .shift_div_by_z(),
            Err(Error::NonvanishingAtZero(_))
        ));
    }

    #[test]
    fn jet_examples() {
        let z2 = TaylorSeries::from_real(&[0.0, 0.0, 1.0]).unwrap();
        let j = eval_jet(&z2, c(0.5), 2).unwrap();
        assert_eq!(j, vec![c(0.25), c(1.0), c(2.0)]);

        let a = TaylorSeries::from_real(&[0.7, 1.0, 2.0]).unwrap();
        assert_eq!(a.eval_jet(c(0.0), 0).unwrap(), vec![c(0.7)]);

        // Closed form 1 / (1 - z) at z = 1/2.
        let g = TaylorSeries::geometric(DEFAULT_ORDER);
        let (v, tail) = g.eval_with_tail(c(0.5));
        assert!((v - c(2.0)).norm() < 1e-12);
        assert!(tail < 1e-30);

        assert!(matches!(g.eval_jet(c(1.0), 0), Err(Error::OutsideDisk(_))));
    }

    #[test]
    fn rejects_non_finite() {
        assert_eq!(
            TaylorSeries::from_real(&[1.0, f64::NAN]),
            Err(Error::NonFinite(1))
        );
        assert!(TaylorSeries::new(vec![]).is_err());
    }

    fn coeff_vec(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
            .prop_map(|v| v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect())
    }

    proptest! {
        #[test]
        fn mul_matches_naive_convolution(a in coeff_vec(1..=17), b in coeff_vec(1..=17)) {
            let n = a.len().min(b.len());
            let sa = TaylorSeries::new(a.clone()).unwrap();
            let sb = TaylorSeries::new(b.clone()).unwrap();
            let p = &sa * &sb;
            let mut naive = vec![ZERO; n];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    if i + j < n {
                        naive[i + j] += x * y;
                    }
                }
            }
            prop_assert_eq!(p.coeffs(), &naive[..]);
        }

        #[test]
        fn exp_log_inverse(c0 in 0.5f64..2.0, rest in coeff_vec(1..=20)) {
            let mut v = vec![Complex64::new(c0, 0.0)];
            v.extend(rest.iter().map(|x| x * 0.5));
            let a = TaylorSeries::new(v).unwrap();
            let back = a.log().unwrap().exp();
            prop_assert!(close(&back, &a, 1e-12));
            let b = TaylorSeries::new(rest).unwrap();
            let again = b.exp().log().unwrap();
            // log is principal: compare after removing 2*pi*i ambiguity in c_0.
            prop_assert!((again.coeff(0).exp() - b.coeff(0).exp()).norm() < 1e-12);
            for k in 1..=b.order() {
                prop_assert!((again.coeff(k) - b.coeff(k)).norm() < 1e-12);
            }
        }

        #[test]
        fn derivative_inverts_integral(a in coeff_vec(1..=24)) {
            let s = TaylorSeries::new(a).unwrap();
            let back = s.integrate().derivative();
            prop_assert_eq!(back.order(), s.order());
            for k in 0..=s.order() {
                prop_assert!((back.coeff(k) - s.coeff(k)).norm() < 1e-14);
            }
        }

        #[test]
        fn pow_zero_and_one(c0 in 0.5f64..2.0, rest in coeff_vec(1..=12)) {
            let mut v = vec![Complex64::new(c0, 0.0)];
            v.extend(rest);
            let a = TaylorSeries::new(v).unwrap();
            prop_assert!(close(&a.pow(c(1.0)).unwrap(), &a, 1e-12));
            prop_assert!(close(&a.pow(c(0.0)).unwrap(), &TaylorSeries::constant(c(1.0), a.order()), 0.0));
        }

        #[test]
        fn jet_matches_direct_polynomial(a in coeff_vec(1..=12), r in 0.0f64..0.99, t in 0.0f64..6.3) {
            let s = TaylorSeries::new(a.clone()).unwrap();
            let z = Complex64::from_polar(r, t);
            let direct: Complex64 = a.iter().enumerate().map(|(k, c)| c * z.powu(k as u32)).sum();
            let scale: f64 = a.iter().map(|c| c.norm()).sum::<f64>().max(1e-300);
            let j = s.eval_jet(z, 1).unwrap();
            prop_assert!((j[0] - direct).norm() <= 1e-13 * scale);
            let d: Complex64 = a.iter().enumerate().skip(1)
                .map(|(k, c)| c * k as f64 * z.powu(k as u32 - 1)).sum();
            prop_assert!((j[1] - d).norm() <= 1e-13 * scale * a.len() as f64);
        }
    }
}
