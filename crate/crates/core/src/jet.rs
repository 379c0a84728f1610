//! Third-order jets: a value and its first three complex derivatives at a
//! point, with exact Leibniz / Faa di Bruno arithmetic.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `(f, f', f'', f''')` evaluated at a single point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub f: Complex64,
    pub f1: Complex64,
    pub f2: Complex64,
    pub f3: Complex64,
}

impl Jet3 {
    pub const fn new(f: Complex64, f1: Complex64, f2: Complex64, f3: Complex64) -> Self {
        Self { f, f1, f2, f3 }
    }

    pub fn from_slice(d: &[Complex64]) -> Self {
        let at = |k: usize| d.get(k).copied().unwrap_or(ZERO);
        Self::new(at(0), at(1), at(2), at(3))
    }

    pub const fn constant(c: Complex64) -> Self {
        Self::new(c, ZERO, ZERO, ZERO)
    }

    /// The jet of the coordinate function at `z`.
    pub const fn variable(z: Complex64) -> Self {
        Self::new(z, ONE, ZERO, ZERO)
    }

    pub fn scale(self, k: Complex64) -> Self {
        Self::new(self.f * k, self.f1 * k, self.f2 * k, self.f3 * k)
    }

    pub fn recip(self) -> Self {
        let g = self.f;
        let r = ONE / g;
        let r2 = r * r;
        Self::new(
            r,
            -self.f1 * r2,
            (self.f1 * self.f1 * 2.0 - g * self.f2) * r2 * r,
            (-self.f1 * self.f1 * self.f1 * 6.0 + g * self.f1 * self.f2 * 6.0 - g * g * self.f3)
                * r2
                * r2,
        )
    }

    /// `g(self)` where `outer = [g, g', g'', g''']` is evaluated at `self.f`.
    pub fn compose(self, outer: [Complex64; 4]) -> Self {
        let [g0, g1, g2, g3] = outer;
        let (a, b, c) = (self.f1, self.f2, self.f3);
        Self::new(
            g0,
            g1 * a,
            g2 * a * a + g1 * b,
            g3 * a * a * a + g2 * a * b * 3.0 + g1 * c,
        )
    }

    pub fn exp(self) -> Self {
        let e = self.f.exp();
        self.compose([e, e, e, e])
    }

    /// `f''/f'`.
    pub fn pre_schwarzian(&self) -> Complex64 {
        self.f2 / self.f1
    }

    /// `f'''/f' - (3/2)(f''/f')^2`.
    pub fn schwarzian(&self) -> Complex64 {
        let p = self.f2 / self.f1;
        self.f3 / self.f1 - p * p * 1.5
    }
}

impl Add for Jet3 {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self::new(self.f + r.f, self.f1 + r.f1, self.f2 + r.f2, self.f3 + r.f3)
    }
}

impl Sub for Jet3 {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self::new(self.f - r.f, self.f1 - r.f1, self.f2 - r.f2, self.f3 - r.f3)
    }
}

impl Neg for Jet3 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for Jet3 {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Self::new(
            self.f * r.f,
            self.f1 * r.f + self.f * r.f1,
            self.f2 * r.f + self.f1 * r.f1 * 2.0 + self.f * r.f2,
            self.f3 * r.f + (self.f2 * r.f1 + self.f1 * r.f2) * 3.0 + self.f * r.f3,
        )
    }
}

impl Div for Jet3 {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, r: Self) -> Self {
        self * r.recip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    // Jet of z^n at z, computed directly.
    fn power(z: Complex64, n: i32) -> Jet3 {
        let nf = n as f64;
        Jet3::new(
            z.powi(n),
            z.powi(n - 1) * nf,
            z.powi(n - 2) * nf * (nf - 1.0),
            z.powi(n - 3) * nf * (nf - 1.0) * (nf - 2.0),
        )
    }

    fn close(a: Jet3, b: Jet3) -> bool {
        [a.f - b.f, a.f1 - b.f1, a.f2 - b.f2, a.f3 - b.f3]
            .iter()
            .zip([b.f, b.f1, b.f2, b.f3])
            .all(|(d, w)| d.norm() < 1e-12 * w.norm().max(1.0))
    }

    #[test]
    fn product_rule_on_monomials() {
        let z = c(0.3, -0.2);
        assert!(close(power(z, 2) * power(z, 3), power(z, 5)));
        let x = Jet3::variable(z);
        assert!(close(x * x * x, power(z, 3)));
    }

    #[test]
    fn reciprocal_of_monomial() {
        let z = c(0.4, 0.1);
        assert!(close(power(z, 2).recip(), power(z, -2)));
        assert!(close(power(z, 5) / power(z, 2), power(z, 3)));
    }

    #[test]
    fn exp_of_linear_map() {
        let z = c(0.1, 0.2);
        let k = c(0.5, -1.0);
        let e = Jet3::variable(z).scale(k).exp();
        let v = (k * z).exp();
        assert!(close(e, Jet3::new(v, k * v, k * k * v, k * k * k * v)));
    }

    #[test]
    fn schwarzian_of_cube_map() {
        // S(z^3) = (1 - 9) / (2 z^2).
        let z = c(0.5, 0.25);
        let s = power(z, 3).schwarzian();
        assert!((s - c(-4.0, 0.0) / (z * z)).norm() < 1e-12);
    }
}
