//! Hyperbolic geometry of the unit disk, Blaschke products and the
//! Dieudonne variability region for `omega'(z0)`.

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::classes::{SchwarzFunction, SchwarzRepr};
use crate::error::{bad, check_in_disk, Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Polar sampling grid: every radius is paired with `angles` equally
/// spaced angles starting at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    radii: Vec<f64>,
    angles: usize,
    r_max: f64,
}

impl GridConfig {
    pub fn new(radii: Vec<f64>, angles: usize) -> Result<Self> {
        if radii.is_empty() || angles == 0 {
            return Err(bad("grid needs at least one radius and one angle"));
        }
        if radii.iter().any(|r| !(0.0..1.0).contains(r)) {
            return Err(bad("grid radii must lie in [0, 1)"));
        }
        if radii.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad("grid radii must be sorted ascending"));
        }
        let r_max = *radii.last().expect("non-empty");
        Ok(Self {
            radii,
            angles,
            r_max,
        })
    }

    /// `n_radii` radii `r_max sin(pi i / (2 (n-1)))`, dense near `r_max`.
    pub fn clustered(angles: usize, n_radii: usize, r_max: f64) -> Result<Self> {
        if n_radii < 2 {
            return Err(bad("clustered grid needs at least two radii"));
        }
        let radii = (0..n_radii)
            .map(|i| r_max * (FRAC_PI_2 * i as f64 / (n_radii - 1) as f64).sin())
            .collect();
        Self::new(radii, angles)
    }

    /// 96 angles x 48 radii up to 0.995.
    pub fn norm_default() -> Self {
        Self::clustered(96, 48, 0.995).expect("valid")
    }

    /// 60 angles x 60 radii up to 0.99.
    pub fn membership_default() -> Self {
        Self::clustered(60, 60, 0.99).expect("valid")
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.angles as f64
    }

    pub fn len(&self) -> usize {
        self.radii.len() * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(r, theta)` pairs in radius-major order.
    pub fn polar_points(&self) -> Vec<(f64, f64)> {
        self.radii
            .iter()
            .flat_map(|&r| (0..self.angles).map(move |j| (r, TAU * j as f64 / self.angles as f64)))
            .collect()
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.polar_points()
            .into_iter()
            .map(|(r, t)| Complex64::from_polar(r, t))
            .collect()
    }
}

/// `rho(z1, z2) = |(z1 - z2)/(1 - conj(z1) z2)|`.
pub fn pseudo_hyperbolic(z1: Complex64, z2: Complex64) -> Result<f64> {
    check_in_disk(z1)?;
    check_in_disk(z2)?;
    Ok(((z1 - z2) / (ONE - z1.conj() * z2))
        .norm()
        .min(1.0 - f64::EPSILON))
}

/// `lambda = (1/2) log((1 + rho)/(1 - rho)) = artanh(rho)`.
pub fn hyperbolic_distance(z1: Complex64, z2: Complex64) -> Result<f64> {
    Ok(pseudo_hyperbolic(z1, z2)?.atanh())
}

/// Disk automorphism `(z - a)/(1 - conj(a) z)` sending `a` to 0.
pub fn automorphism(a: Complex64, z: Complex64) -> Complex64 {
    (z - a) / (ONE - a.conj() * z)
}

/// `e^{i theta} prod (z - z_j)/(1 - conj(z_j) z)`.
pub fn blaschke_eval(zeros: &[Complex64], theta: f64, z: Complex64) -> Result<Complex64> {
    check_in_disk(z)?;
    zeros
        .iter()
        .try_fold(Complex64::from_polar(1.0, theta), |acc, &a| {
            check_in_disk(a)?;
            Ok(acc * automorphism(a, z))
        })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DieudonneReport {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

/// `|omega'(z0) - omega(z0)/z0| <= (|z0|^2 - |omega(z0)|^2) / (|z0| (1 - |z0|^2))`,
/// with equality exactly for degree-2 Blaschke products fixing 0.
pub fn dieudonne_check(omega: &SchwarzFunction, z0: Complex64) -> Result<DieudonneReport> {
    if z0.norm() == 0.0 {
        return Err(Error::CenterPoint);
    }
    check_in_disk(z0)?;
    let j = omega.jet(z0);
    let w = match omega.repr() {
        SchwarzRepr::Blaschke { zeros, rotation } => blaschke_eval(zeros, *rotation, z0)?,
        SchwarzRepr::Series(_) => j.f,
    };
    let r = z0.norm();
    let lhs = (j.f1 - w / z0).norm();
    let rhs = (r * r - w.norm_sqr()) / (r * (1.0 - r * r));
    Ok(DieudonneReport {
        lhs,
        rhs,
        slack: rhs - lhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TaylorSeries;
    use proptest::prelude::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rho_examples() {
        assert!((pseudo_hyperbolic(r(0.0), r(0.3)).unwrap() - 0.3).abs() < 1e-15);
        let z = Complex64::new(0.2, -0.7);
        assert_eq!(pseudo_hyperbolic(z, z).unwrap(), 0.0);
        assert!((pseudo_hyperbolic(r(0.5), r(-0.5)).unwrap() - 0.8).abs() < 1e-15);
        assert!(pseudo_hyperbolic(r(1.0), r(0.0)).is_err());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(hyperbolic_distance(r(0.0), r(0.0)).unwrap(), 0.0);
        assert!((hyperbolic_distance(r(0.0), r(0.5)).unwrap() - 0.5 * 3f64.ln()).abs() < 1e-15);
        let a = Complex64::new(0.3, 0.4);
        let (z1, z2) = (Complex64::new(-0.2, 0.5), Complex64::new(0.6, -0.1));
        let d = hyperbolic_distance(z1, z2).unwrap();
        let ds = hyperbolic_distance(automorphism(a, z1), automorphism(a, z2)).unwrap();
        assert!((d - ds).abs() < 1e-12);
    }

    #[test]
    fn blaschke_examples() {
        let z = Complex64::new(0.3, 0.1);
        assert_eq!(blaschke_eval(&[r(0.0)], 0.0, z).unwrap(), z);
        assert!((blaschke_eval(&[r(0.0), r(0.0)], 0.0, r(0.5)).unwrap() - r(0.25)).norm() < 1e-15);
        assert!(
            blaschke_eval(&[r(0.0), r(0.5)], 0.0, r(0.5))
                .unwrap()
                .norm()
                < 1e-15
        );
        assert!(blaschke_eval(&[r(1.5)], 0.0, r(0.5)).is_err());
    }

    #[test]
    fn dieudonne_examples() {
        let id = SchwarzFunction::identity();
        let rep = dieudonne_check(&id, r(0.4)).unwrap();
        assert!(rep.lhs.abs() < 1e-15 && rep.rhs.abs() < 1e-15);

        let sq = SchwarzFunction::monomial(2);
        let rep = dieudonne_check(&sq, r(0.5)).unwrap();
        assert!((rep.lhs - 0.5).abs() < 1e-15);
        assert!((rep.rhs - 0.5).abs() < 1e-15);

        // z^3 at 1/2: lhs = |3/4 - 1/4| = 1/2, rhs = (1/4 - 1/64)/(3/8) = 5/8.
        let cube = SchwarzFunction::monomial(3);
        let rep = dieudonne_check(&cube, r(0.5)).unwrap();
        assert!((rep.slack - 0.125).abs() < 1e-14);

        assert_eq!(dieudonne_check(&id, r(0.0)), Err(Error::CenterPoint));
    }

    #[test]
    fn dieudonne_on_series_variant() {
        let s = TaylorSeries::from_real(&[0.0, 0.4, 0.3, 0.2]).unwrap();
        let w = SchwarzFunction::series(s).unwrap();
        let rep = dieudonne_check(&w, Complex64::new(0.3, 0.6)).unwrap();
        assert!(rep.slack > 0.0);
    }

    fn disk_point(max: f64) -> impl Strategy<Value = Complex64> {
        (0.0f64..max, 0.0f64..TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
    }

    proptest! {
        #[test]
        fn distance_symmetry_and_triangle(a in disk_point(0.99), b in disk_point(0.99), c in disk_point(0.99)) {
            let ab = hyperbolic_distance(a, b).unwrap();
            prop_assert!((ab - hyperbolic_distance(b, a).unwrap()).abs() < 1e-12);
            let ac = hyperbolic_distance(a, c).unwrap();
            let cb = hyperbolic_distance(c, b).unwrap();
            prop_assert!(ab <= ac + cb + 1e-12);
        }

        #[test]
        fn blaschke_maps_into_disk(zeros in prop::collection::vec(disk_point(0.95), 1..5), t in 0.0f64..TAU, z in disk_point(0.999)) {
            prop_assert!(blaschke_eval(&zeros, t, z).unwrap().norm() < 1.0);
        }

        #[test]
        fn degree_two_blaschke_saturates(a in disk_point(0.95), t in 0.0f64..TAU, z0 in disk_point(0.95)) {
            prop_assume!(z0.norm() > 1e-3);
            let w = SchwarzFunction::blaschke(vec![Complex64::new(0.0, 0.0), a], t).unwrap();
            let rep = dieudonne_check(&w, z0).unwrap();
            prop_assert!(rep.slack.abs() < 1e-9, "slack {}", rep.slack);
        }
    }
}
