//! Seeded random test batteries: Schwarz functions, class members, disk
//! points and point pairs.
//!
//! All generators draw from a `ChaCha8Rng`, so a seed reproduces a battery
//! bit for bit on every platform.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::AnalyticFunction;
use crate::classes::{build_from_schwarz, ClassSpec, SchwarzFunction};
use crate::disk::pseudo_hyperbolic;
use crate::series::{TaylorSeries, DEFAULT_ORDER};

/// Largest modulus of a random Blaschke zero.
pub const ZERO_RADIUS: f64 = 0.9;
/// Series Schwarz functions are `z p(z)` with `sum |p_k| = SERIES_SCALE`.
pub const SERIES_SCALE: f64 = 0.9;
/// Pairs are drawn with `r <= PAIR_RADIUS` ...
pub const PAIR_RADIUS: f64 = 0.95;
/// ... and rejected when their pseudo-hyperbolic distance exceeds this.
pub const PAIR_MAX_RHO: f64 = 0.999;

pub struct Battery {
    rng: ChaCha8Rng,
}

impl Battery {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform in area on `|z| <= r_max`.
    pub fn disk_point(&mut self, r_max: f64) -> Complex64 {
        let r = r_max * self.rng.gen::<f64>().sqrt();
        Complex64::from_polar(r, self.rng.gen::<f64>() * TAU)
    }

    /// Uniform in polar coordinates, `r` in `[0, r_max]`.
    pub fn polar_point(&mut self, r_max: f64) -> Complex64 {
        let r = r_max * self.rng.gen::<f64>();
        Complex64::from_polar(r, self.rng.gen::<f64>() * TAU)
    }

    pub fn nonzero_point(&mut self, r_min: f64, r_max: f64) -> Complex64 {
        let r = r_min + (r_max - r_min) * self.rng.gen::<f64>();
        Complex64::from_polar(r, self.rng.gen::<f64>() * TAU)
    }

    /// Blaschke product of the given degree with one zero at 0.
    pub fn blaschke(&mut self, degree: usize) -> SchwarzFunction {
        let mut zeros = vec![Complex64::new(0.0, 0.0)];
        for _ in 1..degree.max(1) {
            zeros.push(self.disk_point(ZERO_RADIUS));
        }
        let rotation = self.rng.gen::<f64>() * TAU;
        SchwarzFunction::blaschke(zeros, rotation).expect("zeros inside the disk")
    }

    /// `z p(z)` with `deg p <= 6` and `sum |p_k| = 0.9`, so `|omega| <= 0.9 |z|`.
    pub fn series_schwarz(&mut self) -> SchwarzFunction {
        let deg = self.rng.gen_range(0..=6usize);
        let mut p: Vec<Complex64> = (0..=deg)
            .map(|_| Complex64::new(self.rng.gen::<f64>() - 0.5, self.rng.gen::<f64>() - 0.5))
            .collect();
        let total: f64 = p.iter().map(|c| c.norm()).sum();
        if total > 0.0 {
            for c in &mut p {
                *c *= SERIES_SCALE / total;
            }
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0)];
        coeffs.extend(p);
        SchwarzFunction::series(TaylorSeries::new(coeffs).expect("finite"))
            .expect("bounded by construction")
    }

    /// Blaschke products of degree 1..=4 (70%) or series variants (30%).
    pub fn schwarz(&mut self) -> SchwarzFunction {
        if self.rng.gen::<f64>() < 0.7 {
            let degree = self.rng.gen_range(1..=4usize);
            self.blaschke(degree)
        } else {
            self.series_schwarz()
        }
    }

    pub fn schwarz_functions(&mut self, n: usize) -> Vec<SchwarzFunction> {
        (0..n).map(|_| self.schwarz()).collect()
    }

    /// `n` members of the class, each with its Schwarz function.
    pub fn members(
        &mut self,
        spec: ClassSpec,
        n: usize,
    ) -> Vec<(SchwarzFunction, AnalyticFunction)> {
        self.schwarz_functions(n)
            .into_iter()
            .map(|w| {
                let f = build_from_schwarz(spec, w.clone(), DEFAULT_ORDER).expect("valid spec");
                (w, f)
            })
            .collect()
    }

    /// Distinct pairs, polar-uniform with `r <= 0.95`, `rho <= 0.999`.
    pub fn pairs(&mut self, n: usize) -> Vec<(Complex64, Complex64)> {
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let a = self.polar_point(PAIR_RADIUS);
            let b = self.polar_point(PAIR_RADIUS);
            if a == b {
                continue;
            }
            match pseudo_hyperbolic(a, b) {
                Ok(rho) if rho <= PAIR_MAX_RHO => out.push((a, b)),
                _ => {}
            }
        }
        out
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.rng.gen::<f64>()
    }
}
