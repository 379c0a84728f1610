//! Schwarzian derivatives and hyperbolic sup-norms of analytic functions on
//! the unit disk, with constructions of the classes
//!
//! * `G(beta) = { f : Re(1 + z f''/f') < 1 + beta/2 }`, `beta > 0`, and
//! * `F(alpha) = { f : Re(1 + z f''/f') > alpha }`, `-1/2 <= alpha <= 0`,
//!
//! their extremal functions, and numerical certification of the sharp
//! pointwise and norm bounds, the Dieudonne variability region and the
//! two-point distortion inequalities.
//!
//! ```
//! use num_complex::Complex64;
//! use schwarzian_lab::{extremal_g, schwarzian};
//!
//! let f0 = extremal_g(1.0).unwrap();
//! let s = schwarzian(&f0, Complex64::new(0.0, 0.0)).unwrap();
//! assert!((s.re + 1.5).abs() < 1e-14);
//! ```

pub mod analytic;
pub mod battery;
pub mod certify;
pub mod classes;
pub mod disk;
pub mod distortion;
pub mod error;
pub mod jet;
pub mod norm;
pub mod series;

pub use analytic::{
    jet, pre_schwarzian, schwarzian, schwarzian_fd_oracle, AnalyticFunction, ExtremalKind, Mobius,
};
pub use classes::{
    b_param, build_from_schwarz, extremal_f, extremal_g, extremal_omega, halfplane_target,
    membership_check, qc_constant, ClassSpec, MembershipReport, SchwarzFunction, SchwarzRepr,
    SubordinationFn,
};
pub use disk::{
    automorphism, blaschke_eval, dieudonne_check, hyperbolic_distance, pseudo_hyperbolic,
    DieudonneReport, GridConfig,
};
pub use distortion::{
    delta_functional, delta_param, distortion_at, tb_extremal, tpd_lower, tpd_upper, verify_tpd,
    DistortionResult, TpdReport,
};
pub use error::{Error, Result};
pub use jet::Jet3;
pub use norm::{
    aux_maximizer_check, estimate_norm, pointwise_bound, pointwise_bound_f, pointwise_bound_g,
    weighted_profile, AuxReport, NormReport,
};
pub use num_complex::Complex64;
pub use series::{TaylorSeries, DEFAULT_ORDER};
