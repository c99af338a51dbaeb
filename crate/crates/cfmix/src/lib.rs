//! Density estimation from empirical characteristic functions.
//!
//! The estimator is a positive Gaussian-Laplace mixture whose characteristic
//! function (CF) is available in closed form, so the model can be trained
//! directly in Fourier space against an empirical CF built from samples.
//! The crate covers three data settings:
//!
//! - direct i.i.d. sampling: build an empirical CF from samples and fit;
//! - pseudo-sampling: build conditionally i.i.d. fixed-horizon pseudo-samples
//!   from a dependent series via the stationary bootstrap, then fit against
//!   the empirical pseudo-CF;
//! - multivariate targets (d = 1, 2, 3) on tensor-product frequency grids.
//!
//! Modules follow the pipeline: [`grid`] builds frequency partitions,
//! [`ecf`] turns samples into empirical CF values at the grid nodes,
//! [`glmix`] is the mixture model (density, CF, analytic gradients),
//! [`train`] runs the two-stage AMSGrad/Adam loop, [`metrics`] evaluates
//! fits and theory diagnostics, [`resample`] generates pseudo-samples, and
//! [`targets`] provides closed-form benchmark laws plus an EM baseline.

pub mod ecf;
pub mod em;
pub mod error;
pub mod glmix;
pub mod grid;
pub mod metrics;
pub mod quad;
pub mod resample;
pub mod rng;
pub mod targets;
pub mod train;

pub use error::{Error, Result};
