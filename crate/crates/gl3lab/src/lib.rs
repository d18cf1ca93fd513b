//! gl3lab: verified special-function numerics for rank-3 spectral data.
//!
//! The crate computes every desk-scale object in its domain — Langlands
//! parameter bookkeeping, analytic conductors, degree-3 Whittaker integrals
//! and their closed gamma-factor forms, Kloosterman and Ramanujan sums,
//! spectral (Kuznetsov-type) Bessel transforms, dual-sum (Voronoi-type)
//! transforms, and large-sieve inequalities — and cross-checks each identity
//! or inequality numerically. The `gl3lab` binary drives the checks as
//! named suites and emits human or machine-readable reports.

pub mod error;
pub mod special;

pub use error::{Error, Result};

pub(crate) type C64 = num_complex::Complex<f64>;
