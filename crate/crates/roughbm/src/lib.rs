//! Numerical laboratory for rough-path limit behaviour of stationary
//! Gaussian functionals.
//!
//! The crate builds the discrete objects behind Breuer-Major type central
//! limit theorems at the rough-path level and checks their asymptotics at
//! desk scale:
//!
//! * [`hermite`] — Hermite polynomials and coefficient-level chaos calculus;
//! * [`gaussian`] — stationary Gaussian sequences as moving-average filter
//!   banks, including the long-memory FARIMA(0,r,0) family;
//! * [`combinatorics`] — matchings, leveled diagrams, the diagram formula
//!   for Gaussian Hermite moments, and decay statistics;
//! * [`roughpath`] — first/second-order processes, diagonal corrections,
//!   piecewise-linear signatures, shuffle and Chen algebra, r-variation;
//! * [`limits`] — limit characteristics (Δ, 𝔻, Γ, Σ, 𝔸), expected
//!   signatures, and the limiting Brownian rough path;
//! * [`verify`] — deterministic and Monte Carlo convergence diagnostics;
//! * [`homogenize`] — the corrected Euler-scheme invariance principle;
//! * [`cli`] — configuration parsing and report emission for the binary.

pub mod error;
pub mod hermite;
pub mod matrix;
pub mod rng;

pub use error::{Error, Result};
