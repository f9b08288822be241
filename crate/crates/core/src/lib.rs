//! Extreme value statistics for the Rényi map `f(x) = βx mod 1` with integer `β ≥ 2`.
//!
//! The process `X_{i+1} = f(X_i)`, `X_0 ~ U(0,1)`, has partial maxima whose
//! distribution can be computed by several independent routes:
//!
//! * exact Lebesgue measure algebra on the threshold exceedance sets
//!   (`measure`),
//! * Haiman's recursion and a rescaled k-generalized Fibonacci sequence
//!   (`recurrence`),
//! * a Binet closed form built from the roots of the characteristic
//!   polynomial `x^k − (β−1)(x^{k−1} + … + 1)` (`spectral`, `evt`),
//! * Monte Carlo simulation of exact digit orbits (`orbit_sim`).
//!
//! The routes cross-check each other; `acceptance` bundles the full
//! verification suite (the extreme value law with extremal index
//! `θ = (β−1)/β`, the cluster-size law, two-sided Newton bounds for the
//! dominant root, and the failure of the D′ anti-clustering condition).

pub mod acceptance;
pub mod bigfloat;
pub mod error;
pub mod evt;
pub mod measure;
pub mod orbit_sim;
pub mod params;
pub mod rational;
pub mod recurrence;
pub mod spectral;

pub use error::{Error, Result};
pub use params::{Budget, MapParams};
pub use rational::Rational;
