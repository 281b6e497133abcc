//! Exact convolution algebra for compactly supported distributions on convex
//! cones, with a rigorously error-bounded Fourier-Laplace transform.
//!
//! The pieces fit together like this:
//!
//! - [`distribution`]: symbolic elements of the ring — finite sums of
//!   (derivatives of) shifted Dirac masses in any dimension, plus piecewise
//!   polynomial densities on the line. Addition, scaling, and convolution are
//!   exact over the rationals.
//! - [`transform`]: evaluates the transform `f(z) = <f, e^{-iz.}>` at complex
//!   points in ball arithmetic (midpoint + error radius), and derives
//!   polynomial-times-exponential growth certificates from the symbolic data.
//! - [`cone`]: convex cones (full space, orthant, light cone, polyhedral),
//!   their metric projections, supporting functions of the capped cone
//!   `C` intersected with the unit ball, and the admissibility checks for the
//!   weight `p(z) = log(1+||z||^2) + H(Im z)`.
//! - [`corona`]: compares `sum |f_i(z)|` against the lower bound
//!   `C (1+||z||^2)^{-N} e^{-M H(Im z)}` on samples, searches for rigorous
//!   violations, verifies Bezout identities `sum f_i * g_i = delta` exactly,
//!   and derives valid constants from given cofactors.
//! - [`liouville`]: exact big-integer engine around the constant
//!   `c = sum 10^{-k!}`, whose convergents defeat any proposed lower-bound
//!   constants at the test points `z = 2 pi q_K` even though the two
//!   generators involved share no common zero.
//! - [`json`]: bit-exact serialization of distributions and cones.
//!
//! Numerical layers never decide anything: every floating value carries an
//! explicit error radius ([`ball`]), and verdicts that matter (violations,
//! refutations, Bezout equality) are settled either in exact rational
//! arithmetic or with the radii folded in on the safe side.

pub mod ball;
pub mod cone;
pub mod corona;
pub mod distribution;
pub mod error;
pub mod exact;
pub mod json;
pub mod liouville;
pub mod poly;
pub mod transform;

pub use ball::{ComplexBall, ComplexPoint, RealBall};
pub use cone::Cone;
pub use corona::{CoronaParams, CoronaVerdict};
pub use distribution::{Distribution, MultiIndex, PiecewisePolyDensity};
pub use error::{Error, Result};
pub use transform::{fl_transform, pws_bound_for, verify_pws_on_samples, PwsBound};
