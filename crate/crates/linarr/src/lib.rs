//! Exact-arithmetic toolkit for arrangements of lines in the real projective
//! plane.
//!
//! Everything is computed over arbitrary-precision rationals: intersection
//! points, multiplicity profiles `t_k`, region counts `f`, incidence
//! inequalities of the form `sum_k alpha_k t_k >= alpha_0`, and two-multiplier
//! certificates `(c1, c2)` that turn such an inequality into a lower bound
//! `f >= c1*n*(n-1) + c2*alpha_0 + 1`. There is no floating point anywhere in
//! the computational core; decimals exist only as an optional display format
//! in the CLI.
//!
//! The crate is organized around two strategy registries:
//!
//! * [`inequalities`] — incidence inequalities, each behind the
//!   [`inequalities::Inequality`] trait and selectable by name
//!   (`melchior`, `csima_sawyer`, `hirzebruch`, `bojanowski`, `green_tao`),
//!   plus custom inequalities loaded from JSON.
//! * [`bounds`] — closed-form lower bounds on the region count, each behind
//!   the [`bounds::LowerBound`] trait, evaluated and compared side by side.
//!
//! [`certificates`] connects the two: it verifies multiplier pairs against an
//! inequality's constraint family, derives the resulting region bound, and
//! finds optimal pairs by exact 2-variable vertex enumeration.

pub mod bounds;
pub mod certificates;
mod error;
pub mod generators;
pub mod inequalities;
pub mod profile;
pub mod projective;
pub mod rational;

pub use error::{Error, Result};
pub use profile::MultiplicityProfile;
pub use projective::{Arrangement, Matrix3, ProjLine, ProjPoint};
pub use rational::Rational;

pub mod cli;
