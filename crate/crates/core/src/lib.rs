//! Exact Bernoulli, Euler and higher-order Nörlund polynomials, mechanical
//! identity verification, and floating-point cross-checks of the underlying
//! moment representations.
//!
//! The crate is organised in three layers:
//!
//! * **Exact arithmetic** — [`rational`], [`poly`], [`combin`]: reduced
//!   big-rational scalars, dense exact polynomials and combinatorial
//!   coefficients.
//! * **Polynomial families** — [`classical`] (Bernoulli/Euler via their
//!   averaging characterisations), [`norlund`] (higher-order families with
//!   rational parameter vectors) and [`oracle`] (an independent recurrence
//!   route used only for cross-checking).
//! * **Verification** — [`identities`] (a catalogue of polynomial identities
//!   checked by exact residual comparison over finite grids, with a
//!   correction search for identities that fail as stated) and [`numeric`]
//!   (Gauss–Legendre quadrature and Monte Carlo evaluation of the moment
//!   representation, plus p-adic valuation tracking of truncated Volkenborn
//!   sums).

pub mod classical;
pub mod combin;
pub mod error;
pub mod identities;
pub mod norlund;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use norlund::{NorlundKind, NorlundTable, ParamVec};
pub use poly::{ComplexVal, Poly};
pub use rational::Rational;
