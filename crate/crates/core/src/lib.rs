//! Numerical toolkit for the sharp Gehring-Hayman bound on starlike functions.
//!
//! A starlike function of order `alpha` maps the unit disk onto a domain that
//! is starlike with respect to the origin, with `Re(z f'/f) > alpha`. For such
//! maps the image of the radial segment from 0 to `z` has length at most
//! `beta(alpha) * |f(z)|`, where
//!
//! ```text
//! beta(alpha) = Gamma(1/2) Gamma(2 - alpha) / Gamma(3/2 - alpha)
//! ```
//!
//! is sharp. This crate evaluates the maps, the arc lengths, the constant, and
//! the chain of one-dimensional integral inequalities that proves the bound,
//! so every link can be checked numerically on grids.
//!
//! Modules:
//! - [`specfun`]: log-gamma, the beta function, and the sharp constant.
//! - [`quadrature`]: adaptive Gauss-Kronrod integration with endpoint
//!   singularity handling and a half-line transform.
//! - [`starlike`]: atomic Herglotz measures, the induced conformal maps,
//!   radial arc lengths, and the length/modulus ratio.
//! - [`hall`]: the proof-chain integrals, lemma-level margin checks, grid
//!   verifiers, and sharpness probes.

pub mod hall;
pub mod quadrature;
pub mod specfun;
pub mod starlike;

pub use hall::{ChordPair, HallError, Lemma4Helpers, VerificationReport};
pub use quadrature::{QuadConfig, QuadError, QuadResult, SingularitySpec};
pub use specfun::{OrderAlpha, SpecFunError};
pub use starlike::{Atom, HerglotzMeasure, MeasureLoad, StarlikeError, StarlikeMap};
