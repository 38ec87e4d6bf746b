//! Exact intersection numbers for Quot schemes of length-`l` quotients of a
//! locally free sheaf on a smooth projective surface.
//!
//! The crate is organised bottom-up:
//!
//! * [`chow`] models the numerical Chow ring of a surface (divisor lattice,
//!   intersection pairing, degree-2 classes stored by their integral).
//! * [`bundle`] does Chern/Segre calculus for bundles given by `(r, c₁, ∫c₂)`.
//! * [`projbundle`] handles classes on `P(E)` as polynomials in `ζ = c₁(O(1))`
//!   and integrates them through the pushforward rule
//!   `p_*ζ^l = (−1)^{l+1−r} s_{l+1−r}(E)`.
//! * [`segre`] evaluates the Segre integrals over `Quot¹`, `Quot²` and `X^[2]`.
//! * [`series`] expands the Euler-characteristic generating series.
//! * [`adhm`] is an exact laboratory for ADHM data and the commuting variety
//!   of `sl₂`.
//! * [`catalog`] loads surface/bundle catalogs and [`crosscheck`] runs the
//!   full cross-validation sweep over one.
//!
//! All arithmetic is exact over `BigRational`.

pub mod adhm;
pub mod bundle;
pub mod catalog;
pub mod chow;
pub mod crosscheck;
mod error;
pub mod linalg;
pub mod projbundle;
pub mod rational;
pub mod segre;
pub mod series;

pub use bundle::BundleData;
pub use catalog::Catalog;
pub use chow::{GradedClass, SurfaceModel};
pub use error::{Error, Result};
pub use projbundle::{ProjectiveBundle, ZetaClass};
pub use rational::Rational;
