//! Exact local invariants of graded complete-intersection singularities.
//!
//! The crate computes, over the rationals:
//!
//! * the tangent Lie algebra `g = g¹ ⊕ g²` of `f = 0` at a rational point,
//!   with its Hessian bracket computed two independent ways ([`tangentlie`]);
//! * the Chevalley–Eilenberg cochain complex of `g` and its cohomology
//!   ([`chevalley`]);
//! * minimal graded free resolutions over `Q[x]/(f)`, `Ext(M, k)` with the
//!   degree-2 cohomology operators, finite-generation verdicts, and the
//!   minimization of semifree DG modules ([`ciext`]).

pub mod chevalley;
pub mod ciext;
pub mod error;
pub mod exactq;
pub mod polyring;
pub mod sample;
pub mod tangentlie;

pub use error::{Error, ErrorKind, Result};
pub use exactq::{RatMatrix, Rational};
pub use polyring::{Limits, Poly, PolyRing, RingPresentation};
