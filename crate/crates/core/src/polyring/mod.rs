//! Polynomials over the rationals, Gröbner bases, graded quotient rings and
//! their infinitesimal thickenings.

mod groebner;
mod poly;
mod ring;

pub use groebner::{buchberger, buchberger_with_limits, normal_form, GroebnerBasis, Limits, MonomialOrder, OrderKind};
pub(crate) use groebner::{module_basis, module_syzygies};
pub use poly::{Exponent, Poly, PolyMatrix, PolyRing};
pub use ring::{
    is_regular_sequence, is_square_zero, monomials_of_degree, square_zero_filtration, tower_ring, RingPresentation,
};
