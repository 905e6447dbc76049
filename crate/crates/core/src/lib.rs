//! Exact computations for Kauffman bracket skein modules of the manifolds
//! `M(alpha, beta, gamma)` obtained by integral surgery on a `(2, 2b)` torus
//! link, together with the `SL(2, C)` character table of the binary
//! icosahedral group over `Q(zeta_5)`.

pub mod charvar;
pub mod cli;
pub mod cyclo;
pub mod gens;
pub mod laurent;
pub mod monomial;
pub mod relations;
pub mod twist;

pub use laurent::LaurentPoly;
pub use monomial::{cmp_monomials, cmp_rational_oracle, Monomial, MonomialOrder, ParamError, SurgeryParams};
