//! Exact construction of extremal quasimodular forms on SL2(Z), their
//! hypergeometric and Atkin-polynomial representations, and the finite
//! prime-power congruence checks that establish which of them have integral
//! Fourier coefficients.
//!
//! Everything is exact: coefficients live in [`Rational`] or in
//! [`Residue`] (integers modulo a prime power). Series and polynomials are
//! generic over the [`Coefficient`] ring; the aliases below name the
//! instantiations used throughout.

pub mod atkin;
pub mod congruence;
pub mod error;
pub mod extremal;
pub mod hypergeom;
pub mod linalg;
pub mod numeric;
pub mod poly;
pub mod qform;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use numeric::{PrimePowerModulus, Rational, Residue};
pub use poly::Poly;
pub use ring::{Coefficient, Q};
pub use series::TruncSeries;

/// Truncated series with rational coefficients.
pub type QSeries = TruncSeries<Rational>;
/// Truncated series modulo a prime power.
pub type ModSeries = TruncSeries<Residue>;
/// Polynomial with rational coefficients.
pub type RationalPoly = Poly<Rational>;
/// Polynomial modulo a prime power.
pub type ModPoly = Poly<Residue>;
