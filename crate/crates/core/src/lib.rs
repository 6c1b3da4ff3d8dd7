//! Symbolic computation with subtle Stiefel-Whitney classes.
//!
//! The crate works in the mod-2 motivic cohomology of classifying spaces over
//! an algebraically closed field, where the coefficient ring is `F2[t]`.
//! It provides bigraded polynomial arithmetic ([`poly`]), a Buchberger
//! engine with Hilbert series and regular-sequence certification
//! ([`grobner`]), the Steenrod action given by the Wu and Cartan formulas
//! ([`steenrod`]), the bilinear-form reduction over F2 ([`formsf2`]), and
//! presentations of `H(BO_n)`, `H(BSO_n)`, `H(BSpin_n)` and `H(BG_2)`
//! ([`spaces`]).

pub mod formsf2;
pub mod grobner;
pub mod poly;
pub mod spaces;
pub mod steenrod;

pub use grobner::{Budget, GroebnerBasis, GroebnerError, HilbertSeries};
pub use poly::{parse_poly, Bidegree, Homogeneity, Poly, PolyError, Ring, RingMap, RingRef};
