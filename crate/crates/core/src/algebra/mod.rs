//! Commutative algebra engine: fields, polynomials, Gröbner bases, Hilbert series, integer lattices.

pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod lattice;
pub mod monomial;
pub mod ops;
pub mod poly;
pub mod text;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{groebner_basis, GbOptions, GroebnerBasis, Selection, DEFAULT_PAIR_BUDGET};
pub use hilbert::{hilbert_numerator, HilbertData};
pub use lattice::Lattice;
pub use monomial::{Monomial, MonomialOrder};
pub use ops::{eliminate, ideal_equal, intersect, saturate, saturate_all, saturate_var, SaturationMethod};
pub use poly::{Poly, Ring, Var};
pub use text::{format_poly, parse_poly};
