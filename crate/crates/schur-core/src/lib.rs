//! Exact arithmetic in the endomorphism algebras S(n, r) of permutation
//! modules over affine symmetric groups.
//!
//! The algebra for parameters `n ≥ 1` and `r ≥ 1` has a basis of symbols
//! `ξ_{i,j}` indexed by orbits of pairs of integer `r`-tuples — the top
//! tuple with entries in `1..=n`, the bottom unconstrained — under the
//! simultaneous action of the affine symmetric group.  This crate provides:
//!
//! * canonical orbit representatives ([`canonicalize_pair`], [`BasisSymbol`]);
//! * exact structure-constant multiplication ([`multiply`]) together with an
//!   independent counting oracle ([`multiply_oracle`]) used to cross-check it;
//! * linear algebra over a pluggable coefficient field ([`CoeffField`]),
//!   instantiated for arbitrary-precision rationals and odd or even prime
//!   fields ([`BigRational`], [`Fp`]);
//! * a plain-text grammar ([`parse_element`], [`format_element`]) and a
//!   deterministic JSON form ([`to_json_string`], [`from_json`]);
//! * a documented deterministic generator ([`Lcg`]) for reproducible
//!   randomized checks.
//!
//! Coefficients are accumulated as exact big integers before being reduced
//! into the field, so results in prime characteristic are exact, never
//! floating approximations.

mod context;
mod element;
mod error;
mod field;
mod json;
mod product;
mod rng;
mod symbol;
mod text;

pub use context::{AlgebraContext, DescribeField};
pub use element::{
    canonical_symbols_in_range, idempotent, one, weakly_increasing_tuples, weight,
    AlgebraElement,
};
pub use error::SchurError;
pub use field::{BigRational, CoeffField, FieldDescriptor, Fp, FpModulus};
pub use json::{from_json, peek_context, to_json, to_json_string};
pub use product::{multiply, multiply_oracle, multiply_symbols};
pub use rng::Lcg;
pub use symbol::{canonicalize_pair, least_positive_residue, orbit_equal, reduce_tuple, BasisSymbol};
pub use text::{format_element, format_symbol, parse_element};

/// Elements with arbitrary-precision rational coefficients.
pub type RatElement = AlgebraElement<BigRational>;
/// Context for [`RatElement`].
pub type RatContext = AlgebraContext<BigRational>;
/// Elements with coefficients in a prime field GF(p).
pub type FpElement = AlgebraElement<Fp>;
/// Context for [`FpElement`].
pub type FpContext = AlgebraContext<Fp>;
