//! Combinatorics of the extended affine symmetric group.
//!
//! The group elements are pairs $(\sigma, \varepsilon)$ of a permutation of
//! $\{1,\dots,r\}$ and an integer shift vector in $\mathbb{Z}^r$; they act on
//! integer $r$-tuples on the right by place permutation plus an $n$-multiple
//! of the shift.  This crate provides that action together with the subgroup
//! machinery the product formulas need: stabilizers of tuples (which are
//! always Young subgroups), their orders and indices as exact big integers,
//! and enumeration of double cosets $H\delta K$ with canonical
//! representatives.
//!
//! Everything here is a pure function over immutable values; the only global
//! is a read-once enumeration bound (see [`enumeration_bound`]).

mod affine;
mod error;
mod perm;
pub mod tuple;
mod young;

pub use affine::{act, ExtendedWeylElement};
pub use error::WeylError;
pub use perm::Permutation;
pub use tuple::IntTuple;
pub use young::{
    double_cosets, enumerate_elements, stabilizer, subgroup_index, subgroup_order, YoungSubgroup,
};

use std::sync::OnceLock;

/// Upper bound on the order of any subgroup we are willing to enumerate
/// element-by-element.
///
/// Defaults to $8! = 40320$ and can be overridden with the
/// `SCHUR_ENUM_BOUND` environment variable.  The value is read once and then
/// fixed for the lifetime of the process, so concurrent callers always agree.
pub fn enumeration_bound() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("SCHUR_ENUM_BOUND")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(40320)
    })
}
