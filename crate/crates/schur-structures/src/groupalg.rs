//! The group-algebra picture at `n ≥ r`.
//!
//! With `u = (1,…,r)` (all values distinct), the symbols ξ_{u, u·w} for
//! extended Weyl elements `w` multiply by the contravariant group law
//!
//! ```text
//! ξ_{u,u·w} · ξ_{u,u·w′} = ξ_{u, u·(w′ then w)},
//! ```
//!
//! identifying the corner with the group algebra.  The map is injective:
//! distinct elements move `u` to distinct tuples because the entries of `u`
//! are pairwise distinct modulo `n`.

use schur_core::{canonicalize_pair, AlgebraContext, BasisSymbol, CoeffField, SchurError};
use weyl_core::{act, ExtendedWeylElement, IntTuple};

/// The basis symbol ξ_{u, u·w} with `u = (1,…,r)`.  Requires `n ≥ r`.
pub fn weyl_to_basis<F: CoeffField>(
    w: &ExtendedWeylElement,
    ctx: &AlgebraContext<F>,
) -> Result<BasisSymbol, SchurError> {
    if ctx.n() < ctx.r() as i64 {
        return Err(SchurError::Domain(format!(
            "the group-algebra corner needs n ≥ r, got n = {}, r = {}",
            ctx.n(),
            ctx.r()
        )));
    }
    if w.rank() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "group element of rank {} in a context with r = {}",
            w.rank(),
            ctx.r()
        )));
    }
    let u: IntTuple = (1..=ctx.r() as i64).collect();
    let moved = act(&u, w, ctx.n())?;
    Ok(canonicalize_pair(&u, &moved, ctx.n())?.0)
}
