//! Central elements indexed by shift multisets.
//!
//! For an integer tuple ε, the element
//!
//! ```text
//! c_ε = Σ_i Σ_σ ξ_{i, i + n·(ε∘σ)}
//! ```
//!
//! — the outer sum over weakly increasing tops, the inner over double
//! cosets of the stabilizer pair (Σ_ε, Σ_i) in the full symmetric group —
//! is central, depends only on the multiset of ε, and the assignment
//! c ↦ c·ξ_{u,u} (then reading off the Laurent normal form in the all-ones
//! corner) is an isomorphism onto the Laurent polynomial ring on sampled
//! inputs.  Coefficients are all exactly 1: distinct double cosets yield
//! distinct canonical symbols.

use crate::laurent::{corner_identity, laurent_normal_form, LaurentPoly};
use schur_core::{
    canonicalize_pair, multiply, weakly_increasing_tuples, AlgebraContext, AlgebraElement,
    CoeffField, SchurError,
};
use weyl_core::{double_cosets, stabilizer, tuple, IntTuple, YoungSubgroup};

/// The central element c_ε.  Invariant under permutations of `eps`.
pub fn center_element<F: CoeffField>(
    eps: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    if eps.len() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "shift length {} in a context with r = {}",
            eps.len(),
            ctx.r()
        )));
    }
    let full = YoungSubgroup::full(ctx.r());
    let stab_eps = stabilizer(&[eps])?;
    let values: Vec<i64> = (1..=ctx.n()).collect();
    let mut out = AlgebraElement::zero(ctx);
    for top in weakly_increasing_tuples(&values, ctx.r()) {
        let stab_top = stabilizer(&[&top])?;
        for sigma in double_cosets(&stab_eps, &full, &stab_top)? {
            let moved = tuple::permute(eps, &sigma)?;
            let bottom: IntTuple = top
                .iter()
                .zip(&moved)
                .map(|(&a, &e)| a + ctx.n() * e)
                .collect();
            let (sym, _) = canonicalize_pair(&top, &bottom, ctx.n())?;
            out.add_assign_term(sym, F::one(ctx.field()))?;
        }
    }
    Ok(out)
}

/// The Laurent normal form of a central element: multiply by the all-ones
/// corner idempotent and read the result in the corner.  Requires diagonal
/// support (every term of shape ξ_{i,i+nε}).
pub fn center_normal_form<F: CoeffField>(
    c: &AlgebraElement<F>,
) -> Result<LaurentPoly<F>, SchurError> {
    let ctx = c.ctx();
    for (sym, _) in c.terms() {
        if sym.diagonal_shift(ctx.n()).is_none() {
            return Err(SchurError::Domain(format!(
                "term {sym} is not diagonal; the corner projection is only \
                 faithful on diagonally supported elements"
            )));
        }
    }
    let projected = multiply(c, &corner_identity(ctx))?;
    laurent_normal_form(&projected)
}
