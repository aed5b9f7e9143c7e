//! The commutative diagonal subalgebras B_i.
//!
//! For a weakly increasing top `i`, the symbols ξ_{i,i+nε} form a maximal
//! commutative subalgebra B_i that factors along the equal-value blocks of
//! `i`: the shift ε splits as Σ_s θ_s(ε) with θ_s(ε) supported on block `s`,
//! and ξ_{i,i+nε} is the product of the per-block factors ξ_{i,i+nθ_s(ε)}
//! in any order.  Maximality is witnessed concretely: a non-diagonal symbol
//! with diagonal residue multiset fails to commute with ξ_{i,i+nε⁰} for the
//! separating shift ε⁰ = t·(1,2,…,r) with t much larger than every entry
//! in play.

use schur_core::{
    canonicalize_pair, AlgebraContext, BasisSymbol, CoeffField, SchurError,
};
use weyl_core::IntTuple;

/// Builds the diagonal symbol ξ_{i, i + n·eps} (canonicalized).
pub fn diagonal_symbol<F: CoeffField>(
    i: &[i64],
    eps: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<BasisSymbol, SchurError> {
    if i.len() != ctx.r() || eps.len() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "tuple lengths {} and {} in a context with r = {}",
            i.len(),
            eps.len(),
            ctx.r()
        )));
    }
    for &v in i {
        if v < 1 || v > ctx.n() {
            return Err(SchurError::OutOfRange { value: v, n: ctx.n() });
        }
    }
    let bottom: IntTuple = i.iter().zip(eps).map(|(&a, &e)| a + ctx.n() * e).collect();
    Ok(canonicalize_pair(i, &bottom, ctx.n())?.0)
}

/// Splits ξ_{i,i+nε} into its per-block factors: one ξ_{i,i+nθ_s(ε)} for
/// each value `s` occupying a block of `i` with θ_s(ε) ≠ 0.  The factors
/// commute and their product is exactly ξ_{i,i+nε}; for ε = 0 the list is
/// empty (the empty product being the idempotent ξ_{i,i}).
pub fn b_subalgebra_factorize<F: CoeffField>(
    i: &[i64],
    eps: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<Vec<BasisSymbol>, SchurError> {
    if i.windows(2).any(|w| w[0] > w[1]) {
        return Err(SchurError::Domain(format!(
            "top {i:?} is not weakly increasing"
        )));
    }
    if eps.len() != i.len() {
        return Err(SchurError::ContextMismatch(format!(
            "shift length {} does not match top length {}",
            eps.len(),
            i.len()
        )));
    }
    let mut factors = Vec::new();
    let mut start = 0;
    while start < i.len() {
        let mut end = start;
        while end < i.len() && i[end] == i[start] {
            end += 1;
        }
        let mut theta = vec![0i64; i.len()];
        theta[start..end].copy_from_slice(&eps[start..end]);
        if theta.iter().any(|&v| v != 0) {
            factors.push(diagonal_symbol(i, &theta, ctx)?);
        }
        start = end;
    }
    Ok(factors)
}

/// The separating shift ε⁰ = t·(1,2,…,r) with `t = 10·max(1, max|b_s|)`,
/// used to witness that a non-diagonal symbol ξ_{i,b} (with residues of `b`
/// a permutation of `i` but `b ≠ i + n·ε` entrywise) cannot commute with
/// all of B_i.
pub fn maximality_witness_shift(x: &BasisSymbol) -> IntTuple {
    let max_abs = x.bottom().iter().map(|v| v.abs()).max().unwrap_or(0);
    let t = 10 * max_abs.max(1);
    (1..=x.rank() as i64).map(|k| t * k).collect()
}
