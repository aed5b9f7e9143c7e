//! Corner subalgebras cut out by a subset of the value range.
//!
//! For a nonempty `N ⊆ {1,…,n}`, the idempotent ξ_N is the sum of the
//! diagonal symbols whose top takes values in `N`.  The corner
//! ξ_N·S(n,r)·ξ_N is isomorphic to S(#N, r) through the order-preserving
//! relabeling of values, with the shift part carried over unchanged and
//! reattached with the smaller modulus.  The isomorphism is checked by the
//! tests (multiplicativity on sampled corner pairs), not assumed.

use num_bigint::{BigInt, BigUint};
use schur_core::{
    canonicalize_pair, idempotent, multiply, weakly_increasing_tuples, AlgebraContext,
    AlgebraElement, CoeffField, SchurError,
};
use std::collections::BTreeMap;
use weyl_core::{stabilizer, subgroup_index, IntTuple};

fn validated_subset(values: &[i64], n: i64) -> Result<Vec<i64>, SchurError> {
    if values.is_empty() {
        return Err(SchurError::Domain("empty value subset".to_string()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &v in &sorted {
        if v < 1 || v > n {
            return Err(SchurError::OutOfRange { value: v, n });
        }
    }
    Ok(sorted)
}

/// ξ_N: the sum of ξ_{i,i} over weakly increasing tops with values in `N`.
/// Equals `one(ctx)` when `N = {1,…,n}`.
pub fn subset_idempotent<F: CoeffField>(
    values: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    let sorted = validated_subset(values, ctx.n())?;
    let mut out = AlgebraElement::zero(ctx);
    for top in weakly_increasing_tuples(&sorted, ctx.r()) {
        out = out.add(&idempotent(&top, ctx)?)?;
    }
    Ok(out)
}

/// Transports a corner element ξ_N·e·ξ_N to the algebra S(#N, r): values are
/// relabeled through the order-preserving bijection `N → {1,…,#N}`, and each
/// bottom `j + n·ε` becomes `j′ + #N·ε`.  Errors if some term has top or
/// bottom residues outside `N`.
pub fn restrict_to_subset<F: CoeffField>(
    values: &[i64],
    e: &AlgebraElement<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    let ctx = e.ctx();
    let sorted = validated_subset(values, ctx.n())?;
    let s = sorted.len() as i64;
    let relabel: BTreeMap<i64, i64> = sorted
        .iter()
        .enumerate()
        .map(|(k, &v)| (v, k as i64 + 1))
        .collect();
    let small_ctx = AlgebraContext::new(s, ctx.r(), ctx.field().clone())?;
    let mut out = AlgebraElement::zero(&small_ctx);
    for (sym, coeff) in e.terms() {
        let (j, eps) = sym.split_bottom(ctx.n());
        let map_tuple = |t: &[i64]| -> Result<IntTuple, SchurError> {
            t.iter()
                .map(|v| {
                    relabel.get(v).copied().ok_or_else(|| {
                        SchurError::Domain(format!(
                            "term {sym} lies outside the ξ_N corner: value {v} is not in N"
                        ))
                    })
                })
                .collect()
        };
        let top = map_tuple(sym.top())?;
        let j_small = map_tuple(&j)?;
        let bottom: IntTuple = j_small
            .iter()
            .zip(&eps)
            .map(|(&jv, &ev)| jv + s * ev)
            .collect();
        let (mapped, _) = canonicalize_pair(&top, &bottom, s)?;
        debug_assert_eq!(
            (mapped.top(), mapped.bottom()),
            (top.as_slice(), bottom.as_slice()),
            "relabeling preserves canonical form"
        );
        out.add_assign_term(mapped, coeff.clone())?;
    }
    Ok(out)
}

/// The data of the summand comparison for a pair of tops with
/// `stabilizer(j)` refining `stabilizer(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandData {
    /// The subgroup index `[Σ_i : Σ_j]`.
    pub index: BigUint,
    /// Whether ξ_{i,j}·ξ_{j,i} = index·ξ_{i,i} held under actual
    /// multiplication (an identity in every characteristic).
    pub identity_holds: bool,
    /// Whether the index is invertible in the coefficient field — the
    /// hypothesis under which the summand splits off.
    pub split_over_field: bool,
}

/// Computes `[Σ_i : Σ_j]`, verifies the product identity
/// ξ_{i,j}·ξ_{j,i} = index·ξ_{i,i} by multiplying, and reports whether the
/// index is invertible in the field.
pub fn summand_data<F: CoeffField>(
    i: &[i64],
    j: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<SummandData, SchurError> {
    for t in [i, j] {
        if t.len() != ctx.r() {
            return Err(SchurError::ContextMismatch(format!(
                "tuple of length {} in a context with r = {}",
                t.len(),
                ctx.r()
            )));
        }
        for &v in t {
            if v < 1 || v > ctx.n() {
                return Err(SchurError::OutOfRange { value: v, n: ctx.n() });
            }
        }
    }
    let stab_i = stabilizer(&[i])?;
    let stab_j = stabilizer(&[j])?;
    let index = subgroup_index(&stab_i, &stab_j)?;

    let x = AlgebraElement::from_symbol(canonicalize_pair(i, j, ctx.n())?.0, ctx)?;
    let y = AlgebraElement::from_symbol(canonicalize_pair(j, i, ctx.n())?.0, ctx)?;
    let product = multiply(&x, &y)?;
    let index_in_field = F::from_bigint(ctx.field(), &BigInt::from(index.clone()));
    let expected = idempotent(i, ctx)?.scale(&index_in_field);
    Ok(SummandData {
        identity_holds: product == expected,
        split_over_field: !index_in_field.is_zero(),
        index,
    })
}
