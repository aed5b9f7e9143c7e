//! Multiplication of basis symbols.
//!
//! Two independent implementations of the same structure constants:
//!
//! * [`multiply_symbols`] — the double-coset formula: transport the right
//!   factor so the middle tuples agree, enumerate double cosets of the
//!   middle's stabilizer, and weight each term by an exact subgroup index.
//! * [`multiply_oracle`] — a direct count of the intermediate tuples `s`
//!   from the definition of the structure constants, made finite by the
//!   fact that only a stabilizer's worth of witnesses can fix a tuple with
//!   entries in `1..=n`.
//!
//! Both accumulate exact big integers and only then reduce into the
//! coefficient field, so prime characteristic is handled exactly.  Their
//! agreement is enforced by exhaustive sweeps in the tests.

use crate::context::AlgebraContext;
use crate::element::AlgebraElement;
use crate::field::CoeffField;
use crate::symbol::{canonicalize_pair, reduce_tuple, BasisSymbol};
use crate::SchurError;
use num_bigint::{BigInt, BigUint};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use weyl_core::{
    act, double_cosets, enumerate_elements, stabilizer, subgroup_index, tuple,
    ExtendedWeylElement, IntTuple, Permutation,
};

/// A permutation σ with `from[σ(k)] = to[k]`, built greedily by matching
/// equal values first-to-first.  Requires equal multisets.
fn match_permutation(from: &[i64], to: &[i64]) -> Result<Permutation, SchurError> {
    let mut positions: BTreeMap<i64, VecDeque<usize>> = BTreeMap::new();
    for (p, &v) in from.iter().enumerate() {
        positions.entry(v).or_default().push_back(p);
    }
    let mut images = Vec::with_capacity(to.len());
    for &v in to {
        let p = positions
            .get_mut(&v)
            .and_then(|q| q.pop_front())
            .ok_or_else(|| {
                SchurError::Domain(format!("{from:?} and {to:?} are not equal as multisets"))
            })?;
        images.push(p);
    }
    Ok(Permutation::from_images(images).expect("a matching is a bijection"))
}

/// The product's terms with exact integer coefficients, before any field
/// reduction.  Returns canonical symbols with accumulated multiplicities,
/// sorted by symbol.
fn symbol_product_counts(
    x: &BasisSymbol,
    y: &BasisSymbol,
    n: i64,
) -> Result<BTreeMap<BasisSymbol, BigUint>, SchurError> {
    let mut acc: BTreeMap<BasisSymbol, BigUint> = BTreeMap::new();
    // Write x = ξ_{i, j+nε}.
    let i = x.top();
    let (j, eps) = x.split_bottom(n);

    // The product vanishes unless the middle multisets agree.
    let mut j_sorted = j.clone();
    j_sorted.sort_unstable();
    if j_sorted != y.top() {
        return Ok(acc);
    }

    // Transport y so its top reads exactly j: y = ξ_{j, l+nε′}.
    let sigma0 = match_permutation(y.top(), &j)?;
    let m = tuple::permute(y.bottom(), &sigma0)?;
    let l = reduce_tuple(&m, n);
    let eps_p: IntTuple = m.iter().zip(&l).map(|(&b, &v)| (b - v) / n).collect();

    let h = stabilizer(&[&j, &l, &eps_p])?;
    let g = stabilizer(&[&j])?;
    let k = stabilizer(&[i, &j, &eps])?;
    for delta in double_cosets(&h, &g, &k)? {
        let l_d = tuple::permute(&l, &delta)?;
        let eps_p_d = tuple::permute(&eps_p, &delta)?;
        let nu = tuple::add(&eps_p_d, &eps)?;
        let big = stabilizer(&[i, &l_d, &nu])?;
        let small = stabilizer(&[i, &j, &l_d, &eps_p_d, &eps])?;
        let index = subgroup_index(&big, &small)?;
        let bottom = tuple::scaled_add(&l_d, n, &nu)?;
        let (sym, _) = canonicalize_pair(i, &bottom, n)?;
        *acc.entry(sym).or_default() += index;
    }
    Ok(acc)
}

/// The product of two canonical basis symbols via the double-coset formula.
pub fn multiply_symbols<F: CoeffField>(
    x: &BasisSymbol,
    y: &BasisSymbol,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    if x.rank() != ctx.r() || y.rank() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "symbol ranks {} and {} in a context with r = {}",
            x.rank(),
            y.rank(),
            ctx.r()
        )));
    }
    let counts = symbol_product_counts(x, y, ctx.n())?;
    let mut out = AlgebraElement::zero(ctx);
    for (sym, count) in counts {
        let coeff = F::from_bigint(ctx.field(), &BigInt::from(count));
        out.add_term(sym, coeff);
    }
    Ok(out)
}

/// Independent recomputation of the product from the counting definition of
/// the structure constants.
///
/// With `x = ξ_{i,j′}` and `y = ξ_{k,l′}` canonical, the candidate middle
/// tuples are `S = {j′σ : σ ∈ Σ_i}` (the full witness set, since only pure
/// permutations fix a tuple with entries in `1..=n`).  Candidate output
/// bottoms arise from each compatible `s ∈ S` through one witness carrying
/// `k` to `s` and the stabilizer of `k`.  The coefficient of a canonical
/// output ξ_{i,q*} is the number of `s ∈ S` whose pair `(s, q*)` lies in the
/// orbit of `(k, l′)` — decided by canonicalization, nothing shared with the
/// double-coset formula beyond the group action itself.
pub fn multiply_oracle<F: CoeffField>(
    x: &BasisSymbol,
    y: &BasisSymbol,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    if x.rank() != ctx.r() || y.rank() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "symbol ranks {} and {} in a context with r = {}",
            x.rank(),
            y.rank(),
            ctx.r()
        )));
    }
    let n = ctx.n();
    let i = x.top();
    let jp = x.bottom();
    let k = y.top();
    let lp = y.bottom();

    // S = {j′σ : σ ∈ Σ_i}, as a set of tuples.
    let sigma_i = enumerate_elements(&stabilizer(&[i])?)?;
    let mut s_set: BTreeSet<IntTuple> = BTreeSet::new();
    for sigma in &sigma_i {
        s_set.insert(tuple::permute(jp, sigma)?);
    }

    let mut k_multiset = k.to_vec();
    k_multiset.sort_unstable();
    let sigma_k = enumerate_elements(&stabilizer(&[k])?)?;

    // Collect candidate canonical bottoms q*.
    let mut candidates: BTreeSet<IntTuple> = BTreeSet::new();
    for s in &s_set {
        let sbar = reduce_tuple(s, n);
        let mut sbar_sorted = sbar.clone();
        sbar_sorted.sort_unstable();
        if sbar_sorted != k_multiset {
            continue;
        }
        // One witness w₀ with act(k, w₀, n) = s.
        let pi = match_permutation(k, &sbar)?;
        let eps0: IntTuple = (0..s.len()).map(|t| (s[t] - sbar[t]) / n).collect();
        let w0 = ExtendedWeylElement::new(pi, eps0)?;
        for v in &sigma_k {
            let moved = act(lp, &ExtendedWeylElement::from_permutation(v.clone()), n)?;
            let q = act(&moved, &w0, n)?;
            let (sym, _) = canonicalize_pair(i, &q, n)?;
            candidates.insert(sym.bottom().to_vec());
        }
    }

    // Count witnesses s per candidate.
    let mut out = AlgebraElement::zero(ctx);
    for qstar in candidates {
        let mut count = BigUint::from(0u32);
        for s in &s_set {
            let (sym, _) = canonicalize_pair(s, &qstar, n)?;
            if sym == *y {
                count += 1u32;
            }
        }
        if count != BigUint::from(0u32) {
            let sym = BasisSymbol::from_canonical_parts(i.to_vec(), qstar);
            out.add_term(sym, F::from_bigint(ctx.field(), &BigInt::from(count)));
        }
    }
    Ok(out)
}

/// Bilinear extension of [`multiply_symbols`] to whole elements.
pub fn multiply<F: CoeffField>(
    e1: &AlgebraElement<F>,
    e2: &AlgebraElement<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    e1.ctx().check_same(e2.ctx())?;
    let ctx = e1.ctx();
    let mut out = AlgebraElement::zero(ctx);
    for (sx, cx) in e1.terms() {
        for (sy, cy) in e2.terms() {
            let factor = cx.mul(cy, ctx.field());
            if factor.is_zero() {
                continue;
            }
            let prod = multiply_symbols(sx, sy, ctx)?;
            for (sym, c) in prod.terms() {
                out.add_term(sym.clone(), c.mul(&factor, ctx.field()));
            }
        }
    }
    Ok(out)
}
