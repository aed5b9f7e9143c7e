//! Finite generation: rewriting a basis symbol over the diagonal
//! subalgebra B_i.
//!
//! A shift tuple is *absolutely successive* when its entries are
//! nonnegative, at least one entry is 0, and the set of values is a run of
//! consecutive integers.  There are finitely many such tuples of a given
//! length, and every symbol ξ_{i,j+nε} is a B_i-combination of symbols
//! whose shifts are absolutely successive.  [`fg_rewrite`] produces that
//! combination constructively:
//!
//! 1. split off the constant part `min(ε)·(1,…,1)` — a single exact
//!    diagonal factor;
//! 2. if the remaining shift is absolutely successive, stop;
//! 3. otherwise split the positions at the lowest gap in the value set,
//!    multiply the indicator factor ξ_{i,i+n·e(Ω)} against the lowered
//!    symbol, solve for the target (its coefficient is exactly 1), and
//!    recurse on the lowered symbol and the correction terms.
//!
//! Termination is guarded at runtime by the measure (volume of the
//! normalized shift, then its entries sorted descending): every recursive
//! call must decrease it strictly.

use crate::bsub::diagonal_symbol;
use schur_core::{
    canonicalize_pair, multiply_symbols, AlgebraContext, BasisSymbol, CoeffField, SchurError,
};
use weyl_core::IntTuple;

/// Nonnegative, hits 0, and the value set is consecutive.
pub fn is_absolutely_successive(eps: &[i64]) -> bool {
    if eps.is_empty() || eps.iter().any(|&v| v < 0) {
        return false;
    }
    let values: std::collections::BTreeSet<i64> = eps.iter().copied().collect();
    let (min, max) = (
        *values.first().expect("nonempty"),
        *values.last().expect("nonempty"),
    );
    min == 0 && max + 1 == values.len() as i64
}

/// A generator's shift tuple, together with its decomposition along the
/// equal-value blocks of the reference top (full-length embeddings, one per
/// occupied block, summing to `eps`; empty when the top is not weakly
/// increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorIndex {
    pub eps: IntTuple,
    pub theta: Vec<IntTuple>,
}

fn block_embeddings(i: &[i64], eps: &[i64]) -> Vec<IntTuple> {
    if i.windows(2).any(|w| w[0] > w[1]) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut start = 0;
    while start < i.len() {
        let mut end = start;
        while end < i.len() && i[end] == i[start] {
            end += 1;
        }
        let mut theta = vec![0i64; i.len()];
        theta[start..end].copy_from_slice(&eps[start..end]);
        out.push(theta);
        start = end;
    }
    out
}

fn check_top_range(t: &[i64], ctx_n: i64, r: usize) -> Result<(), SchurError> {
    if t.len() != r {
        return Err(SchurError::ContextMismatch(format!(
            "tuple of length {} where r = {}",
            t.len(),
            r
        )));
    }
    for &v in t {
        if v < 1 || v > ctx_n {
            return Err(SchurError::OutOfRange { value: v, n: ctx_n });
        }
    }
    Ok(())
}

/// All absolutely successive tuples of length `r`, lexicographically.
fn successive_tuples(r: usize) -> Vec<IntTuple> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; r];
    fn rec(cur: &mut IntTuple, pos: usize, r: usize, out: &mut Vec<IntTuple>) {
        if pos == r {
            if is_absolutely_successive(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..r as i64 {
            cur[pos] = v;
            rec(cur, pos + 1, r, out);
        }
    }
    rec(&mut cur, 0, r, &mut out);
    out
}

/// The finite generator index set for the pair `(i, j)`: every absolutely
/// successive shift of length `r`, with block data relative to `i`.
pub fn fg_generators<F: CoeffField>(
    i: &[i64],
    j: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<Vec<GeneratorIndex>, SchurError> {
    check_top_range(i, ctx.n(), ctx.r())?;
    check_top_range(j, ctx.n(), ctx.r())?;
    Ok(successive_tuples(ctx.r())
        .into_iter()
        .map(|eps| GeneratorIndex {
            theta: block_embeddings(i, &eps),
            eps,
        })
        .collect())
}

/// The sharper blockwise index set: shifts whose restriction to every
/// equal-value block of `i` is absolutely successive.  Requires `i` weakly
/// increasing.
pub fn fg_generators_blockwise<F: CoeffField>(
    i: &[i64],
    j: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<Vec<GeneratorIndex>, SchurError> {
    check_top_range(i, ctx.n(), ctx.r())?;
    check_top_range(j, ctx.n(), ctx.r())?;
    if i.windows(2).any(|w| w[0] > w[1]) {
        return Err(SchurError::Domain(format!(
            "top {i:?} is not weakly increasing"
        )));
    }
    // Per-block choices of absolutely successive tuples, spliced together.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    while start < i.len() {
        let mut end = start;
        while end < i.len() && i[end] == i[start] {
            end += 1;
        }
        blocks.push((start, end));
        start = end;
    }
    let mut acc: Vec<IntTuple> = vec![vec![0i64; i.len()]];
    for &(s, e) in &blocks {
        let choices = successive_tuples(e - s);
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for base in &acc {
            for choice in &choices {
                let mut t = base.clone();
                t[s..e].copy_from_slice(choice);
                next.push(t);
            }
        }
        acc = next;
    }
    Ok(acc
        .into_iter()
        .map(|eps| GeneratorIndex {
            theta: block_embeddings(i, &eps),
            eps,
        })
        .collect())
}

/// Termination measure: volume of the min-normalized shift, then the
/// normalized entries sorted descending.
fn measure(eps: &[i64]) -> (i64, IntTuple) {
    let min = eps.iter().copied().min().expect("nonempty tuple");
    let mut hat: IntTuple = eps.iter().map(|&v| v - min).collect();
    let vol = hat.iter().sum();
    hat.sort_unstable_by(|a, b| b.cmp(a));
    (vol, hat)
}

/// One emitted summand: `coeff · ξ_{i,i+n·diag_shift} · generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTerm<F> {
    pub diag_shift: IntTuple,
    pub coeff: F,
    pub generator: BasisSymbol,
}

/// Rewrites a canonical symbol as a B_i-combination of generators with
/// absolutely successive shifts: the returned terms satisfy
/// `Σ coeff · ξ_{i,i+n·diag_shift} · generator = x` exactly (re-expansion
/// is checked in the tests), and every generator's shift multiset is
/// absolutely successive.
pub fn fg_rewrite<F: CoeffField>(
    x: &BasisSymbol,
    ctx: &AlgebraContext<F>,
) -> Result<Vec<RewriteTerm<F>>, SchurError> {
    check_top_range(x.top(), ctx.n(), ctx.r())?;
    let (j, eps) = x.split_bottom(ctx.n());
    rewrite_rec(x.top(), &j, &eps, ctx, None)
}

fn rewrite_rec<F: CoeffField>(
    i: &[i64],
    j: &[i64],
    eps: &[i64],
    ctx: &AlgebraContext<F>,
    parent: Option<&(i64, IntTuple)>,
) -> Result<Vec<RewriteTerm<F>>, SchurError> {
    let cur = measure(eps);
    if let Some(bound) = parent {
        if cur >= *bound {
            return Err(SchurError::NonTermination(format!(
                "rewriting did not descend at shift {eps:?}"
            )));
        }
    }
    let n = ctx.n();
    let t = eps.iter().copied().min().expect("nonempty tuple");
    let reduced: IntTuple = eps.iter().map(|&v| v - t).collect();
    let constant: IntTuple = vec![t; eps.len()];

    if is_absolutely_successive(&reduced) {
        let bottom: IntTuple = j.iter().zip(&reduced).map(|(&b, &e)| b + n * e).collect();
        let (generator, _) = canonicalize_pair(i, &bottom, n)?;
        return Ok(vec![RewriteTerm {
            diag_shift: constant,
            coeff: F::one(ctx.field()),
            generator,
        }]);
    }

    // Split the positions at the lowest gap of the value set.
    let values: std::collections::BTreeSet<i64> = reduced.iter().copied().collect();
    let gap = values
        .iter()
        .copied()
        .find(|v| !values.contains(&(v + 1)))
        .expect("a non-successive nonnegative set has a gap below its maximum");
    debug_assert!(gap < *values.last().expect("nonempty"));
    let omega: IntTuple = reduced.iter().map(|&v| i64::from(v > gap)).collect();
    let lowered: IntTuple = reduced.iter().zip(&omega).map(|(&v, &w)| v - w).collect();

    let omega_sym = diagonal_symbol(i, &omega, ctx)?;
    let lowered_bottom: IntTuple = j.iter().zip(&lowered).map(|(&b, &e)| b + n * e).collect();
    let (lowered_sym, _) = canonicalize_pair(i, &lowered_bottom, n)?;
    let product = multiply_symbols(&omega_sym, &lowered_sym, ctx)?;

    let target_bottom: IntTuple = j.iter().zip(&reduced).map(|(&b, &e)| b + n * e).collect();
    let (target, _) = canonicalize_pair(i, &target_bottom, n)?;
    if product.coefficient(&target) != F::one(ctx.field()) {
        return Err(SchurError::NonTermination(format!(
            "expected target coefficient 1 when splitting {reduced:?} at gap {gap}"
        )));
    }

    let mut out = Vec::new();
    // Main branch: rewrite the lowered symbol, then absorb the indicator
    // factor into each diagonal prefix (a product of two B_i diagonals,
    // expanded exactly).
    for term in rewrite_rec(i, j, &lowered, ctx, Some(&cur))? {
        let d_sym = diagonal_symbol(i, &term.diag_shift, ctx)?;
        let expanded = multiply_symbols(&omega_sym, &d_sym, ctx)?;
        for (sym, c) in expanded.terms() {
            let mu = sym.diagonal_shift(n).ok_or_else(|| {
                SchurError::Domain(format!(
                    "product of diagonal symbols produced the non-diagonal term {sym}"
                ))
            })?;
            let shifted: IntTuple = mu.iter().zip(&constant).map(|(&a, &b)| a + b).collect();
            out.push(RewriteTerm {
                diag_shift: shifted,
                coeff: c.mul(&term.coeff, ctx.field()),
                generator: term.generator.clone(),
            });
        }
    }
    // Correction branch: every other product term, negated and recursed.
    for (sym, c) in product.terms() {
        if *sym == target {
            continue;
        }
        let (j_c, eps_c) = sym.split_bottom(n);
        for term in rewrite_rec(i, &j_c, &eps_c, ctx, Some(&cur))? {
            let shifted: IntTuple = term
                .diag_shift
                .iter()
                .zip(&constant)
                .map(|(&a, &b)| a + b)
                .collect();
            out.push(RewriteTerm {
                diag_shift: shifted,
                coeff: c.neg(ctx.field()).mul(&term.coeff, ctx.field()),
                generator: term.generator,
            });
        }
    }
    Ok(out)
}

/// Re-expands a rewrite: Σ coeff · ξ_{i,i+n·diag_shift} · generator, for
/// checking `fg_rewrite` outputs against the original symbol.
pub fn fg_reexpand<F: CoeffField>(
    i: &[i64],
    terms: &[RewriteTerm<F>],
    ctx: &AlgebraContext<F>,
) -> Result<schur_core::AlgebraElement<F>, SchurError> {
    let mut out = schur_core::AlgebraElement::zero(ctx);
    for term in terms {
        let d = diagonal_symbol(i, &term.diag_shift, ctx)?;
        let prod = multiply_symbols(&d, &term.generator, ctx)?;
        for (sym, c) in prod.terms() {
            out.add_assign_term(sym.clone(), c.mul(&term.coeff, ctx.field()))?;
        }
    }
    Ok(out)
}
