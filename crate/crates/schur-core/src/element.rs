//! Finitely supported linear combinations of basis symbols, and the
//! distinguished elements (identity, idempotents) every structure
//! computation starts from.

use crate::context::AlgebraContext;
use crate::field::CoeffField;
use crate::symbol::{canonicalize_pair, BasisSymbol};
use crate::SchurError;
use weyl_core::IntTuple;
use std::collections::BTreeMap;

/// An element of the algebra: a finitely supported map from canonical basis
/// symbols to nonzero field scalars, tied to its context.
///
/// The term map is ordered by `(top, bottom)` lexicographically, which fixes
/// the iteration order used by formatting and serialization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement<F: CoeffField> {
    ctx: AlgebraContext<F>,
    terms: BTreeMap<BasisSymbol, F>,
}

impl<F: CoeffField> AlgebraElement<F> {
    pub fn zero(ctx: &AlgebraContext<F>) -> Self {
        AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A single canonical symbol with coefficient 1.
    pub fn from_symbol(sym: BasisSymbol, ctx: &AlgebraContext<F>) -> Result<Self, SchurError> {
        Self::from_term(sym, F::one(ctx.field()), ctx)
    }

    /// A single term `coeff·ξ`.
    pub fn from_term(
        sym: BasisSymbol,
        coeff: F,
        ctx: &AlgebraContext<F>,
    ) -> Result<Self, SchurError> {
        if sym.rank() != ctx.r() {
            return Err(SchurError::ContextMismatch(format!(
                "symbol rank {} in a context with r = {}",
                sym.rank(),
                ctx.r()
            )));
        }
        for &v in sym.top() {
            if v < 1 || v > ctx.n() {
                return Err(SchurError::OutOfRange { value: v, n: ctx.n() });
            }
        }
        let mut e = Self::zero(ctx);
        e.add_term(sym, coeff);
        Ok(e)
    }

    pub fn ctx(&self) -> &AlgebraContext<F> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in `(top, bottom)`-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &F)> {
        self.terms.iter()
    }

    /// The coefficient of a symbol (zero when absent).
    pub fn coefficient(&self, sym: &BasisSymbol) -> F {
        self.terms
            .get(sym)
            .cloned()
            .unwrap_or_else(|| F::zero(self.ctx.field()))
    }

    /// Accumulates `coeff·sym` after validating the symbol against the
    /// context, dropping the entry if it cancels.
    pub fn add_assign_term(&mut self, sym: BasisSymbol, coeff: F) -> Result<(), SchurError> {
        if sym.rank() != self.ctx.r() {
            return Err(SchurError::ContextMismatch(format!(
                "symbol rank {} in a context with r = {}",
                sym.rank(),
                self.ctx.r()
            )));
        }
        for &v in sym.top() {
            if v < 1 || v > self.ctx.n() {
                return Err(SchurError::OutOfRange {
                    value: v,
                    n: self.ctx.n(),
                });
            }
        }
        self.add_term(sym, coeff);
        Ok(())
    }

    /// Accumulates `coeff·sym`, dropping the entry if it cancels.
    pub(crate) fn add_term(&mut self, sym: BasisSymbol, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        let cfg = self.ctx.field().clone();
        match self.terms.entry(sym) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff, &cfg);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchurError> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (sym, c) in &other.terms {
            out.add_term(sym.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SchurError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ctx);
        for (sym, c) in &self.terms {
            out.terms.insert(sym.clone(), c.neg(self.ctx.field()));
        }
        out
    }

    pub fn scale(&self, scalar: &F) -> Self {
        let mut out = Self::zero(&self.ctx);
        if scalar.is_zero() {
            return out;
        }
        for (sym, c) in &self.terms {
            let prod = c.mul(scalar, self.ctx.field());
            if !prod.is_zero() {
                out.terms.insert(sym.clone(), prod);
            }
        }
        out
    }
}

/// All weakly increasing `r`-tuples over a sorted, deduplicated value list —
/// the multiset representatives the identity and idempotent sums range over.
pub fn weakly_increasing_tuples(values: &[i64], r: usize) -> Vec<IntTuple> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    fn rec(values: &[i64], from: usize, left: usize, current: &mut IntTuple, out: &mut Vec<IntTuple>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for idx in from..values.len() {
            current.push(values[idx]);
            rec(values, idx, left - 1, current, out);
            current.pop();
        }
    }
    rec(values, 0, r, &mut current, &mut out);
    out
}

/// The identity: the sum of the diagonal idempotents ξ_{i,i} over all
/// weakly increasing tuples `i` with entries in `1..=n`.  It has
/// `C(n+r-1, r)` terms.
pub fn one<F: CoeffField>(ctx: &AlgebraContext<F>) -> AlgebraElement<F> {
    let values: Vec<i64> = (1..=ctx.n()).collect();
    let mut e = AlgebraElement::zero(ctx);
    for i in weakly_increasing_tuples(&values, ctx.r()) {
        let sym = BasisSymbol::from_canonical_parts(i.clone(), i);
        e.add_term(sym, F::one(ctx.field()));
    }
    e
}

/// The diagonal idempotent ξ_{i,i} for a tuple with entries in `1..=n`
/// (canonicalized first, so the entry order is irrelevant).
pub fn idempotent<F: CoeffField>(
    i: &[i64],
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    for &v in i {
        if v < 1 || v > ctx.n() {
            return Err(SchurError::OutOfRange { value: v, n: ctx.n() });
        }
    }
    let (sym, _) = canonicalize_pair(i, i, ctx.n())?;
    AlgebraElement::from_symbol(sym, ctx)
}

/// The weight of a tuple: `λ_s = #{k : i_k = s}` for `s = 1..n`.
pub fn weight<F: CoeffField>(i: &[i64], ctx: &AlgebraContext<F>) -> Result<IntTuple, SchurError> {
    let mut lambda = vec![0i64; ctx.n() as usize];
    for &v in i {
        if v < 1 || v > ctx.n() {
            return Err(SchurError::OutOfRange { value: v, n: ctx.n() });
        }
        lambda[(v - 1) as usize] += 1;
    }
    Ok(lambda)
}

/// All canonical symbols of a context whose bottom entries lie in
/// `lo..=hi` — the exhaustive enumeration the oracle sweeps use.
pub fn canonical_symbols_in_range(
    n: i64,
    r: usize,
    lo: i64,
    hi: i64,
) -> Result<Vec<BasisSymbol>, SchurError> {
    if n < 1 || r < 1 {
        return Err(SchurError::InvalidContext(format!(
            "need n ≥ 1 and r ≥ 1, got n = {n}, r = {r}"
        )));
    }
    let values: Vec<i64> = (lo..=hi).collect();
    let tops: Vec<i64> = (1..=n).collect();
    let mut out = Vec::new();
    for top in weakly_increasing_tuples(&tops, r) {
        // Per equal-top block, the bottom ascends: enumerate each block as a
        // weakly increasing tuple over the range, then splice.
        let mut blocks: Vec<usize> = Vec::new();
        let mut lo_ix = 0;
        while lo_ix < r {
            let mut hi_ix = lo_ix + 1;
            while hi_ix < r && top[hi_ix] == top[lo_ix] {
                hi_ix += 1;
            }
            blocks.push(hi_ix - lo_ix);
            lo_ix = hi_ix;
        }
        let mut bottoms: Vec<IntTuple> = vec![vec![]];
        for &len in &blocks {
            let choices = weakly_increasing_tuples(&values, len);
            let mut next = Vec::with_capacity(bottoms.len() * choices.len());
            for prefix in &bottoms {
                for choice in &choices {
                    let mut b = prefix.clone();
                    b.extend_from_slice(choice);
                    next.push(b);
                }
            }
            bottoms = next;
        }
        for bottom in bottoms {
            out.push(BasisSymbol::from_canonical_parts(top.clone(), bottom));
        }
    }
    Ok(out)
}
