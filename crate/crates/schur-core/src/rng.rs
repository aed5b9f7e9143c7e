//! Deterministic pseudo-random sampling.
//!
//! A fixed 64-bit linear congruential generator:
//!
//! ```text
//! state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//! output = state'
//! ```
//!
//! `below(m)` reduces the next output modulo `m`.  All sampling helpers
//! consume draws in a documented order, so a seed pins down every sampled
//! object exactly — across runs, platforms, and releases.

use crate::context::AlgebraContext;
use crate::element::AlgebraElement;
use crate::field::CoeffField;
use crate::symbol::{canonicalize_pair, BasisSymbol};
use num_bigint::BigInt;
use weyl_core::IntTuple;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// The generator.  Cloning forks the stream.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    /// Starts the stream at `seed`.
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    /// Advances the state and returns it.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        self.state
    }

    /// A value in `0..m`.  Panics if `m == 0`.
    pub fn below(&mut self, m: u64) -> u64 {
        assert!(m > 0, "range must be nonempty");
        self.next_u64() % m
    }

    /// A signed value in `lo..=hi` (one draw).
    pub fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    /// A weakly increasing top tuple: `r` draws in `1..=n`, then sorted.
    pub fn sample_top(&mut self, n: i64, r: usize) -> IntTuple {
        let mut top: IntTuple = (0..r).map(|_| self.in_range(1, n)).collect();
        top.sort_unstable();
        top
    }

    /// An unconstrained bottom tuple: `r` draws in `[1-bound, n+bound]`.
    pub fn sample_bottom(&mut self, n: i64, r: usize, bound: i64) -> IntTuple {
        (0..r).map(|_| self.in_range(1 - bound, n + bound)).collect()
    }

    /// A canonical symbol: a top (see [`Lcg::sample_top`]) followed by a
    /// bottom (see [`Lcg::sample_bottom`]), canonicalized.
    pub fn sample_symbol(&mut self, n: i64, r: usize, bound: i64) -> BasisSymbol {
        let top = self.sample_top(n, r);
        let bottom = self.sample_bottom(n, r, bound);
        canonicalize_pair(&top, &bottom, n)
            .expect("sampled tuples are well-formed")
            .0
    }

    /// A random element: `terms` sampled symbols (draws as in
    /// [`Lcg::sample_symbol`]), each with a nonzero integer coefficient in
    /// `[-4, 4]` (one further draw each).  Overlapping symbols accumulate,
    /// so the result can have fewer than `terms` terms.
    pub fn sample_element<F: CoeffField>(
        &mut self,
        ctx: &AlgebraContext<F>,
        terms: usize,
        bound: i64,
    ) -> AlgebraElement<F> {
        let mut out = AlgebraElement::zero(ctx);
        for _ in 0..terms {
            let sym = self.sample_symbol(ctx.n(), ctx.r(), bound);
            let mut c = self.in_range(-4, 4);
            if c == 0 {
                c = 1;
            }
            out.add_term(sym, F::from_bigint(ctx.field(), &BigInt::from(c)));
        }
        out
    }
}
