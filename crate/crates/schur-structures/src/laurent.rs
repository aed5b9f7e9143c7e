//! The corner with all-ones top: a Laurent polynomial algebra.
//!
//! Inside S(n, r), the symbols whose top tuple is `u = (1,…,1)` span a
//! commutative subalgebra generated by
//!
//! ```text
//! t_k = ξ_{u, u + n·(1,…,1,0,…,0)}   (k ones),   1 ≤ k ≤ r,
//! ```
//!
//! with `t_r` invertible.  Every element of the corner is a unique Laurent
//! polynomial in `t_1, …, t_r` with `t_1, …, t_{r-1}` appearing only with
//! nonnegative exponents.  [`laurent_normal_form`] computes that polynomial
//! constructively by peeling generators off actual algebra products — the
//! leading coefficient is asserted to be 1 at every step — and
//! [`laurent_evaluate`] multiplies the generators back out, so the two
//! directions are verified against each other rather than trusted.

use num_bigint::{BigInt, BigUint};
use schur_core::{
    canonicalize_pair, idempotent, multiply, multiply_symbols, AlgebraContext, AlgebraElement,
    BasisSymbol, CoeffField, SchurError,
};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use weyl_core::IntTuple;

/// A Laurent polynomial in `t_1, …, t_r`: exponent vectors
/// `(m_1, …, m_r)` with `m_1, …, m_{r-1} ≥ 0` and `m_r ∈ Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<F: CoeffField> {
    r: usize,
    cfg: F::Config,
    terms: BTreeMap<IntTuple, F>,
}

fn check_exponents(exps: &[i64], r: usize) -> Result<(), SchurError> {
    if exps.len() != r {
        return Err(SchurError::Domain(format!(
            "exponent vector of length {} in a Laurent ring with {} variables",
            exps.len(),
            r
        )));
    }
    for (k, &m) in exps.iter().enumerate() {
        if k + 1 < r && m < 0 {
            return Err(SchurError::Domain(format!(
                "negative exponent {m} for t_{}; only t_{r} is invertible",
                k + 1
            )));
        }
    }
    Ok(())
}

impl<F: CoeffField> LaurentPoly<F> {
    pub fn zero(r: usize, cfg: &F::Config) -> Self {
        LaurentPoly {
            r,
            cfg: cfg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: usize, cfg: &F::Config) -> Self {
        Self::monomial(&vec![0; r], F::one(cfg), cfg).expect("zero exponents are valid")
    }

    /// The single-variable monomial `t_k`.
    pub fn variable(r: usize, k: usize, cfg: &F::Config) -> Result<Self, SchurError> {
        if k < 1 || k > r {
            return Err(SchurError::Domain(format!(
                "t_{k} does not exist with {r} variables"
            )));
        }
        let mut exps = vec![0i64; r];
        exps[k - 1] = 1;
        Self::monomial(&exps, F::one(cfg), cfg)
    }

    pub fn monomial(exps: &[i64], coeff: F, cfg: &F::Config) -> Result<Self, SchurError> {
        check_exponents(exps, exps.len())?;
        let mut p = Self::zero(exps.len(), cfg);
        p.accumulate(exps.to_vec(), coeff);
        Ok(p)
    }

    pub fn num_variables(&self) -> usize {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&IntTuple, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i64]) -> F {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| F::zero(&self.cfg))
    }

    fn accumulate(&mut self, exps: IntTuple, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff, &self.cfg);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SchurError> {
        if self.r != other.r || self.cfg != other.cfg {
            return Err(SchurError::ContextMismatch(
                "Laurent polynomials from different rings".to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SchurError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg(&self.cfg);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SchurError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &F) -> Self {
        let mut out = Self::zero(self.r, &self.cfg);
        for (e, c) in &self.terms {
            out.accumulate(e.clone(), c.mul(factor, &self.cfg));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SchurError> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.r, &self.cfg);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let sum: IntTuple = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.accumulate(sum, c1.mul(c2, &self.cfg));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, SchurError> {
        let mut out = Self::one(self.r, &self.cfg);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `{"r": …, "terms": [{"coeff": "…", "exps": […]}, …]}` with terms in
    /// ascending lexicographic exponent order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({ "coeff": c.coeff_string(), "exps": e }))
            .collect();
        json!({ "r": self.r, "terms": terms })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    /// Reads the JSON layout of [`LaurentPoly::to_json`], validating the
    /// exponent constraints.
    pub fn from_json(text: &str, cfg: &F::Config) -> Result<Self, SchurError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| SchurError::Json(e.to_string()))?;
        let map = value
            .as_object()
            .ok_or_else(|| SchurError::Json("expected a JSON object".to_string()))?;
        let r = map
            .get("r")
            .and_then(Value::as_u64)
            .ok_or_else(|| SchurError::Json("missing integer \"r\"".to_string()))?
            as usize;
        if r == 0 {
            return Err(SchurError::Json("\"r\" must be at least 1".to_string()));
        }
        let terms = map
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| SchurError::Json("missing array \"terms\"".to_string()))?;
        let mut out = Self::zero(r, cfg);
        for term in terms {
            let term = term
                .as_object()
                .ok_or_else(|| SchurError::Json("terms must be objects".to_string()))?;
            let exps: IntTuple = term
                .get("exps")
                .and_then(Value::as_array)
                .ok_or_else(|| SchurError::Json("missing array \"exps\"".to_string()))?
                .iter()
                .map(|v| {
                    v.as_i64()
                        .ok_or_else(|| SchurError::Json("exponents must be integers".to_string()))
                })
                .collect::<Result<_, _>>()?;
            check_exponents(&exps, r)?;
            let coeff_text = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| SchurError::Json("missing string \"coeff\"".to_string()))?;
            let coeff = parse_coeff::<F>(coeff_text, cfg)?;
            out.accumulate(exps, coeff);
        }
        Ok(out)
    }
}

fn parse_coeff<F: CoeffField>(s: &str, cfg: &F::Config) -> Result<F, SchurError> {
    let bad = || SchurError::InvalidCoefficient(format!("cannot read coefficient \"{s}\""));
    let (num_text, den_text) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };
    let numerator: BigInt = num_text.trim().parse().map_err(|_| bad())?;
    let denominator: BigUint = match den_text {
        Some(t) => t.trim().parse().map_err(|_| bad())?,
        None => BigUint::from(1u32),
    };
    if denominator == BigUint::from(0u32) {
        return Err(bad());
    }
    F::from_fraction(cfg, &numerator, &denominator)
}

impl<F: CoeffField> fmt::Display for LaurentPoly<F> {
    /// Descending lexicographic exponent order, e.g. `t1^2 - 2*t2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let s = coeff.coeff_string();
            let (negative, magnitude) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(k, &m)| {
                    if m == 1 {
                        format!("t{}", k + 1)
                    } else {
                        format!("t{}^{}", k + 1, m)
                    }
                })
                .collect();
            if vars.is_empty() {
                f.write_str(&magnitude)?;
            } else {
                if magnitude != "1" {
                    write!(f, "{magnitude}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

fn all_ones(r: usize) -> IntTuple {
    vec![1; r]
}

/// The corner's identity ξ_{u,u} with `u = (1,…,1)`.
pub fn corner_identity<F: CoeffField>(ctx: &AlgebraContext<F>) -> AlgebraElement<F> {
    idempotent(&all_ones(ctx.r()), ctx).expect("the all-ones tuple is in range")
}

/// Builds the corner symbol with shift `eps`: ξ_{u, u + n·eps}.
fn corner_symbol(eps: &[i64], n: i64) -> BasisSymbol {
    let r = eps.len();
    let u = all_ones(r);
    let bottom: IntTuple = eps.iter().map(|&e| 1 + n * e).collect();
    canonicalize_pair(&u, &bottom, n)
        .expect("corner tuples are well-formed")
        .0
}

/// The generator `t_k = ξ_{u, u + n·(1,…,1,0,…,0)}` with `k` ones.
pub fn t_generator<F: CoeffField>(
    k: usize,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    if k < 1 || k > ctx.r() {
        return Err(SchurError::Domain(format!(
            "generator index {k} out of range 1..={}",
            ctx.r()
        )));
    }
    let mut eps = vec![0i64; ctx.r()];
    for e in eps.iter_mut().take(k) {
        *e = 1;
    }
    AlgebraElement::from_symbol(corner_symbol(&eps, ctx.n()), ctx)
}

/// The inverse of `t_r`: ξ_{u, u − n·(1,…,1)}.
pub fn t_r_inverse<F: CoeffField>(ctx: &AlgebraContext<F>) -> AlgebraElement<F> {
    let eps = vec![-1i64; ctx.r()];
    AlgebraElement::from_symbol(corner_symbol(&eps, ctx.n()), ctx)
        .expect("the corner symbol is valid")
}

/// Substitutes the generators into a Laurent polynomial and multiplies out
/// in the algebra.  Inverse of [`laurent_normal_form`].
pub fn laurent_evaluate<F: CoeffField>(
    p: &LaurentPoly<F>,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    if p.num_variables() != ctx.r() {
        return Err(SchurError::ContextMismatch(format!(
            "polynomial in {} variables in a context with r = {}",
            p.num_variables(),
            ctx.r()
        )));
    }
    let r = ctx.r();
    let mut out = AlgebraElement::zero(ctx);
    for (exps, coeff) in p.terms() {
        let mut acc = corner_identity(ctx);
        for k in 1..=r {
            let m = exps[k - 1];
            if k < r || m >= 0 {
                let gen = t_generator(k, ctx)?;
                for _ in 0..m {
                    acc = multiply(&acc, &gen)?;
                }
            } else {
                let inv = t_r_inverse(ctx);
                for _ in 0..(-m) {
                    acc = multiply(&acc, &inv)?;
                }
            }
        }
        out = out.add(&acc.scale(coeff))?;
    }
    Ok(out)
}

/// Termination measure for the rewriting recursion: total shift volume
/// after normalizing the minimum to zero, tie-broken by the entries sorted
/// descending.  Strictly decreases along every recursive call.
fn measure(eps: &[i64]) -> (i64, IntTuple) {
    let min = eps.iter().copied().min().expect("nonempty tuple");
    let mut hat: IntTuple = eps.iter().map(|&v| v - min).collect();
    let vol = hat.iter().sum();
    hat.sort_unstable_by(|a, b| b.cmp(a));
    (vol, hat)
}

/// Normal form of the single corner symbol with shift multiset `eps`
/// (passed sorted descending), memoized.
fn nf_shift<F: CoeffField>(
    eps: &IntTuple,
    ctx: &AlgebraContext<F>,
    memo: &mut HashMap<IntTuple, LaurentPoly<F>>,
    parent: Option<&(i64, IntTuple)>,
) -> Result<LaurentPoly<F>, SchurError> {
    debug_assert!(eps.windows(2).all(|w| w[0] >= w[1]), "sorted descending");
    if let Some(hit) = memo.get(eps) {
        return Ok(hit.clone());
    }
    let cur = measure(eps);
    if let Some(bound) = parent {
        if cur >= *bound {
            return Err(SchurError::NonTermination(format!(
                "corner rewriting did not descend at shift {eps:?}"
            )));
        }
    }
    let r = ctx.r();
    let cfg = ctx.field();
    let min = *eps.last().expect("nonempty");

    let result = if eps.iter().all(|&v| v == 0) {
        LaurentPoly::one(r, cfg)
    } else if min != 0 {
        // Peel the invertible generator: ξ^eps = t_r^min · ξ^(eps − min·1),
        // exact because constant diagonal shifts compose term-free.
        let mut reduced = eps.clone();
        for v in reduced.iter_mut() {
            *v -= min;
        }
        let mut exps = vec![0i64; r];
        exps[r - 1] = min;
        let factor = LaurentPoly::monomial(&exps, F::one(cfg), cfg)?;
        let base = nf_shift(&reduced, ctx, memo, parent)?;
        factor.mul(&base)?
    } else {
        // min = 0 and some entry positive: peel t_k where k counts the
        // positive entries, then cancel the correction terms.
        let k = eps.iter().filter(|&&v| v > 0).count();
        debug_assert!(k >= 1 && k < r);
        let mut reduced = eps.clone();
        for v in reduced.iter_mut().take(k) {
            *v -= 1;
        }
        let product = multiply_symbols(
            &corner_symbol(&reduced, ctx.n()),
            &corner_symbol(&t_exponent(k, r), ctx.n()),
            ctx,
        )?;
        let target = corner_symbol(eps, ctx.n());
        let leading = product.coefficient(&target);
        if leading != F::one(cfg) {
            return Err(SchurError::NonTermination(format!(
                "expected leading coefficient 1 at shift {eps:?}"
            )));
        }
        let t_k = LaurentPoly::variable(r, k, cfg)?;
        let mut acc = nf_shift(&reduced, ctx, memo, Some(&cur))?.mul(&t_k)?;
        for (sym, coeff) in product.terms() {
            if *sym == target {
                continue;
            }
            let (_, mut shift) = sym.split_bottom(ctx.n());
            shift.sort_unstable_by(|a, b| b.cmp(a));
            let nf = nf_shift(&shift, ctx, memo, Some(&cur))?;
            acc = acc.sub(&nf.scale(coeff))?;
        }
        acc
    };
    memo.insert(eps.clone(), result.clone());
    Ok(result)
}

fn t_exponent(k: usize, r: usize) -> IntTuple {
    let mut eps = vec![0i64; r];
    for e in eps.iter_mut().take(k) {
        *e = 1;
    }
    eps
}

/// Expresses a corner element (every term's top and bottom residues all 1)
/// as the unique Laurent polynomial in the generators.
pub fn laurent_normal_form<F: CoeffField>(
    e: &AlgebraElement<F>,
) -> Result<LaurentPoly<F>, SchurError> {
    let ctx = e.ctx();
    let u = all_ones(ctx.r());
    let mut memo: HashMap<IntTuple, LaurentPoly<F>> = HashMap::new();
    let mut out = LaurentPoly::zero(ctx.r(), ctx.field());
    for (sym, coeff) in e.terms() {
        if sym.top() != u.as_slice() {
            return Err(SchurError::Domain(format!(
                "term {sym} lies outside the all-ones corner"
            )));
        }
        let (j, mut eps) = sym.split_bottom(ctx.n());
        if j != u {
            return Err(SchurError::Domain(format!(
                "term {sym} lies outside the all-ones corner"
            )));
        }
        eps.sort_unstable_by(|a, b| b.cmp(a));
        let nf = nf_shift(&eps, ctx, &mut memo, None)?;
        out = out.add(&nf.scale(coeff))?;
    }
    Ok(out)
}

/// The number of weakly decreasing nonnegative `r`-tuples of total sum `m`:
/// the dimension of the degree-`m` slice of the nonnegative corner.
pub fn graded_dimension(r: usize, m: i64) -> Result<u64, SchurError> {
    if m < 0 {
        return Err(SchurError::Domain(format!("negative degree {m}")));
    }
    fn count(parts: usize, remaining: i64, cap: i64) -> u64 {
        if parts == 0 {
            return u64::from(remaining == 0);
        }
        let mut total = 0;
        let mut v = remaining.min(cap);
        while v >= 0 {
            // Entry v, then the rest weakly below it.
            if remaining - v <= v * (parts as i64 - 1) {
                total += count(parts - 1, remaining - v, v);
            }
            v -= 1;
        }
        total
    }
    Ok(count(r, m, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use schur_core::BigRational;

    fn ctx(n: i64, r: usize) -> AlgebraContext<BigRational> {
        AlgebraContext::rational(n, r).unwrap()
    }

    #[test]
    fn generator_symbols_fold_correctly() {
        // n=1, r=2: t_1 is the orbit of the pair ((1,1),(2,1)).
        let c = ctx(1, 2);
        let t1 = t_generator(1, &c).unwrap();
        let (expected, _) = canonicalize_pair(&[1, 1], &[2, 1], 1).unwrap();
        assert_eq!(t1, AlgebraElement::from_symbol(expected, &c).unwrap());
    }

    #[test]
    fn t_r_times_its_inverse_is_the_corner_identity() {
        for (n, r) in [(1i64, 2usize), (2, 2), (2, 3)] {
            let c = ctx(n, r);
            let tr = t_generator(r, &c).unwrap();
            let inv = t_r_inverse(&c);
            assert_eq!(multiply(&tr, &inv).unwrap(), corner_identity(&c));
            assert_eq!(multiply(&inv, &tr).unwrap(), corner_identity(&c));
        }
    }

    #[test]
    fn generators_commute() {
        let c = ctx(2, 3);
        for k in 1..=3 {
            for m in 1..=3 {
                let a = t_generator(k, &c).unwrap();
                let b = t_generator(m, &c).unwrap();
                assert_eq!(multiply(&a, &b).unwrap(), multiply(&b, &a).unwrap());
            }
        }
    }

    #[test]
    fn square_of_t1_in_rank_two() {
        // t_1² = ξ^{(2,0)} + 2·ξ^{(1,1)}, so NF(ξ^{(2,0)}) = t_1² − 2t_2.
        let c = ctx(2, 2);
        let x = AlgebraElement::from_symbol(corner_symbol(&[2, 0], 2), &c).unwrap();
        let nf = laurent_normal_form(&x).unwrap();
        assert_eq!(nf.to_string(), "t1^2 - 2*t2");
        assert_eq!(laurent_evaluate(&nf, &c).unwrap(), x);
    }

    #[test]
    fn normal_form_of_generators_and_identity() {
        let c = ctx(2, 3);
        assert_eq!(
            laurent_normal_form(&corner_identity(&c)).unwrap(),
            LaurentPoly::one(3, c.field())
        );
        for k in 1..=3 {
            let nf = laurent_normal_form(&t_generator(k, &c).unwrap()).unwrap();
            assert_eq!(nf, LaurentPoly::variable(3, k, c.field()).unwrap());
        }
        let nf_inv = laurent_normal_form(&t_r_inverse(&c)).unwrap();
        assert_eq!(
            nf_inv,
            LaurentPoly::monomial(&[0, 0, -1], CoeffField::one(c.field()), c.field()).unwrap()
        );
    }

    #[test]
    fn round_trip_mixed_shifts() {
        let c = ctx(1, 3);
        for eps in [
            vec![0i64, 0, 0],
            vec![1, 0, 0],
            vec![2, 1, 0],
            vec![3, 0, 0],
            vec![-1, 0, 2],
            vec![-2, -2, -2],
        ] {
            let x = AlgebraElement::from_symbol(corner_symbol(&eps, 1), &c).unwrap();
            let nf = laurent_normal_form(&x).unwrap();
            assert_eq!(laurent_evaluate(&nf, &c).unwrap(), x, "eps = {eps:?}");
        }
    }

    #[test]
    fn normal_form_is_multiplicative() {
        let c = ctx(1, 3);
        let x = AlgebraElement::from_symbol(corner_symbol(&[2, 0, 0], 1), &c).unwrap();
        let y = AlgebraElement::from_symbol(corner_symbol(&[1, 1, -1], 1), &c).unwrap();
        let lhs = laurent_normal_form(&multiply(&x, &y).unwrap()).unwrap();
        let rhs = laurent_normal_form(&x)
            .unwrap()
            .mul(&laurent_normal_form(&y).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn non_corner_input_is_rejected() {
        let c = ctx(2, 2);
        let outside = AlgebraElement::from_symbol(
            canonicalize_pair(&[1, 2], &[1, 2], 2).unwrap().0,
            &c,
        )
        .unwrap();
        assert!(matches!(
            laurent_normal_form(&outside),
            Err(SchurError::Domain(_))
        ));
    }

    #[test]
    fn laurent_ring_axioms_and_validation() {
        let cfg = ();
        let one = LaurentPoly::<BigRational>::one(2, &cfg);
        let t1 = LaurentPoly::<BigRational>::variable(2, 1, &cfg).unwrap();
        let t2 = LaurentPoly::<BigRational>::variable(2, 2, &cfg).unwrap();
        let p = t1.mul(&t2).unwrap().add(&one).unwrap();
        assert_eq!(p.mul(&one).unwrap(), p);
        assert_eq!(p.sub(&p).unwrap(), LaurentPoly::zero(2, &cfg));
        assert!(LaurentPoly::<BigRational>::monomial(&[-1, 0], CoeffField::one(&cfg), &cfg)
            .is_err());
        let tr_inv = LaurentPoly::<BigRational>::monomial(&[0, -1], CoeffField::one(&cfg), &cfg)
            .unwrap();
        assert_eq!(t2.mul(&tr_inv).unwrap(), one);
    }

    #[test]
    fn json_round_trip_and_order() {
        let cfg = ();
        let t1 = LaurentPoly::<BigRational>::variable(2, 1, &cfg).unwrap();
        let t2 = LaurentPoly::<BigRational>::variable(2, 2, &cfg).unwrap();
        let p = t1
            .pow(2)
            .unwrap()
            .sub(&t2.scale(&CoeffField::from_bigint(&cfg, &BigInt::from(2))))
            .unwrap();
        let s = p.to_json_string();
        assert_eq!(
            s,
            "{\"r\":2,\"terms\":[{\"coeff\":\"-2\",\"exps\":[0,1]},{\"coeff\":\"1\",\"exps\":[2,0]}]}"
        );
        let back = LaurentPoly::<BigRational>::from_json(&s, &cfg).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "t1^2 - 2*t2");
    }

    #[test]
    fn graded_dimensions_match_partition_counts() {
        // Partitions of m into at most r parts, via the standard DP.
        fn partition_oracle(r: usize, m: usize) -> u64 {
            let mut table = vec![vec![0u64; m + 1]; r + 1];
            for row in table.iter_mut() {
                row[0] = 1;
            }
            for parts in 1..=r {
                for total in 1..=m {
                    table[parts][total] = table[parts - 1][total]
                        + if total >= parts {
                            table[parts][total - parts]
                        } else {
                            0
                        };
                }
            }
            table[r][m]
        }
        for r in 1..=4 {
            for m in 0..=10 {
                assert_eq!(
                    graded_dimension(r, m as i64).unwrap(),
                    partition_oracle(r, m),
                    "r={r}, m={m}"
                );
            }
        }
        let expected = [1u64, 1, 2, 3, 4, 5, 7, 8, 10];
        for (m, &want) in expected.iter().enumerate() {
            assert_eq!(graded_dimension(3, m as i64).unwrap(), want);
        }
    }
}
