//! Deterministic property suites.
//!
//! Every suite draws from the documented 64-bit linear congruential
//! generator seeded by `--seed`, runs a fixed number of cases, and prints a
//! plain-text report.  The same flags always produce byte-identical
//! reports; each suite reseeds the generator itself, so a suite's section
//! inside `all` matches its standalone report line for line.

use crate::{usage, Failure, Settings};
use num_bigint::BigInt;
use schur_core::{
    canonical_symbols_in_range, canonicalize_pair, multiply, multiply_oracle, multiply_symbols,
    parse_element, AlgebraContext, AlgebraElement, CoeffField, Lcg, SchurError,
};
use schur_structures::{
    center_element, center_normal_form, fg_generators, fg_reexpand, fg_rewrite,
    is_absolutely_successive, laurent_evaluate, laurent_normal_form, weyl_to_basis, LaurentPoly,
};
use std::collections::BTreeSet;
use weyl_core::tuple::permute;
use weyl_core::{
    double_cosets, enumerate_elements, stabilizer, ExtendedWeylElement, IntTuple, Permutation,
    YoungSubgroup,
};

const SUITES: [&str; 8] = [
    "associativity",
    "oracle",
    "center",
    "laurent",
    "schur-weyl",
    "rewrite",
    "cosets",
    "all",
];

/// Accumulates report lines; `failed` flips on the first failing check.
struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    fn new(name: &str, settings: &Settings) -> Self {
        Report {
            lines: vec![
                format!("# suite {name}"),
                format!(
                    "context: n={} r={} field={} seed={} cases={} bound={}",
                    settings.n,
                    settings.r,
                    settings.field_text,
                    settings.seed,
                    settings.cases,
                    settings.bound
                ),
            ],
            failed: false,
        }
    }

    /// A counting check: `pass` of `total` units succeeded; on any failure
    /// the first counterexample and a reproduction command are appended.
    fn counted(
        &mut self,
        label: &str,
        pass: u64,
        total: u64,
        unit: &str,
        first_failure: Option<String>,
        settings: &Settings,
        suite: &str,
    ) {
        self.lines
            .push(format!("check {label}: {pass}/{total} {unit} pass"));
        if pass != total {
            self.failed = true;
            if let Some(detail) = first_failure {
                self.lines.push(format!("counterexample: {detail}"));
            }
            self.lines.push(repro_line(settings, suite));
        }
    }

    /// A single fixed identity; `detail` is shown when it fails.
    fn golden(
        &mut self,
        label: &str,
        ok: bool,
        detail: &str,
        settings: &Settings,
        suite: &str,
    ) {
        if ok {
            self.lines.push(format!("check {label}: pass"));
        } else {
            self.failed = true;
            self.lines.push(format!("check {label}: FAIL"));
            self.lines.push(format!("counterexample: {detail}"));
            self.lines.push(repro_line(settings, suite));
        }
    }

    fn skip(&mut self, label: &str, reason: &str) {
        self.lines.push(format!("check {label}: skipped ({reason})"));
    }

    fn render(&self) -> String {
        let mut text = self.lines.join("\n");
        text.push('\n');
        text.push_str(if self.failed { "result: FAIL" } else { "result: PASS" });
        text
    }
}

fn repro_line(settings: &Settings, suite: &str) -> String {
    format!(
        "repro: schur suite {suite} --n {} --r {} --field {} --seed {} --cases {} --bound {}",
        settings.n, settings.r, settings.field_text, settings.seed, settings.cases, settings.bound
    )
}

pub(crate) fn cmd_suite<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    name: &str,
) -> Result<(), Failure> {
    if !SUITES.contains(&name) {
        return Err(usage(format!(
            "unknown suite \"{name}\" (expected one of: {})",
            SUITES.join(", ")
        )));
    }
    let all = name == "all";
    let wants = |suite: &str| all || name == suite;
    let mut report = Report::new(name, settings);

    if wants("associativity") {
        suite_associativity(ctx, settings, &mut report)?;
    }
    if wants("oracle") {
        suite_oracle(ctx, settings, &mut report)?;
    }
    if wants("center") {
        suite_center(ctx, settings, &mut report)?;
    }
    if wants("laurent") {
        suite_laurent(ctx, settings, &mut report)?;
    }
    if wants("schur-weyl") {
        if ctx.n() < ctx.r() as i64 {
            if all {
                report.skip("schur-weyl law", "requires n >= r");
            } else {
                return Err(SchurError::Domain(format!(
                    "the schur-weyl suite requires n >= r, got n = {}, r = {}",
                    ctx.n(),
                    ctx.r()
                ))
                .into());
            }
        } else {
            suite_schur_weyl(ctx, settings, &mut report)?;
        }
    }
    if wants("rewrite") {
        suite_rewrite(ctx, settings, &mut report)?;
    }
    if wants("cosets") {
        if ctx.r() > 6 {
            if all {
                report.skip("coset composition", "brute force is capped at r <= 6");
            } else {
                return Err(SchurError::Domain(format!(
                    "the cosets suite brute-forces within the symmetric group and is capped at r <= 6, got r = {}",
                    ctx.r()
                ))
                .into());
            }
        } else {
            suite_cosets(ctx, settings, &mut report)?;
        }
    }

    println!("{}", report.render());
    if report.failed {
        Err(Failure {
            code: 4,
            message: "one or more suite checks failed".to_string(),
        })
    } else {
        Ok(())
    }
}

/// (xy)z = x(yz) on random canonical symbol triples.
fn suite_associativity<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let (n, r) = (ctx.n(), ctx.r());
    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        let x = rng.sample_symbol(n, r, settings.bound);
        let y = rng.sample_symbol(n, r, settings.bound);
        let z = rng.sample_symbol(n, r, settings.bound);
        let xy = multiply_symbols(&x, &y, ctx)?;
        let yz = multiply_symbols(&y, &z, ctx)?;
        let lhs = multiply(&xy, &AlgebraElement::from_symbol(z.clone(), ctx)?)?;
        let rhs = multiply(&AlgebraElement::from_symbol(x.clone(), ctx)?, &yz)?;
        if lhs == rhs {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("x={x} y={y} z={z}"));
        }
    }
    report.counted(
        "associativity",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "associativity",
    );
    Ok(())
}

/// The double-coset product formula against the counting oracle, on every
/// ordered pair of canonical symbols with bottoms in [1-bound, n+bound].
fn suite_oracle<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let symbols =
        canonical_symbols_in_range(ctx.n(), ctx.r(), 1 - settings.bound, ctx.n() + settings.bound)?;
    let total = (symbols.len() as u64) * (symbols.len() as u64);
    let mut pass = 0;
    let mut first = None;
    for x in &symbols {
        for y in &symbols {
            let formula = multiply_symbols(x, y, ctx)?;
            let counted = multiply_oracle(x, y, ctx)?;
            if formula == counted {
                pass += 1;
            } else if first.is_none() {
                first = Some(format!("x={x} y={y}"));
            }
        }
    }
    report.counted("oracle", pass, total, "pairs", first, settings, "oracle");
    Ok(())
}

/// Central elements commute with sampled symbols; the normal form is
/// multiplicative; at n=2, r=2 the basic expansion is checked verbatim.
fn suite_center<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let (n, r) = (ctx.n(), ctx.r());

    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        let eps: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
        let z = center_element(&eps, ctx)?;
        let x = rng.sample_symbol(n, r, settings.bound);
        let xe = AlgebraElement::from_symbol(x.clone(), ctx)?;
        if multiply(&z, &xe)? == multiply(&xe, &z)? {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("eps={eps:?} x={x}"));
        }
    }
    report.counted(
        "center commutation",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "center",
    );

    let pairs = settings.cases.div_ceil(10);
    let mut pass = 0;
    let mut first = None;
    for _ in 0..pairs {
        let a: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
        let b: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
        let za = center_element(&a, ctx)?;
        let zb = center_element(&b, ctx)?;
        let lhs = center_normal_form(&multiply(&za, &zb)?)?;
        let rhs = center_normal_form(&za)?.mul(&center_normal_form(&zb)?)?;
        if lhs == rhs {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("eps={a:?} eps'={b:?}"));
        }
    }
    report.counted(
        "center normal form",
        pass,
        pairs,
        "pairs",
        first,
        settings,
        "center",
    );

    if n == 2 && r == 2 {
        let z = center_element(&[1, 0], ctx)?;
        let expected = parse_element("xi(1,1;3,1) + xi(1,2;3,2) + xi(1,2;1,4) + xi(2,2;4,2)", ctx)?;
        report.golden(
            "center expansion of eps=(1,0)",
            z == expected,
            &format!("got {z}"),
            settings,
            "center",
        );
    }
    Ok(())
}

/// Laurent normal form: monomial round trips and multiplicativity inside
/// the all-ones corner.
fn suite_laurent<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let r = ctx.r();

    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        // Exponents: t_1..t_{r-1} in 0..=4 (polynomial), t_r in -4..=4.
        let exps: IntTuple = (0..r)
            .map(|k| {
                if k + 1 < r {
                    rng.in_range(0, 4)
                } else {
                    rng.in_range(-4, 4)
                }
            })
            .collect();
        let mut draw = rng.in_range(-4, 4);
        if draw == 0 {
            draw = 1;
        }
        let coeff = F::from_bigint(ctx.field(), &BigInt::from(draw));
        let p = LaurentPoly::monomial(&exps, coeff, ctx.field())?;
        let evaluated = laurent_evaluate(&p, ctx)?;
        if laurent_normal_form(&evaluated)? == p {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("monomial {p}"));
        }
    }
    report.counted(
        "laurent round trip",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "laurent",
    );

    let pairs = settings.cases.div_ceil(5);
    let mut pass = 0;
    let mut first = None;
    for _ in 0..pairs {
        let x = sample_corner_element(&mut rng, ctx)?;
        let y = sample_corner_element(&mut rng, ctx)?;
        let lhs = laurent_normal_form(&multiply(&x, &y)?)?;
        let rhs = laurent_normal_form(&x)?.mul(&laurent_normal_form(&y)?)?;
        if lhs == rhs {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("x={x} y={y}"));
        }
    }
    report.counted(
        "laurent normal form multiplicative",
        pass,
        pairs,
        "pairs",
        first,
        settings,
        "laurent",
    );
    Ok(())
}

/// A two-term element of the all-ones corner: shifts drawn entrywise in
/// [-2, 2], one coefficient draw per term as in element sampling.
fn sample_corner_element<F: CoeffField>(
    rng: &mut Lcg,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    let (n, r) = (ctx.n(), ctx.r());
    let u: IntTuple = vec![1; r];
    let mut out = AlgebraElement::zero(ctx);
    for _ in 0..2 {
        let bottom: IntTuple = (0..r).map(|k| u[k] + n * rng.in_range(-2, 2)).collect();
        let (sym, _) = canonicalize_pair(&u, &bottom, n)?;
        let mut draw = rng.in_range(-4, 4);
        if draw == 0 {
            draw = 1;
        }
        out.add_assign_term(sym, F::from_bigint(ctx.field(), &BigInt::from(draw)))?;
    }
    Ok(out)
}

/// The group-algebra law at n >= r: the symbol of w times the symbol of w'
/// is the symbol of the composite that acts by w' and then by w.
fn suite_schur_weyl<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let r = ctx.r();
    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        let w = sample_weyl_element(&mut rng, r);
        let wp = sample_weyl_element(&mut rng, r);
        let lhs = multiply_symbols(&weyl_to_basis(&w, ctx)?, &weyl_to_basis(&wp, ctx)?, ctx)?;
        let composed = wp.compose(&w)?;
        let rhs = AlgebraElement::from_symbol(weyl_to_basis(&composed, ctx)?, ctx)?;
        if lhs == rhs {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("w={w:?} w'={wp:?}"));
        }
    }
    report.counted(
        "schur-weyl law",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "schur-weyl",
    );
    Ok(())
}

/// One extended Weyl element: a Fisher-Yates shuffle (r-1 draws, from the
/// top index down) followed by r shift draws in [-3, 3].
fn sample_weyl_element(rng: &mut Lcg, r: usize) -> ExtendedWeylElement {
    let mut images: Vec<usize> = (0..r).collect();
    for k in (1..r).rev() {
        let j = rng.below((k + 1) as u64) as usize;
        images.swap(k, j);
    }
    let sigma = Permutation::from_images(images).expect("shuffled images are a permutation");
    let shift: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
    ExtendedWeylElement::new(sigma, shift).expect("lengths match")
}

/// Rewriting over the diagonal subalgebra: every output generator has an
/// absolutely successive shift and the combination re-expands exactly; the
/// generator enumeration is compared against brute force.
fn suite_rewrite<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let (n, r) = (ctx.n(), ctx.r());
    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        let top = rng.sample_top(n, r);
        let base: IntTuple = (0..r).map(|_| rng.in_range(1, n)).collect();
        let shift: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
        let bottom: IntTuple = (0..r).map(|k| base[k] + n * shift[k]).collect();
        let (x, _) = canonicalize_pair(&top, &bottom, n)?;
        let terms = fg_rewrite(&x, ctx)?;
        let successive = terms.iter().all(|t| {
            let (_, eps) = t.generator.split_bottom(n);
            is_absolutely_successive(&eps)
        });
        let expanded = fg_reexpand(x.top(), &terms, ctx)?;
        if successive && expanded == AlgebraElement::from_symbol(x.clone(), ctx)? {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("x={x}"));
        }
    }
    report.counted(
        "rewrite re-expansion",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "rewrite",
    );

    if r <= 6 {
        // Independent enumeration: scan {0..r-1}^r for absolutely
        // successive tuples and compare with the generator index set.
        let u: IntTuple = vec![1; r];
        let listed: BTreeSet<IntTuple> = fg_generators(&u, &u, ctx)?
            .into_iter()
            .map(|g| g.eps)
            .collect();
        let mut expected = BTreeSet::new();
        let mut counter = vec![0i64; r];
        loop {
            if is_absolutely_successive(&counter) {
                expected.insert(counter.clone());
            }
            let mut k = 0;
            loop {
                if k == r {
                    break;
                }
                counter[k] += 1;
                if counter[k] < r as i64 {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
            if k == r {
                break;
            }
        }
        report.golden(
            "rewrite generator enumeration",
            listed == expected,
            &format!("listed {} generators, brute force found {}", listed.len(), expected.len()),
            settings,
            "rewrite",
        );
    } else {
        report.skip("rewrite generator enumeration", "brute force is capped at r <= 6");
    }
    Ok(())
}

/// Composing outer and inner double-coset representatives enumerates the
/// composite coset space exactly once, verified by brute-force orbit
/// invariants.
fn suite_cosets<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    report: &mut Report,
) -> Result<(), SchurError> {
    let mut rng = Lcg::new(settings.seed);
    let r = ctx.r();
    let g = YoungSubgroup::full(r);
    let mut pass = 0;
    let mut first = None;
    for _ in 0..settings.cases {
        let v: IntTuple = (0..r).map(|_| rng.in_range(1, r as i64)).collect();
        let w: IntTuple = (0..r).map(|_| rng.in_range(1, r as i64)).collect();
        let wp: IntTuple = (0..r).map(|_| rng.in_range(1, r as i64)).collect();
        let h1 = stabilizer(&[&v])?;
        let h2 = stabilizer(&[&w])?;
        let h3 = h2.refine(&stabilizer(&[&wp])?)?;

        let mut composed = Vec::new();
        for sigma in &double_cosets(&h1, &g, &h2)? {
            let conj = stabilizer(&[&permute(&v, sigma)?])?;
            let inner_left = conj.refine(&h2)?;
            for eta in &double_cosets(&inner_left, &h2, &h3)? {
                composed.push(sigma.compose(eta)?);
            }
        }

        let h1_elems = enumerate_elements(&h1)?;
        let h3_elems = enumerate_elements(&h3)?;
        let mut got: Vec<Vec<usize>> = composed
            .iter()
            .map(|x| coset_invariant(x, &h1_elems, &h3_elems))
            .collect();
        let mut want: Vec<Vec<usize>> = double_cosets(&h1, &g, &h3)?
            .iter()
            .map(|x| coset_invariant(x, &h1_elems, &h3_elems))
            .collect();
        got.sort();
        want.sort();
        let distinct = got.windows(2).all(|pair| pair[0] != pair[1]);
        if got == want && distinct {
            pass += 1;
        } else if first.is_none() {
            first = Some(format!("v={v:?} w={w:?} w'={wp:?}"));
        }
    }
    report.counted(
        "coset composition",
        pass,
        settings.cases,
        "cases",
        first,
        settings,
        "cosets",
    );
    Ok(())
}

/// The lexicographically least image vector in H·x·K.
fn coset_invariant(x: &Permutation, h: &[Permutation], k: &[Permutation]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for left in h {
        let lx = left.compose(x).expect("ranks agree");
        for right in k {
            let images = lx.compose(right).expect("ranks agree").images().to_vec();
            if best.as_ref().is_none_or(|b| images < *b) {
                best = Some(images);
            }
        }
    }
    best.expect("subgroups are nonempty")
}
