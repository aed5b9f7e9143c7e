//! The acceptance gate: twelve independent end-to-end criteria over the
//! whole workspace.  Each test prints exactly one line
//!
//! ```text
//! ACCEPTANCE <k> <label>: PASS|FAIL
//! ```
//!
//! (visible under `cargo test --test acceptance -- --nocapture`) and fails
//! the build on any deviation — there are no tolerances.

use num_integer::Integer;
use schur_core::{
    canonical_symbols_in_range, canonicalize_pair, idempotent, multiply, multiply_oracle,
    multiply_symbols, one, parse_element, reduce_tuple, weakly_increasing_tuples, AlgebraContext,
    AlgebraElement, BigRational, CoeffField, Fp, Lcg, SchurError,
};
use schur_structures::{
    b_subalgebra_factorize, center_element, center_normal_form, diagonal_symbol, fg_generators,
    fg_reexpand, fg_rewrite, graded_dimension, is_absolutely_successive, laurent_evaluate,
    laurent_normal_form, matrix_laurent_form, maximality_witness_shift, restrict_to_subset,
    subset_idempotent, LaurentPoly,
};
use std::process::Command;
use weyl_core::{stabilizer, ExtendedWeylElement, IntTuple, Permutation};

/// Records a failure, keeping only the first few in detail.
fn note(failures: &mut Vec<String>, detail: String) {
    if failures.len() < 5 {
        failures.push(detail);
    } else if failures.len() == 5 {
        failures.push("... further failures suppressed".to_string());
    }
}

/// Prints the criterion verdict, then panics on failure.
fn conclude(k: usize, label: &str, outcome: Result<Vec<String>, SchurError>) {
    let failures = match outcome {
        Ok(f) => f,
        Err(e) => vec![format!("unexpected error: {e}")],
    };
    if failures.is_empty() {
        println!("ACCEPTANCE {k} {label}: PASS");
    } else {
        println!("ACCEPTANCE {k} {label}: FAIL");
        panic!(
            "acceptance criterion {k} ({label}) failed:\n{}",
            failures.join("\n")
        );
    }
}

fn rational(n: i64, r: usize) -> AlgebraContext<BigRational> {
    AlgebraContext::rational(n, r).expect("valid context")
}

fn gf(n: i64, r: usize, p: u64) -> AlgebraContext<Fp> {
    AlgebraContext::gf(n, r, p).expect("valid context")
}

// ---------------------------------------------------------------------------
// 1. The double-coset product formula agrees with the independent counting
//    oracle on every pair of canonical symbols with bottoms in [1-2n, 3n].
// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_products_match_the_counting_oracle_exhaustively() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        for (n, r) in [(1i64, 2usize), (1, 3), (2, 2), (3, 2), (2, 3)] {
            let ctx = rational(n, r);
            let symbols = canonical_symbols_in_range(n, r, 1 - 2 * n, 3 * n)?;
            for x in &symbols {
                for y in &symbols {
                    let formula = multiply_symbols(x, y, &ctx)?;
                    let counted = multiply_oracle(x, y, &ctx)?;
                    if formula != counted {
                        note(
                            &mut failures,
                            format!(
                                "(n={n}, r={r}) {x} * {y}: formula {formula}, oracle {counted}"
                            ),
                        );
                    }
                }
            }
        }
        Ok(failures)
    }
    conclude(1, "oracle agreement", run());
}

// ---------------------------------------------------------------------------
// 2. Multiplication is associative over the rationals, GF(2), and GF(3).
// ---------------------------------------------------------------------------

fn associativity_failures<F: CoeffField>(
    ctx: &AlgebraContext<F>,
    seed: u64,
    cases: usize,
    tag: &str,
    failures: &mut Vec<String>,
) -> Result<(), SchurError> {
    let (n, r) = (ctx.n(), ctx.r());
    let bound = 3 * n;
    let mut rng = Lcg::new(seed);
    for _ in 0..cases {
        let x = rng.sample_symbol(n, r, bound);
        let y = rng.sample_symbol(n, r, bound);
        let z = rng.sample_symbol(n, r, bound);
        let xy = multiply_symbols(&x, &y, ctx)?;
        let yz = multiply_symbols(&y, &z, ctx)?;
        let lhs = multiply(&xy, &AlgebraElement::from_symbol(z.clone(), ctx)?)?;
        let rhs = multiply(&AlgebraElement::from_symbol(x.clone(), ctx)?, &yz)?;
        if lhs != rhs {
            note(
                failures,
                format!("{tag}: ({x} * {y}) * {z} = {lhs} but {x} * ({y} * {z}) = {rhs}"),
            );
        }
    }
    Ok(())
}

#[test]
fn acceptance_02_multiplication_is_associative_across_fields() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        for (k, &(n, r)) in [(1i64, 3usize), (2, 2), (2, 3), (3, 2)].iter().enumerate() {
            let seed = 200 + k as u64;
            associativity_failures(
                &rational(n, r),
                seed,
                1000,
                &format!("rational (n={n}, r={r})"),
                &mut failures,
            )?;
            for p in [2u64, 3] {
                associativity_failures(
                    &gf(n, r, p),
                    seed + 10 * p,
                    1000,
                    &format!("gf:{p} (n={n}, r={r})"),
                    &mut failures,
                )?;
            }
        }
        Ok(failures)
    }
    conclude(2, "associativity", run());
}

// ---------------------------------------------------------------------------
// 3. The identity element: two-sided unit on random elements, orthogonal
//    diagonal idempotents, and one-sided absorption on single symbols.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_03_the_identity_acts_as_a_two_sided_unit() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        for (n, r, seed) in [(2i64, 3usize, 300u64), (3, 2, 301)] {
            let ctx = rational(n, r);
            let unit = one(&ctx);
            let mut rng = Lcg::new(seed);
            for _ in 0..100 {
                let e = rng.sample_element(&ctx, 3, 3 * n);
                if multiply(&unit, &e)? != e {
                    note(&mut failures, format!("(n={n}, r={r}) one * e != e for e = {e}"));
                }
                if multiply(&e, &unit)? != e {
                    note(&mut failures, format!("(n={n}, r={r}) e * one != e for e = {e}"));
                }
            }

            let values: Vec<i64> = (1..=n).collect();
            let tops = weakly_increasing_tuples(&values, r);
            for i in &tops {
                for j in &tops {
                    let product = multiply(&idempotent(i, &ctx)?, &idempotent(j, &ctx)?)?;
                    let expected = if i == j {
                        idempotent(i, &ctx)?
                    } else {
                        AlgebraElement::zero(&ctx)
                    };
                    if product != expected {
                        note(
                            &mut failures,
                            format!("(n={n}, r={r}) idempotents {i:?}, {j:?} multiply to {product}"),
                        );
                    }
                }
            }

            for _ in 0..100 {
                let s = rng.sample_symbol(n, r, 3 * n);
                let e = AlgebraElement::from_symbol(s.clone(), &ctx)?;
                let left = multiply(&idempotent(s.top(), &ctx)?, &e)?;
                if left != e {
                    note(&mut failures, format!("(n={n}, r={r}) top idempotent does not absorb {s}"));
                }
                let right = multiply(&e, &idempotent(&reduce_tuple(s.bottom(), n), &ctx)?)?;
                if right != e {
                    note(
                        &mut failures,
                        format!("(n={n}, r={r}) bottom-residue idempotent does not absorb {s}"),
                    );
                }
            }
        }
        Ok(failures)
    }
    conclude(3, "identity element", run());
}

// ---------------------------------------------------------------------------
// 4. Summand comparison at (3, 3): whenever the stabilizer of j refines the
//    stabilizer of i, the product identity xi_{i,j} xi_{j,i} = [S_i : S_j]
//    xi_{i,i} holds in every characteristic, and over GF(2) the summand
//    splits exactly when the index is odd.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_04_refinement_pairs_produce_split_summands() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let ctx_q = rational(3, 3);
        let ctx_2 = gf(3, 3, 2);
        let tops = weakly_increasing_tuples(&[1, 2, 3], 3);
        let mut pairs: Vec<(IntTuple, IntTuple)> = Vec::new();
        for i in &tops {
            let stab_i = stabilizer(&[i])?;
            for j in &tops {
                let stab_j = stabilizer(&[j])?;
                if stab_j.refines(&stab_i) {
                    pairs.push((i.clone(), j.clone()));
                }
            }
        }
        let mut rng = Lcg::new(400);
        for _ in 0..20 {
            let (i, j) = &pairs[rng.below(pairs.len() as u64) as usize];
            let over_q = schur_structures::summand_data(i, j, &ctx_q)?;
            if !over_q.identity_holds {
                note(&mut failures, format!("rational identity fails for i={i:?}, j={j:?}"));
            }
            if !over_q.split_over_field {
                note(&mut failures, format!("index {} vanished over Q for i={i:?}, j={j:?}", over_q.index));
            }
            let over_2 = schur_structures::summand_data(i, j, &ctx_2)?;
            if !over_2.identity_holds {
                note(&mut failures, format!("GF(2) identity fails for i={i:?}, j={j:?}"));
            }
            if over_2.index != over_q.index {
                note(&mut failures, format!("index differs across fields for i={i:?}, j={j:?}"));
            }
            if over_2.split_over_field != over_2.index.is_odd() {
                note(
                    &mut failures,
                    format!(
                        "GF(2) splitting for i={i:?}, j={j:?}: index {} but split = {}",
                        over_2.index, over_2.split_over_field
                    ),
                );
            }
        }
        Ok(failures)
    }
    conclude(4, "summand splitting", run());
}

// ---------------------------------------------------------------------------
// 5. The all-ones corner at (1, 4) is the Laurent ring K[t1..t4, t4^{-1}]:
//    monomials round-trip, normal forms are multiplicative, and the graded
//    dimensions match an independent partition count.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_05_the_laurent_corner_normalizes_and_counts_correctly() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let (n, r) = (1i64, 4usize);
        let ctx = rational(n, r);
        let mut rng = Lcg::new(500);

        for _ in 0..200 {
            let exps: IntTuple = (0..r)
                .map(|k| if k + 1 < r { rng.in_range(0, 4) } else { rng.in_range(-4, 4) })
                .collect();
            let mut c = rng.in_range(-4, 4);
            if c == 0 {
                c = 1;
            }
            let coeff = BigRational::from_bigint(ctx.field(), &c.into());
            let p = LaurentPoly::monomial(&exps, coeff, ctx.field())?;
            let back = laurent_normal_form(&laurent_evaluate(&p, &ctx)?)?;
            if back != p {
                note(&mut failures, format!("monomial {exps:?} round-trips to a different polynomial"));
            }
        }

        let u = vec![1i64; r];
        let sample_corner = |rng: &mut Lcg| -> Result<AlgebraElement<BigRational>, SchurError> {
            let mut e = AlgebraElement::zero(&ctx);
            for _ in 0..2 {
                let bottom: IntTuple = (0..r).map(|_| 1 + n * rng.in_range(-2, 2)).collect();
                let (sym, _) = canonicalize_pair(&u, &bottom, n)?;
                let mut c = rng.in_range(-4, 4);
                if c == 0 {
                    c = 1;
                }
                e.add_assign_term(sym, BigRational::from_bigint(ctx.field(), &c.into()))?;
            }
            Ok(e)
        };
        for _ in 0..100 {
            let a = sample_corner(&mut rng)?;
            let b = sample_corner(&mut rng)?;
            let direct = laurent_normal_form(&multiply(&a, &b)?)?;
            let factored = laurent_normal_form(&a)?.mul(&laurent_normal_form(&b)?)?;
            if direct != factored {
                note(&mut failures, format!("normal form not multiplicative on {a} and {b}"));
            }
        }

        let expected = [1u64, 1, 2, 3, 4, 5, 7, 8, 10];
        for (m, &want) in expected.iter().enumerate() {
            let got = graded_dimension(3, m as i64)?;
            // Independent count: partitions of m into at most 3 parts.
            let m = m as i64;
            let mut brute = 0u64;
            for a in 0..=m {
                for b in 0..=a {
                    let c = m - a - b;
                    if (0..=b).contains(&c) {
                        brute += 1;
                    }
                }
            }
            if got != want || brute != want {
                note(
                    &mut failures,
                    format!("degree {m}: graded dimension {got}, partition count {brute}, expected {want}"),
                );
            }
        }
        Ok(failures)
    }
    conclude(5, "laurent corner", run());
}

// ---------------------------------------------------------------------------
// 6. Central elements commute with everything, their normal forms multiply,
//    and the rank-two expansion matches the hand computation.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_06_central_elements_commute_and_multiply_in_normal_form() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let (n, r) = (2i64, 3usize);
        let ctx = rational(n, r);
        let mut rng = Lcg::new(600);
        for _ in 0..10 {
            let eps: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let c = center_element(&eps, &ctx)?;
            for _ in 0..50 {
                let s = AlgebraElement::from_symbol(rng.sample_symbol(n, r, 3 * n), &ctx)?;
                if multiply(&c, &s)? != multiply(&s, &c)? {
                    note(&mut failures, format!("center element for {eps:?} fails to commute with {s}"));
                }
            }
        }
        for _ in 0..20 {
            let ea: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let eb: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let ca = center_element(&ea, &ctx)?;
            let cb = center_element(&eb, &ctx)?;
            let direct = center_normal_form(&multiply(&ca, &cb)?)?;
            let factored = center_normal_form(&ca)?.mul(&center_normal_form(&cb)?)?;
            if direct != factored {
                note(&mut failures, format!("central normal form not multiplicative on {ea:?}, {eb:?}"));
            }
        }
        let ctx22 = rational(2, 2);
        let expected = parse_element("xi(1,1;1,3) + xi(1,2;1,4) + xi(1,2;3,2) + xi(2,2;2,4)", &ctx22)?;
        if center_element(&[1, 0], &ctx22)? != expected {
            note(&mut failures, "rank-two expansion of eps = (1,0) is wrong".to_string());
        }
        Ok(failures)
    }
    conclude(6, "center", run());
}

// ---------------------------------------------------------------------------
// 7. At n >= r the distinct-values corner multiplies by the contravariant
//    group law of the extended Weyl group.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_07_the_corner_follows_the_contravariant_group_law() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let (n, r) = (3i64, 3usize);
        let ctx = rational(n, r);
        let mut rng = Lcg::new(700);
        let sample_weyl = |rng: &mut Lcg| -> Result<ExtendedWeylElement, SchurError> {
            let mut images: Vec<usize> = (0..r).collect();
            for k in (1..r).rev() {
                let j = rng.below(k as u64 + 1) as usize;
                images.swap(k, j);
            }
            let shift: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            Ok(ExtendedWeylElement::new(Permutation::from_images(images)?, shift)?)
        };
        for _ in 0..500 {
            let w = sample_weyl(&mut rng)?;
            let wp = sample_weyl(&mut rng)?;
            let lhs = multiply_symbols(
                &schur_structures::weyl_to_basis(&w, &ctx)?,
                &schur_structures::weyl_to_basis(&wp, &ctx)?,
                &ctx,
            )?;
            let composed = wp.compose(&w)?;
            let rhs = AlgebraElement::from_symbol(
                schur_structures::weyl_to_basis(&composed, &ctx)?,
                &ctx,
            )?;
            if lhs != rhs {
                note(&mut failures, format!("group law fails on {w:?} and {wp:?}"));
            }
        }
        Ok(failures)
    }
    conclude(7, "group-algebra law", run());
}

// ---------------------------------------------------------------------------
// 8. At r = 1 the algebra is matrices over Laurent polynomials: products of
//    elementary symbols follow delta(col, row) with added powers.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_08_rank_one_elements_multiply_like_elementary_matrices() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let n = 3i64;
        let ctx = rational(n, 1);
        let mut rng = Lcg::new(800);
        for _ in 0..200 {
            let x = rng.sample_symbol(n, 1, 3 * n);
            let y = rng.sample_symbol(n, 1, 3 * n);
            let product = multiply_symbols(&x, &y, &ctx)?;
            let mx = matrix_laurent_form(&AlgebraElement::from_symbol(x.clone(), &ctx)?)?;
            let my = matrix_laurent_form(&AlgebraElement::from_symbol(y.clone(), &ctx)?)?;
            let (a, b) = (&mx[0], &my[0]);
            if a.col == b.row {
                let bottom = vec![b.col + n * (a.power + b.power)];
                let expected = AlgebraElement::from_symbol(
                    canonicalize_pair(&[a.row], &bottom, n)?.0,
                    &ctx,
                )?;
                if product != expected {
                    note(&mut failures, format!("{x} * {y} = {product}, expected {expected}"));
                }
            } else if !product.is_zero() {
                note(&mut failures, format!("{x} * {y} = {product}, expected 0"));
            }
        }
        Ok(failures)
    }
    conclude(8, "matrix form", run());
}

// ---------------------------------------------------------------------------
// 9. Restriction to the subset N = {1, 3} of the value range is an algebra
//    isomorphism from the xi_N corner of S(3, 2) onto S(2, 2).
// ---------------------------------------------------------------------------

#[test]
fn acceptance_09_corner_restriction_is_an_isomorphism_onto_the_smaller_algebra() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let big = rational(3, 2);
        let small = rational(2, 2);
        let subset = [1i64, 3];
        let xi_n = subset_idempotent(&subset, &big)?;
        if restrict_to_subset(&subset, &xi_n)? != one(&small) {
            note(&mut failures, "xi_N does not restrict to the identity".to_string());
        }
        let mut rng = Lcg::new(900);
        for _ in 0..200 {
            let a = rng.sample_element(&big, 3, 9);
            let b = rng.sample_element(&big, 3, 9);
            let pa = multiply(&multiply(&xi_n, &a)?, &xi_n)?;
            let pb = multiply(&multiply(&xi_n, &b)?, &xi_n)?;
            let direct = restrict_to_subset(&subset, &multiply(&pa, &pb)?)?;
            let factored = multiply(
                &restrict_to_subset(&subset, &pa)?,
                &restrict_to_subset(&subset, &pb)?,
            )?;
            if direct != factored {
                note(&mut failures, format!("restriction not multiplicative on {pa} and {pb}"));
            }
        }
        Ok(failures)
    }
    conclude(9, "corner restriction", run());
}

// ---------------------------------------------------------------------------
// 10. Finite generation: rewriting lands on absolutely successive shifts and
//     re-expands to the input exactly; at r = 2 the generator shifts are
//     precisely (0,0), (0,1), (1,0).
// ---------------------------------------------------------------------------

#[test]
fn acceptance_10_rewriting_terminates_on_the_successive_generators() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let (n, r) = (2i64, 3usize);
        let ctx = rational(n, r);
        let mut rng = Lcg::new(1000);
        for _ in 0..100 {
            let top = rng.sample_top(n, r);
            let base: IntTuple = (0..r).map(|_| rng.in_range(1, n)).collect();
            let eps: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let bottom: IntTuple = base.iter().zip(&eps).map(|(&j, &e)| j + n * e).collect();
            let (sym, _) = canonicalize_pair(&top, &bottom, n)?;
            let terms = fg_rewrite(&sym, &ctx)?;
            for term in &terms {
                let (_, shift) = term.generator.split_bottom(n);
                if !is_absolutely_successive(&shift) {
                    note(
                        &mut failures,
                        format!("{sym}: generator {} has shift {shift:?}", term.generator),
                    );
                }
            }
            let back = fg_reexpand(sym.top(), &terms, &ctx)?;
            if back != AlgebraElement::from_symbol(sym.clone(), &ctx)? {
                note(&mut failures, format!("{sym} re-expands to {back}"));
            }
        }
        let ctx22 = rational(2, 2);
        let shifts: Vec<IntTuple> = fg_generators::<BigRational>(&[1, 2], &[1, 1], &ctx22)?
            .into_iter()
            .map(|g| g.eps)
            .collect();
        if shifts != [vec![0, 0], vec![0, 1], vec![1, 0]] {
            note(&mut failures, format!("rank-two generator shifts are {shifts:?}"));
        }
        Ok(failures)
    }
    conclude(10, "finite generation", run());
}

// ---------------------------------------------------------------------------
// 11. The diagonal subalgebra B_i is commutative, maximal (every symbol
//     outside it fails to commute with a witness element), and its elements
//     factor into the Laurent-style generators.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_11_diagonal_subalgebras_are_maximal_commutative() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let (n, r) = (2i64, 3usize);
        let ctx = rational(n, r);
        let mut rng = Lcg::new(1100);
        for _ in 0..300 {
            let i = rng.sample_top(n, r);
            let e1: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let e2: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let d1 = diagonal_symbol(&i, &e1, &ctx)?;
            let d2 = diagonal_symbol(&i, &e2, &ctx)?;
            if multiply_symbols(&d1, &d2, &ctx)? != multiply_symbols(&d2, &d1, &ctx)? {
                note(&mut failures, format!("diagonal symbols {d1} and {d2} do not commute"));
            }
        }

        let mut rejections = 0;
        let mut attempts = 0;
        while rejections < 50 && attempts < 5000 {
            attempts += 1;
            let sym = rng.sample_symbol(n, r, 3 * n);
            if sym.diagonal_shift(n).is_some() {
                continue;
            }
            rejections += 1;
            let witness = diagonal_symbol(sym.top(), &maximality_witness_shift(&sym), &ctx)?;
            if multiply_symbols(&witness, &sym, &ctx)? == multiply_symbols(&sym, &witness, &ctx)? {
                note(&mut failures, format!("{sym} commutes with its witness {witness}"));
            }
        }
        if rejections < 50 {
            note(&mut failures, format!("only {rejections} non-diagonal samples in {attempts} draws"));
        }

        for _ in 0..100 {
            let i = rng.sample_top(n, r);
            let eps: IntTuple = (0..r).map(|_| rng.in_range(-3, 3)).collect();
            let factors = b_subalgebra_factorize(&i, &eps, &ctx)?;
            let mut acc = idempotent(&i, &ctx)?;
            for f in &factors {
                acc = multiply(&acc, &AlgebraElement::from_symbol(f.clone(), &ctx)?)?;
            }
            let expected = AlgebraElement::from_symbol(diagonal_symbol(&i, &eps, &ctx)?, &ctx)?;
            if acc != expected {
                note(
                    &mut failures,
                    format!("factors of i={i:?}, eps={eps:?} multiply to {acc}, expected {expected}"),
                );
            }
        }
        Ok(failures)
    }
    conclude(11, "maximal commutative", run());
}

// ---------------------------------------------------------------------------
// 12. The randomized suite is reproducible: two runs of the same seeded
//     invocation produce byte-identical passing reports.
// ---------------------------------------------------------------------------

#[test]
fn acceptance_12_the_suite_report_is_reproducible_byte_for_byte() {
    fn run() -> Result<Vec<String>, SchurError> {
        let mut failures = Vec::new();
        let invoke = || {
            Command::new(env!("CARGO_BIN_EXE_schur"))
                .args(["suite", "all", "--n", "2", "--r", "2", "--seed", "42"])
                .output()
                .expect("binary runs")
        };
        let first = invoke();
        let second = invoke();
        if first.status.code() != Some(0) {
            note(
                &mut failures,
                format!(
                    "first run exited with {:?}: {}",
                    first.status.code(),
                    String::from_utf8_lossy(&first.stderr)
                ),
            );
        }
        if second.status.code() != Some(0) {
            note(&mut failures, format!("second run exited with {:?}", second.status.code()));
        }
        if first.stdout != second.stdout {
            note(&mut failures, "the two reports differ".to_string());
        }
        let text = String::from_utf8_lossy(&first.stdout);
        if !text.trim_end().ends_with("result: PASS") {
            note(&mut failures, format!("report does not end in a passing verdict:\n{text}"));
        }
        Ok(failures)
    }
    conclude(12, "suite determinism", run());
}
