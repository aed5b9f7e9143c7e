//! Single-value subcommands: parse inputs, call the kernel, render output.

use crate::{mismatch, usage, Failure, Settings};
use schur_core::{
    canonicalize_pair, format_symbol, from_json, multiply, multiply_oracle, one, parse_element,
    to_json_string, AlgebraContext, AlgebraElement, BasisSymbol, CoeffField, DescribeField,
    FieldDescriptor, SchurError,
};
use schur_structures::{center_element, diagonal_symbol, fg_rewrite, laurent_normal_form};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::io::Read;

/// Resolves an expression argument, reading stdin when it is `"-"`.
/// Only one argument per invocation may come from stdin.
fn read_expr_arg(value: &str, stdin_used: &mut bool) -> Result<String, Failure> {
    if value != "-" {
        return Ok(value.to_string());
    }
    if *stdin_used {
        return Err(usage("\"-\" (stdin) may be used for at most one argument"));
    }
    *stdin_used = true;
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|err| usage(format!("failed to read stdin: {err}")))?;
    Ok(buf)
}

/// Parses an element from expression text or, when the input starts with
/// `{`, from the JSON schema (validated against the session context).
fn parse_input<F>(
    text: &str,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        from_json(trimmed, ctx)
    } else {
        parse_element(trimmed, ctx)
    }
}

/// Parses `"a,b,c"` into exactly `r` integers; positions in errors are
/// byte offsets into the argument.
fn parse_int_list(text: &str, r: usize) -> Result<Vec<i64>, SchurError> {
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let value: i64 = trimmed.parse().map_err(|_| SchurError::Syntax {
            pos: pos + (piece.len() - piece.trim_start().len()),
            msg: format!("expected an integer, found \"{trimmed}\""),
        })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    if out.len() != r {
        return Err(SchurError::Syntax {
            pos: 0,
            msg: format!(
                "expected {r} comma-separated integers, found {}",
                out.len()
            ),
        });
    }
    Ok(out)
}

fn element_output<F>(e: &AlgebraElement<F>, settings: &Settings) -> String
where
    F: CoeffField,
    F::Config: DescribeField,
{
    if settings.json {
        to_json_string(e)
    } else {
        format!("{e}")
    }
}

fn field_value(descriptor: FieldDescriptor) -> Value {
    match descriptor {
        FieldDescriptor::Rational => json!("rational"),
        FieldDescriptor::Gf(p) => json!({ "gf": p }),
    }
}

/// Bilinear extension of the counting oracle, for cross-checking products.
fn oracle_product<F: CoeffField>(
    a: &AlgebraElement<F>,
    b: &AlgebraElement<F>,
    ctx: &AlgebraContext<F>,
) -> Result<AlgebraElement<F>, SchurError> {
    let mut acc = AlgebraElement::zero(ctx);
    for (sx, cx) in a.terms() {
        for (sy, cy) in b.terms() {
            let part = multiply_oracle(sx, sy, ctx)?;
            acc = acc.add(&part.scale(&cx.mul(cy, ctx.field())))?;
        }
    }
    Ok(acc)
}

pub(crate) fn cmd_mul<F>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    a: &str,
    b: &str,
    oracle: bool,
) -> Result<String, Failure>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let mut stdin_used = false;
    let a_text = read_expr_arg(a, &mut stdin_used)?;
    let b_text = read_expr_arg(b, &mut stdin_used)?;
    let x = parse_input(&a_text, ctx)?;
    let y = parse_input(&b_text, ctx)?;
    let product = multiply(&x, &y)?;
    if oracle {
        let counted = oracle_product(&x, &y, ctx)?;
        if counted != product {
            return Err(mismatch(format!(
                "product disagrees with the counting oracle: formula = {product}, oracle = {counted}"
            )));
        }
    }
    Ok(element_output(&product, settings))
}

pub(crate) fn cmd_canon<F>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    top: &str,
    bottom: &str,
) -> Result<String, Failure>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let a = parse_int_list(top, ctx.r())?;
    let b = parse_int_list(bottom, ctx.r())?;
    let (sym, _witness) = canonicalize_pair(&a, &b, ctx.n())?;
    if settings.json {
        let e = AlgebraElement::from_symbol(sym, ctx)?;
        Ok(to_json_string(&e))
    } else {
        Ok(format_symbol(&sym))
    }
}

pub(crate) fn cmd_center<F>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    eps: &str,
) -> Result<String, Failure>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let shift = parse_int_list(eps, ctx.r())?;
    let z = center_element(&shift, ctx)?;
    Ok(element_output(&z, settings))
}

pub(crate) fn cmd_nf<F>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    expr: &str,
) -> Result<String, Failure>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let mut stdin_used = false;
    let text = read_expr_arg(expr, &mut stdin_used)?;
    let e = parse_input(&text, ctx)?;
    let p = laurent_normal_form(&e)?;
    if settings.json {
        Ok(p.to_json_string())
    } else {
        Ok(format!("{p}"))
    }
}

pub(crate) fn cmd_one<F>(ctx: &AlgebraContext<F>, settings: &Settings) -> String
where
    F: CoeffField,
    F::Config: DescribeField,
{
    element_output(&one(ctx), settings)
}

pub(crate) fn cmd_rewrite<F>(
    ctx: &AlgebraContext<F>,
    settings: &Settings,
    symbol: &str,
) -> Result<String, Failure>
where
    F: CoeffField,
    F::Config: DescribeField,
{
    let mut stdin_used = false;
    let text = read_expr_arg(symbol, &mut stdin_used)?;
    let e = parse_input(&text, ctx)?;
    let mut terms = e.terms();
    let sym = match terms.next() {
        Some((sym, coeff)) if *coeff == F::one(ctx.field()) && terms.next().is_none() => {
            sym.clone()
        }
        _ => {
            return Err(SchurError::Domain(
                "rewrite expects a single basis symbol with coefficient 1".to_string(),
            )
            .into())
        }
    };
    let raw = fg_rewrite(&sym, ctx)?;

    // Aggregate on (canonical diagonal factor, generator): different shift
    // vectors can name the same diagonal symbol.
    let mut acc: BTreeMap<(BasisSymbol, BasisSymbol), F> = BTreeMap::new();
    for term in raw {
        let diag = diagonal_symbol(sym.top(), &term.diag_shift, ctx)?;
        let entry = acc
            .entry((diag, term.generator))
            .or_insert_with(|| F::zero(ctx.field()));
        *entry = entry.add(&term.coeff, ctx.field());
    }
    acc.retain(|_, coeff| !coeff.is_zero());

    if settings.json {
        let terms: Vec<Value> = acc
            .iter()
            .map(|((diag, gen), coeff)| {
                json!({
                    "coeff": coeff.coeff_string(),
                    "diagonal": { "top": diag.top(), "bottom": diag.bottom() },
                    "generator": { "top": gen.top(), "bottom": gen.bottom() },
                })
            })
            .collect();
        let doc = json!({
            "field": field_value(ctx.descriptor()),
            "n": ctx.n(),
            "r": ctx.r(),
            "top": sym.top(),
            "terms": terms,
        });
        Ok(doc.to_string())
    } else {
        Ok(format_rewrite_text(&acc))
    }
}

/// Renders an aggregated rewrite as `c*xi(..)*xi(..) ± …`, the diagonal
/// factor first; unit coefficients are omitted, zero terms never occur.
fn format_rewrite_text<F: CoeffField>(acc: &BTreeMap<(BasisSymbol, BasisSymbol), F>) -> String {
    if acc.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (ix, ((diag, gen), coeff)) in acc.iter().enumerate() {
        let rendered = coeff.coeff_string();
        let (negative, magnitude) = match rendered.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, rendered),
        };
        if ix == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if magnitude != "1" {
            out.push_str(&magnitude);
            out.push('*');
        }
        out.push_str(&format_symbol(diag));
        out.push('*');
        out.push_str(&format_symbol(gen));
    }
    out
}
