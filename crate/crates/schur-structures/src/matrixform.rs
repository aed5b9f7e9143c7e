//! The rank-one case: matrices over Laurent polynomials.
//!
//! At `r = 1` every basis symbol is ξ_{(a),(b + n·e)} with `a, b ∈ 1..=n`,
//! and multiplication is exactly that of the elementary matrices
//! `E_{a,b}·t^e` in n×n matrices over K[t, t⁻¹]:
//!
//! ```text
//! (a, b, e) · (c, d, e′) = δ_{b,c} · (a, d, e + e′).
//! ```

use schur_core::{AlgebraElement, CoeffField, SchurError};

/// One matrix entry: row, column, power of `t`, and coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixEntry<F> {
    pub row: i64,
    pub col: i64,
    pub power: i64,
    pub coeff: F,
}

/// Reads an `r = 1` element as a list of matrix entries, in canonical
/// symbol order.
pub fn matrix_laurent_form<F: CoeffField>(
    e: &AlgebraElement<F>,
) -> Result<Vec<MatrixEntry<F>>, SchurError> {
    let ctx = e.ctx();
    if ctx.r() != 1 {
        return Err(SchurError::Domain(format!(
            "the matrix form needs r = 1, got r = {}",
            ctx.r()
        )));
    }
    Ok(e.terms()
        .map(|(sym, coeff)| {
            let (j, eps) = sym.split_bottom(ctx.n());
            MatrixEntry {
                row: sym.top()[0],
                col: j[0],
                power: eps[0],
                coeff: coeff.clone(),
            }
        })
        .collect())
}
