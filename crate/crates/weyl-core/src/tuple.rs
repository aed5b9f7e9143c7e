//! Integer tuples and the elementwise arithmetic the product formulas use.
//!
//! All arithmetic is checked: the shifts appearing in desk-scale computations
//! are tiny, so an overflow always indicates a bug or hostile input and must
//! fail loudly rather than wrap.

use crate::{Permutation, WeylError};

/// An integer `r`-tuple; the ambient rank is the vector length.
pub type IntTuple = Vec<i64>;

/// Place permutation $(i\sigma)_k = i_{\sigma(k)}$.
pub fn permute(i: &[i64], sigma: &Permutation) -> Result<IntTuple, WeylError> {
    if i.len() != sigma.rank() {
        return Err(WeylError::RankMismatch {
            expected: sigma.rank(),
            got: i.len(),
        });
    }
    Ok((0..i.len()).map(|k| i[sigma.apply(k)]).collect())
}

/// Elementwise sum.
pub fn add(a: &[i64], b: &[i64]) -> Result<IntTuple, WeylError> {
    if a.len() != b.len() {
        return Err(WeylError::RankMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(WeylError::Overflow))
        .collect()
}

/// Elementwise difference.
pub fn sub(a: &[i64], b: &[i64]) -> Result<IntTuple, WeylError> {
    if a.len() != b.len() {
        return Err(WeylError::RankMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_sub(y).ok_or(WeylError::Overflow))
        .collect()
}

/// `a + n·e`, the additive half of the affine action.
pub fn scaled_add(a: &[i64], n: i64, e: &[i64]) -> Result<IntTuple, WeylError> {
    if a.len() != e.len() {
        return Err(WeylError::RankMismatch {
            expected: a.len(),
            got: e.len(),
        });
    }
    a.iter()
        .zip(e)
        .map(|(&x, &y)| {
            n.checked_mul(y)
                .and_then(|ny| x.checked_add(ny))
                .ok_or(WeylError::Overflow)
        })
        .collect()
}
