use crate::{tuple, IntTuple, Permutation, WeylError};
use std::fmt;

/// An element $(\sigma, \varepsilon)$ of the extended affine symmetric group
/// $\Sigma_r \ltimes \mathbb{Z}^r$.
///
/// The group [acts on integer tuples on the right](act); the semidirect
/// product law is chosen so that acting by `w` and then by `w2` equals acting
/// by `compose(w, w2)`:
///
/// $(\sigma,\varepsilon)\cdot(\sigma',\varepsilon') =
///  (\sigma\sigma',\ \varepsilon\sigma' + \varepsilon')$
///
/// with $(\varepsilon\sigma')_k = \varepsilon_{\sigma'(k)}$ and
/// $(\sigma\sigma')(k) = \sigma(\sigma'(k))$.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedWeylElement {
    sigma: Permutation,
    shift: IntTuple,
}

impl ExtendedWeylElement {
    /// The identity element on `r` points.
    pub fn identity(r: usize) -> Self {
        ExtendedWeylElement {
            sigma: Permutation::identity(r),
            shift: vec![0; r],
        }
    }

    pub fn new(sigma: Permutation, shift: IntTuple) -> Result<Self, WeylError> {
        if sigma.rank() != shift.len() {
            return Err(WeylError::RankMismatch {
                expected: sigma.rank(),
                got: shift.len(),
            });
        }
        Ok(ExtendedWeylElement { sigma, shift })
    }

    /// A pure place permutation, with zero shift.
    pub fn from_permutation(sigma: Permutation) -> Self {
        let shift = vec![0; sigma.rank()];
        ExtendedWeylElement { sigma, shift }
    }

    /// A pure shift, with identity permutation.
    pub fn from_shift(shift: IntTuple) -> Self {
        ExtendedWeylElement {
            sigma: Permutation::identity(shift.len()),
            shift,
        }
    }

    pub fn rank(&self) -> usize {
        self.sigma.rank()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.is_identity() && self.shift.iter().all(|&e| e == 0)
    }

    /// Group product: acting by `self` and then by `other` equals acting by
    /// `self.compose(other)` (the right-action law).
    pub fn compose(&self, other: &ExtendedWeylElement) -> Result<ExtendedWeylElement, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let sigma = self.sigma.compose(&other.sigma)?;
        let moved = tuple::permute(&self.shift, &other.sigma)?;
        let shift = tuple::add(&moved, &other.shift)?;
        Ok(ExtendedWeylElement { sigma, shift })
    }

    /// Two-sided inverse: $(\sigma,\varepsilon)^{-1} =
    /// (\sigma^{-1}, -\varepsilon\sigma^{-1})$.
    pub fn inverse(&self) -> ExtendedWeylElement {
        let inv = self.sigma.inverse();
        let moved = tuple::permute(&self.shift, &inv)
            .expect("shift length equals permutation rank by construction");
        let shift = moved.iter().map(|&e| -e).collect();
        ExtendedWeylElement { sigma: inv, shift }
    }
}

impl fmt::Debug for ExtendedWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.sigma, self.shift)
    }
}

/// Right action on integer tuples: `result[k] = i[σ(k)] + n·ε[k]`.
///
/// The modulus `n` must be positive; it is the same `n` that bounds the
/// residues of the tuples being permuted, and the action law
/// `act(act(i, w, n), w2, n) = act(i, compose(w, w2), n)` holds for every
/// fixed `n`.
pub fn act(i: &[i64], w: &ExtendedWeylElement, n: i64) -> Result<IntTuple, WeylError> {
    if n <= 0 {
        return Err(WeylError::NonPositiveModulus(n));
    }
    let permuted = tuple::permute(i, w.sigma())?;
    tuple::scaled_add(&permuted, n, w.shift())
}
