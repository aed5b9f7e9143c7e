//! Canonical basis symbols and orbit canonicalization.
//!
//! A basis symbol ξ is indexed by an orbit of pairs of integer tuples under
//! the diagonal right action of the extended affine symmetric group.  We
//! store the unique orbit representative with top tuple folded into `1..n`
//! and weakly increasing, and the shift folded into the bottom tuple
//! (`bottom = j + n·ε`), sorted ascending within each equal-top block.  With
//! that normalization, orbit equality is plain structural equality.

use crate::SchurError;
use weyl_core::{act, tuple, ExtendedWeylElement, IntTuple, Permutation};

/// The least positive residue of `x` modulo `n`, in `1..=n`.
pub fn least_positive_residue(x: i64, n: i64) -> i64 {
    (x - 1).rem_euclid(n) + 1
}

/// Entrywise least positive residues.
pub fn reduce_tuple(t: &[i64], n: i64) -> IntTuple {
    t.iter().map(|&x| least_positive_residue(x, n)).collect()
}

/// A canonical basis symbol ξ_{top,bottom}.
///
/// Invariants (enforced by the constructors): `top` is weakly increasing
/// with entries in `1..=n`, and `bottom` is weakly ascending within each
/// maximal block of equal `top` entries.  The `Ord` derive sorts by
/// `(top, bottom)` lexicographically, the order used everywhere terms are
/// listed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisSymbol {
    top: IntTuple,
    bottom: IntTuple,
}

impl BasisSymbol {
    /// Builds a symbol from tuples that must already be canonical.
    pub fn new(top: IntTuple, bottom: IntTuple, n: i64) -> Result<Self, SchurError> {
        if top.len() != bottom.len() {
            return Err(SchurError::Group(weyl_core::WeylError::RankMismatch {
                expected: top.len(),
                got: bottom.len(),
            }));
        }
        for &v in &top {
            if v < 1 || v > n {
                return Err(SchurError::OutOfRange { value: v, n });
            }
        }
        for k in 1..top.len() {
            if top[k - 1] > top[k] {
                return Err(SchurError::Domain(format!(
                    "top {top:?} is not weakly increasing"
                )));
            }
            if top[k - 1] == top[k] && bottom[k - 1] > bottom[k] {
                return Err(SchurError::Domain(format!(
                    "bottom {bottom:?} is not ascending within the equal-top blocks of {top:?}"
                )));
            }
        }
        Ok(BasisSymbol { top, bottom })
    }

    pub(crate) fn from_canonical_parts(top: IntTuple, bottom: IntTuple) -> Self {
        BasisSymbol { top, bottom }
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    /// Splits the folded bottom into `(j, ε)` with `bottom = j + n·ε` and
    /// `j` the entrywise least positive residue.
    pub fn split_bottom(&self, n: i64) -> (IntTuple, IntTuple) {
        let j = reduce_tuple(&self.bottom, n);
        let eps = self
            .bottom
            .iter()
            .zip(&j)
            .map(|(&b, &jj)| (b - jj) / n)
            .collect();
        (j, eps)
    }

    /// For a diagonal symbol ξ_{i,i+nε}, the shift ε; `None` if the bottom
    /// residues differ from the top.
    pub fn diagonal_shift(&self, n: i64) -> Option<IntTuple> {
        let (j, eps) = self.split_bottom(n);
        if j == self.top {
            Some(eps)
        } else {
            None
        }
    }
}

/// Brings an arbitrary pair of integer tuples to its canonical symbol,
/// returning the symbol together with a group-element witness `w` such that
/// acting by `w` carries `(a, b)` to `(top, bottom)` exactly.
///
/// Steps: fold the top into `1..=n` by a pure shift (the bottom picks up the
/// same `n·ε₁`), stably sort the top weakly increasing, then sort the bottom
/// ascending within each equal-top block.  Canonicalizing a canonical pair
/// returns it unchanged with the identity witness.
pub fn canonicalize_pair(
    a: &[i64],
    b: &[i64],
    n: i64,
) -> Result<(BasisSymbol, ExtendedWeylElement), SchurError> {
    if n < 1 {
        return Err(SchurError::InvalidContext(format!("n must be ≥ 1, got {n}")));
    }
    if a.len() != b.len() {
        return Err(SchurError::Group(weyl_core::WeylError::RankMismatch {
            expected: a.len(),
            got: b.len(),
        }));
    }
    let r = a.len();

    // Step 1: fold the top into 1..=n; the bottom shifts along.
    let abar = reduce_tuple(a, n);
    let eps1: IntTuple = (0..r)
        .map(|k| {
            abar[k]
                .checked_sub(a[k])
                .map(|d| d / n)
                .ok_or(weyl_core::WeylError::Overflow)
        })
        .collect::<Result<_, _>>()?;
    let b1 = tuple::scaled_add(b, n, &eps1)?;

    // Step 2: stable sort of the top.
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by_key(|&p| (abar[p], p));
    let sigma = Permutation::from_images(order).expect("a reordering is a bijection");
    let top = tuple::permute(&abar, &sigma)?;
    let b2 = tuple::permute(&b1, &sigma)?;

    // Step 3: ascend the bottom within each equal-top block.
    let mut images: Vec<usize> = (0..r).collect();
    let mut lo = 0;
    while lo < r {
        let mut hi = lo + 1;
        while hi < r && top[hi] == top[lo] {
            hi += 1;
        }
        images[lo..hi].sort_by_key(|&p| (b2[p], p));
        lo = hi;
    }
    let tau = Permutation::from_images(images).expect("a reordering is a bijection");
    let bottom = tuple::permute(&b2, &tau)?;

    let witness = ExtendedWeylElement::from_shift(eps1)
        .compose(&ExtendedWeylElement::from_permutation(sigma))?
        .compose(&ExtendedWeylElement::from_permutation(tau))?;
    debug_assert_eq!(act(a, &witness, n).as_deref(), Ok(top.as_slice()));
    debug_assert_eq!(act(b, &witness, n).as_deref(), Ok(bottom.as_slice()));
    Ok((BasisSymbol { top, bottom }, witness))
}

/// Orbit equality of symbols.  Symbols are canonical by construction, so
/// two of them index the same basis element exactly when they are equal.
pub fn orbit_equal(x: &BasisSymbol, y: &BasisSymbol) -> bool {
    x == y
}
