use crate::WeylError;
use std::fmt;

/// A permutation of the positions `0, …, r-1`, stored as its image sequence:
/// `images[k]` is $\sigma(k)$.
///
/// Positions are zero-based everywhere in code; the one-based convention of
/// the written formulas appears only in display output and JSON.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// The identity on `r` points.
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (0..r).collect(),
        }
    }

    /// Builds a permutation from zero-based images, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, WeylError> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &im in &images {
            if im >= r || seen[im] {
                return Err(WeylError::NotAPermutation(format!(
                    "images {images:?} are not a bijection of 0..{r}"
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from one-based images as they appear in formulas
    /// and JSON.
    pub fn from_one_based(images: &[usize]) -> Result<Self, WeylError> {
        for &im in images {
            if im == 0 {
                return Err(WeylError::NotAPermutation(format!(
                    "one-based images {images:?} contain 0"
                )));
            }
        }
        Self::from_images(images.iter().map(|&im| im - 1).collect())
    }

    /// Swaps positions `a` and `b`, fixing everything else.
    pub fn transposition(r: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..r).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// Number of points.
    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// $\sigma(k)$ for a zero-based position `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    /// The zero-based image sequence.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// One-based images, for display and serialization.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&im| im + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &im)| k == im)
    }

    /// Group product $\sigma\sigma'$, the permutation with
    /// $(\sigma\sigma')(k) = \sigma(\sigma'(k))$.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.rank()];
        for (k, &im) in self.images.iter().enumerate() {
            images[im] = k;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.one_based_images())
    }
}

impl fmt::Display for Permutation {
    /// One-based image list, e.g. `[2, 1, 3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_based_images())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_composes_trivially() {
        let p = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let id = Permutation::identity(3);
        assert_eq!(p.compose(&id).unwrap(), p);
        assert_eq!(id.compose(&p).unwrap(), p);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // (pq)(k) = p(q(k)): with p = [2,1,3] and q = [3,1,2] (one-based),
        // (pq)(1) = p(3) = 3.
        let p = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        let q = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq.one_based_images(), vec![3, 2, 1]);
    }

    #[test]
    fn inverse_is_two_sided() {
        let p = Permutation::from_one_based(&[4, 1, 3, 2]).unwrap();
        let inv = p.inverse();
        assert!(p.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&p).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![1, 2]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }
}
