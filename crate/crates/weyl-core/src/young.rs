use crate::{enumeration_bound, Permutation, WeylError};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

/// A Young subgroup of $\Sigma_r$: the permutations preserving each block of
/// a set partition of the positions `0, …, r-1`.
///
/// Every subgroup arising in the product formulas is of this form — a
/// stabilizer of one or more tuples, or an intersection of such stabilizers
/// (which is again the stabilizer of the combined tuples).  Blocks are stored
/// sorted ascending and ordered by least element, so equal subgroups compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungSubgroup {
    rank: usize,
    blocks: Vec<Vec<usize>>,
}

impl YoungSubgroup {
    /// The trivial subgroup: every block a singleton.
    pub fn trivial(r: usize) -> Self {
        YoungSubgroup {
            rank: r,
            blocks: (0..r).map(|k| vec![k]).collect(),
        }
    }

    /// The full symmetric group $\Sigma_r$ as a one-block partition.
    pub fn full(r: usize) -> Self {
        YoungSubgroup {
            rank: r,
            blocks: if r == 0 { vec![] } else { vec![(0..r).collect()] },
        }
    }

    /// Builds a subgroup from blocks of zero-based positions, normalizing the
    /// block order and validating that they partition `0..r`.
    pub fn from_blocks(blocks: Vec<Vec<usize>>, r: usize) -> Result<Self, WeylError> {
        let mut seen = vec![false; r];
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(WeylError::NotAPartition("empty block".into()));
            }
            block.sort_unstable();
            for &p in &block {
                if p >= r || seen[p] {
                    return Err(WeylError::NotAPartition(format!(
                        "position {p} repeated or out of range 0..{r}"
                    )));
                }
                seen[p] = true;
            }
            normalized.push(block);
        }
        if seen.iter().any(|&s| !s) {
            return Err(WeylError::NotAPartition(format!(
                "blocks do not cover 0..{r}"
            )));
        }
        normalized.sort_by_key(|b| b[0]);
        Ok(YoungSubgroup {
            rank: r,
            blocks: normalized,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Blocks sorted by least element, each sorted ascending.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// For each position, the index of its block in [`Self::blocks`].
    fn block_id(&self) -> Vec<usize> {
        let mut id = vec![0; self.rank];
        for (b, block) in self.blocks.iter().enumerate() {
            for &p in block {
                id[p] = b;
            }
        }
        id
    }

    /// `true` if every block of `self` is contained in a block of `other`,
    /// i.e. `self` is a subgroup of `other`.
    pub fn refines(&self, other: &YoungSubgroup) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let id = other.block_id();
        self.blocks
            .iter()
            .all(|block| block.iter().all(|&p| id[p] == id[block[0]]))
    }

    /// Common refinement: the partition into intersections of blocks, which
    /// is the subgroup intersection.  Commutative, associative, idempotent.
    pub fn refine(&self, other: &YoungSubgroup) -> Result<YoungSubgroup, WeylError> {
        if self.rank != other.rank {
            return Err(WeylError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let (a, b) = (self.block_id(), other.block_id());
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for p in 0..self.rank {
            groups.entry((a[p], b[p])).or_default().push(p);
        }
        YoungSubgroup::from_blocks(groups.into_values().collect(), self.rank)
    }

    /// `true` if the permutation maps each block onto itself.
    pub fn contains(&self, sigma: &Permutation) -> bool {
        if sigma.rank() != self.rank {
            return false;
        }
        let id = self.block_id();
        (0..self.rank).all(|k| id[sigma.apply(k)] == id[k])
    }

    /// Adjacent transpositions within each block; these generate the
    /// subgroup.
    fn generators(&self) -> Vec<Permutation> {
        let mut gens = Vec::new();
        for block in &self.blocks {
            for pair in block.windows(2) {
                gens.push(Permutation::transposition(self.rank, pair[0], pair[1]));
            }
        }
        gens
    }
}

impl fmt::Debug for YoungSubgroup {
    /// One-based blocks, e.g. `{{1,2},{3}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// The simultaneous stabilizer of one or more tuples: the Young subgroup
/// whose blocks are the maximal position sets on which *all* given tuples
/// are constant.
///
/// For a single tuple this is $\Sigma_i$; for several it is the intersection
/// $\Sigma_i \cap \Sigma_j \cap \dots$, and it equals the common refinement
/// of the individual stabilizers.
pub fn stabilizer(tuples: &[&[i64]]) -> Result<YoungSubgroup, WeylError> {
    let Some(first) = tuples.first() else {
        return Err(WeylError::EmptyStabilizer);
    };
    let r = first.len();
    for t in tuples {
        if t.len() != r {
            return Err(WeylError::RankMismatch {
                expected: r,
                got: t.len(),
            });
        }
    }
    // Group positions by their column of values across all tuples.
    let mut groups: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for p in 0..r {
        let column: Vec<i64> = tuples.iter().map(|t| t[p]).collect();
        groups.entry(column).or_default().push(p);
    }
    YoungSubgroup::from_blocks(groups.into_values().collect(), r)
}

/// $|H| = \prod_b |b|!$ as an exact big integer.
pub fn subgroup_order(h: &YoungSubgroup) -> BigUint {
    let mut order = BigUint::one();
    for block in h.blocks() {
        for k in 2..=block.len() {
            order *= BigUint::from(k);
        }
    }
    order
}

/// The index $[H : K]$ for a Young subgroup `K` refining `H`, as an exact
/// big integer.
pub fn subgroup_index(h: &YoungSubgroup, k: &YoungSubgroup) -> Result<BigUint, WeylError> {
    if !k.refines(h) {
        return Err(WeylError::NotARefinement);
    }
    let (q, rem) = subgroup_order(h).div_rem(&subgroup_order(k));
    debug_assert!(rem == BigUint::from(0u32), "Lagrange: |K| divides |H|");
    Ok(q)
}

fn check_bound(h: &YoungSubgroup) -> Result<u64, WeylError> {
    let order = subgroup_order(h);
    let bound = enumeration_bound();
    match u64::try_from(&order) {
        Ok(o) if o <= bound => Ok(o),
        _ => Err(WeylError::EnumerationBound {
            order: u128::try_from(&order).unwrap_or(u128::MAX),
            bound,
        }),
    }
}

/// All elements of a Young subgroup, sorted lexicographically by image
/// sequence.  Fails if the order exceeds [`enumeration_bound`].
pub fn enumerate_elements(h: &YoungSubgroup) -> Result<Vec<Permutation>, WeylError> {
    let order = check_bound(h)? as usize;
    // Per-block orderings, combined into full image sequences.
    let mut images_set: Vec<Vec<usize>> = vec![(0..h.rank()).collect()];
    for block in h.blocks() {
        let orderings = orderings_of(block);
        let mut next = Vec::with_capacity(images_set.len() * orderings.len());
        for base in &images_set {
            for ord in &orderings {
                let mut images = base.clone();
                for (slot, &value) in block.iter().zip(ord) {
                    images[*slot] = value;
                }
                next.push(images);
            }
        }
        images_set = next;
    }
    debug_assert_eq!(images_set.len(), order);
    images_set.sort_unstable();
    images_set
        .into_iter()
        .map(Permutation::from_images)
        .collect()
}

/// All orderings of a set of positions (the block's internal symmetric
/// group, written on the block's values).
fn orderings_of(block: &[usize]) -> Vec<Vec<usize>> {
    let mut result = Vec::new();
    let mut current = block.to_vec();
    permute_rec(&mut current, 0, &mut result);
    result
}

fn permute_rec(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for k in start..items.len() {
        items.swap(start, k);
        permute_rec(items, start + 1, out);
        items.swap(start, k);
    }
}

/// One representative per double coset $H\delta K$ inside `G`, each the
/// lexicographically smallest image sequence in its coset, returned in
/// ascending order.
///
/// `H` and `K` must refine `G`.  The cosets partition `G`; representatives
/// are found by scanning `G` in lexicographic order and flooding each new
/// coset with the generators of `H` (on the left) and `K` (on the right).
pub fn double_cosets(
    h: &YoungSubgroup,
    g: &YoungSubgroup,
    k: &YoungSubgroup,
) -> Result<Vec<Permutation>, WeylError> {
    if !h.refines(g) || !k.refines(g) {
        return Err(WeylError::NotARefinement);
    }
    let elements = enumerate_elements(g)?;
    let h_gens = h.generators();
    let k_gens = k.generators();
    let mut visited: HashSet<Vec<usize>> = HashSet::with_capacity(elements.len());
    let mut reps = Vec::new();
    for delta in &elements {
        if visited.contains(delta.images()) {
            continue;
        }
        reps.push(delta.clone());
        // Flood the orbit H·delta·K.
        let mut queue = VecDeque::new();
        visited.insert(delta.images().to_vec());
        queue.push_back(delta.clone());
        while let Some(x) = queue.pop_front() {
            for gen in &h_gens {
                let y = gen.compose(&x).expect("ranks agree");
                if visited.insert(y.images().to_vec()) {
                    queue.push_back(y);
                }
            }
            for gen in &k_gens {
                let y = x.compose(gen).expect("ranks agree");
                if visited.insert(y.images().to_vec()) {
                    queue.push_back(y);
                }
            }
        }
    }
    debug_assert_eq!(visited.len(), elements.len(), "cosets must cover G");
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn young(blocks: &[&[usize]], r: usize) -> YoungSubgroup {
        // One-based blocks for readability in tests.
        YoungSubgroup::from_blocks(
            blocks
                .iter()
                .map(|b| b.iter().map(|&p| p - 1).collect())
                .collect(),
            r,
        )
        .unwrap()
    }

    #[test]
    fn stabilizer_groups_equal_entries() {
        assert_eq!(
            stabilizer(&[&[1, 1, 2]]).unwrap(),
            young(&[&[1, 2], &[3]], 3)
        );
    }

    #[test]
    fn stabilizer_of_two_tuples_is_the_refinement() {
        assert_eq!(
            stabilizer(&[&[1, 1, 2], &[3, 4, 4]]).unwrap(),
            YoungSubgroup::trivial(3)
        );
    }

    #[test]
    fn constant_tuple_has_full_stabilizer() {
        assert_eq!(stabilizer(&[&[7, 7, 7, 7]]).unwrap(), YoungSubgroup::full(4));
    }

    #[test]
    fn orders_are_products_of_factorials() {
        assert_eq!(subgroup_order(&young(&[&[1, 2], &[3]], 3)), 2u32.into());
        assert_eq!(subgroup_order(&YoungSubgroup::trivial(3)), 1u32.into());
        assert_eq!(subgroup_order(&YoungSubgroup::full(4)), 24u32.into());
    }

    #[test]
    fn index_divides_exactly() {
        let h = YoungSubgroup::full(3);
        let k = young(&[&[1, 2], &[3]], 3);
        assert_eq!(subgroup_index(&h, &k).unwrap(), 3u32.into());
        assert_eq!(subgroup_index(&k, &k).unwrap(), 1u32.into());
        let quads = young(&[&[1, 2], &[3, 4]], 4);
        assert_eq!(
            subgroup_index(&quads, &YoungSubgroup::trivial(4)).unwrap(),
            4u32.into()
        );
    }

    #[test]
    fn index_requires_refinement() {
        let h = young(&[&[1, 2], &[3]], 3);
        let k = young(&[&[1], &[2, 3]], 3);
        assert_eq!(subgroup_index(&h, &k), Err(WeylError::NotARefinement));
    }

    #[test]
    fn enumerate_small_groups() {
        assert_eq!(enumerate_elements(&YoungSubgroup::trivial(2)).unwrap().len(), 1);
        let s2 = enumerate_elements(&YoungSubgroup::full(2)).unwrap();
        assert_eq!(s2.len(), 2);
        assert!(s2[0].is_identity());
        let pairs = enumerate_elements(&young(&[&[1, 2], &[3, 4]], 4)).unwrap();
        assert_eq!(pairs.len(), 4);
        // Must agree with a brute-force filter of all of S_4.
        let all = enumerate_elements(&YoungSubgroup::full(4)).unwrap();
        let h = young(&[&[1, 2], &[3, 4]], 4);
        let filtered: Vec<_> = all.into_iter().filter(|p| h.contains(p)).collect();
        assert_eq!(pairs, filtered);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let elements = enumerate_elements(&young(&[&[1, 3], &[2, 4, 5]], 5)).unwrap();
        assert_eq!(elements.len(), 12);
        for pair in elements.windows(2) {
            assert!(pair[0].images() < pair[1].images());
        }
    }

    #[test]
    fn double_cosets_of_the_trivial_group() {
        let t = YoungSubgroup::trivial(2);
        let reps = double_cosets(&t, &t, &t).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn trivial_h_and_k_give_one_coset_per_element() {
        let g = YoungSubgroup::full(2);
        let t = YoungSubgroup::trivial(2);
        let reps = double_cosets(&t, &g, &t).unwrap();
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn s3_modulo_s2_on_both_sides_has_two_cosets() {
        let g = YoungSubgroup::full(3);
        let h = young(&[&[1, 2], &[3]], 3);
        let reps = double_cosets(&h, &g, &h).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps[0].is_identity());
    }

    #[test]
    fn double_cosets_require_refinement() {
        let g = young(&[&[1, 2], &[3]], 3);
        let h = young(&[&[1], &[2, 3]], 3);
        assert_eq!(
            double_cosets(&h, &g, &g),
            Err(WeylError::NotARefinement)
        );
    }
}
