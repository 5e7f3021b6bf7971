use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// A set partition of `{0, .., degree - 1}`.
///
/// Blocks are sorted internally and ordered by their smallest point, so two
/// partitions with the same blocks compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; degree];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in block {
                if x >= degree {
                    return Err(Error::InvalidPartition(format!("point {x} out of range")));
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("point {x} in two blocks")));
                }
                block_of[x] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidPartition(
                "blocks do not cover every point".into(),
            ));
        }
        Ok(Self::from_labels(&block_of))
    }

    /// Partition whose blocks are the fibres of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let degree = labels.len();
        let mut renumber = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; degree];
        for (x, &l) in labels.iter().enumerate() {
            let idx = *renumber.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(x);
            block_of[x] = idx;
        }
        Partition {
            degree,
            blocks,
            block_of,
        }
    }

    pub fn singletons(degree: usize) -> Self {
        Self::from_labels(&(0..degree).collect::<Vec<_>>())
    }

    pub fn whole(degree: usize) -> Self {
        Self::from_labels(&vec![0; degree])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn block_labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.blocks.len() == self.degree
    }

    /// Uniform block size, if every block has the same size.
    pub fn block_size(&self) -> Option<usize> {
        let s = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == s).then_some(s)
    }

    /// The permutation of blocks induced by `g`, or `NotInvariant` when `g`
    /// splits some block.
    pub fn induced_permutation(&self, g: &Permutation) -> Result<Permutation> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        let mut images = Vec::with_capacity(self.blocks.len());
        for block in &self.blocks {
            let target = self.block_of[g.apply(block[0])];
            if block.iter().any(|&x| self.block_of[g.apply(x)] != target) {
                return Err(Error::NotInvariant);
            }
            images.push(target);
        }
        Permutation::from_images(images).map_err(|_| Error::NotInvariant)
    }

    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        group
            .generators()
            .iter()
            .all(|g| self.induced_permutation(g).is_ok())
    }
}
