use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permcore::{Partition, PermGroup, Permutation};

pub type ProjectionFn = Arc<dyn Fn(&Permutation) -> Result<Permutation> + Send + Sync>;

/// A permutation representation `G -> Sym(m)` given by a projection map.
///
/// Kernel and preimages come from a BSGS of the diagonal action on
/// `n + m` points, whose base starts with the `m` target points: the kernel
/// is the pointwise stabiliser of those points, and a preimage is read off
/// the first `m` transversals.
#[derive(Clone)]
pub struct ActionHom {
    source: PermGroup,
    image: PermGroup,
    combined: PermGroup,
    project: ProjectionFn,
}

impl fmt::Debug for ActionHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ActionHom")
            .field("source", &self.source)
            .field("image", &self.image)
            .finish()
    }
}

impl ActionHom {
    pub fn new(
        source: &PermGroup,
        target_degree: usize,
        project: impl Fn(&Permutation) -> Result<Permutation> + Send + Sync + 'static,
    ) -> Result<Self> {
        let project: ProjectionFn = Arc::new(project);
        let n = source.degree();
        let image_gens = source
            .generators()
            .iter()
            .map(|g| {
                let img = project(g)?;
                if img.degree() != target_degree {
                    return Err(Error::DegreeMismatch {
                        expected: target_degree,
                        found: img.degree(),
                    });
                }
                Ok(img)
            })
            .collect::<Result<Vec<_>>>()?;
        let combined_gens = source
            .generators()
            .iter()
            .zip(&image_gens)
            .map(|(g, img)| g.direct_sum(img))
            .collect();
        let prefix: Vec<usize> = (n..n + target_degree).collect();
        let combined =
            PermGroup::from_parts(n + target_degree, combined_gens).with_base_prefix(&prefix);
        Ok(ActionHom {
            source: source.clone(),
            image: PermGroup::from_parts(target_degree, image_gens),
            combined,
            project,
        })
    }

    /// Action on the blocks of a `G`-invariant partition.
    pub fn on_partition(source: &PermGroup, partition: &Partition) -> Result<Self> {
        if partition.degree() != source.degree() {
            return Err(Error::DegreeMismatch {
                expected: source.degree(),
                found: partition.degree(),
            });
        }
        if !partition.is_invariant_under(source) {
            return Err(Error::NotInvariant);
        }
        let p = partition.clone();
        Self::new(source, partition.num_blocks(), move |g| {
            p.induced_permutation(g)
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn target_degree(&self) -> usize {
        self.image.degree()
    }

    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        (self.project)(g)
    }

    pub fn projection(&self) -> ProjectionFn {
        self.project.clone()
    }

    pub fn kernel(&self) -> PermGroup {
        let n = self.source.degree();
        let m = self.target_degree();
        let target: Vec<usize> = (n..n + m).collect();
        let domain: Vec<usize> = (0..n).collect();
        let stab = self.combined.pointwise_stabilizer(&target);
        let gens = stab
            .generators()
            .iter()
            .map(|g| g.restrict(&domain).expect("source points are invariant"))
            .collect();
        PermGroup::from_parts(n, gens)
    }

    pub fn kernel_order(&self) -> u128 {
        self.source.order() / self.image.order()
    }

    pub fn is_faithful(&self) -> bool {
        self.image.order() == self.source.order()
    }

    /// Some element of the source mapping to `target`, or `None` when
    /// `target` is not in the image.
    pub fn preimage(&self, target: &Permutation) -> Option<Permutation> {
        let n = self.source.degree();
        let m = self.target_degree();
        if target.degree() != m {
            return None;
        }
        let bsgs = self.combined.bsgs();
        let mut residual = target.clone();
        let mut result = Permutation::identity(n + m);
        for level in bsgs.levels.iter().take(m) {
            let beta = level.point - n;
            let y = residual.apply(beta) + n;
            let u = level.transversal[y].as_ref()?;
            let on_target: Vec<usize> = (0..m).map(|i| u.apply(n + i) - n).collect();
            let on_target = Permutation::from_images_unchecked(on_target);
            residual = residual.compose(&on_target.inverse());
            result = u.compose(&result);
        }
        debug_assert!(residual.is_identity());
        let domain: Vec<usize> = (0..n).collect();
        Some(
            result
                .restrict(&domain)
                .expect("source points are invariant"),
        )
    }
}

/// Elements mapping every block of `partition` to itself.
pub fn kernel_on_partition(group: &PermGroup, partition: &Partition) -> Result<PermGroup> {
    Ok(ActionHom::on_partition(group, partition)?.kernel())
}

/// The action on blocks: `image()` is the group on blocks, `project()` the homomorphism.
pub fn induced_action_on_partition(group: &PermGroup, partition: &Partition) -> Result<ActionHom> {
    ActionHom::on_partition(group, partition)
}

/// The group induced on `domain` by the stabiliser of `fixed`, with points
/// relabelled by their position in `domain`.
pub fn local_restriction(group: &PermGroup, fixed: usize, domain: &[usize]) -> Result<PermGroup> {
    group.stabilizer(fixed).restrict(domain)
}
