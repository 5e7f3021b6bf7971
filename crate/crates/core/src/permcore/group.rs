use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::permcore::bsgs::{Bsgs, Elements};
use crate::permcore::{Partition, Permutation};

/// A permutation group given by generators.
///
/// The base and strong generating set is built on first use and cached; the
/// cache is a `OnceLock`, so a group can be shared between threads.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    base_prefix: Vec<usize>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            base_prefix: self.base_prefix.clone(),
            bsgs: self.bsgs.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(
            f,
            "PermGroup(degree {}, <{}>)",
            self.degree,
            gens.join(", ")
        )
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self::from_parts(degree, generators))
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>) -> Self {
        PermGroup {
            degree,
            generators,
            base_prefix: Vec::new(),
            bsgs: OnceLock::new(),
        }
    }

    fn from_bsgs(degree: usize, generators: Vec<Permutation>, bsgs: Bsgs) -> Self {
        let base_prefix = bsgs.base();
        let cell = OnceLock::new();
        let _ = cell.set(bsgs);
        PermGroup {
            degree,
            generators,
            base_prefix,
            bsgs: cell,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new())
    }

    /// Same group, with a BSGS whose base begins with `prefix`.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            base_prefix: prefix.to_vec(),
            bsgs: OnceLock::new(),
        }
    }

    /// Group generated by `self` and `extra`.
    pub fn with_generator(&self, extra: Permutation) -> Self {
        let mut gens = self.generators.clone();
        gens.push(extra);
        Self::from_parts(self.degree, gens)
    }

    pub(crate) fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.degree, &self.generators, &self.base_prefix))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn base(&self) -> Vec<usize> {
        self.bsgs().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.bsgs().level_generators(0)
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.bsgs().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| g[i].commutes_with(&g[j])))
    }

    /// True iff every generator of `sub` stays in `sub` under conjugation by
    /// every generator of `self`.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.generators.iter().all(|g| {
            sub.generators
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(g)))
        })
    }

    pub fn is_normal_subgroup(&self, sub: &PermGroup) -> bool {
        sub.is_subgroup_of(self) && self.normalizes(sub)
    }

    /// Smallest generator-invariant set containing `point`, sorted.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self
            .orbit_transversal(point)
            .into_iter()
            .map(|(x, _)| x)
            .collect();
        orbit.sort_unstable();
        orbit
    }

    /// Orbit of `point` in breadth-first order, each point paired with an
    /// element mapping `point` to it (a Schreier tree over the generators).
    pub fn orbit_transversal(&self, point: usize) -> Vec<(usize, Permutation)> {
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[point] = Some(self.identity());
        let mut order = vec![point];
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if reps[y].is_none() {
                    reps[y] = Some(reps[x].as_ref().unwrap().compose(g));
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        order
            .into_iter()
            .map(|x| (x, reps[x].take().unwrap()))
            .collect()
    }

    pub fn orbit_partition(&self) -> Partition {
        let mut uf = crate::unionfind::UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.apply(x));
            }
        }
        Partition::from_labels(&uf.labels())
    }

    pub fn num_orbits(&self) -> usize {
        self.orbit_partition().num_blocks()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, point: usize) -> PermGroup {
        self.pointwise_stabilizer(&[point])
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        let bsgs = if self.base_prefix.starts_with(points) {
            self.bsgs().clone()
        } else {
            Bsgs::build(self.degree, &self.generators, points)
        };
        let gens = bsgs.level_generators(points.len());
        let suffix = bsgs.suffix(points.len());
        Self::from_bsgs(self.degree, gens, suffix)
    }

    /// True iff every point stabiliser is trivial.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbit_partition()
            .blocks()
            .iter()
            .all(|b| b.len() as u128 == order)
    }

    /// Elements in lexicographic order of base images.
    pub fn elements(&self) -> Elements<'_> {
        Elements::new(self.bsgs())
    }

    /// All elements, or `BoundExceeded` when the group is larger than `budget`.
    pub fn elements_within(&self, budget: u64) -> Result<Vec<Permutation>> {
        if self.order() > budget as u128 {
            return Err(Error::BoundExceeded { budget });
        }
        Ok(self.elements().collect())
    }

    /// Uniformly distributed element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        self.bsgs().random_element(rng)
    }

    /// Group generated by the restrictions of the generators to an invariant domain.
    pub fn restrict(&self, domain: &[usize]) -> Result<PermGroup> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.restrict(domain))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(domain.len(), gens))
    }

    /// Drops identity and duplicate generators.
    pub fn tidy(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in &self.generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        PermGroup {
            degree: self.degree,
            generators: gens,
            base_prefix: self.base_prefix.clone(),
            bsgs: self.bsgs.clone(),
        }
    }

    /// Subgroup generated by `elements`, adding only those not already present.
    pub fn generated_by(
        degree: usize,
        elements: impl IntoIterator<Item = Permutation>,
    ) -> PermGroup {
        let mut group = PermGroup::trivial(degree);
        for g in elements {
            if !group.contains(&g) {
                group = group.with_generator(g);
            }
        }
        group
    }
}

/// Standard groups on `{0, .., n - 1}`.
pub mod standard {
    use super::*;

    pub fn cyclic(n: usize) -> PermGroup {
        let gens = if n > 1 {
            vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]
        } else {
            Vec::new()
        };
        PermGroup::from_parts(n, gens)
    }

    /// Dihedral group of order `2n` acting on the `n`-gon.
    pub fn dihedral(n: usize) -> PermGroup {
        let mut gens = cyclic(n).generators;
        if n > 2 {
            let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            gens.push(Permutation::from_images(refl).unwrap());
        }
        PermGroup::from_parts(n, gens)
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n > 1 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        if n > 2 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        PermGroup::from_parts(n, gens)
    }

    pub fn alternating(n: usize) -> PermGroup {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap())
            .collect();
        PermGroup::from_parts(n, gens)
    }
}
