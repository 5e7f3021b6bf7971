//! Alternets of a digraph: classes of arcs under the transitive closure of
//! "shares a tail or a head", and the constructions built on them.

use std::collections::BTreeMap;

use crate::actions::QuotientData;
use crate::error::{Error, Result};
use crate::graphs::{arc_orbit, Digraph, Graph};
use crate::permcore::{ActionHom, PermGroup, Permutation};
use crate::unionfind::UnionFind;

/// One alternet: its arcs, tails (`sources`) and heads (`sinks`), all sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternet {
    pub index: usize,
    pub arcs: Vec<(usize, usize)>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

impl Alternet {
    /// Some head of an arc in the class is also a tail of an arc in it.
    pub fn is_degenerate(&self) -> bool {
        self.sinks
            .iter()
            .any(|v| self.sources.binary_search(v).is_ok())
    }

    pub fn is_complete_bipartite(&self) -> Result<bool> {
        if self.is_degenerate() {
            return Err(Error::DegenerateAlternet(self.index));
        }
        Ok(self.arcs.len() == self.sources.len() * self.sinks.len())
    }
}

/// Alternet classes numbered by their smallest arc.
#[derive(Clone, Debug)]
pub struct AlternetPartition {
    arcs: Vec<(usize, usize)>,
    class_of: Vec<usize>,
    classes: Vec<Alternet>,
}

impl AlternetPartition {
    pub fn classes(&self) -> &[Alternet] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class of an arc, or `None` if it is not an arc of the digraph.
    pub fn class_of_arc(&self, arc: (usize, usize)) -> Option<usize> {
        self.arcs.binary_search(&arc).ok().map(|i| self.class_of[i])
    }

    pub fn has_degenerate_class(&self) -> bool {
        self.classes.iter().any(Alternet::is_degenerate)
    }

    fn require_non_degenerate(&self) -> Result<()> {
        match self.classes.iter().find(|c| c.is_degenerate()) {
            Some(c) => Err(Error::DegenerateAlternet(c.index)),
            None => Ok(()),
        }
    }

    /// Every sink set meets every source set in at most one vertex.
    pub fn is_loosely_attached(&self) -> Result<bool> {
        self.require_non_degenerate()?;
        for a in &self.classes {
            for b in &self.classes {
                let shared = a
                    .sinks
                    .iter()
                    .filter(|v| b.sources.binary_search(v).is_ok())
                    .count();
                if shared > 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub fn alternet_partition(digraph: &Digraph) -> Result<AlternetPartition> {
    let arcs = digraph.arcs();
    if arcs.is_empty() {
        return Err(Error::EmptyDigraph);
    }
    let mut uf = UnionFind::new(arcs.len());
    let mut first_out: Vec<Option<usize>> = vec![None; digraph.n()];
    let mut first_in: Vec<Option<usize>> = vec![None; digraph.n()];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        match first_out[u] {
            Some(j) => {
                uf.union(i, j);
            }
            None => first_out[u] = Some(i),
        }
        match first_in[v] {
            Some(j) => {
                uf.union(i, j);
            }
            None => first_in[v] = Some(i),
        }
    }
    let class_of = uf.labels();
    let count = class_of.iter().max().map_or(0, |&m| m + 1);
    let mut classes: Vec<Alternet> = (0..count)
        .map(|index| Alternet {
            index,
            arcs: Vec::new(),
            sources: Vec::new(),
            sinks: Vec::new(),
        })
        .collect();
    for (&arc, &c) in arcs.iter().zip(&class_of) {
        classes[c].arcs.push(arc);
        classes[c].sources.push(arc.0);
        classes[c].sinks.push(arc.1);
    }
    for c in &mut classes {
        c.sources.sort_unstable();
        c.sources.dedup();
        c.sinks.sort_unstable();
        c.sinks.dedup();
    }
    Ok(AlternetPartition {
        arcs,
        class_of,
        classes,
    })
}

/// The digraph of alternets, with `A -> B` when the sinks of `A` meet the
/// sources of `B`.
#[derive(Clone, Debug)]
pub struct AlternetDigraph {
    pub digraph: Digraph,
    /// For each vertex with out-arcs, the class containing them.
    pub out_class: Vec<Option<usize>>,
}

pub fn alternet_digraph(
    digraph: &Digraph,
    partition: &AlternetPartition,
) -> Result<AlternetDigraph> {
    partition.require_non_degenerate()?;
    let out_class: Vec<Option<usize>> = (0..digraph.n())
        .map(|v| {
            digraph
                .out_neighbors(v)
                .first()
                .and_then(|&w| partition.class_of_arc((v, w)))
        })
        .collect();
    let mut arcs = Vec::new();
    for a in partition.classes() {
        for &w in &a.sinks {
            if let Some(b) = out_class[w] {
                arcs.push((a.index, b));
            }
        }
    }
    arcs.sort_unstable();
    arcs.dedup();
    Ok(AlternetDigraph {
        digraph: Digraph::from_arcs(partition.num_classes(), &arcs)?,
        out_class,
    })
}

/// The action of `group` on alternet classes.
pub fn induced_group_on_alternets(
    digraph: &Digraph,
    group: &PermGroup,
    partition: &AlternetPartition,
) -> Result<ActionHom> {
    if group.degree() != digraph.n() {
        return Err(Error::DegreeMismatch {
            expected: digraph.n(),
            found: group.degree(),
        });
    }
    if !group
        .generators()
        .iter()
        .all(|g| digraph.is_automorphism(g))
    {
        return Err(Error::NotAutomorphisms);
    }
    let representatives: Vec<(usize, usize)> =
        partition.classes().iter().map(|c| c.arcs[0]).collect();
    let partition = partition.clone();
    ActionHom::new(group, representatives.len(), move |g| {
        let images = representatives
            .iter()
            .map(|&(u, v)| {
                partition
                    .class_of_arc((g.apply(u), g.apply(v)))
                    .ok_or(Error::NotAutomorphisms)
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    })
}

/// Cycles each class of vertices sharing both in- and out-neighbourhood one
/// step forward in sorted order.
pub fn duplicate_class_semiregular(digraph: &Digraph) -> Result<Permutation> {
    let mut classes: BTreeMap<(&[usize], &[usize]), Vec<usize>> = BTreeMap::new();
    for v in 0..digraph.n() {
        classes
            .entry((digraph.in_neighbors(v), digraph.out_neighbors(v)))
            .or_default()
            .push(v);
    }
    let sizes: Vec<usize> = classes.values().map(Vec::len).collect();
    if sizes.first().is_none_or(|&c| c < 2) || sizes.iter().any(|&s| s != sizes[0]) {
        return Err(Error::ClassesNotUniform);
    }
    let cycles: Vec<Vec<usize>> = classes.into_values().collect();
    Permutation::from_cycles(digraph.n(), &cycles)
}

/// Orients `graph` along a direction of its cyclic quotient.
///
/// The quotient cycle is directed so that vertex 0 points to its smaller
/// neighbour; each edge of `graph` is oriented to agree with it. Returns the
/// digraph and the subgroup of `group` preserving the direction.
pub fn derive_orientation(
    graph: &Graph,
    group: &PermGroup,
    data: &QuotientData,
) -> Result<(Digraph, PermGroup)> {
    let quotient = data.quotient();
    let m = quotient.n();
    if m < 3 || quotient.valency() != Some(2) || !quotient.is_connected() {
        return Err(Error::QuotientNotCycle);
    }
    let orbit = |v: usize| data.orbit_of(v);
    if graph.edges().iter().any(|&(u, v)| orbit(u) == orbit(v)) {
        return Err(Error::IntraOrbitEdge);
    }
    let mut succ = vec![0; m];
    let (mut prev, mut cur) = (0, quotient.neighbors(0)[0]);
    succ[0] = cur;
    while cur != 0 {
        let next = *quotient
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .unwrap();
        succ[cur] = next;
        (prev, cur) = (cur, next);
    }
    let arcs: Vec<(usize, usize)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            if succ[orbit(u)] == orbit(v) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let mut arcs = arcs;
    arcs.sort_unstable();
    let digraph = Digraph::from_arcs(graph.n(), &arcs)?;

    let action = data.action().projection();
    let direction = ActionHom::new(group, 2, move |g| {
        let rho = action(g)?;
        let preserves = (0..m).all(|i| rho.apply(succ[i]) == succ[rho.apply(i)]);
        Ok(if preserves {
            Permutation::identity(2)
        } else {
            Permutation::from_images_unchecked(vec![1, 0])
        })
    })?;
    let preserving = direction.kernel();

    let dump = || {
        format!(
            "graph on {} vertices, group {group:?}, orbits {:?}",
            graph.n(),
            data.orbit_partition().blocks()
        )
    };
    if !digraph.is_asymmetric() {
        return Err(Error::InvariantViolation(format!(
            "orientation is not asymmetric: {}",
            dump()
        )));
    }
    if digraph.out_valence().map(|k| 2 * k) != graph.valency() {
        return Err(Error::InvariantViolation(format!(
            "orientation has out-valence {:?} for valency {:?}: {}",
            digraph.out_valence(),
            graph.valency(),
            dump()
        )));
    }
    if arc_orbit(&preserving, arcs[0]).len() != arcs.len() {
        return Err(Error::InvariantViolation(format!(
            "orientation-preserving subgroup is not arc-transitive: {}",
            dump()
        )));
    }
    Ok((digraph, preserving))
}
