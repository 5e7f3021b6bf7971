//! Quotient graphs by normal subgroups and local actions.

use crate::error::{Error, Result};
use crate::graphs::{is_arc_transitive, Graph};
use crate::permcore::{local_restriction, ActionHom, Partition, PermGroup, Permutation};

/// The quotient `Γ/N` together with the action of `G` on the `N`-orbits.
///
/// Quotient vertices are the `N`-orbits numbered by smallest member.
#[derive(Clone, Debug)]
pub struct QuotientData {
    quotient: Graph,
    orbits: Partition,
    action: ActionHom,
    kernel: PermGroup,
}

impl QuotientData {
    pub fn quotient(&self) -> &Graph {
        &self.quotient
    }

    pub fn orbit_partition(&self) -> &Partition {
        &self.orbits
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbits.block_of(v)
    }

    /// `G/K` as a permutation group on the quotient vertices.
    pub fn induced_group(&self) -> &PermGroup {
        self.action.image()
    }

    /// Elements of `G` fixing every `N`-orbit.
    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn action(&self) -> &ActionHom {
        &self.action
    }

    pub fn project(&self, g: &Permutation) -> Result<Permutation> {
        self.action.project(g)
    }

    pub fn preimage(&self, target: &Permutation) -> Option<Permutation> {
        self.action.preimage(target)
    }
}

/// Builds `Γ/N` and the induced action of `group`, which must permute the
/// `N`-orbits.
pub fn quotient_graph(
    graph: &Graph,
    group: &PermGroup,
    normal: &PermGroup,
) -> Result<QuotientData> {
    for h in [group, normal] {
        if h.degree() != graph.n() {
            return Err(Error::DegreeMismatch {
                expected: graph.n(),
                found: h.degree(),
            });
        }
    }
    let orbits = normal.orbit_partition();
    let mut edges: Vec<(usize, usize)> = graph
        .edges()
        .into_iter()
        .map(|(u, v)| (orbits.block_of(u), orbits.block_of(v)))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let quotient = Graph::from_edges(orbits.num_blocks(), &edges)?;
    if graph.is_connected() && !quotient.is_connected() {
        return Err(Error::InvariantViolation(format!(
            "quotient of a connected graph by {normal:?} is disconnected"
        )));
    }
    let action = ActionHom::on_partition(group, &orbits)?;
    let kernel = action.kernel();
    if orbits.num_blocks() >= 3 && is_arc_transitive(graph, group)? {
        let (k, kq) = (graph.valency(), quotient.valency());
        let divides = matches!((k, kq), (Some(k), Some(kq)) if kq > 0 && k % kq == 0);
        if !divides {
            return Err(Error::InvariantViolation(format!(
                "quotient valency {kq:?} does not divide valency {k:?} for orbits {:?}",
                orbits.blocks()
            )));
        }
    }
    Ok(QuotientData {
        quotient,
        orbits,
        action,
        kernel,
    })
}

/// The group induced on the neighbourhood of `v` by its stabiliser, with
/// neighbours relabelled in increasing order.
pub fn local_action(graph: &Graph, group: &PermGroup, v: usize) -> Result<PermGroup> {
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            expected: graph.n(),
            found: group.degree(),
        });
    }
    if v >= graph.n() {
        return Err(Error::Precondition(format!("vertex {v} out of range")));
    }
    if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphisms);
    }
    local_restriction(group, v, graph.neighbors(v))
}

/// If `Γ/N` keeps the valency of `Γ`, the kernel must equal `N` and `N`
/// must be semiregular; returns whether the valencies agree.
pub fn check_same_valency_semiregular(
    graph: &Graph,
    normal: &PermGroup,
    data: &QuotientData,
) -> Result<bool> {
    if normal.num_orbits() < 3 {
        return Err(Error::Precondition(
            "normal subgroup has fewer than 3 orbits".into(),
        ));
    }
    if data.quotient().valency() != graph.valency() {
        return Ok(false);
    }
    if data.kernel().order() != normal.order() || !normal.is_semiregular() {
        return Err(Error::InvariantViolation(format!(
            "quotient keeps valency {:?} but kernel order {} vs |N| = {}, N semiregular: {}; N = {normal:?}",
            graph.valency(),
            data.kernel().order(),
            normal.order(),
            normal.is_semiregular()
        )));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete_graph, cycle_graph, standard_group, Family};
    use crate::permcore::{is_primitive, standard};

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    #[test]
    fn six_cycle_over_antipodes() {
        let c6 = cycle_graph(6).unwrap();
        let g = standard::dihedral(6);
        let n = PermGroup::new(6, vec![perm(6, &[&[0, 3], &[1, 4], &[2, 5]])]).unwrap();
        let q = quotient_graph(&c6, &g, &n).unwrap();
        assert_eq!(q.quotient(), &cycle_graph(3).unwrap());
        assert_eq!(
            q.orbit_partition().blocks(),
            &[vec![0, 3], vec![1, 4], vec![2, 5]]
        );
        assert_eq!(q.kernel().order(), 2);
        assert_eq!(q.induced_group().order(), 6);
        assert!(check_same_valency_semiregular(&c6, &n, &q).unwrap());
    }

    #[test]
    fn trivial_normal_subgroup_gives_the_graph() {
        let c6 = cycle_graph(6).unwrap();
        let g = standard::dihedral(6);
        let n = PermGroup::trivial(6);
        let q = quotient_graph(&c6, &g, &n).unwrap();
        assert_eq!(q.quotient(), &c6);
        assert!(check_same_valency_semiregular(&c6, &n, &q).unwrap());
    }

    #[test]
    fn tripartite_over_fibres() {
        let family = Family::Blowup { cycle: 3, m: 4 };
        let (graph, group) = (family.graph().unwrap(), standard_group(&family).unwrap());
        let fibres = perm(12, &[&[0, 1, 2, 3], &[4, 5, 6, 7], &[8, 9, 10, 11]]);
        let n = PermGroup::new(12, vec![fibres]).unwrap();
        let q = quotient_graph(&graph, &group, &n).unwrap();
        assert_eq!(q.quotient(), &complete_graph(3));
        assert_eq!(q.quotient().valency(), Some(2));
        assert!(!check_same_valency_semiregular(&graph, &q.kernel().clone(), &q).unwrap());
    }

    #[test]
    fn local_actions() {
        let k9 = complete_graph(9);
        let l = local_action(&k9, &standard::symmetric(9), 0).unwrap();
        assert_eq!((l.degree(), l.order()), (8, 40320));
        assert!(is_primitive(&l).unwrap());

        let p17 = Family::Paley(17);
        let l = local_action(&p17.graph().unwrap(), &p17.group().unwrap(), 0).unwrap();
        assert_eq!((l.degree(), l.order()), (8, 8));
        assert!(l.is_transitive());

        let b = Family::Blowup { cycle: 3, m: 4 };
        let l = local_action(&b.graph().unwrap(), &b.group().unwrap(), 0).unwrap();
        assert!(l.is_transitive());
        let blocks = crate::permcore::minimal_blocks(&l).unwrap().unwrap();
        assert_eq!(blocks.blocks(), &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);

        let c6 = cycle_graph(6).unwrap();
        let bad = PermGroup::new(6, vec![perm(6, &[&[0, 1]])]).unwrap();
        assert!(matches!(
            local_action(&c6, &bad, 0),
            Err(Error::NotAutomorphisms)
        ));
    }
}
