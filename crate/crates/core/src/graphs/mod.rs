//! Simple graphs, digraphs and the arc-transitive test corpus.

mod corpus;
mod symmetry;

pub use corpus::{
    circulant, complete_graph, cycle_graph, digraph_blowup, directed_cycle, lexicographic_blowup,
    line_digraph, oriented_blowup_group, oriented_cycle_blowup, paley, standard_group, Family,
    CIRCULANT_SEARCH_LIMIT,
};
pub use symmetry::{
    arc_orbit, arc_permutation, is_arc_transitive, line_digraph_group, orient_by_arc_orbit,
    tiny_automorphism_group,
};

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::permcore::Permutation;

/// A finite simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { adjacency })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.arcs().into_iter().filter(|&(u, v)| u < v).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Both orientations of every edge, in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
            .collect()
    }

    /// The common valency, if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        reachable(self.n(), 0, |v| self.adjacency[v].iter().copied()) == self.n()
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.n()
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.has_edge(g.apply(u), g.apply(v)))
    }
}

/// A digraph on `0..n` without loops or repeated arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "arc ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("repeated arc ({u}, {v})")));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
        }
        Ok(Digraph { out, inn })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_valence(&self) -> Option<usize> {
        let k = self.out.first().map_or(0, Vec::len);
        self.out.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn in_valence(&self) -> Option<usize> {
        let k = self.inn.first().map_or(0, Vec::len);
        self.inn.iter().all(|a| a.len() == k).then_some(k)
    }

    /// No arc appears together with its reverse.
    pub fn is_asymmetric(&self) -> bool {
        self.arcs().iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    pub fn is_weakly_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let around = |v: usize| {
            self.out[v]
                .iter()
                .chain(&self.inn[v])
                .copied()
                .collect::<Vec<_>>()
        };
        reachable(self.n(), 0, around) == self.n()
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        reachable(self.n(), 0, |v| self.out[v].iter().copied()) == self.n()
            && reachable(self.n(), 0, |v| self.inn[v].iter().copied()) == self.n()
    }

    /// Forgets directions; an arc and its reverse become one edge.
    pub fn underlying_graph(&self) -> Graph {
        let edges: BTreeSet<(usize, usize)> = self
            .arcs()
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        let edges: Vec<_> = edges.into_iter().collect();
        Graph::from_edges(self.n(), &edges).expect("edges come from a loopless digraph")
    }

    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        g.degree() == self.n()
            && self
                .arcs()
                .iter()
                .all(|&(u, v)| self.has_arc(g.apply(u), g.apply(v)))
    }
}

fn reachable<I: IntoIterator<Item = usize>>(
    n: usize,
    start: usize,
    next: impl Fn(usize) -> I,
) -> usize {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for w in next(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count
}
