use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graphs::{Digraph, Graph};
use crate::permcore::{PermGroup, Permutation};

/// Orbit of an ordered pair under the generators, sorted.
pub fn arc_orbit(group: &PermGroup, seed: (usize, usize)) -> Vec<(usize, usize)> {
    let mut seen = BTreeSet::from([seed]);
    let mut stack = vec![seed];
    while let Some((u, v)) = stack.pop() {
        for g in group.generators() {
            let image = (g.apply(u), g.apply(v));
            if seen.insert(image) {
                stack.push(image);
            }
        }
    }
    seen.into_iter().collect()
}

/// The permutation `g` induces on the arcs of `digraph`, indexed in
/// lexicographic order as in [`crate::graphs::line_digraph`].
pub fn arc_permutation(digraph: &Digraph, g: &Permutation) -> Result<Permutation> {
    let arcs = digraph.arcs();
    let images = arcs
        .iter()
        .map(|&(u, v)| {
            arcs.binary_search(&(g.apply(u), g.apply(v)))
                .map_err(|_| Error::NotAutomorphisms)
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images)
}

/// The action of `group` on the vertices of the line digraph.
pub fn line_digraph_group(digraph: &Digraph, group: &PermGroup) -> Result<PermGroup> {
    let gens = group
        .generators()
        .iter()
        .map(|g| arc_permutation(digraph, g))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(digraph.num_arcs(), gens)
}

/// Every generator is an automorphism and one arc orbit covers all arcs.
pub fn is_arc_transitive(graph: &Graph, group: &PermGroup) -> Result<bool> {
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            expected: graph.n(),
            found: group.degree(),
        });
    }
    if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
        return Ok(false);
    }
    let arcs = graph.arcs();
    match arcs.first() {
        None => Ok(false),
        Some(&seed) => Ok(arc_orbit(group, seed).len() == arcs.len()),
    }
}

/// The digraph whose arcs are the orbit of `seed` under `group`.
pub fn orient_by_arc_orbit(
    graph: &Graph,
    group: &PermGroup,
    seed: (usize, usize),
) -> Result<Digraph> {
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            expected: graph.n(),
            found: group.degree(),
        });
    }
    if !graph.has_edge(seed.0, seed.1) {
        return Err(Error::Precondition(format!("seed {seed:?} is not an arc")));
    }
    if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphisms);
    }
    let orbit = arc_orbit(group, seed);
    if orbit
        .iter()
        .any(|&(u, v)| orbit.binary_search(&(v, u)).is_ok())
    {
        return Err(Error::OrbitContainsBothDirections);
    }
    if orbit.len() != graph.num_edges() {
        return Err(Error::Precondition(format!(
            "arc orbit of {seed:?} covers {} of {} edges",
            orbit.len(),
            graph.num_edges()
        )));
    }
    Digraph::from_arcs(graph.n(), &orbit)
}

/// Full automorphism group of a small graph.
///
/// Builds a stabiliser chain from the bottom up: for each point `i`, from
/// the last to the first, and each candidate image `y` not yet in the orbit
/// of `i` under the automorphisms already found fixing `0..i`, a
/// backtracking search looks for an automorphism fixing `0..i` and sending
/// `i` to `y`.
pub fn tiny_automorphism_group(graph: &Graph, bound: usize) -> Result<PermGroup> {
    let n = graph.n();
    if n > bound {
        return Err(Error::BoundExceeded {
            budget: bound as u64,
        });
    }
    let mut levels: Vec<Vec<Permutation>> = vec![Vec::new(); n];
    for i in (0..n).rev() {
        for y in i + 1..n {
            let below: Vec<Permutation> = levels[i..].iter().flatten().cloned().collect();
            let group = PermGroup::new(n, below)?;
            if group.orbit(i).contains(&y) {
                continue;
            }
            let mut images: Vec<Option<usize>> = (0..i).map(Some).collect();
            images.push(Some(y));
            images.resize(n, None);
            let mut used = vec![false; n];
            for &img in images.iter().flatten() {
                used[img] = true;
            }
            if consistent(graph, &images, i) && extend(graph, &mut images, &mut used, i + 1) {
                let perm =
                    Permutation::from_images(images.into_iter().map(Option::unwrap).collect())?;
                levels[i].push(perm);
            }
        }
    }
    PermGroup::new(n, levels.into_iter().flatten().collect())
}

/// Whether the image of `v` agrees with degrees and with adjacency to every
/// earlier assigned vertex.
fn consistent(graph: &Graph, images: &[Option<usize>], v: usize) -> bool {
    let Some(img) = images[v] else { return true };
    if graph.degree(v) != graph.degree(img) {
        return false;
    }
    (0..v).all(|u| match images[u] {
        Some(iu) => graph.has_edge(u, v) == graph.has_edge(iu, img),
        None => true,
    })
}

fn extend(graph: &Graph, images: &mut [Option<usize>], used: &mut [bool], v: usize) -> bool {
    if v == images.len() {
        return true;
    }
    for img in 0..images.len() {
        if used[img] {
            continue;
        }
        images[v] = Some(img);
        used[img] = true;
        if consistent(graph, images, v) && extend(graph, images, used, v + 1) {
            return true;
        }
        used[img] = false;
        images[v] = None;
    }
    false
}
