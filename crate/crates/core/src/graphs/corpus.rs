use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, is_prime, mod_pow, primitive_root};
use crate::error::{Error, Result};
use crate::graphs::{is_arc_transitive, tiny_automorphism_group, Digraph, Graph};
use crate::permcore::{standard, PermGroup, Permutation};

/// Vertex `i` joined to `i + s` for each `s` in `offsets`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    if offsets.iter().any(|&s| s == 0 || s >= n) {
        return Err(Error::InvalidOffsets(format!(
            "offsets must lie in 1..{n}: {offsets:?}"
        )));
    }
    if let Some(s) = offsets.iter().find(|&&s| !offsets.contains(&(n - s))) {
        return Err(Error::InvalidOffsets(format!(
            "offset {s} has no negative {} in the set",
            n - s
        )));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in offsets {
            let j = (i + s) % n;
            if i < j {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    circulant(n, &[1, n - 1])
}

pub fn complete_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Residues mod `q`, with `x ~ y` when `x - y` is a non-zero square.
pub fn paley(q: u64) -> Result<Graph> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(Error::BadModulus(q));
    }
    circulant(q as usize, &squares_mod(q))
}

fn squares_mod(q: u64) -> Vec<usize> {
    let mut squares: Vec<usize> = (1..q).map(|x| (x * x % q) as usize).collect();
    squares.sort_unstable();
    squares.dedup();
    squares
}

/// Vertex `(u, i)` is numbered `u * m + i`; `(u, i) ~ (v, j)` iff `u ~ v`.
pub fn lexicographic_blowup(base: &Graph, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParams(
            "blowup factor must be at least 1".into(),
        ));
    }
    let mut edges = Vec::new();
    for (u, v) in base.edges() {
        for i in 0..m {
            for j in 0..m {
                edges.push((u * m + i, v * m + j));
            }
        }
    }
    Graph::from_edges(base.n() * m, &edges)
}

pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "a directed cycle needs at least 2 vertices, got {n}"
        )));
    }
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_arcs(n, &arcs)
}

/// Same numbering as [`lexicographic_blowup`], with arcs `(u, i) -> (v, j)` for arcs `u -> v`.
pub fn digraph_blowup(base: &Digraph, m: usize) -> Result<Digraph> {
    if m == 0 {
        return Err(Error::InvalidParams(
            "blowup factor must be at least 1".into(),
        ));
    }
    let mut arcs = Vec::new();
    for (u, v) in base.arcs() {
        for i in 0..m {
            for j in 0..m {
                arcs.push((u * m + i, v * m + j));
            }
        }
    }
    Digraph::from_arcs(base.n() * m, &arcs)
}

/// The directed `k`-cycle with every vertex replaced by `m` independent copies.
pub fn oriented_cycle_blowup(k: usize, m: usize) -> Result<Digraph> {
    digraph_blowup(&directed_cycle(k)?, m)
}

/// Vertices are the arcs of `d` in lexicographic order; `a -> b` when the
/// head of `a` is the tail of `b`.
pub fn line_digraph(d: &Digraph) -> Result<Digraph> {
    let arcs = d.arcs();
    let index = |a: (usize, usize)| arcs.binary_search(&a).expect("arc present");
    let mut line = Vec::new();
    for (i, &(_, v)) in arcs.iter().enumerate() {
        for &w in d.out_neighbors(v) {
            line.push((i, index((v, w))));
        }
    }
    Digraph::from_arcs(arcs.len(), &line)
}

/// A named corpus instance; see [`Family::from_str`] for the accepted names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Paley(u64),
    Complete(usize),
    /// Lexicographic blowup of the cycle `C_cycle` by `m` independent vertices.
    Blowup {
        cycle: usize,
        m: usize,
    },
    Circulant {
        n: usize,
        offsets: Vec<usize>,
    },
}

impl Family {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Family::Paley(q) => paley(*q),
            Family::Complete(n) => Ok(complete_graph(*n)),
            Family::Blowup { cycle, m } => lexicographic_blowup(&cycle_graph(*cycle)?, *m),
            Family::Circulant { n, offsets } => circulant(*n, offsets),
        }
    }

    pub fn group(&self) -> Result<PermGroup> {
        standard_group(self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Paley(q) => write!(f, "paley:{q}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Blowup { cycle, m } => write!(f, "blowup:c{cycle}x{m}"),
            Family::Circulant { n, offsets } => {
                let list: Vec<String> = offsets.iter().map(usize::to_string).collect();
                write!(f, "circulant:{n},{}", list.join(","))
            }
        }
    }
}

/// Accepts `paley:17`, `complete:9`, `blowup:c3x4` (or `blowup:c3,4`) and
/// `circulant:6,1,5`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let number = |t: &str| -> Result<usize> {
            t.trim().parse().map_err(|_| {
                Error::InvalidParams(format!("`{t}` is not a non-negative integer in `{s}`"))
            })
        };
        match name {
            "paley" => Ok(Family::Paley(number(params)? as u64)),
            "complete" => Ok(Family::Complete(number(params)?)),
            "blowup" => {
                let rest = params.strip_prefix('c').ok_or_else(|| {
                    Error::InvalidParams(format!("expected `blowup:c<k>x<m>`, got `{s}`"))
                })?;
                let (k, m) = rest.split_once(['x', ',']).ok_or_else(|| {
                    Error::InvalidParams(format!("expected `blowup:c<k>x<m>`, got `{s}`"))
                })?;
                Ok(Family::Blowup {
                    cycle: number(k)?,
                    m: number(m)?,
                })
            }
            "circulant" => {
                let mut parts = params.split(',');
                let n = number(parts.next().unwrap_or(""))?;
                let offsets = parts.map(number).collect::<Result<Vec<_>>>()?;
                Ok(Family::Circulant { n, offsets })
            }
            _ => Err(Error::UnknownFamily(name.to_string())),
        }
    }
}

/// `S_m` on fibre 0 and the rotation of the base cycle.
fn fibre_generators(k: usize, m: usize) -> Result<Vec<Permutation>> {
    let n = k * m;
    let mut gens = Vec::new();
    if m >= 2 {
        let fibre: Vec<usize> = (0..m).collect();
        gens.push(Permutation::from_cycles(n, &[fibre])?);
    }
    if m >= 3 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    let rotate = |u: usize, i: usize| ((u + 1) % k) * m + i;
    gens.push(Permutation::from_images(
        (0..n).map(|x| rotate(x / m, x % m)).collect(),
    )?);
    Ok(gens)
}

/// `S_m wr C_k`, arc-transitive on [`oriented_cycle_blowup`]`(k, m)`.
pub fn oriented_blowup_group(k: usize, m: usize) -> Result<PermGroup> {
    if k < 2 || m == 0 {
        return Err(Error::InvalidParams(format!(
            "oriented blowup needs k >= 2 and m >= 1, got k={k}, m={m}"
        )));
    }
    PermGroup::new(k * m, fibre_generators(k, m)?)
}

/// Largest circulant for which the full automorphism group is searched.
pub const CIRCULANT_SEARCH_LIMIT: usize = 24;

/// An arc-transitive group of automorphisms of the family's graph.
///
/// Paley graphs get the affine group `x -> a x + b` with `a` a square;
/// complete graphs the symmetric group; blowups of `C_k` by `m` the wreath
/// product `S_m wr D_k`; circulants the rotations together with every unit
/// multiplier fixing the offset set, or the full automorphism group when
/// that is not arc-transitive and `n` is at most [`CIRCULANT_SEARCH_LIMIT`].
pub fn standard_group(family: &Family) -> Result<PermGroup> {
    match family {
        Family::Paley(q) => {
            let q = *q;
            paley(q)?;
            let n = q as usize;
            let root = primitive_root(q).ok_or(Error::BadModulus(q))?;
            let square = mod_pow(root, 2, q) as usize;
            let shift = Permutation::from_images((0..n).map(|x| (x + 1) % n).collect())?;
            let scale = Permutation::from_images((0..n).map(|x| x * square % n).collect())?;
            PermGroup::new(n, vec![shift, scale])
        }
        Family::Complete(n) => Ok(standard::symmetric(*n)),
        Family::Blowup { cycle, m } => {
            let (k, m) = (*cycle, *m);
            if k < 3 || m == 0 {
                return Err(Error::InvalidParams(format!(
                    "blowup needs k >= 3 and m >= 1, got k={k}, m={m}"
                )));
            }
            let mut gens = fibre_generators(k, m)?;
            let n = k * m;
            let reflect = |u: usize, i: usize| ((k - u) % k) * m + i;
            gens.push(Permutation::from_images(
                (0..n).map(|x| reflect(x / m, x % m)).collect(),
            )?);
            PermGroup::new(n, gens)
        }
        Family::Circulant { n, offsets } => {
            let n = *n;
            circulant(n, offsets)?;
            let mut gens = vec![Permutation::from_images(
                (0..n).map(|x| (x + 1) % n).collect(),
            )?];
            for a in 2..n {
                if gcd(a as u128, n as u128) == 1
                    && offsets.iter().all(|s| offsets.contains(&(a * s % n)))
                {
                    gens.push(Permutation::from_images(
                        (0..n).map(|x| x * a % n).collect(),
                    )?);
                }
            }
            let affine = PermGroup::new(n, gens)?;
            let graph = circulant(n, offsets)?;
            if is_arc_transitive(&graph, &affine)? {
                return Ok(affine);
            }
            // e.g. the octahedron: multipliers alone miss the arc stabiliser
            let full = tiny_automorphism_group(&graph, CIRCULANT_SEARCH_LIMIT).map_err(|_| {
                Error::InvalidParams(format!(
                    "circulant:{n} affine group is not arc-transitive and n > {CIRCULANT_SEARCH_LIMIT}"
                ))
            })?;
            if !is_arc_transitive(&graph, &full)? {
                return Err(Error::InvalidParams(format!(
                    "circulant:{n},{offsets:?} is not arc-transitive"
                )));
            }
            Ok(full)
        }
    }
}
