//! Independent oracles: brute-force closures over raw image tables, and
//! seeded generators of small transitive groups.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use semireg::permcore::{PermGroup, Permutation};

pub type Images = Vec<usize>;

/// `a` then `b`.
pub fn mul(a: &[usize], b: &[usize]) -> Images {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inv(a: &[usize]) -> Images {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn id(n: usize) -> Images {
    (0..n).collect()
}

pub fn images(gens: &[Permutation]) -> Vec<Images> {
    gens.iter().map(|g| g.images().to_vec()).collect()
}

/// Every element of `<gens>`, or `None` past `limit` elements.
pub fn closure(n: usize, gens: &[Images], limit: usize) -> Option<BTreeSet<Images>> {
    let mut seen = BTreeSet::from([id(n)]);
    let mut queue = VecDeque::from([id(n)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

pub fn group_closure(group: &PermGroup, limit: usize) -> Option<BTreeSet<Images>> {
    closure(group.degree(), &images(group.generators()), limit)
}

pub fn cycle_lengths(a: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = a[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out
}

pub fn is_identity(a: &[usize]) -> bool {
    a.iter().enumerate().all(|(i, &x)| i == x)
}

pub fn is_semiregular(a: &[usize]) -> bool {
    let c = cycle_lengths(a);
    c.iter().all(|&l| l == c[0])
}

pub fn orbit(gens: &[Images], x: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([x]);
    let mut stack = vec![x];
    while let Some(y) = stack.pop() {
        for g in gens {
            if seen.insert(g[y]) {
                stack.push(g[y]);
            }
        }
    }
    seen
}

pub fn is_transitive(n: usize, gens: &[Images]) -> bool {
    n == 0 || orbit(gens, 0).len() == n
}

pub fn center(elements: &BTreeSet<Images>) -> BTreeSet<Images> {
    elements
        .iter()
        .filter(|z| elements.iter().all(|g| mul(z, g) == mul(g, z)))
        .cloned()
        .collect()
}

/// Conjugacy classes of a group given as its element set.
pub fn conjugacy_classes(elements: &BTreeSet<Images>) -> Vec<BTreeSet<Images>> {
    let mut done = BTreeSet::new();
    let mut classes = Vec::new();
    for x in elements {
        if done.contains(x) {
            continue;
        }
        let class: BTreeSet<Images> = elements.iter().map(|g| mul(&mul(&inv(g), x), g)).collect();
        done.extend(class.iter().cloned());
        classes.push(class);
    }
    classes
}

/// Every non-trivial normal subgroup contains the normal closure of one of
/// its non-identity elements, so checking those closures decides
/// quasiprimitivity.
pub fn is_quasiprimitive(n: usize, elements: &BTreeSet<Images>) -> bool {
    let transitive = {
        let all: Vec<Images> = elements.iter().cloned().collect();
        is_transitive(n, &all)
    };
    if !transitive {
        return false;
    }
    conjugacy_classes(elements)
        .into_iter()
        .filter(|c| !is_identity(c.iter().next().unwrap()))
        .all(|c| {
            let gens: Vec<Images> = c.into_iter().collect();
            is_transitive(n, &gens)
        })
}

/// Smallest block containing `0` and `x`: merge pairs until the partition
/// is invariant under every generator.
pub fn block_of_pair(n: usize, gens: &[Images], x: usize) -> Vec<usize> {
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], mut a: usize) -> usize {
        while label[a] != a {
            label[a] = label[label[a]];
            a = label[a];
        }
        a
    }
    let mut pending = vec![(0, x)];
    while let Some((a, b)) = pending.pop() {
        let (ra, rb) = (find(&mut label, a), find(&mut label, b));
        if ra == rb {
            continue;
        }
        label[ra] = rb;
        for g in gens {
            pending.push((g[a], g[b]));
        }
    }
    let r = find(&mut label, 0);
    (0..n).filter(|&y| find(&mut label, y) == r).collect()
}

pub fn is_primitive(n: usize, gens: &[Images]) -> bool {
    is_transitive(n, gens) && (1..n).all(|x| block_of_pair(n, gens, x).len() == n)
}

pub fn is_normal_in(sub: &BTreeSet<Images>, group_gens: &[Images], sub_gens: &[Images]) -> bool {
    group_gens.iter().all(|g| {
        sub_gens
            .iter()
            .all(|h| sub.contains(&mul(&mul(&inv(g), h), g)))
    })
}

pub fn perm(images: Images) -> Permutation {
    Permutation::from_images(images).unwrap()
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Images {
    let mut v = id(n);
    v.shuffle(rng);
    v
}

fn cycle(n: usize, pts: &[usize]) -> Images {
    let mut v = id(n);
    for i in 0..pts.len() {
        v[pts[i]] = pts[(i + 1) % pts.len()];
    }
    v
}

/// `A wr B` on `a * b` points: `A` acting on block `0` (given by its
/// generators on `a` points) and `B` permuting the blocks.
pub fn wreath(a: usize, inner: &[Images], b: usize, outer: &[Images]) -> Vec<Images> {
    let n = a * b;
    let mut gens = Vec::new();
    for g in inner {
        let mut v = id(n);
        v[..a].copy_from_slice(&g[..a]);
        gens.push(v);
    }
    for h in outer {
        gens.push((0..n).map(|x| h[x / a] * a + x % a).collect());
    }
    gens
}

pub fn sym_gens(n: usize) -> Vec<Images> {
    if n < 2 {
        return Vec::new();
    }
    vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())]
}

pub fn cyc_gens(n: usize) -> Vec<Images> {
    if n < 2 {
        return Vec::new();
    }
    vec![cycle(n, &(0..n).collect::<Vec<_>>())]
}

pub fn dihedral_gens(n: usize) -> Vec<Images> {
    let mut g = cyc_gens(n);
    g.push((0..n).map(|i| (n - i) % n).collect());
    g
}

/// Affine group of `F_p^d` on `p^d` points, vectors numbered in base `p`.
pub fn affine_gens(p: usize, d: usize) -> Vec<Images> {
    let n = p.pow(d as u32);
    let digits = |x: usize| (0..d).map(|i| x / p.pow(i as u32) % p).collect::<Vec<_>>();
    let number = |v: &[usize]| {
        v.iter()
            .enumerate()
            .map(|(i, &c)| c * p.pow(i as u32))
            .sum::<usize>()
    };
    let mut gens = Vec::new();
    // translation by e_0
    gens.push(
        (0..n)
            .map(|x| {
                let mut v = digits(x);
                v[0] = (v[0] + 1) % p;
                number(&v)
            })
            .collect(),
    );
    // multiplication by a primitive root on the first coordinate
    if p > 2 {
        let r = (2..p)
            .find(|&r| (1..p - 1).all(|k| r.pow(k as u32) % p != 1))
            .unwrap();
        gens.push(
            (0..n)
                .map(|x| {
                    let mut v = digits(x);
                    v[0] = v[0] * r % p;
                    number(&v)
                })
                .collect(),
        );
    }
    if d > 1 {
        // coordinate rotation and an elementary transvection
        gens.push(
            (0..n)
                .map(|x| {
                    let v = digits(x);
                    let mut w = v.clone();
                    for i in 0..d {
                        w[(i + 1) % d] = v[i];
                    }
                    number(&w)
                })
                .collect(),
        );
        gens.push(
            (0..n)
                .map(|x| {
                    let mut v = digits(x);
                    v[0] = (v[0] + v[1]) % p;
                    number(&v)
                })
                .collect(),
        );
    }
    gens
}

/// Named transitive groups of degree `n`, as generator lists.
pub fn templates(n: usize) -> Vec<(String, Vec<Images>)> {
    let mut out = vec![
        (format!("S{n}"), sym_gens(n)),
        (format!("C{n}"), cyc_gens(n)),
        (format!("D{n}"), dihedral_gens(n)),
    ];
    for a in 2..n {
        if n.is_multiple_of(a) && n / a >= 2 {
            let b = n / a;
            out.push((
                format!("S{a}wrS{b}"),
                wreath(a, &sym_gens(a), b, &sym_gens(b)),
            ));
            out.push((
                format!("C{a}wrC{b}"),
                wreath(a, &cyc_gens(a), b, &cyc_gens(b)),
            ));
            out.push((
                format!("D{a}wrC{b}"),
                wreath(a, &dihedral_gens(a), b, &cyc_gens(b)),
            ));
        }
    }
    for (p, d) in [(2usize, 2usize), (2, 3), (3, 2), (5, 1), (7, 1), (3, 1)] {
        if p.pow(d as u32) == n {
            out.push((format!("AGL({d},{p})"), affine_gens(p, d)));
        }
    }
    out
}

/// Draws a transitive subgroup of `S_n` generated by two random elements of
/// a random template, conjugated by a random permutation.
pub fn random_transitive(n: usize, rng: &mut ChaCha8Rng) -> (String, PermGroup) {
    let templates = templates(n);
    loop {
        let (name, gens) = &templates[rng.gen_range(0..templates.len())];
        let t = PermGroup::new(n, gens.iter().cloned().map(perm).collect()).unwrap();
        let c = random_perm(n, rng);
        let ci = inv(&c);
        let pick: Vec<Images> = (0..2)
            .map(|_| mul(&mul(&ci, t.random_element(rng).images()), &c))
            .collect();
        if is_transitive(n, &pick) {
            let g = PermGroup::new(n, pick.into_iter().map(perm).collect()).unwrap();
            return (name.clone(), g);
        }
    }
}
