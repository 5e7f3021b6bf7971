use std::collections::{HashMap, HashSet, VecDeque};

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

/// Smallest normal subgroup of `group` containing `seeds`.
pub fn normal_closure(group: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let mut closure = PermGroup::generated_by(group.degree(), seeds.iter().cloned());
    loop {
        let mut grew = false;
        let current: Vec<Permutation> = closure.generators().to_vec();
        for x in &current {
            for g in group.generators() {
                let c = x.conjugate_by(g);
                if !closure.contains(&c) {
                    closure = closure.with_generator(c);
                    grew = true;
                }
            }
        }
        if !grew {
            return closure;
        }
    }
}

pub fn commutator_subgroup(group: &PermGroup) -> PermGroup {
    let gens = group.generators();
    let mut seeds = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let c = Permutation::commutator(&gens[i], &gens[j]);
            if !c.is_identity() {
                seeds.push(c);
            }
        }
    }
    normal_closure(group, &seeds)
}

/// `G = G^(0) > G^(1) > ...` until the series stabilises; the last entry is
/// the perfect core (trivial iff the group is solvable).
pub fn derived_series(group: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![group.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_solvable(group: &PermGroup) -> bool {
    derived_series(group).last().unwrap().order() == 1
}

/// Elements commuting with every generator. Enumerates the group.
pub fn center(group: &PermGroup, budget: u64) -> Result<PermGroup> {
    if group.is_abelian() {
        return Ok(group.clone());
    }
    let central = group
        .elements_within(budget)?
        .into_iter()
        .filter(|z| group.generators().iter().all(|g| z.commutes_with(g)));
    Ok(PermGroup::generated_by(group.degree(), central))
}

/// The conjugacy class of `g`, sorted.
pub fn conjugacy_class(
    group: &PermGroup,
    g: &Permutation,
    budget: u64,
) -> Result<Vec<Permutation>> {
    let mut seen = HashSet::from([g.clone()]);
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in group.generators() {
            let y = x.conjugate_by(s);
            if seen.insert(y.clone()) {
                if seen.len() as u64 > budget {
                    return Err(Error::BoundExceeded { budget });
                }
                queue.push_back(y);
            }
        }
    }
    let mut class: Vec<Permutation> = seen.into_iter().collect();
    class.sort();
    Ok(class)
}

/// Transitive with every non-trivial normal subgroup transitive.
///
/// Every non-trivial normal subgroup contains the normal closure of some
/// element of prime order, so one such closure per conjugacy class decides it.
pub fn is_quasiprimitive(group: &PermGroup, budget: u64) -> Result<bool> {
    if !group.is_transitive() {
        return Ok(false);
    }
    if group.order() > budget as u128 {
        return Err(Error::BoundExceeded { budget });
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    for g in group.elements() {
        if g.is_identity() || seen.contains(&g) || !is_prime(g.order()) {
            continue;
        }
        seen.extend(conjugacy_class(group, &g, budget)?);
        if !normal_closure(group, std::slice::from_ref(&g)).is_transitive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A minimal normal subgroup of a non-trivial solvable group.
///
/// Takes the last non-trivial derived subgroup `A` (abelian and normal), the
/// smallest prime `q` dividing `|A|`, the subgroup `B` of elements of `A`
/// with `a^q = 1`, and then an irreducible `F_q G`-submodule of `B` under
/// conjugation, found by spinning vectors.
pub fn minimal_normal_subgroup(group: &PermGroup, budget: u64) -> Result<PermGroup> {
    if group.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    let series = derived_series(group);
    if series.last().unwrap().order() != 1 {
        return Err(Error::NotSolvable);
    }
    let abelian = &series[series.len() - 2];
    let q = prime_divisors(abelian.order())[0];
    let torsion = q_torsion(abelian, q, budget)?;
    let module = ConjugationModule::new(group, &torsion, q);
    let basis = module.irreducible_submodule();
    Ok(PermGroup::generated_by(
        group.degree(),
        basis.iter().map(|v| module.element(v)),
    ))
}

/// Elements of an abelian group with `a^q = 1`, in enumeration order.
fn q_torsion(abelian: &PermGroup, q: u64, budget: u64) -> Result<Vec<Permutation>> {
    let q_parts = abelian.generators().iter().map(|a| {
        let ord = a.order();
        let mut coprime = ord;
        while coprime % q == 0 {
            coprime /= q;
        }
        a.pow(coprime as i64)
    });
    let sylow = PermGroup::generated_by(abelian.degree(), q_parts);
    Ok(sylow
        .elements_within(budget)?
        .into_iter()
        .filter(|a| a.pow(q as i64).is_identity())
        .collect())
}

/// An elementary abelian `q`-group as an `F_q`-vector space with the
/// conjugation action of a group's generators.
struct ConjugationModule {
    q: u32,
    degree: usize,
    basis: Vec<Permutation>,
    matrices: Vec<Vec<Vec<u32>>>,
}

impl ConjugationModule {
    fn new(group: &PermGroup, elements: &[Permutation], q: u64) -> Self {
        let degree = group.degree();
        let mut span = PermGroup::trivial(degree);
        let mut basis = Vec::new();
        for x in elements {
            if !span.contains(x) {
                span = span.with_generator(x.clone());
                basis.push(x.clone());
            }
        }
        let q = q as u32;
        let d = basis.len();
        let mut coords: HashMap<Permutation, Vec<u32>> = HashMap::new();
        let mut vector = vec![0u32; d];
        loop {
            let el = element_of(degree, &basis, &vector);
            coords.insert(el, vector.clone());
            // odometer increment over F_q^d
            let mut i = 0;
            while i < d {
                vector[i] += 1;
                if vector[i] < q {
                    break;
                }
                vector[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        // matrices[g][i] = coordinates of the conjugate of basis[i] by g
        let matrices = group
            .generators()
            .iter()
            .map(|g| {
                basis
                    .iter()
                    .map(|e| coords[&e.conjugate_by(g)].clone())
                    .collect()
            })
            .collect();
        ConjugationModule {
            q,
            degree,
            basis,
            matrices,
        }
    }

    fn element(&self, v: &[u32]) -> Permutation {
        element_of(self.degree, &self.basis, v)
    }

    fn act(&self, matrix: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
        let d = self.basis.len();
        let mut out = vec![0u32; d];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(&matrix[i]) {
                *o = (*o + c * m) % self.q;
            }
        }
        out
    }

    /// Submodule spanned by the orbit of `v`, as an echelon basis.
    fn spin(&self, v: Vec<u32>) -> Echelon {
        let mut span = Echelon::new(self.q);
        let mut queue = VecDeque::new();
        if let Some(w) = span.insert(v) {
            queue.push_back(w);
        }
        while let Some(w) = queue.pop_front() {
            for m in &self.matrices {
                if let Some(x) = span.insert(self.act(m, &w)) {
                    queue.push_back(x);
                }
            }
        }
        span
    }

    /// Descends from the whole space into proper spun submodules until every
    /// non-zero vector of the current submodule spins to all of it.
    fn irreducible_submodule(&self) -> Vec<Vec<u32>> {
        let d = self.basis.len();
        let mut current: Vec<Vec<u32>> = (0..d)
            .map(|i| (0..d).map(|j| u32::from(i == j)).collect())
            .collect();
        'descend: loop {
            let k = current.len();
            for coeffs in projective_points(self.q, k) {
                let mut v = vec![0u32; d];
                for (c, b) in coeffs.iter().zip(&current) {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = (*x + c * y) % self.q;
                    }
                }
                let sub = self.spin(v);
                if sub.rows.len() < k {
                    current = sub.rows;
                    continue 'descend;
                }
            }
            return current;
        }
    }
}

fn element_of(degree: usize, basis: &[Permutation], v: &[u32]) -> Permutation {
    basis
        .iter()
        .zip(v)
        .fold(Permutation::identity(degree), |acc, (e, &c)| {
            acc.compose(&e.pow(c as i64))
        })
}

/// Coefficient vectors of length `k` whose first non-zero entry is 1.
fn projective_points(q: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for lead in 0..k {
        let free = k - lead - 1;
        let count = (q as usize).pow(free as u32);
        for mut n in 0..count {
            let mut v = vec![0u32; k];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (n % q as usize) as u32;
                n /= q as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Row-echelon basis over `F_q` with each pivot normalised to 1.
struct Echelon {
    q: u32,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(q: u32) -> Self {
        Echelon {
            q,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn inverse(&self, a: u32) -> u32 {
        (1..self.q).find(|&b| a * b % self.q == 1).unwrap()
    }

    /// Inserts `v` if it is outside the span; returns the original vector in that case.
    fn insert(&mut self, v: Vec<u32>) -> Option<Vec<u32>> {
        let mut w = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = (*x + (self.q - c) * y) % self.q;
                }
            }
        }
        let p = w.iter().position(|&x| x != 0)?;
        let inv = self.inverse(w[p]);
        for x in w.iter_mut() {
            *x = *x * inv % self.q;
        }
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = (*x + (self.q - c) * y) % self.q;
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::standard::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    fn d4() -> PermGroup {
        PermGroup::new(4, vec![p(4, &[&[0, 1, 2, 3]]), p(4, &[&[0, 2]])]).unwrap()
    }

    #[test]
    fn derived_series_of_s4_and_a5() {
        let orders: Vec<u128> = derived_series(&symmetric(4))
            .iter()
            .map(|g| g.order())
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(is_solvable(&symmetric(4)));
        let a5 = PermGroup::new(5, vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(a5.order(), 60);
        let series = derived_series(&a5);
        assert_eq!(series.last().unwrap().order(), 60);
        assert!(!is_solvable(&a5));
        assert!(is_solvable(&cyclic(12)));
    }

    #[test]
    fn centers() {
        let z = center(&d4(), 100).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&p(4, &[&[0, 2], &[1, 3]])));
        assert_eq!(center(&cyclic(4), 100).unwrap().order(), 4);
        assert_eq!(center(&symmetric(4), 100).unwrap().order(), 1);
        assert!(matches!(
            center(&symmetric(5), 10),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn normal_closures() {
        let v4 = normal_closure(&symmetric(4), &[p(4, &[&[0, 1], &[2, 3]])]);
        assert_eq!(v4.order(), 4);
        let c = normal_closure(&cyclic(6), &[p(6, &[&[0, 2, 4], &[1, 3, 5]])]);
        assert_eq!(c.order(), 3);
        assert_eq!(
            normal_closure(&symmetric(4), &[p(4, &[&[0, 1]])]).order(),
            24
        );
    }

    #[test]
    fn minimal_normal_subgroups() {
        let n = minimal_normal_subgroup(&symmetric(4), 1000).unwrap();
        assert_eq!(n.order(), 4);
        assert!(n.contains(&p(4, &[&[0, 1], &[2, 3]])));
        assert!(n.contains(&p(4, &[&[0, 2], &[1, 3]])));

        let n = minimal_normal_subgroup(&cyclic(6), 1000).unwrap();
        assert!(n.order() == 2 || n.order() == 3);

        let n = minimal_normal_subgroup(&cyclic(3), 1000).unwrap();
        assert_eq!(n.order(), 3);

        assert!(matches!(
            minimal_normal_subgroup(&PermGroup::trivial(3), 1000),
            Err(Error::TrivialGroup)
        ));
        assert!(matches!(
            minimal_normal_subgroup(&alternating(5), 1000),
            Err(Error::NotSolvable)
        ));
    }

    #[test]
    fn quasiprimitivity() {
        assert!(is_quasiprimitive(&symmetric(4), 1000).unwrap());
        assert!(!is_quasiprimitive(&cyclic(8), 1000).unwrap());
        assert!(is_quasiprimitive(&cyclic(5), 1000).unwrap());
        assert!(is_quasiprimitive(&alternating(5), 1000).unwrap());
        assert!(matches!(
            is_quasiprimitive(&symmetric(6), 100),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn projective_point_count() {
        assert_eq!(projective_points(2, 3).len(), 7);
        assert_eq!(projective_points(3, 2).len(), 4);
    }
}
