use crate::arith::is_pi_number;
use crate::error::{Error, Result};
use crate::permcore::{Partition, PermGroup};
use crate::unionfind::UnionFind;

/// Finest block system in which `0` and `x` share a block.
fn block_system_joining(group: &PermGroup, x: usize) -> Partition {
    let mut uf = UnionFind::new(group.degree());
    let mut pending = vec![(0, x)];
    uf.union(0, x);
    while let Some((a, b)) = pending.pop() {
        for g in group.generators() {
            let (ga, gb) = (g.apply(a), g.apply(b));
            if uf.union(ga, gb) {
                pending.push((ga, gb));
            }
        }
    }
    Partition::from_labels(&uf.labels())
}

/// A minimal non-trivial block system of a transitive group, or `None` if the
/// group is primitive.
///
/// Every seed pair `{0, x}` is closed under the generators; the smallest
/// resulting block is minimal, ties broken by smallest `x`.
pub fn minimal_blocks(group: &PermGroup) -> Result<Option<Partition>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let mut best: Option<Partition> = None;
    for x in 1..group.degree() {
        let system = block_system_joining(group, x);
        if system.num_blocks() == 1 {
            continue;
        }
        let size = system.blocks()[0].len();
        if best.as_ref().is_none_or(|b| size < b.blocks()[0].len()) {
            best = Some(system);
        }
    }
    Ok(best)
}

pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    Ok(minimal_blocks(group)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree8Class {
    Primitive,
    /// Imprimitive, with order divisible by no prime other than 2 and 3.
    ImprimitiveTwoThree,
}

/// Transitive groups of degree 8 are primitive or `{2,3}`-groups; anything
/// else is reported as an invariant violation.
pub fn classify_transitive_degree8(group: &PermGroup) -> Result<Degree8Class> {
    if group.degree() != 8 {
        return Err(Error::WrongDegree {
            expected: 8,
            found: group.degree(),
        });
    }
    match minimal_blocks(group)? {
        None => Ok(Degree8Class::Primitive),
        Some(blocks) => {
            let order = group.order();
            if is_pi_number(order, &[2, 3]) {
                Ok(Degree8Class::ImprimitiveTwoThree)
            } else {
                Err(Error::InvariantViolation(format!(
                    "imprimitive degree-8 group of order {order} with blocks {:?}: {group:?}",
                    blocks.blocks()
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::standard::*;
    use crate::permcore::Permutation;

    fn d4() -> PermGroup {
        PermGroup::new(
            4,
            vec![
                Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn cyclic_four_has_pairs() {
        let b = minimal_blocks(&cyclic(4)).unwrap().unwrap();
        assert_eq!(b.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(
            minimal_blocks(&d4()).unwrap().unwrap().blocks(),
            &[vec![0, 2], vec![1, 3]]
        );
    }

    #[test]
    fn symmetric_is_primitive() {
        assert!(is_primitive(&symmetric(4)).unwrap());
        assert!(is_primitive(&cyclic(7)).unwrap());
        assert!(!is_primitive(&cyclic(6)).unwrap());
    }

    #[test]
    fn minimal_means_smallest_block() {
        // C_8 has block systems with blocks of size 2 and 4; the minimal one has size 2.
        let b = minimal_blocks(&cyclic(8)).unwrap().unwrap();
        assert_eq!(b.blocks()[0], vec![0, 4]);
    }

    #[test]
    fn intransitive_rejected() {
        let g =
            PermGroup::new(4, vec![Permutation::from_cycles(4, &[vec![0, 1]]).unwrap()]).unwrap();
        assert!(matches!(minimal_blocks(&g), Err(Error::NotTransitive)));
    }

    #[test]
    fn degree_eight_classification() {
        assert_eq!(
            classify_transitive_degree8(&cyclic(8)).unwrap(),
            Degree8Class::ImprimitiveTwoThree
        );
        assert_eq!(
            classify_transitive_degree8(&alternating(8)).unwrap(),
            Degree8Class::Primitive
        );
        let d8 = dihedral(8);
        assert_eq!(d8.order(), 16);
        assert_eq!(
            classify_transitive_degree8(&d8).unwrap(),
            Degree8Class::ImprimitiveTwoThree
        );
        assert!(matches!(
            classify_transitive_degree8(&cyclic(6)),
            Err(Error::WrongDegree { .. })
        ));
    }
}
