use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{is_p_power, p_part};
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

const SAMPLING_SEED: u64 = 0x5e41_7e6d;
const EXHAUSTIVE_LIMIT: u128 = 100_000;

/// The `p`-part of `g`: the power of `g` whose order is the `p`-part of `|g|`.
fn p_element_part(g: &Permutation, p: u64) -> Permutation {
    let order = g.order();
    let cofactor = order / p_part(order as u128, p) as u64;
    g.pow(cofactor as i64)
}

/// `<P, y>` when it is a strictly larger `p`-group.
fn extend(p_sub: &PermGroup, y: &Permutation, p: u64) -> Option<PermGroup> {
    if y.is_identity() || p_sub.contains(y) {
        return None;
    }
    let bigger = p_sub.with_generator(y.clone());
    is_p_power(bigger.order(), p).then_some(bigger)
}

/// A Sylow `p`-subgroup, grown by ascent through `p`-subgroups.
///
/// A `p`-subgroup `P` smaller than the `p`-part of `|G|` lies properly in a
/// Sylow subgroup, and in particular its normaliser there contains a
/// `p`-element outside `P`. Candidates are `p`-parts of seeded random
/// elements, accepted when `<P, y>` is again a `p`-group; after too many
/// misses the group is enumerated, provided `|G| <= budget`.
pub fn sylow_subgroup(group: &PermGroup, p: u64, budget: u64) -> Result<PermGroup> {
    let order = group.order();
    let target = p_part(order, p);
    if target == order {
        return Ok(group.clone());
    }
    let mut sylow = PermGroup::trivial(group.degree());
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLING_SEED);
    let max_misses = (order / target).saturating_mul(20).clamp(1_000, 200_000) as usize;
    let mut misses = 0;
    while sylow.order() < target {
        if misses < max_misses {
            let y = p_element_part(&group.random_element(&mut rng), p);
            match extend(&sylow, &y, p) {
                Some(bigger) => {
                    sylow = bigger;
                    misses = 0;
                }
                None => misses += 1,
            }
            continue;
        }
        if order > budget as u128 {
            return Err(Error::BoundExceeded { budget });
        }
        let found = group
            .elements()
            .find_map(|x| extend(&sylow, &p_element_part(&x, p), p));
        match found {
            Some(bigger) => {
                sylow = bigger;
                misses = 0;
            }
            None => {
                return Err(Error::InvariantViolation(format!(
                    "p-subgroup of order {} (p = {p}) admits no p-element extension in a group of order {order}: {group:?}",
                    sylow.order()
                )))
            }
        }
    }
    Ok(sylow)
}

/// An element of order exactly `p`.
///
/// Small groups are enumerated in order and the first element whose order
/// is divisible by `p` is powered down; larger groups are sampled.
pub fn element_of_order_p(group: &PermGroup, p: u64, budget: u64) -> Result<Permutation> {
    let order = group.order();
    if p < 2 || !order.is_multiple_of(p as u128) {
        return Err(Error::NoSuchElement { p });
    }
    let power_down = |x: &Permutation| {
        let o = x.order();
        o.is_multiple_of(p).then(|| x.pow((o / p) as i64))
    };
    if order <= EXHAUSTIVE_LIMIT {
        return group
            .elements()
            .find_map(|x| power_down(&x))
            .ok_or_else(|| {
                Error::InvariantViolation(format!("Cauchy element of order {p} missing"))
            });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLING_SEED);
    for _ in 0..budget {
        if let Some(y) = power_down(&group.random_element(&mut rng)) {
            return Ok(y);
        }
    }
    Err(Error::BoundExceeded { budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::standard::*;
    use crate::permcore::DEFAULT_BUDGET;

    #[test]
    fn sylow_of_s4() {
        let s2 = sylow_subgroup(&symmetric(4), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(s2.order(), 8);
        assert!(s2.is_subgroup_of(&symmetric(4)));
        let s3 = sylow_subgroup(&symmetric(4), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s3.order(), 3);
        assert_eq!(
            sylow_subgroup(&symmetric(4), 5, DEFAULT_BUDGET)
                .unwrap()
                .order(),
            1
        );
    }

    #[test]
    fn sylow_of_larger_groups() {
        let s = sylow_subgroup(&symmetric(8), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.order(), 128);
        let s = sylow_subgroup(&symmetric(9), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.order(), 81);
        assert!(s.is_transitive());
    }

    #[test]
    fn cauchy_elements() {
        let x = element_of_order_p(&symmetric(4), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(x.order(), 3);
        assert_eq!(x.cycle_lengths().iter().filter(|&&l| l == 3).count(), 1);
        assert!(matches!(
            element_of_order_p(&symmetric(4), 5, DEFAULT_BUDGET),
            Err(Error::NoSuchElement { p: 5 })
        ));
        let x = element_of_order_p(&cyclic(6), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            x,
            Permutation::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap()
        );
        let x = element_of_order_p(&symmetric(10), 7, DEFAULT_BUDGET).unwrap();
        assert_eq!(x.order(), 7);
    }
}
