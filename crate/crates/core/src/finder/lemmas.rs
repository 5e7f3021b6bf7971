use crate::arith::{gcd, prime_divisors, prime_power};
use crate::error::{Error, Result};
use crate::finder::{first_nonidentity, Certificate, Step};
use crate::permcore::{
    center, element_of_order_p, sylow_subgroup, ActionHom, Partition, PermGroup, Permutation,
};

/// A transitive group of prime-power degree `p^k`: a non-identity central
/// element of a Sylow `p`-subgroup, which is transitive and so has a
/// semiregular centre.
pub fn semiregular_prime_power_degree(group: &PermGroup, budget: u64) -> Result<Certificate> {
    let n = group.degree();
    let (p, _) = prime_power(n as u128).ok_or(Error::DegreeNotPrimePower(n))?;
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let sylow = sylow_subgroup(group, p, budget)?;
    if !sylow.is_transitive() {
        return Err(Error::InvariantViolation(format!(
            "Sylow {p}-subgroup {sylow:?} of transitive {group:?} is intransitive"
        )));
    }
    let z = first_nonidentity(&center(&sylow, budget)?).ok_or_else(|| {
        Error::InvariantViolation(format!("Sylow {p}-subgroup {sylow:?} has trivial centre"))
    })?;
    if !z.is_semiregular() {
        return Err(Error::InvariantViolation(format!(
            "central element {z} of transitive Sylow subgroup {sylow:?} is not semiregular"
        )));
    }
    Certificate::new(z, vec![Step::PrimePowerDegree]).seal(group)
}

/// A transitive group with a non-trivial abelian normal subgroup `N` having
/// at most two orbits.
///
/// If `N` is semiregular any non-identity element works. Otherwise pick
/// `n != 1` in some `N_v`, a point `u` outside `v^N` and `g` with `v^g = u`;
/// then `n n^g` is semiregular.
pub fn semiregular_abelian_normal(group: &PermGroup, normal: &PermGroup) -> Result<Certificate> {
    if normal.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            expected: group.degree(),
            found: normal.degree(),
        });
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if normal.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    if normal.num_orbits() > 2 {
        return Err(Error::TooManyOrbits);
    }
    if !normal.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if !normal.is_subgroup_of(group) || !group.is_normal_subgroup(normal) {
        return Err(Error::NotNormal);
    }
    let element = if normal.is_semiregular() {
        first_nonidentity(normal).expect("non-trivial group")
    } else {
        let v = (0..group.degree())
            .find(|&v| !normal.stabilizer(v).is_trivial())
            .expect("a non-semiregular group has a non-trivial stabiliser");
        let n = first_nonidentity(&normal.stabilizer(v)).expect("non-trivial stabiliser");
        let orbit = normal.orbit(v);
        let u = (0..group.degree())
            .find(|u| orbit.binary_search(u).is_err())
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "transitive abelian {normal:?} is not semiregular"
                ))
            })?;
        let (_, g) = group
            .orbit_transversal(v)
            .into_iter()
            .find(|(x, _)| *x == u)
            .expect("transitive group");
        n.compose(&n.conjugate_by(&g))
    };
    if element.is_identity() || !element.is_semiregular() {
        return Err(Error::InvariantViolation(format!(
            "abelian normal construction gave {element} for N = {normal:?} in {group:?}"
        )));
    }
    Certificate::new(element, vec![Step::AbelianNormal]).seal(group)
}

/// Lifts `g` whose image on the blocks of `partition` is semiregular of
/// order `m` coprime to `|K|`, where `K` is the kernel on the blocks: with
/// `k = g^m` in `K`, the power `h = g^|k|` is semiregular of order `m`.
pub fn lift_semiregular_coprime(
    group: &PermGroup,
    kernel: &PermGroup,
    g: &Permutation,
    partition: &Partition,
) -> Result<Certificate> {
    if !group.contains(g) {
        return Err(Error::Precondition(format!("{g} is not in the group")));
    }
    if !kernel.is_subgroup_of(group) || !group.is_normal_subgroup(kernel) {
        return Err(Error::NotNormal);
    }
    let action = ActionHom::on_partition(group, partition)?;
    if action.kernel_order() != kernel.order() || !action.kernel().is_subgroup_of(kernel) {
        return Err(Error::NotFaithful);
    }
    let image = partition.induced_permutation(g)?;
    if image.is_identity() || !image.is_semiregular() {
        return Err(Error::ImageNotSemiregular);
    }
    let m = image.order();
    if gcd(m as u128, kernel.order()) != 1 {
        return Err(Error::NotCoprime {
            order: m,
            kernel_order: kernel.order(),
        });
    }
    let k = g.pow(m as i64);
    if !kernel.contains(&k) {
        return Err(Error::InvariantViolation(format!(
            "{g}^{m} = {k} is outside the kernel {kernel:?}"
        )));
    }
    let h = g.pow(k.order() as i64);
    if h.order() != m || !h.is_semiregular() {
        return Err(Error::InvariantViolation(format!(
            "lift {h} of {g} has order {} (expected {m}) or is not semiregular",
            h.order()
        )));
    }
    Certificate::new(h, vec![Step::CoprimeLift]).seal(group)
}

/// For a transitive group, the smallest prime dividing `|G|` but not
/// `|G_v|` yields a semiregular element of that order: no point stabiliser
/// contains one.
pub fn prime_filter_semiregular(group: &PermGroup, budget: u64) -> Result<Option<Certificate>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let order = group.order();
    let stabilizer_order = order / group.degree() as u128;
    for p in prime_divisors(order) {
        if !stabilizer_order.is_multiple_of(p as u128) {
            let x = element_of_order_p(group, p, budget)?;
            return Certificate::new(x, vec![Step::PrimeFilter(p)])
                .seal(group)
                .map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::standard::*;
    use crate::permcore::DEFAULT_BUDGET;

    fn p(n: usize, text: &str) -> Permutation {
        Permutation::parse_cycles(n, text).unwrap()
    }

    fn d4() -> PermGroup {
        PermGroup::new(4, vec![p(4, "(1,2,3,4)"), p(4, "(1,3)")]).unwrap()
    }

    #[test]
    fn prime_power_degree() {
        let c = semiregular_prime_power_degree(&cyclic(4), DEFAULT_BUDGET).unwrap();
        assert!(c.verified);
        assert!(
            c.element == p(4, "(1,3)(2,4)")
                || c.element == p(4, "(1,2,3,4)")
                || c.element == p(4, "(1,4,3,2)")
        );
        let c = semiregular_prime_power_degree(&d4(), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.element, p(4, "(1,3)(2,4)"));
        assert_eq!(c.branch_trace, vec![Step::PrimePowerDegree]);
        assert!(matches!(
            semiregular_prime_power_degree(&cyclic(6), DEFAULT_BUDGET),
            Err(Error::DegreeNotPrimePower(6))
        ));
    }

    #[test]
    fn abelian_normal() {
        let n = PermGroup::new(4, vec![p(4, "(1,3)"), p(4, "(2,4)")]).unwrap();
        let c = semiregular_abelian_normal(&d4(), &n).unwrap();
        assert_eq!(c.element, p(4, "(1,3)(2,4)"));
        assert_eq!(c.branch_trace, vec![Step::AbelianNormal]);

        let n = PermGroup::new(4, vec![p(4, "(1,3)(2,4)")]).unwrap();
        let c = semiregular_abelian_normal(&cyclic(4), &n).unwrap();
        assert_eq!(c.element, p(4, "(1,3)(2,4)"));

        let v4 = PermGroup::new(4, vec![p(4, "(1,2)(3,4)"), p(4, "(1,3)(2,4)")]).unwrap();
        let not_normal = PermGroup::new(4, vec![p(4, "(1,2)(3,4)")]).unwrap();
        assert!(matches!(
            semiregular_abelian_normal(&symmetric(4), &not_normal),
            Err(Error::NotNormal)
        ));
        let transposition = PermGroup::new(4, vec![p(4, "(1,2)")]).unwrap();
        assert!(matches!(
            semiregular_abelian_normal(&symmetric(4), &transposition),
            Err(Error::TooManyOrbits)
        ));
        assert!(
            semiregular_abelian_normal(&symmetric(4), &v4)
                .unwrap()
                .verified
        );
        assert!(matches!(
            semiregular_abelian_normal(&symmetric(4), &alternating(4)),
            Err(Error::NotAbelian)
        ));
        let three_orbits = PermGroup::new(6, vec![p(6, "(1,4)")]).unwrap();
        assert!(matches!(
            semiregular_abelian_normal(&dihedral(6), &three_orbits),
            Err(Error::TooManyOrbits)
        ));
    }

    #[test]
    fn coprime_lift_on_six_points() {
        let g = p(6, "(1,2,3,4,5,6)");
        let k = PermGroup::new(6, vec![p(6, "(1,4)(2,5)(3,6)")]).unwrap();
        let blocks = k.orbit_partition();
        let c = lift_semiregular_coprime(&cyclic(6), &k, &g, &blocks).unwrap();
        assert_eq!(c.element, p(6, "(1,3,5)(2,4,6)"));
        assert_eq!(c.order, 3);
        assert_eq!(c.branch_trace, vec![Step::CoprimeLift]);

        // g^m = 1 already: h = g
        let g3 = p(6, "(1,3,5)(2,4,6)");
        assert_eq!(
            lift_semiregular_coprime(&cyclic(6), &k, &g3, &blocks)
                .unwrap()
                .element,
            g3
        );

        // order-2 image over a kernel of order 3
        let k3 = PermGroup::new(6, vec![p(6, "(1,3,5)(2,4,6)")]).unwrap();
        let c = lift_semiregular_coprime(&cyclic(6), &k3, &g, &k3.orbit_partition()).unwrap();
        assert_eq!(c.element, p(6, "(1,4)(2,5)(3,6)"));

        // C_4 over its order-2 subgroup: image order 2, kernel order 2
        let k2 = PermGroup::new(4, vec![p(4, "(1,3)(2,4)")]).unwrap();
        assert!(matches!(
            lift_semiregular_coprime(&cyclic(4), &k2, &p(4, "(1,2,3,4)"), &k2.orbit_partition()),
            Err(Error::NotCoprime {
                order: 2,
                kernel_order: 2
            })
        ));
    }

    #[test]
    fn prime_filter() {
        let c = prime_filter_semiregular(&dihedral(5), DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(c.order, 5);
        assert_eq!(c.branch_trace, vec![Step::PrimeFilter(5)]);
        let c = prime_filter_semiregular(&alternating(4), DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(c.order, 2);
        assert!(c.element.is_semiregular());
        assert_eq!(
            prime_filter_semiregular(&symmetric(4), DEFAULT_BUDGET).unwrap(),
            None
        );
    }
}
