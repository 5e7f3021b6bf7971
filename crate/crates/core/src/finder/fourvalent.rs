use crate::actions::{check_same_valency_semiregular, local_action, quotient_graph};
use crate::arith::{is_p_power, is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::finder::{
    first_nonidentity, lift_semiregular_coprime, semiregular_abelian_normal, Certificate, Step,
};
use crate::graphs::{is_arc_transitive, Graph};
use crate::permcore::{element_of_order_p, is_solvable, minimal_normal_subgroup, PermGroup};

/// A semiregular element of order `p` in a solvable arc-transitive group of
/// a connected 4-valent graph, for an odd prime `p` dividing the order of
/// the graph.
///
/// If `G_v` is a 2-group, every element of order `p` is semiregular.
/// Otherwise the local action is 2-transitive and a minimal normal
/// `q`-subgroup `N` either has at most two orbits (then `q = p`), or is
/// semiregular with a 4-valent quotient, where the search recurses and
/// lifts back through the coprime kernel.
pub fn find_semiregular_4valent_solvable(
    graph: &Graph,
    group: &PermGroup,
    p: u64,
    budget: u64,
) -> Result<Certificate> {
    let n = graph.n();
    if !graph.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if graph.valency() != Some(4) {
        return Err(Error::Precondition(format!(
            "valency {:?} is not 4",
            graph.valency()
        )));
    }
    if p == 2 || !is_prime(p) || !n.is_multiple_of(p as usize) {
        return Err(Error::Precondition(format!(
            "{p} is not an odd prime dividing {n}"
        )));
    }
    if !is_arc_transitive(graph, group)? {
        return Err(Error::Precondition("group is not arc-transitive".into()));
    }
    if !is_solvable(group) {
        return Err(Error::NotSolvable);
    }
    let dump = || format!("4-valent graph on {n} vertices, p = {p}, group {group:?}");

    if is_p_power(group.order() / n as u128, 2) {
        let x = element_of_order_p(group, p, budget)?;
        return Certificate::new(x, vec![Step::PrimeFilter(p)]).seal(group);
    }

    let local = local_action(graph, group, 0)?;
    let two_transitive = local.is_transitive() && local.stabilizer(0).orbit(1).len() == 3;
    if !two_transitive {
        return Err(Error::InvariantViolation(format!(
            "local action {local:?} with stabiliser of even-and-odd order is not 2-transitive: {}",
            dump()
        )));
    }

    let normal = minimal_normal_subgroup(group, budget)?;
    let q = prime_divisors(normal.order())[0];
    if normal.num_orbits() <= 2 {
        if q != p {
            return Err(Error::InvariantViolation(format!(
                "minimal normal {q}-subgroup {normal:?} with at most two orbits but p = {p}: {}",
                dump()
            )));
        }
        return semiregular_abelian_normal(group, &normal);
    }

    let data = quotient_graph(graph, group, &normal)?;
    if data.quotient().valency() != Some(4)
        || !check_same_valency_semiregular(graph, &normal, &data)?
    {
        return Err(Error::InvariantViolation(format!(
            "quotient by {normal:?} has valency {:?}, expected 4: {}",
            data.quotient().valency(),
            dump()
        )));
    }
    if q == p {
        let x = first_nonidentity(&normal).expect("minimal normal subgroup is non-trivial");
        return Certificate::new(x, vec![Step::AbelianNormal]).seal(group);
    }
    let below =
        find_semiregular_4valent_solvable(data.quotient(), data.induced_group(), p, budget)?;
    let g = data.preimage(&below.element).ok_or_else(|| {
        Error::InvariantViolation(format!("{} has no preimage: {}", below.element, dump()))
    })?;
    let lifted = lift_semiregular_coprime(group, data.kernel(), &g, data.orbit_partition())?;
    let mut trace = vec![Step::QuotientRecursion];
    trace.extend(below.branch_trace);
    trace.extend(lifted.branch_trace.iter().copied());
    Ok(Certificate {
        branch_trace: trace,
        ..lifted
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{circulant, complete_graph, tiny_automorphism_group};
    use crate::oracle::all_semiregular;
    use crate::permcore::{Permutation, DEFAULT_BUDGET};

    #[test]
    fn complete_graph_on_five() {
        let k5 = complete_graph(5);
        let agl = PermGroup::new(
            5,
            vec![
                Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap(),
                Permutation::parse_cycles(5, "(2,3,5,4)").unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(agl.order(), 20);
        let c = find_semiregular_4valent_solvable(&k5, &agl, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.order, 5);
        assert!(c.verified);
        assert!(all_semiregular(&agl, DEFAULT_BUDGET)
            .unwrap()
            .contains(&c.element));
    }

    #[test]
    fn octahedron() {
        let oct = circulant(6, &[1, 2, 4, 5]).unwrap();
        let aut = tiny_automorphism_group(&oct, 16).unwrap();
        assert_eq!(aut.order(), 48);
        let c = find_semiregular_4valent_solvable(&oct, &aut, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.order, 3);
        assert_eq!(c.branch_trace, vec![Step::PrimeFilter(3)]);
        assert!(all_semiregular(&aut, DEFAULT_BUDGET)
            .unwrap()
            .contains(&c.element));
        assert!(matches!(
            find_semiregular_4valent_solvable(&oct, &aut, 5, DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }
}
