use crate::actions::{local_action, quotient_graph};
use crate::alternets::derive_orientation;
use crate::arith::{is_p_power, prime_divisors, prime_power};
use crate::error::{Error, Result};
use crate::finder::{
    find_semiregular_4valent_solvable, find_semiregular_digraph4, first_nonidentity,
    lift_semiregular_coprime, prime_filter_semiregular, semiregular_abelian_normal,
    semiregular_prime_power_degree, Certificate, FinderConfig, Step,
};
use crate::graphs::{is_arc_transitive, Graph};
use crate::oracle::require_semiregular;
use crate::permcore::{
    classify_transitive_degree8, is_quasiprimitive, is_solvable, minimal_normal_subgroup,
    Degree8Class, PermGroup,
};

/// A certified semiregular automorphism of a connected 8-valent graph with
/// an arc-transitive group `G`.
///
/// A quasiprimitive local action goes to exhaustive search. Otherwise the
/// local action is an imprimitive `{2,3}`-group, and `G` is either caught by
/// the prime filter or solvable. A minimal normal subgroup `N` then gives the
/// element directly (at most two orbits, or semiregular), or the degree is a
/// prime power, or `N` is a 2-group whose quotient is 4-valent (recurse and
/// lift) or a cycle (orient and pass to the out-valence-4 digraph).
pub fn find_semiregular_8valent(
    graph: &Graph,
    group: &PermGroup,
    config: &FinderConfig,
) -> Result<Certificate> {
    let budget = config.budget;
    let n = graph.n();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: group.degree(),
        });
    }
    if !graph.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    match graph.valency() {
        Some(8) => {}
        Some(k) => return Err(Error::Precondition(format!("valency {k} ≠ 8"))),
        None => return Err(Error::Precondition("graph is not regular".into())),
    }
    if !group.generators().iter().all(|g| graph.is_automorphism(g)) {
        return Err(Error::NotAutomorphisms);
    }
    if !is_arc_transitive(graph, group)? {
        return Err(Error::Precondition("group is not arc-transitive".into()));
    }
    let dump = || format!("8-valent graph on {n} vertices, group {group:?}");

    let local = local_action(graph, group, 0)?;
    if is_quasiprimitive(&local, budget)? {
        let x = require_semiregular(group, budget)?;
        return Certificate::new(x, vec![Step::QuasiprimitiveOracle]).seal(group);
    }
    if classify_transitive_degree8(&local)? != Degree8Class::ImprimitiveTwoThree {
        return Err(Error::InvariantViolation(format!(
            "local action {local:?} is primitive but not quasiprimitive: {}",
            dump()
        )));
    }

    if !is_solvable(group) {
        return prime_filter_semiregular(group, budget)?.ok_or_else(|| {
            Error::InvariantViolation(format!(
                "insoluble group with {{2,3}}-local action has no prime filter: {}",
                dump()
            ))
        });
    }

    let normal = minimal_normal_subgroup(group, budget)?;
    if normal.num_orbits() <= 2 {
        return semiregular_abelian_normal(group, &normal);
    }
    if normal.is_semiregular() {
        let x = first_nonidentity(&normal).expect("minimal normal subgroup is non-trivial");
        return Certificate::new(x, vec![Step::AbelianNormal]).seal(group);
    }
    if prime_power(n as u128).is_some() {
        return semiregular_prime_power_degree(group, budget);
    }
    if !is_p_power(normal.order(), 2) {
        return Err(Error::InvariantViolation(format!(
            "non-semiregular minimal normal subgroup {normal:?} is not a 2-group: {}",
            dump()
        )));
    }

    let data = quotient_graph(graph, group, &normal)?;
    let certificate = match data.quotient().valency() {
        Some(4) => {
            let kernel = data.kernel();
            if !is_p_power(kernel.order(), 2) {
                return Err(Error::InvariantViolation(format!(
                    "kernel {kernel:?} on the 4-valent quotient is not a 2-group: {}",
                    dump()
                )));
            }
            let m = data.quotient().n();
            let p = prime_divisors(m as u128)
                .into_iter()
                .find(|&p| p != 2)
                .ok_or_else(|| {
                    Error::InvariantViolation(format!(
                        "4-valent quotient has 2-power order {m}: {}",
                        dump()
                    ))
                })?;
            let below = find_semiregular_4valent_solvable(
                data.quotient(),
                data.induced_group(),
                p,
                budget,
            )?;
            let g = data.preimage(&below.element).ok_or_else(|| {
                Error::InvariantViolation(format!("{} has no preimage: {}", below.element, dump()))
            })?;
            let lifted = lift_semiregular_coprime(group, kernel, &g, data.orbit_partition())?;
            let mut trace = vec![Step::QuotientRecursion];
            trace.extend(below.branch_trace);
            trace.push(Step::CoprimeLift);
            lifted.with_element_trace(trace)
        }
        Some(2) => {
            let (digraph, preserving) = derive_orientation(graph, group, &data)?;
            find_semiregular_digraph4(&digraph, &preserving, budget)?
                .prepend(&[Step::DigraphRecursion(0)])
        }
        other => {
            return Err(Error::InvariantViolation(format!(
                "quotient by {normal:?} has valency {other:?}: {}",
                dump()
            )))
        }
    };
    certificate.seal(group)
}
