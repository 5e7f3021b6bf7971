use crate::alternets::{
    alternet_digraph, alternet_partition, duplicate_class_semiregular, induced_group_on_alternets,
};
use crate::arith::is_p_power;
use crate::error::{Error, Result};
use crate::finder::{
    first_nonidentity, prime_filter_semiregular, semiregular_prime_power_degree, Certificate, Step,
};
use crate::graphs::{arc_orbit, Digraph};
use crate::oracle::require_semiregular;
use crate::permcore::{is_solvable, minimal_normal_subgroup, PermGroup};

/// A semiregular automorphism of a connected asymmetric digraph of
/// out-valence 4 with an arc-transitive group.
///
/// Tries, in order: a prime dividing `|G|` but not `|G_v|`; the centre of a
/// Sylow 2-subgroup when `G_v` is a 2-group and the order is a power of 2; a
/// semiregular minimal normal subgroup; cycling vertices with equal
/// neighbourhoods when the alternets are not loosely attached; otherwise
/// recursion on the digraph of alternets.
pub fn find_semiregular_digraph4(
    digraph: &Digraph,
    group: &PermGroup,
    budget: u64,
) -> Result<Certificate> {
    search(digraph, group, budget, 0)
}

fn search(digraph: &Digraph, group: &PermGroup, budget: u64, depth: usize) -> Result<Certificate> {
    let n = digraph.n();
    if group.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: group.degree(),
        });
    }
    if digraph.out_valence() != Some(4)
        || !digraph.is_asymmetric()
        || !digraph.is_weakly_connected()
    {
        return Err(Error::Precondition(
            "digraph must be weakly connected, asymmetric and of out-valence 4".into(),
        ));
    }
    if !group
        .generators()
        .iter()
        .all(|g| digraph.is_automorphism(g))
    {
        return Err(Error::NotAutomorphisms);
    }
    let arcs = digraph.arcs();
    if arc_orbit(group, arcs[0]).len() != arcs.len() {
        return Err(Error::Precondition("group is not arc-transitive".into()));
    }
    let dump =
        || format!("digraph on {n} vertices at depth {depth}, arcs {arcs:?}, group {group:?}");
    if !digraph.is_strongly_connected() {
        return Err(Error::InvariantViolation(format!(
            "arc-transitive connected digraph is not strongly connected: {}",
            dump()
        )));
    }

    if let Some(c) = prime_filter_semiregular(group, budget)? {
        return Ok(c);
    }
    if is_p_power(n as u128, 2) && is_p_power(group.order() / n as u128, 2) {
        return semiregular_prime_power_degree(group, budget);
    }
    if !is_solvable(group) {
        return Err(Error::InvariantViolation(format!(
            "group has no prime filter and is not solvable: {}",
            dump()
        )));
    }
    let normal = minimal_normal_subgroup(group, budget)?;
    if normal.is_semiregular() {
        let x = first_nonidentity(&normal).expect("minimal normal subgroup is non-trivial");
        return Certificate::new(x, vec![Step::AbelianNormal]).seal(group);
    }

    let partition = alternet_partition(digraph)?;
    if partition.has_degenerate_class() {
        return Err(Error::InvariantViolation(format!(
            "degenerate alternet: {}",
            dump()
        )));
    }
    for class in partition.classes() {
        if !class.is_complete_bipartite()? {
            return Err(Error::InvariantViolation(format!(
                "alternet {} is not complete bipartite: {}",
                class.index,
                dump()
            )));
        }
    }

    if !partition.is_loosely_attached()? {
        let x = duplicate_class_semiregular(digraph).map_err(|e| {
            Error::InvariantViolation(format!(
                "duplicate vertex classes unusable ({e}): {}",
                dump()
            ))
        })?;
        if group.contains(&x) {
            return Certificate::new(x, vec![Step::NotLooselyAttached]).seal(group);
        }
        let x = require_semiregular(group, budget)?;
        return Certificate::new(x, vec![Step::OracleFallback]).seal(group);
    }

    let alg = alternet_digraph(digraph, &partition)?;
    let hom = induced_group_on_alternets(digraph, group, &partition)?;
    if !hom.is_faithful() || alg.digraph.out_valence() != Some(4) {
        return Err(Error::InvariantViolation(format!(
            "alternet action faithful {}, alternet digraph out-valence {:?}: {}",
            hom.is_faithful(),
            alg.digraph.out_valence(),
            dump()
        )));
    }
    let below = search(&alg.digraph, hom.image(), budget, depth + 1)?;
    let x = hom.preimage(&below.element).ok_or_else(|| {
        Error::InvariantViolation(format!("{} has no preimage: {}", below.element, dump()))
    })?;
    Certificate::new(x, below.branch_trace)
        .prepend(&[Step::DigraphRecursion(depth + 1)])
        .seal(group)
}
