//! Exhaustive ground truth: semiregular search by enumeration and
//! certificate checking that does not go through the finder.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finder::Certificate;
use crate::graphs::{Digraph, Graph};
use crate::permcore::{PermGroup, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub found: Option<Permutation>,
    pub elements_scanned: u64,
    pub budget: u64,
    /// Every element of the group was scanned.
    pub exhausted: bool,
}

impl SearchReport {
    pub fn budget_exceeded(&self) -> bool {
        self.found.is_none() && !self.exhausted
    }
}

/// Cycle lengths recomputed straight from the image table.
fn uniform_cycle_length(images: &[usize]) -> Option<usize> {
    let mut seen = vec![false; images.len()];
    let mut common = None;
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
            len += 1;
        }
        match common {
            None => common = Some(len),
            Some(c) if c != len => return None,
            Some(_) => {}
        }
    }
    common
}

fn is_nonidentity_semiregular(images: &[usize]) -> bool {
    matches!(uniform_cycle_length(images), Some(c) if c > 1)
}

/// First non-identity semiregular element in enumeration order, scanning at
/// most `budget` elements.
pub fn brute_force_semiregular(group: &PermGroup, budget: u64) -> SearchReport {
    let mut scanned = 0;
    for g in group.elements() {
        if scanned == budget {
            return SearchReport {
                found: None,
                elements_scanned: scanned,
                budget,
                exhausted: false,
            };
        }
        scanned += 1;
        if is_nonidentity_semiregular(g.images()) {
            return SearchReport {
                found: Some(g),
                elements_scanned: scanned,
                budget,
                exhausted: scanned as u128 == group.order(),
            };
        }
    }
    SearchReport {
        found: None,
        elements_scanned: scanned,
        budget,
        exhausted: true,
    }
}

/// Every non-identity semiregular element, in enumeration order.
pub fn all_semiregular(group: &PermGroup, budget: u64) -> Result<Vec<Permutation>> {
    Ok(group
        .elements_within(budget)?
        .into_iter()
        .filter(|g| is_nonidentity_semiregular(g.images()))
        .collect())
}

/// What a certificate is checked against.
#[derive(Clone, Copy, Debug)]
pub enum Structure<'a> {
    Graph(&'a Graph),
    Digraph(&'a Digraph),
    None,
}

impl Structure<'_> {
    fn n(&self) -> Option<usize> {
        match self {
            Structure::Graph(g) => Some(g.n()),
            Structure::Digraph(d) => Some(d.n()),
            Structure::None => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RejectReason {
    DegreeMismatch,
    NonIdentity,
    NotSemiregular,
    OrderMismatch,
    CycleLengthMismatch,
    NotAutomorphism,
    NotInGroup,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Re-checks a certificate: degree, non-identity, uniform cycle type, the
/// recorded order and cycle length, the automorphism property and
/// membership. Returns the first failed check.
pub fn verify_certificate(
    cert: &Certificate,
    structure: Structure<'_>,
    group: &PermGroup,
) -> Result<(), RejectReason> {
    let images = cert.element.images();
    let n = images.len();
    if n != group.degree() || structure.n().is_some_and(|m| m != n) {
        return Err(RejectReason::DegreeMismatch);
    }
    if images.iter().enumerate().all(|(i, &x)| i == x) {
        return Err(RejectReason::NonIdentity);
    }
    let Some(cycle) = uniform_cycle_length(images) else {
        return Err(RejectReason::NotSemiregular);
    };
    if cert.cycle_length != cycle {
        return Err(RejectReason::CycleLengthMismatch);
    }
    if cert.order != cycle as u64 {
        return Err(RejectReason::OrderMismatch);
    }
    let preserves = match structure {
        Structure::Graph(g) => g
            .edges()
            .iter()
            .all(|&(u, v)| g.has_edge(images[u], images[v])),
        Structure::Digraph(d) => d
            .arcs()
            .iter()
            .all(|&(u, v)| d.has_arc(images[u], images[v])),
        Structure::None => true,
    };
    if !preserves {
        return Err(RejectReason::NotAutomorphism);
    }
    let fresh = PermGroup::new(group.degree(), group.generators().to_vec())
        .map_err(|_| RejectReason::DegreeMismatch)?;
    if !fresh.contains(&cert.element) {
        return Err(RejectReason::NotInGroup);
    }
    Ok(())
}

/// [`brute_force_semiregular`] as a `Result`: a missing element is an
/// error, either because the budget ran out or because none exists.
pub fn require_semiregular(group: &PermGroup, budget: u64) -> Result<Permutation> {
    let report = brute_force_semiregular(group, budget);
    match report.found {
        Some(g) => Ok(g),
        None if report.exhausted => Err(Error::InvariantViolation(format!(
            "no non-identity semiregular element in {group:?}"
        ))),
        None => Err(Error::BoundExceeded { budget }),
    }
}
