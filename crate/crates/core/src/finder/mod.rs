//! Constructions of non-identity semiregular elements, each returning a
//! [`Certificate`] that records which reductions produced it.

mod digraph;
mod eightvalent;
mod fourvalent;
mod lemmas;

pub use digraph::find_semiregular_digraph4;
pub use eightvalent::find_semiregular_8valent;
pub use fourvalent::find_semiregular_4valent_solvable;
pub use lemmas::{
    lift_semiregular_coprime, prime_filter_semiregular, semiregular_abelian_normal,
    semiregular_prime_power_degree,
};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation, DEFAULT_BUDGET};

/// One reduction or terminal construction in a certificate's trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// A prime dividing `|G|` but not `|G_v|`; every element of that order is semiregular.
    PrimeFilter(u64),
    /// Centre of a Sylow subgroup of a group of prime-power degree.
    PrimePowerDegree,
    /// An abelian normal subgroup with at most two orbits, or a semiregular one.
    AbelianNormal,
    /// Lifted from a quotient through a kernel of coprime order.
    CoprimeLift,
    /// Found in the quotient by a minimal normal subgroup.
    QuotientRecursion,
    /// Passed to an asymmetric out-valence-4 digraph, at the given alternet depth.
    DigraphRecursion(usize),
    /// Cycling vertices with identical in- and out-neighbourhoods.
    NotLooselyAttached,
    /// Local action quasiprimitive; found by exhaustive search.
    QuasiprimitiveOracle,
    /// A constructed witness fell outside the supplied group; found by exhaustive search.
    OracleFallback,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::PrimeFilter(p) => write!(f, "PrimeFilter({p})"),
            Step::DigraphRecursion(d) => write!(f, "DigraphRecursion({d})"),
            other => fmt::Debug::fmt(other, f),
        }
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let arg = |prefix: &str| -> Option<&str> { s.strip_prefix(prefix)?.strip_suffix(')') };
        let bad = || Error::Parse(format!("unknown trace step `{s}`"));
        if let Some(p) = arg("PrimeFilter(") {
            return p.parse().map(Step::PrimeFilter).map_err(|_| bad());
        }
        if let Some(d) = arg("DigraphRecursion(") {
            return d.parse().map(Step::DigraphRecursion).map_err(|_| bad());
        }
        Ok(match s {
            "PrimePowerDegree" => Step::PrimePowerDegree,
            "AbelianNormal" => Step::AbelianNormal,
            "CoprimeLift" => Step::CoprimeLift,
            "QuotientRecursion" => Step::QuotientRecursion,
            "NotLooselyAttached" => Step::NotLooselyAttached,
            "QuasiprimitiveOracle" => Step::QuasiprimitiveOracle,
            "OracleFallback" => Step::OracleFallback,
            _ => return Err(bad()),
        })
    }
}

/// A semiregular element together with the trace that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub element: Permutation,
    pub order: u64,
    pub cycle_length: usize,
    pub branch_trace: Vec<Step>,
    /// Set only after semiregularity and membership have been re-checked.
    pub verified: bool,
}

impl Certificate {
    pub fn new(element: Permutation, branch_trace: Vec<Step>) -> Self {
        let cycle_length = element.cycle_lengths().first().copied().unwrap_or(1);
        Certificate {
            order: element.order(),
            element,
            cycle_length,
            branch_trace,
            verified: false,
        }
    }

    /// Checks the element is non-identity, semiregular and in `group`, and
    /// marks the certificate verified.
    fn seal(mut self, group: &PermGroup) -> Result<Self> {
        let e = &self.element;
        if e.is_identity() || !e.is_semiregular() || !group.contains(e) {
            return Err(Error::InvariantViolation(format!(
                "witness {e} (trace {:?}) failed: identity {}, semiregular {}, member {}; group {group:?}",
                self.branch_trace,
                e.is_identity(),
                e.is_semiregular(),
                group.contains(e)
            )));
        }
        self.verified = true;
        Ok(self)
    }

    fn prepend(mut self, steps: &[Step]) -> Self {
        self.branch_trace.splice(0..0, steps.iter().copied());
        self
    }

    fn with_element_trace(self, branch_trace: Vec<Step>) -> Self {
        Certificate::new(self.element, branch_trace)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinderConfig {
    /// Upper bound on elements enumerated by any single step.
    pub budget: u64,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// First non-identity element in enumeration order.
fn first_nonidentity(group: &PermGroup) -> Option<Permutation> {
    group.elements().find(|g| !g.is_identity())
}
