//! Ground-truth brute force over all vertex subsets, parameterized by the
//! target class. This is the differential-testing backbone for the real
//! solvers; it refuses anything beyond desk scale.

use crate::detect::is_target_class_member;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::verdict::{Provenance, Verdict};
use itertools::Itertools;
use std::sync::Arc;
use thiserror::Error;

/// Largest vertex count the 2^n sweep will accept.
pub const DEFAULT_VERTEX_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// Membership predicate for a target graph class.
#[derive(Clone)]
pub enum TargetClass {
    /// Graphs with minimum degree at least k. The empty graph is treated
    /// as a non-member, matching the solver's insistence on n >= 1.
    MinDegreeAtLeast(usize),
    /// `{K_{1,t}, diamond}`-free graphs, t >= 3.
    StarDiamondFree(usize),
    /// Any pure predicate, for cross-checks and future classes.
    Custom {
        name: &'static str,
        predicate: Arc<dyn Fn(&Graph) -> bool + Send + Sync>,
    },
}

impl std::fmt::Debug for TargetClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TargetClass::MinDegreeAtLeast(k) => write!(f, "min-degree:{k}"),
            TargetClass::StarDiamondFree(t) => write!(f, "star-diamond:{t}"),
            TargetClass::Custom { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

impl TargetClass {
    pub fn contains(&self, g: &Graph) -> bool {
        match self {
            TargetClass::MinDegreeAtLeast(k) => {
                g.min_degree().map(|d| d >= *k).unwrap_or(false)
            }
            TargetClass::StarDiamondFree(t) => is_target_class_member(g, *t),
            TargetClass::Custom { predicate, .. } => predicate(g),
        }
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    if g.n() > cap {
        Err(OracleError::TooLarge { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Sweep all 2^n subsets, smallest first then lexicographic, and report the
/// first S with `G ⊕ S` in the target class. The first hit is the
/// canonical (minimum-size, lexicographically least) witness.
pub fn brute_force(g: &Graph, target: &TargetClass) -> Result<Verdict, OracleError> {
    brute_force_with_cap(g, target, DEFAULT_VERTEX_CAP)
}

pub fn brute_force_with_cap(
    g: &Graph,
    target: &TargetClass,
    cap: usize,
) -> Result<Verdict, OracleError> {
    check_cap(g, cap)?;
    let n = g.n();
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let s = VertexSet::from_vertices(n, combo);
            let result = g.subgraph_complement(&s).expect("subset in range");
            if target.contains(&result) {
                return Ok(Verdict::yes(s, Provenance::Oracle));
            }
        }
    }
    Ok(Verdict::no(Provenance::Oracle))
}

/// Every solution subset, in size-then-lexicographic order.
pub fn all_solutions(g: &Graph, target: &TargetClass) -> Result<Vec<VertexSet>, OracleError> {
    check_cap(g, DEFAULT_VERTEX_CAP)?;
    let n = g.n();
    let mut out = Vec::new();
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            let s = VertexSet::from_vertices(n, combo);
            let result = g.subgraph_complement(&s).expect("subset in range");
            if target.contains(&result) {
                out.push(s);
            }
        }
    }
    Ok(out)
}
