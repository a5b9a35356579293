//! (p,q)-split recognition and complete enumeration of all (p,q)-split
//! partitions, plus the independent-set/rest partition lists used by the
//! edge-anchored search.
//!
//! A (p,q)-split partition (P,Q) covers the ground set with G[P]
//! K_{p+1}-free and G[Q] (q+1)K_1-free. (P,Q) and (Q,P) are distinct even
//! when p = q: the P side is the one a caller merges into a candidate
//! solution.

use crate::graph::Graph;
use crate::set::VertexSet;
use itertools::Itertools;

/// An ordered (p,q)-split partition of a ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub p_side: VertexSet,
    pub q_side: VertexSet,
    pub p: usize,
    pub q: usize,
}

impl SplitPartition {
    /// Re-check the defining invariants against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        self.p_side.is_disjoint_from(&self.q_side)
            && self.p_side.union(&self.q_side) == g.vertex_set()
            && find_clique_within(g, &self.p_side, self.p + 1).is_none()
            && find_independent_within(g, &self.q_side, self.q + 1).is_none()
    }
}

fn clique_rec(g: &Graph, avail: &VertexSet, need: usize, acc: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if avail.len() < need {
        return false;
    }
    for v in avail.iter() {
        // extend by v; later members come from v's neighbors above v
        let mut next = avail.intersection(g.neighbors(v));
        for w in avail.iter() {
            if w > v {
                break;
            }
            next.remove(w);
        }
        acc.push(v);
        if clique_rec(g, &next, need - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// Least clique of exactly `size` vertices inside `within`, if one exists.
pub fn find_clique_within(g: &Graph, within: &VertexSet, size: usize) -> Option<VertexSet> {
    let mut acc = Vec::new();
    if clique_rec(g, within, size, &mut acc) {
        Some(VertexSet::from_vertices(g.n(), acc))
    } else {
        None
    }
}

fn independent_rec(g: &Graph, avail: &VertexSet, need: usize, acc: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if avail.len() < need {
        return false;
    }
    for v in avail.iter() {
        let mut next = avail.difference(g.neighbors(v));
        for w in avail.iter() {
            if w > v {
                break;
            }
            next.remove(w);
        }
        acc.push(v);
        if independent_rec(g, &next, need - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// Least independent set of exactly `size` vertices inside `within`.
pub fn find_independent_within(g: &Graph, within: &VertexSet, size: usize) -> Option<VertexSet> {
    let mut acc = Vec::new();
    if independent_rec(g, within, size, &mut acc) {
        Some(VertexSet::from_vertices(g.n(), acc))
    } else {
        None
    }
}

/// True iff the graph has no clique on `bound + 1` vertices.
pub fn clique_number_at_most(g: &Graph, bound: usize) -> bool {
    find_clique_within(g, &g.vertex_set(), bound + 1).is_none()
}

/// True iff the graph has no independent set on `bound + 1` vertices.
pub fn independence_number_at_most(g: &Graph, bound: usize) -> bool {
    find_independent_within(g, &g.vertex_set(), bound + 1).is_none()
}

// Violation-driven three-way labeling. Each vertex is in P, in Q, or
// unassigned. A (p+1)-clique that could end up inside P forces one of its
// unassigned members into Q (branched disjointly by "first member sent to
// Q"), symmetrically for (q+1)-independent sets and P. When no violation
// survives, every completion of the unassigned set is valid.
struct Enumerator<'a, F: FnMut(VertexSet, VertexSet) -> bool> {
    g: &'a Graph,
    p: usize,
    q: usize,
    emit: F,
}

impl<F: FnMut(VertexSet, VertexSet) -> bool> Enumerator<'_, F> {
    // returns false to stop the whole search
    fn recurse(&mut self, p_set: &VertexSet, q_set: &VertexSet, unassigned: &VertexSet) -> bool {
        if find_clique_within(self.g, p_set, self.p + 1).is_some() {
            return true;
        }
        if find_independent_within(self.g, q_set, self.q + 1).is_some() {
            return true;
        }
        let p_reach = p_set.union(unassigned);
        if let Some(clique) = find_clique_within(self.g, &p_reach, self.p + 1) {
            let free = clique.intersection(unassigned).to_vec();
            debug_assert!(!free.is_empty());
            let mut p_new = p_set.clone();
            let mut un = unassigned.clone();
            for &v in &free {
                // v goes to Q; everyone before v stays in P
                let mut q_new = q_set.clone();
                q_new.insert(v);
                let mut un_branch = un.clone();
                un_branch.remove(v);
                if !self.recurse(&p_new, &q_new, &un_branch) {
                    return false;
                }
                p_new.insert(v);
                un.remove(v);
            }
            return true;
        }
        let q_reach = q_set.union(unassigned);
        if let Some(indep) = find_independent_within(self.g, &q_reach, self.q + 1) {
            let free = indep.intersection(unassigned).to_vec();
            debug_assert!(!free.is_empty());
            let mut q_new = q_set.clone();
            let mut un = unassigned.clone();
            for &v in &free {
                let mut p_new = p_set.clone();
                p_new.insert(v);
                let mut un_branch = un.clone();
                un_branch.remove(v);
                if !self.recurse(&p_new, &q_new, &un_branch) {
                    return false;
                }
                q_new.insert(v);
                un.remove(v);
            }
            return true;
        }
        // no violation reachable: all 2^|unassigned| completions are valid
        let free = unassigned.to_vec();
        let mut choice = vec![false; free.len()];
        loop {
            let mut p_out = p_set.clone();
            let mut q_out = q_set.clone();
            for (i, &v) in free.iter().enumerate() {
                if choice[i] {
                    p_out.insert(v);
                } else {
                    q_out.insert(v);
                }
            }
            if !(self.emit)(p_out, q_out) {
                return false;
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return true;
                }
                choice[i] = !choice[i];
                if choice[i] {
                    break;
                }
                i += 1;
            }
        }
    }
}

fn search_partitions(
    g: &Graph,
    p: usize,
    q: usize,
    emit: impl FnMut(VertexSet, VertexSet) -> bool,
) {
    assert!(p >= 1 && q >= 1);
    let n = g.n();
    let mut e = Enumerator { g, p, q, emit };
    e.recurse(&VertexSet::new(n), &VertexSet::new(n), &VertexSet::full(n));
}

/// Is the whole graph a (p,q)-split graph?
pub fn is_pq_split(g: &Graph, p: usize, q: usize) -> bool {
    let mut found = false;
    search_partitions(g, p, q, |_, _| {
        found = true;
        false
    });
    found
}

/// All ordered (p,q)-split partitions of `V(g)`, sorted lexicographically
/// by P side. Empty iff `g` is not (p,q)-split; the empty graph has the
/// single partition (∅, ∅).
pub fn enumerate_pq_split_partitions(g: &Graph, p: usize, q: usize) -> Vec<SplitPartition> {
    let mut out = Vec::new();
    search_partitions(g, p, q, |p_side, q_side| {
        out.push(SplitPartition {
            p_side,
            q_side,
            p,
            q,
        });
        true
    });
    out.sort_by(|a, b| a.p_side.cmp_lex(&b.p_side));
    out
}

/// All ways to split `V(g)` into an independent set of at most `t-1`
/// vertices and the rest, as `(rest, independent)` pairs, ascending by
/// independent-set size then lexicographic.
pub fn enumerate_independent_rest_partitions(
    g: &Graph,
    t: usize,
) -> Vec<(VertexSet, VertexSet)> {
    assert!(t >= 3);
    let n = g.n();
    let full = VertexSet::full(n);
    let mut out = Vec::new();
    for size in 0..=(t - 1).min(n) {
        for combo in (0..n).combinations(size) {
            let indep = VertexSet::from_vertices(n, combo);
            if g.is_independent_set(&indep) {
                out.push((full.difference(&indep), indep));
            }
        }
    }
    out
}
