//! Induced-pattern detection: diamonds, stars `K_{1,t}`, membership in the
//! `{K_{1,t}, diamond}`-free target class, and the neighborhood structures
//! the star/diamond solver builds on.

use crate::graph::Graph;
use crate::set::VertexSet;
use crate::split;

/// An induced diamond: the adjacent degree-3 pair and the nonadjacent
/// degree-2 pair, each sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiamondWitness {
    pub apexes: (usize, usize),
    pub base: (usize, usize),
}

impl DiamondWitness {
    fn sorted_vertices(&self) -> [usize; 4] {
        let mut vs = [self.apexes.0, self.apexes.1, self.base.0, self.base.1];
        vs.sort_unstable();
        vs
    }
}

// Every induced diamond is a nonadjacent pair (x, y) plus an adjacent pair
// (a, b) of their common neighbors; that subset induces exactly five edges.
fn for_each_diamond(g: &Graph, mut visit: impl FnMut(DiamondWitness) -> bool) {
    let n = g.n();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            let common = g.neighbors(x).intersection(g.neighbors(y));
            let members = common.to_vec();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if g.has_edge(a, b)
                        && !visit(DiamondWitness {
                            apexes: (a, b),
                            base: (x, y),
                        })
                    {
                        return;
                    }
                }
            }
        }
    }
}

pub fn has_induced_diamond(g: &Graph) -> bool {
    let mut found = false;
    for_each_diamond(g, |_| {
        found = true;
        false
    });
    found
}

/// Lexicographically least induced diamond (by its sorted 4-tuple of
/// vertices), or `None` if the graph is diamond-free.
pub fn find_induced_diamond(g: &Graph) -> Option<DiamondWitness> {
    let mut best: Option<DiamondWitness> = None;
    for_each_diamond(g, |w| {
        match &best {
            Some(b) if b.sorted_vertices() <= w.sorted_vertices() => {}
            _ => best = Some(w),
        }
        true
    });
    best
}

/// Union of the degree-2 (base) vertices over all induced diamonds.
pub fn diamond_degree2_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for_each_diamond(g, |w| {
        out.insert(w.base.0);
        out.insert(w.base.1);
        true
    });
    out
}

/// Vertices whose neighborhood contains an independent set of size `t`,
/// i.e. the centers of induced `K_{1,t}` stars.
pub fn star_centers(g: &Graph, t: usize) -> VertexSet {
    assert!(t >= 1);
    let mut out = VertexSet::new(g.n());
    for v in 0..g.n() {
        if split::find_independent_within(g, g.neighbors(v), t).is_some() {
            out.insert(v);
        }
    }
    out
}

pub fn has_induced_star(g: &Graph, t: usize) -> bool {
    assert!(t >= 1);
    (0..g.n()).any(|v| split::find_independent_within(g, g.neighbors(v), t).is_some())
}

/// Membership in the `{K_{1,t}, diamond}`-free class. Rejects `t < 3`,
/// which is outside the solver's scope.
pub fn is_target_class_member(g: &Graph, t: usize) -> bool {
    assert!(t >= 3, "target class is only defined for t >= 3");
    !has_induced_diamond(g) && !has_induced_star(g, t)
}

/// Members of `N(r)` with no neighbor inside `N(r)`.
pub fn isolated_in_neighborhood(g: &Graph, r: usize) -> VertexSet {
    let nbrs = g.neighbors(r);
    let mut out = VertexSet::new(g.n());
    for u in nbrs.iter() {
        if g.neighbors(u).is_disjoint_from(nbrs) {
            out.insert(u);
        }
    }
    out
}

/// Inclusion-maximal independent subset of `within`, grown by ascending
/// vertex index.
pub fn greedy_maximal_independent_set(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in within.iter() {
        if g.neighbors(v).is_disjoint_from(&out) {
            out.insert(v);
        }
    }
    out
}
