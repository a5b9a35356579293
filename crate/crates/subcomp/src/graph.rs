//! Simple undirected graphs with bit-row adjacency, the subgraph
//! complementation operation, and the edge-anchored vertex dissections
//! used by the solvers.

use crate::set::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {0} is required to be in the solution set")]
    NotInSolution(usize),
    #[error("operation undefined on the empty graph")]
    EmptyGraph,
    #[error("vertex set over {cap} vertices does not match graph on {n} vertices")]
    GroundSetMismatch { cap: usize, n: usize },
}

/// Immutable simple undirected graph over vertices `0..n-1`.
///
/// One neighbor bitset per vertex, so neighborhood algebra is word-parallel.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// Build from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// All edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// The full vertex set, sized for this graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::EmptyGraph)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.capacity() != self.n {
            return Err(GraphError::GroundSetMismatch {
                cap: s.capacity(),
                n: self.n,
            });
        }
        Ok(())
    }

    /// `G ⊕ S`: complement the subgraph induced by `s`, leave the rest alone.
    pub fn subgraph_complement(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        let mut g = self.clone();
        for u in s.iter() {
            let mut flip = s.clone();
            flip.remove(u);
            // toggle u's adjacency towards every other member of s
            g.adj[u].toggle_with(&flip);
        }
        Ok(g)
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|-1`, plus the map from
    /// new indices back to original vertex ids.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let m = map.len();
        let mut g = Graph::empty(m);
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        (g, map)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| {
            let mut others = s.clone();
            others.remove(u);
            others.is_subset_of(&self.adj[u])
        })
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].is_disjoint_from(s))
    }

    /// Four-region partition of `V ∖ {u,v}` around an edge `uv`.
    pub fn edge_context(&self, u: usize, v: usize) -> Result<EdgeContext, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let nu = &self.adj[u];
        let nv = &self.adj[v];
        let mut common = nu.intersection(nv);
        common.remove(u.min(v));
        let mut u_only = nu.difference(nv);
        u_only.remove(v);
        let mut v_only = nv.difference(nu);
        v_only.remove(u);
        let mut neither = nu.union(nv).complement();
        neither.remove(u);
        neither.remove(v);
        Ok(EdgeContext {
            u,
            v,
            common,
            u_only,
            v_only,
            neither,
        })
    }

    /// Eight-set dissection of `V ∖ {u,v}` induced by a solution `s` that
    /// contains the adjacent pair `u, v`.
    pub fn dissect_solution(
        &self,
        s: &VertexSet,
        u: usize,
        v: usize,
    ) -> Result<SolutionDissection, GraphError> {
        self.check_set(s)?;
        if !s.contains(u) {
            return Err(GraphError::NotInSolution(u));
        }
        if !s.contains(v) {
            return Err(GraphError::NotInSolution(v));
        }
        let ctx = self.edge_context(u, v)?;
        let outside = s.complement();
        Ok(SolutionDissection {
            s_common: ctx.common.intersection(s),
            s_u_only: ctx.u_only.intersection(s),
            s_v_only: ctx.v_only.intersection(s),
            s_neither: ctx.neither.intersection(s),
            t_common: ctx.common.intersection(&outside),
            t_u_only: ctx.u_only.intersection(&outside),
            t_v_only: ctx.v_only.intersection(&outside),
            t_neither: ctx.neither.intersection(&outside),
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// The four regions of Figure-style edge anchoring: common neighbors,
/// private neighbors of each endpoint, and the shared non-neighborhood.
#[derive(Debug, Clone)]
pub struct EdgeContext {
    pub u: usize,
    pub v: usize,
    /// `N(u) ∩ N(v)`
    pub common: VertexSet,
    /// `N(u) ∖ N[v]`
    pub u_only: VertexSet,
    /// `N(v) ∖ N[u]`
    pub v_only: VertexSet,
    /// `N̄[u] ∩ N̄[v]`
    pub neither: VertexSet,
}

/// The edge-context regions split by membership in a solution set `S`
/// (`s_*`) versus its complement (`t_*`).
#[derive(Debug, Clone)]
pub struct SolutionDissection {
    pub s_common: VertexSet,
    pub s_u_only: VertexSet,
    pub s_v_only: VertexSet,
    pub s_neither: VertexSet,
    pub t_common: VertexSet,
    pub t_u_only: VertexSet,
    pub t_v_only: VertexSet,
    pub t_neither: VertexSet,
}

impl SolutionDissection {
    pub fn parts(&self) -> [&VertexSet; 8] {
        [
            &self.s_common,
            &self.s_u_only,
            &self.s_v_only,
            &self.s_neither,
            &self.t_common,
            &self.t_u_only,
            &self.t_v_only,
            &self.t_neither,
        ]
    }
}
