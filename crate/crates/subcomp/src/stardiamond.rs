//! Solver for subgraph complementation to the `{K_{1,t}, diamond}`-free
//! class, `t >= 3`. Three candidate-generation steps, each gated by
//! certificate verification, so YES answers are sound by construction:
//!
//! 1. complement the degree-2 vertices of all induced diamonds;
//! 2. complement large subsets of the isolated vertices in the
//!    neighborhood of a star center;
//! 3. for every edge `uv`, assemble candidates containing `uv` from the
//!    split partitions of the four anchored regions.

use crate::detect::{
    diamond_degree2_vertices, is_target_class_member, isolated_in_neighborhood, star_centers,
};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::split::{enumerate_independent_rest_partitions, enumerate_pq_split_partitions};
use crate::verdict::{Provenance, Verdict};
use itertools::Itertools;
use std::collections::HashSet;
use thiserror::Error;

/// Candidate verifications allowed per solve; polynomial for fixed t but
/// with a t-exponential constant, so the cost boundary is explicit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StarDiamondError {
    #[error("star bound t must be at least 3, got {0}")]
    InvalidT(usize),
    #[error("candidate budget of {budget} verifications exhausted")]
    BudgetExceeded { budget: u64 },
}

#[derive(Debug, Clone)]
pub struct StarDiamondInstance {
    pub graph: Graph,
    pub t: usize,
}

impl StarDiamondInstance {
    pub fn new(graph: Graph, t: usize) -> Result<Self, StarDiamondError> {
        if t < 3 {
            return Err(StarDiamondError::InvalidT(t));
        }
        Ok(StarDiamondInstance { graph, t })
    }
}

/// Does complementing `s` land `g` in the `{K_{1,t}, diamond}`-free class?
pub fn verify_certificate(g: &Graph, s: &VertexSet, t: usize) -> bool {
    let result = g.subgraph_complement(s).expect("certificate within range");
    is_target_class_member(&result, t)
}

struct Checker<'a> {
    g: &'a Graph,
    t: usize,
    budget: u64,
    checked: u64,
}

impl Checker<'_> {
    fn check(&mut self, s: &VertexSet) -> Result<bool, StarDiamondError> {
        if self.checked >= self.budget {
            return Err(StarDiamondError::BudgetExceeded { budget: self.budget });
        }
        self.checked += 1;
        Ok(verify_certificate(self.g, s, self.t))
    }
}

/// Step 1: try the set of all degree-2 vertices of all induced diamonds.
/// A NO from here is "not found", not a final answer.
pub fn step1_diamond_bases(inst: &StarDiamondInstance) -> Verdict {
    let s = diamond_degree2_vertices(&inst.graph);
    if verify_certificate(&inst.graph, &s, inst.t) {
        Verdict::yes(s, Provenance::Step1)
    } else {
        Verdict::no(Provenance::Step1)
    }
}

fn step2_with(inst: &StarDiamondInstance, checker: &mut Checker) -> Result<Verdict, StarDiamondError> {
    let g = &inst.graph;
    let t = inst.t;
    let centers = star_centers(g, t);
    let Some(r) = centers.first() else {
        return Ok(Verdict::no(Provenance::Step2));
    };
    let isolated = isolated_in_neighborhood(g, r);
    let members = isolated.to_vec();
    // every S ⊆ I with |S| >= |I| - t + 2, i.e. excluded sets of size <= t-2,
    // smallest exclusions first
    for excluded in 0..=(t - 2).min(members.len()) {
        for combo in members.iter().copied().combinations(excluded) {
            let mut s = isolated.clone();
            for v in combo {
                s.remove(v);
            }
            if checker.check(&s)? {
                return Ok(Verdict::yes(s, Provenance::Step2));
            }
        }
    }
    Ok(Verdict::no(Provenance::Step2))
}

/// Step 2: pick the least-index star center `r`, let I be the isolated
/// vertices of the subgraph induced by N(r), and try every S ⊆ I with
/// `|S| >= |I| - t + 2`.
pub fn step2_star_isolated(inst: &StarDiamondInstance) -> Result<Verdict, StarDiamondError> {
    let mut checker = Checker {
        g: &inst.graph,
        t: inst.t,
        budget: DEFAULT_BUDGET,
        checked: 0,
    };
    step2_with(inst, &mut checker)
}

fn map_back(local: &VertexSet, map: &[usize], n: usize) -> VertexSet {
    VertexSet::from_vertices(n, local.iter().map(|i| map[i]))
}

fn step3_with(inst: &StarDiamondInstance, checker: &mut Checker) -> Result<Verdict, StarDiamondError> {
    let g = &inst.graph;
    let t = inst.t;
    let n = g.n();
    for (u, v) in g.edges() {
        let ctx = g.edge_context(u, v).expect("edges() yields edges");

        // 3.1-3.3: both private-neighbor regions must be (t-1,t-1)-split
        let (ga, amap) = g.induced(&ctx.u_only);
        let l1 = enumerate_pq_split_partitions(&ga, t - 1, t - 1);
        if l1.is_empty() {
            continue;
        }
        let (gb, bmap) = g.induced(&ctx.v_only);
        let l2 = enumerate_pq_split_partitions(&gb, t - 1, t - 1);
        if l2.is_empty() {
            continue;
        }
        // 3.4: common neighborhood split into independent (<= t-1) and rest;
        // the rest is the part that joins the candidate solution
        let (gc, cmap) = g.induced(&ctx.common);
        let l3 = enumerate_independent_rest_partitions(&gc, t);

        let s1_choices: Vec<VertexSet> =
            l1.iter().map(|sp| map_back(&sp.p_side, &amap, n)).collect();
        let s2_choices: Vec<VertexSet> =
            l2.iter().map(|sp| map_back(&sp.p_side, &bmap, n)).collect();
        let s3_choices: Vec<VertexSet> =
            l3.iter().map(|(rest, _)| map_back(rest, &cmap, n)).collect();

        // 3.5(c) material is independent of the (S1,S2,S3) choice: for each
        // edge xy of the common non-neighborhood, the split partitions of
        // J = N[x] ∩ N[y] ∩ that region, clique side first
        let d_vertices = ctx.neither.to_vec();
        let mut s4_choices: Vec<VertexSet> = Vec::new();
        for (i, &x) in d_vertices.iter().enumerate() {
            for &y in &d_vertices[i + 1..] {
                if !g.has_edge(x, y) {
                    continue;
                }
                let mut j_set = g.closed_neighborhood(x);
                j_set.intersect_with(&g.closed_neighborhood(y));
                j_set.intersect_with(&ctx.neither);
                let (gj, jmap) = g.induced(&j_set);
                // split graph = (1,1)-split; the clique side is the Q side
                for sp in enumerate_pq_split_partitions(&gj, 1, 1) {
                    s4_choices.push(map_back(&sp.q_side, &jmap, n));
                }
            }
        }

        let mut seen: HashSet<VertexSet> = HashSet::new();
        let mut try_candidate =
            |s: VertexSet, checker: &mut Checker| -> Result<Option<Verdict>, StarDiamondError> {
                if seen.insert(s.clone()) && checker.check(&s)? {
                    return Ok(Some(Verdict::yes(s, Provenance::Step3)));
                }
                Ok(None)
            };

        for s1 in &s1_choices {
            for s2 in &s2_choices {
                for s3 in &s3_choices {
                    let mut base = s1.union(s2);
                    base.union_with(s3);
                    base.insert(u);
                    base.insert(v);
                    // 3.5(a): the assembled candidate itself
                    if let Some(verdict) = try_candidate(base.clone(), checker)? {
                        return Ok(verdict);
                    }
                    // 3.5(b): plus one vertex from the common non-neighborhood
                    for &w in &d_vertices {
                        let mut s = base.clone();
                        s.insert(w);
                        if let Some(verdict) = try_candidate(s, checker)? {
                            return Ok(verdict);
                        }
                    }
                    // 3.5(c): plus the clique side of a split partition of J
                    for s4 in &s4_choices {
                        let mut s = base.clone();
                        s.union_with(s4);
                        if let Some(verdict) = try_candidate(s, checker)? {
                            return Ok(verdict);
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::no(Provenance::Step3))
}

/// Step 3: edge-anchored candidate assembly. Only finds solutions that
/// contain at least one edge; completeness holds for the three steps
/// jointly.
pub fn step3_edge_anchored(inst: &StarDiamondInstance) -> Result<Verdict, StarDiamondError> {
    let mut checker = Checker {
        g: &inst.graph,
        t: inst.t,
        budget: DEFAULT_BUDGET,
        checked: 0,
    };
    step3_with(inst, &mut checker)
}

pub fn solve(inst: &StarDiamondInstance) -> Result<Verdict, StarDiamondError> {
    solve_with_budget(inst, DEFAULT_BUDGET)
}

/// Run steps 1-3 in order under a shared verification budget; the first
/// verified candidate wins, and NO means all three steps came up empty.
pub fn solve_with_budget(
    inst: &StarDiamondInstance,
    budget: u64,
) -> Result<Verdict, StarDiamondError> {
    let mut checker = Checker {
        g: &inst.graph,
        t: inst.t,
        budget,
        checked: 1, // step 1 always verifies exactly one candidate
    };
    if checker.checked > checker.budget {
        return Err(StarDiamondError::BudgetExceeded { budget });
    }
    let v1 = step1_diamond_bases(inst);
    if v1.is_yes() {
        return Ok(v1);
    }
    let v2 = step2_with(inst, &mut checker)?;
    if v2.is_yes() {
        return Ok(v2);
    }
    let v3 = step3_with(inst, &mut checker)?;
    if v3.is_yes() {
        return Ok(v3);
    }
    Ok(Verdict::no(Provenance::Step3))
}
