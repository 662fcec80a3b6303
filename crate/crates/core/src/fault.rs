//! Edge-fault-tolerant constructions and blocking-set witnesses.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result, SpannerError};
use crate::graph::{
    bfs_filtered, hop_distance, shortest_path, EdgeId, Multigraph, PathSeq, SubgraphView, UNREACHED,
};
use crate::greedy::{merge, Algorithm, SpannerResult};
use crate::params::SpannerParams;

/// Default cap on BFS calls spent by one [`find_fault_set`] search.
pub const DEFAULT_FAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaultSet {
    pub edges: Vec<EdgeId>,
    pub bound: usize,
}

/// `witnesses[i]` is the fault set that justified adding path `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockingRecord {
    pub witnesses: Vec<FaultSet>,
}

struct Search<'a, 'g> {
    h: &'a SubgraphView<'g>,
    x: usize,
    y: usize,
    r: usize,
    protected: &'a [EdgeId],
    faulted: Vec<bool>,
    calls: u64,
    budget: u64,
}

impl Search<'_, '_> {
    /// Shortest surviving `x`–`y` path of at most `r` hops, if any.
    fn surviving_path(&mut self) -> Result<Option<Vec<EdgeId>>> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(SpannerError::BudgetExceeded {
                required: self.calls,
                budget: self.budget,
            });
        }
        let faulted = &self.faulted;
        let dist = bfs_filtered(self.h, self.y, self.r, Some(self.x), |e| !faulted[e]);
        if dist[self.x] == UNREACHED {
            return Ok(None);
        }
        // walk back towards y along strictly decreasing layers
        let mut edges = Vec::with_capacity(dist[self.x]);
        let mut cur = self.x;
        while cur != self.y {
            let (next, e) = self
                .h
                .neighbors(cur)
                .find(|&(w, e)| !faulted[e] && dist[w] != UNREACHED && dist[w] + 1 == dist[cur])
                .expect("BFS layers are consistent");
            edges.push(e);
            cur = next;
        }
        Ok(Some(edges))
    }

    /// Whether at most `t` further faults drawn from `allowed` cut every
    /// surviving path.
    fn feasible(&mut self, t: usize, allowed: &dyn Fn(EdgeId) -> bool) -> Result<bool> {
        let Some(path) = self.surviving_path()? else {
            return Ok(true);
        };
        if t == 0 {
            return Ok(false);
        }
        for e in path {
            if self.protected.contains(&e) || !allowed(e) || self.faulted[e] {
                continue;
            }
            self.faulted[e] = true;
            let ok = self.feasible(t - 1, allowed)?;
            self.faulted[e] = false;
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Searches for `F ⊆ E(h) \ E(p)` with `|F| ≤ f` leaving the endpoints of `p`
/// more than `r` hops apart in `h − F`. Returns the first hit in
/// size-then-lexicographic order. `budget` caps the number of BFS calls.
pub fn find_fault_set(
    h: &SubgraphView<'_>,
    p: &PathSeq,
    r: usize,
    f: usize,
    budget: u64,
) -> Result<Option<FaultSet>> {
    let (x, y) = (p.source(), p.target());
    let host = h.host();
    host.check_vertex(x)?;
    host.check_vertex(y)?;
    // only edges on some walk of at most r hops can matter
    let dx = bfs_filtered(h, x, r, None, |_| true);
    let dy = bfs_filtered(h, y, r, None, |_| true);
    let near = |a: usize, b: usize| dx[a] != UNREACHED && dy[b] != UNREACHED && dx[a] + 1 + dy[b] <= r;
    let candidates: Vec<EdgeId> = h
        .edge_ids()
        .into_iter()
        .filter(|e| !p.edges().contains(e))
        .filter(|&e| {
            let edge = host.edge(e);
            near(edge.u, edge.v) || near(edge.v, edge.u)
        })
        .collect();
    let mut rank = vec![usize::MAX; host.edge_count()];
    for (i, &e) in candidates.iter().enumerate() {
        rank[e] = i;
    }
    let mut search = Search {
        h,
        x,
        y,
        r,
        protected: p.edges(),
        faulted: vec![false; host.edge_count()],
        calls: 0,
        budget,
    };
    let any = |e: EdgeId| rank[e] != usize::MAX;
    let mut size = None;
    for s in 0..=f {
        if search.feasible(s, &any)? {
            size = Some(s);
            break;
        }
    }
    let Some(size) = size else {
        return Ok(None);
    };
    // fix elements one at a time, smallest first
    let mut chosen = Vec::with_capacity(size);
    let mut floor = 0;
    while chosen.len() < size {
        let remaining = size - chosen.len() - 1;
        let mut picked = None;
        for (i, &e) in candidates.iter().enumerate().skip(floor) {
            search.faulted[e] = true;
            let after = |c: EdgeId| rank[c] != usize::MAX && rank[c] > i;
            if search.feasible(remaining, &after)? {
                picked = Some(i);
                break;
            }
            search.faulted[e] = false;
        }
        let i = picked.ok_or_else(|| SpannerError::Invariant("fault search lost a feasible branch".into()))?;
        chosen.push(candidates[i]);
        floor = i + 1;
    }
    Ok(Some(FaultSet { edges: chosen, bound: f }))
}

/// All simple paths with `d ∈ {1, 2}` edges, ordered by endpoint pair
/// `x < y`, then vertex sequence, then edge ids.
pub fn enumerate_short_paths(g: &Multigraph, d: usize) -> Result<Vec<PathSeq>> {
    let mut keyed: Vec<(usize, usize, usize, Vec<EdgeId>)> = Vec::new();
    match d {
        1 => {
            for (e, edge) in g.edges().iter().enumerate() {
                let (x, y) = (edge.u.min(edge.v), edge.u.max(edge.v));
                keyed.push((x, y, y, vec![e]));
            }
        }
        2 => {
            for m in 0..g.n() {
                let nbrs = g.neighbors(m);
                for &(x, e1) in nbrs {
                    for &(y, e2) in nbrs {
                        if x < y {
                            keyed.push((x, y, m, vec![e1, e2]));
                        }
                    }
                }
            }
        }
        _ => return Err(invalid(format!("only d = 1 and d = 2 are supported, got {d}"))),
    }
    keyed.sort();
    keyed
        .into_iter()
        .map(|(x, _, _, edges)| PathSeq::from_edges(g, x, &edges))
        .collect()
}

fn eft_greedy_over(
    g: &Multigraph,
    paths: &[PathSeq],
    r: usize,
    f: usize,
    algorithm: Algorithm,
    params: SpannerParams,
    budget: u64,
) -> Result<(SpannerResult, BlockingRecord)> {
    let mut h = SubgraphView::empty(g);
    let mut result = SpannerResult::new(algorithm, params);
    let mut record = BlockingRecord::default();
    for p in paths {
        if let Some(fs) = find_fault_set(&h, p, r, f, budget)? {
            for &e in p.edges() {
                h.insert(e);
            }
            result.added_paths.push(p.clone());
            record.witnesses.push(fs);
        }
    }
    Ok((result.finish(&h), record))
}

/// Exact EFT greedy `d → r` over every `d`-path of `g`.
pub fn eft_greedy_exact(g: &Multigraph, d: usize, r: usize, f: usize) -> Result<(SpannerResult, BlockingRecord)> {
    eft_greedy_exact_with_budget(g, d, r, f, DEFAULT_FAULT_BUDGET)
}

pub fn eft_greedy_exact_with_budget(
    g: &Multigraph,
    d: usize,
    r: usize,
    f: usize,
    budget: u64,
) -> Result<(SpannerResult, BlockingRecord)> {
    if r < d {
        return Err(invalid(format!("r = {r} must be at least d = {d}")));
    }
    let paths = enumerate_short_paths(g, d)?;
    let params = SpannerParams::new(g.n(), 1).with_contract(d, r).with_faults(f);
    eft_greedy_over(g, &paths, r, f, Algorithm::EftExact, params, budget)
}

/// Polynomial-time EFT `2 → 2k` greedy. For each 2-path `P` up to `f+1`
/// short `x`–`y` paths are peeled off `H`; only their edges outside `E(P)` are
/// removed, so the peeled edges form a fault set that avoids `P`.
pub fn eft_modified_greedy(g: &Multigraph, k: usize, f: usize) -> Result<(SpannerResult, BlockingRecord)> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let r = 2 * k;
    let params = SpannerParams::new(g.n(), k).with_contract(2, r).with_faults(f);
    let mut h = SubgraphView::empty(g);
    let mut result = SpannerResult::new(Algorithm::EftModified, params);
    let mut record = BlockingRecord::default();
    for p in enumerate_short_paths(g, 2)? {
        let (x, y) = (p.source(), p.target());
        let mut removed: Vec<EdgeId> = Vec::new();
        let mut found = 0;
        while found <= f {
            let Some(q) = shortest_path(&h, x, y, r, &removed)? else {
                break;
            };
            found += 1;
            let fresh: Vec<EdgeId> = q.edges().iter().copied().filter(|e| !p.edges().contains(e)).collect();
            if fresh.is_empty() {
                // P itself is already present
                found = f + 1;
                break;
            }
            removed.extend(fresh);
        }
        if found <= f {
            for &e in p.edges() {
                h.insert(e);
            }
            removed.sort_unstable();
            result.added_paths.push(p);
            record.witnesses.push(FaultSet {
                edges: removed,
                bound: 2 * k * f,
            });
        }
    }
    Ok((result.finish(&h), record))
}

/// The standard multigraph EFT greedy `(2k−1)`-spanner over edges in id order.
pub fn eft_edge_greedy_2k1(g: &Multigraph, k: usize, f: usize) -> Result<SpannerResult> {
    Ok(eft_edge_greedy_2k1_with_record(g, k, f)?.0)
}

pub fn eft_edge_greedy_2k1_with_record(g: &Multigraph, k: usize, f: usize) -> Result<(SpannerResult, BlockingRecord)> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let paths: Vec<PathSeq> = (0..g.edge_count())
        .map(|e| PathSeq::from_edges(g, g.edge(e).u, &[e]))
        .collect::<Result<_>>()?;
    let params = SpannerParams::new(g.n(), k).with_faults(f);
    eft_greedy_over(g, &paths, 2 * k - 1, f, Algorithm::EftEdge, params, DEFAULT_FAULT_BUDGET)
}

/// Union of the EFT `1 → 2k−1` greedy with an EFT `2 → 2k` spanner, exact or
/// (with `fast`) the polynomial-time variant.
pub fn eft_union_spanner(g: &Multigraph, k: usize, f: usize, fast: bool) -> Result<SpannerResult> {
    let single = eft_edge_greedy_2k1(g, k, f)?;
    let double = if fast {
        eft_modified_greedy(g, k, f)?.0
    } else {
        eft_greedy_exact(g, 2, 2 * k, f)?.0
    };
    let params = SpannerParams::new(g.n(), k).with_faults(f);
    Ok(merge(Algorithm::EftUnion, params, [single, double]))
}

/// Checks every witness: `|F_i| ≤ f`, `F_i ∩ E(P_i) = ∅`, and the endpoints of
/// `P_i` are more than `r` apart in the union of earlier paths minus `F_i`.
pub fn verify_blocking_set(
    host: &Multigraph,
    paths: &[PathSeq],
    rec: &BlockingRecord,
    r: usize,
    f: usize,
) -> Result<bool> {
    if paths.len() != rec.witnesses.len() {
        return Err(invalid(format!(
            "{} paths but {} witnesses",
            paths.len(),
            rec.witnesses.len()
        )));
    }
    let mut prefix = SubgraphView::empty(host);
    for (p, w) in paths.iter().zip(&rec.witnesses) {
        for &e in &w.edges {
            host.check_edge(e)?;
        }
        for &e in p.edges() {
            host.check_edge(e)?;
        }
        let distinct: BTreeSet<_> = w.edges.iter().collect();
        if distinct.len() > f || w.edges.iter().any(|e| p.edges().contains(e)) {
            return Ok(false);
        }
        if hop_distance(&prefix, p.source(), p.target(), r, &w.edges)?.is_some() {
            return Ok(false);
        }
        for &e in p.edges() {
            prefix.insert(e);
        }
    }
    Ok(true)
}
