//! Unweighted greedy constructions: the `d → r` greedy over vertex pairs,
//! the greedy over explicit path collections, the parallel matching-round
//! greedy, the `⌈√k⌉ → O(k)` greedy, and the `1 → 2k−1` ∪ `2 → 2k` union.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::clustering::cluster_level;
use crate::error::{invalid, Result, SpannerError};
use crate::graph::{
    hop_distance, hop_distances_from, shortest_path, EdgeId, Multigraph, PathSeq, SubgraphView, VertexId,
    UNREACHED,
};
use crate::params::SpannerParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    GreedyDr,
    PathCollection,
    ParallelGreedy,
    SqrtK,
    UnionHybrid,
    EftExact,
    EftModified,
    EftEdge,
    EftUnion,
}

/// Edge `edge` was added while `head` was the less clustered endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Boost {
    pub edge: EdgeId,
    pub head: VertexId,
    pub round: usize,
}

/// Output of an unweighted construction: the kept host edges (ascending)
/// plus the paths that were added, in order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpannerResult {
    pub algorithm: Algorithm,
    pub params: SpannerParams,
    pub edges: Vec<EdgeId>,
    pub added_paths: Vec<PathSeq>,
    /// Boost orientation, filled by the parallel greedy only.
    pub boosts: Vec<Boost>,
}

impl SpannerResult {
    pub(crate) fn new(algorithm: Algorithm, params: SpannerParams) -> Self {
        Self {
            algorithm,
            params,
            edges: Vec::new(),
            added_paths: Vec::new(),
            boosts: Vec::new(),
        }
    }

    pub(crate) fn finish(mut self, view: &SubgraphView<'_>) -> Self {
        self.edges = view.edge_ids();
        self
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn view<'g>(&self, host: &'g Multigraph) -> Result<SubgraphView<'g>> {
        SubgraphView::from_edges(host, self.edges.iter().copied())
    }
}

/// Paths of a common hop length over one host graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathCollection {
    pub n: usize,
    pub paths: Vec<PathSeq>,
}

impl PathCollection {
    pub fn new(n: usize, paths: Vec<PathSeq>) -> Result<Self> {
        let coll = Self { n, paths };
        coll.validate()?;
        Ok(coll)
    }

    /// Common hop length, `None` for an empty collection.
    pub fn path_length(&self) -> Option<usize> {
        self.paths.first().map(PathSeq::hop_len)
    }

    pub fn validate(&self) -> Result<()> {
        let Some(d) = self.path_length() else {
            return Ok(());
        };
        for (i, p) in self.paths.iter().enumerate() {
            if p.hop_len() != d {
                return Err(invalid(format!(
                    "path {i} has {} edges but the collection uses length {d}",
                    p.hop_len()
                )));
            }
            if !p.is_simple() {
                return Err(invalid(format!("path {i} repeats a vertex")));
            }
            if let Some(&v) = p.vertices().iter().find(|&&v| v >= self.n) {
                return Err(SpannerError::InvalidVertex { vertex: v, n: self.n });
            }
        }
        Ok(())
    }
}

fn add_path(h: &mut SubgraphView<'_>, result: &mut SpannerResult, path: PathSeq) {
    for &e in path.edges() {
        h.insert(e);
    }
    result.added_paths.push(path);
}

/// Greedy `d → r`: scan pairs `x < y` with `dist_G(x,y) = d` in lexicographic
/// order and, whenever `dist_H(x,y) > r`, add the lexicographically smallest
/// shortest `x`–`y` path of `G`. Weights are ignored.
pub fn greedy_dr_spanner(g: &Multigraph, d: usize, r: usize) -> Result<SpannerResult> {
    if d == 0 {
        return Err(invalid("d must be at least 1"));
    }
    if r < d {
        return Err(invalid(format!("r = {r} must be at least d = {d}")));
    }
    let params = SpannerParams::new(g.n(), 1).with_contract(d, r);
    let full = SubgraphView::full(g);
    let mut h = SubgraphView::empty(g);
    let mut result = SpannerResult::new(Algorithm::GreedyDr, params);
    for x in 0..g.n() {
        let in_g = hop_distances_from(&full, x, d, &[])?;
        let mut in_h = hop_distances_from(&h, x, r, &[])?;
        for y in x + 1..g.n() {
            if in_g[y] != d || in_h[y] != UNREACHED {
                continue;
            }
            let path = shortest_path(&full, x, y, d, &[])?.expect("y is at distance d");
            if d == 2 {
                debug_assert!(has_distant_half(&h, &path, r / 2));
            }
            add_path(&mut h, &mut result, path);
            in_h = hop_distances_from(&h, x, r, &[])?;
        }
    }
    Ok(result.finish(&h))
}

/// For a 2-path added at threshold `2k`, one of its halves is more than `k`
/// apart before the addition.
pub(crate) fn has_distant_half(h: &SubgraphView<'_>, path: &PathSeq, k: usize) -> bool {
    let v = path.vertices();
    let near = |a, b| hop_distance(h, a, b, k, &[]).map(|d| d.is_some()).unwrap_or(true);
    !(near(v[0], v[1]) && near(v[1], v[2]))
}

/// Greedy over an explicit path collection: keep `P` iff its endpoints are
/// more than `r` apart in the union of the kept paths.
pub fn greedy_path_collection_spanner(host: &Multigraph, coll: &PathCollection, r: usize) -> Result<SpannerResult> {
    coll.validate()?;
    if coll.n != host.n() {
        return Err(invalid(format!(
            "collection is over {} vertices, host has {}",
            coll.n,
            host.n()
        )));
    }
    for p in &coll.paths {
        for &e in p.edges() {
            host.check_edge(e)?;
        }
        // re-derive to make sure the recorded walk really follows host edges
        if PathSeq::from_edges(host, p.source(), p.edges())?.vertices() != p.vertices() {
            return Err(invalid("path vertices disagree with its host edges"));
        }
    }
    let d = coll.path_length().unwrap_or(1);
    let params = SpannerParams::new(host.n(), 1).with_contract(d, r.max(d));
    let mut h = SubgraphView::empty(host);
    let mut result = SpannerResult::new(Algorithm::PathCollection, params);
    for p in &coll.paths {
        if hop_distance(&h, p.source(), p.target(), r, &[])?.is_none() {
            add_path(&mut h, &mut result, p.clone());
        }
    }
    Ok(result.finish(&h))
}

/// Checks that every round is a matching of valid host edges.
pub fn validate_matchings(g: &Multigraph, matchings: &[Vec<EdgeId>]) -> Result<()> {
    let mut covered = vec![usize::MAX; g.n()];
    for (round, m) in matchings.iter().enumerate() {
        for &e in m {
            g.check_edge(e)?;
            let edge = g.edge(e);
            for v in [edge.u, edge.v] {
                if covered[v] == round {
                    return Err(SpannerError::NotMatching { round, vertex: v });
                }
                covered[v] = round;
            }
        }
    }
    Ok(())
}

/// Splits the edges into matchings by first fit in id order.
pub fn greedy_matchings(g: &Multigraph) -> Vec<Vec<EdgeId>> {
    let mut rounds: Vec<Vec<EdgeId>> = Vec::new();
    let mut used: Vec<Vec<bool>> = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let slot = used.iter().position(|cov| !cov[edge.u] && !cov[edge.v]);
        let i = slot.unwrap_or_else(|| {
            rounds.push(Vec::new());
            used.push(vec![false; g.n()]);
            rounds.len() - 1
        });
        used[i][edge.u] = true;
        used[i][edge.v] = true;
        rounds[i].push(e);
    }
    rounds
}

/// Parallel greedy `1 → 2k−1`: every edge of a round is tested against the
/// spanner as it stood before the round; passing edges are added together.
pub fn parallel_greedy_spanner(g: &Multigraph, k: usize, matchings: &[Vec<EdgeId>]) -> Result<SpannerResult> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    validate_matchings(g, matchings)?;
    let params = SpannerParams::new(g.n(), k);
    let stretch = 2 * k - 1;
    let mut h = SubgraphView::empty(g);
    let mut result = SpannerResult::new(Algorithm::ParallelGreedy, params);
    for (round, m) in matchings.iter().enumerate() {
        let mut accepted = Vec::new();
        for &e in m {
            let edge = *g.edge(e);
            if hop_distance(&h, edge.u, edge.v, stretch, &[])?.is_none() {
                let lu = cluster_level(&h, edge.u, &params)?.level;
                let lv = cluster_level(&h, edge.v, &params)?.level;
                let head = if (lu, edge.u) <= (lv, edge.v) { edge.u } else { edge.v };
                accepted.push((e, head));
            }
        }
        for (e, head) in accepted {
            h.insert(e);
            result.added_paths.push(PathSeq::from_edges(g, g.edge(e).u, &[e])?);
            result.boosts.push(Boost { edge: e, head, round });
        }
    }
    Ok(result.finish(&h))
}

/// In-degree of every vertex under the boost orientation.
pub fn boost_in_degrees(n: usize, boosts: &[Boost]) -> Vec<usize> {
    let mut deg = vec![0; n];
    for b in boosts {
        deg[b.head] += 1;
    }
    deg
}

/// `⌈√k⌉`, computed in integers.
pub fn ceil_sqrt(k: usize) -> usize {
    let mut s = (k as f64).sqrt() as usize;
    while s * s > k {
        s -= 1;
    }
    while s * s < k {
        s += 1;
    }
    s
}

/// The `(d, r)` contract of the `⌈√k⌉` greedy: `d = ⌈√k⌉` and
/// `r = 4⌈√k⌉² + 2(2⌈√k⌉−1)d`.
pub fn sqrt_k_contract(k: usize) -> (usize, usize) {
    let d = ceil_sqrt(k);
    (d, 4 * d * d + 2 * (2 * d - 1) * d)
}

pub fn sqrt_k_spanner(g: &Multigraph, k: usize) -> Result<SpannerResult> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let (d, r) = sqrt_k_contract(k);
    let mut result = greedy_dr_spanner(g, d, r)?;
    result.algorithm = Algorithm::SqrtK;
    result.params = SpannerParams::new(g.n(), k).with_contract(d, r);
    Ok(result)
}

pub(crate) fn merge(
    algorithm: Algorithm,
    params: SpannerParams,
    parts: impl IntoIterator<Item = SpannerResult>,
) -> SpannerResult {
    let mut edges = BTreeSet::new();
    let mut result = SpannerResult::new(algorithm, params);
    for part in parts {
        edges.extend(part.edges);
        result.added_paths.extend(part.added_paths);
    }
    result.edges = edges.into_iter().collect();
    result
}

/// Union of the greedy `1 → 2k−1` and `2 → 2k` spanners, a `(k, k−1)`-spanner.
pub fn union_hybrid_spanner(g: &Multigraph, k: usize) -> Result<SpannerResult> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let single = greedy_dr_spanner(g, 1, 2 * k - 1)?;
    let double = greedy_dr_spanner(g, 2, 2 * k)?;
    Ok(merge(Algorithm::UnionHybrid, SpannerParams::new(g.n(), k), [single, double]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_diameter_gives_empty_result() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(greedy_dr_spanner(&g, 2, 4).unwrap().edges.is_empty());
        assert!(sqrt_k_spanner(&g, 4).unwrap().edges.is_empty());
    }

    #[test]
    fn c5_keeps_every_edge_at_stretch_three() {
        let g = cycle(5);
        let res = greedy_dr_spanner(&g, 1, 3).unwrap();
        assert_eq!(res.edges, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn sqrt_k_contract_values() {
        assert_eq!(sqrt_k_contract(4), (2, 28));
        assert_eq!(sqrt_k_contract(1), (1, 6));
        assert_eq!(sqrt_k_contract(9), (3, 66));
        assert_eq!(sqrt_k_contract(10), (4, 4 * 16 + 2 * 7 * 4));
        for k in 1..200 {
            let s = ceil_sqrt(k);
            assert!(s * s >= k && (s - 1) * (s - 1) < k);
        }
    }

    #[test]
    fn sqrt_k_one_on_triangle_keeps_two_edges() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(sqrt_k_spanner(&g, 1).unwrap().edge_count(), 2);
    }

    #[test]
    fn repeated_path_is_rejected() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p = PathSeq::from_vertices(&g, &[0, 1, 2]).unwrap();
        let coll = PathCollection::new(3, vec![p.clone(), p]).unwrap();
        let res = greedy_path_collection_spanner(&g, &coll, 4).unwrap();
        assert_eq!(res.added_paths.len(), 1);
    }

    #[test]
    fn mixed_lengths_rejected() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let a = PathSeq::from_vertices(&g, &[0, 1, 2]).unwrap();
        let b = PathSeq::from_vertices(&g, &[0, 1]).unwrap();
        assert!(PathCollection::new(3, vec![a, b]).is_err());
    }

    #[test]
    fn matchings_are_validated() {
        let g = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let err = parallel_greedy_spanner(&g, 2, &[vec![0, 1]]).unwrap_err();
        assert_eq!(err, SpannerError::NotMatching { round: 0, vertex: 1 });
        assert!(parallel_greedy_spanner(&g, 2, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn single_edge_rounds() {
        let g = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        let once = parallel_greedy_spanner(&g, 2, &[vec![0]]).unwrap();
        assert_eq!(once.edges, vec![0]);
        let twice = parallel_greedy_spanner(&g, 2, &[vec![0], vec![0]]).unwrap();
        assert_eq!(twice.added_paths.len(), 1);
    }

    #[test]
    fn first_fit_matchings_cover_all_edges() {
        let g = cycle(5);
        let rounds = greedy_matchings(&g);
        validate_matchings(&g, &rounds).unwrap();
        assert_eq!(rounds.iter().map(Vec::len).sum::<usize>(), 5);
        assert_eq!(rounds.len(), 3);
    }

    #[test]
    fn union_on_tree_keeps_everything() {
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        for k in 1..4 {
            assert_eq!(union_hybrid_spanner(&g, k).unwrap().edges, vec![0, 1, 2, 3, 4]);
        }
    }
}
